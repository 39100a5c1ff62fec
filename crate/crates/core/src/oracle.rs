//! Independent ground truth for the difference formula: Schur expansions
//! by Vandermonde coefficient extraction and by iterated Pieri insertion,
//! hook-Schur expansions by greedy triangular elimination, Kostka numbers
//! and the hook-length formula.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::occupancy::SpinConfig;
use crate::partitions::{HookPartition, Partition};
use crate::sympoly::{complete_homogeneous, hook_complete, hook_schur, vandermonde, SparsePoly};

/// A symmetric function written in the Schur basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn get(&self, lam: &Partition) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    fn add(&mut self, lam: Partition, c: BigInt) {
        let slot = self.terms.entry(lam).or_default();
        *slot += c;
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }
}

/// Schur coefficients of a symmetric polynomial `p` in `nvars` variables:
/// the coefficient of `x^{lambda + delta}` in `Delta(x) p(x)`.
pub fn schur_coefficients(p: &SparsePoly<BigInt>) -> SchurExpansion {
    let nv = p.nvars();
    let alt = &vandermonde::<BigInt>(nv) * p;
    let mut out = SchurExpansion::default();
    for (e, c) in alt.terms() {
        if e.windows(2).all(|w| w[0] > w[1]) {
            let parts = e.iter().enumerate().map(|(i, &x)| x as usize - (nv - 1 - i)).collect();
            out.add(Partition::new(parts).expect("strictly decreasing exponents"), c.clone());
        }
    }
    out.prune()
}

/// `prod_i h_{2s_i}(x_1..x_{r+1})` expanded in Schur functions via the
/// Vandermonde numerator.
pub fn oracle_vandermonde(spins: &SpinConfig, r: usize) -> SchurExpansion {
    let nv = r + 1;
    let mut by_degree: BTreeMap<u32, u32> = BTreeMap::new();
    for &d in spins.two_s() {
        *by_degree.entry(d).or_default() += 1;
    }
    let p = by_degree.into_iter().fold(SparsePoly::one(nv), |acc, (d, k)| {
        &acc * &complete_homogeneous::<BigInt>(d, nv).pow(k)
    });
    schur_coefficients(&p)
}

/// The same expansion by inserting one row of `2s_i` boxes at a time, keeping
/// diagrams with at most `r + 1` rows.
pub fn oracle_pieri(spins: &SpinConfig, r: usize) -> SchurExpansion {
    let mut cur = SchurExpansion::default();
    cur.add(Partition::empty(), BigInt::one());
    for &d in spins.two_s() {
        let mut next = SchurExpansion::default();
        for (lam, c) in &cur.terms {
            for nu in lam.add_horizontal_strips(d as usize, r + 1) {
                next.add(nu, c.clone());
            }
        }
        cur = next;
    }
    cur.prune()
}

/// Order used to pick leading terms of hook-Schur functions: total degree in
/// the first `m` variables, then lexicographic.
fn hook_order(m: usize, a: &[u32], b: &[u32]) -> Ordering {
    let xa: u32 = a[..m].iter().sum();
    let xb: u32 = b[..m].iter().sum();
    xa.cmp(&xb).then_with(|| a.cmp(b))
}

fn hook_leading(p: &SparsePoly<BigInt>, m: usize) -> Option<(Vec<u32>, BigInt)> {
    p.terms()
        .max_by(|a, b| hook_order(m, a.0, b.0))
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// Reads the diagram whose hook-Schur function has leading monomial
/// `x^{lambda_1..lambda_m} y^{tail'}`.
fn decode_leading(e: &[u32], m: usize, n: usize) -> Option<HookPartition> {
    let head: Vec<usize> = e[..m].iter().map(|&x| x as usize).collect();
    let cols: Vec<usize> = e[m..].iter().map(|&x| x as usize).collect();
    let cols = Partition::new(cols).ok()?;
    let tail = cols.conjugate();
    if head.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    if m > 0 && tail.part(0) > head[m - 1] {
        return None;
    }
    if m == 0 && !head.is_empty() {
        return None;
    }
    let mut parts = head;
    parts.extend_from_slice(tail.parts());
    HookPartition::new(Partition::new(parts).ok()?, m, n).ok()
}

/// `[HS_(2s)]^L` over `sl(m|n)` expanded in hook-Schur functions.
///
/// Repeatedly takes the leading monomial of the residual, decodes the
/// diagram it belongs to and subtracts that multiple of its hook-Schur
/// function. Any step that does not match this triangular structure is
/// reported as [`Error::NonTerminating`].
pub fn oracle_hook_schur(two_s: u32, sites: usize, m: usize, n: usize) -> Result<BTreeMap<HookPartition, BigInt>> {
    let p = hook_complete::<BigInt>(two_s, m, n).pow(sites as u32);
    hook_schur_coefficients(p, m, n)
}

/// Hook-Schur coefficients of a supersymmetric polynomial in `m + n`
/// variables.
pub fn hook_schur_coefficients(mut p: SparsePoly<BigInt>, m: usize, n: usize) -> Result<BTreeMap<HookPartition, BigInt>> {
    let mut out = BTreeMap::new();
    let mut last: Option<Vec<u32>> = None;
    let mut cache: HashMap<HookPartition, SparsePoly<BigInt>> = HashMap::new();
    while let Some((e, c)) = hook_leading(&p, m) {
        if let Some(prev) = &last {
            if hook_order(m, &e, prev) != Ordering::Less {
                return Err(Error::NonTerminating(format!("leading term {e:?} did not decrease")));
            }
        }
        let lam = decode_leading(&e, m, n)
            .ok_or_else(|| Error::NonTerminating(format!("monomial {e:?} is not a hook leading term")))?;
        let hs = cache.entry(lam.clone()).or_insert_with(|| hook_schur(&lam));
        match hook_leading(hs, m) {
            Some((le, lc)) if le == e && lc.is_one() => {}
            other => {
                return Err(Error::NonTerminating(format!(
                    "HS_{lam} has leading term {other:?}, expected {e:?}"
                )))
            }
        }
        p = &p - &hs.scale(&c);
        out.insert(lam, c);
        last = Some(e);
    }
    Ok(out)
}

/// `[HS_(2s)]^L` over `sl(m|1)` restricted to `sl(m)`: for each `y`-degree,
/// the Schur expansion of the `y`-coefficient. Keys are `(charge, lambda)`.
pub fn oracle_y_graded(two_s: u32, sites: usize, m: usize) -> BTreeMap<(usize, Partition), BigInt> {
    let p = hook_complete::<BigInt>(two_s, m, 1).pow(sites as u32);
    let mut slices: BTreeMap<usize, SparsePoly<BigInt>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let slice = slices.entry(e[m] as usize).or_insert_with(|| SparsePoly::zero(m));
        slice.add_term(e[..m].to_vec(), c.clone());
    }
    let mut out = BTreeMap::new();
    for (q, slice) in slices {
        for (lam, c) in schur_coefficients(&slice).terms {
            out.insert((q, lam), c);
        }
    }
    out
}

/// Number of semistandard tableaux of shape `nu` and content `lam`, by
/// peeling off the horizontal strip holding the largest entry.
pub fn kostka(nu: &Partition, lam: &Partition) -> BigInt {
    if nu.size() != lam.size() {
        return BigInt::zero();
    }
    fn rec(nu: &Partition, content: &[usize], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
        let k = content.len();
        if k == 0 {
            return if nu.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        if nu.len() > k {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(nu.clone(), k)) {
            return v.clone();
        }
        let strip = content[k - 1];
        let rest = nu.size() - strip;
        let mut acc = BigInt::zero();
        for inner in nu.remove_horizontal_strips(&Partition::empty()) {
            if inner.size() == rest {
                acc += rec(&inner, &content[..k - 1], memo);
            }
        }
        memo.insert((nu.clone(), k), acc.clone());
        acc
    }
    rec(nu, lam.parts(), &mut HashMap::new())
}

/// `L! / prod hooks`, the number of standard Young tableaux of shape `lam`.
pub fn hook_length_dimension(lam: &Partition) -> BigInt {
    let n = lam.size();
    let num: BigInt = (1..=n).map(BigInt::from).product();
    let den: BigInt = lam.hook_lengths().into_iter().flatten().map(BigInt::from).product();
    num / den
}

/// Number of semistandard tableaux of shape `lam` with entries `1..=nvars`,
/// i.e. the dimension of the `A_{nvars-1}` irreducible.
pub fn weyl_dimension(lam: &Partition, nvars: usize) -> BigInt {
    if lam.len() > nvars {
        return BigInt::zero();
    }
    // prod_{i<j} (lam_i - lam_j + j - i) / (j - i)
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..nvars {
        for j in i + 1..nvars {
            num *= BigInt::from(lam.part(i) + j - lam.part(j) - i);
            den *= BigInt::from(j - i);
        }
    }
    num / den
}
