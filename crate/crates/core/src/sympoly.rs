//! Sparse multivariate polynomials with exact coefficients, plus the
//! symmetric-function constructions the rest of the crate is built on.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partitions::{HookPartition, Partition};
use crate::scalar::Scalar;

pub type Exponents = Vec<u32>;

/// Map from exponent vector to nonzero coefficient.
///
/// No zero coefficient is ever stored and every key has length `nvars`.
/// Iteration order of the underlying map never influences a result.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<C> {
    nvars: usize,
    terms: HashMap<Exponents, C>,
}

/// Graded-lex comparison: total degree first, then lexicographic.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<C: Scalar> SparsePoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], C::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, coeff: C) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_{i+1}` (0-indexed `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    /// Terms sorted in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: C) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let v = o.get_mut();
                *v = v.clone() + coeff;
                if v.is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Coefficient of the monomial with the given exponents; zero for absent
    /// monomials and for any negative exponent.
    pub fn coefficient(&self, exps: &[i64]) -> C {
        if exps.len() != self.nvars || exps.iter().any(|&e| e < 0 || e > u32::MAX as i64) {
            return C::zero();
        }
        let key: Exponents = exps.iter().map(|&e| e as u32).collect();
        self.terms.get(&key).cloned().unwrap_or_else(C::zero)
    }

    pub fn coefficient_u(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * k.clone())).collect(),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of all coefficients (evaluation at the all-ones point).
    pub fn eval_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Exact division. Fails with `InexactDivision` if the remainder of
    /// leading-term elimination under graded-lex order is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_arity(divisor)?;
        let (de, dc) = match divisor.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::InexactDivision),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let r = rc.clone() % dc.clone();
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let qc = rc / dc.clone();
            let qe: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            for (e, c) in &divisor.terms {
                let ee = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(ee, -(c.clone() * qc.clone()));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Applies a permutation of variables: variable `i` becomes variable
    /// `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] = x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// `true` if invariant under every permutation of the variables in
    /// `range`. Checked by comparing each coefficient with the coefficient of
    /// the sorted exponent vector.
    pub fn is_symmetric_in(&self, range: std::ops::Range<usize>) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s[range.clone()].sort_unstable_by(|a, b| b.cmp(a));
            self.coefficient_u(&s) == *c
        })
    }

    /// Concatenates variables: `self(x) * other(y)` in `nvars + other.nvars`
    /// variables.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars + other.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().chain(eb).copied().collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// One term per line, `coeff * x1^e1 ... xn^en`, descending graded-lex.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (e, c) in self.sorted_terms() {
            let vars = e.iter().enumerate().map(|(i, x)| format!("x{}^{}", i + 1, x)).join(" ");
            if vars.is_empty() {
                writeln!(s, "{c}").unwrap();
            } else {
                writeln!(s, "{c} * {vars}").unwrap();
            }
        }
        s
    }

    fn check_arity(&self, rhs: &Self) -> Result<()> {
        if self.nvars != rhs.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: rhs.nvars });
        }
        Ok(())
    }
}

impl<'a, C: Scalar> Add<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;

    /// Panics on arity mismatch; see [`SparsePoly::try_add`].
    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl<'a, C: Scalar> Sub<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.try_sub(rhs).expect("arity mismatch")
    }
}

impl<'a, C: Scalar> Mul<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl<C: Scalar> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn neg(self) -> SparsePoly<C> {
        self.scale(&-C::one())
    }
}

/// Weak compositions of `total` into `parts` nonnegative entries.
pub(crate) fn weak_compositions(total: u32, parts: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// `h_d(x_1, ..., x_n)`: every monomial of total degree `d`.
pub fn complete_homogeneous<C: Scalar>(d: u32, nvars: usize) -> SparsePoly<C> {
    SparsePoly::from_terms(nvars, weak_compositions(d, nvars).into_iter().map(|e| (e, C::one())))
}

/// `e_d(x_1, ..., x_n)`: squarefree monomials of degree `d`.
pub fn elementary<C: Scalar>(d: u32, nvars: usize) -> SparsePoly<C> {
    SparsePoly::from_terms(
        nvars,
        (0..nvars).combinations(d as usize).map(|idx| {
            let mut e = vec![0; nvars];
            for i in idx {
                e[i] = 1;
            }
            (e, C::one())
        }),
    )
}

/// Orbit sum of `x^lambda` under permutations of the variables.
pub fn monomial_symmetric<C: Scalar>(lam: &Partition, nvars: usize) -> Result<SparsePoly<C>> {
    if lam.len() > nvars {
        return Err(Error::TooManyRows { rows: lam.len(), max: nvars });
    }
    let base: Vec<u32> = lam.padded(nvars).iter().map(|&p| p as u32).collect();
    let mut p = SparsePoly::zero(nvars);
    for e in base.iter().copied().permutations(nvars).unique() {
        p.add_term(e, C::one());
    }
    Ok(p)
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde<C: Scalar>(nvars: usize) -> SparsePoly<C> {
    let mut p = SparsePoly::one(nvars);
    for i in 0..nvars {
        for j in (i + 1)..nvars {
            let f = &SparsePoly::var(nvars, i) - &SparsePoly::var(nvars, j);
            p = &p * &f;
        }
    }
    p
}

/// Skew Schur polynomial `S_{lam/tau}(x_1, ..., x_n)`: the monomial
/// generating function of semistandard tableaux of skew shape `lam/tau`.
///
/// Built by peeling off the horizontal strip occupied by the largest letter.
pub fn skew_schur<C: Scalar>(lam: &Partition, tau: &Partition, nvars: usize) -> Result<SparsePoly<C>> {
    if !lam.contains(tau) {
        return Err(Error::NotContained { inner: tau.to_string(), outer: lam.to_string() });
    }
    let mut memo = HashMap::new();
    Ok(skew_rec(lam, tau, nvars, &mut memo))
}

fn skew_rec<C: Scalar>(
    lam: &Partition,
    tau: &Partition,
    k: usize,
    memo: &mut HashMap<(Partition, usize), SparsePoly<C>>,
) -> SparsePoly<C> {
    if k == 0 {
        return if lam == tau { SparsePoly::one(0) } else { SparsePoly::zero(0) };
    }
    if let Some(p) = memo.get(&(lam.clone(), k)) {
        return p.clone();
    }
    let mut out = SparsePoly::zero(k);
    for nu in lam.remove_horizontal_strips(tau) {
        let inner = skew_rec(&nu, tau, k - 1, memo);
        let strip = (lam.size() - nu.size()) as u32;
        for (e, c) in inner.terms() {
            let mut ne = e.clone();
            ne.push(strip);
            out.add_term(ne, c.clone());
        }
    }
    memo.insert((lam.clone(), k), out.clone());
    out
}

/// Schur polynomial `S_lam(x_1, ..., x_n)` as a sum over semistandard
/// tableaux.
pub fn schur<C: Scalar>(lam: &Partition, nvars: usize) -> Result<SparsePoly<C>> {
    if lam.len() > nvars {
        return Err(Error::TooManyRows { rows: lam.len(), max: nvars });
    }
    skew_schur(lam, &Partition::empty(), nvars)
}

/// Schur polynomial as the bialternant `a_{lam+delta} / a_delta`, by exact
/// division.
pub fn schur_bialternant<C: Scalar>(lam: &Partition, nvars: usize) -> Result<SparsePoly<C>> {
    if lam.len() > nvars {
        return Err(Error::TooManyRows { rows: lam.len(), max: nvars });
    }
    let shifted: Vec<u32> = lam
        .padded(nvars)
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + nvars - 1 - i) as u32)
        .collect();
    let mut num = SparsePoly::zero(nvars);
    for perm in (0..nvars).permutations(nvars) {
        let mut e = vec![0; nvars];
        for (i, &pi) in perm.iter().enumerate() {
            e[pi] = shifted[i];
        }
        num.add_term(e, C::from_signed(permutation_sign(&perm)));
    }
    num.div_exact(&vandermonde(nvars))
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Hook-Schur function `HS_lam(x; y) = sum_{tau ⊆ lam} S_{lam/tau}(x) S_{tau'}(y)`
/// in `m + n` variables, the first `m` being `x`.
pub fn hook_schur<C: Scalar>(lam: &HookPartition) -> SparsePoly<C> {
    let (m, n) = lam.hook();
    let shape = lam.shape();
    let mut out = SparsePoly::zero(m + n);
    for tau in shape.subdiagrams() {
        if tau.part(0) > n {
            continue;
        }
        let xs: SparsePoly<C> = skew_schur(shape, &tau, m).expect("tau is a subdiagram");
        if xs.is_zero() {
            continue;
        }
        let ys: SparsePoly<C> = schur(&tau.conjugate(), n).expect("tau fits n columns");
        let prod = xs.tensor(&ys);
        for (e, c) in prod.terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Character of `Sym^d` of `sl(m|n)`: `sum_k h_{d-k}(x) e_k(y)`.
pub fn hook_complete<C: Scalar>(d: u32, m: usize, n: usize) -> SparsePoly<C> {
    let mut out = SparsePoly::zero(m + n);
    for k in 0..=d.min(n as u32) {
        let part = complete_homogeneous::<C>(d - k, m).tensor(&elementary::<C>(k, n));
        for (e, c) in part.terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}
