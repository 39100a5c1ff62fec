//! Restricted occupancy coefficients `c(M)`: the coefficient of
//! `x_1^{M_0-M_1} x_2^{M_1-M_2} ... x_{r+1}^{M_r}` in the product of the
//! characters of the tensor factors.
//!
//! Two interchangeable backends compute them:
//!
//! * [`Backend::Dp`] counts nested box assignments site by site. At site
//!   `alpha` with `2s_alpha` boxes the local column profile
//!   `2s_alpha >= n^(1) >= ... >= n^(r) >= 0` is chosen, and level `a`
//!   collects `M_a = sum_alpha n^(a)_alpha`. For superalgebras the levels
//!   attached to odd variables may drop by at most one box per site.
//! * [`Backend::Poly`] expands the product of characters once and reads
//!   coefficients off the polynomial.
//!
//! Both treat arguments outside the standard region by zero-extension: any
//! negative implied exponent yields zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{exponents_of, MVector, SuperMVector};
use crate::scalar::Scalar;
use crate::sympoly::{hook_complete, SparsePoly};

/// The list `(2s_1, ..., 2s_L)` of tensor factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinConfig {
    two_s: Vec<u32>,
}

impl SpinConfig {
    pub fn new(two_s: Vec<u32>) -> Result<Self> {
        if two_s.is_empty() {
            return Err(Error::InvalidSpins("need at least one factor".into()));
        }
        if two_s.contains(&0) {
            return Err(Error::InvalidSpins("every 2s must be positive".into()));
        }
        Ok(SpinConfig { two_s })
    }

    /// `L` copies of spin `s`.
    pub fn uniform(two_s: u32, sites: usize) -> Result<Self> {
        Self::new(vec![two_s; sites])
    }

    pub fn two_s(&self) -> &[u32] {
        &self.two_s
    }

    pub fn sites(&self) -> usize {
        self.two_s.len()
    }

    pub fn is_uniform(&self) -> bool {
        self.two_s.windows(2).all(|w| w[0] == w[1])
    }

    /// `2|s| = sum_alpha 2s_alpha`, which is `M_0`.
    pub fn total_degree(&self) -> u64 {
        self.two_s.iter().map(|&d| d as u64).sum()
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.two_s.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Nested-occupancy dynamic programme.
    #[default]
    Dp,
    /// Coefficient extraction from the expanded product of characters.
    Poly,
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Backend::Dp),
            "poly" => Ok(Backend::Poly),
            other => Err(Error::Parse(format!("unknown backend {other:?}"))),
        }
    }
}

/// Occupancy evaluator for a fixed algebra and list of tensor factors.
///
/// The variables are split into `m` even (`x`) and `n` odd (`y`) ones; an
/// ordinary `A_r` uses `m = r + 1`, `n = 0`. Caches are filled lazily and are
/// safe to share between threads.
pub struct Occupancy<C> {
    degrees: Vec<u32>,
    m: usize,
    n: usize,
    backend: Backend,
    profiles: HashMap<u32, Vec<Vec<i64>>>,
    power: OnceLock<SparsePoly<C>>,
    memo: Mutex<HashMap<(usize, Vec<i64>), C>>,
}

impl<C: Scalar> Occupancy<C> {
    /// Tensor product of symmetric powers of `A_r`.
    pub fn ordinary(spins: &SpinConfig, r: usize, backend: Backend) -> Self {
        Self::with_layout(spins.two_s().to_vec(), r + 1, 0, backend)
    }

    /// `L`-th power of the `(2s)` representation of `sl(m|n)`.
    pub fn superalgebra(two_s: u32, sites: usize, m: usize, n: usize, backend: Backend) -> Self {
        Self::with_layout(vec![two_s; sites], m, n, backend)
    }

    /// General layout: one factor of degree `d` per entry of `degrees`
    /// (zero-degree factors are allowed and contribute `1`).
    pub fn with_layout(degrees: Vec<u32>, m: usize, n: usize, backend: Backend) -> Self {
        assert!(m + n >= 1, "need at least one variable");
        let mut profiles = HashMap::new();
        for &d in &degrees {
            profiles.entry(d).or_insert_with(|| local_profiles(d, m, n));
        }
        Occupancy {
            degrees,
            m,
            n,
            backend,
            profiles,
            power: OnceLock::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Number of occupancy arguments, `m + n - 1`.
    pub fn rank(&self) -> usize {
        self.m + self.n - 1
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).sum()
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// `c(M)` with the configured backend.
    pub fn coefficient(&self, entries: &[i64]) -> C {
        self.coefficient_with(self.backend, entries)
    }

    pub fn coefficient_with(&self, backend: Backend, entries: &[i64]) -> C {
        assert_eq!(entries.len(), self.rank(), "wrong number of occupancy arguments");
        let exps = exponents_of(entries, self.total_degree());
        if exps.iter().any(|&e| e < 0) {
            return C::zero();
        }
        // odd variables carry at most one box per site
        if exps[self.m..].iter().any(|&e| e > self.degrees.len() as i64) {
            return C::zero();
        }
        match backend {
            Backend::Poly => self.power().coefficient(&exps),
            Backend::Dp => self.dp(0, entries.to_vec()),
        }
    }

    /// The expanded product of characters (built on first use).
    pub fn power(&self) -> &SparsePoly<C> {
        self.power.get_or_init(|| {
            let nv = self.m + self.n;
            let mut by_degree: BTreeMap<u32, usize> = BTreeMap::new();
            for &d in &self.degrees {
                *by_degree.entry(d).or_default() += 1;
            }
            let mut acc = SparsePoly::one(nv);
            for (d, k) in by_degree {
                let f: SparsePoly<C> = hook_complete(d, self.m, self.n);
                acc = &acc * &f.pow(k as u32);
            }
            acc
        })
    }

    fn dp(&self, site: usize, residual: Vec<i64>) -> C {
        if site == self.degrees.len() {
            return if residual.iter().all(|&v| v == 0) { C::one() } else { C::zero() };
        }
        let capacity: i64 = self.degrees[site..].iter().map(|&d| d as i64).sum();
        if residual.iter().any(|&v| v < 0 || v > capacity) {
            return C::zero();
        }
        let key = (site, residual);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let (_, residual) = &key;
        let mut acc = C::zero();
        for p in &self.profiles[&self.degrees[site]] {
            if p.iter().zip(residual).any(|(a, b)| a > b) {
                continue;
            }
            let next = residual.iter().zip(p).map(|(a, b)| a - b).collect();
            acc = acc + self.dp(site + 1, next);
        }
        self.memo.lock().unwrap().insert(key, acc.clone());
        acc
    }
}

/// Local column profiles `(n^(1), ..., n^(m+n-1))` of a single site holding
/// `d` boxes. Label `a` (1-based) receives `n^(a-1) - n^(a)` boxes; labels
/// beyond `m` receive at most one.
fn local_profiles(d: u32, m: usize, n: usize) -> Vec<Vec<i64>> {
    let k = m + n - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, m: usize, prev: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let label = cur.len() + 1;
        if cur.len() == k {
            // last label takes the remaining `prev` boxes
            if label > m && prev > 1 {
                return;
            }
            out.push(cur.clone());
            return;
        }
        let lo = if label > m { (prev - 1).max(0) } else { 0 };
        for v in lo..=prev {
            cur.push(v);
            rec(k, m, v, cur, out);
            cur.pop();
        }
    }
    rec(k, m, d as i64, &mut cur, &mut out);
    out
}

/// `c_{s,L}(M)` (or its mixed-spin version) for `A_r`, exact, via the DP.
pub fn occupancy_coefficient(mv: &MVector, spins: &SpinConfig, r: usize) -> BigInt {
    assert_eq!(mv.total(), spins.total_degree() as i64, "M_0 must equal 2|s|");
    Occupancy::<BigInt>::ordinary(spins, r, Backend::Dp).coefficient(mv.entries())
}

/// Coefficient of `prod x_i^{M_{i-1}-M_i} prod y_l^{M_{m+l-1}-M_{m+l}}` in
/// `[HS_(2s)(x; y)]^L`.
pub fn super_occupancy_coefficient(mv: &SuperMVector, two_s: u32, sites: usize) -> BigInt {
    let (m, n) = mv.hook();
    assert_eq!(mv.total(), two_s as i64 * sites as i64, "M_0 must equal 2sL");
    Occupancy::<BigInt>::superalgebra(two_s, sites, m, n, Backend::Dp).coefficient(mv.entries())
}

/// Nonzero coefficients over the (standard or full) lattice of `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct OccupancyTable {
    pub rank: usize,
    pub spins: SpinConfig,
    pub entries: BTreeMap<Vec<i64>, BigInt>,
}

/// Every `M` with nonzero `c(M)`; restricted to standard vectors when
/// `filter_standard` is set. Keys iterate in lexicographic order.
pub fn occupancy_table(spins: &SpinConfig, r: usize, filter_standard: bool, backend: Backend) -> OccupancyTable {
    let occ = Occupancy::<BigInt>::ordinary(spins, r, backend);
    let total = spins.total_degree() as i64;
    let mut entries = BTreeMap::new();
    if filter_standard {
        for mv in MVector::all_standard(r, total) {
            let c = occ.coefficient(mv.entries());
            if c != BigInt::from(0) {
                entries.insert(mv.entries().to_vec(), c);
            }
        }
    } else {
        for (e, c) in occ.power().terms() {
            let exps: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            let (entries_m, _) = crate::partitions::entries_from_exponents(&exps);
            let c = match backend {
                Backend::Poly => c.clone(),
                Backend::Dp => occ.coefficient(&entries_m),
            };
            entries.insert(entries_m, c);
        }
    }
    OccupancyTable { rank: r, spins: spins.clone(), entries }
}

/// One failed identity `c(M) = c(sigma_i(M))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryViolation {
    pub m: Vec<i64>,
    pub transposition: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymmetryReport {
    pub checked: usize,
    pub violations: Vec<SymmetryViolation>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The adjacent transposition of rows `i` and `i + 1` (1-based, `i = 1..r`)
/// acting on `M`: `M_i -> M_{i-1} + M_{i+1} - M_i`, with `M_0 = 2|s|`,
/// `M_{r+1} = 0`.
pub fn adjacent_transposition(entries: &[i64], total: i64, i: usize) -> Vec<i64> {
    let r = entries.len();
    let get = |j: usize| -> i64 {
        if j == 0 {
            total
        } else if j == r + 1 {
            0
        } else {
            entries[j - 1]
        }
    };
    let mut out = entries.to_vec();
    out[i - 1] = get(i - 1) + get(i + 1) - get(i);
    out
}

/// Checks `c(M) = c(sigma_i(M))` for every standard `M` and every adjacent
/// transposition `sigma_i`, `i = 1..r`.
pub fn verify_symmetry_identities(spins: &SpinConfig, r: usize) -> SymmetryReport {
    let occ = Occupancy::<BigInt>::ordinary(spins, r, Backend::Dp);
    let total = spins.total_degree() as i64;
    let mut report = SymmetryReport::default();
    for mv in MVector::all_standard(r, total) {
        let lhs = occ.coefficient(mv.entries());
        for i in 1..=r {
            let image = adjacent_transposition(mv.entries(), total, i);
            let rhs = occ.coefficient(&image);
            report.checked += 1;
            if lhs != rhs {
                report.violations.push(SymmetryViolation {
                    m: mv.entries().to_vec(),
                    transposition: i,
                    lhs: lhs.clone(),
                    rhs,
                });
            }
        }
    }
    report
}
