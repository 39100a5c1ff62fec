//! The difference formula: multiplicities as shift operators applied to
//! occupancy coefficients, `mu = D_R c(M)`.
//!
//! Covers the full algebra `A_r` (uniform or mixed spins), regular
//! subalgebras of `A_r`, and the `sl(m|n)` analogues together with their
//! subalgebras.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::occupancy::{Backend, Occupancy, SpinConfig};
use crate::partitions::{m_from_lambda, super_m_from_lambda, HookPartition, MVector, Partition};
use crate::scalar::Scalar;
use crate::weyl::{
    weyl_denominator_ar, weyl_denominator_subalgebra, weyl_denominator_super,
    weyl_denominator_super_subalgebra, SignedExpansion, SubalgebraSpec, SuperRootSubset,
};

/// `sum_k a_k f(M - beta_k)`. `f` must implement zero-extension.
pub fn apply_shift<C: Scalar, F: Fn(&[i64]) -> C>(exp: &SignedExpansion<C>, f: F, m: &[i64]) -> C {
    assert_eq!(exp.nvars(), m.len(), "shift operator and argument disagree in rank");
    let mut arg = vec![0i64; m.len()];
    exp.terms().iter().fold(C::zero(), |acc, (a, shift)| {
        for (i, slot) in arg.iter_mut().enumerate() {
            *slot = m[i] - shift[i] as i64;
        }
        acc + a.clone() * f(&arg)
    })
}

/// Number of shift-operator terms touched for a given `M` (those whose
/// argument stays in the nonnegative orthant).
fn live_terms<C: Scalar>(exp: &SignedExpansion<C>, m: &[i64]) -> usize {
    exp.terms()
        .iter()
        .filter(|(_, s)| s.iter().zip(m).all(|(&b, &x)| x >= b as i64))
        .count()
}

fn check_size(lam: &Partition, total: u64) -> Result<()> {
    if lam.size() as u64 != total {
        return Err(Error::SizeMismatch { expected: total, found: lam.size() as u64 });
    }
    Ok(())
}

/// Multiplicities in `Sym^{2s_1} x ... x Sym^{2s_L}` of `A_r`, sharing one
/// occupancy cache across queries.
pub struct Multiplicities {
    r: usize,
    spins: SpinConfig,
    occupancy: Occupancy<BigInt>,
    denominator: SignedExpansion<BigInt>,
}

impl Multiplicities {
    pub fn new(spins: &SpinConfig, r: usize, backend: Backend) -> Self {
        Multiplicities {
            r,
            spins: spins.clone(),
            occupancy: Occupancy::ordinary(spins, r, backend),
            denominator: weyl_denominator_ar(r),
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn spins(&self) -> &SpinConfig {
        &self.spins
    }

    pub fn occupancy(&self) -> &Occupancy<BigInt> {
        &self.occupancy
    }

    /// `D_R c` at an arbitrary `M`.
    pub fn at(&self, m: &[i64]) -> BigInt {
        apply_shift(&self.denominator, |a| self.occupancy.coefficient(a), m)
    }

    /// `mu_lambda`.
    pub fn get(&self, lam: &Partition) -> Result<BigInt> {
        Ok(self.at(self.m_of(lam)?.entries()))
    }

    pub fn m_of(&self, lam: &Partition) -> Result<MVector> {
        m_from_lambda(lam, self.r, self.spins.total_degree())
    }

    /// Number of shift terms that reach the lattice for this `lambda`.
    pub fn witness_terms(&self, lam: &Partition) -> Result<usize> {
        Ok(live_terms(&self.denominator, self.m_of(lam)?.entries()))
    }

    /// `mu_lambda` for every diagram with at most `r + 1` rows, keyed by `M`
    /// (lexicographic order).
    pub fn table(&self) -> BTreeMap<Vec<i64>, (Partition, BigInt)> {
        let total = self.spins.total_degree() as usize;
        Partition::all_of_size(total, self.r + 1)
            .into_par_iter()
            .map(|lam| {
                let mv = self.m_of(&lam).expect("diagram fits");
                let mu = self.at(mv.entries());
                (mv.entries().to_vec(), (lam, mu))
            })
            .collect()
    }
}

/// `mu_lambda` for `A_r` by the difference formula.
pub fn multiplicity(lam: &Partition, spins: &SpinConfig, r: usize) -> Result<BigInt> {
    check_size(lam, spins.total_degree())?;
    Multiplicities::new(spins, r, Backend::Dp).get(lam)
}

/// A weight of a regular subalgebra: one diagram per simple component
/// (its rows sit at that component's labels) and a charge per abelian label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubalgebraWeight {
    pub components: Vec<Partition>,
    pub charges: Vec<i64>,
}

impl SubalgebraWeight {
    pub fn new(components: Vec<Partition>, charges: Vec<i64>) -> Self {
        SubalgebraWeight { components, charges }
    }

    /// Reassembles the ambient `(r+1)`-row weight and converts it to `M`.
    pub fn to_m(&self, spec: &SubalgebraSpec, total: u64) -> Result<MVector> {
        if self.components.len() != spec.components().len() {
            return Err(Error::WeightMismatch(format!(
                "{} component diagrams for {} components",
                self.components.len(),
                spec.components().len()
            )));
        }
        if self.charges.len() != spec.abelian_indices().len() {
            return Err(Error::WeightMismatch(format!(
                "{} charges for {} abelian labels",
                self.charges.len(),
                spec.abelian_indices().len()
            )));
        }
        let r = spec.rank();
        let mut rows = vec![0i64; r + 2];
        for (lam, labels) in self.components.iter().zip(spec.components()) {
            if lam.len() > labels.len() {
                return Err(Error::TooManyRows { rows: lam.len(), max: labels.len() });
            }
            for (a, &label) in labels.iter().enumerate() {
                rows[label] = lam.part(a) as i64;
            }
        }
        for (&q, &label) in self.charges.iter().zip(spec.abelian_indices()) {
            if q < 0 {
                return Err(Error::WeightMismatch(format!("negative charge {q}")));
            }
            rows[label] = q;
        }
        let size: i64 = rows.iter().sum();
        if size != total as i64 {
            return Err(Error::SizeMismatch { expected: total, found: size as u64 });
        }
        let mut acc = total as i64;
        let entries = (1..=r)
            .map(|j| {
                acc -= rows[j];
                acc
            })
            .collect();
        Ok(MVector::new(entries, total as i64))
    }
}

/// `mu^h` at a given `M` for the regular subalgebra `spec`.
pub fn branching_at(spec: &SubalgebraSpec, occupancy: &Occupancy<BigInt>, m: &[i64]) -> BigInt {
    let den = weyl_denominator_subalgebra(spec);
    apply_shift(&den, |a| occupancy.coefficient(a), m)
}

/// Branching multiplicity of the subalgebra weight `w`.
pub fn branching_multiplicity(
    w: &SubalgebraWeight,
    spec: &SubalgebraSpec,
    spins: &SpinConfig,
) -> Result<BigInt> {
    let mv = w.to_m(spec, spins.total_degree())?;
    let occ = Occupancy::<BigInt>::ordinary(spins, spec.rank(), Backend::Dp);
    Ok(branching_at(spec, &occ, mv.entries()))
}

/// Branching multiplicities of every subalgebra highest weight, keyed by
/// ambient `M` (lexicographic order). Zero values are dropped.
pub fn branching_table(spec: &SubalgebraSpec, spins: &SpinConfig, backend: Backend) -> BTreeMap<Vec<i64>, BigInt> {
    let occ = Occupancy::<BigInt>::ordinary(spins, spec.rank(), backend);
    let den = weyl_denominator_subalgebra(spec);
    MVector::all_standard(spec.rank(), spins.total_degree() as i64)
        .into_par_iter()
        .filter(|mv| spec.is_dominant(&mv.exponents()))
        .map(|mv| (mv.entries().to_vec(), apply_shift(&den, |a| occ.coefficient(a), mv.entries())))
        .filter(|(_, mu)| !mu.is_zero())
        .collect()
}

/// Super multiplicities for `[HS_(2s)]^L` over `sl(m|n)`, sharing one
/// occupancy cache. The shift operator is truncated at `M_0 = 2sL` in every
/// variable, which is exact for all standard `M`.
pub struct SuperMultiplicities {
    m: usize,
    n: usize,
    two_s: u32,
    sites: usize,
    occupancy: Occupancy<BigInt>,
    denominator: SignedExpansion<BigInt>,
}

impl SuperMultiplicities {
    pub fn new(m: usize, n: usize, two_s: u32, sites: usize, backend: Backend) -> Self {
        let total = two_s as i64 * sites as i64;
        let denominator =
            weyl_denominator_super(m, n, &vec![total; m + n - 1]).expect("nonnegative bound");
        SuperMultiplicities {
            m,
            n,
            two_s,
            sites,
            occupancy: Occupancy::superalgebra(two_s, sites, m, n, backend),
            denominator,
        }
    }

    pub fn total(&self) -> u64 {
        self.two_s as u64 * self.sites as u64
    }

    pub fn occupancy(&self) -> &Occupancy<BigInt> {
        &self.occupancy
    }

    pub fn at(&self, m: &[i64]) -> BigInt {
        apply_shift(&self.denominator, |a| self.occupancy.coefficient(a), m)
    }

    pub fn get(&self, lam: &HookPartition) -> Result<BigInt> {
        if lam.hook() != (self.m, self.n) {
            return Err(Error::NotInHook { shape: lam.shape().to_string(), m: self.m, n: self.n });
        }
        check_size(lam.shape(), self.total())?;
        Ok(self.at(super_m_from_lambda(lam, self.total())?.entries()))
    }

    /// Shift-operator terms whose argument stays in the nonnegative orthant.
    pub fn witness_terms(&self, m: &[i64]) -> usize {
        live_terms(&self.denominator, m)
    }

    /// Values for every diagram of size `2sL` in the hook, keyed by `M`.
    pub fn table(&self) -> BTreeMap<Vec<i64>, (HookPartition, BigInt)> {
        let total = self.total();
        Partition::all_in_hook(total as usize, self.m, self.n)
            .into_par_iter()
            .map(|shape| {
                let lam = HookPartition::new(shape, self.m, self.n).expect("in hook");
                let mv = super_m_from_lambda(&lam, total).expect("in hook");
                let mu = self.at(mv.entries());
                (mv.entries().to_vec(), (lam, mu))
            })
            .collect()
    }
}

/// Conjectured `mu_lambda` for `sl(m|n)`, with the shift operator truncated
/// at the query's own `M`.
pub fn super_multiplicity(lam: &HookPartition, two_s: u32, sites: usize) -> Result<BigInt> {
    let (m, n) = lam.hook();
    let total = two_s as u64 * sites as u64;
    check_size(lam.shape(), total)?;
    let mv = super_m_from_lambda(lam, total)?;
    let den = weyl_denominator_super(m, n, mv.entries())?;
    let occ = Occupancy::<BigInt>::superalgebra(two_s, sites, m, n, Backend::Dp);
    Ok(apply_shift(&den, |a| occ.coefficient(a), mv.entries()))
}

/// Conjectured branching multiplicity for a subalgebra of `sl(m|n)` at the
/// occupancy vector `m_vec`.
pub fn super_branching_multiplicity(
    m_vec: &[i64],
    sub: &SuperRootSubset,
    two_s: u32,
    sites: usize,
) -> Result<BigInt> {
    let (m, n) = sub.shape();
    if m_vec.len() != m + n - 1 {
        return Err(Error::WeightMismatch(format!(
            "expected {} occupancy arguments, got {}",
            m + n - 1,
            m_vec.len()
        )));
    }
    let bound: Vec<i64> = m_vec.iter().map(|&x| x.max(0)).collect();
    let den = weyl_denominator_super_subalgebra(sub, &bound)?;
    let occ = Occupancy::<BigInt>::superalgebra(two_s, sites, m, n, Backend::Dp);
    Ok(apply_shift(&den, |a| occ.coefficient(a), m_vec))
}

/// Super branching multiplicities of every subalgebra highest weight,
/// keyed by `M`. Zero values are dropped.
pub fn super_branching_table(
    sub: &SuperRootSubset,
    two_s: u32,
    sites: usize,
    backend: Backend,
) -> BTreeMap<Vec<i64>, BigInt> {
    let (m, n) = sub.shape();
    let total = two_s as i64 * sites as i64;
    let den: SignedExpansion<BigInt> =
        weyl_denominator_super_subalgebra(sub, &vec![total; m + n - 1]).expect("nonnegative bound");
    let occ = Occupancy::<BigInt>::superalgebra(two_s, sites, m, n, backend);
    MVector::all_standard(m + n - 1, total)
        .into_par_iter()
        .filter(|mv| sub.is_dominant(&mv.exponents()))
        .map(|mv| (mv.entries().to_vec(), apply_shift(&den, |a| occ.coefficient(a), mv.entries())))
        .filter(|(_, mu)| !mu.is_zero())
        .collect()
}

/// `mu^{sl(m)}` inside `[HS_(2s)]^L` of `sl(m|1)` for an `sl(m)` diagram
/// `lam` carrying `y`-charge `charge = M_m`: `binom(L, M_m)` times the
/// multiplicity of `lam` in `(L - M_m)` copies of `Sym^{2s}` and `M_m`
/// copies of `Sym^{2s-1}`.
pub fn sl_m_in_sl_m1_branching(lam: &Partition, m: usize, charge: usize, two_s: u32, sites: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::WeightMismatch("sl(m) needs m >= 1".into()));
    }
    if charge > sites {
        return Ok(BigInt::zero());
    }
    if lam.len() > m {
        return Err(Error::TooManyRows { rows: lam.len(), max: m });
    }
    let mut degrees = vec![two_s; sites - charge];
    degrees.extend(std::iter::repeat_n(two_s - 1, charge));
    degrees.retain(|&d| d > 0);
    let total: u64 = degrees.iter().map(|&d| d as u64).sum();
    check_size(lam, total)?;
    let scale = binomial(BigInt::from(sites), BigInt::from(charge));
    if degrees.is_empty() {
        return Ok(if lam.is_empty() { scale } else { BigInt::zero() });
    }
    let spins = SpinConfig::new(degrees)?;
    Ok(scale * multiplicity(lam, &spins, m - 1)?)
}

/// The super branching formula for `sl(m) ⊂ sl(m|1)` evaluated directly on
/// the `sl(m|1)` occupancy coefficients.
pub fn sl_m_in_sl_m1_by_shift(lam: &Partition, m: usize, charge: usize, two_s: u32, sites: usize) -> Result<BigInt> {
    let total = two_s as u64 * sites as u64;
    if lam.len() > m {
        return Err(Error::TooManyRows { rows: lam.len(), max: m });
    }
    check_size(lam, total.saturating_sub(charge as u64))?;
    let mut acc = total as i64;
    let mut entries = Vec::with_capacity(m);
    for i in 0..m {
        acc -= lam.part(i) as i64;
        entries.push(acc);
    }
    let roots: Vec<(usize, usize)> = (1..m).map(|i| (i, i + 1)).collect();
    let sub = SuperRootSubset::closed(m, 1, roots)?;
    super_branching_multiplicity(&entries, &sub, two_s, sites)
}

/// `prod_i binom(n_i, k_i)`-style helper: `binom(n, k)` for `k` outside
/// `0..=n` is zero.
pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `binom(n, k)` extended to negative `n` by `(-1)^k binom(k - n - 1, k)`;
/// zero for `k < 0`.
pub fn generalized_binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binom(n, k);
    }
    let v = binomial(BigInt::from(k - n - 1), BigInt::from(k));
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `sl(1|1)` closed form `sum_i (-1)^i binom(L, M - i)`.
pub fn sl11_closed_form(sites: usize, m: i64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut sign = BigInt::one();
    for i in 0..=m.max(0) {
        acc += &sign * binom(sites as i64, m - i);
        sign = -sign;
    }
    acc
}

/// `sl(2|1)`, `s = 1/2` closed form
/// `binom(L, M1) binom(M1-1, M2) - binom(L, M1-M2-1) binom(L-M1+M2, M2)`.
pub fn sl21_closed_form(sites: usize, m1: i64, m2: i64) -> BigInt {
    let l = sites as i64;
    generalized_binomial(l, m1) * generalized_binomial(m1 - 1, m2)
        - generalized_binomial(l, m1 - m2 - 1) * generalized_binomial(l - m1 + m2, m2)
}
