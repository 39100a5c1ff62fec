//! Root data for `A_r` and `sl(m|n)`, subalgebras given by subsets of
//! positive roots, and the shift operators built from Weyl denominators.
//!
//! A positive root is stored as a label pair `(i, j)` with `i < j`, meaning
//! `L_i - L_j`. For `sl(m|n)` the labels `1..=m` are the even `L_i` and
//! `m+1..=m+n` are the odd `K_k`. In the simple-root variables
//! `t_c = e^{-alpha_c}` the root `(i, j)` is the monomial
//! `t_i t_{i+1} ... t_{j-1}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sympoly::{permutation_sign, SparsePoly};

pub type Root = (usize, usize);

/// Exponent vector of the root `(i, j)` in `nvars` simple-root variables.
pub fn root_shift(root: Root, nvars: usize) -> Vec<u32> {
    let mut v = vec![0; nvars];
    for c in root.0..root.1 {
        v[c - 1] = 1;
    }
    v
}

/// Parses one root token. `m` is the number of even labels; `K` labels are
/// only accepted when `m` is given.
///
/// Accepted forms: `Li-Lj`, `Li-Kk`, `Kk-Kl` and simple-root sums such as
/// `a2` or `a1+a2+a3` (consecutive indices).
fn parse_root(token: &str, labels: usize, m: Option<usize>) -> Result<Root> {
    let tok: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| Error::InvalidRoot(format!("{token:?}: {why}"));
    let root = if tok.starts_with(['a', 'A']) {
        let idx: Vec<usize> = tok
            .split('+')
            .map(|p| {
                p.strip_prefix(['a', 'A'])
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| bad("expected a simple root such as a1"))
            })
            .collect::<Result<_>>()?;
        if idx.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(bad("simple roots must be consecutive and increasing"));
        }
        if idx[0] == 0 {
            return Err(bad("simple roots are numbered from 1"));
        }
        (idx[0], idx[idx.len() - 1] + 1)
    } else {
        let (a, b) = tok.split_once('-').ok_or_else(|| bad("expected Li-Lj"))?;
        let label = |s: &str| -> Result<usize> {
            let (kind, num) = s.split_at(1.min(s.len()));
            let k: usize = num.parse().map_err(|_| bad("bad index"))?;
            if k == 0 {
                return Err(bad("labels are numbered from 1"));
            }
            match (kind, m) {
                ("L" | "l", Some(m)) if k > m => Err(bad("even label out of range")),
                ("L" | "l", _) => Ok(k),
                ("K" | "k", Some(m)) => Ok(m + k),
                ("K" | "k", None) => Err(bad("odd labels need a superalgebra")),
                _ => Err(bad("expected L or K label")),
            }
        };
        (label(a)?, label(b)?)
    };
    if root.0 >= root.1 {
        return Err(bad("not a positive root"));
    }
    if root.1 > labels {
        return Err(bad("label out of range"));
    }
    Ok(root)
}

fn parse_roots(text: &str, labels: usize, m: Option<usize>) -> Result<Vec<Root>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_root(t, labels, m))
        .collect()
}

/// Connected components (as sorted label lists) of the graph on `1..=labels`
/// whose edges are the given roots.
fn components(labels: usize, roots: &BTreeSet<Root>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=labels).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(i, j) in roots {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 1..=labels {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// A set of positive roots of `A_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubset {
    rank: usize,
    roots: BTreeSet<Root>,
}

impl RootSubset {
    pub fn new<I: IntoIterator<Item = Root>>(rank: usize, roots: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in roots {
            if i == 0 || i >= j || j > rank + 1 {
                return Err(Error::InvalidRoot(format!("L{i}-L{j} is not a positive root of A{rank}")));
            }
            set.insert((i, j));
        }
        Ok(RootSubset { rank, roots: set })
    }

    /// All positive roots.
    pub fn full(rank: usize) -> Self {
        let roots = (1..=rank + 1).tuple_combinations().collect();
        RootSubset { rank, roots }
    }

    /// Comma-separated roots, e.g. `"L1-L3,L3-L4"` or `"a1+a2,a5"`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        Self::new(rank, parse_roots(text, rank + 1, None)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.roots.iter().copied()
    }

    pub fn close(&self) -> SubalgebraSpec {
        close_root_subset(self)
    }
}

/// A regular subalgebra `gl(1)^k + A_{r_1} + ... ` of `A_r`, recorded by the
/// index sets of its simple components and the leftover abelian indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubalgebraSpec {
    rank: usize,
    components: Vec<Vec<usize>>,
    abelian: Vec<usize>,
}

impl SubalgebraSpec {
    /// The whole algebra.
    pub fn full(rank: usize) -> Self {
        close_root_subset(&RootSubset::full(rank))
    }

    /// The Cartan torus `gl(1)^r`.
    pub fn torus(rank: usize) -> Self {
        close_root_subset(&RootSubset { rank, roots: BTreeSet::new() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn abelian_indices(&self) -> &[usize] {
        &self.abelian
    }

    /// `true` if the ambient row lengths `exps` (one per label) are weakly
    /// decreasing inside every simple component.
    pub fn is_dominant(&self, exps: &[i64]) -> bool {
        self.components
            .iter()
            .all(|c| c.windows(2).all(|w| exps[w[0] - 1] >= exps[w[1] - 1]))
    }

    /// The closed set of positive roots.
    pub fn roots(&self) -> Vec<Root> {
        self.components
            .iter()
            .flat_map(|c| c.iter().copied().tuple_combinations())
            .sorted()
            .collect()
    }
}

impl fmt::Display for SubalgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{{{}}}", c.iter().join(",")))
            .collect();
        write!(f, "components [{}]", comps.join(", "))?;
        if !self.abelian.is_empty() {
            write!(f, " abelian {{{}}}", self.abelian.iter().join(","))?;
        }
        Ok(())
    }
}

/// Smallest subalgebra containing the given roots: labels joined by a root
/// lie in one simple component, and every pair inside a component is a root
/// of it.
pub fn close_root_subset(roots: &RootSubset) -> SubalgebraSpec {
    let (components, singles): (Vec<_>, Vec<_>) = components(roots.rank + 1, &roots.roots)
        .into_iter()
        .partition(|c| c.len() >= 2);
    SubalgebraSpec {
        rank: roots.rank,
        components,
        abelian: singles.into_iter().flatten().collect(),
    }
}

/// A signed finite sum `sum_k a_k t^{beta_k}` read as the shift operator
/// `f(M) -> sum_k a_k f(M - beta_k)`.
///
/// Expansions of infinite series carry the per-variable bound they were
/// truncated at; every retained shift lies componentwise within it.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedExpansion<C> {
    nvars: usize,
    terms: Vec<(C, Vec<u32>)>,
    bound: Option<Vec<u32>>,
}

impl<C: Scalar> SignedExpansion<C> {
    /// The identity operator `1`.
    pub fn identity(nvars: usize) -> Self {
        SignedExpansion { nvars, terms: vec![(C::one(), vec![0; nvars])], bound: None }
    }

    /// Collects like shifts, drops zeros and sorts terms by shift.
    fn from_map(nvars: usize, map: HashMap<Vec<u32>, C>, bound: Option<Vec<u32>>) -> Self {
        let mut terms: Vec<(C, Vec<u32>)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (c, e)).collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        SignedExpansion { nvars, terms, bound }
    }

    pub fn from_poly(p: &SparsePoly<C>) -> Self {
        let map = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        Self::from_map(p.nvars(), map, None)
    }

    pub fn to_poly(&self) -> SparsePoly<C> {
        SparsePoly::from_terms(self.nvars, self.terms.iter().map(|(c, e)| (e.clone(), c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(C, Vec<u32>)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn bound(&self) -> Option<&[u32]> {
        self.bound.as_deref()
    }

    /// Sum of all coefficients (the value at `t = 1`).
    pub fn coefficient_sum(&self) -> C {
        self.terms.iter().fold(C::zero(), |acc, (c, _)| acc + c.clone())
    }

    /// Product, discarding shifts outside `bound` when one is given.
    pub fn mul_truncated(&self, other: &Self, bound: Option<&[u32]>) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut map: HashMap<Vec<u32>, C> = HashMap::new();
        for (a, ea) in &self.terms {
            for (b, eb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if let Some(bd) = bound {
                    if e.iter().zip(bd).any(|(x, y)| x > y) {
                        continue;
                    }
                }
                let slot = map.entry(e).or_insert_with(C::zero);
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Self::from_map(self.nvars, map, bound.map(<[u32]>::to_vec))
    }

    /// `1 - t^shift`.
    fn even_factor(nvars: usize, shift: Vec<u32>) -> Self {
        let mut map = HashMap::new();
        map.insert(vec![0; nvars], C::one());
        map.insert(shift, -C::one());
        Self::from_map(nvars, map, None)
    }

    /// `1/(1 + t^shift)` expanded as `sum_k (-1)^k t^{k shift}` up to `bound`.
    fn odd_factor(nvars: usize, shift: &[u32], bound: &[u32]) -> Self {
        let mut map = HashMap::new();
        let mut k = 0u32;
        loop {
            let e: Vec<u32> = shift.iter().map(|&s| s * k).collect();
            if e.iter().zip(bound).any(|(x, y)| x > y) {
                break;
            }
            let sign = if k.is_multiple_of(2) { C::one() } else { -C::one() };
            map.insert(e, sign);
            k += 1;
            if shift.iter().all(|&s| s == 0) {
                break;
            }
        }
        Self::from_map(nvars, map, Some(bound.to_vec()))
    }
}

/// `sum_{w in S_k} sgn(w) t^{rho - w rho}` for the component on the given
/// sorted labels, expressed in `nvars` ambient variables: the exponent of
/// `t_c` is `sum_{a : i_a <= c} (w(a) - a)`.
fn component_denominator<C: Scalar>(labels: &[usize], nvars: usize) -> SignedExpansion<C> {
    let k = labels.len();
    let mut map: HashMap<Vec<u32>, C> = HashMap::new();
    for perm in (0..k).permutations(k) {
        let mut v = vec![0i64; nvars + 2];
        for (a, &w) in perm.iter().enumerate() {
            v[labels[a]] += w as i64 - a as i64;
        }
        let mut shift = Vec::with_capacity(nvars);
        let mut acc = 0i64;
        for &vc in &v[1..=nvars] {
            acc += vc;
            shift.push(u32::try_from(acc).expect("Weyl orbit shifts are nonnegative"));
        }
        let slot = map.entry(shift).or_insert_with(C::zero);
        *slot = slot.clone() + C::from_signed(permutation_sign(&perm));
    }
    SignedExpansion::from_map(nvars, map, None)
}

/// Weyl denominator `prod_{alpha > 0} (1 - t^alpha)` of `A_r`, expanded as the
/// signed sum over the Weyl group (`(r+1)!` terms).
pub fn weyl_denominator_ar<C: Scalar>(r: usize) -> SignedExpansion<C> {
    component_denominator(&(1..=r + 1).collect::<Vec<_>>(), r)
}

/// The same denominator computed as the explicit product over positive roots.
pub fn weyl_denominator_ar_product<C: Scalar>(r: usize) -> SignedExpansion<C> {
    (1..=r + 1).tuple_combinations().fold(SignedExpansion::identity(r), |acc, root| {
        acc.mul_truncated(&SignedExpansion::even_factor(r, root_shift(root, r)), None)
    })
}

/// Product of the Weyl denominators of the simple components of `spec`.
pub fn weyl_denominator_subalgebra<C: Scalar>(spec: &SubalgebraSpec) -> SignedExpansion<C> {
    let r = spec.rank();
    spec.components()
        .iter()
        .fold(SignedExpansion::identity(r), |acc, comp| {
            acc.mul_truncated(&component_denominator(comp, r), None)
        })
}

fn check_bound(bound: &[i64], nvars: usize) -> Result<Vec<u32>> {
    if bound.len() != nvars {
        return Err(Error::InvalidTruncation(format!(
            "expected {nvars} bounds, got {}",
            bound.len()
        )));
    }
    bound
        .iter()
        .map(|&b| {
            u32::try_from(b).map_err(|_| Error::InvalidTruncation(format!("bound {b} is negative")))
        })
        .collect()
}

fn is_odd(root: Root, m: usize) -> bool {
    root.0 <= m && root.1 > m
}

fn super_denominator<C: Scalar>(
    nvars: usize,
    m: usize,
    roots: impl IntoIterator<Item = Root>,
    bound: &[u32],
) -> SignedExpansion<C> {
    let mut acc = SignedExpansion::identity(nvars);
    acc.bound = Some(bound.to_vec());
    for root in roots {
        let shift = root_shift(root, nvars);
        let factor = if is_odd(root, m) {
            SignedExpansion::odd_factor(nvars, &shift, bound)
        } else {
            SignedExpansion::even_factor(nvars, shift)
        };
        acc = acc.mul_truncated(&factor, Some(bound));
    }
    acc
}

/// `prod_{even} (1 - t^alpha) / prod_{odd} (1 + t^alpha)` for `sl(m|n)`,
/// truncated to shifts componentwise at most `bound`.
pub fn weyl_denominator_super<C: Scalar>(m: usize, n: usize, bound: &[i64]) -> Result<SignedExpansion<C>> {
    let nvars = m + n - 1;
    let bound = check_bound(bound, nvars)?;
    let roots = (1..=m + n).tuple_combinations();
    Ok(super_denominator(nvars, m, roots, &bound))
}

/// A set of positive roots of `sl(m|n)`, split into even and odd parts.
///
/// Only subsets closed under addition of roots are accepted. Two positive
/// odd roots never add up to a root, so closure amounts to: `(i, j)` and
/// `(j, k)` present imply `(i, k)` present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperRootSubset {
    m: usize,
    n: usize,
    even: BTreeSet<Root>,
    odd: BTreeSet<Root>,
}

impl SuperRootSubset {
    fn build<I: IntoIterator<Item = Root>>(m: usize, n: usize, roots: I) -> Result<BTreeSet<Root>> {
        let mut set = BTreeSet::new();
        for (i, j) in roots {
            if i == 0 || i >= j || j > m + n {
                return Err(Error::InvalidRoot(format!("({i},{j}) is not a positive root of sl({m}|{n})")));
            }
            set.insert((i, j));
        }
        Ok(set)
    }

    fn split(m: usize, n: usize, set: BTreeSet<Root>) -> Self {
        let (odd, even) = set.into_iter().partition(|&r| is_odd(r, m));
        SuperRootSubset { m, n, even, odd }
    }

    /// Accepts a closed subset; reports the first missing sum otherwise.
    pub fn new<I: IntoIterator<Item = Root>>(m: usize, n: usize, roots: I) -> Result<Self> {
        let set = Self::build(m, n, roots)?;
        for &(i, j) in &set {
            for &(j2, k) in set.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j2, j);
                if !set.contains(&(i, k)) {
                    return Err(Error::NotClosed(format!(
                        "{} + {} = {} is missing",
                        label_pair((i, j), m),
                        label_pair((j, k), m),
                        label_pair((i, k), m)
                    )));
                }
            }
        }
        Ok(Self::split(m, n, set))
    }

    /// The smallest closed subset containing `roots`.
    pub fn closed<I: IntoIterator<Item = Root>>(m: usize, n: usize, roots: I) -> Result<Self> {
        let mut set = Self::build(m, n, roots)?;
        loop {
            let extra: Vec<Root> = set
                .iter()
                .flat_map(|&(i, j)| set.range((j, 0)..(j + 1, 0)).map(move |&(_, k)| (i, k)))
                .filter(|r| !set.contains(r))
                .collect();
            if extra.is_empty() {
                break;
            }
            set.extend(extra);
        }
        Ok(Self::split(m, n, set))
    }

    /// Strict parse of `"Li-Lj,Li-Kk,..."` or simple-root sums.
    pub fn parse(m: usize, n: usize, text: &str) -> Result<Self> {
        Self::new(m, n, parse_roots(text, m + n, Some(m))?)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Labels joined by roots, as sorted label lists (singletons included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: BTreeSet<Root> = self.even.union(&self.odd).copied().collect();
        components(self.m + self.n, &all)
    }

    /// `true` if the exponents `exps` (one per label) restrict to a covariant
    /// highest weight on every component: on a component with even labels
    /// `a_1 < ... < a_p` and odd labels `b_1 < ... < b_q`, the even
    /// exponents form the first `p` rows of a hook diagram and the odd ones
    /// the columns of the part below row `p`.
    pub fn is_dominant(&self, exps: &[i64]) -> bool {
        self.components().iter().all(|comp| {
            if comp.len() < 2 {
                return true;
            }
            let (even, odd): (Vec<i64>, Vec<i64>) = {
                let (e, o): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&l| l <= self.m);
                (e.iter().map(|&l| exps[l - 1]).collect(), o.iter().map(|&l| exps[l - 1]).collect())
            };
            let decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] >= w[1]);
            if !decreasing(&even) || !decreasing(&odd) {
                return false;
            }
            let tail_width = odd.iter().filter(|&&x| x > 0).count() as i64;
            match even.last() {
                Some(&last) => tail_width <= last,
                None => true,
            }
        })
    }

    pub fn even(&self) -> impl Iterator<Item = Root> + '_ {
        self.even.iter().copied()
    }

    pub fn odd(&self) -> impl Iterator<Item = Root> + '_ {
        self.odd.iter().copied()
    }
}

impl fmt::Display for SuperRootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even = self.even.iter().map(|&r| label_pair(r, self.m)).join(",");
        let odd = self.odd.iter().map(|&r| label_pair(r, self.m)).join(",");
        write!(f, "even {{{even}}} odd {{{odd}}}")
    }
}

fn label_pair(root: Root, m: usize) -> String {
    let name = |k: usize| if k <= m { format!("L{k}") } else { format!("K{}", k - m) };
    format!("{}-{}", name(root.0), name(root.1))
}

/// Denominator of a subalgebra of `sl(m|n)` given by its positive roots.
pub fn weyl_denominator_super_subalgebra<C: Scalar>(
    sub: &SuperRootSubset,
    bound: &[i64],
) -> Result<SignedExpansion<C>> {
    let nvars = sub.m + sub.n - 1;
    let bound = check_bound(bound, nvars)?;
    let roots: Vec<Root> = sub.even().chain(sub.odd()).collect();
    Ok(super_denominator(nvars, sub.m, roots, &bound))
}
