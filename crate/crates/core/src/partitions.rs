//! Young diagrams, hook diagrams and the dictionary between diagrams and
//! occupancy vectors `M = (M_1, ..., M_r)`.
//!
//! With the boundary conventions `M_0 = 2sL` and `M_{r+1} = 0`, a diagram
//! with rows `lambda_i` corresponds to `lambda_i = M_{i-1} - M_i`. Rows are
//! 1-indexed in every public text format and 0-indexed in memory.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so equality and hashing act
/// on the canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One row of `n` boxes.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), zero beyond the last nonzero row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to exactly `len` entries.
    ///
    /// Panics if the partition has more than `len` nonzero rows.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(self.len() <= len, "partition {self} longer than {len}");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition::from_sorted(cols)
    }

    /// Hook length `arm + leg + 1` of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Removes the first `lambda_{r+1}` columns of a diagram with `r + 1` rows.
    ///
    /// Diagrams with at most `r` rows are returned unchanged.
    pub fn reduce_redundant(&self, r: usize) -> Partition {
        if self.len() == r + 1 {
            let cut = self.parts[r];
            Partition::from_sorted(self.parts.iter().map(|p| p - cut).collect())
        } else {
            self.clone()
        }
    }

    /// `true` if `self / inner` has at most one box per column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| inner.part(i) >= self.part(i + 1))
    }

    /// All partitions `nu` with `nu / self` a horizontal strip of `k` boxes
    /// and at most `max_rows` nonzero rows.
    pub fn add_horizontal_strips(&self, k: usize, max_rows: usize) -> Vec<Partition> {
        let rows = (self.len() + 1).min(max_rows);
        if self.len() > max_rows {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = self.padded(rows.max(self.len()));
        fn rec(
            i: usize,
            left: usize,
            base: &Partition,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::from_sorted(cur.clone()));
                }
                return;
            }
            let lo = base.part(i);
            let hi = if i == 0 { lo + left } else { base.part(i - 1).min(lo + left) };
            for v in lo..=hi {
                cur[i] = v;
                rec(i + 1, left - (v - lo), base, cur, out);
            }
            cur[i] = lo;
        }
        rec(0, k, self, &mut cur, &mut out);
        out
    }

    /// All `nu` with `lower ⊆ nu ⊆ self` and `self / nu` a horizontal strip.
    pub fn remove_horizontal_strips(&self, lower: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        if !self.contains(lower) {
            return out;
        }
        let mut cur = self.parts.clone();
        fn rec(i: usize, outer: &Partition, lower: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            let lo = outer.part(i + 1).max(lower.part(i));
            for v in lo..=outer.part(i) {
                cur[i] = v;
                rec(i + 1, outer, lower, cur, out);
            }
        }
        rec(0, self, lower, &mut cur, &mut out);
        out
    }

    /// All sub-diagrams `tau ⊆ self`, including the empty one.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.len()];
        fn rec(i: usize, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            let hi = if i == 0 { outer.part(0) } else { outer.part(i).min(cur[i - 1]) };
            for v in 0..=hi {
                cur[i] = v;
                rec(i + 1, outer, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, self, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with at most `max_rows` nonzero rows, in reverse
    /// lexicographic order (`(n)` first).
    pub fn all_of_size(n: usize, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, cap: usize, max_rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            if cur.len() == max_rows {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, max_rows, cur, out);
                cur.pop();
            }
        }
        rec(n, n, max_rows, &mut cur, &mut out);
        out
    }

    /// Diagrams of size `n` inside the `(m, n_cols)`-hook.
    pub fn all_in_hook(n: usize, m: usize, n_cols: usize) -> Vec<Partition> {
        Partition::all_of_size(n, n)
            .into_iter()
            .filter(|p| p.part(m) <= n_cols)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `"3,2,1"`. `"0"` and `""` are the empty
    /// diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Occupancy arguments `(M_1, ..., M_r)` together with the total degree
/// `M_0 = 2sL`.
///
/// Entries may leave the standard region `M_0 >= M_1 >= ... >= M_r >= 0`;
/// shift operators produce such vectors and occupancy lookups treat them by
/// zero-extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MVector {
    entries: Vec<i64>,
    total: i64,
}

impl MVector {
    pub fn new(entries: Vec<i64>, total: i64) -> Self {
        MVector { entries, total }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn total(&self) -> i64 {
        self.total
    }

    pub fn is_standard(&self) -> bool {
        let mut prev = self.total;
        for &m in &self.entries {
            if m > prev {
                return false;
            }
            prev = m;
        }
        prev >= 0
    }

    /// Exponents `(M_0 - M_1, ..., M_{r-1} - M_r, M_r)` of the monomial
    /// labelled by this vector.
    pub fn exponents(&self) -> Vec<i64> {
        exponents_of(&self.entries, self.total)
    }

    /// Every standard vector of rank `r` with `M_0 = total`, in
    /// lexicographic order.
    pub fn all_standard(r: usize, total: i64) -> Vec<MVector> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        fn rec(r: usize, cap: i64, total: i64, cur: &mut Vec<i64>, out: &mut Vec<MVector>) {
            if cur.len() == r {
                out.push(MVector::new(cur.clone(), total));
                return;
            }
            for v in 0..=cap {
                cur.push(v);
                rec(r, v, total, cur, out);
                cur.pop();
            }
        }
        if total >= 0 {
            rec(r, total, total, &mut cur, &mut out);
        }
        out.sort();
        out
    }
}

pub(crate) fn exponents_of(entries: &[i64], total: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(entries.len() + 1);
    let mut prev = total;
    for &m in entries {
        out.push(prev - m);
        prev = m;
    }
    out.push(prev);
    out
}

/// Inverse of [`exponents_of`]: partial sums subtracted from the total.
pub(crate) fn entries_from_exponents(exps: &[i64]) -> (Vec<i64>, i64) {
    let total: i64 = exps.iter().sum();
    let mut acc = total;
    let entries = exps[..exps.len().saturating_sub(1)]
        .iter()
        .map(|e| {
            acc -= e;
            acc
        })
        .collect();
    (entries, total)
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `lambda_i = M_{i-1} - M_i` with `M_0 = 2sL`, `M_{r+1} = 0`.
pub fn lambda_from_m(m: &MVector) -> Result<Partition> {
    let exps = m.exponents();
    if exps.iter().any(|&e| e < 0) || exps.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonStandardWeight(m.entries.clone()));
    }
    Ok(Partition::from_sorted(exps.iter().map(|&e| e as usize).collect()))
}

/// `M_j = 2sL - (lambda_1 + ... + lambda_j)` for `j = 1..r`.
pub fn m_from_lambda(lam: &Partition, r: usize, two_sl: u64) -> Result<MVector> {
    if lam.size() as u64 != two_sl {
        return Err(Error::SizeMismatch { expected: two_sl, found: lam.size() as u64 });
    }
    if lam.len() > r + 1 {
        return Err(Error::TooManyRows { rows: lam.len(), max: r + 1 });
    }
    let exps: Vec<i64> = lam.padded(r + 1).iter().map(|&p| p as i64).collect();
    let (entries, total) = entries_from_exponents(&exps);
    Ok(MVector::new(entries, total))
}

/// A Young diagram constrained to the `(m, n)`-hook: `lambda_{m+1} <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookPartition {
    shape: Partition,
    m: usize,
    n: usize,
}

impl HookPartition {
    pub fn new(shape: Partition, m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::NotInHook { shape: shape.to_string(), m, n });
        }
        if shape.part(m) > n {
            return Err(Error::NotInHook { shape: shape.to_string(), m, n });
        }
        Ok(HookPartition { shape, m, n })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn hook(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// The first `m` rows.
    pub fn head(&self) -> Vec<usize> {
        self.shape.padded(self.m.max(self.shape.len()))[..self.m].to_vec()
    }

    /// Rows below row `m`, as a diagram with at most `n` columns.
    pub fn tail(&self) -> Partition {
        Partition::from_sorted(self.shape.parts().iter().skip(self.m).copied().collect())
    }

    /// The conjugate diagram in the `(n, m)`-hook.
    pub fn conjugate(&self) -> HookPartition {
        HookPartition { shape: self.shape.conjugate(), m: self.n, n: self.m }
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}:{}", self.m, self.n, self.shape)
    }
}

impl FromStr for HookPartition {
    type Err = Error;

    /// `"m|n:parts"`, e.g. `"2|1:3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, parts) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("hook partition {s:?} lacks an m|n: tag")))?;
        let (m, n) = parse_shape_tag(tag)?;
        HookPartition::new(parts.parse()?, m, n)
    }
}

/// Parses `"m|n"` (or `"m,n"`).
pub fn parse_shape_tag(tag: &str) -> Result<(usize, usize)> {
    let (a, b) = tag
        .split_once(['|', ','])
        .ok_or_else(|| Error::Parse(format!("bad shape tag {tag:?}")))?;
    let p = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad shape tag {tag:?}")))
    };
    Ok((p(a)?, p(b)?))
}

/// Occupancy arguments `(M_1, ..., M_{m+n-1})` for `sl(m|n)`, with
/// `M_0 = 2sL` and `M_{m+n} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMVector {
    entries: Vec<i64>,
    total: i64,
    m: usize,
    n: usize,
}

impl SuperMVector {
    pub fn new(entries: Vec<i64>, total: i64, m: usize, n: usize) -> Result<Self> {
        if m + n == 0 || entries.len() != m + n - 1 {
            return Err(Error::Parse(format!(
                "sl({m}|{n}) needs {} entries, got {}",
                (m + n).saturating_sub(1),
                entries.len()
            )));
        }
        Ok(SuperMVector { entries, total, m, n })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn total(&self) -> i64 {
        self.total
    }

    pub fn hook(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn exponents(&self) -> Vec<i64> {
        exponents_of(&self.entries, self.total)
    }

    pub fn is_standard(&self) -> bool {
        MVector::new(self.entries.clone(), self.total).is_standard()
    }

    pub fn as_mvector(&self) -> MVector {
        MVector::new(self.entries.clone(), self.total)
    }
}

impl fmt::Display for SuperMVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_mvector())
    }
}

/// Hook diagram to occupancy vector: the first `m` rows give
/// `lambda_i = M_{i-1} - M_i`, and the columns of the part below row `m`
/// give `lambda~'_l = M_{m+l-1} - M_{m+l}`.
pub fn super_m_from_lambda(lam: &HookPartition, two_sl: u64) -> Result<SuperMVector> {
    if lam.size() as u64 != two_sl {
        return Err(Error::SizeMismatch { expected: two_sl, found: lam.size() as u64 });
    }
    let (m, n) = lam.hook();
    let tail_conj = lam.tail().conjugate();
    let mut exps: Vec<i64> = lam.head().iter().map(|&p| p as i64).collect();
    exps.extend(tail_conj.padded(n).iter().map(|&p| p as i64));
    let (entries, total) = entries_from_exponents(&exps);
    SuperMVector::new(entries, total, m, n)
}

/// Inverse of [`super_m_from_lambda`]. Fails with `NonStandardWeight` when the
/// exponents do not assemble into a hook diagram.
pub fn lambda_from_super_m(mv: &SuperMVector) -> Result<HookPartition> {
    let (m, n) = mv.hook();
    let exps = mv.exponents();
    let bad = || Error::NonStandardWeight(mv.entries.clone());
    if exps.iter().any(|&e| e < 0) {
        return Err(bad());
    }
    let head = &exps[..m];
    let cols = &exps[m..];
    if head.windows(2).any(|w| w[0] < w[1]) || cols.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad());
    }
    let tail = Partition::from_sorted(cols.iter().map(|&c| c as usize).collect()).conjugate();
    if m > 0 && (tail.part(0) as i64) > head[m - 1] {
        return Err(bad());
    }
    let mut rows: Vec<usize> = head.iter().map(|&h| h as usize).collect();
    rows.extend_from_slice(tail.parts());
    HookPartition::new(Partition::from_sorted(rows), m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_from_m_examples() {
        assert_eq!(lambda_from_m(&MVector::new(vec![3, 1], 6)).unwrap(), p("3,2,1"));
        assert_eq!(lambda_from_m(&MVector::new(vec![0], 4)).unwrap(), p("4"));
        assert!(matches!(
            lambda_from_m(&MVector::new(vec![5, 1], 6)),
            Err(Error::NonStandardWeight(_))
        ));
    }

    #[test]
    fn m_from_lambda_examples() {
        assert_eq!(m_from_lambda(&p("3,2,1"), 2, 6).unwrap().entries(), &[3, 1]);
        assert_eq!(m_from_lambda(&p("6"), 2, 6).unwrap().entries(), &[0, 0]);
        assert_eq!(m_from_lambda(&p("2,2,2"), 2, 6).unwrap().entries(), &[4, 2]);
        assert!(matches!(m_from_lambda(&p("3,2"), 2, 6), Err(Error::SizeMismatch { .. })));
        assert!(matches!(m_from_lambda(&p("1,1,1,1"), 2, 4), Err(Error::TooManyRows { .. })));
    }

    #[test]
    fn super_map_examples() {
        let l = HookPartition::new(p("4,2"), 1, 2).unwrap();
        assert_eq!(super_m_from_lambda(&l, 6).unwrap().entries(), &[2, 1]);
        let l = HookPartition::new(p("3,2,1"), 2, 1).unwrap();
        assert_eq!(super_m_from_lambda(&l, 6).unwrap().entries(), &[3, 1]);
        let l = HookPartition::new(p("6"), 2, 2).unwrap();
        assert_eq!(super_m_from_lambda(&l, 6).unwrap().entries(), &[0, 0, 0]);
        let l = HookPartition::new(p("2,2,2"), 1, 2).unwrap();
        assert_eq!(super_m_from_lambda(&l, 6).unwrap().entries(), &[4, 2]);
    }

    #[test]
    fn super_map_rejects_nonhook_weights() {
        // sl(1|2), (6,6): head row 0, columns (0,6) not decreasing
        let mv = SuperMVector::new(vec![6, 6], 6, 1, 2).unwrap();
        assert!(lambda_from_super_m(&mv).is_err());
        // sl(1|1)_1-style (2,2) in sl(2|1): x2 exponent 0 under a y column
        let mv = SuperMVector::new(vec![2, 2], 6, 2, 1).unwrap();
        assert!(lambda_from_super_m(&mv).is_err());
        assert!(HookPartition::new(p("2,2,2"), 2, 1).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,2,1").conjugate(), p("3,2,1"));
        assert_eq!(p("4,2").conjugate(), p("2,2,1,1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p("3,2,1").hook_lengths(), vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(p("1").hook_lengths(), vec![vec![1]]);
        assert_eq!(p("2,1").hook_lengths(), vec![vec![3, 1], vec![1]]);
    }

    #[test]
    fn reduce_redundant_examples() {
        assert_eq!(p("3,2,1").reduce_redundant(2), p("2,1"));
        assert_eq!(p("4,2").reduce_redundant(2), p("4,2"));
        assert_eq!(p("2,2,2").reduce_redundant(2), Partition::empty());
    }

    #[test]
    fn trailing_zeros_are_canonical() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p("0"), Partition::empty());
    }

    #[test]
    fn hook_text_format() {
        let h: HookPartition = "2|1:3,2,1".parse().unwrap();
        assert_eq!(h.hook(), (2, 1));
        assert_eq!(h.to_string(), "2|1:3,2,1");
        assert!("3,2,1".parse::<HookPartition>().is_err());
    }

    #[test]
    fn strips() {
        let base = p("2,1");
        let added = base.add_horizontal_strips(2, 3);
        // (4,1), (3,2), (3,1,1), (2,2,1)
        assert_eq!(added.len(), 4);
        assert!(added.iter().all(|nu| nu.is_horizontal_strip_over(&base)));
        let removed = p("3,1").remove_horizontal_strips(&Partition::empty());
        assert!(removed.iter().all(|nu| p("3,1").is_horizontal_strip_over(nu)));
        assert_eq!(removed.len(), 6); // nu_1 in 1..=3, nu_2 in 0..=1
    }

    #[test]
    fn counts_of_partitions() {
        assert_eq!(Partition::all_of_size(6, 6).len(), 11);
        assert_eq!(Partition::all_of_size(6, 2).len(), 4);
        assert_eq!(Partition::all_in_hook(6, 2, 1).len(), 10);
        assert_eq!(Partition::all_in_hook(6, 1, 2).len(), 10);
    }
}
