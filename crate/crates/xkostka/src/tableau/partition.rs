use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Partition {
    pub const EMPTY: Partition = Partition(Vec::new());

    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 0-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Componentwise `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `Q_i(λ) = Σ_j min(i, λ_j)`, the number of boxes in the first `i` columns.
    pub fn q(&self, i: usize) -> usize {
        self.0.iter().map(|&p| p.min(i)).sum()
    }

    /// `λ − [m]`: remove `m` boxes, taking them from the last part first.
    pub fn truncate(&self, m: usize) -> Result<Partition> {
        if m > self.size() {
            return Err(Error::SizeMismatch(m, self.size()));
        }
        let mut parts = self.0.clone();
        let mut left = m;
        while left > 0 {
            let last = parts.last_mut().expect("size checked");
            let take = (*last).min(left);
            *last -= take;
            left -= take;
            if *last == 0 {
                parts.pop();
            }
        }
        Ok(Partition(parts))
    }

    /// Is `(r, c)` a removable corner?
    pub fn is_removable(&self, r: usize, c: usize) -> bool {
        self.part(r) == c + 1 && self.part(r + 1) <= c
    }

    /// Is `(r, c)` an addable cell?
    pub fn is_addable(&self, r: usize, c: usize) -> bool {
        self.part(r) == c && (r == 0 || self.part(r - 1) > c)
    }

    pub fn with_cell_removed(&self, r: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[r] -= 1;
        Partition::new(parts).expect("removable corner")
    }

    pub fn with_cell_added(&self, r: usize) -> Partition {
        let mut parts = self.0.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Partition::new(parts).expect("addable cell")
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions contained in `self` (including empty and `self`).
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &[usize], r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == outer.len() || max == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (0..=outer[r].min(max)).rev() {
                if p == 0 {
                    out.push(Partition(cur.clone()));
                    continue;
                }
                cur.push(p);
                rec(outer, r + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out
    }

    /// Dominance order `self ⊵ other` for equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        a == b
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Is the composition a partition (after dropping trailing zeros)?
pub fn is_partition_weight(weight: &[usize]) -> bool {
    Partition::new(weight.to_vec()).is_ok()
}

/// Skew shape `outer − inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SkewShapeRepr", into = "SkewShapeRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct SkewShapeRepr {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<SkewShapeRepr> for SkewShape {
    type Error = Error;
    fn try_from(r: SkewShapeRepr) -> Result<Self> {
        SkewShape::new(r.outer, r.inner)
    }
}

impl From<SkewShape> for SkewShapeRepr {
    fn from(s: SkewShape) -> Self {
        SkewShapeRepr { outer: s.outer, inner: s.inner }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::BadSkewShape { outer: outer.0, inner: inner.0 });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.length()
    }

    /// Columns `[start, end)` occupied in row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        let (a, b) = self.row_span(r);
        a <= c && c < b
    }

    /// Cells in reading order: top row first, right to left within a row.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.num_rows() {
            let (a, b) = self.row_span(r);
            for c in (a..b).rev() {
                out.push((r, c));
            }
        }
        out
    }

    /// All skew shapes `λ/ρ` with `|λ| ≤ max_outer`.
    pub fn all_up_to(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max_outer {
            for outer in Partition::all(n) {
                for inner in outer.sub_partitions() {
                    out.push(SkewShape { outer: outer.clone(), inner });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Pair of partitions `Λ = (λ′, λ″)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoublePartition {
    pub lp: Partition,
    pub lpp: Partition,
}

impl DoublePartition {
    pub fn new(lp: Partition, lpp: Partition) -> Self {
        DoublePartition { lp, lpp }
    }

    /// Number of parts of `λ′`.
    pub fn s(&self) -> usize {
        self.lp.length()
    }

    /// Number of parts of `λ″`.
    pub fn t(&self) -> usize {
        self.lpp.length()
    }

    pub fn size(&self) -> usize {
        self.lp.size() + self.lpp.size()
    }

    /// Row lengths `(λ′_1, …, λ′_s, λ″_1, …, λ″_t)`.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.lp.parts().iter().chain(self.lpp.parts()).copied().collect()
    }

    /// `ξ_{Λ,a}`: `λ′` shifted right by `a` on top of `λ″`, minus `(a^s)`.
    pub fn xi_shape(&self, a: usize) -> Result<SkewShape> {
        let need = self.lpp.part(0);
        if a < need {
            return Err(Error::ShiftTooSmall { need, got: a });
        }
        let mut outer: Vec<usize> = self.lp.parts().iter().map(|p| p + a).collect();
        outer.extend_from_slice(self.lpp.parts());
        let inner = vec![a; self.s()];
        SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
    }

    /// All `Λ` with `|Λ| = n`.
    pub fn all(n: usize) -> Vec<DoublePartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for lp in Partition::all(k) {
                for lpp in Partition::all(n - k) {
                    out.push(DoublePartition { lp: lp.clone(), lpp });
                }
            }
        }
        out
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lp, self.lpp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[2, 1]).sub_partitions().len(), 5);
    }

    #[test]
    fn truncation_takes_last_part_first() {
        assert_eq!(p(&[4, 2]).truncate(1).unwrap(), p(&[4, 1]));
        assert_eq!(p(&[4, 2]).truncate(3).unwrap(), p(&[3]));
        assert_eq!(p(&[4, 2]).truncate(6).unwrap(), p(&[]));
    }

    #[test]
    fn xi_shapes() {
        let lam = DoublePartition::new(p(&[2, 1]), p(&[2]));
        let xi = lam.xi_shape(2).unwrap();
        assert_eq!((xi.outer().clone(), xi.inner().clone()), (p(&[4, 3, 2]), p(&[2, 2])));
        let lam = DoublePartition::new(p(&[]), p(&[3, 1]));
        let xi = lam.xi_shape(5).unwrap();
        assert_eq!((xi.outer().clone(), xi.inner().clone()), (p(&[3, 1]), p(&[])));
        let lam = DoublePartition::new(p(&[4, 2]), p(&[4, 2, 2, 1]));
        let xi = lam.xi_shape(4).unwrap();
        assert_eq!(xi.outer(), &p(&[8, 6, 4, 2, 2, 1]));
        assert_eq!(xi.inner(), &p(&[4, 4]));
        assert!(lam.xi_shape(3).is_err());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[1, 1, 1])));
        assert!(!p(&[1, 1, 1]).dominates(&p(&[3])));
    }
}
