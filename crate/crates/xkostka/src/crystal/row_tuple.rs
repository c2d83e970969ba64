use std::fmt;

use serde::{Deserialize, Serialize};

use super::weight::Weight;
use super::Crystal;
use crate::error::{Error, Result};
use crate::tableau::jdt::{jdt_slide, Slide};
use crate::tableau::skew::rows_are_sorted;
use crate::tableau::{Partition, SkewShape, Tableau, Word};

/// Element of `W(μ)`: rows `w_1, …, w_n`, each weakly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RowTupleRepr", into = "RowTupleRepr")]
pub struct RowTuple {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RowTupleRepr {
    rows: Vec<Vec<usize>>,
    n: usize,
}

impl TryFrom<RowTupleRepr> for RowTuple {
    type Error = Error;
    fn try_from(r: RowTupleRepr) -> Result<Self> {
        RowTuple::new(r.rows, r.n)
    }
}

impl From<RowTuple> for RowTupleRepr {
    fn from(w: RowTuple) -> Self {
        let n = w.rows.len();
        RowTupleRepr { rows: w.rows, n }
    }
}

impl RowTuple {
    /// `rows[0]` is `w_1`. Missing rows up to `n` are empty.
    pub fn new(mut rows: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        while rows.len() > n && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > n {
            return Err(Error::RankTooSmall { n, need: rows.len() });
        }
        if let Some(i) = rows.iter().position(|r| !rows_are_sorted(std::slice::from_ref(r))) {
            return Err(Error::RowNotSorted(i + 1));
        }
        if rows.iter().flatten().any(|&a| a == 0) {
            return Err(Error::InvalidLetter(0));
        }
        rows.resize(n, Vec::new());
        Ok(RowTuple { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `w_i`, 1-based.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Rows `w_1, …, w_n`.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `w_n ∗ ⋯ ∗ w_1`.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Letter counts of the concatenated word.
    pub fn content(&self) -> Vec<usize> {
        self.word().weight()
    }

    /// The partition `μ` with `w ∈ W(μ)`.
    pub fn mu(&self) -> Result<Partition> {
        let c = self.content();
        Partition::new(c.clone()).map_err(|_| Error::WeightNotPartition(c))
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    fn with_pair(&self, i: usize, lower: Vec<usize>, upper: Vec<usize>) -> RowTuple {
        let mut rows = self.rows.clone();
        rows[i - 1] = upper;
        rows[i] = lower;
        RowTuple { rows }
    }
}

impl fmt::Display for RowTuple {
    /// `(w_n, …, w_1)` with `-` for empty rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&a| a > 9);
        write!(f, "(")?;
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if row.is_empty() {
                write!(f, "-")?;
            }
            for (j, a) in row.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{a}")?;
            }
        }
        write!(f, ")")
    }
}

/// `T_{(w₂,w₁)}`: `w₁` on top, shifted so that its first `t₀` letters sit
/// over the last `t₀` letters of `w₂`, with `t₀` maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowTableau {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub t0: usize,
}

/// Maximal-overlap placement of `w1` above `w2`.
pub fn two_row(w2: &[usize], w1: &[usize]) -> TwoRowTableau {
    let (p, q) = (w1.len(), w2.len());
    let fits = |t: usize| (0..t).all(|j| w1[j] < w2[q - t + j]);
    let t0 = (0..=p.min(q)).rev().find(|&t| fits(t)).unwrap_or(0);
    TwoRowTableau { top: w1.to_vec(), bottom: w2.to_vec(), t0 }
}

impl TwoRowTableau {
    /// Column where the top row starts.
    pub fn offset(&self) -> usize {
        self.bottom.len() - self.t0
    }

    pub fn tableau(&self) -> Tableau {
        let (p, q) = (self.top.len(), self.bottom.len());
        let off = self.offset();
        let outer = Partition::new(vec![off + p, q]).expect("t0 <= p");
        let inner = Partition::new(vec![off]).expect("single part");
        let shape = SkewShape::new(outer, inner).expect("inner fits");
        Tableau::new(shape, vec![self.top.clone(), self.bottom.clone()]).expect("t0 gives a tableau")
    }

    fn split(t: &Tableau) -> (Vec<usize>, Vec<usize>) {
        let rows = t.rows();
        (rows.get(1).cloned().unwrap_or_default(), rows.first().cloned().unwrap_or_default())
    }

    /// `e(w₂, w₁)`: slide at the upper position left of the top row.
    pub fn raise(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let q = self.bottom.len();
        if self.t0 >= q {
            return None;
        }
        let t = jdt_slide(&self.tableau(), (0, q - self.t0 - 1), Slide::Upper).expect("upper position");
        Some(Self::split(&t))
    }

    /// `f(w₂, w₁)`: slide at the lower position under the overhang of the
    /// top row.
    pub fn lower(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let q = self.bottom.len();
        if self.top.len() <= self.t0 {
            return None;
        }
        let t = jdt_slide(&self.tableau(), (1, q), Slide::Lower).expect("lower position");
        Some(Self::split(&t))
    }
}

impl Crystal for RowTuple {
    fn rank(&self) -> usize {
        self.n()
    }

    fn e(&self, i: usize) -> Option<Self> {
        if i == 0 || i >= self.n() {
            return None;
        }
        let (lo, up) = two_row(self.row(i + 1), self.row(i)).raise()?;
        Some(self.with_pair(i, lo, up))
    }

    fn f(&self, i: usize) -> Option<Self> {
        if i == 0 || i >= self.n() {
            return None;
        }
        let (lo, up) = two_row(self.row(i + 1), self.row(i)).lower()?;
        Some(self.with_pair(i, lo, up))
    }

    fn weight(&self) -> Weight {
        Weight::from_parts(&self.row_lengths(), self.n())
    }
}
