use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{DoublePartition, Partition, SkewShape};
use super::word::{is_row, Word};
use crate::error::{Error, Result};

/// Semistandard filling of a skew shape. `rows[r]` holds the cells of row
/// `r` from column `inner[r]` to `outer[r] - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::new(SkewShape::new(r.outer, r.inner)?, r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { outer: t.shape.outer().clone(), inner: t.shape.inner().clone(), rows: t.rows }
    }
}

impl Tableau {
    /// Missing trailing rows are treated as empty.
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > shape.num_rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > shape.num_rows() {
            return Err(Error::RowLength { row: shape.num_rows(), got: rows[shape.num_rows()].len(), want: 0 });
        }
        rows.resize(shape.num_rows(), Vec::new());
        for (r, row) in rows.iter().enumerate() {
            let (a, b) = shape.row_span(r);
            if row.len() != b - a {
                return Err(Error::RowLength { row: r, got: row.len(), want: b - a });
            }
        }
        let t = Tableau { shape, rows };
        t.check()?;
        Ok(t)
    }

    /// Partition-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Tableau::new(SkewShape::straight(shape), rows)
    }

    pub fn empty() -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    /// Builds from a cell map; the caller guarantees the cells match `shape`.
    pub(crate) fn from_cells(shape: SkewShape, cells: &BTreeMap<(usize, usize), usize>) -> Result<Self> {
        let rows = (0..shape.num_rows())
            .map(|r| {
                let (a, b) = shape.row_span(r);
                (a..b).map(|c| cells[&(r, c)]).collect()
            })
            .collect();
        Tableau::new(shape, rows)
    }

    fn check(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            let (a, _) = self.shape.row_span(r);
            for (k, &x) in row.iter().enumerate() {
                let c = a + k;
                if x == 0 {
                    return Err(Error::InvalidLetter(0));
                }
                if k > 0 && row[k - 1] > x {
                    return Err(Error::NotTableau(r, c));
                }
                if r > 0 {
                    if let Some(above) = self.get(r - 1, c) {
                        if above >= x {
                            return Err(Error::NotTableau(r, c));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        let (a, b) = self.shape.row_span(r);
        (a <= c && c < b).then(|| self.rows[r][c - a])
    }

    pub fn cells(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            let (a, _) = self.shape.row_span(r);
            for (k, &x) in row.iter().enumerate() {
                m.insert((r, a + k), x);
            }
        }
        m
    }

    /// `w(T)`: rows from the bottom up, each left to right.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Letter counts.
    pub fn weight(&self) -> Vec<usize> {
        self.word().weight()
    }

    /// The unique tableau of `shape` with word `w`, if the filling is
    /// semistandard.
    pub fn fill(shape: &SkewShape, w: &Word) -> Result<Tableau> {
        if w.len() != shape.size() {
            return Err(Error::SizeMismatch(w.len(), shape.size()));
        }
        let mut it = w.letters().iter();
        let mut rows: Vec<Vec<usize>> = (0..shape.num_rows())
            .rev()
            .map(|r| {
                let (a, b) = shape.row_span(r);
                it.by_ref().take(b - a).copied().collect()
            })
            .collect();
        rows.reverse();
        Tableau::new(shape.clone(), rows)
    }

    /// Is `w` compatible with `shape`?
    pub fn compatible(shape: &SkewShape, w: &Word) -> bool {
        Tableau::fill(shape, w).is_ok()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            let (a, _) = self.shape.row_span(r);
            for _ in 0..a {
                write!(f, ".")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Pair `T = (T₊, T₋)` of straight tableaux, a tableau of shape `Λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauPair {
    pub plus: Tableau,
    pub minus: Tableau,
}

impl TableauPair {
    pub fn new(plus: Tableau, minus: Tableau) -> Result<Self> {
        if !plus.is_straight() || !minus.is_straight() {
            return Err(Error::NotStraight);
        }
        Ok(TableauPair { plus, minus })
    }

    pub fn shape(&self) -> DoublePartition {
        DoublePartition::new(self.plus.shape().outer().clone(), self.minus.shape().outer().clone())
    }

    /// `w(T₋) ∗ w(T₊)`
    pub fn word(&self) -> Word {
        self.minus.word().concat(&self.plus.word())
    }

    /// The skew tableau of shape `ξ_{Λ,a}`.
    pub fn to_xi(&self, a: usize) -> Result<Tableau> {
        let shape = self.shape().xi_shape(a)?;
        let rows = self.plus.rows().iter().chain(self.minus.rows()).cloned().collect();
        Tableau::new(shape, rows)
    }

    /// Inverse of [`TableauPair::to_xi`].
    pub fn from_xi(t: &Tableau, lam: &DoublePartition) -> Result<Self> {
        let s = lam.s();
        let rows = t.rows();
        let plus = Tableau::from_rows(rows[..s.min(rows.len())].to_vec())?;
        let minus = Tableau::from_rows(rows[s.min(rows.len())..].to_vec())?;
        let pair = TableauPair::new(plus, minus)?;
        if &pair.shape() != lam {
            return Err(Error::Invalid(format!("pair shape {} differs from {lam}", pair.shape())));
        }
        Ok(pair)
    }

    /// Rows of `T₊` followed by rows of `T₋`: the row tuple `w_T` listed
    /// `w_1` first.
    pub fn stacked_rows(&self) -> Vec<Vec<usize>> {
        self.plus.rows().iter().chain(self.minus.rows()).cloned().collect()
    }
}

impl fmt::Display for TableauPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.plus, self.minus)
    }
}

/// Each row weakly increasing.
pub fn rows_are_sorted(rows: &[Vec<usize>]) -> bool {
    rows.iter().all(|r| is_row(r))
}
