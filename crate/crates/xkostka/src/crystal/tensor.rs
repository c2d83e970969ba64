use std::fmt;

use serde::{Deserialize, Serialize};

use super::weight::Weight;
use super::Crystal;
use crate::error::{Error, Result};
use crate::tableau::skew::rows_are_sorted;

/// Element of `B(μ) = B^{1,μ_r} ⊗ ⋯ ⊗ B^{1,μ_1}`. `factors[k-1]` is `b_k`;
/// the display order is `b_r ⊗ ⋯ ⊗ b_1`.
///
/// JSON is `{"factors": [b_1, …, b_r], "n": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TensorRepr", into = "TensorRepr")]
pub struct TensorElement {
    factors: Vec<Vec<usize>>,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    factors: Vec<Vec<usize>>,
    n: usize,
}

impl TryFrom<TensorRepr> for TensorElement {
    type Error = Error;
    fn try_from(r: TensorRepr) -> Result<Self> {
        TensorElement::new(r.factors, r.n)
    }
}

impl From<TensorElement> for TensorRepr {
    fn from(b: TensorElement) -> Self {
        TensorRepr { factors: b.factors, n: b.n }
    }
}

impl TensorElement {
    pub fn new(factors: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        for (k, b) in factors.iter().enumerate() {
            if !rows_are_sorted(std::slice::from_ref(b)) {
                return Err(Error::RowNotSorted(k + 1));
            }
            if let Some(&x) = b.iter().find(|&&x| x == 0 || x > n) {
                return Err(Error::LetterOutOfRange { letter: x, n });
            }
        }
        Ok(TensorElement { factors, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_1, …, b_r`.
    pub fn factors(&self) -> &[Vec<usize>] {
        &self.factors
    }

    /// Factor lengths `μ_1, …, μ_r`.
    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(Vec::len).collect()
    }

    /// Positions `(factor, index)` in signature order, with `+1` for a
    /// letter `i` and `-1` for `i+1`, after cancelling adjacent `-+`.
    fn reduced_signature(&self, i: usize) -> Vec<(usize, usize, i8)> {
        let mut stack: Vec<(usize, usize, i8)> = Vec::new();
        for k in (0..self.factors.len()).rev() {
            for (j, &x) in self.factors[k].iter().enumerate() {
                let s = if x == i {
                    1
                } else if x == i + 1 {
                    -1
                } else {
                    continue;
                };
                if s == 1 && stack.last().is_some_and(|&(_, _, t)| t == -1) {
                    stack.pop();
                } else {
                    stack.push((k, j, s));
                }
            }
        }
        stack
    }

    fn replace(&self, k: usize, j: usize, letter: usize) -> TensorElement {
        let mut factors = self.factors.clone();
        factors[k][j] = letter;
        factors[k].sort_unstable();
        TensorElement { factors, n: self.n }
    }
}

impl Crystal for TensorElement {
    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, i: usize) -> Option<Self> {
        if i == 0 || i >= self.n {
            return None;
        }
        let (k, _, _) = self.reduced_signature(i).into_iter().find(|&(_, _, s)| s == -1)?;
        let j = self.factors[k].iter().position(|&x| x == i + 1)?;
        Some(self.replace(k, j, i))
    }

    fn f(&self, i: usize) -> Option<Self> {
        if i == 0 || i >= self.n {
            return None;
        }
        let (k, _, _) = self.reduced_signature(i).into_iter().rev().find(|&(_, _, s)| s == 1)?;
        let j = self.factors[k].iter().rposition(|&x| x == i)?;
        Some(self.replace(k, j, i + 1))
    }

    fn eps(&self, i: usize) -> usize {
        if i == 0 || i >= self.n {
            return 0;
        }
        self.reduced_signature(i).iter().filter(|s| s.2 == -1).count()
    }

    fn phi(&self, i: usize) -> usize {
        if i == 0 || i >= self.n {
            return 0;
        }
        self.reduced_signature(i).iter().filter(|s| s.2 == 1).count()
    }

    fn weight(&self) -> Weight {
        let mut v = vec![0i64; self.n];
        for &x in self.factors.iter().flatten() {
            v[x - 1] += 1;
        }
        Weight(v)
    }
}

impl fmt::Display for TensorElement {
    /// `b_r⊗⋯⊗b_1`; letters above 9 are separated by dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n > 9;
        for (k, b) in self.factors.iter().rev().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            for (j, x) in b.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}
