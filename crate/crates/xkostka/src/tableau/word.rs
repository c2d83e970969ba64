use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letters in written order; `a_1` is the last element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0) {
            return Err(Error::InvalidLetter(bad));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Occurrence counts of `1, 2, …, max_letter`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_letter()];
        for &a in &self.0 {
            w[a - 1] += 1;
        }
        w
    }

    /// `self ∗ other`
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters in insertion order `a_1, a_2, …`.
    pub fn insertion_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn is_row(&self) -> bool {
        is_row(&self.0)
    }

    /// `b_m⋯b_1 a_m⋯a_1` with both halves rows and `a_i < b_i`.
    pub fn is_double_row(&self) -> Result<bool> {
        let n = self.0.len();
        if n % 2 == 1 {
            return Err(Error::OddLength(n));
        }
        let (b, a) = self.0.split_at(n / 2);
        Ok(is_row(a) && is_row(b) && a.iter().zip(b).all(|(x, y)| x < y))
    }

    /// Every suffix has at least as many `i` as `i+1`.
    pub fn is_lattice(&self) -> bool {
        let mut counts = vec![0usize; self.max_letter() + 1];
        for &a in self.0.iter().rev() {
            counts[a] += 1;
            if a > 1 && counts[a] > counts[a - 1] {
                return false;
            }
        }
        true
    }
}

pub(crate) fn is_row(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    /// Whitespace separated letters, e.g. `"2 1 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Invalid(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// Convenience for tests and examples: `w("2 1 1")`.
pub fn w(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_double_rows() {
        assert!(w("1 1 4").is_row());
        assert!(!w("2 1").is_row());
        assert_eq!(w("2 3 1 1 4").is_double_row(), Err(Error::OddLength(5)));
        assert_eq!(w("2 3 1 1").is_double_row(), Ok(true));
        assert_eq!(w("1 3 1 1").is_double_row(), Ok(false));
        assert_eq!(w("").is_double_row(), Ok(true));
    }

    #[test]
    fn lattice() {
        assert!(w("").is_lattice());
        assert!(w("2 1").is_lattice());
        assert!(!w("1 2").is_lattice());
        assert!(w("3 2 1 2 1 1").is_lattice());
        assert!(w("2 2 1 1").is_lattice());
        assert!(!w("1 2 2 1").is_lattice());
    }

    #[test]
    fn weights() {
        assert_eq!(w("2 1 1").weight(), vec![2, 1]);
        assert_eq!(w("3").weight(), vec![0, 0, 1]);
        assert_eq!(w("1 2").concat(&w("3")), w("1 2 3"));
        assert!(Word::new(vec![1, 0]).is_err());
    }
}
