use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::tableau::{DoublePartition, Partition};

/// Element of `Zⁿ / Z(1,…,1)`, stored by a representative.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `Σ λ_i ε̄_i`, padded to length `n`.
    pub fn from_parts(parts: &[usize], n: usize) -> Self {
        let mut v = vec![0i64; n.max(parts.len())];
        for (i, &p) in parts.iter().enumerate() {
            v[i] = p as i64;
        }
        Weight(v)
    }

    pub fn from_partition(lam: &Partition, n: usize) -> Self {
        Self::from_parts(lam.parts(), n)
    }

    /// `Σ λ′_i ε̄_i + Σ λ″_j ε̄_{s+j}`.
    pub fn from_double(lam: &DoublePartition, n: usize) -> Self {
        Self::from_parts(&lam.row_lengths(), n)
    }

    /// `⟨h_i, wt⟩` for `i` in `1..n`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// The simple root `α_i = ε̄_i − ε̄_{i+1}`.
    pub fn alpha(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[i] = -1;
        Weight(v)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn normalized(&self) -> Vec<i64> {
        let base = self.0.last().copied().unwrap_or(0);
        self.0.iter().map(|x| x - base).collect()
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.normalized() == other.normalized()
    }
}

impl Eq for Weight {}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(α_a, α_b)` for type `A`.
pub fn cartan(a: usize, b: usize) -> i64 {
    match a.abs_diff(b) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_modulo_ones() {
        assert_eq!(Weight(vec![3, 1, 0]), Weight(vec![4, 2, 1]));
        assert_ne!(Weight(vec![3, 1, 0]), Weight(vec![3, 0, 1]));
        assert_eq!(Weight::alpha(1, 3).pairing(1), 2);
        assert_eq!(Weight::alpha(1, 3).pairing(2), -1);
        assert_eq!(cartan(2, 3), -1);
        assert_eq!(cartan(1, 3), 0);
    }
}
