//! Rigged configurations over `L(μ)`, the bijection `ψ` from row tuples,
//! cocharge, and the sets `RC(μ,λ)`, `C(μ,λ)`, `RC(μ,Λ)`, `QM(μ,Λ)`, `C(μ,Λ)`.

pub mod bijection;
pub mod config;
pub mod enumerate;
pub mod lemmas;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::Weight;
use crate::error::{Error, Result};
use crate::tableau::Partition;

pub use bijection::{psi_rc, psi_rc_inverse, psi_rc_traced, PsiTable, TraceStep};
pub use config::{shift, Configuration};
pub use enumerate::{
    enumerate_c, enumerate_c_double, enumerate_qm_double, enumerate_rc, rc_double, rc_double_by_psi, rc_double_direct,
};

/// `(ν, J)`: for each level `a = 1, …, n−1` the strings `(i, x)` sorted by
/// decreasing length, then decreasing label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    config: Configuration,
    labels: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct Level {
    strings: Vec<(usize, i64)>,
}

#[derive(Serialize, Deserialize)]
struct RcRepr {
    mu: Partition,
    n: usize,
    levels: Vec<Level>,
}

impl Serialize for RiggedConfiguration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RcRepr {
            mu: self.config.mu.clone(),
            n: self.config.n,
            levels: (1..self.config.n).map(|a| Level { strings: self.strings(a) }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RiggedConfiguration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RcRepr::deserialize(d)?;
        RiggedConfiguration::new(r.mu, r.n, r.levels.into_iter().map(|l| l.strings).collect())
            .map_err(serde::de::Error::custom)
    }
}

impl RiggedConfiguration {
    /// `levels[a-1]` lists the strings of level `a` in any order.
    pub fn new(mu: Partition, n: usize, levels: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        if levels.len() > n.saturating_sub(1) && levels[n.saturating_sub(1)..].iter().any(|l| !l.is_empty()) {
            return Err(Error::LevelOutOfRange { level: levels.len(), n });
        }
        let mut nu = Vec::new();
        let mut labels = Vec::new();
        for mut strings in levels.into_iter().take(n.saturating_sub(1)) {
            if strings.iter().any(|&(i, _)| i == 0) {
                return Err(Error::Invalid("strings must have positive length".into()));
            }
            strings.sort_unstable_by(|a, b| b.cmp(a));
            nu.push(Partition::new(strings.iter().map(|s| s.0).collect())?);
            labels.push(strings.into_iter().map(|s| s.1).collect());
        }
        labels.resize(n.saturating_sub(1), Vec::new());
        Ok(RiggedConfiguration { config: Configuration::new(mu, n, nu), labels })
    }

    pub fn empty(mu: Partition, n: usize) -> Self {
        RiggedConfiguration { config: Configuration::empty(mu, n), labels: vec![Vec::new(); n.saturating_sub(1)] }
    }

    pub fn mu(&self) -> &Partition {
        &self.config.mu
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    /// `ν^{(a)}`.
    pub fn partition(&self, a: usize) -> &Partition {
        self.config.level(a)
    }

    /// Strings `(i, x)` of level `a` in canonical order.
    pub fn strings(&self, a: usize) -> Vec<(usize, i64)> {
        if a == 0 || a >= self.n() {
            return Vec::new();
        }
        self.config.level(a).parts().iter().copied().zip(self.labels[a - 1].iter().copied()).collect()
    }

    /// `p_i^{(a)}`.
    pub fn vacancy(&self, a: usize, i: usize) -> Result<i64> {
        if a == 0 || a >= self.n() {
            return Err(Error::LevelOutOfRange { level: a, n: self.n() });
        }
        Ok(self.config.vacancy(a, i))
    }

    pub fn weight(&self) -> Weight {
        self.config.weight()
    }

    /// Every label is at most its vacancy number.
    pub fn is_valid(&self) -> bool {
        (1..self.n()).all(|a| self.strings(a).iter().all(|&(i, x)| x <= self.config.vacancy(a, i)))
    }

    /// Every label is non-negative.
    pub fn is_highest(&self) -> bool {
        self.labels.iter().flatten().all(|&x| x >= 0)
    }

    /// `|J|`.
    pub fn label_sum(&self) -> i64 {
        self.labels.iter().flatten().sum()
    }

    /// `cc(ν, J) = cc(ν) + |J|`.
    pub fn cocharge(&self) -> i64 {
        self.config.cc() + self.label_sum()
    }

    /// `J₊`: level-`s` strings `(i, x)` become `(i, i + x)`.
    pub fn j_plus(&self, s: usize) -> Self {
        self.shift_level(s, 1)
    }

    /// Inverse of [`RiggedConfiguration::j_plus`].
    pub fn j_minus(&self, s: usize) -> Self {
        self.shift_level(s, -1)
    }

    fn shift_level(&self, s: usize, sign: i64) -> Self {
        let mut out = self.clone();
        if s == 0 || s >= self.n() {
            return out;
        }
        let parts = self.config.level(s).parts().to_vec();
        for (x, &i) in out.labels[s - 1].iter_mut().zip(&parts) {
            *x += sign * i as i64;
        }
        out.canonicalize_level(s);
        out
    }

    fn canonicalize_level(&mut self, a: usize) {
        let parts = self.config.level(a).parts();
        let mut strings: Vec<(usize, i64)> = parts.iter().copied().zip(self.labels[a - 1].iter().copied()).collect();
        strings.sort_unstable_by(|a, b| b.cmp(a));
        self.labels[a - 1] = strings.into_iter().map(|s| s.1).collect();
    }

    /// `0 ≤ x + i ≤ p_i^{(s)} + i` for every level-`s` string.
    pub fn level_condition(&self, s: usize) -> bool {
        self.strings(s).iter().all(|&(i, x)| {
            let i = i as i64;
            0 <= x + i && x + i <= self.config.vacancy(s, i as usize) + i
        })
    }

    /// The same configuration and labels over a different `μ`.
    pub(crate) fn with_mu(&self, mu: Partition) -> Self {
        let mut out = self.clone();
        out.config.mu = mu;
        out
    }

    pub(crate) fn from_parts(config: Configuration, labels: Vec<Vec<i64>>) -> Self {
        let mut rc = RiggedConfiguration { config, labels };
        for a in 1..rc.n() {
            rc.canonicalize_level(a);
        }
        rc
    }
}

impl fmt::Display for RiggedConfiguration {
    /// Levels separated by ` | `; each string as `vacancy[length]label`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 1..self.n() {
            if a > 1 {
                write!(f, " | ")?;
            }
            let strings = self.strings(a);
            if strings.is_empty() {
                write!(f, "-")?;
            }
            for (k, (i, x)) in strings.into_iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}[{i}]{x}", self.config.vacancy(a, i))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_order_identifies_permutations() {
        let a = RiggedConfiguration::new(p(&[2, 2]), 3, vec![vec![(1, 0), (2, 1), (1, 1)]]).unwrap();
        let b = RiggedConfiguration::new(p(&[2, 2]), 3, vec![vec![(1, 1), (1, 0), (2, 1)], vec![]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.strings(1), vec![(2, 1), (1, 1), (1, 0)]);
    }

    #[test]
    fn empty_is_valid_and_highest() {
        let rc = RiggedConfiguration::empty(p(&[2, 1]), 3);
        assert!(rc.is_valid() && rc.is_highest());
        assert_eq!(rc.cocharge(), 0);
        assert_eq!(rc.weight(), Weight(vec![3, 0, 0]));
    }

    #[test]
    fn invalid_label() {
        let mu = p(&[1, 1]);
        let ok = RiggedConfiguration::new(mu.clone(), 2, vec![vec![(1, 0)]]).unwrap();
        assert!(ok.is_valid());
        let bad = RiggedConfiguration::new(mu, 2, vec![vec![(1, 1)]]).unwrap();
        assert!(!bad.is_valid());
        assert!(bad.vacancy(2, 1).is_err());
    }

    #[test]
    fn j_plus_round_trip() {
        let rc = RiggedConfiguration::new(p(&[2, 2, 1]), 4, vec![vec![(2, 1)], vec![(2, -2), (1, 0)]]).unwrap();
        let up = rc.j_plus(2);
        assert_eq!(up.strings(2), vec![(2, 0), (1, 1)]);
        assert_eq!(up.j_minus(2), rc);
        assert_eq!(rc.j_plus(3), rc);
    }

    #[test]
    fn json_schema() {
        let rc = RiggedConfiguration::new(p(&[1, 1]), 2, vec![vec![(1, 0)]]).unwrap();
        let s = serde_json::to_string(&rc).unwrap();
        assert_eq!(s, r#"{"mu":[1,1],"n":2,"levels":[{"strings":[[1,0]]}]}"#);
        assert_eq!(serde_json::from_str::<RiggedConfiguration>(&s).unwrap(), rc);
    }
}
