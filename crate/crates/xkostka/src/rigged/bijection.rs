use std::collections::HashMap;

use super::config::Configuration;
use super::RiggedConfiguration;
use crate::crystal::{enumerate_w, row_tuples_with_lengths, RowTuple};
use crate::error::{Error, Result};
use crate::tableau::Partition;

/// One step `(ν, J)_{i-1} → (ν, J)_i` of `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub i: usize,
    /// The truncated tuple `w_i`.
    pub w: RowTuple,
    pub rank: usize,
    /// Chosen lengths `i_1 ≤ ⋯ ≤ i_r` before lengthening.
    pub lengths: Vec<usize>,
    pub i0: usize,
    pub rc: RiggedConfiguration,
}

impl TraceStep {
    /// Per level, `[length, vacancy, label]` for each string.
    pub fn levels(&self) -> Vec<Vec<[i64; 3]>> {
        (1..self.rc.n())
            .map(|a| {
                self.rc.strings(a).into_iter().map(|(i, x)| [i as i64, self.rc.config().vacancy(a, i), x]).collect()
            })
            .collect()
    }
}

/// Order in which `ψ` adds letters: `(letter, row)` with letters ascending
/// and, for equal letters, rows from the bottom up.
fn additions(w: &RowTuple) -> Vec<(usize, usize)> {
    let top = w.word().max_letter();
    let mut out = Vec::new();
    for k in 1..=top {
        for r in (0..w.n()).rev() {
            let c = w.rows()[r].iter().filter(|&&x| x == k).count();
            out.extend(std::iter::repeat_n((k, r), c));
        }
    }
    out
}

/// `(ν, J)_1, …, (ν, J)_N` for `ψ(w)`.
pub fn psi_rc_traced(w: &RowTuple) -> Result<Vec<TraceStep>> {
    let mu = w.mu()?;
    let n = w.n();
    let total = mu.size();
    let mut rows = vec![Vec::new(); n];
    let mut rc = RiggedConfiguration::empty(Partition::empty(), n);
    let mut trace = Vec::with_capacity(total);
    for (step, (k, r)) in additions(w).into_iter().enumerate() {
        let i = step + 1;
        rows[r].push(k);
        let mu_new = mu.truncate(total - i)?;
        let i0 = mu_new.parts().last().copied().unwrap_or(1) - 1;
        let mut lengths = Vec::new();
        if r == 0 {
            rc = rc.with_mu(mu_new);
        } else {
            let mut bound = usize::MAX;
            let mut picks = Vec::with_capacity(r);
            for a in (1..=r).rev() {
                let strings = rc.strings(a);
                let found = strings.iter().position(|&(len, x)| len <= bound && x == rc.config().vacancy(a, len));
                let len = found.map_or(0, |j| strings[j].0);
                picks.push((a, found));
                lengths.push(len);
                bound = len;
            }
            lengths.reverse();
            assert!(i0 <= lengths[0], "i0 = {i0} exceeds i1 = {} at step {i}", lengths[0]);
            rc = lengthen(&rc, mu_new, &picks);
        }
        trace.push(TraceStep { i, w: RowTuple::new(rows.clone(), n)?, rank: r, lengths, i0, rc: rc.clone() });
    }
    Ok(trace)
}

/// Lengthens the picked strings by one and makes them singular over `mu`.
fn lengthen(rc: &RiggedConfiguration, mu: Partition, picks: &[(usize, Option<usize>)]) -> RiggedConfiguration {
    let n = rc.n();
    let mut levels: Vec<Vec<(usize, Option<i64>)>> =
        (1..n).map(|a| rc.strings(a).into_iter().map(|(i, x)| (i, Some(x))).collect()).collect();
    for &(a, j) in picks {
        match j {
            Some(j) => levels[a - 1][j] = (levels[a - 1][j].0 + 1, None),
            None => levels[a - 1].push((1, None)),
        }
    }
    let nu = levels
        .iter()
        .map(|l| {
            let mut parts: Vec<usize> = l.iter().map(|s| s.0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).expect("positive lengths")
        })
        .collect();
    let config = Configuration::new(mu, n, nu);
    let labels = levels
        .iter()
        .enumerate()
        .map(|(a, l)| {
            let mut strings: Vec<(usize, i64)> =
                l.iter().map(|&(i, x)| (i, x.unwrap_or_else(|| config.vacancy(a + 1, i)))).collect();
            strings.sort_unstable_by(|a, b| b.cmp(a));
            strings.into_iter().map(|s| s.1).collect()
        })
        .collect();
    RiggedConfiguration::from_parts(config, labels)
}

/// `ψ(w) = (ν, J)_N`.
pub fn psi_rc(w: &RowTuple) -> Result<RiggedConfiguration> {
    let trace = psi_rc_traced(w)?;
    Ok(match trace.last() {
        Some(step) => step.rc.clone(),
        None => RiggedConfiguration::empty(Partition::empty(), w.n()),
    })
}

/// The preimage of `rc` under `ψ`, found among row tuples of the matching
/// weight.
pub fn psi_rc_inverse(rc: &RiggedConfiguration, mu: &Partition, n: usize) -> Result<RowTuple> {
    let lengths: Vec<usize> =
        rc.weight().0.iter().map(|&x| usize::try_from(x).map_err(|_| Error::NotInImage)).collect::<Result<_>>()?;
    if lengths.iter().sum::<usize>() != mu.size() {
        return Err(Error::NotInImage);
    }
    for w in row_tuples_with_lengths(mu, &lengths, n)? {
        if &psi_rc(&w)? == rc {
            return Ok(w);
        }
    }
    Err(Error::NotInImage)
}

/// `ψ` tabulated over all of `W(μ)`.
pub struct PsiTable {
    forward: HashMap<RowTuple, RiggedConfiguration>,
    backward: HashMap<RiggedConfiguration, RowTuple>,
}

impl PsiTable {
    pub fn new(mu: &Partition, n: usize) -> Result<Self> {
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for w in enumerate_w(mu, n)? {
            let rc = psi_rc(&w)?;
            if backward.insert(rc.clone(), w.clone()).is_some() {
                return Err(Error::Invalid(format!("psi is not injective at {w}")));
            }
            forward.insert(w, rc);
        }
        Ok(PsiTable { forward, backward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn psi(&self, w: &RowTuple) -> Option<&RiggedConfiguration> {
        self.forward.get(w)
    }

    pub fn inverse(&self, rc: &RiggedConfiguration) -> Result<&RowTuple> {
        self.backward.get(rc).ok_or(Error::NotInImage)
    }
}
