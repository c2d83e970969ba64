use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::crystal::cartan;
use crate::error::{Error, Result};
use crate::qpoly::{gauss_binomial, LaurentPoly};
use crate::rigged::config::{level_sizes, shift, Configuration};
use crate::rigged::enumerate::enumerate_c_double_on_strings;
use crate::rigged::{enumerate_c, enumerate_rc, rc_double};
use crate::tableau::{DoublePartition, Partition};

fn check_rank(lam: &DoublePartition, n: usize) -> Result<()> {
    if lam.s() + lam.t() > n {
        return Err(Error::RankTooSmall { n, need: lam.s() + lam.t() });
    }
    Ok(())
}

/// `Π_{a,i} [p_i^{(a)} + δ_{a,s} i + m_i^{(a)}, m_i^{(a)}]` over lengths present in `c`.
fn binomial_weight(c: &Configuration, s: usize) -> Result<LaurentPoly> {
    let mut w = LaurentPoly::one();
    for a in 1..c.n {
        let mut lengths = c.level(a).parts().to_vec();
        lengths.dedup();
        for i in lengths {
            w = &w * &gauss_binomial(c.vacancy(a, i) + shift(a, s, i), c.m(a, i) as i64)?;
        }
    }
    Ok(w)
}

/// `M(μ,λ;t) = Σ_{ν ∈ C(μ,λ)} t^{cc(ν)} Π [p_i^{(a)} + m_i^{(a)}, m_i^{(a)}]_t`.
pub fn fermionic(mu: &Partition, lam: &Partition, n: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for c in enumerate_c(mu, lam, n)? {
        out = &out + &binomial_weight(&c, 0)?.shift(c.cc());
    }
    Ok(out)
}

/// `M(μ,λ;t) = Σ_{(ν,J) ∈ RC(μ,λ)} t^{cc(ν,J)}`.
pub fn fermionic_rigged(mu: &Partition, lam: &Partition, n: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for rc in enumerate_rc(mu, lam, n)? {
        out.add_term(rc.cocharge(), BigInt::from(1));
    }
    Ok(out)
}

/// The ways of computing `M(μ,Λ;t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleRoute {
    /// `Σ t^{cc(ν,J)}` over `RC(μ,Λ)`.
    Rigged,
    /// Configurations with the shifted condition on the lengths present,
    /// weighted by `t^{cc(ν) − |ν^{(s)}|}` and shifted binomials.
    Configurations,
    /// Multiplicity arrays `{m}` directly, with the condition at every length.
    Multiplicities,
    /// As `Multiplicities`, with the shift `δ_{a,s}` in the binomial in place
    /// of `δ_{a,s} i`.
    Literal,
}

impl DoubleRoute {
    pub const ALL: [DoubleRoute; 3] = [DoubleRoute::Rigged, DoubleRoute::Configurations, DoubleRoute::Multiplicities];
}

/// `M(μ,Λ;t)` by the configuration route.
pub fn fermionic_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<LaurentPoly> {
    fermionic_double_route(mu, lam, n, DoubleRoute::Configurations)
}

pub fn fermionic_double_route(
    mu: &Partition,
    lam: &DoublePartition,
    n: usize,
    route: DoubleRoute,
) -> Result<LaurentPoly> {
    check_rank(lam, n)?;
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(mu.size(), lam.size()));
    }
    let s = lam.s();
    match route {
        DoubleRoute::Rigged => {
            let mut out = LaurentPoly::zero();
            for rc in rc_double(mu, lam, n)? {
                out.add_term(rc.cocharge(), BigInt::from(1));
            }
            Ok(out)
        }
        DoubleRoute::Configurations => {
            let mut out = LaurentPoly::zero();
            for c in enumerate_c_double_on_strings(mu, lam, n)? {
                out = &out + &binomial_weight(&c, s)?.shift(c.cc_double(s));
            }
            Ok(out)
        }
        DoubleRoute::Multiplicities => multiplicity_sum(mu, lam, n, false),
        DoubleRoute::Literal => multiplicity_sum(mu, lam, n, true),
    }
}

/// `m[i-1]` for `i = 1, …, k` with `Σ i m_i = k`.
fn multiplicity_vectors(k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in 0..=left / i {
            cur[i - 1] = m;
            go(i - 1, left - m * i, cur, out);
        }
        cur[i - 1] = 0;
    }
    let mut out = Vec::new();
    go(k, k, &mut vec![0; k], &mut out);
    out
}

/// Multiplicity data `{m}` for levels `1, …, n−1`, with `L_j = m_j(μ)`.
struct Multiplicities<'a> {
    mu: &'a Partition,
    m: Vec<Vec<usize>>,
}

impl Multiplicities<'_> {
    fn get(&self, a: usize, i: usize) -> i64 {
        self.m.get(a - 1).and_then(|v| v.get(i - 1)).copied().unwrap_or(0) as i64
    }

    fn levels(&self) -> usize {
        self.m.len()
    }

    fn pairing(&self, i: usize, b: usize) -> i64 {
        let len = self.m[b - 1].len();
        (1..=len).map(|j| i.min(j) as i64 * self.get(b, j)).sum()
    }

    /// `p_i^{(a)} = Σ_j min(i,j) L_j^{(a)} − Σ_{b,j} (α_a,α_b) min(i,j) m_j^{(b)}`.
    fn vacancy(&self, a: usize, i: usize) -> i64 {
        let mut p = 0;
        if a == 1 {
            p += self.mu.parts().iter().map(|&j| i.min(j) as i64).sum::<i64>();
        }
        for b in 1..=self.levels() {
            let c = cartan(a, b);
            if c != 0 {
                p -= c * self.pairing(i, b);
            }
        }
        p
    }

    /// `½ Σ (α_a,α_b) min(i,j) m_i^{(a)} m_j^{(b)}`.
    fn quadratic(&self) -> i64 {
        let mut twice = 0;
        for a in 1..=self.levels() {
            for b in 1..=self.levels() {
                let c = cartan(a, b);
                if c == 0 {
                    continue;
                }
                for i in 1..=self.m[a - 1].len() {
                    twice += c * self.get(a, i) * self.pairing(i, b);
                }
            }
        }
        twice / 2
    }
}

/// `Σ_{m} t^{cc({m})} Π [p_i^{(a)} + shift + m_i^{(a)}, m_i^{(a)}]_t` over all
/// multiplicity arrays of the right sizes with `p_i^{(a)} + δ_{a,s} i ≥ 0`
/// for every `i ≥ 1`, where `cc({m})` subtracts `Σ_i i m_i^{(s)}`.
fn multiplicity_sum(mu: &Partition, lam: &DoublePartition, n: usize, literal: bool) -> Result<LaurentPoly> {
    let s = lam.s();
    let sizes = level_sizes(&lam.row_lengths(), n);
    let mut arrays: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &k in &sizes {
        let choices = multiplicity_vectors(k);
        arrays = arrays
            .into_iter()
            .flat_map(|pre| {
                choices.iter().map(move |v| {
                    let mut next = pre.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    let top = sizes.iter().copied().chain(std::iter::once(mu.part(0))).max().unwrap_or(0).max(1);
    let mut out = LaurentPoly::zero();
    'arrays: for m in arrays {
        let data = Multiplicities { mu, m };
        for a in 1..n {
            for i in 1..=top {
                if data.vacancy(a, i) + shift(a, s, i) < 0 {
                    continue 'arrays;
                }
            }
        }
        let mut weight = LaurentPoly::one();
        for a in 1..n {
            for i in 1..=data.m[a - 1].len() {
                let mi = data.get(a, i);
                if mi == 0 {
                    continue;
                }
                let extra = if literal { shift(a, s, 1) } else { shift(a, s, i) };
                let top = data.vacancy(a, i) + extra;
                // [top + m, m] vanishes for -m <= top < 0
                if top < 0 {
                    continue 'arrays;
                }
                weight = &weight * &gauss_binomial(top, mi)?;
            }
        }
        let level_s = if s == 0 { 0 } else { sizes.get(s - 1).copied().unwrap_or(0) as i64 };
        out = &out + &weight.shift(data.quadratic() - level_s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(terms)
    }

    #[test]
    fn small_fermionic() {
        assert_eq!(fermionic(&p(&[1, 1]), &p(&[2]), 2).unwrap(), poly(&[(0, 1)]));
        assert_eq!(fermionic(&p(&[1, 1]), &p(&[1, 1]), 2).unwrap(), poly(&[(1, 1)]));
        assert_eq!(fermionic(&p(&[2, 1, 1]), &p(&[4]), 4).unwrap(), poly(&[(0, 1)]));
        assert_eq!(
            fermionic_rigged(&p(&[1, 1, 1]), &p(&[2, 1]), 3).unwrap(),
            fermionic(&p(&[1, 1, 1]), &p(&[2, 1]), 3).unwrap()
        );
    }

    #[test]
    fn multiplicity_vectors_count_partitions() {
        for k in 0..8 {
            assert_eq!(multiplicity_vectors(k).len(), Partition::all(k).len());
        }
    }

    #[test]
    fn routes_agree_on_appendix_shape() {
        let lam = DoublePartition::new(p(&[2, 1]), p(&[2]));
        let mu = p(&[2, 2, 1]);
        let want = fermionic_double_route(&mu, &lam, 3, DoubleRoute::Rigged).unwrap();
        assert_eq!(want.eval_one(), BigInt::from(6));
        for r in DoubleRoute::ALL {
            assert_eq!(fermionic_double_route(&mu, &lam, 3, r).unwrap(), want, "{r:?}");
        }
    }

    #[test]
    fn empty_first_part_is_ordinary() {
        let lam = DoublePartition::new(p(&[]), p(&[2, 1]));
        let mu = p(&[1, 1, 1]);
        let want = fermionic(&mu, &p(&[2, 1]), 3).unwrap();
        for r in DoubleRoute::ALL {
            assert_eq!(fermionic_double_route(&mu, &lam, 3, r).unwrap(), want);
        }
    }
}
