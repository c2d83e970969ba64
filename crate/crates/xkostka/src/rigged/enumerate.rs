use super::bijection::psi_rc;
use super::config::{configurations, level_sizes, shift, Configuration};
use super::RiggedConfiguration;
use crate::crystal::p_set_double;
use crate::error::{Error, Result};
use crate::tableau::{DoublePartition, Partition};

fn check_target(mu: &Partition, target: &[usize], n: usize) -> Result<()> {
    let len = target.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
    if len > n {
        return Err(Error::RankTooSmall { n, need: len });
    }
    let size: usize = target.iter().sum();
    if size != mu.size() {
        return Err(Error::SizeMismatch(mu.size(), size));
    }
    Ok(())
}

fn configs_of_weight(mu: &Partition, target: &[usize], n: usize) -> Result<Vec<Configuration>> {
    check_target(mu, target, n)?;
    Ok(configurations(mu, n, &level_sizes(target, n)))
}

/// `C(μ, λ)`: configurations of weight `λ` with `p_i^{(a)} ≥ 0` everywhere.
pub fn enumerate_c(mu: &Partition, lam: &Partition, n: usize) -> Result<Vec<Configuration>> {
    Ok(configs_of_weight(mu, lam.parts(), n)?.into_iter().filter(|c| c.is_admissible(0)).collect())
}

/// `C(μ, Λ)` under `p_i^{(a)} + δ_{a,s} i ≥ 0` for every `(a, i)`.
pub fn enumerate_c_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<Configuration>> {
    let s = lam.s();
    Ok(configs_of_weight(mu, &lam.row_lengths(), n)?.into_iter().filter(|c| c.is_admissible(s)).collect())
}

/// `C(μ, Λ)` with the condition imposed only at lengths that occur.
pub fn enumerate_c_double_on_strings(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<Configuration>> {
    let s = lam.s();
    Ok(configs_of_weight(mu, &lam.row_lengths(), n)?.into_iter().filter(|c| c.is_admissible_on_strings(s)).collect())
}

/// Non-increasing sequences of length `m` in `lo..=hi`.
fn label_multisets(m: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(m: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in (lo..=hi).rev() {
            cur.push(x);
            go(m, lo, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// All riggings of `c` whose labels on a length-`i` string of level `a`
/// lie in `bounds(a, i, p_i^{(a)})`.
fn riggings(c: &Configuration, bounds: &dyn Fn(usize, usize, i64) -> (i64, i64)) -> Vec<RiggedConfiguration> {
    let mut acc: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for a in 1..c.n {
        let nu = c.level(a);
        let mut lengths: Vec<usize> = nu.parts().to_vec();
        lengths.dedup();
        let mut choices: Vec<Vec<i64>> = vec![Vec::new()];
        for i in lengths {
            let (lo, hi) = bounds(a, i, c.vacancy(a, i));
            let blocks = label_multisets(nu.multiplicity(i), lo, hi);
            choices = choices
                .into_iter()
                .flat_map(|pre| {
                    blocks.iter().map(move |b| {
                        let mut v = pre.clone();
                        v.extend_from_slice(b);
                        v
                    })
                })
                .collect();
        }
        acc = acc
            .into_iter()
            .flat_map(|pre| {
                choices.iter().map(move |ch| {
                    let mut v = pre.clone();
                    v.push(ch.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|labels| RiggedConfiguration::from_parts(c.clone(), labels)).collect()
}

fn collect_rigged(
    configs: Vec<Configuration>,
    bounds: &dyn Fn(usize, usize, i64) -> (i64, i64),
) -> Vec<RiggedConfiguration> {
    let mut out: Vec<RiggedConfiguration> = configs.iter().flat_map(|c| riggings(c, bounds)).collect();
    out.sort();
    out
}

/// `RC(μ, λ)`: highest-weight rigged configurations, `0 ≤ x ≤ p_i^{(a)}`.
pub fn enumerate_rc(mu: &Partition, lam: &Partition, n: usize) -> Result<Vec<RiggedConfiguration>> {
    let configs = configs_of_weight(mu, lam.parts(), n)?;
    Ok(collect_rigged(configs, &|_, _, p| (0, p)))
}

/// `QM(μ, Λ)`: `0 ≤ x ≤ p_i^{(a)} + δ_{a,s} i`.
pub fn enumerate_qm_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RiggedConfiguration>> {
    check_double_rank(lam, n)?;
    let s = lam.s();
    let configs = configs_of_weight(mu, &lam.row_lengths(), n)?;
    Ok(collect_rigged(configs, &|a, i, p| (0, p + shift(a, s, i))))
}

/// `RC(μ, Λ)` directly: `−δ_{a,s} i ≤ x ≤ p_i^{(a)}`.
pub fn rc_double_direct(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RiggedConfiguration>> {
    check_double_rank(lam, n)?;
    let s = lam.s();
    let configs = configs_of_weight(mu, &lam.row_lengths(), n)?;
    Ok(collect_rigged(configs, &|a, i, p| (-shift(a, s, i), p)))
}

/// `RC(μ, Λ) = { ψ(w) : w ∈ P(W(μ), Λ) }`.
pub fn rc_double_by_psi(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RiggedConfiguration>> {
    let mut out = p_set_double(mu, lam, n)?.iter().map(psi_rc).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `RC(μ, Λ)`.
pub fn rc_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RiggedConfiguration>> {
    rc_double_direct(mu, lam, n)
}

fn check_double_rank(lam: &DoublePartition, n: usize) -> Result<()> {
    if lam.s() + lam.t() > n {
        return Err(Error::RankTooSmall { n, need: lam.s() + lam.t() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_sets() {
        let rc = enumerate_rc(&p(&[1, 1]), &p(&[2]), 2).unwrap();
        assert_eq!(rc, vec![RiggedConfiguration::empty(p(&[1, 1]), 2)]);
        let rc = enumerate_rc(&p(&[1, 1]), &p(&[1, 1]), 2).unwrap();
        assert_eq!(rc.len(), 1);
        assert_eq!(rc[0].strings(1), vec![(1, 0)]);
        assert_eq!(enumerate_c(&p(&[1, 1]), &p(&[2]), 2).unwrap().len(), 1);
        assert_eq!(enumerate_c(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap().len(), 1);
    }

    #[test]
    fn label_blocks() {
        assert_eq!(label_multisets(2, 0, 1), vec![vec![1, 1], vec![1, 0], vec![0, 0]]);
        assert!(label_multisets(1, 0, -1).is_empty());
        assert_eq!(label_multisets(0, 0, -1), vec![Vec::<i64>::new()]);
    }

    #[test]
    fn appendix_three_sizes() {
        let lam = DoublePartition::new(p(&[2, 1]), p(&[2]));
        let mu = p(&[2, 2, 1]);
        let direct = rc_double_direct(&mu, &lam, 4).unwrap();
        assert_eq!(direct.len(), 6);
        assert_eq!(direct, rc_double_by_psi(&mu, &lam, 4).unwrap());
        let mut up: Vec<_> = direct.iter().map(|r| r.j_plus(2)).collect();
        up.sort();
        assert_eq!(up, enumerate_qm_double(&mu, &lam, 4).unwrap());
    }
}
