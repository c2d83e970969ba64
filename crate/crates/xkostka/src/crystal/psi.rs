use super::row_tuple::RowTuple;
use super::tensor::TensorElement;
use crate::error::{Error, Result};
use crate::tableau::Partition;

/// `Ψ(w)`: the letter `i` appears in `b_k` as often as `k` appears in `w_i`.
pub fn psi(w: &RowTuple) -> Result<TensorElement> {
    let mu = w.mu()?;
    let mut factors = vec![Vec::new(); mu.length()];
    for (i, row) in w.rows().iter().enumerate() {
        for &k in row {
            factors[k - 1].push(i + 1);
        }
    }
    for b in &mut factors {
        b.sort_unstable();
    }
    TensorElement::new(factors, w.n())
}

pub fn psi_inverse(b: &TensorElement) -> RowTuple {
    let mut rows = vec![Vec::new(); b.n()];
    for (k, f) in b.factors().iter().enumerate() {
        for &i in f {
            rows[i - 1].push(k + 1);
        }
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    RowTuple::new(rows, b.n()).expect("rows sorted, letters positive")
}

/// Weakly increasing words of length `m` over `1..=n`, lexicographic.
pub(crate) fn multisets(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, lo: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in lo..=n {
            cur.push(x);
            go(m, x, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 1, n, &mut Vec::new(), &mut out);
    out
}

/// All of `B(μ)` over letters `1..=n`.
pub fn enumerate_b(mu: &Partition, n: usize) -> Result<Vec<TensorElement>> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, need: 2 });
    }
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &m in mu.parts() {
        let rows = multisets(m, n);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                rows.iter().map(move |r| {
                    let mut p = prefix.clone();
                    p.push(r.clone());
                    p
                })
            })
            .collect();
    }
    acc.into_iter().map(|f| TensorElement::new(f, n)).collect()
}

/// All of `W(μ)` with `n` rows, sorted.
pub fn enumerate_w(mu: &Partition, n: usize) -> Result<Vec<RowTuple>> {
    let mut out: Vec<RowTuple> = enumerate_b(mu, n)?.iter().map(psi_inverse).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_tuple() {
        let w = RowTuple::new(vec![vec![2, 2, 3], vec![1, 1, 3], vec![1], vec![4], vec![]], 5).unwrap();
        let b = psi(&w).unwrap();
        assert_eq!(b.to_string(), "4⊗12⊗11⊗223");
        assert_eq!(w.to_string(), "(-,4,1,113,223)");
        assert_eq!(psi_inverse(&b), w);
    }

    #[test]
    fn empty_mu() {
        let w = RowTuple::new(vec![], 3).unwrap();
        let b = psi(&w).unwrap();
        assert!(b.factors().is_empty());
        assert_eq!(psi_inverse(&b), w);
    }

    #[test]
    fn sizes() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(enumerate_b(&mu, 3).unwrap().len(), 18);
        assert_eq!(multisets(2, 3).len(), 6);
        assert!(enumerate_b(&mu, 1).is_err());
    }
}
