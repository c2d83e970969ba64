use super::psi::psi_inverse;
use super::row_tuple::RowTuple;
use super::tensor::TensorElement;
use super::Crystal;
use crate::error::{Error, Result};
use crate::tableau::{charge, enumerate_pairs, DoublePartition, Partition, SkewShape, Tableau, Word};

/// Row tuples with `|w_i| = lengths[i-1]` (zero past the end) and content `μ`.
pub fn row_tuples_with_lengths(mu: &Partition, lengths: &[usize], n: usize) -> Result<Vec<RowTuple>> {
    if lengths.iter().rposition(|&l| l > 0).map_or(0, |i| i + 1) > n {
        return Err(Error::RankTooSmall { n, need: lengths.len() });
    }
    let total: usize = lengths.iter().sum();
    if total != mu.size() {
        return Err(Error::SizeMismatch(total, mu.size()));
    }
    let mut out = Vec::new();
    let mut left = mu.parts().to_vec();
    let mut rows = Vec::new();
    fill_rows(lengths, &mut left, &mut rows, &mut out, n);
    out.sort();
    Ok(out)
}

fn fill_rows(lengths: &[usize], left: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, out: &mut Vec<RowTuple>, n: usize) {
    let i = rows.len();
    if i == lengths.len() {
        out.push(RowTuple::new(rows.clone(), n).expect("sorted rows"));
        return;
    }
    let mut row = Vec::new();
    choose_row(lengths[i], 0, left, &mut row, &mut |left, row| {
        rows.push(row.to_vec());
        fill_rows(lengths, left, rows, out, n);
        rows.pop();
    });
}

fn choose_row(
    len: usize,
    from: usize,
    left: &mut Vec<usize>,
    row: &mut Vec<usize>,
    k: &mut dyn FnMut(&mut Vec<usize>, &[usize]),
) {
    if row.len() == len {
        k(left, row);
        return;
    }
    for x in from..left.len() {
        if left[x] > 0 {
            left[x] -= 1;
            row.push(x + 1);
            choose_row(len, x, left, row, k);
            row.pop();
            left[x] += 1;
        }
    }
}

/// `P(W(μ), λ)`: elements of weight `λ` killed by every `e_i`.
pub fn highest_weight_set(mu: &Partition, lam: &Partition, n: usize) -> Result<Vec<RowTuple>> {
    if lam.length() > n {
        return Err(Error::RankTooSmall { n, need: lam.length() });
    }
    let all = row_tuples_with_lengths(mu, lam.parts(), n)?;
    Ok(all.into_iter().filter(|w| w.is_highest()).collect())
}

/// `P(W(μ), Λ)`: row lengths `(λ′, λ″)`, with `w_s ∗ ⋯ ∗ w_1` compatible
/// with `λ′` and `w_{s+t} ∗ ⋯ ∗ w_{s+1}` compatible with `λ″`.
pub fn p_set_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RowTuple>> {
    check_rank(lam, n)?;
    let all = row_tuples_with_lengths(mu, &lam.row_lengths(), n)?;
    let s = lam.s();
    let lp = SkewShape::straight(lam.lp.clone());
    let lpp = SkewShape::straight(lam.lpp.clone());
    let stacked = |rows: &[Vec<usize>]| Word(rows.iter().rev().flatten().copied().collect());
    Ok(all
        .into_iter()
        .filter(|w| {
            let rows = w.rows();
            Tableau::compatible(&lp, &stacked(&rows[..s])) && Tableau::compatible(&lpp, &stacked(&rows[s..]))
        })
        .collect())
}

/// `P(W(μ), Λ)` by the operator condition: `e_i w = 0` for `i ≠ s`.
pub fn p_set_double_by_operators(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RowTuple>> {
    check_rank(lam, n)?;
    let s = lam.s();
    let all = row_tuples_with_lengths(mu, &lam.row_lengths(), n)?;
    Ok(all.into_iter().filter(|w| (1..n).filter(|&i| i != s).all(|i| w.e(i).is_none())).collect())
}

/// `{ w_T : T ∈ Tab(Λ, μ) }`.
pub fn p_set_double_by_tableaux(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<Vec<RowTuple>> {
    check_rank(lam, n)?;
    let mut out = enumerate_pairs(lam, mu.parts(), false)?
        .iter()
        .map(|t| RowTuple::new(t.stacked_rows(), n))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn check_rank(lam: &DoublePartition, n: usize) -> Result<()> {
    if lam.s() + lam.t() > n {
        return Err(Error::RankTooSmall { n, need: lam.s() + lam.t() });
    }
    Ok(())
}

/// `E(b)`, defined as the charge of `w_n ∗ ⋯ ∗ w_1` for `w = Ψ⁻¹(b)`.
pub fn energy(b: &TensorElement) -> usize {
    energy_w(&psi_inverse(b))
}

pub fn energy_w(w: &RowTuple) -> usize {
    charge(&w.word()).expect("content of a row tuple in W(mu) is a partition")
}
