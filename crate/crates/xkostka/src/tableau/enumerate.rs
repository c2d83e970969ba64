use std::collections::BTreeMap;

use super::partition::{DoublePartition, Partition, SkewShape};
use super::skew::{Tableau, TableauPair};
use crate::error::{Error, Result};

/// Fills `shape` in row-major order. With `counts`, letter `k` is used
/// exactly `counts[k-1]` times; otherwise letters range over `1..=max`.
fn backtrack(shape: &SkewShape, counts: Option<Vec<usize>>, max: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = (0..shape.num_rows())
        .flat_map(|r| {
            let (a, b) = shape.row_span(r);
            (a..b).map(move |c| (r, c))
        })
        .collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();

    struct Ctx<'a> {
        shape: &'a SkewShape,
        cells: &'a [(usize, usize)],
        max: usize,
    }

    fn go(
        ctx: &Ctx<'_>,
        k: usize,
        fill: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Option<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k == ctx.cells.len() {
            out.push(Tableau::from_cells(ctx.shape.clone(), fill).expect("valid filling"));
            return;
        }
        let (r, c) = ctx.cells[k];
        let lo_left = if c > 0 { fill.get(&(r, c - 1)).copied().unwrap_or(1) } else { 1 };
        let lo_above = if r > 0 { fill.get(&(r - 1, c)).map(|x| x + 1).unwrap_or(1) } else { 1 };
        let lo = lo_left.max(lo_above);
        for x in lo..=ctx.max {
            if let Some(cs) = counts.as_mut() {
                if cs[x - 1] == 0 {
                    continue;
                }
                cs[x - 1] -= 1;
            }
            fill.insert((r, c), x);
            go(ctx, k + 1, fill, counts, out);
            fill.remove(&(r, c));
            if let Some(cs) = counts.as_mut() {
                cs[x - 1] += 1;
            }
        }
    }

    let mut counts = counts;
    let ctx = Ctx { shape, cells: &cells, max };
    go(&ctx, 0, &mut fill, &mut counts, &mut out);
    out.sort_by_cached_key(|t| t.word());
    out
}

/// `Tab(λ−ρ, μ)`, or `Tab⁰(λ−ρ, μ)` when `lattice_only`.
pub fn enumerate_tableaux(shape: &SkewShape, weight: &[usize], lattice_only: bool) -> Result<Vec<Tableau>> {
    let total: usize = weight.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch(shape.size(), total));
    }
    let mut out = backtrack(shape, Some(weight.to_vec()), weight.len());
    if lattice_only {
        out.retain(|t| t.word().is_lattice());
    }
    Ok(out)
}

/// Every semistandard filling of `shape` with letters in `1..=n`.
pub fn enumerate_bounded(shape: &SkewShape, n: usize) -> Vec<Tableau> {
    backtrack(shape, None, n)
}

/// `Tab(Λ, μ)`, or `Tab⁰(Λ, μ)` when `lattice_only`.
pub fn enumerate_pairs(lam: &DoublePartition, weight: &[usize], lattice_only: bool) -> Result<Vec<TableauPair>> {
    let xi = lam.xi_shape(lam.lpp.part(0))?;
    let mut out = enumerate_tableaux(&xi, weight, lattice_only)?
        .into_iter()
        .map(|t| TableauPair::from_xi(&t, lam))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_cached_key(|t| t.word());
    Ok(out)
}

/// `c^η_{λ′,λ″} = |Tab⁰((λ′,λ″), η)|`.
pub fn lr_coefficient(lp: &Partition, lpp: &Partition, eta: &Partition) -> Result<usize> {
    if lp.size() + lpp.size() != eta.size() {
        return Err(Error::SizeMismatch(lp.size() + lpp.size(), eta.size()));
    }
    let lam = DoublePartition::new(lp.clone(), lpp.clone());
    Ok(enumerate_pairs(&lam, eta.parts(), true)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let sh = SkewShape::straight(p(&[2, 1]));
        assert_eq!(enumerate_tableaux(&sh, &[1, 1, 1], false).unwrap().len(), 2);
        assert!(enumerate_tableaux(&sh, &[1, 1], false).is_err());
        let lam = DoublePartition::new(p(&[2, 1]), p(&[2]));
        assert_eq!(enumerate_pairs(&lam, &[2, 2, 1], false).unwrap().len(), 6);
        let lam = DoublePartition::new(p(&[1]), p(&[1]));
        assert_eq!(enumerate_pairs(&lam, &[2], true).unwrap().len(), 1);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[]), &p(&[2, 1])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), Ok(2));
    }

    #[test]
    fn bounded() {
        // |SSYT((2,1), ≤3)| = 8
        assert_eq!(enumerate_bounded(&SkewShape::straight(p(&[2, 1])), 3).len(), 8);
    }
}
