use std::collections::{BTreeSet, HashMap};

use super::partition::SkewShape;
use super::skew::Tableau;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slide {
    /// Hole enters from the inner boundary and moves right/down.
    Upper,
    /// Hole enters from the outer boundary and moves left/up.
    Lower,
}

pub type Cell = (usize, usize);

/// A removable corner of the inner shape touching the skew shape from above
/// or from the left.
pub fn is_upper_position(shape: &SkewShape, (r, c): Cell) -> bool {
    shape.inner().is_removable(r, c) && (shape.contains_cell(r + 1, c) || shape.contains_cell(r, c + 1))
}

/// An addable cell of the outer shape touching the skew shape from below or
/// from the right.
pub fn is_lower_position(shape: &SkewShape, (r, c): Cell) -> bool {
    shape.outer().is_addable(r, c)
        && ((r > 0 && shape.contains_cell(r - 1, c)) || (c > 0 && shape.contains_cell(r, c - 1)))
}

pub fn upper_positions(shape: &SkewShape) -> Vec<Cell> {
    (0..shape.inner().length())
        .map(|r| (r, shape.inner().part(r) - 1))
        .filter(|&cell| is_upper_position(shape, cell))
        .collect()
}

pub fn lower_positions(shape: &SkewShape) -> Vec<Cell> {
    (0..=shape.outer().length())
        .map(|r| (r, shape.outer().part(r)))
        .filter(|&cell| is_lower_position(shape, cell))
        .collect()
}

/// One slide; returns the result and the cell where the hole stopped.
pub fn jdt_slide_traced(t: &Tableau, corner: Cell, dir: Slide) -> Result<(Tableau, Cell)> {
    let ok = match dir {
        Slide::Upper => is_upper_position(t.shape(), corner),
        Slide::Lower => is_lower_position(t.shape(), corner),
    };
    if !ok {
        return Err(Error::NotJdtPosition(corner.0, corner.1));
    }
    Ok(slide_unchecked(t, corner, dir))
}

pub fn jdt_slide(t: &Tableau, corner: Cell, dir: Slide) -> Result<Tableau> {
    jdt_slide_traced(t, corner, dir).map(|(t, _)| t)
}

/// Caller guarantees `corner` is a removable inner corner (upper) or an
/// addable outer cell (lower).
pub(crate) fn slide_unchecked(t: &Tableau, corner: Cell, dir: Slide) -> (Tableau, Cell) {
    let mut cells = t.cells();
    let mut pawn = corner;
    loop {
        let (r, c) = pawn;
        let next = match dir {
            Slide::Upper => {
                let right = cells.get(&(r, c + 1)).map(|&x| ((r, c + 1), x));
                let below = cells.get(&(r + 1, c)).map(|&x| ((r + 1, c), x));
                match (right, below) {
                    (Some(rt), Some(bl)) => Some(if bl.1 <= rt.1 { bl } else { rt }),
                    (a, b) => a.or(b),
                }
            }
            Slide::Lower => {
                let left = if c > 0 { cells.get(&(r, c - 1)).map(|&x| ((r, c - 1), x)) } else { None };
                let above = if r > 0 { cells.get(&(r - 1, c)).map(|&x| ((r - 1, c), x)) } else { None };
                match (left, above) {
                    (Some(lt), Some(ab)) => Some(if ab.1 >= lt.1 { ab } else { lt }),
                    (a, b) => a.or(b),
                }
            }
        };
        match next {
            Some((from, x)) => {
                cells.remove(&from);
                cells.insert(pawn, x);
                pawn = from;
            }
            None => break,
        }
    }
    let shape = t.shape();
    let new_shape = match dir {
        Slide::Upper => {
            SkewShape::new(shape.outer().with_cell_removed(pawn.0), shape.inner().with_cell_removed(corner.0))
        }
        Slide::Lower => SkewShape::new(shape.outer().with_cell_added(corner.0), shape.inner().with_cell_added(pawn.0)),
    }
    .expect("slides keep a skew shape");
    let out = Tableau::from_cells(new_shape, &cells).expect("slides keep a tableau");
    (out, pawn)
}

/// Rectification by upper slides, always taking the first inner corner.
pub fn rectify_by_slides(t: &Tableau) -> Tableau {
    let mut cur = t.clone();
    while !cur.is_straight() {
        let inner = cur.shape().inner();
        let r = (0..inner.length()).find(|&r| inner.is_removable(r, inner.part(r) - 1)).expect("corner");
        let c = inner.part(r) - 1;
        cur = slide_unchecked(&cur, (r, c), Slide::Upper).0;
    }
    cur
}

/// Every tableau reachable by rectifying in every possible corner order.
pub fn all_rectifications(t: &Tableau) -> BTreeSet<Tableau> {
    fn go(t: &Tableau, memo: &mut HashMap<Tableau, BTreeSet<Tableau>>) -> BTreeSet<Tableau> {
        if t.is_straight() {
            return BTreeSet::from([t.clone()]);
        }
        if let Some(v) = memo.get(t) {
            return v.clone();
        }
        let inner = t.shape().inner().clone();
        let mut out = BTreeSet::new();
        for r in 0..inner.length() {
            let c = inner.part(r) - 1;
            if inner.is_removable(r, c) {
                let (next, _) = slide_unchecked(t, (r, c), Slide::Upper);
                out.extend(go(&next, memo));
            }
        }
        memo.insert(t.clone(), out.clone());
        out
    }
    go(t, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::partition::Partition;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn example() -> Tableau {
        let shape = SkewShape::new(p(&[4, 4, 2, 1]), p(&[2, 1])).unwrap();
        Tableau::new(shape, vec![vec![2, 3], vec![1, 4, 6], vec![1, 5], vec![3]]).unwrap()
    }

    #[test]
    fn worked_example_upper() {
        let t = jdt_slide(&example(), (0, 1), Slide::Upper).unwrap();
        let want = Tableau::new(
            SkewShape::new(p(&[4, 3, 2, 1]), p(&[1, 1])).unwrap(),
            vec![vec![1, 2, 3], vec![4, 6], vec![1, 5], vec![3]],
        )
        .unwrap();
        assert_eq!(t, want);
    }

    #[test]
    fn worked_example_lower() {
        let t = jdt_slide(&example(), (2, 2), Slide::Lower).unwrap();
        let want = Tableau::new(
            SkewShape::new(p(&[4, 4, 3, 1]), p(&[2, 2])).unwrap(),
            vec![vec![2, 3], vec![4, 6], vec![1, 1, 5], vec![3]],
        )
        .unwrap();
        assert_eq!(t, want);
    }

    #[test]
    fn straight_shape_has_no_upper_position() {
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert!(upper_positions(t.shape()).is_empty());
        assert_eq!(jdt_slide(&t, (0, 0), Slide::Upper), Err(Error::NotJdtPosition(0, 0)));
    }

    #[test]
    fn order_independence_on_example() {
        let all = all_rectifications(&example());
        assert_eq!(all.len(), 1);
        assert_eq!(all.into_iter().next().unwrap(), rectify_by_slides(&example()));
    }
}
