use super::partition::SkewShape;
use super::skew::Tableau;
use super::word::Word;
use crate::error::{Error, Result};

fn column_insert_rows(rows: &mut Vec<Vec<usize>>, a: usize) -> usize {
    let mut x = a;
    let mut c = 0;
    loop {
        let height = rows.iter().take_while(|row| row.len() > c).count();
        match (0..height).find(|&r| rows[r][c] >= x) {
            Some(r) => {
                std::mem::swap(&mut rows[r][c], &mut x);
                c += 1;
            }
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[height].len(), c);
                rows[height].push(x);
                return height + 1;
            }
        }
    }
}

fn straight_rows(t: &Tableau) -> Result<Vec<Vec<usize>>> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    Ok(t.rows().to_vec())
}

/// `[a → T]` by column bumping; returns the new tableau and the 1-based row
/// `R(a → T)` of the added box.
pub fn column_insert(a: usize, t: &Tableau) -> Result<(Tableau, usize)> {
    if a == 0 {
        return Err(Error::InvalidLetter(a));
    }
    let mut rows = straight_rows(t)?;
    let r = column_insert_rows(&mut rows, a);
    Ok((Tableau::from_rows(rows)?, r))
}

/// `[w → T]`, inserting the rightmost written letter first.
pub fn insert_word(w: &Word, t: &Tableau) -> Result<Tableau> {
    let mut rows = straight_rows(t)?;
    for a in w.insertion_order() {
        if a == 0 {
            return Err(Error::InvalidLetter(a));
        }
        column_insert_rows(&mut rows, a);
    }
    Tableau::from_rows(rows)
}

/// Row indices `R(a_k → [a_{k-1} ⋯ a_1 → T])` for `k = 1, 2, …`.
pub fn insertion_rows(w: &Word, t: &Tableau) -> Result<Vec<usize>> {
    let mut rows = straight_rows(t)?;
    Ok(w.insertion_order().map(|a| column_insert_rows(&mut rows, a)).collect())
}

/// Rectification `[w(T) → ∅]`.
pub fn rectify(t: &Tableau) -> Tableau {
    insert_word(&t.word(), &Tableau::empty()).expect("words of tableaux have positive letters")
}

/// RS correspondence `w ↦ (Q_w, P_w)`.
pub fn rs(w: &Word) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (t, a) in w.insertion_order().enumerate() {
        let r = column_insert_rows(&mut p, a) - 1;
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t + 1);
    }
    (Tableau::from_rows(q).expect("recording tableau"), Tableau::from_rows(p).expect("insertion tableau"))
}

/// Inverse of [`rs`].
pub fn rs_inverse(q: &Tableau, p: &Tableau) -> Result<Word> {
    if q.shape() != p.shape() || !p.is_straight() {
        return Err(Error::Invalid("recording and insertion tableaux differ in shape".into()));
    }
    let m = q.size();
    let mut qrows = q.rows().to_vec();
    let mut prows = p.rows().to_vec();
    let mut letters = Vec::with_capacity(m);
    for t in (1..=m).rev() {
        let r = qrows
            .iter()
            .position(|row| row.last() == Some(&t))
            .ok_or_else(|| Error::Invalid(format!("recording tableau is not standard at {t}")))?;
        qrows[r].pop();
        let c = prows[r].len() - 1;
        let mut x = prows[r].pop().expect("same shape");
        if prows[r].is_empty() {
            prows.truncate(r);
            qrows.truncate(r);
        }
        for col in (0..c).rev() {
            let height = prows.iter().take_while(|row| row.len() > col).count();
            let pos = (0..height)
                .rev()
                .find(|&i| prows[i][col] <= x)
                .ok_or_else(|| Error::Invalid("not an insertion tableau".into()))?;
            std::mem::swap(&mut prows[pos][col], &mut x);
        }
        letters.push(x);
    }
    Word::new(letters)
}

/// `σ(T) = b_N ⋯ b_1` with `b_i = R(a_i → [a_{i-1} ⋯ a_1 → ∅])`.
pub fn row_sequence(t: &Tableau) -> Word {
    let mut rs = insertion_rows(&t.word(), &Tableau::empty()).expect("valid word");
    rs.reverse();
    Word(rs)
}

/// `Γ̃(T) = (D_T, jdt(T))`.
pub fn gamma(t: &Tableau) -> Result<(Tableau, Tableau)> {
    let d = Tableau::fill(t.shape(), &row_sequence(t))?;
    Ok((d, rectify(t)))
}

/// The unique tableau of shape `λ` and weight `λ`.
pub fn superstandard(shape: &SkewShape) -> Result<Tableau> {
    if !shape.is_straight() {
        return Err(Error::NotStraight);
    }
    Tableau::from_rows(shape.outer().parts().iter().enumerate().map(|(r, &l)| vec![r + 1; l]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::word::w;

    fn rows(v: Vec<Vec<usize>>) -> Tableau {
        Tableau::from_rows(v).unwrap()
    }

    #[test]
    fn column_insert_examples() {
        let (t, r) = column_insert(1, &Tableau::empty()).unwrap();
        assert_eq!((t, r), (rows(vec![vec![1]]), 1));
        let (t, r) = column_insert(2, &rows(vec![vec![1, 1]])).unwrap();
        assert_eq!((t, r), (rows(vec![vec![1, 1], vec![2]]), 2));
        assert!(column_insert(0, &Tableau::empty()).is_err());
    }

    #[test]
    fn insert_word_examples() {
        let e = Tableau::empty();
        assert_eq!(insert_word(&w("2 1 1"), &e).unwrap(), rows(vec![vec![1, 1], vec![2]]));
        assert_eq!(insert_word(&w("1 2 3"), &e).unwrap(), rows(vec![vec![1, 2, 3]]));
        assert_eq!(insert_word(&w("3 2 1"), &e).unwrap(), rows(vec![vec![1], vec![2], vec![3]]));
        let t = rows(vec![vec![1, 2], vec![3]]);
        assert_eq!(insert_word(&w(""), &t).unwrap(), t);
    }

    #[test]
    fn rs_examples() {
        assert_eq!(rs(&w("1")), (rows(vec![vec![1]]), rows(vec![vec![1]])));
        assert_eq!(rs(&w("2 1")), (rows(vec![vec![1], vec![2]]), rows(vec![vec![1], vec![2]])));
        assert_eq!(rs(&w("1 2")), (rows(vec![vec![1, 2]]), rows(vec![vec![1, 2]])));
    }

    #[test]
    fn rs_round_trip_small() {
        let word = w("3 1 2 2 1 3 1");
        let (q, p) = rs(&word);
        assert_eq!(rs_inverse(&q, &p).unwrap(), word);
    }

    #[test]
    fn row_sequences() {
        assert_eq!(row_sequence(&rows(vec![vec![1, 1]])), w("1 1"));
        assert_eq!(row_sequence(&rows(vec![vec![1], vec![2]])), w("2 1"));
        assert_eq!(row_sequence(&rows(vec![vec![1, 1], vec![2]])), w("2 1 1"));
    }

    #[test]
    fn gamma_on_straight_tableau() {
        let t = rows(vec![vec![1, 1], vec![2]]);
        let (d, s) = gamma(&t).unwrap();
        assert_eq!(s, t);
        assert_eq!(d, superstandard(t.shape()).unwrap());
    }
}
