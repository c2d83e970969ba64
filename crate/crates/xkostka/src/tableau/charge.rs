use super::partition::is_partition_weight;
use super::skew::Tableau;
use super::word::Word;
use crate::error::{Error, Result};

/// Lascoux–Schützenberger charge of a word of partition weight.
///
/// Standard subwords are peeled off by scanning the written word from the
/// right for a 1, then leftwards (cyclically) for 2, 3, …. A letter `r+1`
/// written to the right of `r` raises the index by one.
pub fn charge(w: &Word) -> Result<usize> {
    let weight = w.weight();
    if !is_partition_weight(&weight) {
        return Err(Error::WeightNotPartition(weight));
    }
    let a = w.letters();
    let n = a.len();
    let mut used = vec![false; n];
    let mut left = weight;
    let mut total = 0;
    loop {
        let k = left.iter().take_while(|&&c| c > 0).count();
        if k == 0 {
            return Ok(total);
        }
        let mut pos = (0..n).rev().find(|&j| !used[j] && a[j] == 1).expect("weight has a 1");
        used[pos] = true;
        let mut index = 0;
        for r in 2..=k {
            let q = match (0..pos).rev().find(|&j| !used[j] && a[j] == r) {
                Some(q) => q,
                None => {
                    index += 1;
                    (pos + 1..n).rev().find(|&j| !used[j] && a[j] == r).expect("weight has an r")
                }
            };
            total += index;
            used[q] = true;
            pos = q;
        }
        for c in left.iter_mut().take(k) {
            *c -= 1;
        }
    }
}

pub fn charge_tableau(t: &Tableau) -> Result<usize> {
    charge(&t.word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::word::w;

    #[test]
    fn standard_words() {
        assert_eq!(charge(&w("3 2 1")), Ok(0));
        assert_eq!(charge(&w("1 2 3")), Ok(3));
        assert_eq!(charge(&w("3 1 2")), Ok(2));
        assert_eq!(charge(&w("2 1 3")), Ok(1));
        assert_eq!(charge(&w("")), Ok(0));
    }

    #[test]
    fn tableaux() {
        let t = |v: Vec<Vec<usize>>| Tableau::from_rows(v).unwrap();
        assert_eq!(charge_tableau(&t(vec![vec![1, 1], vec![2]])), Ok(0));
        assert_eq!(charge_tableau(&t(vec![vec![1, 2, 3]])), Ok(3));
        assert_eq!(charge_tableau(&t(vec![vec![1], vec![2], vec![3]])), Ok(0));
        assert_eq!(charge_tableau(&t(vec![vec![1, 1, 2, 2]])), Ok(2));
        assert_eq!(charge_tableau(&t(vec![vec![1, 1, 2], vec![2]])), Ok(1));
    }

    #[test]
    fn rejects_non_partition_weight() {
        assert!(charge(&w("2 2 1")).is_err());
        assert!(charge(&w("2")).is_err());
    }
}
