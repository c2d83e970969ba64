use std::collections::{BTreeSet, VecDeque};

use super::insertion::insert_word;
use super::skew::Tableau;
use super::word::Word;

/// Words reachable from `w` by one elementary Knuth transformation.
pub fn knuth_moves(w: &Word) -> BTreeSet<Word> {
    let a = w.letters();
    let mut out = BTreeSet::new();
    for j in 0..a.len().saturating_sub(2) {
        let (p, q, r) = (a[j], a[j + 1], a[j + 2]);
        // x z y <-> z x y, x <= y < z
        if (p <= r && r < q) || (q <= r && r < p) {
            let mut v = a.to_vec();
            v.swap(j, j + 1);
            out.insert(Word(v));
        }
        // y z x <-> y x z, x < y <= z
        if (r < p && p <= q) || (q < p && p <= r) {
            let mut v = a.to_vec();
            v.swap(j + 1, j + 2);
            out.insert(Word(v));
        }
    }
    out
}

/// Closure of `w` under [`knuth_moves`].
pub fn knuth_class(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for u in knuth_moves(&v) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Same insertion tableau.
pub fn knuth_equivalent(a: &Word, b: &Word) -> bool {
    let e = Tableau::empty();
    insert_word(a, &e).ok() == insert_word(b, &e).ok()
}
