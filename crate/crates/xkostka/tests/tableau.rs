use std::sync::OnceLock;

use proptest::prelude::*;

use xkostka::tableau::checks;
use xkostka::tableau::{
    charge, enumerate_bounded, enumerate_pairs, insert_word, knuth_class, knuth_equivalent, rectify, DoublePartition,
    Partition, SkewShape, Tableau, Word,
};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(10_000)
}

fn word(max_len: usize, letters: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=letters, 0..=max_len).prop_map(Word)
}

fn straight(max_len: usize, letters: usize) -> impl Strategy<Value = Tableau> {
    word(max_len, letters).prop_map(|w| insert_word(&w, &Tableau::empty()).unwrap())
}

fn row(max_len: usize, letters: usize) -> impl Strategy<Value = Word> {
    word(max_len, letters).prop_map(|mut w| {
        w.0.sort_unstable();
        w
    })
}

/// `b_m ⋯ b_1 a_m ⋯ a_1` built from two sorted rows, bumping `b` above `a`.
fn double_row(max_half: usize, letters: usize) -> impl Strategy<Value = Word> {
    (row(max_half, letters), prop::collection::vec(1..=3usize, max_half)).prop_map(|(a, gaps)| {
        let b: Vec<usize> = a.0.iter().zip(&gaps).map(|(x, g)| x + g).collect();
        let mut b = b;
        b.sort_unstable();
        let b: Vec<usize> = b.iter().zip(&a.0).map(|(&y, &x)| y.max(x + 1)).collect();
        Word(b.into_iter().chain(a.0).collect())
    })
}

fn partition_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..20usize, 0..=max_len).prop_map(|picks| {
        // fill 1, 2, … greedily in weight order, then permute by the picks
        let n = picks.len();
        let parts =
            if n == 0 { Partition::empty() } else { Partition::all(n)[picks[0] % Partition::all(n).len()].clone() };
        let mut letters: Vec<usize> =
            parts.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m)).collect();
        for (k, &r) in picks.iter().enumerate() {
            let j = r % letters.len();
            letters.swap(k, j);
        }
        Word(letters)
    })
}

fn skew_pool() -> &'static Vec<Tableau> {
    static POOL: OnceLock<Vec<Tableau>> = OnceLock::new();
    POOL.get_or_init(|| SkewShape::all_up_to(7).iter().flat_map(|s| enumerate_bounded(s, 3)).collect())
}

fn skew() -> impl Strategy<Value = Tableau> {
    any::<prop::sample::Index>().prop_map(|i| i.get(skew_pool()).clone())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn bumping_is_monotone(t in straight(8, 5), u in 1..=5usize, v in 1..=5usize) {
        prop_assert_eq!(checks::bump_monotone(&t, u.max(v), u.min(v)), Ok(()));
    }

    #[test]
    fn rows_insert_along_rows(t in straight(8, 5), w in row(6, 6)) {
        prop_assert_eq!(checks::row_insertion_rows(&w, &t), Ok(()));
    }

    #[test]
    fn double_rows_insert_along_double_rows(t in straight(6, 5), w in double_row(4, 5)) {
        prop_assert!(w.is_double_row().unwrap());
        prop_assert_eq!(checks::double_row_insertion_rows(&w, &t), Ok(()));
    }

    #[test]
    fn sentinel_lowers_insertion_rows(t in straight(6, 4), w in word(6, 5)) {
        prop_assert_eq!(checks::sentinel_rows(&w, &t), Ok(()));
    }

    #[test]
    fn charge_is_a_knuth_invariant(w in partition_word(8)) {
        prop_assert_eq!(checks::charge_knuth_invariant(&w), Ok(()));
    }

    #[test]
    fn rectification_is_order_independent(t in skew()) {
        prop_assert_eq!(checks::rectifications_agree(&t), Ok(()));
    }

    #[test]
    fn slides_keep_the_knuth_class(t in skew()) {
        prop_assert_eq!(checks::slides_keep_knuth_class(&t), Ok(()));
        prop_assert_eq!(checks::charge_rectification_invariant(&t), Ok(()));
        prop_assert_eq!(checks::row_sequence_fills(&t), Ok(()));
    }

    #[test]
    fn rs_round_trips(w in word(8, 4)) {
        prop_assert_eq!(checks::rs_round_trip(&w), Ok(()));
    }

    #[test]
    fn rectified_word_is_knuth_equivalent(t in skew()) {
        prop_assert!(knuth_equivalent(&t.word(), &rectify(&t).word()));
    }
}

#[test]
fn knuth_classes_have_constant_charge() {
    for size in 0..=6 {
        for mu in Partition::all(size) {
            let w = Word(mu.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m)).collect());
            let c = charge(&w).unwrap();
            assert!(knuth_class(&w).iter().all(|v| charge(v).unwrap() == c));
        }
    }
}

#[test]
fn gamma_is_a_charge_preserving_bijection() {
    for shape in SkewShape::all_up_to(6) {
        for mu in Partition::all(shape.size()) {
            checks::gamma_bijective(&shape, &mu).unwrap();
        }
    }
}

#[test]
fn pair_words_do_not_depend_on_the_shift() {
    for lam in DoublePartition::all(4) {
        for mu in Partition::all(4) {
            for t in enumerate_pairs(&lam, mu.parts(), false).unwrap() {
                let a = lam.lpp.part(0);
                assert_eq!(t.to_xi(a).unwrap().word(), t.to_xi(a + 2).unwrap().word());
                assert_eq!(t.to_xi(a).unwrap().word(), t.word());
            }
        }
    }
}
