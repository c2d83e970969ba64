use std::collections::BTreeSet;

use proptest::prelude::*;

use xkostka::appendix::{check_double_set, check_trace, double_set_fixture, pair_tuple, trace_fixtures};
use xkostka::crystal::{enumerate_w, highest_weight_set, p_set_double, Crystal, RowTuple};
use xkostka::rigged::lemmas::{concave_ends_bound_interior, is_concave, vacancy_convexity_holds};
use xkostka::rigged::{
    enumerate_c, enumerate_qm_double, enumerate_rc, psi_rc, psi_rc_inverse, psi_rc_traced, rc_double, rc_double_by_psi,
    PsiTable, RiggedConfiguration,
};
use xkostka::tableau::{enumerate_pairs, DoublePartition, Partition};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn bundled_fixtures_match_files_on_disk() {
    for name in ["appendix1.json", "appendix2.json", "appendix3.json"] {
        let text = std::fs::read_to_string(fixture_path(name)).unwrap();
        let _: serde_json::Value = serde_json::from_str(&text).unwrap();
    }
    assert_eq!(trace_fixtures().len(), 2);
    assert_eq!(double_set_fixture().entries.len(), 6);
}

#[test]
fn traces_reproduce_the_worked_examples() {
    for f in trace_fixtures() {
        assert_eq!(f.steps.len(), 15);
        check_trace(&f).unwrap();
    }
}

#[test]
fn trace_steps_record_lengths_and_i0() {
    let f = &trace_fixtures()[0];
    let lam = DoublePartition::new(p(&f.lp), p(&f.lpp));
    let w = pair_tuple(&f.plus, &f.minus, &lam, &p(&f.mu), f.n).unwrap();
    for step in psi_rc_traced(&w).unwrap() {
        assert_eq!(step.lengths.len(), step.rank);
        assert!(step.lengths.windows(2).all(|x| x[0] <= x[1]));
        if let Some(&first) = step.lengths.first() {
            assert!(step.i0 <= first);
        }
        assert!(step.rc.is_valid());
    }
}

#[test]
fn first_example_inverts() {
    let f = &trace_fixtures()[0];
    let lam = DoublePartition::new(p(&f.lp), p(&f.lpp));
    let mu = p(&f.mu);
    let w = pair_tuple(&f.plus, &f.minus, &lam, &mu, f.n).unwrap();
    let rc = psi_rc(&w).unwrap();
    assert_eq!(psi_rc_inverse(&rc, &mu, f.n).unwrap(), w);
}

#[test]
fn double_set_example() {
    let f = double_set_fixture();
    check_double_set(&f).unwrap();
    let lam = DoublePartition::new(p(&f.lp), p(&f.lpp));
    let mu = p(&f.mu);
    assert_eq!(rc_double(&mu, &lam, f.n).unwrap(), rc_double_by_psi(&mu, &lam, f.n).unwrap());
    let mut up: Vec<_> = rc_double(&mu, &lam, 4).unwrap().iter().map(|r| r.j_plus(2)).collect();
    up.sort();
    assert_eq!(up, enumerate_qm_double(&mu, &lam, 4).unwrap());
}

#[test]
fn intermediate_configurations_are_valid_and_convex() {
    for size in 1..=4 {
        for mu in Partition::all(size) {
            for w in enumerate_w(&mu, size.max(2)).unwrap() {
                for step in psi_rc_traced(&w).unwrap() {
                    assert!(step.rc.is_valid(), "{w} step {}", step.i);
                    assert!(vacancy_convexity_holds(step.rc.config()), "{w} step {}", step.i);
                    let c = step.rc.config();
                    for a in 1..c.n {
                        for i in 0..=c.max_length() + 1 {
                            assert_eq!(c.vacancy(a, i), c.vacancy_general(a, i));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn psi_preserves_weight_and_is_injective() {
    for size in 0..=4 {
        for mu in Partition::all(size) {
            let n = size.max(2);
            let table = PsiTable::new(&mu, n).unwrap();
            for w in enumerate_w(&mu, n).unwrap() {
                let rc = table.psi(&w).unwrap();
                assert_eq!(rc.weight(), w.weight(), "{w}");
                assert_eq!(table.inverse(rc).unwrap(), &w);
            }
        }
    }
}

#[test]
fn highest_tuples_biject_onto_rc() {
    for size in 0..=5 {
        for mu in Partition::all(size) {
            for lam in Partition::all(size) {
                let n = size.max(2);
                let mut image: Vec<RiggedConfiguration> =
                    highest_weight_set(&mu, &lam, n).unwrap().iter().map(|w| psi_rc(w).unwrap()).collect();
                image.sort();
                let rc = enumerate_rc(&mu, &lam, n).unwrap();
                assert_eq!(image, rc, "μ = {mu}, λ = {lam}");
                assert!(rc.iter().all(|r| r.is_valid() && r.is_highest()));
                let configs: BTreeSet<_> = rc.iter().map(|r| r.config().clone()).collect();
                assert_eq!(configs, enumerate_c(&mu, &lam, n).unwrap().into_iter().collect());
            }
        }
    }
}

#[test]
fn qm_counts_tableaux() {
    for size in 0..=5 {
        for mu in Partition::all(size) {
            for lam in DoublePartition::all(size) {
                let n = size.max(2);
                let qm = enumerate_qm_double(&mu, &lam, n).unwrap();
                assert_eq!(qm.len(), enumerate_pairs(&lam, mu.parts(), false).unwrap().len());
            }
        }
    }
}

#[test]
fn shifted_bounds_hold_throughout_psi_on_double_sets() {
    for size in 0..=5 {
        for mu in Partition::all(size) {
            for lam in DoublePartition::all(size) {
                let n = size.max(2);
                for w in p_set_double(&mu, &lam, n).unwrap() {
                    for step in psi_rc_traced(&w).unwrap() {
                        assert!(step.rc.level_condition(lam.s()), "{w} step {}", step.i);
                    }
                }
            }
        }
    }
}

#[test]
fn empty_tuple_has_empty_trace() {
    let w = RowTuple::new(vec![], 3).unwrap();
    assert!(psi_rc_traced(&w).unwrap().is_empty());
    assert_eq!(psi_rc(&w).unwrap(), RiggedConfiguration::empty(Partition::empty(), 3));
}

#[test]
fn rigged_json_round_trips() {
    for w in enumerate_w(&p(&[2, 1, 1]), 3).unwrap() {
        let rc = psi_rc(&w).unwrap();
        let s = serde_json::to_string(&rc).unwrap();
        assert_eq!(serde_json::from_str::<RiggedConfiguration>(&s).unwrap(), rc);
    }
}

fn concave_sequence() -> impl Strategy<Value = Vec<i64>> {
    (-5i64..5, prop::collection::vec(-4i64..4, 0..10)).prop_map(|(start, mut steps)| {
        steps.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![start];
        for d in steps {
            out.push(out.last().unwrap() + d);
        }
        out
    })
}

proptest! {
    #[test]
    fn concave_sequences_with_nonnegative_ends(a in concave_sequence()) {
        prop_assert!(is_concave(&a));
        prop_assert!(concave_ends_bound_interior(&a));
    }
}
