use num_bigint::BigInt;

use xkostka::appendix::double_set_fixture;
use xkostka::kostka::{
    double_kostka, double_kostka_energy, double_kostka_lr, fermionic, fermionic_double, fermionic_double_route,
    fermionic_rigged, kostka_1d, kostka_charge, oned_sum, oned_sum_double, verify, DoubleRoute, KostkaRequest, Method,
    Target,
};
use xkostka::rigged::rc_double;
use xkostka::tableau::{enumerate_pairs, enumerate_tableaux, DoublePartition, Partition, SkewShape};
use xkostka::{n_of, Error, LaurentPoly};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_i64_terms(terms)
}

#[test]
fn kostka_examples() {
    for size in 0..=6 {
        for lam in Partition::all(size) {
            assert_eq!(kostka_charge(&lam, &lam).unwrap(), LaurentPoly::one());
        }
        for mu in Partition::all(size) {
            let row = if size == 0 { Partition::empty() } else { p(&[size]) };
            assert_eq!(kostka_charge(&row, &mu).unwrap(), LaurentPoly::t_pow(n_of(&mu)));
        }
    }
    assert_eq!(kostka_charge(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly(&[(1, 1), (2, 1)]));
    assert_eq!(kostka_1d(&p(&[2]), &p(&[1, 1]), 2).unwrap(), LaurentPoly::t());
    assert!(kostka_1d(&p(&[1, 1, 1]), &p(&[3]), 3).unwrap().is_zero());
    assert!(matches!(kostka_charge(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch(..))));
    assert!(matches!(kostka_1d(&p(&[1, 1, 1]), &p(&[3]), 2), Err(Error::RankTooSmall { .. })));
}

#[test]
fn fermionic_examples() {
    assert_eq!(fermionic(&p(&[1, 1]), &p(&[2]), 2).unwrap(), LaurentPoly::one());
    assert_eq!(fermionic(&p(&[1, 1]), &p(&[1, 1]), 2).unwrap(), LaurentPoly::t());
    for size in 1..=6 {
        for mu in Partition::all(size) {
            assert_eq!(fermionic(&mu, &p(&[size]), size.max(2)).unwrap(), LaurentPoly::one());
        }
    }
}

#[test]
fn single_routes_agree_at_six() {
    for mu in Partition::all(6) {
        for lam in Partition::all(6) {
            let k = kostka_charge(&lam, &mu).unwrap();
            assert_eq!(kostka_1d(&lam, &mu, 6).unwrap(), k);
            let m = fermionic(&mu, &lam, 6).unwrap();
            assert_eq!(m.subst_inverse().shift(n_of(&mu)), k);
            assert_eq!(fermionic_rigged(&mu, &lam, 6).unwrap(), m);
            assert_eq!(oned_sum(&mu, &lam, 6).unwrap(), k);
            let count = enumerate_tableaux(&SkewShape::straight(lam.clone()), mu.parts(), false).unwrap().len();
            assert_eq!(k.eval_one(), BigInt::from(count));
            assert!(k.has_nonnegative_coefficients());
        }
    }
}

#[test]
fn double_kostka_examples() {
    let lam = DoublePartition::new(p(&[1]), p(&[1]));
    assert_eq!(double_kostka(&lam, &p(&[1, 1])).unwrap(), poly(&[(1, 1), (3, 1)]));
    for size in 0..=5 {
        for inner in Partition::all(size) {
            let lam = DoublePartition::new(Partition::empty(), inner.clone());
            let right = DoublePartition::new(inner.clone(), Partition::empty());
            for mu in Partition::all(size) {
                let k = kostka_charge(&inner, &mu).unwrap().subst_square();
                assert_eq!(double_kostka(&lam, &mu).unwrap(), k);
                assert_eq!(double_kostka_lr(&lam, &mu).unwrap(), k);
                assert_eq!(double_kostka(&right, &mu).unwrap(), k.shift(size as i64));
            }
        }
    }
}

#[test]
fn double_routes_agree_at_five() {
    for lam in DoublePartition::all(5) {
        let n = (lam.s() + lam.t()).max(5);
        for mu in Partition::all(5) {
            let k = double_kostka(&lam, &mu).unwrap();
            assert_eq!(double_kostka_lr(&lam, &mu).unwrap(), k, "Λ = {lam}, μ = {mu}");
            assert_eq!(double_kostka_energy(&lam, &mu, n).unwrap(), k, "Λ = {lam}, μ = {mu}");
            let m = fermionic_double(&mu, &lam, n).unwrap();
            let lp = lam.lp.size() as i64;
            assert_eq!(m.subst_square(), k.subst_inverse().shift(2 * n_of(&mu) + lp), "Λ = {lam}, μ = {mu}");
            assert_eq!(oned_sum_double(&mu, &lam, n).unwrap(), m.subst_inverse().shift(n_of(&mu)));
            let count = enumerate_pairs(&lam, mu.parts(), false).unwrap().len();
            assert_eq!(k.eval_one(), BigInt::from(count));
        }
    }
}

#[test]
fn fermionic_double_on_the_appendix_set() {
    let f = double_set_fixture();
    let lam = DoublePartition::new(p(&f.lp), p(&f.lpp));
    let mu = p(&f.mu);
    let rcs = rc_double(&mu, &lam, f.n).unwrap();
    assert_eq!(rcs.len(), 6);
    let mut want = LaurentPoly::zero();
    for rc in &rcs {
        want.add_term(rc.cocharge(), BigInt::from(1));
    }
    assert_eq!(fermionic_double(&mu, &lam, f.n).unwrap(), want);
    for r in DoubleRoute::ALL {
        assert_eq!(fermionic_double_route(&mu, &lam, f.n, r).unwrap(), want, "{r:?}");
    }
}

#[test]
fn degenerate_double_fermionic() {
    for size in 0..=5 {
        for inner in Partition::all(size) {
            let lam = DoublePartition::new(Partition::empty(), inner.clone());
            for mu in Partition::all(size) {
                let n = size.max(2);
                assert_eq!(fermionic_double(&mu, &lam, n).unwrap(), fermionic(&mu, &inner, n).unwrap());
            }
        }
    }
}

#[test]
fn empty_sets_sum_to_zero() {
    assert!(oned_sum(&p(&[3]), &p(&[1, 1, 1]), 3).unwrap().is_zero());
    let lam = DoublePartition::new(p(&[1, 1, 1]), Partition::empty());
    assert!(double_kostka(&lam, &p(&[3])).unwrap().is_zero());
}

#[test]
fn requests() {
    let req: KostkaRequest = serde_json::from_str(r#"{"mu":[1,1,1],"target":[2,1],"n":3,"method":"onedsum"}"#).unwrap();
    assert_eq!(req.compute().unwrap(), poly(&[(1, 1), (2, 1)]));
    let req = KostkaRequest {
        mu: p(&[1, 1]),
        target: Target::Double(DoublePartition::new(p(&[1]), p(&[1]))),
        n: 2,
        method: Method::Lr,
    };
    assert_eq!(req.compute().unwrap(), poly(&[(1, 1), (3, 1)]));
    let bad = KostkaRequest { mu: p(&[2]), target: Target::Single(p(&[1])), n: 2, method: Method::Charge };
    assert!(bad.validate().is_err());
}

#[test]
fn verify_examples() {
    let r = verify("appendix", None).unwrap();
    assert!(r.passed());
    assert_eq!(r.cases, 3);
    assert!(verify("xm", Some(6)).unwrap().passed());
    assert!(verify("gamma-charge", Some(6)).unwrap().passed());
    assert!(matches!(verify("nonsense", None), Err(Error::UnknownSuite(_))));
}
