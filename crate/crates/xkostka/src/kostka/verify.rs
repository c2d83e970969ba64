//! Named verification sweeps. Each case is an independent check; failures
//! are reported in case order.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fermionic::{fermionic, fermionic_double_route, fermionic_rigged, DoubleRoute};
use super::{
    double_kostka, double_kostka_energy, double_kostka_lr, kostka_1d, kostka_charge, oned_sum, oned_sum_double,
};
use crate::appendix::{check_double_set, check_trace, double_set_fixture, trace_fixtures};
use crate::crystal::{
    check_axioms, components, enumerate_w, highest_weight_set, p_set_double, psi, psi_inverse, Crystal,
};
use crate::error::{Error, Result};
use crate::qpoly::{n_of, LaurentPoly};
use crate::rigged::lemmas::vacancy_convexity_holds;
use crate::rigged::{
    enumerate_c, enumerate_qm_double, enumerate_rc, psi_rc, psi_rc_traced, rc_double_by_psi, rc_double_direct,
};
use crate::tableau::checks::{self, Check};
use crate::tableau::{
    charge, enumerate_bounded, enumerate_pairs, enumerate_tableaux, lr_coefficient, DoublePartition, Partition,
    SkewShape, Tableau, Word,
};

pub const SUITES: [&str; 11] = [
    "appendix",
    "kr",
    "routes",
    "xm",
    "double",
    "xm-double",
    "crystal-iso",
    "properties",
    "gamma-charge",
    "rigged",
    "all",
];

/// At most this many failure messages are kept per suite.
pub const MAX_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Default size bound of each suite.
pub fn default_bound(suite: &str) -> usize {
    match suite {
        "kr" | "routes" | "xm" | "gamma-charge" | "properties" => 6,
        _ => 5,
    }
}

/// Runs `suite` with sizes up to `max_n` (the suite default when `None`).
pub fn verify(suite: &str, max_n: Option<usize>) -> Result<Report> {
    if suite == "all" {
        let mut cases = 0;
        let mut failures = Vec::new();
        for name in SUITES.iter().filter(|s| **s != "all") {
            let r = verify(name, max_n)?;
            cases += r.cases;
            failures.extend(r.failures.into_iter().map(|f| format!("{name}: {f}")));
        }
        failures.truncate(MAX_FAILURES);
        return Ok(Report { suite: suite.to_string(), cases, failures });
    }
    let bound = max_n.unwrap_or_else(|| default_bound(suite));
    let (cases, failures) = match suite {
        "appendix" => appendix(),
        "kr" => kr(bound),
        "routes" => routes(bound),
        "xm" => xm(bound),
        "double" => double(bound),
        "xm-double" => xm_double(bound),
        "crystal-iso" => crystal_iso(bound),
        "properties" => properties(bound),
        "gamma-charge" => gamma_charge(bound),
        "rigged" => rigged(bound),
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    };
    Ok(Report { suite: suite.to_string(), cases, failures })
}

fn run<T: Sync>(cases: &[T], check: impl Fn(&T) -> Check + Sync) -> (usize, Vec<String>) {
    let mut failures: Vec<String> = cases.par_iter().filter_map(|c| check(c).err()).collect();
    failures.truncate(MAX_FAILURES);
    (cases.len(), failures)
}

fn merge(parts: Vec<(usize, Vec<String>)>) -> (usize, Vec<String>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (c, f) in parts {
        cases += c;
        failures.extend(f);
    }
    failures.truncate(MAX_FAILURES);
    (cases, failures)
}

fn msg<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expect_eq(what: &str, a: &LaurentPoly, b: &LaurentPoly) -> Check {
    if a != b {
        return Err(format!("{what}: {a} != {b}"));
    }
    Ok(())
}

/// Rank used for inputs of size `n`; crystals need at least two letters.
fn rank(n: usize) -> usize {
    n.max(2)
}

fn pairs(max_n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let all = Partition::all(n);
        for lam in &all {
            for mu in &all {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

fn double_pairs(max_n: usize) -> Vec<(DoublePartition, Partition)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for lam in DoublePartition::all(n) {
            for mu in Partition::all(n) {
                out.push((lam.clone(), mu));
            }
        }
    }
    out
}

fn appendix() -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    for (k, f) in trace_fixtures().iter().enumerate() {
        if let Err(e) = check_trace(f) {
            failures.push(format!("trace {}: {e}", k + 1));
        }
    }
    if let Err(e) = check_double_set(&double_set_fixture()) {
        failures.push(format!("double set: {e}"));
    }
    (3, failures)
}

fn tableau_count(lam: &Partition, mu: &Partition) -> std::result::Result<usize, String> {
    Ok(enumerate_tableaux(&SkewShape::straight(lam.clone()), mu.parts(), false).map_err(msg)?.len())
}

/// `M(μ,λ;t) = t^{n(μ)} K_{λ,μ}(t⁻¹)`, by both fermionic forms.
fn kr(max_n: usize) -> (usize, Vec<String>) {
    run(&pairs(max_n), |(lam, mu)| {
        let n = rank(mu.size());
        let k = kostka_charge(lam, mu).map_err(msg)?;
        let m = fermionic(mu, lam, n).map_err(msg)?;
        let ctx = format!("λ = {lam}, μ = {mu}");
        expect_eq(&ctx, &m, &k.subst_inverse().shift(n_of(mu)))?;
        expect_eq(&format!("{ctx} rigged form"), &fermionic_rigged(mu, lam, n).map_err(msg)?, &m)?;
        if !k.has_nonnegative_coefficients() || k.eval_one() != tableau_count(lam, mu)?.into() {
            return Err(format!("{ctx}: K = {k} does not count tableaux"));
        }
        Ok(())
    })
}

fn routes(max_n: usize) -> (usize, Vec<String>) {
    run(&pairs(max_n), |(lam, mu)| {
        let n = rank(mu.size());
        expect_eq(
            &format!("λ = {lam}, μ = {mu}"),
            &kostka_charge(lam, mu).map_err(msg)?,
            &kostka_1d(lam, mu, n).map_err(msg)?,
        )
    })
}

fn xm(max_n: usize) -> (usize, Vec<String>) {
    run(&pairs(max_n), |(lam, mu)| {
        let n = rank(mu.size());
        let x = oned_sum(mu, lam, n).map_err(msg)?;
        let m = fermionic(mu, lam, n).map_err(msg)?;
        expect_eq(&format!("λ = {lam}, μ = {mu}"), &x, &m.subst_inverse().shift(n_of(mu)))
    })
}

/// Both combinatorial routes and the energy route for `K_{Λ,(−,μ)}`, the
/// three fermionic routes, and `M(μ,Λ;t²) = t^{2n(μ)+|λ′|} K(t⁻¹)`.
fn double(max_n: usize) -> (usize, Vec<String>) {
    run(&double_pairs(max_n), |(lam, mu)| {
        let n = rank(mu.size());
        let ctx = format!("Λ = {lam}, μ = {mu}");
        let k = double_kostka(lam, mu).map_err(msg)?;
        expect_eq(&format!("{ctx} lr"), &k, &double_kostka_lr(lam, mu).map_err(msg)?)?;
        expect_eq(&format!("{ctx} energy"), &k, &double_kostka_energy(lam, mu, n).map_err(msg)?)?;
        let count = enumerate_pairs(lam, mu.parts(), false).map_err(msg)?.len();
        if !k.has_nonnegative_coefficients() || k.eval_one() != count.into() {
            return Err(format!("{ctx}: K = {k} does not count tableaux"));
        }
        let ms = DoubleRoute::ALL
            .iter()
            .map(|&r| fermionic_double_route(mu, lam, n, r).map_err(msg))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        for (r, m) in DoubleRoute::ALL.iter().zip(&ms).skip(1) {
            expect_eq(&format!("{ctx} route {r:?}"), m, &ms[0])?;
        }
        let lhs = ms[0].subst_square();
        let rhs = k.subst_inverse().shift(2 * n_of(mu) + lam.lp.size() as i64);
        expect_eq(&ctx, &lhs, &rhs)
    })
}

fn xm_double(max_n: usize) -> (usize, Vec<String>) {
    run(&double_pairs(max_n), |(lam, mu)| {
        let n = rank(mu.size());
        let x = oned_sum_double(mu, lam, n).map_err(msg)?;
        let m = fermionic_double_route(mu, lam, n, DoubleRoute::Configurations).map_err(msg)?;
        expect_eq(&format!("Λ = {lam}, μ = {mu}"), &x, &m.subst_inverse().shift(n_of(mu)))
    })
}

/// `Ψ` commutes with every `e_i`, `f_i` and preserves `wt`, `ε_i`, `φ_i`;
/// both models satisfy the crystal axioms.
pub fn crystal_iso_case(mu: &Partition, n: usize) -> Check {
    for w in enumerate_w(mu, n).map_err(msg)? {
        let b = psi(&w).map_err(msg)?;
        if psi_inverse(&b) != w {
            return Err(format!("Ψ⁻¹Ψ({w}) != {w}"));
        }
        if b.weight() != w.weight() {
            return Err(format!("wt differs at {w}"));
        }
        for i in 1..n {
            let e = w.e(i).map(|x| psi(&x)).transpose().map_err(msg)?;
            let f = w.f(i).map(|x| psi(&x)).transpose().map_err(msg)?;
            if e != b.e(i) || f != b.f(i) {
                return Err(format!("operators {i} do not commute with Ψ at {w}"));
            }
            if (w.eps(i), w.phi(i)) != (b.eps(i), b.phi(i)) {
                return Err(format!("ε/φ {i} differ at {w}"));
            }
        }
        check_axioms(&w).map_err(|e| format!("{w}: {e}"))?;
        check_axioms(&b).map_err(|e| format!("{b}: {e}"))?;
    }
    Ok(())
}

fn crystal_iso(max_n: usize) -> (usize, Vec<String>) {
    let mut cases = Vec::new();
    for size in 0..=max_n {
        for mu in Partition::all(size) {
            for n in 2..=max_n.max(2) {
                cases.push((mu.clone(), n));
            }
        }
    }
    run(&cases, |(mu, n)| crystal_iso_case(mu, *n).map_err(|e| format!("μ = {mu}, n = {n}: {e}")))
}

fn straight_tableaux(max_size: usize, letters: usize) -> Vec<Tableau> {
    (0..=max_size)
        .flat_map(Partition::all)
        .flat_map(|lam| enumerate_bounded(&SkewShape::straight(lam), letters))
        .collect()
}

fn skew_tableaux(max_outer: usize, letters: usize) -> Vec<Tableau> {
    SkewShape::all_up_to(max_outer).iter().flat_map(|s| enumerate_bounded(s, letters)).collect()
}

/// Every word of length at most `len` over `1..=letters`.
pub fn all_words(len: usize, letters: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (1..=letters).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word));
    }
    out
}

/// Weakly increasing words of length `len` over `1..=letters`.
fn rows(len: usize, letters: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                let lo = w.last().copied().unwrap_or(1);
                (lo..=letters).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn double_rows(max_len: usize, letters: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for half in 0..=max_len / 2 {
        let all = rows(half, letters);
        for b in &all {
            for a in &all {
                if a.iter().zip(b).all(|(x, y)| x < y) {
                    out.push(Word(b.iter().chain(a).copied().collect()));
                }
            }
        }
    }
    out
}

/// Insertion, charge and jeu de taquin properties; `max_n` bounds the
/// largest tableaux and words.
fn properties(max_n: usize) -> (usize, Vec<String>) {
    let small = max_n.min(6);
    let big_tabs = straight_tableaux(max_n, 5);
    let tabs = straight_tableaux(small, 4);
    let mut parts = Vec::new();

    let letters: Vec<(usize, usize)> = (1..=5).flat_map(|u| (1..=u).map(move |v| (u, v))).collect();
    parts.push(run(&big_tabs, |t| letters.iter().try_for_each(|&(u, v)| checks::bump_monotone(t, u, v))));

    let row_words: Vec<Word> = (0..=4).flat_map(|l| rows(l, 4)).map(Word).collect();
    parts.push(run(&tabs, |t| row_words.iter().try_for_each(|w| checks::row_insertion_rows(w, t))));

    let doubles = double_rows(max_n.min(8), 5);
    parts.push(run(&tabs, |t| doubles.iter().try_for_each(|w| checks::double_row_insertion_rows(w, t))));

    let words = all_words(4, 4);
    parts.push(run(&tabs, |t| words.iter().try_for_each(|w| checks::sentinel_rows(w, t))));

    let knuth_words: Vec<Word> =
        (0..=max_n).flat_map(Partition::all).flat_map(|mu| words_of_weight(mu.parts())).collect();
    parts.push(run(&knuth_words, checks::charge_knuth_invariant));

    let skew = skew_tableaux(max_n.min(7), 3);
    parts.push(run(&skew, checks::rectifications_agree));
    parts.push(run(&skew, |t| {
        checks::slides_keep_knuth_class(t)?;
        checks::charge_rectification_invariant(t)?;
        checks::row_sequence_fills(t)
    }));

    parts.push(run(&all_words(max_n, 3), checks::rs_round_trip));
    merge(parts)
}

/// Every rearrangement of `1^{w_1} 2^{w_2} ⋯`.
pub fn words_of_weight(weight: &[usize]) -> Vec<Word> {
    fn go(left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if left.iter().all(|&c| c == 0) {
            out.push(Word(cur.clone()));
            return;
        }
        for a in 0..left.len() {
            if left[a] > 0 {
                left[a] -= 1;
                cur.push(a + 1);
                go(left, cur, out);
                cur.pop();
                left[a] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut weight.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `Γ̃` on every skew shape, and symmetry of Littlewood–Richardson
/// coefficients.
fn gamma_charge(max_n: usize) -> (usize, Vec<String>) {
    let mut cases = Vec::new();
    for shape in SkewShape::all_up_to(max_n) {
        for mu in Partition::all(shape.size()) {
            cases.push((shape.clone(), mu));
        }
    }
    let gamma = run(&cases, |(shape, mu)| checks::gamma_bijective(shape, mu));
    let lr_cases: Vec<DoublePartition> = (0..=max_n.min(5)).flat_map(DoublePartition::all).collect();
    let lr = run(&lr_cases, |lam| {
        for eta in Partition::all(lam.size()) {
            let a = lr_coefficient(&lam.lp, &lam.lpp, &eta).map_err(msg)?;
            let b = lr_coefficient(&lam.lpp, &lam.lp, &eta).map_err(msg)?;
            if a != b {
                return Err(format!("c^{eta}_{{{},{}}} = {a} but swapped gives {b}", lam.lp, lam.lpp));
            }
        }
        Ok(())
    });
    merge(vec![gamma, lr])
}

/// `ψ` over all of `W(μ)`: weight, intermediate validity, convexity of
/// vacancy numbers, cocharge constant on components.
fn psi_case(mu: &Partition, n: usize) -> Check {
    let all = enumerate_w(mu, n).map_err(msg)?;
    let mut cc = std::collections::HashMap::new();
    for w in &all {
        let trace = psi_rc_traced(w).map_err(msg)?;
        for step in &trace {
            if !step.rc.is_valid() {
                return Err(format!("{w}: step {} is not valid: {}", step.i, step.rc));
            }
            if !vacancy_convexity_holds(step.rc.config()) {
                return Err(format!("{w}: step {} breaks vacancy convexity", step.i));
            }
        }
        let rc = psi_rc(w).map_err(msg)?;
        if rc.weight() != w.weight() {
            return Err(format!("ψ({w}) has weight {:?}", rc.weight()));
        }
        cc.insert(w.clone(), rc.cocharge());
    }
    for comp in components(&all) {
        let values: BTreeSet<i64> = comp.iter().map(|w| cc[w]).collect();
        if values.len() != 1 {
            return Err(format!("cocharge takes values {values:?} on one component"));
        }
    }
    Ok(())
}

/// `RC(μ,λ) = ψ(P(W(μ),λ))`, `C(μ,λ)` its projection, and
/// `cc(ψ(w_T)) = n(μ) − c(T)`.
fn highest_case(lam: &Partition, mu: &Partition, n: usize) -> Check {
    let top = highest_weight_set(mu, lam, n).map_err(msg)?;
    let mut image = top.iter().map(psi_rc).collect::<crate::Result<Vec<_>>>().map_err(msg)?;
    image.sort();
    let rc = enumerate_rc(mu, lam, n).map_err(msg)?;
    if image != rc {
        return Err(format!("ψ-image has {} elements, RC(μ,λ) has {}", image.len(), rc.len()));
    }
    let projected: BTreeSet<_> = rc.iter().map(|r| r.config().clone()).collect();
    let c: BTreeSet<_> = enumerate_c(mu, lam, n).map_err(msg)?.into_iter().collect();
    if projected != c {
        return Err("C(μ,λ) is not the projection of RC(μ,λ)".into());
    }
    let mut cc: Vec<i64> = image.iter().map(|r| r.cocharge()).collect();
    let mut co: Vec<i64> = top
        .iter()
        .map(|w| charge(&w.word()).map(|c| n_of(mu) - c as i64))
        .collect::<crate::Result<_>>()
        .map_err(msg)?;
    cc.sort_unstable();
    co.sort_unstable();
    if cc != co {
        return Err(format!("cocharges {cc:?} differ from n(μ) − c(T) values {co:?}"));
    }
    Ok(())
}

/// Tuples `w_T` of highest weight with `cc(ψ(w_T)) ≠ n(μ) − c(T)`, and the
/// number of tuples examined.
pub fn pointwise_cocharge_mismatches(max_n: usize) -> crate::Result<(usize, Vec<String>)> {
    let mut seen = 0;
    let mut bad = Vec::new();
    for (lam, mu) in pairs(max_n) {
        for w in highest_weight_set(&mu, &lam, rank(mu.size()))? {
            seen += 1;
            let co = n_of(&mu) - charge(&w.word())? as i64;
            let cc = psi_rc(&w)?.cocharge();
            if cc != co {
                bad.push(format!("μ = {mu}, w = {w}: cc = {cc}, n(μ) − c = {co}"));
            }
        }
    }
    Ok((seen, bad))
}

/// `RC(μ,Λ)` directly equals the `ψ`-image of `P(W(μ),Λ)`, `J₊` maps it onto
/// `QM(μ,Λ)`, `|QM(μ,Λ)| = |Tab(Λ,μ)|`, and the shifted level-`s` bounds
/// hold after every step of `ψ`.
fn double_rc_case(lam: &DoublePartition, mu: &Partition, n: usize) -> Check {
    let s = lam.s();
    let direct = rc_double_direct(mu, lam, n).map_err(msg)?;
    if direct != rc_double_by_psi(mu, lam, n).map_err(msg)? {
        return Err("RC(μ,Λ) by bounds differs from the ψ-image".into());
    }
    let qm = enumerate_qm_double(mu, lam, n).map_err(msg)?;
    let mut up: Vec<_> = direct.iter().map(|r| r.j_plus(s)).collect();
    up.sort();
    if up != qm {
        return Err("J+ does not map RC(μ,Λ) onto QM(μ,Λ)".into());
    }
    let tabs = enumerate_pairs(lam, mu.parts(), false).map_err(msg)?.len();
    if qm.len() != tabs {
        return Err(format!("|QM| = {}, |Tab| = {tabs}", qm.len()));
    }
    for w in p_set_double(mu, lam, n).map_err(msg)? {
        for step in psi_rc_traced(&w).map_err(msg)? {
            if !step.rc.level_condition(s) {
                return Err(format!("{w}: level {s} bounds fail at step {}", step.i));
            }
        }
    }
    Ok(())
}

fn rigged(max_n: usize) -> (usize, Vec<String>) {
    let mus: Vec<Partition> = (0..=max_n).flat_map(Partition::all).collect();
    let a = run(&mus, |mu| psi_case(mu, rank(mu.size())).map_err(|e| format!("μ = {mu}: {e}")));
    let b = run(&pairs(max_n), |(lam, mu)| {
        highest_case(lam, mu, rank(mu.size())).map_err(|e| format!("λ = {lam}, μ = {mu}: {e}"))
    });
    let c = run(&double_pairs(max_n), |(lam, mu)| {
        double_rc_case(lam, mu, rank(mu.size())).map_err(|e| format!("Λ = {lam}, μ = {mu}: {e}"))
    });
    merge(vec![a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(verify("nope", None), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn appendix_passes() {
        let r = verify("appendix", None).unwrap();
        assert_eq!(r.cases, 3);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn small_sweeps_pass() {
        for s in ["kr", "routes", "xm", "double", "xm-double", "crystal-iso", "gamma-charge", "rigged", "properties"] {
            let r = verify(s, Some(3)).unwrap();
            assert!(r.cases > 0, "{s}");
            assert!(r.passed(), "{s}: {:?}", r.failures);
        }
    }

    #[test]
    fn word_generators() {
        assert_eq!(all_words(2, 2).len(), 7);
        assert_eq!(words_of_weight(&[2, 1]).len(), 3);
        assert_eq!(double_rows(2, 2), vec![Word(vec![]), Word(vec![2, 1])]);
    }
}
