//! Single-instance property checks on insertion, charge and jeu de taquin.
//! Each returns `Err` with a description of the counterexample.

use std::collections::BTreeSet;

use super::charge::{charge, charge_tableau};
use super::enumerate::enumerate_tableaux;
use super::insertion::{column_insert, gamma, insertion_rows, rectify, row_sequence, rs, rs_inverse};
use super::jdt::{all_rectifications, jdt_slide, lower_positions, upper_positions, Slide};
use super::knuth::{knuth_equivalent, knuth_moves};
use super::partition::{is_partition_weight, Partition, SkewShape};
use super::skew::Tableau;
use super::word::Word;

pub type Check = std::result::Result<(), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `v ≤ u` implies `R(v → [u → T]) ≤ R(u → T)`.
pub fn bump_monotone(t: &Tableau, u: usize, v: usize) -> Check {
    if v > u {
        return Ok(());
    }
    let (tu, ru) = column_insert(u, t).map_err(err)?;
    let (_, rv) = column_insert(v, &tu).map_err(err)?;
    if rv > ru {
        return Err(format!("T = {t}, u = {u}, v = {v}: R_v = {rv} > R_u = {ru}"));
    }
    Ok(())
}

/// `R_m ⋯ R_1`, written left to right.
fn written_rows(w: &Word, t: &Tableau) -> std::result::Result<Word, String> {
    let mut r = insertion_rows(w, t).map_err(err)?;
    r.reverse();
    Ok(Word(r))
}

/// Inserting a row yields a row of insertion rows.
pub fn row_insertion_rows(w: &Word, t: &Tableau) -> Check {
    if !w.is_row() {
        return Ok(());
    }
    let r = written_rows(w, t)?;
    if !r.is_row() {
        return Err(format!("w = {w}, T = {t}: rows {r}"));
    }
    Ok(())
}

/// Inserting a double-row yields a double-row of insertion rows.
pub fn double_row_insertion_rows(w: &Word, t: &Tableau) -> Check {
    if w.len() % 2 == 1 || !w.is_double_row().map_err(err)? {
        return Ok(());
    }
    let r = written_rows(w, t)?;
    if !r.is_double_row().map_err(err)? {
        return Err(format!("w = {w}, T = {t}: rows {r}"));
    }
    Ok(())
}

/// `R_k ≥ R_k^∞`, where `∞` is inserted first and exceeds every letter in
/// `T` and `w`.
pub fn sentinel_rows(w: &Word, t: &Tableau) -> Check {
    let top = w.max_letter().max(t.word().max_letter());
    let (with_inf, _) = column_insert(top + 1, t).map_err(err)?;
    let plain = insertion_rows(w, t).map_err(err)?;
    let shifted = insertion_rows(w, &with_inf).map_err(err)?;
    if let Some(k) = (0..plain.len()).find(|&k| plain[k] < shifted[k]) {
        return Err(format!("w = {w}, T = {t}: R_{} = {} < {}", k + 1, plain[k], shifted[k]));
    }
    Ok(())
}

/// Charge agrees with the charge of every elementary Knuth neighbour.
pub fn charge_knuth_invariant(w: &Word) -> Check {
    if !is_partition_weight(&w.weight()) {
        return Ok(());
    }
    let c = charge(w).map_err(err)?;
    for v in knuth_moves(w) {
        let d = charge(&v).map_err(err)?;
        if d != c {
            return Err(format!("c({w}) = {c} but c({v}) = {d}"));
        }
    }
    Ok(())
}

/// Every order of upper slides rectifies to the insertion tableau.
pub fn rectifications_agree(t: &Tableau) -> Check {
    let want = rectify(t);
    let got = all_rectifications(t);
    if got.len() != 1 || !got.contains(&want) {
        return Err(format!("T = {t}: {} rectifications, insertion gives {want}", got.len()));
    }
    Ok(())
}

/// Each single slide keeps the word in its Knuth class.
pub fn slides_keep_knuth_class(t: &Tableau) -> Check {
    let w = t.word();
    let shape = t.shape();
    let slides = upper_positions(shape)
        .into_iter()
        .map(|c| (c, Slide::Upper))
        .chain(lower_positions(shape).into_iter().map(|c| (c, Slide::Lower)));
    for (c, dir) in slides {
        let s = jdt_slide(t, c, dir).map_err(err)?;
        if !knuth_equivalent(&w, &s.word()) {
            return Err(format!("T = {t}: {dir:?} slide at {c:?} gives {s}"));
        }
    }
    Ok(())
}

/// `c(T) = c(rectify(T))` for tableaux of partition weight.
pub fn charge_rectification_invariant(t: &Tableau) -> Check {
    if !is_partition_weight(&t.weight()) {
        return Ok(());
    }
    let (a, b) = (charge_tableau(t).map_err(err)?, charge_tableau(&rectify(t)).map_err(err)?);
    if a != b {
        return Err(format!("T = {t}: c(T) = {a}, c(rectify T) = {b}"));
    }
    Ok(())
}

pub fn rs_round_trip(w: &Word) -> Check {
    let (q, p) = rs(w);
    let back = rs_inverse(&q, &p).map_err(err)?;
    if &back != w {
        return Err(format!("w = {w} comes back as {back}"));
    }
    Ok(())
}

/// `σ(T)` fills the shape of `T` as a tableau.
pub fn row_sequence_fills(t: &Tableau) -> Check {
    let sigma = row_sequence(t);
    Tableau::fill(t.shape(), &sigma).map(|_| ()).map_err(|e| format!("T = {t}, σ = {sigma}: {e}"))
}

/// `Γ̃` on `Tab(λ−ρ, μ)`: injective, image `⊔_ν Tab⁰(λ−ρ, ν) × Tab(ν, μ)`,
/// and charge preserved.
pub fn gamma_bijective(shape: &SkewShape, mu: &Partition) -> Check {
    let source = enumerate_tableaux(shape, mu.parts(), false).map_err(err)?;
    let mut image = BTreeSet::new();
    for t in &source {
        let (d, s) = gamma(t).map_err(err)?;
        let (ct, cs) = (charge_tableau(t).map_err(err)?, charge_tableau(&s).map_err(err)?);
        if ct != cs {
            return Err(format!("T = {t}: c(T) = {ct}, c(S) = {cs}"));
        }
        if !image.insert((d, s)) {
            return Err(format!("Γ̃ is not injective at {t}"));
        }
    }
    let mut want = BTreeSet::new();
    for nu in Partition::all(shape.size()) {
        let lattice = enumerate_tableaux(shape, nu.parts(), true).map_err(err)?;
        if lattice.is_empty() {
            continue;
        }
        let straight = enumerate_tableaux(&SkewShape::straight(nu.clone()), mu.parts(), false).map_err(err)?;
        for d in &lattice {
            for s in &straight {
                want.insert((d.clone(), s.clone()));
            }
        }
    }
    if image != want {
        return Err(format!("shape {shape}, μ = {mu}: image has {} pairs, expected {}", image.len(), want.len()));
    }
    Ok(())
}
