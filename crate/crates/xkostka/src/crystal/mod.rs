//! Type `A_{n-1}` crystals `B(μ)` and `W(μ)`, the isomorphism `Ψ`,
//! highest-weight sets and energy.

pub mod graph;
pub mod highest;
pub mod psi;
pub mod row_tuple;
pub mod tensor;
pub mod weight;

use std::collections::{BTreeSet, VecDeque};

pub use graph::to_dot;
pub use highest::{
    energy, energy_w, highest_weight_set, p_set_double, p_set_double_by_operators, p_set_double_by_tableaux,
    row_tuples_with_lengths,
};
pub use psi::{enumerate_b, enumerate_w, psi, psi_inverse};
pub use row_tuple::{two_row, RowTuple, TwoRowTableau};
pub use tensor::TensorElement;
pub use weight::{cartan, Weight};

/// A crystal element with `e_i`, `f_i` for `i` in `1..rank()`. `None` is
/// the crystal zero.
pub trait Crystal: Sized + Clone + Ord {
    fn rank(&self) -> usize;
    fn e(&self, i: usize) -> Option<Self>;
    fn f(&self, i: usize) -> Option<Self>;
    fn weight(&self) -> Weight;

    fn eps(&self, i: usize) -> usize {
        let mut k = 0;
        let mut x = self.e(i);
        while let Some(y) = x {
            k += 1;
            x = y.e(i);
        }
        k
    }

    fn phi(&self, i: usize) -> usize {
        let mut k = 0;
        let mut x = self.f(i);
        while let Some(y) = x {
            k += 1;
            x = y.f(i);
        }
        k
    }

    /// Killed by every `e_i`.
    fn is_highest(&self) -> bool {
        (1..self.rank()).all(|i| self.e(i).is_none())
    }
}

/// Closure of `x` under all `e_i` and `f_i`.
pub fn connected_component<C: Crystal>(x: &C) -> BTreeSet<C> {
    let mut seen = BTreeSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for i in 1..y.rank() {
            for z in [y.e(i), y.f(i)].into_iter().flatten() {
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    seen
}

/// Splits a finite crystal into connected components, in order of their
/// smallest element.
pub fn components<C: Crystal>(all: &[C]) -> Vec<BTreeSet<C>> {
    let mut left: BTreeSet<C> = all.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some(x) = left.pop_first() {
        let comp = connected_component(&x);
        for y in &comp {
            left.remove(y);
        }
        out.push(comp);
    }
    out
}

/// Checks the crystal axioms at `x`. Returns a description of the first
/// violation.
pub fn check_axioms<C: Crystal>(x: &C) -> std::result::Result<(), String> {
    let n = x.rank();
    let wt = x.weight();
    for i in 1..n {
        let (eps, phi) = (x.eps(i) as i64, x.phi(i) as i64);
        if phi - eps != wt.pairing(i) {
            return Err(format!("phi - eps != <h_{i}, wt>"));
        }
        if let Some(y) = x.e(i) {
            if y.weight() != wt.add(&Weight::alpha(i, n)) {
                return Err(format!("wt(e_{i} x) != wt(x) + alpha_{i}"));
            }
            if y.eps(i) as i64 != eps - 1 || y.phi(i) as i64 != phi + 1 {
                return Err(format!("eps/phi of e_{i} x"));
            }
            if y.f(i).as_ref() != Some(x) {
                return Err(format!("f_{i} e_{i} x != x"));
            }
        }
        if let Some(y) = x.f(i) {
            if y.weight() != wt.sub(&Weight::alpha(i, n)) {
                return Err(format!("wt(f_{i} x) != wt(x) - alpha_{i}"));
            }
            if y.e(i).as_ref() != Some(x) {
                return Err(format!("e_{i} f_{i} x != x"));
            }
        }
    }
    Ok(())
}
