//! The worked examples of ψ on tableaux of double-partition shape, stored as
//! JSON under `fixtures/`, and their checks.

use serde::{Deserialize, Serialize};

use crate::crystal::RowTuple;
use crate::rigged::{enumerate_qm_double, psi_rc, psi_rc_traced, rc_double, RiggedConfiguration};
use crate::tableau::checks::Check;
use crate::tableau::{DoublePartition, Partition, Tableau, TableauPair};

const TRACE_ONE: &str = include_str!("../fixtures/appendix1.json");
const TRACE_TWO: &str = include_str!("../fixtures/appendix2.json");
const DOUBLE_SET: &str = include_str!("../fixtures/appendix3.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceFixture {
    pub lp: Vec<usize>,
    pub lpp: Vec<usize>,
    pub mu: Vec<usize>,
    pub n: usize,
    pub plus: Vec<Vec<usize>>,
    pub minus: Vec<Vec<usize>>,
    pub steps: Vec<StepFixture>,
    #[serde(rename = "final")]
    pub last: FinalFixture,
    pub s: usize,
    pub j_plus_labels: Vec<i64>,
}

/// One row of a trace table: `w_i` and, per level, `[length, vacancy, label]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepFixture {
    pub i: usize,
    pub w: String,
    pub levels: Vec<Vec<[i64; 3]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FinalFixture {
    pub nu: Vec<Vec<usize>>,
    pub labels: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DoubleSetFixture {
    pub lp: Vec<usize>,
    pub lpp: Vec<usize>,
    pub mu: Vec<usize>,
    pub n: usize,
    pub entries: Vec<DoubleEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DoubleEntry {
    pub plus: Vec<Vec<usize>>,
    pub minus: Vec<Vec<usize>>,
    pub levels: Vec<Vec<[i64; 3]>>,
}

pub fn trace_fixtures() -> Vec<TraceFixture> {
    [TRACE_ONE, TRACE_TWO].iter().map(|s| serde_json::from_str(s).expect("bundled fixture")).collect()
}

pub fn double_set_fixture() -> DoubleSetFixture {
    serde_json::from_str(DOUBLE_SET).expect("bundled fixture")
}

fn partition(v: &[usize]) -> std::result::Result<Partition, String> {
    Partition::new(v.to_vec()).map_err(|e| e.to_string())
}

/// `w_T` for `T = (T₊, T₋)`, after checking that `T` is a tableau of shape `Λ`
/// and weight `μ`.
pub fn pair_tuple(
    plus: &[Vec<usize>],
    minus: &[Vec<usize>],
    lam: &DoublePartition,
    mu: &Partition,
    n: usize,
) -> std::result::Result<RowTuple, String> {
    let pair = TableauPair::new(
        Tableau::from_rows(plus.to_vec()).map_err(|e| e.to_string())?,
        Tableau::from_rows(minus.to_vec()).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    if &pair.shape() != lam {
        return Err(format!("{pair} has shape {}, expected {lam}", pair.shape()));
    }
    if pair.word().weight() != mu.parts() {
        return Err(format!("{pair} does not have weight {mu}"));
    }
    RowTuple::new(pair.stacked_rows(), n).map_err(|e| e.to_string())
}

fn levels_of(rc: &RiggedConfiguration) -> Vec<Vec<[i64; 3]>> {
    (1..rc.n())
        .map(|a| rc.strings(a).into_iter().map(|(i, x)| [i as i64, rc.config().vacancy(a, i), x]).collect())
        .collect()
}

/// Every intermediate step, the final `(ν, J)` and `(ν, J₊)`.
pub fn check_trace(f: &TraceFixture) -> Check {
    let lam = DoublePartition::new(partition(&f.lp)?, partition(&f.lpp)?);
    let mu = partition(&f.mu)?;
    let w = pair_tuple(&f.plus, &f.minus, &lam, &mu, f.n)?;
    let trace = psi_rc_traced(&w).map_err(|e| e.to_string())?;
    if trace.len() != f.steps.len() {
        return Err(format!("{} steps, fixture has {}", trace.len(), f.steps.len()));
    }
    for (got, want) in trace.iter().zip(&f.steps) {
        let got = StepFixture { i: got.i, w: got.w.to_string(), levels: got.levels() };
        if &got != want {
            return Err(format!(
                "step {}: got {} {:?}, expected {} {:?}",
                want.i, got.w, got.levels, want.w, want.levels
            ));
        }
    }
    let rc = psi_rc(&w).map_err(|e| e.to_string())?;
    let levels = f
        .last
        .nu
        .iter()
        .zip(&f.last.labels)
        .map(|(nu, xs)| nu.iter().copied().zip(xs.iter().copied()).collect())
        .collect();
    let want = RiggedConfiguration::new(mu, f.n, levels).map_err(|e| e.to_string())?;
    if rc != want {
        return Err(format!("final configuration {rc}, expected {want}"));
    }
    let plus = rc.j_plus(f.s);
    let got: Vec<i64> = plus.strings(f.s).iter().map(|s| s.1).collect();
    if got != f.j_plus_labels {
        return Err(format!("J+ labels {got:?}, expected {:?}", f.j_plus_labels));
    }
    if !rc.level_condition(f.s) {
        return Err(format!("level {} of {rc} violates the shifted bounds", f.s));
    }
    Ok(())
}

/// `RC(μ, Λ)` is exactly the listed set, each entry is `ψ(w_T)`, and `J₊`
/// maps it onto `QM(μ, Λ)`.
pub fn check_double_set(f: &DoubleSetFixture) -> Check {
    let lam = DoublePartition::new(partition(&f.lp)?, partition(&f.lpp)?);
    let mu = partition(&f.mu)?;
    let mut listed = Vec::new();
    for e in &f.entries {
        let w = pair_tuple(&e.plus, &e.minus, &lam, &mu, f.n)?;
        let rc = psi_rc(&w).map_err(|e| e.to_string())?;
        if levels_of(&rc) != e.levels {
            return Err(format!("ψ({w}) = {rc}, expected {:?}", e.levels));
        }
        listed.push(rc);
    }
    listed.sort();
    let all = rc_double(&mu, &lam, f.n).map_err(|e| e.to_string())?;
    if all != listed {
        return Err(format!("RC(μ, Λ) has {} elements, fixture lists {}", all.len(), listed.len()));
    }
    let mut up: Vec<_> = all.iter().map(|rc| rc.j_plus(lam.s())).collect();
    up.sort();
    if up != enumerate_qm_double(&mu, &lam, f.n).map_err(|e| e.to_string())? {
        return Err("J+ image differs from QM(μ, Λ)".into());
    }
    Ok(())
}
