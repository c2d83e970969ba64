//! Kostka and double Kostka polynomials by charge, energy, Littlewood–Richardson
//! expansion and fermionic sums, plus the verification sweeps.

pub mod fermionic;
pub mod verify;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::crystal::{energy_w, highest_weight_set, p_set_double};
use crate::error::{Error, Result};
use crate::qpoly::{n_of, LaurentPoly};
use crate::tableau::{
    charge, charge_tableau, enumerate_pairs, enumerate_tableaux, lr_coefficient, DoublePartition, Partition, SkewShape,
};

pub use fermionic::{fermionic, fermionic_double, fermionic_double_route, fermionic_rigged, DoubleRoute};
pub use verify::{verify, Report, SUITES};

fn tally<I: IntoIterator<Item = i64>>(exponents: I) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in exponents {
        p.add_term(k, BigInt::from(1));
    }
    p
}

/// `K_{λ,μ}(t) = Σ_{T ∈ Tab(λ,μ)} t^{c(T)}`.
pub fn kostka_charge(lam: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()));
    }
    let tabs = enumerate_tableaux(&SkewShape::straight(lam.clone()), mu.parts(), false)?;
    Ok(tally(tabs.iter().map(|t| charge_tableau(t).map(|c| c as i64)).collect::<Result<Vec<_>>>()?))
}

/// `K_{λ,μ}(t) = Σ_{b ∈ P(B(μ),λ)} t^{E(b)}`.
pub fn kostka_1d(lam: &Partition, mu: &Partition, n: usize) -> Result<LaurentPoly> {
    oned_sum(mu, lam, n)
}

/// `X(μ,λ;t) = Σ_{b ∈ P(B(μ),λ)} t^{E(b)}`.
pub fn oned_sum(mu: &Partition, lam: &Partition, n: usize) -> Result<LaurentPoly> {
    if lam.length() > n {
        return Err(Error::RankTooSmall { n, need: lam.length() });
    }
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(mu.size(), lam.size()));
    }
    Ok(tally(highest_weight_set(mu, lam, n)?.iter().map(|w| energy_w(w) as i64)))
}

/// `X(μ,Λ;t) = Σ_{b ∈ P(B(μ),Λ)} t^{E(b)}`.
pub fn oned_sum_double(mu: &Partition, lam: &DoublePartition, n: usize) -> Result<LaurentPoly> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(mu.size(), lam.size()));
    }
    Ok(tally(p_set_double(mu, lam, n)?.iter().map(|w| energy_w(w) as i64)))
}

/// `K_{Λ,(−,μ″)}(t) = t^{|λ′|} Σ_{T ∈ Tab(Λ,μ″)} t^{2c(T)}`.
pub fn double_kostka(lam: &DoublePartition, mu: &Partition) -> Result<LaurentPoly> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()));
    }
    let pairs = enumerate_pairs(lam, mu.parts(), false)?;
    let base = lam.lp.size() as i64;
    Ok(tally(pairs.iter().map(|t| charge(&t.word()).map(|c| base + 2 * c as i64)).collect::<Result<Vec<_>>>()?))
}

/// `K_{Λ,(−,μ″)}(t) = t^{|λ′|} Σ_η c^η_{λ′,λ″} K_{η,μ″}(t²)`.
pub fn double_kostka_lr(lam: &DoublePartition, mu: &Partition) -> Result<LaurentPoly> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()));
    }
    let mut out = LaurentPoly::zero();
    for eta in Partition::all(mu.size()) {
        let c = lr_coefficient(&lam.lp, &lam.lpp, &eta)?;
        if c > 0 {
            out = &out + &kostka_charge(&eta, mu)?.subst_square().scale(&BigInt::from(c));
        }
    }
    Ok(out.shift(lam.lp.size() as i64))
}

/// `K_{Λ,(−,μ″)}(t) = t^{|λ′|} Σ_{b ∈ P(B(μ″),Λ)} t^{2E(b)}`.
pub fn double_kostka_energy(lam: &DoublePartition, mu: &Partition, n: usize) -> Result<LaurentPoly> {
    Ok(oned_sum_double(mu, lam, n)?.subst_square().shift(lam.lp.size() as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Charge,
    Onedsum,
    Fermionic,
    Lr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Target {
    Single(Partition),
    Double(DoublePartition),
}

/// A request for `K_{λ,μ}(t)` or `K_{Λ,(−,μ)}(t)` by a chosen route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaRequest {
    pub mu: Partition,
    pub target: Target,
    pub n: usize,
    pub method: Method,
}

impl KostkaRequest {
    pub fn validate(&self) -> Result<()> {
        let (size, need) = match &self.target {
            Target::Single(lam) => (lam.size(), lam.length()),
            Target::Double(lam) => (lam.size(), lam.s() + lam.t()),
        };
        if size != self.mu.size() {
            return Err(Error::SizeMismatch(size, self.mu.size()));
        }
        if need > self.n {
            return Err(Error::RankTooSmall { n: self.n, need });
        }
        Ok(())
    }

    pub fn compute(&self) -> Result<LaurentPoly> {
        self.validate()?;
        let (mu, n) = (&self.mu, self.n);
        let nmu = n_of(mu);
        match (&self.target, self.method) {
            (Target::Single(lam), Method::Charge) => kostka_charge(lam, mu),
            (Target::Single(lam), Method::Onedsum) => kostka_1d(lam, mu, n),
            (Target::Single(lam), Method::Fermionic) => Ok(fermionic(mu, lam, n)?.subst_inverse().shift(nmu)),
            (Target::Single(_), Method::Lr) => {
                Err(Error::Invalid("the lr method needs a double partition target".into()))
            }
            (Target::Double(lam), Method::Charge) => double_kostka(lam, mu),
            (Target::Double(lam), Method::Lr) => double_kostka_lr(lam, mu),
            (Target::Double(lam), Method::Onedsum) => double_kostka_energy(lam, mu, n),
            (Target::Double(lam), Method::Fermionic) => {
                Ok(fermionic_double(mu, lam, n)?.subst_inverse().subst_square().shift(2 * nmu + lam.lp.size() as i64))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(terms)
    }

    #[test]
    fn small_kostka() {
        assert_eq!(kostka_charge(&p(&[2, 1]), &p(&[2, 1])).unwrap(), poly(&[(0, 1)]));
        assert_eq!(kostka_charge(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly(&[(1, 1), (2, 1)]));
        assert_eq!(kostka_charge(&p(&[4]), &p(&[2, 1, 1])).unwrap(), poly(&[(3, 1)]));
        assert!(kostka_charge(&p(&[2, 1]), &p(&[3])).unwrap().is_zero());
        assert!(kostka_charge(&p(&[2]), &p(&[1])).is_err());
        assert_eq!(kostka_1d(&p(&[2]), &p(&[1, 1]), 2).unwrap(), poly(&[(1, 1)]));
        assert!(kostka_1d(&p(&[1, 1, 1]), &p(&[3]), 2).is_err());
    }

    #[test]
    fn small_double_kostka() {
        let lam = DoublePartition::new(p(&[1]), p(&[1]));
        assert_eq!(double_kostka(&lam, &p(&[1, 1])).unwrap(), poly(&[(1, 1), (3, 1)]));
        assert_eq!(double_kostka_lr(&lam, &p(&[1, 1])).unwrap(), poly(&[(1, 1), (3, 1)]));
        let lam = DoublePartition::new(p(&[]), p(&[2, 1]));
        assert_eq!(double_kostka(&lam, &p(&[1, 1, 1])).unwrap(), poly(&[(2, 1), (4, 1)]));
    }

    #[test]
    fn requests_dispatch() {
        let mut req =
            KostkaRequest { mu: p(&[1, 1, 1]), target: Target::Single(p(&[3])), n: 3, method: Method::Fermionic };
        assert_eq!(req.compute().unwrap(), poly(&[(3, 1)]));
        req.method = Method::Lr;
        assert!(req.compute().is_err());
        req.target = Target::Double(DoublePartition::new(p(&[2]), p(&[1])));
        for m in [Method::Charge, Method::Lr, Method::Onedsum, Method::Fermionic] {
            req.method = m;
            assert_eq!(req.compute().unwrap(), poly(&[(4, 1), (6, 1), (8, 1)]), "{m:?}");
        }
        req.n = 1;
        assert!(matches!(req.compute(), Err(Error::RankTooSmall { .. })));
    }

    #[test]
    fn request_json() {
        let req = KostkaRequest { mu: p(&[1, 1]), target: Target::Single(p(&[2])), n: 2, method: Method::Charge };
        let s = serde_json::to_string(&req).unwrap();
        assert_eq!(s, r#"{"mu":[1,1],"target":[2],"n":2,"method":"charge"}"#);
        assert_eq!(serde_json::from_str::<KostkaRequest>(&s).unwrap(), req);
    }
}
