//! Laurent polynomials in one variable `t` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableau::Partition;

/// Coefficient ring for [`Laurent`].
pub trait Coefficient: Num + Signed + Clone + fmt::Debug + fmt::Display + FromPrimitive {}

impl<T> Coefficient for T where T: Num + Signed + Clone + fmt::Debug + fmt::Display + FromPrimitive {}

/// Sparse Laurent polynomial `Σ a_k t^k`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

/// The coefficient ring used throughout the crate.
pub type LaurentPoly = Laurent<BigInt>;

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// `t^k`
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `t ↦ t²`
    pub fn subst_square(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect() }
    }

    /// `t ↦ t⁻¹`
    pub fn subst_inverse(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when the coefficient sequence reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).all(|k| self.coeff(k) == self.coeff(lo + hi - k)),
            _ => true,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Converts coefficients into another ring.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match *k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                e if unit => write!(f, "t^{e}")?,
                e => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// Gaussian binomial `[p+m choose m]_t`, built with the Pascal recurrence
/// `[n, k] = [n-1, k-1] + t^k [n-1, k]`.
pub fn gauss_binomial<C: Coefficient>(p: i64, m: i64) -> Result<Laurent<C>> {
    if p < 0 || m < 0 {
        return Err(Error::NegativeBinomial { p, m });
    }
    let n = (p + m) as usize;
    let k = m.min(p) as usize;
    // row[j] = [i, j] for the current i
    let mut row: Vec<Laurent<C>> = vec![Laurent::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=i.min(k) {
            let left = if j >= 1 { row.get(j - 1).cloned() } else { None };
            let right = row.get(j).map(|q| q.shift(j as i64));
            next.push(match (left, right) {
                (Some(a), Some(b)) => &a + &b,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => Laurent::zero(),
            });
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// `n(μ) = Σ (j-1) μ_j`
pub fn n_of(mu: &Partition) -> i64 {
    mu.parts().iter().enumerate().map(|(j, &m)| (j * m) as i64).sum()
}

#[derive(Serialize, Deserialize)]
struct TermsRepr {
    terms: Vec<(i64, serde_json::Value)>,
}

fn coeff_to_json<C: Coefficient>(c: &C) -> serde_json::Value {
    let s = c.to_string();
    match s.parse::<i64>() {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(s),
    }
}

impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermsRepr { terms: self.terms.iter().map(|(k, c)| (*k, coeff_to_json(c))).collect() }.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TermsRepr::deserialize(d)?;
        let mut p = Laurent::zero();
        for (k, v) in repr.terms {
            let text = match v {
                serde_json::Value::Number(n) => n.to_string(),
                serde_json::Value::String(s) => s,
                other => return Err(D::Error::custom(format!("bad coefficient {other}"))),
            };
            let c = C::from_str_radix(&text, 10).map_err(|_| D::Error::custom(format!("bad coefficient {text}")))?;
            p.add_term(k, c);
        }
        Ok(p)
    }
}

impl LaurentPoly {
    /// Coefficients as `i64`, if they fit.
    pub fn to_i64_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.terms.iter().map(|(k, c)| c.to_i64().map(|v| (*k, v))).collect()
    }

    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }
}
