//! Kostka polynomials and their double analogues computed three ways: by
//! charge on tableaux, by energy on tensor products of single-row crystals,
//! and by fermionic sums over rigged configurations.

pub mod appendix;
pub mod crystal;
pub mod error;
pub mod kostka;
pub mod qpoly;
pub mod rigged;
pub mod tableau;

pub use error::{Error, Result};
pub use qpoly::{gauss_binomial, n_of, Laurent, LaurentPoly};
