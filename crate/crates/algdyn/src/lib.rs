//! Exact-arithmetic analysis of finite-dimensional algebras and the degree
//! growth of the rational self-maps they induce.
//!
//! The library is organized around five layers:
//!
//! * [`exactnum`] — arbitrary-precision rationals, exact linear algebra,
//!   univariate polynomials, exterior powers and eigenvalue moduli;
//! * [`multipoly`] — exact multivariate polynomials, rational functions,
//!   affine rational maps and their reduced projective degree;
//! * [`algebra`] — algebras presented by structure constants: property
//!   predicates, units, nilradicals, minimal polynomials and the
//!   quadratic-map correspondence;
//! * [`induced`] — symbolic construction of the maps an algebra induces
//!   (univariate-rational and generalized monomial), with the exp/log
//!   conjugacy as a verification tool;
//! * [`degrees`] — degree-growth formulas and predictions, dynamical
//!   degrees, brute-force degree sequences and asymptotic verdicts.

pub mod algebra;
pub mod degrees;
pub mod error;
pub mod exactnum;
pub mod induced;
pub mod multipoly;

pub use error::{Error, Result};
pub use exactnum::{IntMatrix, Rat, RatMatrix, UniPoly};
