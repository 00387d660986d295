//! Exact construction and verification of simple Jordan superalgebras built
//! over the coordinate algebra of the curve `x^2 + y^4 = 1`.
//!
//! Everything is generic over a [`Scalar`] coefficient field. The aliases at
//! the crate root fix the field to the rationals, which is what the
//! verification engine and the CLI use.

pub mod bracket;
pub mod constructions;
pub mod curve;
pub mod error;
pub mod expr;
pub mod identities;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod seeds;
pub mod structure;
pub mod superalg;

pub use error::{Error, Result};
pub use rational::Rational;
pub use scalar::Scalar;

/// Polynomials in `y` over the rationals.
pub type Poly = poly::Polynomial<Rational>;
/// Elements `p(y) + x*q(y)` of the curve algebra over the rationals.
pub type GammaEl = curve::CurveElem<Rational>;
/// The derivations `c*D` over the rationals.
pub type DerivationSpec = curve::Derivation<Rational>;
