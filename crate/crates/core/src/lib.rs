//! Exact computations around Neuwirth-Stallings pairs and real Milnor
//! fibrations.
//!
//! * [`linalg`]: determinants, Pfaffians, Smith normal forms and exact
//!   signatures over arbitrary-precision integers and rationals.
//! * [`linking`]: the linking-matrix criterion deciding whether a fiber
//!   bundle over S² with fiber a punctured 3-sphere comes from an NS-pair.
//! * [`germ`]: polynomial germs, their gradients, and the local degree of
//!   the gradient via the Eisenbud-Levine-Khimshiashvili signature formula,
//!   with a planar winding-number cross-check.
//! * [`invariants`]: bookkeeping of link and Milnor fiber invariants under
//!   connected sum, spinning, projection and the higher-dimensional
//!   construction, plus bouquet and triviality criteria.
//!
//! The algorithms are generic over the scalar type; the aliases below fix
//! the arbitrary-precision instances used throughout the public API.

pub mod error;
pub mod germ;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod linking;
mod notation;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Integer matrix with exact entries.
pub type IntMatrix = linalg::Matrix<Integer>;
/// Rational matrix with exact entries.
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Polynomial germ with rational coefficients.
pub type PolynomialGerm = germ::Germ<Rational>;
/// Gradient of a [`PolynomialGerm`].
pub type GradientGerm = germ::Gradient<Rational>;
/// Smith normal form over the integers.
pub type IntSmithNormalForm = linalg::SmithNormalForm<Integer>;
