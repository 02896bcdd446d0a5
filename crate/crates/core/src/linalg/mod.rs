//! Exact integer and rational linear algebra.

mod det;
mod matrix;
mod pfaffian;
mod signature;
mod snf;

pub use det::determinant;
pub use matrix::Matrix;
pub use pfaffian::pfaffian;
pub use signature::{characteristic_polynomial, exact_signature, ExactSignature};
pub use snf::{smith_normal_form, Cokernel, SmithNormalForm};
