//! Scalar abstractions shared by the exact algorithms.
//!
//! Integer algorithms (determinant, Pfaffian, Smith form) are generic over
//! [`Int`]; algorithms that divide (signatures, standard bases, winding
//! numbers) are generic over [`Field`]. The crate root fixes the
//! arbitrary-precision instances as type aliases.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact Euclidean integer type (`i64`, `i128`, `BigInt`, ...).
///
/// Machine integers satisfy the bound but may overflow on large inputs;
/// use `BigInt` when entries are not known to stay small.
pub trait Int: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

impl<T> Int for T where T: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

/// An exact ordered field, in practice `Ratio<T>` for some [`Int`].
pub trait Field: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug + Display {}

impl<T> Field for T where T: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug + Display {}

/// Embeds an integer into its fraction field.
pub fn to_ratio<T: Int>(value: &T) -> Ratio<T> {
    Ratio::from_integer(value.clone())
}
