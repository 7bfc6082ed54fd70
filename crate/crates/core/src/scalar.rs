//! The integer scalar every count and invariant is generic over.
//!
//! All sums in this crate are exact. Closed forms with denominators are
//! evaluated in [`num_rational::Ratio`] over the same scalar, so the only
//! requirement is an exact signed integer type: `i64`, `i128` or
//! [`num_bigint::BigInt`]. Fixed-width types are faster and will overflow on
//! large graphs; the crate-root aliases pick `BigInt`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
    /// Lossless conversion from a graph quantity (degree, edge count, ...).
    fn of(x: usize) -> Self {
        Self::from_usize(x).expect("graph quantity does not fit the scalar type")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

/// `base^exp` by repeated multiplication.
pub(crate) fn pow<T: ExactInt>(base: &T, exp: u32) -> T {
    num_traits::pow(base.clone(), exp as usize)
}

/// Ratio holding an integer value.
pub(crate) fn q<T: ExactInt>(x: &T) -> Ratio<T> {
    Ratio::from_integer(x.clone())
}

/// Ratio `num / den` from small constants.
pub(crate) fn frac<T: ExactInt>(num: i64, den: i64) -> Ratio<T> {
    Ratio::new(T::from_i64(num).unwrap(), T::from_i64(den).unwrap())
}

/// Scalar from a small signed constant.
pub(crate) fn int<T: ExactInt>(x: i64) -> T {
    T::from_i64(x).unwrap()
}
