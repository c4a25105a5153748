//! Exact scalar types used for coordinates and heights.
//!
//! Every construction here only needs a totally ordered additive monoid with a
//! unit, so coordinates may be `i32`, `i64`, `i128`, or arbitrary precision
//! integers. Floating point types are deliberately excluded by the `Ord` bound.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};

pub trait Scalar:
    Clone + Ord + Debug + Display + FromStr + Zero + One + FromPrimitive + Send + Sync
{
    /// Converts a non-negative count, panicking if it does not fit.
    fn from_count(value: u64) -> Self {
        Self::from_u64(value).expect("value does not fit in the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Ord + Debug + Display + FromStr + Zero + One + FromPrimitive + Send + Sync
{
}

/// Componentwise `a <= b`.
pub(crate) fn componentwise_le<T: Ord>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
