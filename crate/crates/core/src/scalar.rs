//! Scalar layer: the coefficient field every construction is generic over.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Coefficient field. Exact verification uses [`crate::Rational`]; the float
/// impls exist for quick numeric exploration and carry no exactness guarantee.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self;

    /// True when equality and zero tests are exact.
    const EXACT: bool;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }

    const EXACT: bool = true;
}

impl Scalar for crate::rational::Rational {
    fn from_i64(v: i64) -> Self {
        Self::from_integer(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Self::from_big(BigRational::new(num.clone(), den.clone()))
    }

    const EXACT: bool = true;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        num.to_f64().unwrap_or(f64::NAN) / den.to_f64().unwrap_or(f64::NAN)
    }

    const EXACT: bool = false;
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        num.to_f32().unwrap_or(f32::NAN) / den.to_f32().unwrap_or(f32::NAN)
    }

    const EXACT: bool = false;
}
