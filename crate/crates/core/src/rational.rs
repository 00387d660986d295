//! Exact rationals with an inline fast path.
//!
//! Values whose reduced numerator and denominator fit in `i64` are stored
//! inline and combined through `i128` intermediates; anything larger falls
//! back to [`BigRational`]. The representation is canonical (a value is
//! inline whenever it fits), so structural equality is value equality.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// `num / den` with `den > 0` and `gcd(num, den) = 1`.
    Small(i64, i64),
    Big(BigRational),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Rational(Repr);

impl Rational {
    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn int(n: i128) -> Self {
        match i64::try_from(n) {
            Ok(n) => Rational(Repr::Small(n, 1)),
            Err(_) => Rational(Repr::Big(BigRational::from_integer(BigInt::from(n)))),
        }
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => (0u8, n, d).hash(state),
            Repr::Big(r) => (1u8, r).hash(state),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, o: Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => Rational::int(*a as i128 + *b as i128),
            (Repr::Small(a, c), Repr::Small(b, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + b * c, c * d)
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Rational) -> Rational {
        self + -o
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => Rational::int(*a as i128 * *b as i128),
            (Repr::Small(a, c), Repr::Small(b, d)) => {
                Rational::from_i128(*a as i128 * *b as i128, *c as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, o: Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, c), Repr::Small(b, d)) => {
                Rational::from_i128(*a as i128 * *d as i128, *c as i128 * *b as i128)
            }
            _ => {
                assert!(!o.is_zero(), "division by zero rational");
                Rational::from_big(self.to_big() / o.to_big())
            }
        }
    }
}

impl Rem for Rational {
    type Output = Rational;
    fn rem(self, o: Rational) -> Rational {
        Rational::from_big(self.to_big() % o.to_big())
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) if n != i64::MIN => Rational(Repr::Small(-n, d)),
            _ => Rational::from_big(-self.to_big()),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

impl Num for Rational {
    type FromStrRadixErr = <BigRational as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Rational::from_big)
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn abs_sub(&self, o: &Self) -> Self {
        let d = self.clone() - o.clone();
        if d.is_negative() {
            Rational::zero()
        } else {
            d
        }
    }
    fn signum(&self) -> Self {
        match (self.is_negative(), self.is_zero()) {
            (true, _) => -Rational::one(),
            (false, true) => Rational::zero(),
            _ => Rational::one(),
        }
    }
    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }
    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl FromStr for Rational {
    type Err = <BigRational as FromStr>::Err;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigRational>().map(Rational::from_big)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert_eq!(Rational::new(4, 2), Rational::from_integer(2));
        let huge = Rational::from_integer(i64::MAX) * Rational::from_integer(i64::MAX);
        assert_eq!(huge.to_big(), big(i64::MAX, 1) * big(i64::MAX, 1));
        let back = huge.clone() / Rational::from_integer(i64::MAX);
        assert_eq!(back, Rational::from_integer(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(-Rational::from_integer(i64::MIN), Rational::from_big(-big(i64::MIN, 1)));
    }

    fn edge() -> impl Strategy<Value = i64> {
        prop_oneof![
            -20i64..20,
            any::<i64>(),
            Just(i64::MAX),
            Just(i64::MIN),
            Just(i64::MAX - 1),
            (1i64 << 40)..(1i64 << 41),
        ]
    }

    fn rat() -> impl Strategy<Value = (i64, i64)> {
        (edge(), edge().prop_filter("nonzero", |d| *d != 0))
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational((a, b) in rat(), (c, d) in rat()) {
            let (x, y) = (Rational::from_big(big(a, b)), Rational::from_big(big(c, d)));
            let (bx, by) = (big(a, b), big(c, d));
            prop_assert_eq!((x.clone() + y.clone()).to_big(), bx.clone() + by.clone());
            prop_assert_eq!((x.clone() - y.clone()).to_big(), bx.clone() - by.clone());
            prop_assert_eq!((x.clone() * y.clone()).to_big(), bx.clone() * by.clone());
            prop_assert_eq!((-x.clone()).to_big(), -bx.clone());
            prop_assert_eq!(x.is_negative(), bx.is_negative());
            prop_assert_eq!(x.to_string(), bx.to_string());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() / y.clone()).to_big(), bx / by);
            }
            // canonical representation survives a round trip
            prop_assert_eq!(Rational::from_big((x.clone() * y.clone()).to_big()), x * y);
        }
    }
}
