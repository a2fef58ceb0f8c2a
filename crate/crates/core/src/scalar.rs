//! Exact rational scalars.
//!
//! Every value is kept in lowest terms with a positive denominator, so two
//! scalars are equal exactly when their representations are equal.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

/// Failure to read a rational literal such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("`{0}` is not an integer or integer/integer")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer/denom` reduced. Returns `None` for a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Scalar(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, ScalarParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ScalarParseError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ScalarParseError::Malformed(whole.to_string()))
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Accepts `p` or `p/q` with an optional leading `-` on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ScalarParseError::Empty);
        }
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (parse_digits(n, t)?, parse_digits(d, t)?),
            None => (parse_digits(body, t)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(t.to_string()));
        }
        let num = if negative { -num } else { num };
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let s = Scalar::ratio(6, -4).unwrap();
        assert_eq!(s, Scalar::ratio(-3, 2).unwrap());
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(Scalar::ratio(0, -7).unwrap().denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("4/6".parse::<Scalar>().unwrap().to_string(), "2/3");
        assert_eq!("-10/5".parse::<Scalar>().unwrap().to_string(), "-2");
        assert_eq!("0".parse::<Scalar>().unwrap(), Scalar::zero());
        assert_eq!(
            "1/0".parse::<Scalar>(),
            Err(ScalarParseError::ZeroDenominator("1/0".into()))
        );
        assert!("1/-2".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("--1".parse::<Scalar>().is_err());
        assert_eq!("".parse::<Scalar>(), Err(ScalarParseError::Empty));
    }

    #[test]
    fn zero_denominator_ratio() {
        assert!(Scalar::ratio(1, 0).is_none());
        assert!(Scalar::zero().recip().is_none());
    }

    proptest! {
        #[test]
        fn display_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
            let s = Scalar::ratio(n, d).unwrap();
            prop_assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s);
        }

        #[test]
        fn reduced_after_arithmetic(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = Scalar::ratio(a, b).unwrap();
            let y = Scalar::ratio(c, d).unwrap();
            for r in [&x + &y, &x - &y, &x * &y] {
                prop_assert!(r.denom() > &BigInt::zero());
                prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            }
        }
    }
}
