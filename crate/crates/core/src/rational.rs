//! Exact rational arithmetic.
//!
//! Every quantity that lives on the alpha-line (slopes, critical values,
//! chamber endpoints, Clifford bounds) is a [`Rational`]. There is no
//! floating point anywhere in this crate; all comparisons are exact.
//!
//! Internally this wraps an arbitrary-precision `BigRational`, which keeps
//! values in canonical form: denominator positive, gcd(|num|, den) = 1.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::DomainError;

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `p/q` in canonical form. Fails on `q == 0`; the sign is
    /// carried by the numerator.
    pub fn new(p: i64, q: i64) -> Result<Self, DomainError> {
        if q == 0 {
            return Err(DomainError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    /// `p/q` from big integers; `q` must be nonzero.
    pub fn from_big(p: BigInt, q: BigInt) -> Result<Self, DomainError> {
        if q.is_zero() {
            return Err(DomainError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p, q)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer `>= self`.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Total order consistent with the real numbers, by exact
    /// cross-multiplication.
    pub fn compare(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

// Serialized as decimal strings so arbitrary-precision values survive JSON.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.0.numer().to_string())?;
        s.serialize_field("den", &self.0.denom().to_string())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: String,
            den: String,
        }
        let r = Repr::deserialize(deserializer)?;
        let p: BigInt = r.num.parse().map_err(D::Error::custom)?;
        let q: BigInt = r.den.parse().map_err(D::Error::custom)?;
        Rational::from_big(p, q).map_err(D::Error::custom)
    }
}
