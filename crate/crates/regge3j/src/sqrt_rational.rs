//! Exact values of the form `sign * sqrt(p/q)`.
//!
//! Every (3-j) and super (3-j) value is a sign times the square root of a
//! nonnegative rational, and that shape is closed under the only operation the
//! evaluation formulas need, multiplication. Rational coefficients are folded
//! into the radicand at construction, so no irrational addition ever appears.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Canonical `sign * sqrt(radicand)` with `sign = 0` iff `radicand = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqrtRatio<T: Scalar> {
    sign: i8,
    radicand: Ratio<T>,
}

impl<T: Scalar> SqrtRatio<T> {
    pub fn zero() -> Self {
        SqrtRatio {
            sign: 0,
            radicand: Ratio::zero(),
        }
    }

    pub fn one() -> Self {
        SqrtRatio {
            sign: 1,
            radicand: Ratio::one(),
        }
    }

    /// Canonical form of `coefficient * sqrt(radicand)`, i.e.
    /// `sign(coefficient) * sqrt(coefficient^2 * radicand)`.
    pub fn new(coefficient: Ratio<T>, radicand: Ratio<T>) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        if coefficient.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        let sign = if coefficient.is_negative() { -1 } else { 1 };
        let radicand = coefficient.clone() * coefficient * radicand;
        Ok(SqrtRatio { sign, radicand })
    }

    /// The exact rational `r` embedded as `sign(r) * sqrt(r^2)`.
    pub fn from_rational(r: Ratio<T>) -> Self {
        Self::new(r, Ratio::one()).expect("unit radicand")
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &Ratio<T> {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The square of the value, always an exact nonnegative rational.
    pub fn squared(&self) -> Ratio<T> {
        self.radicand.clone()
    }

    /// Multiplicative inverse; zero has none.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Internal("reciprocal of zero".into()));
        }
        Ok(SqrtRatio {
            sign: self.sign,
            radicand: self.radicand.recip(),
        })
    }

    /// `Some(sign * a/b)` when the radicand is the square of a rational.
    pub fn exact_rational(&self) -> Option<Ratio<T>> {
        if self.is_zero() {
            return Some(Ratio::zero());
        }
        let n = self.radicand.numer().sqrt();
        let d = self.radicand.denom().sqrt();
        if &(n.clone() * n.clone()) == self.radicand.numer()
            && &(d.clone() * d.clone()) == self.radicand.denom()
        {
            let mut r = Ratio::new(n, d);
            if self.sign < 0 {
                r = -r;
            }
            Some(r)
        } else {
            None
        }
    }
}

impl<T: Scalar> Mul for SqrtRatio<T> {
    type Output = SqrtRatio<T>;

    fn mul(self, rhs: SqrtRatio<T>) -> SqrtRatio<T> {
        if self.sign == 0 || rhs.sign == 0 {
            return SqrtRatio::zero();
        }
        SqrtRatio {
            sign: self.sign * rhs.sign,
            radicand: self.radicand * rhs.radicand,
        }
    }
}

impl<T: Scalar> Neg for SqrtRatio<T> {
    type Output = SqrtRatio<T>;

    fn neg(self) -> SqrtRatio<T> {
        SqrtRatio {
            sign: -self.sign,
            radicand: self.radicand,
        }
    }
}

impl<T: Scalar> fmt::Display for SqrtRatio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let s = if self.sign < 0 { "-" } else { "+" };
        match self.exact_rational() {
            Some(r) => write!(f, "{}{}", s, r.abs()),
            None => write!(f, "{}sqrt({})", s, self.radicand),
        }
    }
}

impl<T: Scalar> fmt::Debug for SqrtRatio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl SqrtRatio<BigInt> {
    /// Decimal rendering for display only; the core never touches floats.
    /// Truncated to `digits` significant digits, scientific notation.
    pub fn decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let shift = digits as u32 + 2;
        let scale: BigInt = BigInt::from(10).pow(2 * shift);
        let scaled = (self.radicand.numer() * scale) / self.radicand.denom();
        let root = scaled.sqrt();
        let s = root.to_string();
        let exp = s.len() as i64 - 1 - shift as i64;
        let mantissa: String = s.chars().take(digits).collect();
        let (head, tail) = mantissa.split_at(1);
        let sign = if self.sign < 0 { "-" } else { "" };
        format!("{sign}{head}.{tail}e{exp}")
    }
}

pub(crate) fn parse_ratio<T: Scalar>(s: &str) -> Result<Ratio<T>> {
    let bad = || Error::Parse(format!("invalid rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = T::from_str_radix(n, 10).map_err(|_| bad())?;
    let denom = T::from_str_radix(d, 10).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Ratio::new(numer, denom))
}

#[derive(Serialize, Deserialize)]
struct Wire {
    sign: i8,
    radicand: String,
}

impl<T: Scalar> Serialize for SqrtRatio<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            sign: self.sign,
            radicand: self.radicand.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for SqrtRatio<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        if !matches!(wire.sign, -1 | 0 | 1) {
            return Err(D::Error::custom("sign must be -1, 0 or 1"));
        }
        let radicand: Ratio<T> =
            parse_ratio(&wire.radicand).map_err(|e| D::Error::custom(e.to_string()))?;
        if radicand.is_negative() {
            return Err(D::Error::custom("radicand must be nonnegative"));
        }
        if (wire.sign == 0) != radicand.is_zero() {
            return Err(D::Error::custom(
                "sign must be 0 exactly when radicand is 0",
            ));
        }
        Ok(SqrtRatio {
            sign: wire.sign,
            radicand,
        })
    }
}
