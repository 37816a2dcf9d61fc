//! Spins and projections: integers or half-odd-integers, stored as twice the
//! value so all formula arithmetic happens on exact integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Integer part `[x]` (floor).
    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn abs(self) -> HalfInt {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    /// The value as an exact nonnegative integer, for factorial arguments.
    pub fn as_nonneg_int(self) -> Result<u64, Error> {
        if !self.is_integer() {
            return Err(Error::NonIntegerQuantity(self.twice));
        }
        if self.twice < 0 {
            return Err(Error::NegativeFactorialArg(self.twice / 2));
        }
        Ok((self.twice / 2) as u64)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Strict grammar: `"2"`, `"3/2"`, `"-1/2"`; no whitespace.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid half-integer: {s:?}"));
        match s.split_once('/') {
            None => {
                let n: i64 = s.parse().map_err(|_| bad())?;
                Ok(HalfInt::from_int(n))
            }
            Some((num, "2")) => {
                let n: i64 = num.parse().map_err(|_| bad())?;
                if n % 2 == 0 {
                    // "4/2" is not canonical
                    return Err(bad());
                }
                Ok(HalfInt::from_twice(n))
            }
            Some(_) => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for twice in -9..=9 {
            let h = HalfInt::from_twice(twice);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }

    #[test]
    fn strict_parsing() {
        assert!("4/2".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!(" 1".parse::<HalfInt>().is_err());
        assert!("1 ".parse::<HalfInt>().is_err());
        assert!("".parse::<HalfInt>().is_err());
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
    }

    #[test]
    fn floor_of_half_integers() {
        assert_eq!(HalfInt::from_twice(3).floor(), 1);
        assert_eq!(HalfInt::from_twice(-3).floor(), -2);
        assert_eq!(HalfInt::from_int(-2).floor(), -2);
    }
}
