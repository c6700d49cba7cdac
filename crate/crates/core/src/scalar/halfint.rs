use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::{rat, Rational};

/// A spin or magnetic label stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Integer value, `None` for proper half-integers.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(i64::from(self.0 / 2))
    }

    /// Integer value; panics for proper half-integers.
    pub fn int(self) -> i64 {
        self.to_int()
            .unwrap_or_else(|| panic!("{self} is not an integer"))
    }

    pub fn to_rational(self) -> Rational {
        rat(i64::from(self.0), 2)
    }

    /// `m = -j, -j+1, ..., j` in ascending order (empty for `j < 0`).
    pub fn projections(self) -> impl Iterator<Item = HalfInt> + Clone {
        let j = self.0;
        (0..=j).map(move |k| HalfInt(2 * k - j))
    }

    /// `j = 0, 1/2, 1, ..., max` (or from `min`).
    pub fn spins_between(min: HalfInt, max: HalfInt) -> impl Iterator<Item = HalfInt> {
        (min.0.max(0)..=max.0).map(HalfInt)
    }

    /// Position of `m` in the ascending basis of spin `self`.
    pub fn index_of(self, m: HalfInt) -> usize {
        debug_assert!(m.0.abs() <= self.0 && (self.0 - m.0) % 2 == 0);
        ((m.0 + self.0) / 2) as usize
    }

    /// Dimension `2j+1`.
    pub fn dim(self) -> usize {
        (self.0 + 1) as usize
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// `|m| <= j` and `j - m` integral.
    pub fn admits(self, m: HalfInt) -> bool {
        self.0 >= 0 && m.0.abs() <= self.0 && (self.0 - m.0) % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid half-integer {0:?} (expected forms like 1, -3/2 or 0.5)")]
pub struct ParseHalfIntError(pub String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let t = s.trim();
        if let Some(num) = t.strip_suffix("/2") {
            let n: i32 = num.trim().parse().map_err(|_| err())?;
            return Ok(HalfInt(n));
        }
        if let Some((whole, frac)) = t.split_once('.') {
            let neg = whole.starts_with('-');
            let w: i32 = if whole == "-" || whole.is_empty() {
                0
            } else {
                whole.parse().map_err(|_| err())?
            };
            let half = match frac.trim_end_matches('0') {
                "" => 0,
                "5" => 1,
                _ => return Err(err()),
            };
            let twice = 2 * w + if neg { -half } else { half };
            return Ok(HalfInt(twice));
        }
        t.parse::<i32>().map(HalfInt::from_int).map_err(|_| err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("1/2".parse::<HalfInt>().unwrap(), HalfInt::HALF);
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("0.5".parse::<HalfInt>().unwrap(), HalfInt::HALF);
        assert_eq!("-1.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::from_int(-1).to_string(), "-1");
    }

    #[test]
    fn projections() {
        let ms: Vec<_> = HalfInt::from_twice(3)
            .projections()
            .map(HalfInt::twice)
            .collect();
        assert_eq!(ms, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
        assert_eq!(HalfInt::from_twice(-1).projections().count(), 0);
        assert_eq!(HalfInt::from_twice(3).index_of(HalfInt::HALF), 2);
    }
}
