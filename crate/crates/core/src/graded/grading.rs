use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// An Alexander grading stored doubled, so that half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grading2x(i64);

impl Grading2x {
    pub const ZERO: Grading2x = Grading2x(0);

    /// Grading with the given doubled value (`3` is `3/2`).
    pub const fn from_doubled(doubled: i64) -> Self {
        Grading2x(doubled)
    }

    pub const fn from_int(value: i64) -> Self {
        Grading2x(2 * value)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if the grading is integral.
    pub const fn as_int(self) -> Option<i64> {
        if self.is_integral() {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl Add for Grading2x {
    type Output = Grading2x;
    fn add(self, rhs: Self) -> Self {
        Grading2x(self.0 + rhs.0)
    }
}

impl Sub for Grading2x {
    type Output = Grading2x;
    fn sub(self, rhs: Self) -> Self {
        Grading2x(self.0 - rhs.0)
    }
}

impl Neg for Grading2x {
    type Output = Grading2x;
    fn neg(self) -> Self {
        Grading2x(-self.0)
    }
}

impl std::iter::Sum for Grading2x {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Grading2x::ZERO, Add::add)
    }
}

impl From<i64> for Grading2x {
    fn from(value: i64) -> Self {
        Grading2x::from_int(value)
    }
}

impl fmt::Display for Grading2x {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl FromStr for Grading2x {
    type Err = Error;

    /// Accepts `k` or `v/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidGrading(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(Grading2x::from_int).map_err(|_| bad()),
            Some((num, "2")) => num.parse::<i64>().map(Grading2x).map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}
