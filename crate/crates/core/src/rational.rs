//! Exact membership grades.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction in the closed unit interval.
///
/// Every grade in the crate is one of these; sup and inf over finite index
/// sets become exact `max` and `min`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(Ratio<u64>);

impl UnitRational {
    pub const ZERO: Self = UnitRational(Ratio::new_raw(0, 1));
    pub const ONE: Self = UnitRational(Ratio::new_raw(1, 1));
    pub const HALF: Self = UnitRational(Ratio::new_raw(1, 2));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::BadGrade(format!("{numer}/{denom}")));
        }
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<u64>) -> Result<Self> {
        if r > Ratio::one() {
            return Err(Error::GradeOutOfRange(r.to_string()));
        }
        Ok(UnitRational(r))
    }

    pub fn ratio(self) -> Ratio<u64> {
        self.0
    }

    pub fn numer(self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Self::from_ratio(self.0 + rhs.0)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        if rhs.0 > self.0 {
            return Err(Error::GradeOutOfRange(format!("{self} - {rhs}")));
        }
        Ok(UnitRational(self.0 - rhs.0))
    }
}

/// Product of two grades never leaves the interval.
impl std::ops::Mul for UnitRational {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        UnitRational(self.0 * rhs.0)
    }
}

impl Default for UnitRational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadGrade(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        UnitRational::new(n, d)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
