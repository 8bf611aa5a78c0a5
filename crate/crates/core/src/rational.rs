use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

/// Exact reduced fraction with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(Ratio<i64>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational `{0}`")]
pub struct RationalParseError(String);

impl ExactRational {
    /// Panics on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        ExactRational(Ratio::new(numerator, denominator))
    }

    pub fn integer(v: i64) -> Self {
        ExactRational(Ratio::from_integer(v))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    /// Compares `self` with `a / b` without building the second value.
    pub fn cmp_fraction(&self, a: i64, b: i64) -> Ordering {
        self.0.cmp(&Ratio::new(a, b))
    }
}

impl std::ops::Mul<i64> for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: i64) -> ExactRational {
        ExactRational(self.0 * rhs)
    }
}

impl std::ops::Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: ExactRational) -> ExactRational {
        ExactRational(self.0 + rhs.0)
    }
}

/// Always `p/q`, also for integers.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactRational {
    type Err = RationalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RationalParseError(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| err())?;
        let q: i64 = q.parse().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        Ok(ExactRational::new(p, q))
    }
}
