//! Exact rational error parameters.
//!
//! Every threshold comparison in the crate is done on integers: a check of the
//! form `ed > (1 - eps) * span` becomes `ed * den > (den - num) * span`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rational arithmetic used for plans and thresholds.
pub type Rational = Ratio<i128>;

/// An error parameter `eps` with `0 < eps < 1`, stored as a reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Epsilon(Rational);

impl Epsilon {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidEpsilon(format!("{num}/{den}")));
        }
        Self::from_ratio(Rational::new(num, den))
    }

    pub fn from_ratio(r: Rational) -> Result<Self> {
        if r <= Rational::zero() || r >= Rational::one() {
            return Err(Error::InvalidEpsilon(format!("{}/{}", r.numer(), r.denom())));
        }
        Ok(Epsilon(r))
    }

    pub fn ratio(&self) -> Rational {
        self.0
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// `(1 - eps) * span` as an exact rational.
    pub fn threshold(&self, span: usize) -> Rational {
        (Rational::one() - self.0) * Rational::from_integer(span as i128)
    }

    /// True iff `ed > (1 - eps) * span`.
    #[inline]
    pub fn exceeds(&self, ed: usize, span: usize) -> bool {
        let num = self.numer();
        let den = self.denom();
        (ed as i128) * den > (den - num) * span as i128
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    /// Parses `num/den`. Decimal notation is rejected so that thresholds stay
    /// exact.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidEpsilon(s.to_string());
        let (num, den) = s.trim().split_once('/').ok_or_else(bad)?;
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        Epsilon::new(num, den).map_err(|_| bad())
    }
}

/// Smallest integer not below `r`.
pub fn ceil_to_usize(r: Rational) -> usize {
    let c = r.ceil().to_integer();
    usize::try_from(c.max(0)).unwrap_or(usize::MAX)
}
