//! Exact rational grades.
//!
//! Every membership value, threshold and level in this crate is a reduced
//! rational. The defining relations mix strict and non-strict comparisons
//! (`mu(x) >= t > gamma`, `mu(x) + t > 2*delta`), so floating point is never
//! used: a tie decided the wrong way flips a verdict.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A reduced rational, wrapping `num_rational::Rational64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Rational64);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(Rational64::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rat(Rational64::zero())
    }

    pub fn one() -> Self {
        Rat(Rational64::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Rational64::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_grade(&self) -> bool {
        *self >= Rat::zero() && *self <= Rat::one()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn clamp01(self) -> Self {
        self.max(Rat::zero()).min(Rat::one())
    }

    /// Mediant of two reduced fractions; lies strictly between them when they
    /// differ.
    pub fn mediant(self, other: Self) -> Self {
        Rat(Rational64::new(
            self.numer() + other.numer(),
            self.denom() + other.denom(),
        ))
    }

    /// Midpoint (a + b) / 2.
    pub fn midpoint(self, other: Self) -> Self {
        Rat((self.0 + other.0) / Rational64::from_integer(2))
    }

    /// Decimal annotation for human-readable output, e.g. `0.35`. Falls back
    /// to an approximation marker when the expansion does not terminate.
    pub fn decimal_annotation(&self) -> String {
        let mut d = self.denom();
        while d % 2 == 0 {
            d /= 2;
        }
        while d % 5 == 0 {
            d /= 5;
        }
        let f = self.numer() as f64 / self.denom() as f64;
        if d == 1 {
            format!("{}", f)
        } else {
            format!("~{:.4}", f)
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p/q`, decimal literals (`0.35` parses as 35/100 reduced) and
    /// plain integers.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::ParseRat(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        } else if let Some((int, frac)) = s.split_once('.') {
            let neg = int.starts_with('-');
            let int = int.trim_start_matches('-');
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if !int.is_empty() && !int.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if frac.len() > 15 {
                return Err(bad());
            }
            let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac_num: i64 = frac.parse().map_err(|_| bad())?;
            let den = 10i64.pow(frac.len() as u32);
            let num = int
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac_num))
                .ok_or_else(bad)?;
            let r = Rat::new(num, den);
            Ok(if neg { Rat(-r.0) } else { r })
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_int(n))
        }
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[allow(dead_code)]
fn _is_signed(r: Rat) -> bool {
    r.0.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("0.35".parse::<Rat>().unwrap(), Rat::new(7, 20));
        assert_eq!("3/10".parse::<Rat>().unwrap(), Rat::new(3, 10));
        assert_eq!("1".parse::<Rat>().unwrap(), Rat::one());
        assert_eq!("0.6".parse::<Rat>().unwrap(), Rat::new(3, 5));
        assert_eq!(".5".parse::<Rat>().unwrap(), Rat::new(1, 2));
        assert!("7/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("1.2.3".parse::<Rat>().is_err());
    }

    #[test]
    fn display_reduced() {
        assert_eq!(Rat::new(35, 100).to_string(), "7/20");
        assert_eq!(Rat::new(4, 2).to_string(), "2");
    }

    #[test]
    fn mediant_strictly_between() {
        let a = Rat::new(3, 10);
        let b = Rat::new(7, 10);
        let m = a.mediant(b);
        assert!(a < m && m < b);
        assert_eq!(m, Rat::new(1, 2));
    }

    #[test]
    fn serde_round_trip() {
        let r = Rat::new(7, 20);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"7/20\"");
        let back: Rat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
