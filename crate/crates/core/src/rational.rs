//! Exact rationals over `i128` with checked arithmetic.
//!
//! Every value this crate reports (`h(G)`, `h(λ)`, deficiencies, table
//! bounds) is a [`Rational`]. Overflow is reported as [`Error::Overflow`],
//! never wrapped.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_integer::Integer;
use num_rational::ParseRatioError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `num/den` in lowest terms.
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg().ok_or(Error::Overflow)?;
            d = d.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Rational(Ratio::new_raw(n, d)))
    }

    pub fn from_int(n: i128) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        // a/b + c/d = (a*(l/b) + c*(l/d)) / l with l = lcm(b, d)
        let l = lcm_checked(self.denom(), rhs.denom())?;
        let a = self.numer().checked_mul(l / self.denom()).ok_or(Error::Overflow)?;
        let c = rhs.numer().checked_mul(l / rhs.denom()).ok_or(Error::Overflow)?;
        Rational::new(a.checked_add(c).ok_or(Error::Overflow)?, l)
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational(Ratio::new_raw(
            self.numer().checked_neg().ok_or(Error::Overflow)?,
            self.denom(),
        )))
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational> {
        // cross-reduce first so intermediate products stay small
        let g1 = self.numer().gcd(&rhs.denom());
        let g2 = rhs.numer().gcd(&self.denom());
        let (g1, g2) = (g1.max(1), g2.max(1));
        let n = (self.numer() / g1)
            .checked_mul(rhs.numer() / g2)
            .ok_or(Error::Overflow)?;
        let d = (self.denom() / g2)
            .checked_mul(rhs.denom() / g1)
            .ok_or(Error::Overflow)?;
        Rational::new(n, d)
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational> {
        if rhs.numer() == 0 {
            return Err(Error::Parse("division by zero".into()));
        }
        self.checked_mul(Rational::new(rhs.denom(), rhs.numer())?)
    }

    pub fn checked_mul_int(self, k: i128) -> Result<Rational> {
        self.checked_mul(Rational::from_int(k))
    }

    /// Decimal approximation, for human-readable output only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

fn lcm_checked(a: i128, b: i128) -> Result<i128> {
    let g = a.gcd(&b);
    (a / g).checked_mul(b).ok_or(Error::Overflow)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n as i128)
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including integers (`2/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let r: Ratio<i128> = s
            .trim()
            .parse()
            .map_err(|e: ParseRatioError| Error::Parse(format!("{s:?}: {e}")))?;
        Rational::new(*r.numer(), *r.denom())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.denom() == 1 && self.numer() == *other as i128
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from_int(*other as i128)))
    }
}

/// Shorthand for tests and tables; panics on a zero denominator.
pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(-6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (3, 2));
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(Rational::new(0, 7).unwrap(), Rational::ZERO);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = ratio(8, 3);
        let b = ratio(4, 21);
        assert_eq!(a.checked_add(b).unwrap(), ratio(20, 7));
        assert_eq!(ratio(20, 7).checked_sub(a).unwrap(), b);
        assert_eq!(ratio(2, 3).checked_mul(ratio(9, 4)).unwrap(), ratio(3, 2));
        assert_eq!(ratio(2, 3).checked_div(ratio(4, 9)).unwrap(), ratio(3, 2));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Rational::from_int(i128::MAX / 2 + 1);
        assert_eq!(big.checked_add(big), Err(Error::Overflow));
        assert_eq!(big.checked_mul_int(3), Err(Error::Overflow));
        assert_eq!(Rational::from_int(i128::MIN).checked_neg(), Err(Error::Overflow));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(ratio(20, 7).to_string(), "20/7");
        assert_eq!(Rational::from_int(2).to_string(), "2/1");
        assert_eq!("20/7".parse::<Rational>().unwrap(), ratio(20, 7));
        assert_eq!("4".parse::<Rational>().unwrap(), Rational::from_int(4));
        assert_eq!("-10/4".parse::<Rational>().unwrap(), ratio(-5, 2));
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_matches_values() {
        assert!(ratio(8, 3) < ratio(20, 7));
        assert!(ratio(20, 7) < 3);
        assert!(ratio(-1, 2) < Rational::ZERO);
    }
}
