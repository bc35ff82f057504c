//! Exact rationals for length functions and measure values.
//!
//! Values stay tiny (weighted lengths of small modules); `i64` with an `i128`
//! widening for products is more than enough, and arithmetic panics on the
//! (unreachable) overflow instead of silently wrapping.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("rational with zero denominator".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ok(Rational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn checked_i64(x: i128) -> i64 {
        i64::try_from(x).expect("rational arithmetic overflow")
    }

    pub fn add(self, other: Rational) -> Rational {
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        let den = self.den as i128 * other.den as i128;
        Self::from_i128(num, den)
    }

    pub fn sub(self, other: Rational) -> Rational {
        self.add(Rational {
            num: -other.num,
            den: other.den,
        })
    }

    pub fn mul(self, other: Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul_int(self, k: i64) -> Rational {
        self.mul(Rational::from_int(k))
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        fn gcd128(a: i128, b: i128) -> i128 {
            let (mut a, mut b) = (a.abs(), b.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd128(num, den).max(1);
        Rational {
            num: Self::checked_i64(sign * num / g),
            den: Self::checked_i64(sign * den / g),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num: i64 = n.trim().parse().map_err(|_| bad())?;
                let den: i64 = d.trim().parse().map_err(|_| bad())?;
                Rational::new(num, den)
            }
            None => {
                let num: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::from_int(num))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let r = Rational::new(4, -6).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (-2, 3));
        assert_eq!(Rational::new(0, 5).unwrap(), Rational::zero());
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Rational::new(1, 2).unwrap();
        let b = Rational::new(1, 3).unwrap();
        assert_eq!(a.add(b), Rational::new(5, 6).unwrap());
        assert_eq!(a.sub(b), Rational::new(1, 6).unwrap());
        assert_eq!(a.mul(b), Rational::new(1, 6).unwrap());
        assert!(b < a);
        assert!(Rational::new(-1, 2).unwrap() < Rational::zero());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1/1", "3/2", "-7/3", "0/1"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4".parse::<Rational>().unwrap(), Rational::from_int(4));
        assert_eq!("2/4".parse::<Rational>().unwrap().to_string(), "1/2");
    }
}
