//! Exact rational arithmetic.
//!
//! Degrees, orders, eigenvalues and spin components are all exact fractions;
//! floating point enters only at evaluation time. `Rational` keeps every
//! value reduced with a positive denominator, so equality and ordering are
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// A fraction p/q in lowest terms, q ≥ 1. The sign lives in the numerator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Reduce a fraction held in i128 intermediates back into an i64 `Rational`.
///
/// Panics if the reduced value does not fit; the quantities in this crate
/// (spin ladders, eigenvalues, pattern periods) stay far below that.
fn reduce(num: i128, den: i128) -> Rational {
    assert!(den != 0, "rational with zero denominator");
    let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
    let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
    let g = {
        let mut a = n;
        let mut b = d;
        while b != 0 {
            let t = b;
            b = a % b;
            a = t;
        }
        a.max(1)
    };
    let n = i64::try_from(n / g).expect("rational numerator overflow");
    let d = i64::try_from(d / g).expect("rational denominator overflow");
    Rational {
        num: sign * n,
        den: d,
    }
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Build p/q, reducing to lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(n, d).max(1);
        Rational {
            num: sign * (n / g) as i64,
            den: (d / g) as i64,
        }
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// True for ±1/k with k ≥ 2 (the shape every spin component must have).
    pub fn is_unit_fraction(&self) -> bool {
        self.num.abs() == 1 && self.den >= 2
    }

    pub fn abs(self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn recip(self) -> Self {
        assert!(self.num != 0, "reciprocal of zero");
        Rational::new(self.den * self.num.signum(), self.num.abs())
    }

    /// Largest integer ≤ self.
    pub fn floor(self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        reduce(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "rational division by zero");
        reduce(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
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
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Error from parsing a "p/q" string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}: expected \"p\" or \"p/q\" with q > 0")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i64 = s.parse().map_err(|_| bad())?;
                Ok(Rational::integer(n))
            }
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q <= 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), -3);
        assert_eq!(r.denom(), 2);
        assert_eq!(Rational::new(0, 7), Rational::ZERO);
    }

    #[test]
    fn parses_and_rejects() {
        assert_eq!("1/2".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("-1/6".parse::<Rational>().unwrap(), Rational::new(-1, 6));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::integer(3));
        assert!("5/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Rational::new(3, 4).to_string(), "3/4");
        assert_eq!(Rational::new(-1, 6).to_string(), "-1/6");
        assert_eq!(Rational::integer(2).to_string(), "2");
    }

    #[test]
    fn exact_ladder_sums() {
        let half = Rational::new(1, 2);
        let step1 = Rational::new(1, 3) + Rational::new(1, 3) - Rational::new(1, 6);
        assert_eq!(step1, half);
        let step2 = Rational::new(9, 35);
        let parts = Rational::new(1, 5) + Rational::new(1, 5) - Rational::new(1, 7);
        assert_eq!(parts, step2);
    }

    #[test]
    fn unit_fraction_predicate() {
        assert!(Rational::new(1, 2).is_unit_fraction());
        assert!(Rational::new(-1, 42).is_unit_fraction());
        assert!(!Rational::new(2, 3).is_unit_fraction());
        assert!(!Rational::ONE.is_unit_fraction());
    }

    #[test]
    fn floor_matches_euclid() {
        assert_eq!(Rational::new(7, 2).floor(), 3);
        assert_eq!(Rational::new(-7, 2).floor(), -4);
        assert_eq!(Rational::integer(5).floor(), 5);
    }

    proptest! {
        #[test]
        fn add_sub_roundtrip(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!((x + y) - y, x);
        }

        #[test]
        fn display_parse_roundtrip(a in -10_000i64..10_000, b in 1i64..10_000) {
            let x = Rational::new(a, b);
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn ordering_matches_f64(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            if x.to_f64() < y.to_f64() - 1e-9 {
                prop_assert!(x < y);
            }
        }
    }
}
