//! Decimal arbitrary-precision floats used for reporting.
//!
//! A [`BigFloat`] is a correctly rounded (round-half-even) decimal with an explicit
//! number of significant digits. Values are produced from exact rationals or from
//! certified rational enclosures, so every printed digit is guaranteed.

use super::Q;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A decimal floating-point value `mantissa · 10^exponent` with `digits` significant digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

fn pow10(n: u64) -> BigInt {
    num_traits::pow(BigInt::from(10), n as usize)
}

/// Exact rational value of `10^e` (negative exponents allowed).
fn q_pow10(e: i64) -> Q {
    if e >= 0 {
        BigRational::from_integer(pow10(e as u64))
    } else {
        BigRational::new(BigInt::one(), pow10((-e) as u64))
    }
}

/// Floor of log10(|x|) for nonzero `x`.
fn floor_log10(x: &Q) -> i64 {
    let a = x.abs();
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    loop {
        let p = q_pow10(e);
        if a < p {
            e -= 1;
        } else if a >= &p * BigRational::from_integer(BigInt::from(10)) {
            e += 1;
        } else {
            return e;
        }
    }
}

/// Rounds `x` to an integer, ties to even.
fn round_half_even(x: &Q) -> BigInt {
    let fl = x.floor().to_integer();
    let frac = x - BigRational::from_integer(fl.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if frac > half || (frac == half && fl.is_odd()) {
        fl + 1
    } else {
        fl
    }
}

impl BigFloat {
    /// Zero with the given precision.
    pub fn zero(digits: u32) -> Self {
        BigFloat { mantissa: BigInt::zero(), exponent: 0, digits }
    }

    /// Correctly rounded (half-even) decimal approximation of an exact rational.
    pub fn from_q(x: &Q, digits: u32) -> Self {
        assert!(digits >= 1, "precision must be positive");
        if x.is_zero() {
            return Self::zero(digits);
        }
        let mut e = floor_log10(x) - digits as i64 + 1;
        let mut m = round_half_even(&(x / q_pow10(e)));
        if m.abs() >= pow10(digits as u64) {
            // rounding carried into a new digit
            e += 1;
            m = round_half_even(&(x / q_pow10(e)));
        }
        BigFloat { mantissa: m, exponent: e, digits }
    }

    /// Rounds a value known to lie in `[lo, hi]`; returns `None` when the enclosure
    /// is too wide to decide the rounding.
    pub fn from_enclosure(lo: &Q, hi: &Q, digits: u32) -> Option<Self> {
        let a = Self::from_q(lo, digits);
        let b = Self::from_q(hi, digits);
        if a == b {
            Some(a)
        } else {
            None
        }
    }

    /// Significant digits carried by this value.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Exact rational value of the rounded decimal.
    pub fn to_q(&self) -> Q {
        BigRational::from_integer(self.mantissa.clone()) * q_pow10(self.exponent)
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        self.to_q().to_f64().unwrap_or(f64::NAN)
    }

    /// True when the values agree to `sig` significant digits (relative tolerance
    /// `10^(1-sig)` measured against the larger magnitude, absolute for zero).
    pub fn agrees_with(&self, other: &BigFloat, sig: u32) -> bool {
        let a = self.to_q();
        let b = other.to_q();
        let diff = (&a - &b).abs();
        let scale = if a.abs() > b.abs() { a.abs() } else { b.abs() };
        if scale.is_zero() {
            return diff.is_zero();
        }
        diff <= scale * q_pow10(1 - sig as i64)
    }

    /// Rounds to fewer significant digits.
    pub fn round_to(&self, digits: u32) -> BigFloat {
        BigFloat::from_q(&self.to_q(), digits)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mantissa.is_zero() {
            return write!(f, "0");
        }
        let neg = self.mantissa.sign() == Sign::Minus;
        let s = self.mantissa.abs().to_string();
        let n = s.len() as i64;
        let point = n + self.exponent; // digits before the decimal point
        let body = if point > 40 || point < -20 {
            let (h, t) = s.split_at(1);
            if t.is_empty() {
                format!("{h}e{}", point - 1)
            } else {
                format!("{h}.{t}e{}", point - 1)
            }
        } else if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), s)
        } else if point >= n {
            format!("{}{}", s, "0".repeat((point - n) as usize))
        } else {
            let (h, t) = s.split_at(point as usize);
            format!("{h}.{t}")
        };
        if neg {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

/// Serialized form: decimal string plus precision annotation.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BigFloatRepr {
    /// Decimal rendering.
    pub value: String,
    /// Significant digits.
    pub digits: u32,
}

impl Serialize for BigFloat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BigFloatRepr { value: self.to_string(), digits: self.digits }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigFloat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = BigFloatRepr::deserialize(d)?;
        let v = parse_decimal(&r.value).ok_or_else(|| serde::de::Error::custom("bad decimal"))?;
        Ok(BigFloat::from_q(&v, r.digits))
    }
}

fn parse_decimal(s: &str) -> Option<Q> {
    let (m, e) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let v = super::parse_q(m).ok()?;
    Some(v * q_pow10(e))
}

/// Fixed-point `atan(1/x)` scaled by `scale`, truncation error below 2 units.
fn atan_inv(x: u64, scale: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = scale / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// Rational enclosure of π: returns `(lo, hi)` with `hi - lo ≤ 10^-prec`.
pub(crate) fn pi_enclosure(prec: u32) -> (Q, Q) {
    let guard = 10u64;
    let scale = pow10(prec as u64 + guard);
    let approx = BigInt::from(16) * atan_inv(5, &scale) - BigInt::from(4) * atan_inv(239, &scale);
    // each atan term contributes < 2 units per summand; bound the total generously
    let slack = BigInt::from(1000);
    let lo = BigRational::new(&approx - &slack, scale.clone());
    let hi = BigRational::new(&approx + &slack, scale);
    (lo, hi)
}

/// Fixed-point `atanh(p/q)` scaled by `scale` for `|p/q| ≤ 1/3`.
fn atanh_frac(p: &BigInt, q: &BigInt, scale: &BigInt) -> BigInt {
    let p2 = p * p;
    let q2 = q * q;
    let mut num = scale * p; // scale * p^(2k+1)
    let mut den = q.clone(); // q^(2k+1)
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let t = &num / (&den * BigInt::from(2 * k + 1));
        if t.is_zero() {
            break;
        }
        sum += t;
        num *= &p2;
        den *= &q2;
        k += 1;
    }
    sum
}

/// Rational enclosure of `ln(x)` for `x > 0`: `(lo, hi)` with width below `10^-prec`.
pub(crate) fn ln_enclosure(x: &Q, prec: u32) -> (Q, Q) {
    assert!(x.is_positive(), "logarithm of a non-positive number");
    let guard = 12u64;
    let scale = pow10(prec as u64 + guard);
    // x = 2^k · y with y in [2/3, 4/3)
    let mut k: i64 = 0;
    let mut y = x.clone();
    let two = BigRational::from_integer(BigInt::from(2));
    let lo_b = BigRational::new(BigInt::from(2), BigInt::from(3));
    let hi_b = BigRational::new(BigInt::from(4), BigInt::from(3));
    while y >= hi_b {
        y /= &two;
        k += 1;
    }
    while y < lo_b {
        y *= &two;
        k -= 1;
    }
    let z = (&y - BigRational::one()) / (&y + BigRational::one());
    let ln_y = BigInt::from(2) * atanh_frac(z.numer(), z.denom(), &scale);
    let ln2 = BigInt::from(2) * atanh_frac(&BigInt::one(), &BigInt::from(3), &scale);
    let approx = ln_y + BigInt::from(k) * ln2;
    let slack = BigInt::from(10_000) + BigInt::from(k.unsigned_abs()) * BigInt::from(10);
    (
        BigRational::new(&approx - &slack, scale.clone()),
        BigRational::new(&approx + &slack, scale),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn rounding_half_even() {
        assert_eq!(BigFloat::from_q(&q(25, 10), 1).to_string(), "2");
        assert_eq!(BigFloat::from_q(&q(35, 10), 1).to_string(), "4");
        assert_eq!(BigFloat::from_q(&q(-25, 10), 1).to_string(), "-2");
        assert_eq!(BigFloat::from_q(&q(999, 1), 2).to_string(), "1000");
        assert_eq!(BigFloat::from_q(&q(1, 3), 5).to_string(), "0.33333");
        assert_eq!(BigFloat::from_q(&q(0, 3), 5).to_string(), "0");
    }

    #[test]
    fn pi_digits() {
        let (lo, hi) = pi_enclosure(60);
        let p = BigFloat::from_enclosure(&lo, &hi, 50).unwrap();
        assert_eq!(p.to_string(), "3.1415926535897932384626433832795028841971693993751");
    }

    #[test]
    fn ln_digits() {
        let (lo, hi) = ln_enclosure(&q(9, 1), 40);
        let v = BigFloat::from_enclosure(&lo, &hi, 30).unwrap();
        assert_eq!(v.to_string(), "2.19722457733621938279049047385");
        let (lo, hi) = ln_enclosure(&q(1, 2), 40);
        let v = BigFloat::from_enclosure(&lo, &hi, 20).unwrap();
        assert_eq!(v.to_string(), "-0.69314718055994530942");
    }

    #[test]
    fn serde_roundtrip() {
        let v = BigFloat::from_q(&q(-256035, 100000), 6);
        let s = serde_json::to_string(&v).unwrap();
        let back: BigFloat = serde_json::from_str(&s).unwrap();
        assert_eq!(v, back);
    }
}
