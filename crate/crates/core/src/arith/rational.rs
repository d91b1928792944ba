//! Rational helpers on top of `num_rational::BigRational`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number: always in lowest terms with a positive denominator.
pub type Q = BigRational;

/// Rational `n/d` from machine integers.
pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.trim_start().starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let ip_val: BigInt = if ip_abs.is_empty() { BigInt::zero() } else { ip_abs.parse().map_err(|_| bad())? };
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let fp_val: BigInt = fp.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let v = BigRational::new(ip_val * &scale + fp_val, scale);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Canonical `"p/q"` (or `"p"` for integers) rendering.
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
