//! Polynomials in π² with exact rational coefficients.

use super::bigfloat::pi_enclosure;
use super::{parse_q, q_to_string, BigFloat, Ring, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// `Σ c_k π^{2k}`; only even powers of π are representable and no zero coefficient
/// is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct PiPoly {
    /// Map from `k` (the power of π²) to its nonzero coefficient.
    coeffs: BTreeMap<u32, Q>,
}

impl PiPoly {
    /// Constant polynomial.
    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    /// `c · π^{power}`; `power` must be even.
    pub fn pi_power(power: u32, c: Q) -> Result<Self> {
        if power % 2 != 0 {
            return Err(Error::Parse(format!("odd power of pi ({power}) is not representable")));
        }
        Ok(Self::monomial(power / 2, c))
    }

    /// `c · (π²)^k`.
    pub fn monomial(k: u32, c: Q) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        PiPoly { coeffs }
    }

    /// Coefficient of `(π²)^k`.
    pub fn coeff(&self, k: u32) -> Q {
        self.coeffs.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    /// Degree in π² (`None` for the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Iterator over `(k, c_k)` with nonzero coefficients, ascending in `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Q)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Rational value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    fn insert_add(&mut self, k: u32, c: Q) {
        let e = self.coeffs.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Rational enclosure of the value using a π enclosure of width `10^-prec`.
    fn enclosure(&self, prec: u32) -> (Q, Q) {
        let (plo, phi) = pi_enclosure(prec);
        let (p2lo, p2hi) = (&plo * &plo, &phi * &phi);
        let mut lo = Q::zero();
        let mut hi = Q::zero();
        for (k, c) in &self.coeffs {
            let a = num_traits::pow(p2lo.clone(), *k as usize);
            let b = num_traits::pow(p2hi.clone(), *k as usize);
            let (x, y) = (c * &a, c * &b);
            if x <= y {
                lo += x;
                hi += y;
            } else {
                lo += y;
                hi += x;
            }
        }
        (lo, hi)
    }

    /// Evaluates to `digits` correctly rounded significant digits.
    pub fn eval(&self, digits: u32) -> BigFloat {
        if self.coeffs.is_empty() {
            return BigFloat::zero(digits);
        }
        if let Some(c) = self.as_constant() {
            return BigFloat::from_q(&c, digits);
        }
        let mut prec = digits + 20;
        loop {
            let (lo, hi) = self.enclosure(prec);
            if let Some(v) = BigFloat::from_enclosure(&lo, &hi, digits) {
                return v;
            }
            prec = prec * 2 + 10;
        }
    }

    /// Parses the JSON array form `[{"power": 2, "coeff": "8/9"}, …]`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<PiTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("pipoly json: {e}")))?;
        let mut p = PiPoly::default();
        for t in terms {
            let c = parse_q(&t.coeff)?;
            p = p.add(&PiPoly::pi_power(t.power, c)?);
        }
        Ok(p)
    }
}

/// One serialized term of a [`PiPoly`].
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PiTerm {
    /// Power of π (even).
    pub power: u32,
    /// Coefficient as `"p/q"`.
    pub coeff: String,
}

impl Serialize for PiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<PiTerm> = self
            .coeffs
            .iter()
            .map(|(k, c)| PiTerm { power: 2 * k, coeff: q_to_string(c) })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        PiPoly::from_json(&v).map_err(serde::de::Error::custom)
    }
}

fn superscript(n: u32) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| SUP[(b - b'0') as usize]).collect()
}

impl fmt::Display for PiPoly {
    /// Renders descending in π, e.g. `8/9·π² − 34/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "−")?;
                }
            } else {
                write!(f, " {} ", if neg { "−" } else { "+" })?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{}", q_to_string(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}·", q_to_string(&a))?;
                }
                write!(f, "π{}", superscript(2 * k))?;
            }
        }
        Ok(())
    }
}

impl Zero for PiPoly {
    fn zero() -> Self {
        PiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for PiPoly {
    fn one() -> Self {
        PiPoly::constant(Q::one())
    }
}

crate::arith::ring::impl_ring_ops!(PiPoly);

impl Ring for PiPoly {
    fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &other.coeffs {
            r.insert_add(*k, c.clone());
        }
        r
    }
    fn mul(&self, other: &Self) -> Self {
        let mut r = PiPoly::default();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                r.insert_add(i + j, a * b);
            }
        }
        r
    }
    fn neg(&self) -> Self {
        PiPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return PiPoly::default();
        }
        PiPoly { coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect() }
    }
    fn try_inv(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(PiPoly::constant(c.recip())),
            _ => None,
        }
    }
}

impl From<Q> for PiPoly {
    fn from(c: Q) -> Self {
        PiPoly::constant(c)
    }
}

impl From<i64> for PiPoly {
    fn from(c: i64) -> Self {
        PiPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn n2() -> PiPoly {
        PiPoly::monomial(1, q(8, 9)).add(&PiPoly::constant(q(-34, 3)))
    }

    #[test]
    fn eval_n2() {
        assert_eq!(n2().eval(10).to_string(), "-2.560351643");
        assert_eq!(PiPoly::default().eval(10).to_string(), "0");
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(n2().to_string(), "8/9·π² − 34/3");
        let s = serde_json::to_string(&n2()).unwrap();
        assert_eq!(s, r#"[{"power":0,"coeff":"-34/3"},{"power":2,"coeff":"8/9"}]"#);
        let back: PiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, n2());
    }

    #[test]
    fn odd_power_rejected() {
        assert!(PiPoly::pi_power(3, q(1, 1)).is_err());
    }
}
