//! Univariate polynomials and rational functions over `Q`.

use super::{q_to_string, Field, Ring, Q};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    /// From ascending coefficients.
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    /// Constant polynomial.
    pub fn constant(a: Q) -> Self {
        Poly::new(vec![a])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Poly::new(vec![Q::zero(), Q::one()])
    }

    /// `c · x^k`.
    pub fn monomial(k: usize, a: Q) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = a;
        Poly::new(c)
    }

    /// Degree (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::default();
        for a in self.c.iter().rev() {
            acc = Ring::add(&Ring::mul(&acc, g), &Poly::constant(a.clone()));
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * Q::from_integer((k as i64).into()))
                .collect(),
        )
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.c.is_empty() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.c.clone();
        let ld = d.lead();
        let mut qv = vec![Q::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / &ld;
            for (i, a) in d.c.iter().enumerate() {
                r[k + i] -= &f * a;
            }
            qv[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(qv), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.c.is_empty() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (qt, r) = self.divrem(d);
        if r.c.is_empty() {
            Ok(qt)
        } else {
            Err(Error::Parse("inexact polynomial division".into()))
        }
    }

    /// Squarefree part (monic).
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Renders with the given variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.c.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let ab = a.abs();
            match k {
                0 => s.push_str(&q_to_string(&ab)),
                _ => {
                    if !ab.is_one() {
                        s.push_str(&q_to_string(&ab));
                        s.push('*');
                    }
                    s.push_str(var);
                    if k > 1 {
                        s.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        s
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Q::one())
    }
}

crate::arith::ring::impl_ring_ops!(Poly);

impl Ring for Poly {
    fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly::default();
        }
        let mut r = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Poly::new(r)
    }
    fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }
    fn scale(&self, s: &Q) -> Self {
        Poly::new(self.c.iter().map(|a| a * s).collect())
    }
    fn try_inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Poly::constant(self.c[0].recip())),
            _ => None,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

/// Univariate rational function `num/den`, fully reduced with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc1 {
    num: Poly,
    den: Poly,
}

impl RatFunc1 {
    /// Builds and reduces `num/den`; errors on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::PoleAtZ("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc1 { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let l = d.lead().recip();
        RatFunc1 { num: n.scale(&l), den: d.scale(&l) }
    }

    /// Polynomial as a rational function.
    pub fn from_poly(p: Poly) -> Self {
        RatFunc1 { num: p, den: Poly::one() }
    }

    /// Constant.
    pub fn constant(a: Q) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    /// The variable.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    /// Numerator.
    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// Denominator (monic).
    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Evaluates at a point; errors at a pole.
    pub fn eval(&self, x: &Q) -> Result<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtZ(q_to_string(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, g: &Poly) -> Result<Self> {
        RatFunc1::new(self.num.compose(g), self.den.compose(g))
    }

    /// Quotient; errors on division by zero.
    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::PoleAtZ("division by zero rational function".into()));
        }
        Ok(Self::reduce(Ring::mul(&self.num, &o.den), Ring::mul(&self.den, &o.num)))
    }

    /// Integer power (negative allowed for nonzero values).
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { Self::one().div(self)? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..e.unsigned_abs() {
            r = Ring::mul(&r, &base);
        }
        Ok(r)
    }

    /// Renders with the given variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.den.degree() == Some(0) {
            self.num.display_with(var)
        } else {
            format!("({})/({})", self.num.display_with(var), self.den.display_with(var))
        }
    }
}

impl Zero for RatFunc1 {
    fn zero() -> Self {
        Self::from_poly(Poly::default())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc1 {
    fn one() -> Self {
        Self::constant(Q::one())
    }
}

crate::arith::ring::impl_ring_ops!(RatFunc1);

impl Ring for RatFunc1 {
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduce(Ring::add(&self.num, &o.num), self.den.clone());
        }
        Self::reduce(
            Ring::add(&Ring::mul(&self.num, &o.den), &Ring::mul(&o.num, &self.den)),
            Ring::mul(&self.den, &o.den),
        )
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::reduce(Ring::mul(&self.num, &o.num), Ring::mul(&self.den, &o.den))
    }
    fn neg(&self) -> Self {
        RatFunc1 { num: Ring::neg(&self.num), den: self.den.clone() }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc1 { num: self.num.scale(c), den: self.den.clone() }
    }
    fn try_inv(&self) -> Option<Self> {
        Self::one().div(self).ok()
    }
}

impl Field for RatFunc1 {}

impl fmt::Display for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&a| qi(a)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (qt, r) = a.divrem(&p(&[-1, 1]));
        assert_eq!(qt, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn ratfunc_reduces() {
        let r = RatFunc1::new(p(&[-2, 1, 1]), p(&[3, -4, 1])).unwrap();
        assert_eq!(r.num(), &p(&[2, 1]));
        assert_eq!(r.den(), &p(&[-3, 1]));
        assert_eq!(r.eval(&qi(0)).unwrap(), q(-2, 3));
        assert!(r.eval(&qi(3)).is_err());
    }

    #[test]
    fn squarefree_part() {
        let a = Ring::mul(&p(&[-1, 1]), &Ring::mul(&p(&[-1, 1]), &p(&[2, 1])));
        assert_eq!(a.squarefree(), p(&[-2, 1, 1]));
    }
}
