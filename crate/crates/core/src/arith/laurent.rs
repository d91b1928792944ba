//! Truncated Laurent series with conservative truncation tracking.

use super::{PiPoly, RatFunc1, Ring, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// `Σ_{k ≥ start} c_k t^k + O(t^order)`.
///
/// `order == None` marks an exact (finite) series. Coefficients with exponent at or
/// beyond `order` are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<C: Ring> {
    var: String,
    start: i64,
    coeffs: Vec<C>,
    order: Option<i64>,
}

impl<C: Ring> LaurentSeries<C> {
    /// Builds `Σ coeffs[i] t^(start+i) + O(t^order)`.
    pub fn new(var: &str, start: i64, coeffs: Vec<C>, order: Option<i64>) -> Self {
        let mut s = LaurentSeries { var: var.to_string(), start, coeffs, order };
        s.normalize();
        s
    }

    /// Exact constant series.
    pub fn constant(var: &str, c: C) -> Self {
        Self::new(var, 0, vec![c], None)
    }

    /// Exact monomial `c · t^k`.
    pub fn monomial(var: &str, k: i64, c: C) -> Self {
        Self::new(var, k, vec![c], None)
    }

    /// The zero series known to `O(t^order)`.
    pub fn zero_to(var: &str, order: i64) -> Self {
        Self::new(var, order, vec![], Some(order))
    }

    fn normalize(&mut self) {
        if let Some(o) = self.order {
            let keep = (o - self.start).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        self.coeffs.drain(..lead);
        self.start += lead as i64;
        if self.coeffs.is_empty() {
            self.start = self.order.unwrap_or(0);
        }
    }

    /// Variable name.
    pub fn var(&self) -> &str {
        &self.var
    }

    /// Truncation order (`None` when exact).
    pub fn order(&self) -> Option<i64> {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient (`None` if no such term is known).
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.start)
        }
    }

    /// Coefficient of `t^k`; errors when `k` lies beyond the truncation order.
    pub fn coeff(&self, k: i64) -> Result<C> {
        if let Some(o) = self.order {
            if k >= o {
                return Err(Error::SingularLimit(format!(
                    "coefficient of {}^{k} requested beyond truncation order {o}",
                    self.var
                )));
            }
        }
        if k < self.start || k >= self.start + self.coeffs.len() as i64 {
            return Ok(C::zero());
        }
        Ok(self.coeffs[(k - self.start) as usize].clone())
    }

    /// `(exponent, coefficient)` pairs of the nonzero retained terms.
    pub fn terms(&self) -> Vec<(i64, C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.start + i as i64, c.clone()))
            .collect()
    }

    /// Terms with negative exponent.
    pub fn singular_part(&self) -> Vec<(i64, C)> {
        self.terms().into_iter().filter(|(k, _)| *k < 0).collect()
    }

    /// Drops all terms of exponent `≥ order`.
    pub fn truncate(&self, order: i64) -> Self {
        let o = match self.order {
            Some(x) => x.min(order),
            None => order,
        };
        Self::new(&self.var, self.start, self.coeffs.clone(), Some(o))
    }

    fn check_var(&self, o: &Self) {
        assert_eq!(self.var, o.var, "series in different variables");
    }

    fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        }
    }

    /// Sum.
    pub fn add(&self, o: &Self) -> Self {
        self.check_var(o);
        let order = Self::min_order(self.order, o.order);
        let lo = self.start.min(o.start);
        let hi_a = self.start + self.coeffs.len() as i64;
        let hi_b = o.start + o.coeffs.len() as i64;
        let mut hi = hi_a.max(hi_b);
        if let Some(x) = order {
            hi = hi.min(x);
        }
        let mut c = Vec::new();
        for k in lo..hi.max(lo) {
            let a = if k >= self.start && k < hi_a { self.coeffs[(k - self.start) as usize].clone() } else { C::zero() };
            let b = if k >= o.start && k < hi_b { o.coeffs[(k - o.start) as usize].clone() } else { C::zero() };
            c.push(Ring::add(&a, &b));
        }
        Self::new(&self.var, lo, c, order)
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self::new(&self.var, self.start, self.coeffs.iter().map(|c| c.neg()).collect(), self.order)
    }

    /// Difference.
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Multiplication by a ring element.
    pub fn scale_by(&self, s: &C) -> Self {
        Self::new(&self.var, self.start, self.coeffs.iter().map(|c| c.mul(s)).collect(), self.order)
    }

    /// Product; the truncation order is `min(v_a + o_b, v_b + o_a)`.
    pub fn mul(&self, o: &Self) -> Self {
        self.check_var(o);
        let va = self.valuation();
        let vb = o.valuation();
        let order = match (va, vb) {
            (Some(va), Some(vb)) => Self::min_order(self.order.map(|x| x + vb), o.order.map(|x| x + va)),
            (None, Some(vb)) => self.order.map(|x| x + vb),
            (Some(va), None) => o.order.map(|x| x + va),
            (None, None) => match (self.order, o.order) {
                (Some(x), Some(y)) => Some(x + y),
                (Some(x), None) | (None, Some(x)) => Some(x),
                (None, None) => None,
            },
        };
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            let ord = order.unwrap_or(0);
            return Self::zero_to(&self.var, ord);
        }
        let start = self.start + o.start;
        let mut len = self.coeffs.len() + o.coeffs.len() - 1;
        if let Some(x) = order {
            len = len.min((x - start).max(0) as usize);
        }
        let mut c = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                c[i + j] = Ring::add(&c[i + j], &Ring::mul(&a, b));
            }
        }
        Self::new(&self.var, start, c, order)
    }

    /// Multiplicative inverse; requires an invertible lowest coefficient.
    ///
    /// An exact series is inverted to `terms` terms of relative precision.
    pub fn invert(&self, terms: usize) -> Result<Self> {
        let v = self.valuation().ok_or(Error::InvertAtZeroLeading)?;
        let l0 = self.coeffs[0].try_inv().ok_or(Error::InvertAtZeroLeading)?;
        let rel = match self.order {
            Some(o) => (o - v) as usize,
            None => terms,
        };
        let mut inv: Vec<C> = Vec::with_capacity(rel);
        for k in 0..rel {
            let mut s = if k == 0 { C::one() } else { C::zero() };
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                s = Ring::sub(&s, &Ring::mul(&self.coeffs[j], &inv[k - j]));
            }
            inv.push(Ring::mul(&s, &l0));
        }
        Ok(Self::new(&self.var, -v, inv, Some(-v + rel as i64)))
    }

    /// Maps coefficients into another ring.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentSeries<D> {
        LaurentSeries::new(&self.var, self.start, self.coeffs.iter().map(f).collect(), self.order)
    }
}

impl LaurentSeries<Q> {
    /// Expansion of a univariate rational function around 0 to `O(t^order)`.
    pub fn from_ratfunc(var: &str, r: &RatFunc1, order: i64) -> Self {
        if r.is_zero() {
            return Self::zero_to(var, order);
        }
        let vn = r.num().valuation().unwrap() as i64;
        let vd = r.den().valuation().unwrap() as i64;
        let v = vn - vd;
        let need = (order - v).max(0) as usize;
        let n0: Vec<Q> = r.num().coeffs()[vn as usize..].to_vec();
        let d0: Vec<Q> = r.den().coeffs()[vd as usize..].to_vec();
        let inv0 = d0[0].recip();
        let mut out: Vec<Q> = Vec::with_capacity(need);
        for k in 0..need {
            let mut s = n0.get(k).cloned().unwrap_or_else(Q::zero);
            for j in 1..=k.min(d0.len() - 1) {
                s -= &d0[j] * &out[k - j];
            }
            out.push(s * &inv0);
        }
        Self::new(var, v, out, Some(order))
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn binomial(n: u64, k: u64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli numbers `B_0 … B_n` (with `B_1 = −1/2`).
pub(crate) fn bernoulli(n: usize) -> Vec<Q> {
    let mut b: Vec<Q> = vec![Q::one()];
    for m in 1..=n {
        let mut s = Q::zero();
        for (k, bk) in b.iter().enumerate() {
            s += Q::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
        }
        b.push(-s / Q::from_integer(BigInt::from(m as u64 + 1)));
    }
    b
}

/// Coefficients `s_k` of `y / sin y = Σ s_k y^{2k}` for `k < n`.
pub(crate) fn y_over_sin_coeffs(n: usize) -> Vec<Q> {
    let b = bernoulli(2 * n);
    (0..n)
        .map(|k| {
            // (-1)^(k+1) (2^(2k) - 2) B_(2k) / (2k)!
            let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
            let two = num_traits::pow(BigInt::from(2), 2 * k);
            let f = Q::from_integer(two - BigInt::from(2));
            sign * f * &b[2 * k] / Q::from_integer(factorial(2 * k as u64))
        })
        .collect()
}

/// Laurent series of `p(d·t) = π / (2 sin(π d t))` to `O(t^order)`, `d ≠ 0`.
pub fn p_series(var: &str, d: &Q, order: i64) -> LaurentSeries<PiPoly> {
    assert!(!d.is_zero(), "p series at a vanishing direction");
    let n = ((order + 1).max(0) as usize).div_ceil(2) + 1;
    let s = y_over_sin_coeffs(n);
    let mut coeffs = Vec::new();
    // p(dt) = 1/(2dt) · Σ s_k π^{2k} d^{2k} t^{2k}
    for (k, sk) in s.iter().enumerate() {
        let c = sk * num_traits::pow(d.clone(), 2 * k) / (Q::from_integer(BigInt::from(2)) * d);
        coeffs.push(PiPoly::monomial(k as u32, c));
        coeffs.push(PiPoly::default());
    }
    LaurentSeries::new(var, -1, coeffs, Some(order))
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts = self.terms();
        if ts.is_empty() {
            write!(f, "0")?;
        }
        for (i, (k, c)) in ts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·{}", self.var)?,
                _ => write!(f, "({c})·{}^{k}", self.var)?,
            }
        }
        if let Some(o) = self.order {
            write!(f, " + O({}^{o})", self.var)?;
        }
        Ok(())
    }
}
