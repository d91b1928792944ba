//! Sparse multivariate polynomials over `Q` in named variables.

use super::{q_to_string, Poly, Ring, Q};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A monomial: variable name → positive exponent.
pub type Monomial = BTreeMap<String, u32>;

fn mono_degree(m: &Monomial) -> u32 {
    m.values().sum()
}

/// Graded lexicographic comparison (variables ordered by name).
fn grlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da = mono_degree(a);
    let db = mono_degree(b);
    if da != db {
        return da.cmp(&db);
    }
    let vars: BTreeSet<&String> = a.keys().chain(b.keys()).collect();
    for v in vars {
        let ea = a.get(v).copied().unwrap_or(0);
        let eb = b.get(v).copied().unwrap_or(0);
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    Ordering::Equal
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut r = a.clone();
    for (v, e) in b {
        *r.entry(v.clone()).or_insert(0) += e;
    }
    r
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut r = a.clone();
    for (v, e) in b {
        let ea = r.get(v).copied().unwrap_or(0);
        if ea < *e {
            return None;
        }
        if ea == *e {
            r.remove(v);
        } else {
            r.insert(v.clone(), ea - e);
        }
    }
    Some(r)
}

/// Sparse polynomial `Σ c_m · m` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    /// Constant polynomial.
    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(), c);
        }
        MPoly { terms }
    }

    /// The polynomial consisting of one variable.
    pub fn var(name: &str) -> Self {
        let mut m = Monomial::new();
        m.insert(name.to_string(), 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, Q::one());
        MPoly { terms }
    }

    /// `c · m`.
    pub fn term(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Iterator over `(monomial, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Variables that occur.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.keys().cloned()).collect()
    }

    /// Total degree (`None` for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, v: &str) -> u32 {
        self.terms.keys().map(|m| m.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Leading term under graded lex order.
    pub fn lead(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Q> {
        if self.terms.is_empty() {
            return Some(Q::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::new()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (ld_m, ld_c) = d.lead()?;
        let (ld_m, ld_c) = (ld_m.clone(), ld_c.clone());
        let mut r = self.clone();
        let mut quot = MPoly::default();
        while let Some((lm, lc)) = r.lead() {
            let m = mono_div(lm, &ld_m)?;
            let c = lc / &ld_c;
            let t = MPoly::term(m, c);
            r = r.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Gcd of the coefficients' numerators over lcm of denominators, signed so that
    /// the leading coefficient of `self / content` is positive.
    pub fn content(&self) -> Q {
        use num_integer::Integer;
        let mut g = num_bigint::BigInt::zero();
        let mut l = num_bigint::BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return Q::one();
        }
        let c = Q::new(g, l);
        match self.lead() {
            Some((_, lc)) if lc.is_negative() => -c,
            _ => c,
        }
    }

    /// Evaluates at a point given by a variable assignment; unassigned variables
    /// are an error.
    pub fn eval(&self, point: &BTreeMap<String, Q>) -> Option<Q> {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let x = point.get(v)?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Substitutes a univariate polynomial for every variable.
    pub fn subs_univariate(&self, map: &BTreeMap<String, Poly>) -> Option<Poly> {
        let mut acc = Poly::default();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (v, e) in m {
                let x = map.get(v)?;
                for _ in 0..*e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }

    /// Substitutes polynomials for some variables (others are kept).
    pub fn subs(&self, map: &BTreeMap<String, MPoly>) -> MPoly {
        let mut acc = MPoly::default();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (v, e) in m {
                let x = match map.get(v) {
                    Some(p) => p.clone(),
                    None => MPoly::var(v),
                };
                for _ in 0..*e {
                    t = t.mul(&x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Q::one())
    }
}

crate::arith::ring::impl_ring_ops!(MPoly);

impl Ring for MPoly {
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
    fn mul(&self, o: &Self) -> Self {
        let mut r = MPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(mono_mul(a, b), x * y);
            }
        }
        r
    }
    fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
    fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return MPoly::default();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }
    fn try_inv(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(MPoly::constant(c.recip())),
            _ => None,
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        let mut first = true;
        for (m, c) in ts {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let factors: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", q_to_string(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", q_to_string(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}
