//! Multivariate rational functions in named variables, with a small expression parser.

use super::{MPoly, Poly, RatFunc1, Ring, Q};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// `num/den` over `Q`. The denominator is normalized by its content; common factors
/// that are single variables or differences of two variables are cancelled, which
/// covers every denominator produced by the operator-product and coefficient
/// tables. Equality is exact (cross-multiplication), independent of representation.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MPoly,
    den: MPoly,
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl RationalFunction {
    /// Builds `num/den`; errors when `den` is identically zero.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::PoleAtZ("identically zero denominator".into()));
        }
        let mut r = RationalFunction { num, den };
        r.normalize();
        Ok(r)
    }

    /// Polynomial as a rational function.
    pub fn from_poly(p: MPoly) -> Self {
        RationalFunction { num: p, den: MPoly::one() }
    }

    /// Constant.
    pub fn constant(c: Q) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    /// A single variable.
    pub fn var(name: &str) -> Self {
        Self::from_poly(MPoly::var(name))
    }

    /// `1/(a − b)^k` for two variables.
    pub fn inv_diff_pow(a: &str, b: &str, k: u32) -> Self {
        let d = MPoly::var(a).sub(&MPoly::var(b));
        let mut den = MPoly::one();
        for _ in 0..k {
            den = den.mul(&d);
        }
        RationalFunction { num: MPoly::one(), den }
    }

    /// Numerator.
    pub fn num(&self) -> &MPoly {
        &self.num
    }

    /// Denominator.
    pub fn den(&self) -> &MPoly {
        &self.den
    }

    /// Variables occurring in numerator or denominator.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one();
            return;
        }
        let c = self.den.content();
        if !c.is_one() {
            let ci = c.recip();
            self.num = self.num.scale(&ci);
            self.den = self.den.scale(&ci);
        }
        if self.den.as_constant().is_some() {
            return;
        }
        let vars: Vec<String> = self.den.variables().into_iter().collect();
        let mut cands: Vec<MPoly> = vars.iter().map(|v| MPoly::var(v)).collect();
        for i in 0..vars.len() {
            for j in (i + 1)..vars.len() {
                cands.push(MPoly::var(&vars[i]).sub(&MPoly::var(&vars[j])));
            }
        }
        for f in cands {
            loop {
                let Some(d2) = self.den.div_exact(&f) else { break };
                let Some(n2) = self.num.div_exact(&f) else { break };
                self.den = d2;
                self.num = n2;
            }
        }
        let c = self.den.content();
        if !c.is_one() {
            let ci = c.recip();
            self.num = self.num.scale(&ci);
            self.den = self.den.scale(&ci);
        }
    }

    /// Exact quotient; errors on division by zero.
    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::PoleAtZ("division by zero rational function".into()));
        }
        RationalFunction::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { Self::one().div(self)? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Evaluates at a point; errors at a pole or on unassigned variables.
    pub fn eval(&self, point: &BTreeMap<String, Q>) -> Result<Q> {
        let miss = || Error::ConfigError("unassigned variable in evaluation".into());
        let d = self.den.eval(point).ok_or_else(miss)?;
        if d.is_zero() {
            return Err(Error::PoleAtZ(format!("{point:?}")));
        }
        Ok(self.num.eval(point).ok_or_else(miss)? / d)
    }

    /// Substitutes univariate polynomials for all variables.
    pub fn subs_univariate(&self, map: &BTreeMap<String, Poly>) -> Result<RatFunc1> {
        let miss = || Error::ConfigError("unassigned variable in substitution".into());
        let n = self.num.subs_univariate(map).ok_or_else(miss)?;
        let d = self.den.subs_univariate(map).ok_or_else(miss)?;
        RatFunc1::new(n, d)
    }

    /// Substitutes polynomials for some variables.
    pub fn subs(&self, map: &BTreeMap<String, MPoly>) -> Result<Self> {
        RationalFunction::new(self.num.subs(map), self.den.subs(map))
    }

    /// The polynomial `num/den` when the division is exact.
    pub fn as_polynomial(&self) -> Option<MPoly> {
        self.num.div_exact(&self.den)
    }

    /// Parses an infix expression in `+ - * / ^`, parentheses, rationals and
    /// identifiers (exponents must be integer literals).
    pub fn parse(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0 };
        let r = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in '{s}' at token {}", p.pos)));
        }
        Ok(r)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MPoly::default())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::constant(Q::one())
    }
}

crate::arith::ring::impl_ring_ops!(RationalFunction);

impl Ring for RationalFunction {
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut r = if self.den == o.den {
            RationalFunction { num: self.num.add(&o.num), den: self.den.clone() }
        } else {
            RationalFunction {
                num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
                den: self.den.mul(&o.den),
            }
        };
        r.normalize();
        r
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = RationalFunction { num: self.num.mul(&o.num), den: self.den.mul(&o.den) };
        r.normalize();
        r
    }
    fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }
    fn try_inv(&self) -> Option<Self> {
        Self::one().div(self).ok()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den.as_constant() {
            Some(c) if c.is_one() => write!(f, "{}", self.num),
            _ => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Q),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let v: String = cs[st..i].iter().collect();
            out.push(Tok::Num(super::parse_q(&v)?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in '{s}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                acc = acc.div(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    self.pos += 1;
                    let e: i32 = n.to_integer().try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    return base.pow(if neg { -e } else { e });
                }
                _ => return Err(Error::Parse("exponent must be an integer literal".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(n))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(RationalFunction::var(&v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let r = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(r)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn parse_and_eval() {
        let r = RationalFunction::parse("2*(17 - 6*m^2 + m^4)/(3*(m^2-1))").unwrap();
        let mut pt = BTreeMap::new();
        pt.insert("m".to_string(), qi(0));
        assert_eq!(r.eval(&pt).unwrap(), q(-34, 3));
    }

    #[test]
    fn cancellation_of_differences() {
        let r = RationalFunction::parse("(x^2 - y^2)/(x - y)").unwrap();
        assert_eq!(r.den().as_constant(), Some(qi(1)));
        assert_eq!(r, RationalFunction::parse("x + y").unwrap());
    }

    #[test]
    fn equality_is_representation_independent() {
        let a = RationalFunction::parse("1/(x-y) - 1/(x-z)").unwrap();
        let b = RationalFunction::parse("(y - z)/((x-y)*(x-z))").unwrap();
        assert_eq!(a, b);
    }
}
