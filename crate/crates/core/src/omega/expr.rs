//! Symbolic ω expressions and their reduction.

use crate::algebra::Spectral;
use crate::arith::{qi, Ring, Q};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An atom of an ω expression. Two-site atoms always have `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `ω(λ_i − λ_j + shift)`.
    Omega {
        /// First site.
        i: usize,
        /// Second site.
        j: usize,
        /// Integer shift.
        shift: i64,
    },
    /// `p(λ_i − λ_j + shift)`.
    P {
        /// First site.
        i: usize,
        /// Second site.
        j: usize,
        /// Integer shift.
        shift: i64,
    },
    /// `ω(0)`.
    OmegaZero,
    /// `ω(±1)` (ω is even).
    OmegaOne,
}

impl Atom {
    /// `ω(λ_i − λ_j + k)`, using evenness to order the sites.
    pub fn omega(i: usize, j: usize, k: i64) -> Atom {
        assert_ne!(i, j, "same-site ω values are separate atoms");
        if i < j {
            Atom::Omega { i, j, shift: k }
        } else {
            Atom::Omega { i: j, j: i, shift: -k }
        }
    }

    /// `p(λ_i − λ_j + k)`, using oddness of `p` (the sign is returned).
    pub fn p(i: usize, j: usize, k: i64) -> (Atom, i64) {
        assert_ne!(i, j, "p has a pole at coincident arguments");
        if i < j {
            (Atom::P { i, j, shift: k }, 1)
        } else {
            (Atom::P { i: j, j: i, shift: -k }, -1)
        }
    }

    /// True for every ω-type atom.
    pub fn is_omega(&self) -> bool {
        !matches!(self, Atom::P { .. })
    }

    fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        let shift = |k: i64| match k {
            0 => String::new(),
            k if k > 0 => format!("+{k}"),
            k => format!("{k}"),
        };
        match self {
            Atom::Omega { i, j, shift: k } => format!("ω({}−{}{})", name(*i), name(*j), shift(*k)),
            Atom::P { i, j, shift: k } => format!("p({}−{}{})", name(*i), name(*j), shift(*k)),
            Atom::OmegaZero => "ω(0)".into(),
            Atom::OmegaOne => "ω(1)".into(),
        }
    }
}

/// A product of atoms with multiplicities.
pub type AtomMonomial = BTreeMap<Atom, u32>;

/// A polynomial in atoms with coefficients in `C`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaExpr<C> {
    terms: BTreeMap<AtomMonomial, C>,
}

impl<C: Ring> OmegaExpr<C> {
    /// Constant expression.
    pub fn constant(c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(AtomMonomial::new(), c);
        e
    }

    /// A single atom.
    pub fn atom(a: Atom) -> Self {
        let mut m = AtomMonomial::new();
        m.insert(a, 1);
        let mut e = Self::zero();
        e.add_term(m, C::one());
        e
    }

    /// `ω(λ_i − λ_j + k)` (or `ω(0)`, `ω(±1)` for `i = j`).
    pub fn omega(i: usize, j: usize, k: i64) -> Self {
        if i == j {
            return match k {
                0 => Self::atom(Atom::OmegaZero),
                1 | -1 => Self::atom(Atom::OmegaOne),
                _ => panic!("same-site ω only at 0 and ±1"),
            };
        }
        Self::atom(Atom::omega(i, j, k))
    }

    /// `p(λ_i − λ_j + k)`.
    pub fn p(i: usize, j: usize, k: i64) -> Self {
        let (a, s) = Atom::p(i, j, k);
        Self::atom(a).scale(&qi(s))
    }

    fn add_term(&mut self, m: AtomMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = Ring::add(old, &c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms.
    pub fn terms(&self) -> impl Iterator<Item = (&AtomMonomial, &C)> {
        self.terms.iter()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), Ring::mul(x, c));
        }
        out
    }

    /// The constant term.
    pub fn constant_term(&self) -> C {
        self.terms.get(&AtomMonomial::new()).cloned().unwrap_or_else(C::zero)
    }

    /// The coefficient as a constant expression, if no atoms occur.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&AtomMonomial::new()).cloned(),
            _ => None,
        }
    }

    /// True if any ω-type atom occurs.
    pub fn has_omega(&self) -> bool {
        self.terms.keys().any(|m| m.keys().any(|a| a.is_omega()))
    }

    /// Canonical text form with the given variable names.
    pub fn display_with(&self, name: &dyn Fn(usize) -> String) -> String
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let atoms: Vec<String> = m
                    .iter()
                    .map(|(a, e)| if *e == 1 { a.render(name) } else { format!("{}^{e}", a.render(name)) })
                    .collect();
                if atoms.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{}", atoms.join("·"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Ring> Zero for OmegaExpr<C> {
    fn zero() -> Self {
        OmegaExpr { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for OmegaExpr<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> std::ops::Add for OmegaExpr<C> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Ring::add(&self, &o)
    }
}

impl<C: Ring> std::ops::Mul for OmegaExpr<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Ring::mul(&self, &o)
    }
}

fn mono_mul(a: &AtomMonomial, b: &AtomMonomial) -> AtomMonomial {
    let mut m = a.clone();
    for (k, e) in b {
        *m.entry(k.clone()).or_insert(0) += e;
    }
    m
}

impl<C: Ring> Ring for OmegaExpr<C> {
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(mono_mul(a, b), Ring::mul(x, y));
            }
        }
        r
    }
    fn neg(&self) -> Self {
        OmegaExpr { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }
    fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero();
        for (m, x) in &self.terms {
            r.add_term(m.clone(), x.scale(c));
        }
        r
    }
    fn try_inv(&self) -> Option<Self> {
        self.as_constant().and_then(|c| c.try_inv()).map(Self::constant)
    }
}

/// `φ(z) = ¼(−3/(z+1) − 1/(z−1) + 3/z + 1/(z+2))` at a rational point.
pub fn phi_q(z: &Q) -> Result<Q> {
    for pole in [-2, -1, 0, 1] {
        if *z == qi(pole) {
            return Err(Error::PoleAtZ(format!("φ has a pole at z = {pole}")));
        }
    }
    let one = Q::one();
    let v = -qi(3) / (z + &one) - &one / (z - &one) + qi(3) / z + &one / (z + qi(2));
    Ok(v / qi(4))
}

/// `φ(z)` for `z` in a coefficient ring.
pub fn phi<C: Ring>(z: &C) -> Result<C> {
    let shifted = |k: i64| Ring::add(z, &C::one().scale(&qi(k)));
    let inv = |x: C| x.try_inv().ok_or_else(|| Error::PoleAtZ("φ evaluated at a pole".into()));
    let terms = [(-3, inv(shifted(1))?), (-1, inv(shifted(-1))?), (3, inv(z.clone())?), (1, inv(shifted(2))?)];
    let mut acc = C::zero();
    for (c, t) in terms {
        acc = Ring::add(&acc, &t.scale(&qi(c)));
    }
    Ok(acc.scale(&Q::new(1.into(), 4.into())))
}

/// Rewrites one atom in terms of base atoms.
fn reduce_atom<S: Spectral>(a: &Atom, ctx: &S) -> Result<OmegaExpr<S::C>> {
    Ok(match a {
        Atom::P { i, j, shift } => {
            let sign = if shift.rem_euclid(2) == 0 { 1 } else { -1 };
            OmegaExpr::p(*i, *j, 0).scale(&qi(sign))
        }
        Atom::Omega { i, j, shift } => {
            let x = ctx.diff(*i, *j);
            let at = |m: i64| Ring::add(&x, &ctx.constant(&qi(m)));
            let p = OmegaExpr::<S::C>::p(*i, *j, 0);
            let mut val = OmegaExpr::omega(*i, *j, 0);
            let k = *shift;
            if k > 0 {
                // ω(x+m+1) = (−1)^m p(x) − φ(x+m) − ω(x+m)
                for m in 0..k {
                    let sp = if m % 2 == 0 { p.clone() } else { p.neg() };
                    val = Ring::sub(&Ring::sub(&sp, &OmegaExpr::constant(phi(&at(m))?)), &val);
                }
            } else {
                // ω(x+m−1) = (−1)^(m−1) p(x) − φ(x+m−1) − ω(x+m)
                let mut m = 0;
                while m > k {
                    let sp = if (m - 1).rem_euclid(2) == 0 { p.clone() } else { p.neg() };
                    val = Ring::sub(&Ring::sub(&sp, &OmegaExpr::constant(phi(&at(m - 1))?)), &val);
                    m -= 1;
                }
            }
            val
        }
        other => OmegaExpr::atom(other.clone()),
    })
}

/// Eliminates every shifted atom through the functional equation and `p(x+1) = −p(x)`.
pub fn omega_reduce<S: Spectral>(e: &OmegaExpr<S::C>, ctx: &S) -> Result<OmegaExpr<S::C>> {
    let mut cache: BTreeMap<Atom, OmegaExpr<S::C>> = BTreeMap::new();
    let mut out = OmegaExpr::zero();
    for (m, c) in e.terms() {
        let mut prod = OmegaExpr::constant(c.clone());
        for (a, k) in m {
            if !cache.contains_key(a) {
                cache.insert(a.clone(), reduce_atom(a, ctx)?);
            }
            let r = &cache[a];
            for _ in 0..*k {
                prod = Ring::mul(&prod, r);
            }
        }
        out = Ring::add(&out, &prod);
    }
    Ok(out)
}

/// Reduces `e` and checks that no ω-type atom survives; returns the ω-free remainder.
pub fn assert_omega_cancellation<S: Spectral>(e: &OmegaExpr<S::C>, ctx: &S) -> Result<OmegaExpr<S::C>>
where
    S::C: fmt::Display,
{
    let r = omega_reduce(e, ctx)?;
    if let Some((m, c)) = r.terms().find(|(m, _)| m.keys().any(|a| a.is_omega())) {
        let name = |i: usize| ctx.name(i);
        let atoms: Vec<String> = m.keys().map(|a| a.render(&name)).collect();
        return Err(Error::ResidualOmega(format!("coefficient {c} of {}", atoms.join("·"))));
    }
    Ok(r)
}
