//! Generators, letters, words and normal forms of the fermion-current algebra.

use crate::arith::Ring;
use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

/// The five generator kinds, declared in the normal-ordering order
/// `b* ≼ c* ≼ j⁺ ≼ j⁰ ≼ j⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `b*`, index `{1,2}`.
    B,
    /// `c*`, index `{2,1}`.
    C,
    /// `j⁺`, index `{1,3}`.
    Jp,
    /// `j⁰`, index `{2,2}`.
    J0,
    /// `j⁻`, index `{3,1}`.
    Jm,
}

impl Kind {
    /// All kinds in order.
    pub const ALL: [Kind; 5] = [Kind::B, Kind::C, Kind::Jp, Kind::J0, Kind::Jm];

    /// Fermionic kinds anticommute.
    pub fn is_fermion(self) -> bool {
        matches!(self, Kind::B | Kind::C)
    }

    /// The two-index label `{i,j}`.
    pub fn epsilon(self) -> (u8, u8) {
        match self {
            Kind::B => (1, 2),
            Kind::C => (2, 1),
            Kind::Jp => (1, 3),
            Kind::J0 => (2, 2),
            Kind::Jm => (3, 1),
        }
    }

    /// Inverse of [`Kind::epsilon`], also accepting the compact form `"12"`.
    pub fn from_epsilon(s: &str) -> Result<Kind> {
        let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
        match digits.as_str() {
            "12" => Ok(Kind::B),
            "21" => Ok(Kind::C),
            "13" => Ok(Kind::Jp),
            "22" => Ok(Kind::J0),
            "31" => Ok(Kind::Jm),
            _ => Err(Error::Parse(format!("unknown generator index {s:?}"))),
        }
    }

    /// Plain-text symbol: `b*`, `c*`, `j+`, `j0`, `j-`.
    pub fn symbol(self) -> &'static str {
        match self {
            Kind::B => "b*",
            Kind::C => "c*",
            Kind::Jp => "j+",
            Kind::J0 => "j0",
            Kind::Jm => "j-",
        }
    }

    /// Parses a plain-text symbol.
    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "b*" | "b" => Ok(Kind::B),
            "c*" | "c" => Ok(Kind::C),
            "j+" => Ok(Kind::Jp),
            "j0" => Ok(Kind::J0),
            "j-" => Ok(Kind::Jm),
            _ => Err(Error::Parse(format!("unknown generator {s:?}"))),
        }
    }
}

/// A generating function `x^ε(λ_site)`; sites index spectral variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    /// Generator kind.
    pub kind: Kind,
    /// Index of the spectral variable.
    pub site: usize,
}

impl Letter {
    /// Constructor.
    pub fn new(kind: Kind, site: usize) -> Self {
        Letter { kind, site }
    }
}

/// An ordered product of letters.
pub type Word = Vec<Letter>;

/// Sort key of the normal ordering: kind first, then higher sites to the left.
pub fn order_key(l: &Letter) -> (Kind, Reverse<usize>) {
    (l.kind, Reverse(l.site))
}

/// True if the word is in normal order and has no repeated fermion.
pub fn is_canonical(w: &[Letter]) -> bool {
    w.windows(2).all(|p| order_key(&p[0]) < order_key(&p[1]) || (order_key(&p[0]) == order_key(&p[1]) && !p[0].kind.is_fermion()))
}

/// Reorders a word into normal order, ignoring commutator corrections; returns the
/// sign from fermion transpositions, or `None` if a fermion repeats.
pub fn canonical_mono(w: &[Letter]) -> Option<(Word, i32)> {
    let mut v = w.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len().saturating_sub(1 + i) {
            if order_key(&v[j]) > order_key(&v[j + 1]) {
                if v[j].kind.is_fermion() && v[j + 1].kind.is_fermion() {
                    sign = -sign;
                }
                v.swap(j, j + 1);
            }
        }
    }
    if v.windows(2).any(|p| p[0] == p[1] && p[0].kind.is_fermion()) {
        return None;
    }
    Some((v, sign))
}

/// Renders a word with variable names.
pub fn word_to_string(w: &[Letter], names: &[String]) -> String {
    if w.is_empty() {
        return "I".into();
    }
    w.iter()
        .map(|l| format!("{}({})", l.kind.symbol(), names.get(l.site).cloned().unwrap_or_else(|| format!("λ{}", l.site + 1))))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A finite linear combination of words with coefficients in `C`; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> Default for NormalForm<C> {
    fn default() -> Self {
        NormalForm { terms: BTreeMap::new() }
    }
}

impl<C: Ring> NormalForm<C> {
    /// The single word with coefficient 1.
    pub fn word(w: Word) -> Self {
        let mut nf = Self::default();
        nf.add_term(w, C::one());
        nf
    }

    /// Adds `c·w`.
    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let s = Ring::add(old, &c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Adds `c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), Ring::mul(x, c));
        }
    }

    /// Terms in word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True if zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coeff(&self, w: &[Letter]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &C) -> Self {
        let mut out = Self::default();
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> NormalForm<D> {
        let mut out = NormalForm::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl<C: Ring + fmt::Display> NormalForm<C> {
    /// Canonical text form, one term per `+`, words in normal-ordering colons.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·:{}:", word_to_string(w, names))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
