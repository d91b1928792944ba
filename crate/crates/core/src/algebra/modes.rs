//! Text syntax for words, mode extraction and the admissibility conditions.

use super::spectral::Symbolic;
use super::word::{Kind, Letter, NormalForm, Word};
use crate::arith::{RationalFunction, Q};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Argument of a letter in text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    /// Spectral variable (generating function).
    Var(String),
    /// Mode index `p ≥ 1`.
    Mode(u32),
}

/// A parsed word such as `j+(l1) j-(l2)` or `:b*_1 c*_1:`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedWord {
    /// Written inside normal-ordering colons.
    pub normal: bool,
    /// Letters in written order.
    pub letters: Vec<(Kind, Arg)>,
}

/// Parses the plain-text word syntax.
pub fn parse_word(s: &str) -> Result<ParsedWord> {
    let t = s.trim();
    let (normal, body) = if t.len() >= 2 && t.starts_with(':') && t.ends_with(':') {
        (true, &t[1..t.len() - 1])
    } else if t.contains(':') {
        return Err(Error::Parse(format!("unbalanced normal-ordering colons in {s:?}")));
    } else {
        (false, t)
    };
    let mut letters = Vec::new();
    for tok in body.split_whitespace() {
        if let Some(open) = tok.find('(') {
            if !tok.ends_with(')') {
                return Err(Error::Parse(format!("missing ')' in {tok:?}")));
            }
            let kind = Kind::parse(&tok[..open])?;
            let name = tok[open + 1..tok.len() - 1].trim();
            if name.is_empty() {
                return Err(Error::Parse(format!("empty argument in {tok:?}")));
            }
            letters.push((kind, Arg::Var(name.to_string())));
        } else if let Some(us) = tok.rfind('_') {
            let kind = Kind::parse(&tok[..us])?;
            let p: u32 = tok[us + 1..].parse().map_err(|_| Error::Parse(format!("bad mode index in {tok:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!("mode indices start at 1: {tok:?}")));
            }
            letters.push((kind, Arg::Mode(p)));
        } else {
            return Err(Error::Parse(format!("letter {tok:?} needs an argument (x) or a mode _p")));
        }
    }
    Ok(ParsedWord { normal, letters })
}

fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    (a.len(), a).cmp(&(b.len(), b))
}

impl ParsedWord {
    /// The generating-function word with variables indexed in natural name order.
    pub fn to_letters(&self) -> Result<(Word, Symbolic)> {
        let mut names: Vec<String> = Vec::new();
        for (_, a) in &self.letters {
            match a {
                Arg::Var(v) => {
                    if !names.contains(v) {
                        names.push(v.clone());
                    }
                }
                Arg::Mode(_) => return Err(Error::Parse("expected spectral arguments, found a mode index".into())),
            }
        }
        names.sort_by(|a, b| natural_cmp(a, b));
        let word = self
            .letters
            .iter()
            .map(|(k, a)| match a {
                Arg::Var(v) => Letter::new(*k, names.iter().position(|n| n == v).expect("collected")),
                Arg::Mode(_) => unreachable!(),
            })
            .collect();
        Ok((word, Symbolic::new(names)))
    }

    /// The mode word.
    pub fn to_modes(&self) -> Result<ModeWord> {
        self.letters
            .iter()
            .map(|(k, a)| match a {
                Arg::Mode(p) => Ok(ModeLetter { kind: *k, mode: *p }),
                Arg::Var(_) => Err(Error::Parse("expected mode indices, found a spectral argument".into())),
            })
            .collect()
    }
}

/// A mode `x^ε_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeLetter {
    /// Generator kind.
    pub kind: Kind,
    /// Mode index.
    pub mode: u32,
}

impl fmt::Display for ModeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.symbol(), self.mode)
    }
}

/// An ordered product of modes.
pub type ModeWord = Vec<ModeLetter>;

/// Sorts modes by kind then index; fermion transpositions give signs and repeated
/// fermion modes give zero.
fn canonical_modes(mut v: ModeWord) -> Option<(ModeWord, i32)> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len().saturating_sub(1 + i) {
            if v[j] > v[j + 1] {
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

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Coefficient of `Π_v λ_v^{p_v − 1}` in a normal form, as a combination of mode
/// words. Every coefficient must be a polynomial in the extraction variables.
pub fn mode_extract(
    nf: &NormalForm<RationalFunction>,
    ctx: &Symbolic,
    modes: &BTreeMap<String, u32>,
) -> Result<BTreeMap<ModeWord, Q>> {
    let mut out: BTreeMap<ModeWord, Q> = BTreeMap::new();
    for (word, coef) in nf.terms() {
        let poly = coef.as_polynomial().ok_or_else(|| {
            Error::SingularExtraction(format!(
                "coefficient {coef} of :{}: has a pole",
                super::word_to_string(word, ctx.names())
            ))
        })?;
        let mut needed: Vec<String> = word.iter().map(|l| ctx.names()[l.site].clone()).collect();
        needed.extend(poly.variables());
        if let Some(v) = needed.iter().find(|v| !modes.contains_key(*v)) {
            return Err(Error::ConfigError(format!("no mode assigned to variable {v}")));
        }
        for (mono, c) in poly.terms() {
            // for every variable: the letters sitting at it and the ways to share the
            // remaining power among them
            let mut factors: Vec<(Vec<usize>, Vec<Vec<u32>>)> = Vec::new();
            for (name, p) in modes {
                let e = mono.get(name).copied().unwrap_or(0);
                let letters: Vec<usize> = match ctx.names().iter().position(|n| n == name) {
                    Some(s) => (0..word.len()).filter(|&i| word[i].site == s).collect(),
                    None => vec![],
                };
                let comps = if *p >= 1 && e <= p - 1 { compositions(p - 1 - e, letters.len()) } else { vec![] };
                factors.push((letters, comps));
            }
            let mut choices: Vec<Vec<u32>> = vec![vec![0; word.len()]];
            for (letters, comps) in &factors {
                let mut next = Vec::new();
                for base in &choices {
                    for comp in comps {
                        let mut b = base.clone();
                        for (li, extra) in letters.iter().zip(comp) {
                            b[*li] = *extra;
                        }
                        next.push(b);
                    }
                }
                choices = next;
            }
            for ch in choices {
                let mw: ModeWord =
                    word.iter().zip(&ch).map(|(l, extra)| ModeLetter { kind: l.kind, mode: 1 + extra }).collect();
                if let Some((cw, sign)) = canonical_modes(mw) {
                    *out.entry(cw).or_insert_with(Q::zero) += c * Q::from_integer(sign.into());
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Outcome of the admissibility test with its diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    /// Both conditions hold.
    pub ok: bool,
    /// Letter counts `(k₁,…,k₅)` for `b*, c*, j⁺, j⁰, j⁻`.
    pub counts: [usize; 5],
    /// `k₁+…+k₅ ≤ n`.
    pub fits: bool,
    /// `k₁ − k₂ + 2k₃ − 2k₅`, zero in the `sl₂`-invariant sector.
    pub charge: i64,
}

/// Locality bound and `sl₂` charge of a mode word on an interval of length `n`.
pub fn admissible(word: &[ModeLetter], n: usize) -> Admissibility {
    let mut counts = [0usize; 5];
    for l in word {
        counts[Kind::ALL.iter().position(|k| *k == l.kind).expect("kind")] += 1;
    }
    let total: usize = counts.iter().sum();
    let charge = counts[0] as i64 - counts[1] as i64 + 2 * counts[2] as i64 - 2 * counts[4] as i64;
    let fits = total <= n;
    Admissibility { ok: fits && charge == 0, counts, fits, charge }
}

