//! Normal ordering of products of generating functions.
//!
//! Each generator splits as `x(λ) = x₊(λ) + x₋(λ)`, where `x₋` annihilates `I` and
//! `x₊(λ₁)⋯x₊(λ_k)I` is the normal-ordered word `:x(λ₁)⋯x(λ_k):`. The plain product
//! `x₁(λ₁)⋯x_n(λ_n)I` is expanded from the right: `x₊` is appended to the word and
//! moved into normal order with the creation-part commutators
//! `[x₊(λ), y₊(μ)] = c₁·(z₊(λ) − z₊(μ))/(λ−μ)`, while `x₋` is contracted against the
//! letters already present using the operator-product rules.

use super::rules::ope;
use super::spectral::Spectral;
use super::word::{order_key, Kind, Letter, NormalForm, Word};
use crate::arith::{qi, Ring};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cell::RefCell;
use std::collections::HashMap;

/// Which out-of-order adjacent pair is resolved first while sorting a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost inversion.
    First,
    /// Rightmost inversion.
    Last,
    /// Pseudo-random inversion from a seeded generator.
    Seeded(u64),
}

/// Upper bound on rewrite steps for a single normal-ordering request.
const STEP_LIMIT: usize = 1_000_000;

/// Normal-ordering engine over a spectral coefficient domain.
pub struct Orderer<'a, S: Spectral> {
    ctx: &'a S,
    strategy: Strategy,
    rng: RefCell<ChaCha8Rng>,
    cache: RefCell<HashMap<Word, NormalForm<S::C>>>,
    steps: RefCell<usize>,
}

impl<'a, S: Spectral> Orderer<'a, S> {
    /// Engine with the given strategy.
    pub fn new(ctx: &'a S, strategy: Strategy) -> Self {
        let seed = match strategy {
            Strategy::Seeded(s) => s,
            _ => 0,
        };
        Orderer {
            ctx,
            strategy,
            rng: RefCell::new(ChaCha8Rng::seed_from_u64(seed)),
            cache: RefCell::new(HashMap::new()),
            steps: RefCell::new(0),
        }
    }

    fn tick(&self) -> Result<()> {
        let mut s = self.steps.borrow_mut();
        *s += 1;
        if *s > STEP_LIMIT {
            return Err(Error::NonTerminating(format!("more than {STEP_LIMIT} rewrite steps")));
        }
        Ok(())
    }

    /// Moves a word of creation parts into normal order.
    pub fn canon(&self, w: &[Letter]) -> Result<NormalForm<S::C>> {
        if let Some(hit) = self.cache.borrow().get(w) {
            return Ok(hit.clone());
        }
        self.tick()?;
        let inversions: Vec<usize> =
            (0..w.len().saturating_sub(1)).filter(|&i| order_key(&w[i]) > order_key(&w[i + 1])).collect();
        let out = if inversions.is_empty() {
            if w.windows(2).any(|p| p[0] == p[1] && p[0].kind.is_fermion()) {
                NormalForm::default()
            } else {
                NormalForm::word(w.to_vec())
            }
        } else {
            let i = match self.strategy {
                Strategy::First => inversions[0],
                Strategy::Last => inversions[inversions.len() - 1],
                Strategy::Seeded(_) => inversions[self.rng.borrow_mut().gen_range(0..inversions.len())],
            };
            let (a, b) = (w[i], w[i + 1]);
            let mut out = NormalForm::default();
            let mut swapped = w.to_vec();
            swapped.swap(i, i + 1);
            let sign = if a.kind.is_fermion() && b.kind.is_fermion() { -1 } else { 1 };
            out.add_scaled(&self.canon(&swapped)?, &self.ctx.constant(&qi(sign)));
            let (_, c1, z) = ope(a.kind, b.kind);
            if c1 != 0 {
                if a.site == b.site {
                    return Err(Error::SingularExtraction(format!(
                        "{} and {} share the variable {}",
                        a.kind.symbol(),
                        b.kind.symbol(),
                        self.ctx.name(a.site)
                    )));
                }
                let z = z.expect("simple pole emits a generator");
                let f = self.ctx.inv_diff(a.site, b.site).scale(&qi(c1));
                let mut wa = w[..i].to_vec();
                wa.push(Letter::new(z, a.site));
                wa.extend_from_slice(&w[i + 2..]);
                let mut wb = w[..i].to_vec();
                wb.push(Letter::new(z, b.site));
                wb.extend_from_slice(&w[i + 2..]);
                out.add_scaled(&self.canon(&wa)?, &f);
                out.add_scaled(&self.canon(&wb)?, &f.neg());
            }
            out
        };
        self.cache.borrow_mut().insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// `x₋(λ_site)` applied to the creation word `w·I`; the resulting words are not
    /// necessarily in normal order.
    fn apply_minus(&self, x: Kind, site: usize, w: &[Letter]) -> Result<NormalForm<S::C>> {
        self.tick()?;
        let mut out = NormalForm::default();
        let mut sign = 1i64;
        for (k, y) in w.iter().enumerate() {
            let (c2, c1, z) = ope(x, y.kind);
            if c2 != 0 || c1 != 0 {
                if site == y.site {
                    return Err(Error::SingularExtraction(format!(
                        "contraction at the coincident variable {}",
                        self.ctx.name(site)
                    )));
                }
                let inv = self.ctx.inv_diff(site, y.site);
                if c2 != 0 {
                    let mut rest = w[..k].to_vec();
                    rest.extend_from_slice(&w[k + 1..]);
                    out.add_term(rest, Ring::mul(&inv, &inv).scale(&qi(sign * c2)));
                }
                if c1 != 0 {
                    let z = z.expect("simple pole emits a generator");
                    let f = inv.scale(&qi(sign * c1));
                    let mut replaced = w[..k].to_vec();
                    replaced.push(Letter::new(z, y.site));
                    replaced.extend_from_slice(&w[k + 1..]);
                    out.add_term(replaced, f.clone());
                    for (tail, c) in self.apply_minus(z, site, &w[k + 1..])?.terms() {
                        let mut nw = w[..k].to_vec();
                        nw.extend_from_slice(tail);
                        out.add_term(nw, Ring::mul(&f, c));
                    }
                }
            }
            if x.is_fermion() && y.kind.is_fermion() {
                sign = -sign;
            }
        }
        Ok(out)
    }

    /// Expands the plain product `x₁(λ₁)⋯x_n(λ_n)` into normal-ordered words.
    pub fn plain_to_normal(&self, word: &[Letter]) -> Result<NormalForm<S::C>> {
        let mut state = NormalForm::word(Vec::new());
        for x in word.iter().rev() {
            let mut next = NormalForm::default();
            for (w, c) in state.terms() {
                let mut created = vec![*x];
                created.extend_from_slice(w);
                next.add_scaled(&self.canon(&created)?, c);
                for (w1, c1) in self.apply_minus(x.kind, x.site, w)?.terms() {
                    next.add_scaled(&self.canon(w1)?, &Ring::mul(c, c1));
                }
            }
            state = next;
        }
        Ok(state)
    }
}

/// Plain product `x₁(λ₁)⋯x_n(λ_n)` as a combination of normal-ordered words, with the
/// default (leftmost-inversion) strategy.
pub fn normal_order<S: Spectral>(ctx: &S, word: &[Letter]) -> Result<NormalForm<S::C>> {
    Orderer::new(ctx, Strategy::First).plain_to_normal(word)
}

/// The same expansion with an explicit rewrite strategy.
pub fn normal_order_with<S: Spectral>(ctx: &S, word: &[Letter], strategy: Strategy) -> Result<NormalForm<S::C>> {
    Orderer::new(ctx, strategy).plain_to_normal(word)
}

/// Expresses an (unordered) normal-ordered word `:x₁(λ₁)⋯x_n(λ_n):` in the
/// normal-ordered basis.
pub fn reorder_normal<S: Spectral>(ctx: &S, word: &[Letter]) -> Result<NormalForm<S::C>> {
    Orderer::new(ctx, Strategy::First).canon(word)
}
