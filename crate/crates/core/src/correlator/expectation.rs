//! Zero-temperature expectation values of products of generators.

use super::fat::fat_wick;
use crate::algebra::{reorder_normal, Letter, NormalForm, Orderer, Spectral, Strategy, Word};
use crate::arith::{qi, Ring, Q};
use crate::error::{Error, Result};
use crate::omega::OmegaExpr;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Normalization conventions of the determinant formula.
///
/// `nu` multiplies the fermion determinant once per active site, `sign` is the
/// global sign of the determinant part, and `ope_corrections` switches the
/// subtraction of singular operator-product parts that turns plain products into
/// normal-ordered ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    /// Per-site factor ν.
    pub nu: Q,
    /// Global determinant sign (`None` until fixed).
    pub sign: Option<i64>,
    /// Whether normal-ordering corrections are subtracted.
    pub ope_corrections: bool,
}

impl Calibration {
    /// The convention fixed by the two-site calibration: ν = 2, sign +1, with
    /// corrections.
    pub fn fixed() -> Self {
        Calibration { nu: qi(2), sign: Some(1), ope_corrections: true }
    }

    /// A convention whose sign has not been fixed yet.
    pub fn unset(nu: Q) -> Self {
        Calibration { nu, sign: None, ope_corrections: true }
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Self::fixed()
    }
}

/// Memoizing evaluator of `⟨:w:⟩` for normal-ordered words.
pub struct Expectations<'a, S: Spectral> {
    ctx: &'a S,
    calibration: Calibration,
    orderer: Orderer<'a, S>,
    cache: HashMap<Word, OmegaExpr<S::C>>,
}

impl<'a, S: Spectral> Expectations<'a, S> {
    /// Evaluator over a coefficient domain.
    pub fn new(ctx: &'a S, calibration: Calibration) -> Self {
        Expectations { ctx, calibration, orderer: Orderer::new(ctx, Strategy::First), cache: HashMap::new() }
    }

    /// Coefficient domain.
    pub fn ctx(&self) -> &S {
        self.ctx
    }

    /// `⟨x₁(λ₁)⋯x_k(λ_k)⟩` for the plain product (determinant part only).
    pub fn plain(&self, word: &[Letter]) -> Result<OmegaExpr<S::C>> {
        if word.is_empty() {
            return Ok(OmegaExpr::one());
        }
        let sign = self
            .calibration
            .sign
            .ok_or_else(|| Error::UncalibratedSign(format!("{}-site products", word.len())))?;
        let nu = num_traits::pow(self.calibration.nu.clone(), word.len());
        Ok(fat_wick(self.ctx, word)?.scale(&(nu * qi(sign))))
    }

    /// `⟨:w:⟩` for a word in normal order.
    pub fn normal(&mut self, word: &[Letter]) -> Result<OmegaExpr<S::C>> {
        if let Some(v) = self.cache.get(word) {
            return Ok(v.clone());
        }
        let mut val = self.plain(word)?;
        if self.calibration.ope_corrections {
            let expansion = self.orderer.plain_to_normal(word)?;
            for (w, c) in expansion.terms() {
                if w.as_slice() == word {
                    if !c.is_one() {
                        return Err(Error::NonTerminating(format!(
                            "leading coefficient of a normal-ordered word is not 1 ({} letters)",
                            word.len()
                        )));
                    }
                    continue;
                }
                let e = self.normal(w)?;
                val = Ring::sub(&val, &e.scale_by(c));
            }
        }
        self.cache.insert(word.to_vec(), val.clone());
        Ok(val)
    }

    /// Expectation of a combination of normal-ordered words.
    pub fn of_normal_form(&mut self, nf: &NormalForm<S::C>) -> Result<OmegaExpr<S::C>> {
        let mut total = OmegaExpr::zero();
        for (w, c) in nf.terms() {
            total = Ring::add(&total, &self.normal(w)?.scale_by(c));
        }
        Ok(total)
    }

    /// `⟨g(λ_{i₁})⋯g(λ_{i_k})⟩` for a monomial of generators at distinct sites, read as
    /// the normal-ordered product in the written order.
    pub fn monomial(&mut self, word: &[Letter]) -> Result<OmegaExpr<S::C>> {
        let mut sites: Vec<usize> = word.iter().map(|l| l.site).collect();
        sites.sort_unstable();
        if sites.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::ConfigError("monomial sites must be distinct".into()));
        }
        let nf = reorder_normal(self.ctx, word)?;
        self.of_normal_form(&nf)
    }
}

/// `⟨m⟩` at zero temperature for a monomial of generators at distinct sites.
pub fn g_expectation_zero_t<S: Spectral>(ctx: &S, m: &[Letter], calibration: &Calibration) -> Result<OmegaExpr<S::C>> {
    Expectations::new(ctx, calibration.clone()).monomial(m)
}
