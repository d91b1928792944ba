//! Spin-½ fermion content of the spin-1 generators and its Wick evaluation.
//!
//! Each generator at site `λ` is a sum of products of the fermions `b*`, `c*` at the
//! shifted arguments `λ ± ½`:
//!
//! | generator | fermion words |
//! |-----------|---------------|
//! | `b*`      | `b*(λ+½)`, `b*(λ−½)` |
//! | `c*`      | `c*(λ+½)`, `c*(λ−½)` |
//! | `j⁺`      | `b*(λ+½)·b*(λ−½)` |
//! | `j⁻`      | `c*(λ+½)·c*(λ−½)` |
//! | `j⁰`      | `c*(λ+½)·b*(λ−½)`, `b*(λ+½)·c*(λ−½)` |
//!
//! The expectation of a fermion word is the signed sum over complete `b*c*`
//! pairings (a determinant) of the two-point kernel ω̃ built from ω at zero
//! temperature.

use crate::algebra::{Kind, Letter, Spectral};
use crate::arith::{qi, Ring};
use crate::error::Result;
use crate::omega::{phi, OmegaExpr};
use num_traits::{One, Zero};

/// A spin-½ fermion at site `site` with argument shift `shift/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fermion {
    /// `true` for `b*`, `false` for `c*`.
    pub is_b: bool,
    /// Site index.
    pub site: usize,
    /// `+1` or `−1` (the argument is `λ_site + shift/2`).
    pub shift: i8,
}

impl Fermion {
    fn b(site: usize, shift: i8) -> Self {
        Fermion { is_b: true, site, shift }
    }
    fn c(site: usize, shift: i8) -> Self {
        Fermion { is_b: false, site, shift }
    }
}

/// The fermion words whose sum represents a generator.
pub fn fat_expansion(l: Letter) -> Vec<Vec<Fermion>> {
    let s = l.site;
    match l.kind {
        Kind::B => vec![vec![Fermion::b(s, 1)], vec![Fermion::b(s, -1)]],
        Kind::C => vec![vec![Fermion::c(s, 1)], vec![Fermion::c(s, -1)]],
        Kind::Jp => vec![vec![Fermion::b(s, 1), Fermion::b(s, -1)]],
        Kind::Jm => vec![vec![Fermion::c(s, 1), Fermion::c(s, -1)]],
        Kind::J0 => vec![vec![Fermion::c(s, 1), Fermion::b(s, -1)], vec![Fermion::b(s, 1), Fermion::c(s, -1)]],
    }
}

/// The kernel ω̃ between `b*(λ_i + s/2)` and `c*(λ_j + r/2)`.
///
/// Equal shifts give plain ω of the difference; mixed shifts carry a φ correction.
pub fn contraction<S: Spectral>(ctx: &S, b: Fermion, c: Fermion) -> Result<OmegaExpr<S::C>> {
    let (i, s, j, r) = (b.site, b.shift, c.site, c.shift);
    if i == j {
        return Ok(OmegaExpr::omega(i, i, if s != r { 1 } else { 0 }));
    }
    let k = ((s - r) / 2) as i64;
    let mut val = OmegaExpr::omega(i, j, k);
    let x = ctx.diff(i, j);
    match (s, r) {
        (1, -1) => val = Ring::add(&val, &OmegaExpr::constant(phi(&x)?)),
        (-1, 1) => val = Ring::add(&val, &OmegaExpr::constant(phi(&Ring::add(&x, &ctx.constant(&qi(-1))))?)),
        _ => {}
    }
    Ok(val)
}

/// Expectation of an ordered product of fermions (Wick expansion along the first
/// element).
pub fn wick<S: Spectral>(ctx: &S, fs: &[Fermion]) -> Result<OmegaExpr<S::C>> {
    let Some((f0, rest)) = fs.split_first() else { return Ok(OmegaExpr::one()) };
    let mut total = OmegaExpr::zero();
    for (m, f) in rest.iter().enumerate() {
        if f.is_b == f0.is_b {
            continue;
        }
        let pair = if f0.is_b { contraction(ctx, *f0, *f)? } else { contraction(ctx, *f, *f0)?.neg() };
        let mut others = rest[..m].to_vec();
        others.extend_from_slice(&rest[m + 1..]);
        let term = Ring::mul(&pair, &wick(ctx, &others)?);
        total = if m % 2 == 0 { Ring::add(&total, &term) } else { Ring::sub(&total, &term) };
    }
    Ok(total)
}

/// Sum over the fermion words of a product of generators (without normalization).
pub fn fat_wick<S: Spectral>(ctx: &S, word: &[Letter]) -> Result<OmegaExpr<S::C>> {
    let mut words: Vec<Vec<Fermion>> = vec![Vec::new()];
    for l in word {
        let parts = fat_expansion(*l);
        words = words
            .iter()
            .flat_map(|w| {
                parts.iter().map(move |p| {
                    let mut v = w.clone();
                    v.extend_from_slice(p);
                    v
                })
            })
            .collect();
    }
    let mut total = OmegaExpr::zero();
    for w in &words {
        let nb = w.iter().filter(|f| f.is_b).count();
        if 2 * nb != w.len() {
            continue;
        }
        total = Ring::add(&total, &wick(ctx, w)?);
    }
    Ok(total)
}
