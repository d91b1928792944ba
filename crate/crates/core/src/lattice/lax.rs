//! Lax operators with spin-1/2 and spin-1 auxiliary spaces and their calibration
//! against the explicit spin-1 R-matrix through fusion.
//!
//! * Auxiliary spin 1/2 on a quantum spin `s`: `L(μ) = (μ + ½)·Id + σᵃ⊗Sᵃ`, which for
//!   `s = 1/2` equals `μ + P`.
//! * Auxiliary spin 1 on quantum spin 1: `𝐋(μ) = κ·R(μ + c)` with the explicit R-matrix.
//! * Auxiliary spin 1 on quantum spin 1/2: `𝐋(μ) = (μ + β)((μ + γ)·Id + 2 Sᵃ⊗Sᵃ)`.
//!
//! The constants `κ, c, β, γ` are fixed once by requiring the fusion identity
//! `L_a(μ−½) L_b(μ+½) 𝒫 = 𝒫 𝐋(μ)` to hold as a polynomial identity in μ.

use super::embed::embed_two_site;
use super::rmatrix::r_s1_poly;
use super::spin::{spin_dot, Spin};
use crate::arith::{q, qi, Poly, Ring, Q};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use num_traits::Zero;
use std::sync::OnceLock;

/// Embedding `ℂ³ → ℂ²⊗ℂ²` onto the symmetric subspace (columns `e₁, e₂, e₃`).
pub(crate) fn sym_embed() -> Matrix<Q> {
    let mut e = Matrix::zeros(4, 3);
    e.set(0, 0, qi(1));
    e.set(1, 1, qi(1));
    e.set(2, 1, qi(1));
    e.set(3, 2, qi(1));
    e
}

/// Left inverse of [`sym_embed`] that annihilates the antisymmetric vector.
pub(crate) fn sym_restrict() -> Matrix<Q> {
    let mut r = Matrix::zeros(3, 4);
    r.set(0, 0, qi(1));
    r.set(1, 1, q(1, 2));
    r.set(1, 2, q(1, 2));
    r.set(2, 3, qi(1));
    r
}

/// Symmetric projector `𝒫 = ½(1 + P)` on `ℂ²⊗ℂ²`.
pub fn sym_projector() -> Matrix<Q> {
    sym_embed().mul(&sym_restrict()).unwrap()
}

fn to_poly(m: &Matrix<Q>) -> Matrix<Poly> {
    m.map(|x| Poly::constant(x.clone()))
}

/// Spin-1/2-auxiliary Lax operator as a polynomial matrix in μ.
pub fn lax_half_poly(s: Spin) -> Matrix<Poly> {
    let d = s.dim();
    let id = Matrix::<Q>::identity(2 * d);
    let shift = Poly::new(vec![q(1, 2), qi(1)]);
    to_poly(&id)
        .scale_by(&shift)
        .add(&to_poly(&spin_dot(Spin::Half, s).scale_by(&qi(2))))
        .unwrap()
}

/// Spin-1/2-auxiliary Lax operator at a rational spectral parameter.
pub fn lax_half(s: Spin, mu: &Q) -> Matrix<Q> {
    let d = s.dim();
    Matrix::<Q>::identity(2 * d)
        .scale_by(&(mu + q(1, 2)))
        .add(&spin_dot(Spin::Half, s).scale_by(&qi(2)))
        .unwrap()
}

/// Fused product `(Q⊗1) L_a(μ−½) L_b(μ+½) (E⊗1)` as a polynomial matrix on ℂ³⊗V_s.
fn fused_half_poly(s: Spin) -> Matrix<Poly> {
    let d = s.dim();
    let l = lax_half_poly(s);
    let minus = Poly::new(vec![q(-1, 2), qi(1)]);
    let plus = Poly::new(vec![q(1, 2), qi(1)]);
    let la = l.map(|e| e.compose(&minus));
    let lb = l.map(|e| e.compose(&plus));
    let dims = [2, 2, d];
    let ea = embed_two_site(&la, &dims, 0, 2);
    let eb = embed_two_site(&lb, &dims, 1, 2);
    let id = Matrix::<Q>::identity(d);
    let left = to_poly(&sym_restrict().kron(&id));
    let right = to_poly(&sym_embed().kron(&id));
    left.mul(&ea).unwrap().mul(&eb).unwrap().mul(&right).unwrap()
}

/// Calibrated constants of the spin-1-auxiliary Lax operators.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    /// Overall scalar of `κ·R(μ + c)` on spin-1 sites.
    pub kappa: Q,
    /// Argument shift of `κ·R(μ + c)` on spin-1 sites.
    pub c: Q,
    /// Scalar-factor root `β` on spin-1/2 sites.
    pub beta: Q,
    /// Additive constant `γ` on spin-1/2 sites.
    pub gamma: Q,
}

fn model_one(kappa: &Q, c: &Q) -> Matrix<Poly> {
    let shift = Poly::new(vec![c.clone(), qi(1)]);
    r_s1_poly().map(|e| e.compose(&shift).scale(kappa))
}

fn model_half(beta: &Q, gamma: &Q) -> Matrix<Poly> {
    let id = Matrix::<Q>::identity(6);
    let lin = to_poly(&id)
        .scale_by(&Poly::new(vec![gamma.clone(), qi(1)]))
        .add(&to_poly(&spin_dot(Spin::One, Spin::Half).scale_by(&qi(2))))
        .unwrap();
    lin.scale_by(&Poly::new(vec![beta.clone(), qi(1)]))
}

fn calibrate() -> Result<Calibration> {
    // spin-1 quantum site: match the (1,1) entry κ(μ+c+1)(μ+c+2)
    let f1 = fused_half_poly(Spin::One);
    let e11 = f1.get(0, 0);
    if e11.degree() != Some(2) {
        return Err(Error::CalibrationFailure("fused (1,1) entry is not quadratic".into()));
    }
    let kappa = e11.coeff(2);
    let c = (e11.coeff(1) / &kappa - qi(3)) / qi(2);
    if model_one(&kappa, &c) != f1 {
        return Err(Error::CalibrationFailure(
            "no κ, c with fused spin-1/2 Lax = κ·R(μ+c) on a spin-1 site".into(),
        ));
    }
    // spin-1/2 quantum site: an off-diagonal entry of 2S·S fixes β, a diagonal one γ
    let fh = fused_half_poly(Spin::Half);
    let dot = spin_dot(Spin::One, Spin::Half).scale_by(&qi(2));
    let (r, col) = (0..6)
        .flat_map(|i| (0..6).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && !dot.get(i, j).is_zero())
        .ok_or_else(|| Error::CalibrationFailure("no off-diagonal coupling".into()))?;
    let off = fh.get(r, col);
    if off.degree() != Some(1) {
        return Err(Error::CalibrationFailure("off-diagonal fused entry is not linear".into()));
    }
    let beta = off.coeff(0) / off.coeff(1);
    let diag = fh.get(0, 0);
    let (lin, rem) = diag.divrem(&Poly::new(vec![beta.clone(), qi(1)]));
    if !rem.is_zero() {
        return Err(Error::CalibrationFailure("scalar factor does not divide the diagonal".into()));
    }
    let gamma = lin.coeff(0) - dot.get(0, 0);
    if model_half(&beta, &gamma) != fh {
        return Err(Error::CalibrationFailure(
            "no β, γ with fused spin-1/2 Lax = (μ+β)((μ+γ) + 2S·S) on a spin-1/2 site".into(),
        ));
    }
    Ok(Calibration { kappa, c, beta, gamma })
}

/// The calibrated constants (computed once).
pub fn calibration() -> Result<&'static Calibration> {
    static CAL: OnceLock<Result<Calibration>> = OnceLock::new();
    CAL.get_or_init(calibrate).as_ref().map_err(|e| e.clone())
}

/// Spin-1-auxiliary Lax operator on a quantum site of spin `s` at rational μ.
pub fn lax_one(s: Spin, mu: &Q) -> Result<Matrix<Q>> {
    let cal = calibration()?;
    Ok(match s {
        Spin::One => super::rmatrix::r_s1(&(mu + &cal.c)).scale_by(&cal.kappa),
        Spin::Half => Matrix::<Q>::identity(6)
            .scale_by(&(mu + &cal.gamma))
            .add(&spin_dot(Spin::One, Spin::Half).scale_by(&qi(2)))?
            .scale_by(&(mu + &cal.beta)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::embed::permutation_matrix;

    #[test]
    fn half_half_lax_is_mu_plus_p() {
        let mu = q(3, 7);
        let expect = Matrix::<Q>::identity(4).scale_by(&mu).add(&permutation_matrix(2)).unwrap();
        assert_eq!(lax_half(Spin::Half, &mu), expect);
    }

    #[test]
    fn calibration_succeeds() {
        let cal = calibration().unwrap();
        assert!(!cal.kappa.is_zero());
    }

    #[test]
    fn projector_idempotent_rank_three() {
        let p = sym_projector();
        assert_eq!(p.mul(&p).unwrap(), p);
        assert_eq!(p.rank(), 3);
    }
}
