//! Matsubara chains: monodromy and transfer matrices, fusion and the quantum
//! determinant.

use super::embed::embed_two_site;
use super::lax::{lax_half, lax_one, sym_embed, sym_restrict};
use super::spin::Spin;
use crate::arith::{parse_q, q, q_to_string, Poly, Q};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Length, site spins and inhomogeneities of a Matsubara chain.
#[derive(Clone, Debug, PartialEq)]
pub struct MatsubaraData {
    /// Site spins.
    pub spins: Vec<Spin>,
    /// Inhomogeneities `τ_k`.
    pub tau: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct MatsubaraRepr {
    #[serde(rename = "L")]
    l: usize,
    spins: Vec<String>,
    tau: Vec<String>,
}

impl MatsubaraData {
    /// Validated constructor.
    pub fn new(spins: Vec<Spin>, tau: Vec<Q>) -> Result<Self> {
        if spins.is_empty() {
            return Err(Error::ConfigError("Matsubara chain needs L ≥ 1".into()));
        }
        if spins.len() != tau.len() {
            return Err(Error::ConfigError(format!(
                "{} spins but {} inhomogeneities",
                spins.len(),
                tau.len()
            )));
        }
        Ok(MatsubaraData { spins, tau })
    }

    /// Chain length `L`.
    pub fn len(&self) -> usize {
        self.spins.len()
    }

    /// Always false (chains have at least one site).
    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    /// State-space dimension `Π(2s_k+1)`.
    pub fn dim(&self) -> usize {
        self.spins.iter().map(|s| s.dim()).product()
    }

    /// The same chain with every inhomogeneity shifted by `c`.
    pub fn shifted(&self, c: &Q) -> Self {
        MatsubaraData { spins: self.spins.clone(), tau: self.tau.iter().map(|t| t + c).collect() }
    }

    /// Parses `{ "L": 2, "spins": ["1/2","1"], "tau": ["0","1/4"] }` from JSON.
    pub fn from_json(s: &str) -> Result<Self> {
        let r: MatsubaraRepr = serde_json::from_str(s).map_err(|e| Error::ConfigError(format!("Matsubara JSON: {e}")))?;
        Self::from_repr(r)
    }

    /// Parses the same structure from TOML.
    pub fn from_toml(s: &str) -> Result<Self> {
        let r: MatsubaraRepr = toml::from_str(s).map_err(|e| Error::ConfigError(format!("Matsubara TOML: {e}")))?;
        Self::from_repr(r)
    }

    fn from_repr(r: MatsubaraRepr) -> Result<Self> {
        if r.l != r.spins.len() {
            return Err(Error::ConfigError(format!("L = {} but {} spins given", r.l, r.spins.len())));
        }
        let spins = r.spins.iter().map(|s| Spin::parse(s)).collect::<Result<Vec<_>>>()?;
        let tau = r.tau.iter().map(|t| parse_q(t)).collect::<Result<Vec<_>>>()?;
        Self::new(spins, tau)
    }

    /// JSON rendering in the input format.
    pub fn to_json(&self) -> String {
        let r = MatsubaraRepr {
            l: self.len(),
            spins: self.spins.iter().map(|s| s.label().to_string()).collect(),
            tau: self.tau.iter().map(q_to_string).collect(),
        };
        serde_json::to_string(&r).expect("serializable")
    }

    fn check_size(&self, aux: usize) -> Result<()> {
        let d = self.dim();
        if d > super::max_dim() {
            return Err(Error::SizeLimit(format!("Matsubara dimension {d} exceeds cap {}", super::max_dim())));
        }
        let _ = aux;
        Ok(())
    }
}

fn chain_monodromy(aux: usize, md: &MatsubaraData, lax: impl Fn(Spin, &Q) -> Result<Matrix<Q>>, lambda: &Q) -> Result<Matrix<Q>> {
    md.check_size(aux)?;
    let mut dims = vec![aux];
    dims.extend(md.spins.iter().map(|s| s.dim()));
    let total: usize = dims.iter().product();
    let mut t = Matrix::<Q>::identity(total);
    for (k, (s, tau)) in md.spins.iter().zip(&md.tau).enumerate() {
        let l = lax(*s, &(lambda - tau))?;
        t = t.mul(&embed_two_site(&l, &dims, 0, k + 1))?;
    }
    Ok(t)
}

/// Spin-1/2-auxiliary monodromy `T_a(λ) = L_{a,1}(λ−τ₁)⋯L_{a,L}(λ−τ_L)` on `ℂ²⊗M`.
pub fn monodromy(lambda: &Q, md: &MatsubaraData) -> Result<Matrix<Q>> {
    chain_monodromy(2, md, |s, mu| Ok(lax_half(s, mu)), lambda)
}

/// Spin-1-auxiliary monodromy `𝐓(λ)` on `ℂ³⊗M`.
pub fn fused_monodromy(lambda: &Q, md: &MatsubaraData) -> Result<Matrix<Q>> {
    chain_monodromy(3, md, lax_one, lambda)
}

/// Partial trace over the leading auxiliary factor of dimension `aux`.
pub(crate) fn aux_trace(t: &Matrix<Q>, aux: usize) -> Matrix<Q> {
    let d = t.rows() / aux;
    Matrix::from_fn(d, d, |i, j| (0..aux).fold(Q::zero(), |acc, a| acc + t.get(a * d + i, a * d + j)))
}

/// Block `(i, j)` of an auxiliary-leading operator: the Matsubara operator `T_{ij}`.
pub(crate) fn aux_block(t: &Matrix<Q>, aux: usize, i: usize, j: usize) -> Matrix<Q> {
    let d = t.rows() / aux;
    Matrix::from_fn(d, d, |r, c| t.get(i * d + r, j * d + c).clone())
}

/// Transfer matrix `T(λ) = Tr_a T_a(λ)`.
pub fn transfer(lambda: &Q, md: &MatsubaraData) -> Result<Matrix<Q>> {
    Ok(aux_trace(&monodromy(lambda, md)?, 2))
}

/// Fused transfer matrix `𝐓(λ) = Tr T_{ℂ³}(λ)`.
pub fn fused_transfer(lambda: &Q, md: &MatsubaraData) -> Result<Matrix<Q>> {
    Ok(aux_trace(&fused_monodromy(lambda, md)?, 3))
}

fn kron_all(ms: &[Matrix<Q>]) -> Matrix<Q> {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| acc.kron(m))
}

/// Checks the fusion identity `Π_j T_{2j−1}(λ_j−½) T_{2j}(λ_j+½) 𝒫 = 𝒫 Π_j 𝐓_j(λ_j)`
/// on `(ℂ²)^{⊗2n} ⊗ M`, with `n = lambdas.len()`.
pub fn check_fusion(lambdas: &[Q], md: &MatsubaraData) -> Result<bool> {
    let n = lambdas.len();
    if n == 0 {
        return Ok(true);
    }
    let d = md.dim();
    let mut dims2 = vec![2; 2 * n];
    dims2.push(d);
    let mut dims3 = vec![3; n];
    dims3.push(d);
    let total2: usize = dims2.iter().product();
    let total3: usize = dims3.iter().product();
    let half = q(1, 2);
    let mut lhs = Matrix::<Q>::identity(total2);
    let mut fused = Matrix::<Q>::identity(total3);
    for (j, l) in lambdas.iter().enumerate() {
        let ta = monodromy(&(l - &half), md)?;
        let tb = monodromy(&(l + &half), md)?;
        lhs = lhs.mul(&embed_two_site(&ta, &dims2, 2 * j, 2 * n))?;
        lhs = lhs.mul(&embed_two_site(&tb, &dims2, 2 * j + 1, 2 * n))?;
        let tf = fused_monodromy(l, md)?;
        fused = fused.mul(&embed_two_site(&tf, &dims3, j, n))?;
    }
    let id = Matrix::<Q>::identity(d);
    let mut embeds = vec![sym_embed(); n];
    embeds.push(id.clone());
    let mut restricts = vec![sym_restrict(); n];
    restricts.push(id);
    let e = kron_all(&embeds);
    let r = kron_all(&restricts);
    let proj = e.mul(&r)?;
    let lhs = lhs.mul(&proj)?;
    let rhs = e.mul(&fused)?.mul(&r)?;
    Ok(lhs == rhs)
}

/// `Tr_{ab}((A ⊗ 1) T_a(λ−½) T_b(λ+½))` with `A` the antisymmetric projector; a
/// central element for a correct Lax convention.
pub fn quantum_determinant_operator(lambda: &Q, md: &MatsubaraData) -> Result<Matrix<Q>> {
    let d = md.dim();
    let dims = [2, 2, d];
    let half = q(1, 2);
    let ta = embed_two_site(&monodromy(&(lambda - &half), md)?, &dims, 0, 2);
    let tb = embed_two_site(&monodromy(&(lambda + &half), md)?, &dims, 1, 2);
    let prod = ta.mul(&tb)?;
    // antisymmetric vector (↑↓ − ↓↑)/√2: the projector is rational
    let mut a = Matrix::<Q>::zeros(4, 4);
    a.set(1, 1, q(1, 2));
    a.set(1, 2, q(-1, 2));
    a.set(2, 1, q(-1, 2));
    a.set(2, 2, q(1, 2));
    let m = a.kron(&Matrix::identity(d)).mul(&prod)?;
    Ok(aux_trace(&m, 4))
}

fn single_site(s: Spin) -> MatsubaraData {
    MatsubaraData { spins: vec![s], tau: vec![Q::zero()] }
}

/// Per-site factor `δ_s(μ)` with `T(μ−½)T(μ+½) − 𝐓(μ) = δ_s(μ)·Id` on one site.
fn site_qdet(s: Spin) -> Result<Poly> {
    let md = single_site(s);
    let half = q(1, 2);
    let value = |mu: &Q| -> Result<Q> {
        let tt = transfer(&(mu - &half), &md)?.mul(&transfer(&(mu + &half), &md)?)?;
        let diff = tt.sub(&fused_transfer(mu, &md)?)?;
        diff.scalar_value().ok_or_else(|| {
            Error::CalibrationFailure(format!("T·T − 𝐓 is not central on a spin-{} site", s.label()))
        })
    };
    // interpolate a quadratic through μ = 0, 1, 2 and verify at two more points
    let ys: Vec<Q> = (0..3).map(|k| value(&Q::from_integer(k.into()))).collect::<Result<_>>()?;
    let c0 = ys[0].clone();
    let c2 = (&ys[2] - &ys[1] * Q::from_integer(2.into()) + &ys[0]) / Q::from_integer(2.into());
    let c1 = &ys[1] - &ys[0] - &c2;
    let p = Poly::new(vec![c0, c1, c2]);
    for x in [q(7, 3), q(-5, 11)] {
        if value(&x)? != p.eval(&x) {
            return Err(Error::CalibrationFailure("quantum determinant is not quadratic".into()));
        }
    }
    Ok(p)
}

fn site_qdet_cached(s: Spin) -> Result<&'static Poly> {
    static HALF: OnceLock<Result<Poly>> = OnceLock::new();
    static ONE: OnceLock<Result<Poly>> = OnceLock::new();
    let cell = match s {
        Spin::Half => &HALF,
        Spin::One => &ONE,
    };
    cell.get_or_init(|| site_qdet(s)).as_ref().map_err(|e| e.clone())
}

/// Quantum determinant `Δ(λ) = Π_k δ_{s_k}(λ − τ_k)`, normalized by the single-site
/// relation `𝐓 = T(λ−½)T(λ+½) − Δ`.
pub fn quantum_determinant(lambda: &Q, md: &MatsubaraData) -> Result<Q> {
    let mut acc = Q::one();
    for (s, tau) in md.spins.iter().zip(&md.tau) {
        acc *= site_qdet_cached(*s)?.eval(&(lambda - tau));
    }
    Ok(acc)
}

/// Checks `𝐓(λ) = T(λ−½)T(λ+½) − Δ(λ)` as an operator identity (hence on every joint
/// eigenvector) and that the antisymmetric fusion channel equals `Δ(λ)·Id`.
pub fn check_eigen_relation(md: &MatsubaraData, lambdas: &[Q]) -> Result<bool> {
    let half = q(1, 2);
    for l in lambdas {
        let delta = quantum_determinant(l, md)?;
        let tt = transfer(&(l - &half), md)?.mul(&transfer(&(l + &half), md)?)?;
        let id = Matrix::<Q>::identity(md.dim());
        let rhs = tt.sub(&id.scale_by(&delta))?;
        if rhs != fused_transfer(l, md)? {
            return Ok(false);
        }
        match quantum_determinant_operator(l, md)?.scalar_value() {
            Some(v) if v == delta => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// `([T(λ),T(μ)] = 0, [𝐓(λ),T(μ)] = 0)`.
pub fn check_commuting(md: &MatsubaraData, lambda: &Q, mu: &Q) -> Result<(bool, bool)> {
    let t1 = transfer(lambda, md)?;
    let t2 = transfer(mu, md)?;
    let f1 = fused_transfer(lambda, md)?;
    Ok((t1.commutator(&t2)?.is_zero(), f1.commutator(&t2)?.is_zero()))
}
