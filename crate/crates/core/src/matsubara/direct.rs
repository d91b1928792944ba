//! Local operators on `[1, n]` and their direct Matsubara expectation values
//!
//! `⟨Ψ|Tr_{[1,n]}(𝐓_{1,M}(λ₁)⋯𝐓_{n,M}(λ_n)·O)|Ψ⟩ / (Π_j 𝐓(λ_j)·⟨Ψ|Ψ⟩)`.

use super::state::{dominant_state, SpectralState, Value};
use crate::arith::{qi, Q};
use crate::error::{Error, Result};
use crate::lattice::{aux_block, fused_monodromy, fused_transfer, MatsubaraData};
use crate::linalg::Matrix;
use num_traits::Zero;

/// The spin-1 `sl₂` generators `(h, e, f)` in the basis `↑↑, ↑↓+↓↑, ↓↓`.
pub fn spin1_generators() -> (Matrix<Q>, Matrix<Q>, Matrix<Q>) {
    let z = || qi(0);
    let h = Matrix::from_rows(vec![vec![qi(2), z(), z()], vec![z(), z(), z()], vec![z(), z(), qi(-2)]]);
    let e = Matrix::from_rows(vec![vec![z(), qi(2), z()], vec![z(), z(), qi(1)], vec![z(), z(), z()]]);
    let f = Matrix::from_rows(vec![vec![z(), z(), z()], vec![qi(1), z(), z()], vec![z(), qi(2), z()]]);
    (h.expect("3x3"), e.expect("3x3"), f.expect("3x3"))
}

/// An operator acting on the spin-1 sites `1..=n`, as an exact `3ⁿ×3ⁿ` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperator {
    n: usize,
    matrix: Matrix<Q>,
}

fn pow3(n: usize) -> usize {
    3usize.pow(n as u32)
}

impl LocalOperator {
    /// Wraps a `3ⁿ×3ⁿ` matrix.
    pub fn new(n: usize, matrix: Matrix<Q>) -> Result<Self> {
        let d = pow3(n);
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "operator on {n} sites must be {d}×{d}, got {}×{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LocalOperator { n, matrix })
    }

    /// Identity on `n` sites.
    pub fn identity(n: usize) -> Self {
        LocalOperator { n, matrix: Matrix::identity(pow3(n)) }
    }

    /// Interval length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The matrix.
    pub fn matrix(&self) -> &Matrix<Q> {
        &self.matrix
    }

    /// Multiplies by a rational scalar.
    pub fn scaled(&self, c: &Q) -> Self {
        LocalOperator { n: self.n, matrix: self.matrix.scale_by(c) }
    }

    /// Parses a builtin name (`"ss:n"`, `"id:n"`) or a JSON object
    /// `{"n": 2, "matrix": [["1","0",…],…]}` with row-major `"p/q"` entries.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some((name, arg)) = spec.split_once(':') {
            if !spec.starts_with('{') {
                let n: usize = arg.trim().parse().map_err(|_| Error::ConfigError(format!("bad operator size in {spec:?}")))?;
                return match name.trim() {
                    "ss" => build_ss_operator(n),
                    "id" => Ok(Self::identity(n)),
                    other => Err(Error::ConfigError(format!("unknown builtin operator {other:?}"))),
                };
            }
        }
        let v: serde_json::Value =
            serde_json::from_str(spec).map_err(|e| Error::ConfigError(format!("operator JSON: {e}")))?;
        Self::from_json(&v)
    }

    /// Reads `{"n": …, "matrix": …}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::ConfigError("operator JSON needs an integer \"n\"".into()))? as usize;
        let m = v.get("matrix").ok_or_else(|| Error::ConfigError("operator JSON needs \"matrix\"".into()))?;
        Self::new(n, Matrix::from_json(m)?)
    }

    /// Global `sl₂` generators `Σ_j x_j` on the interval.
    fn global(&self, x: &Matrix<Q>) -> Matrix<Q> {
        let d = pow3(self.n);
        let mut acc = Matrix::<Q>::zeros(d, d);
        for j in 0..self.n {
            let left = Matrix::<Q>::identity(pow3(j));
            let right = Matrix::<Q>::identity(pow3(self.n - j - 1));
            acc = acc.add(&left.kron(x).kron(&right)).expect("same size");
        }
        acc
    }

    /// True if the operator commutes with the global `h`, `e` and `f`.
    pub fn is_sl2_invariant(&self) -> bool {
        let (h, e, f) = spin1_generators();
        [h, e, f].iter().all(|x| self.matrix.commutator(&self.global(x)).map(|c| c.is_zero()).unwrap_or(false))
    }
}

/// `Σ_a S^a_1 S^a_n = ½ h⊗I⊗h + e⊗I⊗f + f⊗I⊗e` with identities on the interior sites.
pub fn build_ss_operator(n: usize) -> Result<LocalOperator> {
    if n < 2 {
        return Err(Error::ConfigError("the S₁·S_n operator needs n ≥ 2".into()));
    }
    let (h, e, f) = spin1_generators();
    let mid = Matrix::<Q>::identity(pow3(n - 2));
    let half_h = h.scale_by(&Q::new(1.into(), 2.into()));
    let m = half_h
        .kron(&mid)
        .kron(&h)
        .add(&e.kron(&mid).kron(&f))?
        .add(&f.kron(&mid).kron(&e))?;
    LocalOperator::new(n, m)
}

fn digits_of(mut idx: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % 3;
        idx /= 3;
    }
    out
}

/// The Matsubara operator `Σ_{i,j} O_{j,i} 𝐓_{i₁j₁}(λ₁)⋯𝐓_{i_n j_n}(λ_n)`, i.e.
/// `Tr_{[1,n]}(𝐓_{1,M}(λ₁)⋯𝐓_{n,M}(λ_n)·O)`.
pub fn numerator_operator(op: &LocalOperator, lambdas: &[Q], md: &MatsubaraData) -> Result<Matrix<Q>> {
    if lambdas.len() != op.n() {
        return Err(Error::DimensionMismatch(format!(
            "operator on {} sites but {} spectral parameters",
            op.n(),
            lambdas.len()
        )));
    }
    let mons: Vec<Matrix<Q>> = lambdas.iter().map(|l| fused_monodromy(l, md)).collect::<Result<_>>()?;
    let blocks: Vec<Vec<Matrix<Q>>> =
        mons.iter().map(|t| (0..9).map(|ij| aux_block(t, 3, ij / 3, ij % 3)).collect()).collect();
    let d = md.dim();
    let total = pow3(op.n());
    let mut acc = Matrix::<Q>::zeros(d, d);
    for j in 0..total {
        for i in 0..total {
            let c = op.matrix().get(j, i);
            if c.is_zero() {
                continue;
            }
            let (iv, jv) = (digits_of(i, op.n()), digits_of(j, op.n()));
            let mut prod = Matrix::<Q>::identity(d);
            for k in 0..op.n() {
                prod = prod.mul(&blocks[k][iv[k] * 3 + jv[k]])?;
            }
            acc = acc.add(&prod.scale_by(c))?;
        }
    }
    Ok(acc)
}

impl SpectralState {
    /// Direct expectation value of a local operator at spectral parameters `λ₁…λ_n`.
    pub fn direct_expectation(&self, op: &LocalOperator, lambdas: &[Q]) -> Result<Value> {
        let num = numerator_operator(op, lambdas, self.md())?;
        let mut den = Matrix::<Q>::identity(self.md().dim());
        for l in lambdas {
            let t = fused_transfer(l, self.md())?;
            if self.expectation(&t).map(|v| v.is_zero()).or_else(|e| match e {
                Error::ZeroEigenvalue(_) => Ok(true),
                e => Err(e),
            })? {
                return Err(Error::ZeroEigenvalue(format!("𝐓({}) = 0 on the dominant state", crate::arith::q_to_string(l))));
            }
            den = den.mul(&t)?;
        }
        self.ratio(&num, &den)
    }
}

/// Direct expectation value at the dominant state of `md`, certified to `digits`.
pub fn direct_expectation(op: &LocalOperator, lambdas: &[Q], md: &MatsubaraData, digits: u32) -> Result<Value> {
    dominant_state(md, digits)?.direct_expectation(op, lambdas)
}
