//! Linear systems for decomposition coefficients from finite-chain data.
//!
//! For a fixed set of spectral parameters the expectation of a local operator is a
//! linear combination of basis-monomial expectations. Evaluating the operator
//! directly on several Matsubara chains, and the basis expectations through a
//! caller-supplied oracle, gives a linear system for the coefficients.

use crate::algebra::{Letter, Word};
use crate::arith::Q;
use crate::error::{Error, Result};
use crate::lattice::MatsubaraData;
use crate::linalg::Matrix;
use crate::matsubara::{direct_expectation, LocalOperator};

/// One data point: a Matsubara chain and the spectral parameters of the sites.
#[derive(Clone, Debug, PartialEq)]
pub struct FitSample {
    /// Chain data.
    pub data: MatsubaraData,
    /// Spectral parameters `λ₁, …, λ_n`.
    pub lambdas: Vec<Q>,
}

/// Source of basis expectations on finite chains.
pub trait BasisOracle {
    /// `⟨m⟩` on the given sample.
    fn expectation(&self, monomial: &[Letter], sample: &FitSample) -> Result<Q>;
}

/// `matrix · x = rhs`, one row per sample and one column per basis monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct FitSystem {
    /// Basis monomials (columns).
    pub basis: Vec<Word>,
    /// Basis expectations.
    pub matrix: Matrix<Q>,
    /// Direct expectations of the target operator.
    pub rhs: Vec<Q>,
}

impl FitSystem {
    /// Rank of the coefficient matrix.
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The unique exact solution; `SingularSystem` reports rank deficiency or
    /// inconsistency.
    pub fn solve(&self) -> Result<Vec<Q>> {
        let rows = self.matrix.rows();
        let cols = self.basis.len();
        let rank = if cols == 0 { 0 } else { self.rank() };
        let aug = Matrix::from_fn(rows, cols + 1, |i, j| if j < cols { self.matrix.get(i, j).clone() } else { self.rhs[i].clone() });
        let aug_rank = aug.rank();
        if aug_rank > rank {
            return Err(Error::SingularSystem(format!(
                "inconsistent data: rank {rank} of {cols} unknowns, augmented rank {aug_rank} over {rows} samples"
            )));
        }
        if rank < cols {
            return Err(Error::SingularSystem(format!("rank {rank} < {cols} unknowns over {rows} samples")));
        }
        if cols == 0 {
            return Ok(Vec::new());
        }
        self.matrix.solve(&self.rhs)
    }
}

/// Builds the system equating direct expectations of `op` with basis expansions.
pub fn build_fit_system(
    basis: &[Word],
    oracle: &dyn BasisOracle,
    samples: &[FitSample],
    op: &LocalOperator,
    digits: u32,
) -> Result<FitSystem> {
    let mut rows = Vec::with_capacity(samples.len());
    let mut rhs = Vec::with_capacity(samples.len());
    for s in samples {
        let v = direct_expectation(op, &s.lambdas, &s.data, digits)?;
        let exact = v.exact.ok_or_else(|| {
            Error::ConfigError("fitting needs samples with rational direct expectations".into())
        })?;
        rhs.push(exact);
        rows.push(basis.iter().map(|m| oracle.expectation(m, s)).collect::<Result<Vec<Q>>>()?);
    }
    let matrix = Matrix::from_fn(samples.len(), basis.len(), |i, j| rows[i][j].clone());
    Ok(FitSystem { basis: basis.to_vec(), matrix, rhs })
}
