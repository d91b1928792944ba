//! R-matrices, Lax operators, fusion, monodromy and transfer matrices, and the
//! quantum determinant — all exact over `Q`.
//!
//! Spin-1 spaces use the basis `e₁ = ↑↑`, `e₂ = ↑↓ + ↓↑`, `e₃ = ↓↓` of the symmetric
//! square of ℂ². In this basis `h = diag(2,0,−2)`, `e = E₁₂·2 + E₂₃`, `f = E₂₁ + 2E₃₂`,
//! which are the matrices used for local operators, and the explicit spin-1
//! R-matrix is written in the same basis.

mod chain;
mod embed;
mod lax;
mod rmatrix;
mod spin;

pub use chain::{
    check_commuting, check_eigen_relation, check_fusion, fused_monodromy, fused_transfer, monodromy,
    quantum_determinant, quantum_determinant_operator, transfer, MatsubaraData,
};
pub(crate) use chain::aux_block;
pub use embed::{embed_two_site, permutation_matrix};
pub use lax::{calibration, lax_half, lax_one, sym_projector, Calibration};
pub use rmatrix::{check_yang_baxter, r_s1, r_s1_poly};
pub use spin::{spin_ops, Spin};

/// Default soft cap on the Matsubara space dimension (`3^8`).
pub const DEFAULT_MAX_DIM: usize = 6561;

/// Maximum Matsubara dimension, overridable through the `S1FC_MAX_DIM` environment
/// variable.
pub fn max_dim() -> usize {
    std::env::var("S1FC_MAX_DIM").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}
