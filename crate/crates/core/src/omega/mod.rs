//! Zero-temperature ω calculus.
//!
//! Expressions are polynomials in the atoms `ω(λ_i − λ_j + k)`, `p(λ_i − λ_j + k)`
//! with `p(x) = π/(2 sin πx)`, and the same-site values `ω(0)`, `ω(±1)`, over a
//! coefficient ring of rational functions of the spectral variables. The functional
//! equation `ω(x+1) + ω(x) = p(x) − φ(x)` and `p(x+1) = −p(x)` reduce every shift to
//! the base atoms; physical combinations then lose all ω dependence, and the
//! remaining polynomial in `p` is expanded along the ray `λ_j = t·a_j`.

mod expr;
mod limit;

pub use expr::{assert_omega_cancellation, omega_reduce, phi, phi_q, Atom, OmegaExpr};
pub use limit::{expand_homogeneous, homogeneous_limit};
