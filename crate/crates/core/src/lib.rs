//! Exact-arithmetic machinery for correlation functions of the integrable spin-1
//! (Takhtajan–Babujian) chain expressed through the fermion-current basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`] — rationals, polynomials in π², univariate and multivariate rational
//!   functions, truncated Laurent series and decimal reporting.
//! * [`lattice`] — the spin-1 R-matrix, Lax operators, fusion, monodromy and transfer
//!   matrices, and the quantum determinant.
//! * [`matsubara`] — exact dominant eigenstates of the Matsubara transfer matrix and
//!   direct expectation values of local operators.
//! * [`algebra`] — the fermion/current operator algebra: operator product expansions,
//!   normal ordering, mode extraction and admissibility.
//! * [`omega`] — the zero-temperature ω calculus: φ, the functional equation, the
//!   shifted ω̃ entries, ω elimination and the homogeneous limit.
//! * [`correlator`] — coefficient tables, fat-operator expectations, correlator
//!   assembly, stored reference values, the fitting framework and entropy.
//! * [`cli`] — configuration and command dispatch behind the `s1fc` binary.

pub mod algebra;
pub mod arith;
pub mod cli;
pub mod correlator;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod matsubara;
pub mod omega;

pub use error::{Error, Result};
