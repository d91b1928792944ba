//! Correlators of neighbouring and next-neighbouring spins.
//!
//! The decomposition tables express `Σ_a S^a_1 S^a_n` through monomials of the
//! generators `g^ε(λ_j)`. Each monomial expectation is evaluated at zero
//! temperature by expanding the generators into spin-½ fermions, summing the
//! Wick pairings of the kernel ω̃, and subtracting the singular operator-product
//! parts. The homogeneous limit of the assembly is a polynomial in π².

mod entropy;
mod expectation;
mod fat;
mod fit;
mod pipeline;
mod table;

pub use entropy::entropy;
pub use expectation::{g_expectation_zero_t, Calibration, Expectations};
pub use fat::{contraction, fat_expansion, fat_wick, wick, Fermion};
pub use fit::{build_fit_system, BasisOracle, FitSample, FitSystem};
pub use pipeline::{
    assemble_on_ray, calibrate, correlator, default_directions, limit_on_ray, reference_values, CorrelatorOptions,
    CorrelatorResult,
};
pub use table::{monomial_key, parse_monomial, CoefficientTable};
