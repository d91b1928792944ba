//! The Matsubara side: dominant eigenstate of `T_M(0)` and direct expectation values
//! of local operators on an inhomogeneous interval.

mod direct;
mod roots;
mod state;

pub use direct::{build_ss_operator, direct_expectation, numerator_operator, spin1_generators, LocalOperator};
pub use roots::{charpoly, isolate_real_roots, simplest_between, sturm_sequence, RealRoot};
pub use state::{dominant_state, SpectralState, Value};
