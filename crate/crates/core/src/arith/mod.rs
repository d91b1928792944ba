//! Exact number and series kernel.
//!
//! * [`Q`] — arbitrary-precision rationals (always reduced, positive denominator).
//! * [`PiPoly`] — polynomials in π² with rational coefficients.
//! * [`Poly`] / [`RatFunc1`] — univariate polynomials and rational functions over `Q`
//!   with full gcd reduction.
//! * [`MPoly`] / [`RationalFunction`] — multivariate polynomials and rational functions
//!   in named variables.
//! * [`LaurentSeries`] — truncated Laurent series with tracked truncation order.
//! * [`BigFloat`] — decimal arbitrary-precision floats for reporting.

mod bigfloat;
pub(crate) mod laurent;
mod mpoly;
mod pipoly;
mod poly;
mod ratfunc;
mod rational;
mod ring;

pub use bigfloat::BigFloat;
pub(crate) use bigfloat::ln_enclosure;
pub use laurent::{p_series, LaurentSeries};
pub use mpoly::{MPoly, Monomial};
pub use pipoly::PiPoly;
pub use poly::{Poly, RatFunc1};
pub use ratfunc::RationalFunction;
pub use rational::{parse_q, q, q_to_string, qi, Q};
pub use ring::{Field, Ring};
