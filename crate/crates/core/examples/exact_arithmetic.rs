//! Exact number kernel: rationals, polynomials in π², Laurent series and
//! correctly rounded decimals.
//!
//! Run with `cargo run --example exact_arithmetic`.

use s1fc::arith::{p_series, q, qi, BigFloat, LaurentSeries, PiPoly, RatFunc1, Ring};
use s1fc::Result;

fn main() -> Result<()> {
    // 8π²/9 − 34/3 and its value to 30 digits
    let v = PiPoly::monomial(1, q(8, 9)).add(&PiPoly::constant(q(-34, 3)));
    println!("value      = {v}");
    println!("decimal    = {}", v.eval(30));

    // p(t) = π/(2 sin πt) as a Laurent series, squared
    let p = p_series("t", &qi(1), 6);
    println!("p(t)       = {p}");
    println!("p(t)^2     = {}", p.mul(&p).truncate(4));

    // the rational function 1/(t − t²) expanded around t = 0
    let f = RatFunc1::x().mul(&RatFunc1::constant(qi(1)).sub(&RatFunc1::x())).try_inv().expect("nonzero");
    println!("1/(t−t²)   = {}", LaurentSeries::from_ratfunc("t", &f, 4));

    // correctly rounded decimals of exact rationals
    println!("1/7        = {}", BigFloat::from_q(&q(1, 7), 25));
    Ok(())
}
