//! The zero-temperature ω calculus: φ, the functional equation, and the expansion
//! of ω-free combinations along the homogeneous ray.
//!
//! Run with `cargo run --example omega_calculus`.

use s1fc::algebra::{Scaled, Spectral, Symbolic};
use s1fc::arith::{q, qi, Ring};
use s1fc::correlator::{contraction, Fermion};
use s1fc::omega::{assert_omega_cancellation, expand_homogeneous, omega_reduce, phi_q, OmegaExpr};
use s1fc::Result;

fn main() -> Result<()> {
    println!("φ(1/2) = {}, φ(3) = {}", phi_q(&q(1, 2))?, phi_q(&qi(3))?);

    let ctx = Symbolic::numbered(2);
    let names = |i: usize| ctx.name(i);
    for k in [1, -1, 2] {
        let r = omega_reduce(&OmegaExpr::omega(0, 1, k), &ctx)?;
        println!("ω(l1−l2{k:+}) → {}", r.display_with(&names));
    }

    // the 2×2 determinant of ω̃ between b*(λ±½) and c*(μ±½) is free of ω
    let b = |s| Fermion { is_b: true, site: 0, shift: s };
    let c = |s| Fermion { is_b: false, site: 1, shift: s };
    let w = |s, r| contraction(&ctx, b(s), c(r));
    let det = Ring::sub(&Ring::mul(&w(1, 1)?, &w(-1, -1)?), &Ring::mul(&w(1, -1)?, &w(-1, 1)?));
    println!("det ω̃ → {}", assert_omega_cancellation(&det, &ctx)?.display_with(&names));

    // −4p(x)² + 1/x² along λ = t·(0, 1)
    let dirs = vec![qi(0), qi(1)];
    let ray = Scaled::new(dirs.clone());
    let p = OmegaExpr::p(0, 1, 0);
    let x = ray.diff(0, 1);
    let e = Ring::add(&Ring::mul(&p, &p).scale(&qi(-4)), &OmegaExpr::constant(Ring::mul(&x, &x).try_inv().unwrap()));
    println!("−4p² + 1/x² = {}", expand_homogeneous(&e, &dirs, 4)?);
    Ok(())
}
