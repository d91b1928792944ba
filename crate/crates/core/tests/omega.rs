//! The zero-temperature ω calculus: φ, the functional equation, ω̃ identities,
//! the homogeneous expansion and ω cancellation in the decomposition tables.

use num_traits::{One, Zero};
use s1fc::algebra::{Kind, Letter, Scaled, Spectral, Symbolic};
use s1fc::arith::{q, qi, PiPoly, RatFunc1, RationalFunction, Ring, Q};
use s1fc::correlator::{
    contraction, default_directions, g_expectation_zero_t, Calibration, CoefficientTable, Expectations, Fermion,
};
use s1fc::omega::{assert_omega_cancellation, expand_homogeneous, omega_reduce, phi, phi_q, OmegaExpr};
use s1fc::Error;

fn b(site: usize, shift: i8) -> Fermion {
    Fermion { is_b: true, site, shift }
}

fn c(site: usize, shift: i8) -> Fermion {
    Fermion { is_b: false, site, shift }
}

/// `φ` straight from its partial fractions, evaluated with plain rationals.
fn phi_oracle(z: Q) -> Q {
    let r = |a: i64, s: i64| Q::from_integer(a.into()) / (&z + Q::from_integer(s.into()));
    (r(-3, 1) + r(-1, -1) + r(3, 0) + r(1, 2)) / qi(4)
}

#[test]
fn phi_at_rational_points() {
    assert_eq!(phi_q(&q(1, 2)).unwrap(), q(8, 5));
    assert_eq!(phi_q(&qi(3)).unwrap(), q(-1, 80));
    for z in [q(1, 3), q(-7, 5), qi(11), q(5, 2)] {
        assert_eq!(phi_q(&z).unwrap(), phi_oracle(z.clone()), "φ({z})");
    }
    for pole in [-2, -1, 0, 1] {
        assert!(matches!(phi_q(&qi(pole)), Err(Error::PoleAtZ(_))));
    }
}

#[test]
fn phi_is_symmetric_about_minus_one_half() {
    // z ↦ −1−z permutes the poles {−2,−1,0,1} and flips the sign of every residue
    // together with the sign of the pole variable, so φ(−1−z) = φ(z)
    for z in [q(1, 3), q(2, 7), qi(5)] {
        assert_eq!(phi_q(&(qi(-1) - &z)).unwrap(), phi_q(&z).unwrap());
    }
}

#[test]
fn functional_equation_for_one_step() {
    let ctx = Symbolic::numbered(2);
    let x = ctx.diff(0, 1);
    let p = OmegaExpr::<RationalFunction>::p(0, 1, 0);
    let w = |k| omega_reduce(&OmegaExpr::omega(0, 1, k), &ctx).unwrap();
    // ω(x+1) + ω(x) = p(x) − φ(x)
    let lhs = Ring::add(&w(1), &w(0));
    assert_eq!(lhs, Ring::sub(&p, &OmegaExpr::constant(phi(&x).unwrap())));
    // ω(x) + ω(x−1) = p(x−1) − φ(x−1) = −p(x) − φ(x−1)
    let xm = Ring::sub(&x, &RationalFunction::one());
    let lhs = Ring::add(&w(0), &w(-1));
    assert_eq!(lhs, Ring::sub(&p.neg(), &OmegaExpr::constant(phi(&xm).unwrap())));
}

#[test]
fn functional_equation_holds_at_every_shift() {
    let ctx = Symbolic::numbered(2);
    let x = ctx.diff(0, 1);
    for k in -4i64..4 {
        let at = |m: i64| Ring::add(&x, &RationalFunction::constant(qi(m)));
        let lhs = Ring::add(
            &omega_reduce(&OmegaExpr::omega(0, 1, k + 1), &ctx).unwrap(),
            &omega_reduce(&OmegaExpr::omega(0, 1, k), &ctx).unwrap(),
        );
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let rhs = Ring::sub(
            &OmegaExpr::p(0, 1, 0).scale(&qi(sign)),
            &OmegaExpr::constant(phi(&at(k)).unwrap()),
        );
        assert_eq!(lhs, rhs, "shift {k}");
    }
}

#[test]
fn p_is_odd_and_antiperiodic() {
    let ctx = Symbolic::numbered(2);
    let p = OmegaExpr::<RationalFunction>::p(0, 1, 0);
    assert_eq!(OmegaExpr::<RationalFunction>::p(1, 0, 0), p.neg());
    assert_eq!(omega_reduce(&OmegaExpr::p(0, 1, 1), &ctx).unwrap(), p.neg());
    assert_eq!(omega_reduce(&OmegaExpr::p(0, 1, -2), &ctx).unwrap(), p);
}

#[test]
fn four_term_fermion_pair_vanishes() {
    let ctx = Symbolic::numbered(2);
    let mut sum = OmegaExpr::zero();
    for s in [1, -1] {
        for r in [1, -1] {
            sum = Ring::add(&sum, &contraction(&ctx, b(0, s), c(1, r)).unwrap());
        }
    }
    assert!(omega_reduce(&sum, &ctx).unwrap().is_zero());
    // the same combination is ⟨b*(λ₁) c*(λ₂)⟩
    let m = [Letter::new(Kind::B, 0), Letter::new(Kind::C, 1)];
    let e = g_expectation_zero_t(&ctx, &m, &Calibration::fixed()).unwrap();
    assert!(omega_reduce(&e, &ctx).unwrap().is_zero());
}

#[test]
fn omega_tilde_determinant_is_p_squared() {
    let ctx = Symbolic::numbered(2);
    let w = |s, r| contraction(&ctx, b(0, s), c(1, r)).unwrap();
    let det = Ring::sub(&Ring::mul(&w(1, 1), &w(-1, -1)), &Ring::mul(&w(1, -1), &w(-1, 1)));
    let p = OmegaExpr::p(0, 1, 0);
    assert_eq!(assert_omega_cancellation(&det, &ctx).unwrap(), Ring::mul(&p, &p));
}

#[test]
fn current_pair_expectation() {
    // ⟨j⁺(λ₁) j⁻(λ₂)⟩ = −4p(x)² + 1/x² with x = λ₁ − λ₂
    let ctx = Symbolic::numbered(2);
    let m = [Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 1)];
    let e = g_expectation_zero_t(&ctx, &m, &Calibration::fixed()).unwrap();
    let e = assert_omega_cancellation(&e, &ctx).unwrap();
    let p = OmegaExpr::p(0, 1, 0);
    let x = ctx.diff(0, 1);
    let expect = Ring::add(
        &Ring::mul(&p, &p).scale(&qi(-4)),
        &OmegaExpr::constant(RationalFunction::one().div(&Ring::mul(&x, &x)).unwrap()),
    );
    assert_eq!(e, expect);
}

#[test]
fn residual_omega_is_reported() {
    let ctx = Symbolic::numbered(2);
    let e = OmegaExpr::<RationalFunction>::omega(0, 1, 2);
    assert!(matches!(assert_omega_cancellation(&e, &ctx), Err(Error::ResidualOmega(_))));
}

#[test]
fn minus_four_p_squared_plus_inverse_square_has_finite_limit() {
    for dirs in [vec![qi(0), qi(1)], vec![qi(0), q(-5, 3)], vec![qi(2), qi(7)]] {
        let ray = Scaled::new(dirs.clone());
        let p = OmegaExpr::<RatFunc1>::p(0, 1, 0);
        let x = ray.diff(0, 1);
        let e = Ring::add(&Ring::mul(&p, &p).scale(&qi(-4)), &OmegaExpr::constant(Ring::mul(&x, &x).try_inv().unwrap()));
        let s = expand_homogeneous(&e, &dirs, 4).unwrap();
        assert!(s.singular_part().is_empty());
        assert_eq!(s.coeff(0).unwrap(), PiPoly::monomial(1, q(-1, 3)));
        // π²/(4 sin²πx) = 1/(4x²) + π²/12 + π⁴x²/60 + …, so the x² term is −π⁴d²/15
        let d = &dirs[0] - &dirs[1];
        assert_eq!(s.coeff(2).unwrap(), PiPoly::monomial(2, -(&d * &d) / qi(15)));
        assert!(s.coeff(1).unwrap().is_zero() && s.coeff(3).unwrap().is_zero());
    }
}

#[test]
fn constants_expand_to_themselves() {
    let dirs = vec![qi(0), qi(1)];
    let e = OmegaExpr::constant(RatFunc1::one().scale(&qi(5)));
    let s = expand_homogeneous(&e, &dirs, 2).unwrap();
    assert_eq!(s.coeff(0).unwrap(), PiPoly::constant(qi(5)));
    assert!(s.singular_part().is_empty());
}

#[test]
fn bare_omega_cannot_be_expanded() {
    let dirs = vec![qi(0), qi(1)];
    let e = OmegaExpr::<RatFunc1>::omega(0, 1, 0);
    assert!(matches!(expand_homogeneous(&e, &dirs, 1), Err(Error::ResidualOmega(_))));
}

#[test]
fn omega_cancels_in_every_table_monomial() {
    let dirs = default_directions();
    for n in [2, 3] {
        let table = CoefficientTable::builtin(n).unwrap();
        let ray = Scaled::new(dirs[..n].to_vec());
        let mut ex = Expectations::new(&ray, Calibration::fixed());
        for (w, _) in table.on_ray(&dirs[..n]).unwrap() {
            let e = ex.monomial(&w).unwrap();
            let r = assert_omega_cancellation(&e, &ray);
            assert!(r.is_ok(), "n={n} {w:?}: {:?}", r.err());
        }
    }
}
