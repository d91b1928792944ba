//! Direct expectation values against an independent brute-force oracle, and
//! properties of the expectation functional.

mod common;

use common::*;
use num_traits::Zero;
use s1fc::arith::{q, qi, BigFloat, Q};
use s1fc::lattice::{spin_ops, transfer, Spin};
use s1fc::linalg::Matrix;
use s1fc::matsubara::{build_ss_operator, direct_expectation, dominant_state, spin1_generators, LocalOperator};
use s1fc::Error;

#[test]
fn matches_brute_force_trace_oracle_exactly() {
    // on L ≤ 2 every total-spin multiplet occurs once, so the dominant eigenvalue of
    // T(0) is rational and the comparison is exact
    let ops = [build_ss_operator(2).unwrap(), generic_operator()];
    let lambdas = [qi(0), q(1, 7)];
    for md in test_chains() {
        let state = dominant_state(&md, 60).unwrap();
        assert!(state.is_rational(), "{}", md.to_json());
        for op in &ops {
            let v = state.direct_expectation(op, &lambdas).unwrap();
            assert_eq!(v.exact.unwrap(), oracle(op, &lambdas, &md), "{}", md.to_json());
        }
    }
}

#[test]
fn matches_brute_force_trace_oracle_to_forty_digits() {
    let chains = [
        chain(&[Spin::Half, Spin::Half, Spin::Half], &[qi(0), q(5, 3), q(3, 7)]),
        chain(&[Spin::Half, Spin::Half, Spin::One], &[qi(0), q(9, 5), q(5, 7)]),
    ];
    let ops = [build_ss_operator(2).unwrap(), generic_operator()];
    let lambdas = [q(1, 3), q(-2, 5)];
    for md in &chains {
        let state = dominant_state(md, 45).unwrap();
        assert!(!state.is_rational(), "{}", md.to_json());
        for op in &ops {
            let v = state.direct_expectation(op, &lambdas).unwrap();
            let o = oracle(op, &lambdas, md);
            assert!(v.exact.is_none());
            assert!(close(&v.approx.to_q(), &o, 40), "{}: {} vs {}", md.to_json(), v.approx, BigFloat::from_q(&o, 45));
        }
    }
}

#[test]
fn single_site_spin_half_example() {
    let md = chain(&[Spin::Half], &[qi(0)]);
    let op = build_ss_operator(2).unwrap();
    let lambdas = [qi(0), q(1, 7)];
    let v = direct_expectation(&op, &lambdas, &md, 30).unwrap();
    assert_eq!(v.exact.unwrap(), oracle(&op, &lambdas, &md));
}

#[test]
fn identity_has_unit_expectation() {
    for md in test_chains() {
        let v = direct_expectation(&LocalOperator::identity(2), &[q(1, 5), q(-2, 9)], &md, 30).unwrap();
        assert!(close(&v.approx.to_q(), &qi(1), 28), "{}", md.to_json());
    }
}

#[test]
fn expectation_is_linear() {
    let md = chain(&[Spin::Half, Spin::One], &[q(1, 3), q(-1, 2)]);
    let state = dominant_state(&md, 40).unwrap();
    let lambdas = [q(1, 4), q(2, 3)];
    let a = build_ss_operator(2).unwrap();
    let b = generic_operator();
    let sum = LocalOperator::new(2, a.matrix().scale_by(&qi(2)).add(&b.matrix().scale_by(&q(-1, 3))).unwrap()).unwrap();
    let va = state.direct_expectation(&a, &lambdas).unwrap().exact.unwrap();
    let vb = state.direct_expectation(&b, &lambdas).unwrap().exact.unwrap();
    let vs = state.direct_expectation(&sum, &lambdas).unwrap().exact.unwrap();
    assert_eq!(vs, qi(2) * va - vb / qi(3));
}

#[test]
fn invariant_under_simultaneous_shift() {
    let md = chain(&[Spin::Half, Spin::One], &[q(1, 3), q(-1, 2)]);
    let op = generic_operator();
    let lambdas = [q(1, 4), q(2, 3)];
    for c in [q(1, 50), q(-1, 30)] {
        let moved_md = md.shifted(&c);
        let moved: Vec<Q> = lambdas.iter().map(|l| l + &c).collect();
        // the Matsubara operators coincide exactly
        let num = s1fc::matsubara::numerator_operator(&op, &moved, &moved_md).unwrap();
        assert_eq!(num, s1fc::matsubara::numerator_operator(&op, &lambdas, &md).unwrap());
        // and so do the expectation values in the (shared) dominant eigenvector
        let a = direct_expectation(&op, &lambdas, &md, 30).unwrap();
        let b = direct_expectation(&op, &moved, &moved_md, 30).unwrap();
        assert_eq!(a.exact, b.exact);
    }
}

#[test]
fn invariant_operator_under_global_rotation() {
    // U = exp(e) per site is rational; U⊗U commutes with the invariant S₁·S₂
    let (_, e, _) = spin1_generators();
    let u = Matrix::<Q>::identity(3).add(&e).unwrap().add(&e.mul(&e).unwrap().scale_by(&q(1, 2))).unwrap();
    let uu = u.kron(&u);
    let ss = build_ss_operator(2).unwrap();
    let rotated = uu.mul(ss.matrix()).unwrap().mul(&uu.inverse().unwrap()).unwrap();
    assert_eq!(&rotated, ss.matrix());
    let md = chain(&[Spin::Half, Spin::Half], &[qi(0), q(1, 3)]);
    let a = direct_expectation(&ss, &[qi(0), q(1, 7)], &md, 30).unwrap();
    let b = direct_expectation(&LocalOperator::new(2, rotated).unwrap(), &[qi(0), q(1, 7)], &md, 30).unwrap();
    assert_eq!(a.approx, b.approx);
}

#[test]
fn ss_operator_is_twice_the_casimir_coupling() {
    let (z, p, m) = spin_ops(Spin::One);
    let casimir = z.kron(&z).add(&p.kron(&m).add(&m.kron(&p)).unwrap().scale_by(&q(1, 2))).unwrap();
    // eigenvalues of S₁·S₂ by ranks of (A − x): 1 (×5), −1 (×3), −2 (×1)
    for (x, mult) in [(qi(1), 5), (qi(-1), 3), (qi(-2), 1)] {
        assert_eq!(9 - shifted(&casimir, &x).rank(), mult, "eigenvalue {x}");
    }
    let ss = build_ss_operator(2).unwrap();
    assert_eq!(*ss.matrix(), casimir.scale_by(&qi(2)));
    for (x, mult) in [(qi(2), 5), (qi(-2), 3), (qi(-4), 1)] {
        assert_eq!(9 - shifted(ss.matrix(), &x).rank(), mult, "eigenvalue {x}");
    }
    assert_eq!(*ss.matrix().get(0, 0), qi(2));
    assert!(ss.matrix().trace().is_zero());
    assert!(ss.is_sl2_invariant());
}

#[test]
fn ss_operator_on_three_sites_acts_on_the_ends() {
    let ss3 = build_ss_operator(3).unwrap();
    let ss2 = build_ss_operator(2).unwrap();
    // conjugating by the swap of sites 2 and 3 turns S₁·S₃ into S₁·S₂ ⊗ 1
    let swap23 = Matrix::<Q>::identity(3).kron(&Matrix::from_fn(9, 9, |i, j| {
        if (i % 3) * 3 + i / 3 == j {
            qi(1)
        } else {
            qi(0)
        }
    }));
    let moved = swap23.mul(ss3.matrix()).unwrap().mul(&swap23).unwrap();
    assert_eq!(moved, ss2.matrix().kron(&Matrix::identity(3)));
    assert!(matches!(build_ss_operator(1), Err(Error::ConfigError(_))));
}

#[test]
fn dominant_eigenvalue_of_two_site_chain() {
    let md = chain(&[Spin::Half, Spin::Half], &[qi(0), q(1, 3)]);
    let st = dominant_state(&md, 50).unwrap();
    let a = transfer(&qi(0), &md).unwrap();
    let est = power_iteration(&a);
    assert!((st.eigenvalue0().approx.to_f64() - est).abs() < 1e-9);
    let r = st.eigenvalue0().exact.clone().expect("rational on two sites");
    assert!(det(&shifted(&a, &r)).is_zero());
    // a three-site chain with an irrational dominant root, to 50 digits
    let md = chain(&[Spin::Half, Spin::Half, Spin::Half], &[qi(0), q(5, 3), q(3, 7)]);
    let st = dominant_state(&md, 50).unwrap();
    let a = transfer(&qi(0), &md).unwrap();
    match locate_root(&sector(&a, &md), power_iteration(&a)) {
        Root::Approx(r) => assert!(close(&st.eigenvalue0().approx.to_q(), &r, 49)),
        Root::Rational(r) => panic!("unexpected rational root {r}"),
    }
}

#[test]
fn operator_size_must_match_parameters() {
    let md = chain(&[Spin::Half], &[qi(0)]);
    let res = direct_expectation(&build_ss_operator(2).unwrap(), &[qi(0)], &md, 20);
    assert!(matches!(res, Err(Error::DimensionMismatch(_))));
}
