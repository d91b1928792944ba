//! Fitting decomposition coefficients against finite-chain data, and the von
//! Neumann entropy of exact density matrices.

use s1fc::algebra::{Kind, Letter};
use s1fc::arith::{q, qi, Q};
use s1fc::correlator::{build_fit_system, entropy, BasisOracle, FitSample};
use s1fc::lattice::{MatsubaraData, Spin};
use s1fc::linalg::Matrix;
use s1fc::matsubara::{build_ss_operator, direct_expectation, LocalOperator};
use s1fc::{Error, Result};

/// Answers each basis monomial with the direct expectation of a fixed operator,
/// standing in for a finite-temperature ω.
struct Mock {
    ops: Vec<(Vec<Letter>, LocalOperator)>,
}

impl BasisOracle for Mock {
    fn expectation(&self, m: &[Letter], s: &FitSample) -> Result<Q> {
        let (_, op) = self.ops.iter().find(|(w, _)| w.as_slice() == m).expect("known monomial");
        Ok(direct_expectation(op, &s.lambdas, &s.data, 20)?.exact.expect("rational sample"))
    }
}

fn samples() -> Vec<FitSample> {
    [(q(1, 3), q(1, 4)), (q(2, 5), q(-1, 3)), (q(-1, 7), q(2, 9)), (q(3, 2), q(1, 5))]
        .into_iter()
        .map(|(t, l)| FitSample { data: MatsubaraData::new(vec![Spin::Half], vec![t]).unwrap(), lambdas: vec![qi(0), l] })
        .collect()
}

fn combination(ops: &[LocalOperator], cs: &[Q]) -> LocalOperator {
    let mut m = ops[0].matrix().scale_by(&cs[0]);
    for (o, c) in ops.iter().zip(cs).skip(1) {
        m = m.add(&o.matrix().scale_by(c)).unwrap();
    }
    LocalOperator::new(2, m).unwrap()
}

fn two_term_mock() -> (Vec<Vec<Letter>>, Mock, Vec<LocalOperator>) {
    let ops = vec![LocalOperator::identity(2), build_ss_operator(2).unwrap()];
    let basis = vec![vec![], vec![Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 1)]];
    let mock = Mock { ops: basis.iter().cloned().zip(ops.iter().cloned()).collect() };
    (basis, mock, ops)
}

#[test]
fn planted_decomposition_is_recovered() {
    let (basis, mock, ops) = two_term_mock();
    for planted in [vec![qi(3), qi(-2)], vec![q(-7, 4), q(5, 11)]] {
        let target = combination(&ops, &planted);
        let sys = build_fit_system(&basis, &mock, &samples(), &target, 20).unwrap();
        assert_eq!(sys.rank(), 2);
        assert_eq!(sys.solve().unwrap(), planted);
    }
}

#[test]
fn empty_basis_fits_the_zero_operator() {
    let zero = LocalOperator::new(2, Matrix::from_fn(9, 9, |_, _| qi(0))).unwrap();
    let (_, mock, _) = two_term_mock();
    let sys = build_fit_system(&[], &mock, &samples(), &zero, 20).unwrap();
    assert_eq!(sys.solve().unwrap(), Vec::<Q>::new());
}

#[test]
fn an_operator_outside_the_span_is_inconsistent() {
    // only the identity in the basis, but the target has an SS part
    let (basis, mock, ops) = two_term_mock();
    let target = combination(&ops, &[qi(1), qi(1)]);
    let sys = build_fit_system(&basis[..1], &mock, &samples(), &target, 20).unwrap();
    assert!(matches!(sys.solve(), Err(Error::SingularSystem(_))));
}

#[test]
fn too_few_samples_leave_the_system_underdetermined() {
    let (basis, mock, ops) = two_term_mock();
    let target = combination(&ops, &[qi(1), qi(1)]);
    let sys = build_fit_system(&basis, &mock, &samples()[..1], &target, 20).unwrap();
    assert_eq!(sys.rank(), 1);
    assert!(matches!(sys.solve(), Err(Error::SingularSystem(_))));
}

fn diag(d: &[Q]) -> Matrix<Q> {
    Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { qi(0) })
}

#[test]
fn entropy_of_maximally_mixed_states() {
    // ln 9 and ln 2 to 30 digits
    let s = entropy(&diag(&vec![q(1, 9); 9]), 30).unwrap();
    assert_eq!(s.to_string(), "2.19722457733621938279049047385");
    let s = entropy(&diag(&[q(1, 2), q(1, 2), qi(0)]), 30).unwrap();
    assert_eq!(s.to_string(), "0.693147180559945309417232121458");
}

#[test]
fn entropy_of_a_pure_state_vanishes() {
    let s = entropy(&diag(&[qi(1), qi(0), qi(0)]), 20).unwrap();
    assert_eq!(s.to_q(), qi(0));
    // a rank-one projector that is not diagonal
    let p = Matrix::from_rows(vec![vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(1, 2)]]).unwrap();
    assert_eq!(entropy(&p, 20).unwrap().to_q(), qi(0));
}

#[test]
fn entropy_with_irrational_free_spectrum_matches_the_binary_formula() {
    // eigenvalues 3/4 and 1/4: −¾ln¾ − ¼ln¼ = ln 4 − ¾ ln 3
    let d = Matrix::from_rows(vec![vec![q(1, 2), q(1, 4)], vec![q(1, 4), q(1, 2)]]).unwrap();
    let s = entropy(&d, 25).unwrap();
    let expect = 4f64.ln() - 0.75 * 3f64.ln();
    assert!((s.to_f64() - expect).abs() < 1e-15);
    assert_eq!(s.to_string(), "0.5623351446188083502880303");
}

#[test]
fn invalid_density_matrices_are_rejected() {
    let bad = [
        diag(&[q(1, 2), q(1, 3)]),
        diag(&[q(3, 2), q(-1, 2)]),
        Matrix::from_rows(vec![vec![q(1, 2), q(1, 4)], vec![qi(0), q(1, 2)]]).unwrap(),
        Matrix::from_fn(2, 3, |_, _| q(1, 3)),
    ];
    for d in &bad {
        assert!(matches!(entropy(d, 10), Err(Error::NotADensityMatrix(_))));
    }
}
