//! Fitting decomposition coefficients against finite-chain data, and the von
//! Neumann entropy of an exact density matrix.
//!
//! Run with `cargo run --example fit_and_entropy`.

use s1fc::algebra::{Kind, Letter};
use s1fc::arith::{q, qi, Q};
use s1fc::correlator::{build_fit_system, entropy, BasisOracle, FitSample};
use s1fc::lattice::{MatsubaraData, Spin};
use s1fc::linalg::Matrix;
use s1fc::matsubara::{build_ss_operator, direct_expectation, LocalOperator};
use s1fc::Result;

/// Stand-in for a finite-temperature ω: answers basis expectations with direct
/// expectations of two fixed operators.
struct Mock {
    ops: Vec<LocalOperator>,
}

impl BasisOracle for Mock {
    fn expectation(&self, m: &[Letter], s: &FitSample) -> Result<Q> {
        let i = if m.is_empty() { 0 } else { 1 };
        let v = direct_expectation(&self.ops[i], &s.lambdas, &s.data, 20)?;
        Ok(v.exact.expect("rational sample"))
    }
}

fn main() -> Result<()> {
    let ss = build_ss_operator(2)?;
    let id = LocalOperator::identity(2);
    // planted decomposition: target = 3·I − 2·SS
    let target = LocalOperator::new(2, id.matrix().scale_by(&qi(3)).sub(&ss.matrix().scale_by(&qi(2)))?)?;
    let basis = vec![vec![], vec![Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 1)]];
    let samples: Vec<FitSample> = [q(1, 3), q(2, 5), q(-1, 7)]
        .into_iter()
        .map(|t| FitSample { data: MatsubaraData::new(vec![Spin::Half], vec![t]).unwrap(), lambdas: vec![qi(0), q(1, 4)] })
        .collect();
    let sys = build_fit_system(&basis, &Mock { ops: vec![id, ss] }, &samples, &target, 20)?;
    let coeffs: Vec<String> = sys.solve()?.iter().map(|c| c.to_string()).collect();
    println!("rank {} of {}; recovered [{}]", sys.rank(), basis.len(), coeffs.join(", "));

    let d = Matrix::from_fn(9, 9, |i, j| if i == j { q(1, 9) } else { qi(0) });
    println!("S(uniform over 9) = {}", entropy(&d, 30)?);
    let d = Matrix::from_rows(vec![vec![q(1, 2), q(1, 4)], vec![q(1, 4), q(1, 2)]])?;
    println!("S([[1/2,1/4],[1/4,1/2]]) = {}", entropy(&d, 30)?);
    Ok(())
}
