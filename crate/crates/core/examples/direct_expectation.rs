//! Expectation values of local operators from Matsubara data through the dominant
//! eigenvector of the transfer matrix.
//!
//! Run with `cargo run --example direct_expectation`.

use s1fc::arith::q;
use s1fc::lattice::{MatsubaraData, Spin};
use s1fc::matsubara::{build_ss_operator, dominant_state, LocalOperator};
use s1fc::Result;

fn main() -> Result<()> {
    let md = MatsubaraData::new(vec![Spin::Half, Spin::One], vec![q(1, 3), q(-1, 2)])?;
    let state = dominant_state(&md, 30)?;
    println!("dominant eigenvalue T(0) = {}", state.eigenvalue0());

    let lambdas = [q(0, 1), q(1, 5)];
    let ss = build_ss_operator(2)?;
    let v = state.direct_expectation(&ss, &lambdas)?;
    println!("<Σ S^a_1 S^a_2> at λ = (0, 1/5): {v}");

    let id = LocalOperator::identity(2);
    println!("<I> = {}", state.direct_expectation(&id, &lambdas)?);

    // operators can also be given as JSON
    let op = LocalOperator::parse(r#"{"n": 1, "matrix": [["1","0","0"],["0","0","0"],["0","0","-1"]]}"#)?;
    println!("<S^z_1> = {}", state.direct_expectation(&op, &lambdas[..1])?);
    Ok(())
}
