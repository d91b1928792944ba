//! Exact lattice identities: Yang–Baxter, fusion, the eigenvalue relation between
//! fused and unfused transfer matrices, and commutativity.
//!
//! Run with `cargo run --example lattice_identities`.

use s1fc::arith::{q, qi, Q};
use s1fc::lattice::{
    check_commuting, check_eigen_relation, check_fusion, check_yang_baxter, quantum_determinant, r_s1, MatsubaraData,
    Spin,
};
use s1fc::linalg::Matrix;
use s1fc::Result;

fn main() -> Result<()> {
    let r = |z: &Q| r_s1(z);
    let yb = check_yang_baxter(&r, &r, &r, [3, 3, 3], &q(2, 7), &q(-5, 3))?;
    println!("Yang–Baxter at (2/7, −5/3): {yb}");

    // R(0) is twice the permutation of the two spin-1 factors
    let p9 = Matrix::from_fn(9, 9, |i, j| if (i % 3) * 3 + i / 3 == j { qi(2) } else { qi(0) });
    println!("R(0) = 2·P: {}", r_s1(&qi(0)) == p9);

    let md = MatsubaraData::new(vec![Spin::Half, Spin::One], vec![q(1, 3), q(-1, 2)])?;
    println!("chain: {}", md.to_json());
    println!("fusion (n=1): {}", check_fusion(&[q(3, 5)], &md)?);
    println!("fusion (n=2): {}", check_fusion(&[q(3, 5), q(-1, 4)], &md)?);
    println!("eigen relation: {}", check_eigen_relation(&md, &[q(1, 7), qi(2)])?);
    println!("commuting: {:?}", check_commuting(&md, &q(1, 2), &q(-4, 9))?);
    println!("quantum determinant at 1/3: {}", quantum_determinant(&q(1, 3), &md)?);
    Ok(())
}
