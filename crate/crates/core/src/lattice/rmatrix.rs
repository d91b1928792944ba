//! The explicit spin-1 ⊗ spin-1 R-matrix and the Yang–Baxter check.

use super::embed::embed_two_site;
use crate::arith::{qi, Poly, Q};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

fn p(c: &[i64]) -> Poly {
    Poly::new(c.iter().map(|&x| qi(x)).collect())
}

/// The 9×9 R-matrix as polynomials in ζ (entries of degree ≤ 2).
pub fn r_s1_poly() -> Matrix<Poly> {
    let mut m: Matrix<Poly> = Matrix::zeros(9, 9);
    let mut set = |i: usize, j: usize, v: Poly| m.set(i - 1, j - 1, v);
    let a = p(&[2, 3, 1]); // (ζ+1)(ζ+2)
    let b = p(&[0, 1, 1]); // ζ(ζ+1)
    let c = p(&[0, -1, 1]); // (ζ−1)ζ
    let two_z1 = p(&[2, 2]); // 2(ζ+1)
    set(1, 1, a.clone());
    set(9, 9, a);
    for k in [2, 4, 6, 8] {
        set(k, k, b.clone());
    }
    set(3, 3, c.clone());
    set(7, 7, c);
    set(5, 5, p(&[2, 1, 1]));
    for (i, j) in [(2, 4), (4, 2), (6, 8), (8, 6)] {
        set(i, j, two_z1.clone());
    }
    set(3, 5, p(&[0, 4]));
    set(3, 7, p(&[2]));
    set(7, 3, p(&[2]));
    set(7, 5, p(&[0, 4]));
    set(5, 3, p(&[0, 1]));
    set(5, 7, p(&[0, 1]));
    m
}

/// The R-matrix evaluated at a rational ζ.
pub fn r_s1(zeta: &Q) -> Matrix<Q> {
    r_s1_poly().map(|e| e.eval(zeta))
}

/// Checks `R₁₂(ζ) R₁₃(ζ+η) R₂₃(η) = R₂₃(η) R₁₃(ζ+η) R₁₂(ζ)` exactly.
///
/// Each `r_ij` returns the two-site operator on factors `(i, j)` of
/// `ℂ^{d₁} ⊗ ℂ^{d₂} ⊗ ℂ^{d₃}`.
pub fn check_yang_baxter(
    r12: &dyn Fn(&Q) -> Matrix<Q>,
    r13: &dyn Fn(&Q) -> Matrix<Q>,
    r23: &dyn Fn(&Q) -> Matrix<Q>,
    dims: [usize; 3],
    zeta: &Q,
    eta: &Q,
) -> Result<bool> {
    let a = r12(zeta);
    let b = r13(&(zeta + eta));
    let c = r23(eta);
    for (m, (i, j)) in [(&a, (0, 1)), (&b, (0, 2)), (&c, (1, 2))] {
        if m.rows() != dims[i] * dims[j] || m.cols() != m.rows() {
            return Err(Error::DimensionMismatch(format!(
                "operator on factors ({i},{j}) has size {}x{}, expected {}",
                m.rows(),
                m.cols(),
                dims[i] * dims[j]
            )));
        }
    }
    let e12 = embed_two_site(&a, &dims, 0, 1);
    let e13 = embed_two_site(&b, &dims, 0, 2);
    let e23 = embed_two_site(&c, &dims, 1, 2);
    let lhs = e12.mul(&e13)?.mul(&e23)?;
    let rhs = e23.mul(&e13)?.mul(&e12)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::lattice::embed::permutation_matrix;

    #[test]
    fn r_at_zero_is_twice_permutation() {
        let p9 = permutation_matrix::<Q>(3).scale_by(&qi(2));
        assert_eq!(r_s1(&qi(0)), p9);
    }

    #[test]
    fn listed_entries() {
        assert_eq!(r_s1(&qi(1)).get(0, 0), &qi(6));
        assert_eq!(r_s1(&qi(2)).get(2, 4), &qi(8));
    }

    #[test]
    fn yang_baxter_sample() {
        let r = |z: &Q| r_s1(z);
        assert!(check_yang_baxter(&r, &r, &r, [3, 3, 3], &q(1, 3), &q(2, 5)).unwrap());
        assert!(check_yang_baxter(&r, &r, &r, [3, 3, 3], &qi(0), &qi(0)).unwrap());
    }

    #[test]
    fn dimension_mismatch_reported() {
        let r = |z: &Q| r_s1(z);
        let bad = |_: &Q| Matrix::<Q>::identity(4);
        assert!(check_yang_baxter(&r, &bad, &r, [3, 3, 3], &qi(1), &qi(1)).is_err());
    }
}
