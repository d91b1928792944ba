//! Embedding of few-site operators into tensor products.

use crate::arith::Ring;
use crate::linalg::Matrix;

/// Mixed-radix decomposition of a flat index (first factor most significant).
fn digits(mut x: usize, dims: &[usize]) -> Vec<usize> {
    let mut d = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        d[k] = x % dims[k];
        x /= dims[k];
    }
    d
}

fn flat(d: &[usize], dims: &[usize]) -> usize {
    d.iter().zip(dims).fold(0, |acc, (x, n)| acc * n + x)
}

/// Embeds an operator acting on factors `(i, j)` (in that order, `i ≠ j`) into
/// `⊗_k ℂ^{dims[k]}`.
pub fn embed_two_site<C: Ring>(op: &Matrix<C>, dims: &[usize], i: usize, j: usize) -> Matrix<C> {
    assert!(i != j && i < dims.len() && j < dims.len());
    assert_eq!(op.rows(), dims[i] * dims[j]);
    let total: usize = dims.iter().product();
    let mut out = Matrix::zeros(total, total);
    for x in 0..total {
        let dx = digits(x, dims);
        for a in 0..dims[i] {
            for b in 0..dims[j] {
                let v = op.get(a * dims[j] + b, dx[i] * dims[j] + dx[j]);
                if v.is_zero() {
                    continue;
                }
                let mut dy = dx.clone();
                dy[i] = a;
                dy[j] = b;
                out.set(flat(&dy, dims), x, v.clone());
            }
        }
    }
    out
}

/// Permutation operator `P(u⊗v) = v⊗u` on `ℂ^n ⊗ ℂ^n`.
pub fn permutation_matrix<C: Ring>(n: usize) -> Matrix<C> {
    Matrix::from_fn(n * n, n * n, |r, c| {
        let (a, b) = (c / n, c % n);
        if r == b * n + a {
            C::one()
        } else {
            C::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qi, Q};

    #[test]
    fn embedding_on_adjacent_pair_is_kron() {
        let op: Matrix<Q> = Matrix::from_fn(4, 4, |i, j| qi((i * 4 + j) as i64));
        let e = embed_two_site(&op, &[2, 2, 3], 0, 1);
        assert_eq!(e, op.kron(&Matrix::identity(3)));
    }

    #[test]
    fn reversed_pair_conjugates_by_swap() {
        let op: Matrix<Q> = Matrix::from_fn(4, 4, |i, j| qi((i * 7 + j * 3) as i64 % 5));
        let p = permutation_matrix::<Q>(2);
        let e1 = embed_two_site(&op, &[2, 2], 1, 0);
        let e2 = p.mul(&op).unwrap().mul(&p).unwrap();
        assert_eq!(e1, e2);
    }
}
