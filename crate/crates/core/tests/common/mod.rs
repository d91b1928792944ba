//! Brute-force trace oracle shared by the direct-expectation tests and the
//! acceptance harness.
//!
//! The oracle builds `Tr_{[1,n]}(𝐓₁(λ₁)⋯𝐓_n(λ_n)·O)` as a full trace over
//! `(ℂ³)^{⊗n} ⊗ M`, locates the dominant eigenvalue of `T(0)` by floating-point power
//! iteration followed by exact bisection on `det(T(0) − x)`, and averages over the
//! dominant eigenspace with an exact projector built from left and right null spaces
//! (rational roots) or with the squared resolvent at a 100-digit rational
//! approximation of the root (irrational roots).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use s1fc::arith::{q, qi, Q};
use s1fc::lattice::{embed_two_site, fused_monodromy, fused_transfer, spin_ops, transfer, MatsubaraData, Spin};
use s1fc::linalg::Matrix;
use s1fc::matsubara::LocalOperator;

pub fn det(m: &Matrix<Q>) -> Q {
    let n = m.rows();
    let mut a = m.clone();
    let mut d = qi(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else { return Q::zero() };
        if p != c {
            for j in 0..n {
                let (x, y) = (a.get(p, j).clone(), a.get(c, j).clone());
                a.set(p, j, y);
                a.set(c, j, x);
            }
            d = -d;
        }
        let piv = a.get(c, c).clone();
        d *= &piv;
        for r in c + 1..n {
            let f = a.get(r, c) / &piv;
            for j in c..n {
                let v = a.get(r, j) - &f * a.get(c, j);
                a.set(r, j, v);
            }
        }
    }
    d
}

pub fn shifted(a: &Matrix<Q>, x: &Q) -> Matrix<Q> {
    a.sub(&Matrix::identity(a.rows()).scale_by(x)).unwrap()
}

/// Dominant eigenvalue of `a` in floating point.
pub fn power_iteration(a: &Matrix<Q>) -> f64 {
    let n = a.rows();
    let af: Vec<f64> = (0..n * n).map(|k| a.get(k / n, k % n).to_f64().unwrap()).collect();
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.37 * i as f64).collect();
    let mut lam = 0.0;
    for _ in 0..4000 {
        // two steps so that a dominant ±r pair would not oscillate the estimate
        let w: Vec<f64> = (0..n).map(|i| (0..n).map(|j| af[i * n + j] * v[j]).sum()).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        let num: f64 = (0..n).map(|i| v[i] * w[i]).sum();
        let den: f64 = v.iter().map(|x| x * x).sum();
        lam = num / den;
        v = w.iter().map(|x| x / norm).collect();
    }
    lam
}

pub enum Root {
    Rational(Q),
    Approx(Q),
}

/// Exact root of `det(a − x)` near a floating-point estimate: small-denominator
/// rationals are tested first (these may be roots of even multiplicity), then the
/// root is bracketed and bisected to 100 digits.
pub fn locate_root(a: &Matrix<Q>, est: f64) -> Root {
    let f = |x: &Q| det(&shifted(a, x));
    let c = Q::from_float(est).unwrap();
    for den in 1..=400i64 {
        let cand = Q::new((&c * Q::from_integer(den.into())).round().to_integer(), den.into());
        if (&cand - &c).abs() < q(1, 1_000_000) && f(&cand).is_zero() {
            return Root::Rational(cand);
        }
    }
    let mut w = q(1, 1_000_000);
    let (mut lo, mut hi) = (&c - &w, &c + &w);
    while f(&lo).signum() == f(&hi).signum() {
        w *= qi(2);
        lo = &c - &w;
        hi = &c + &w;
        assert!(w < q(1, 100), "no sign change near {est}");
    }
    let eps = Q::new(BigInt::from(1), BigInt::from(10).pow(100));
    let flo = f(&lo).signum();
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / qi(2);
        let fm = f(&mid);
        if fm.is_zero() {
            return Root::Rational(mid);
        }
        if fm.signum() == flo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Root::Approx((lo + hi) / qi(2))
}

/// Restriction of an `S^z`-conserving operator to the lowest non-negative `S^z` sector.
pub fn sector(a: &Matrix<Q>, md: &MatsubaraData) -> Matrix<Q> {
    let diag = md.spins.iter().fold(vec![Q::zero()], |acc, s| {
        let z = spin_ops(*s).0;
        let zs: Vec<Q> = (0..z.rows()).map(|i| z.get(i, i).clone()).collect();
        acc.iter().flat_map(|x| zs.iter().map(move |y| x + y)).collect()
    });
    let target = diag.iter().filter(|x| !x.is_negative()).min().unwrap().clone();
    let idx: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] == target).collect();
    Matrix::from_fn(idx.len(), idx.len(), |i, j| a.get(idx[i], idx[j]).clone())
}

/// A matrix `M` with `Tr(M X)/Tr(M)` the average of `X` over the dominant eigenspace
/// of `a`: the exact spectral projector `R(LR)⁻¹L` for a rational root, and
/// `(a − r̃)⁻²` for an irrational one, whose weight on other eigenspaces is
/// suppressed by `|r − r̃|² < 10⁻²⁰⁰`.
pub fn dominant_weight(a: &Matrix<Q>, md: &MatsubaraData) -> Matrix<Q> {
    if a.scalar_value().is_some() {
        return Matrix::identity(a.rows());
    }
    // every multiplet occurs once in the lowest non-negative S^z sector, so the root is
    // simple there and can be bracketed
    match locate_root(&sector(a, md), power_iteration(a)) {
        Root::Rational(r) => {
            let right = shifted(a, &r).nullspace();
            let left = shifted(&a.transpose(), &r).nullspace();
            let k = right.len();
            let rm = Matrix::from_fn(a.rows(), k, |i, j| right[j][i].clone());
            let lm = Matrix::from_fn(k, a.rows(), |i, j| left[i][j].clone());
            let gram = lm.mul(&rm).unwrap().inverse().unwrap();
            rm.mul(&gram).unwrap().mul(&lm).unwrap()
        }
        Root::Approx(r) => {
            let inv = shifted(a, &r).inverse().unwrap();
            inv.mul(&inv).unwrap()
        }
    }
}

/// `Tr_{[1,n]}(𝐓₁(λ₁)⋯𝐓_n(λ_n)·(O⊗1))` through the full tensor space.
pub fn full_trace_numerator(op: &LocalOperator, lambdas: &[Q], md: &MatsubaraData) -> Matrix<Q> {
    let n = lambdas.len();
    let d = md.dim();
    let mut dims = vec![3; n];
    dims.push(d);
    let total: usize = dims.iter().product();
    let mut prod = Matrix::<Q>::identity(total);
    for (k, l) in lambdas.iter().enumerate() {
        prod = prod.mul(&embed_two_site(&fused_monodromy(l, md).unwrap(), &dims, k, n)).unwrap();
    }
    let prod = prod.mul(&op.matrix().kron(&Matrix::identity(d))).unwrap();
    let outer = total / d;
    Matrix::from_fn(d, d, |i, j| (0..outer).map(|a| prod.get(a * d + i, a * d + j).clone()).sum())
}

pub fn oracle(op: &LocalOperator, lambdas: &[Q], md: &MatsubaraData) -> Q {
    let w = dominant_weight(&transfer(&qi(0), md).unwrap(), md);
    let mut den = Matrix::<Q>::identity(md.dim());
    for l in lambdas {
        den = den.mul(&fused_transfer(l, md).unwrap()).unwrap();
    }
    let num = full_trace_numerator(op, lambdas, md);
    w.mul(&num).unwrap().trace() / w.mul(&den).unwrap().trace()
}

pub fn chain(spins: &[Spin], tau: &[Q]) -> MatsubaraData {
    MatsubaraData::new(spins.to_vec(), tau.to_vec()).unwrap()
}

pub fn close(a: &Q, b: &Q, digits: u32) -> bool {
    let tol = Q::new(BigInt::from(1), BigInt::from(10).pow(digits));
    (a - b).abs() <= tol * (b.abs() + qi(1))
}

pub fn test_chains() -> Vec<MatsubaraData> {
    vec![
        chain(&[Spin::Half], &[qi(0)]),
        chain(&[Spin::One], &[qi(0)]),
        chain(&[Spin::Half, Spin::Half], &[qi(0), q(1, 3)]),
        chain(&[Spin::Half, Spin::One], &[q(1, 3), q(-1, 2)]),
        chain(&[Spin::One, Spin::One], &[qi(0), q(2, 5)]),
    ]
}

/// A non-invariant two-site operator with small rational entries.
pub fn generic_operator() -> LocalOperator {
    LocalOperator::new(2, Matrix::from_fn(9, 9, |i, j| q(((3 * i + 5 * j) % 7) as i64 - 3, 1 + ((i + j) % 4) as i64)))
        .unwrap()
}
