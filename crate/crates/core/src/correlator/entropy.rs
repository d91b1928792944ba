//! Von Neumann entropy of an exact density matrix.

use crate::arith::{ln_enclosure, BigFloat, Poly, Q};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matsubara::{charpoly, isolate_real_roots, sturm_sequence, RealRoot};
use num_traits::{One, Signed, Zero};

/// Rational enclosure of `−x ln x` for `x` in `[lo, hi]`, `0 < lo ≤ hi ≤ 1`.
fn xlogx_enclosure(lo: &Q, hi: &Q, prec: u32) -> (Q, Q) {
    let f = |x: &Q| {
        let (a, b) = ln_enclosure(x, prec);
        (-(x * &b), -(x * &a))
    };
    let (flo_a, flo_b) = f(lo);
    let (fhi_a, fhi_b) = f(hi);
    let lower = if flo_a < fhi_a { flo_a } else { fhi_a };
    let mut upper = if flo_b > fhi_b { flo_b } else { fhi_b };
    if lo != hi {
        // concave: the interior maximum exceeds the endpoints by at most |f'|·width
        let (la, _) = ln_enclosure(lo, prec);
        let slope = la.abs() + Q::one();
        upper += slope * (hi - lo);
    }
    (lower, upper)
}

fn multiplicity(root: &RealRoot, p: &Poly) -> usize {
    // the root has multiplicity ≥ k+1 iff it is a root of gcd(p, p', …, p⁽ᵏ⁾); these
    // gcds divide p, so an isolating interval of p's roots decides membership
    let mut m = 0;
    let mut g = p.clone();
    let mut d = p.clone();
    while g.degree().is_some_and(|k| k > 0) && root.is_root_of(&g) {
        m += 1;
        d = d.derivative();
        g = g.gcd(&d);
    }
    m
}

/// `−Tr(D ln D)` in natural logarithms, correctly rounded to `digits` digits.
///
/// `D` must be symmetric, positive semidefinite and of unit trace.
pub fn entropy(d: &Matrix<Q>, digits: u32) -> Result<BigFloat> {
    let n = d.rows();
    if n == 0 || d.cols() != n {
        return Err(Error::NotADensityMatrix("matrix must be square and nonempty".into()));
    }
    if *d != d.transpose() {
        return Err(Error::NotADensityMatrix("matrix is not symmetric".into()));
    }
    if d.trace() != Q::one() {
        return Err(Error::NotADensityMatrix(format!("trace is {}, not 1", d.trace())));
    }
    let mut p = charpoly(d);
    // zero eigenvalues contribute nothing
    while p.degree().is_some_and(|k| k > 0) && p.coeff(0).is_zero() {
        p = Poly::new(p.coeffs()[1..].to_vec());
    }
    let sf = p.squarefree();
    let seq = sturm_sequence(&sf);
    let mut roots: Vec<(RealRoot, usize)> = Vec::new();
    let mut total = 0usize;
    for mut r in isolate_real_roots(&sf) {
        let m = multiplicity(&r, &p);
        loop {
            let (lo, hi) = r.bounds();
            if hi.is_negative() || (lo.is_negative() && hi.is_zero()) {
                return Err(Error::NotADensityMatrix("negative eigenvalue".into()));
            }
            if lo.is_positive() {
                break;
            }
            r.bisect(&sf, &seq);
        }
        total += m;
        roots.push((r, m));
    }
    if total != p.degree().unwrap_or(0) {
        return Err(Error::NotADensityMatrix("non-real eigenvalues".into()));
    }
    let mut prec = digits + 10;
    loop {
        let width = Q::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), prec as usize));
        let (mut lo, mut hi) = (Q::zero(), Q::zero());
        for (r, m) in roots.iter_mut() {
            r.refine(&sf, &seq, &width);
            let (a, b) = r.bounds();
            if a.is_one() && b.is_one() {
                continue;
            }
            let (x, y) = xlogx_enclosure(&a, &b, prec);
            let m = Q::from_integer((*m).into());
            lo += &m * x;
            hi += &m * y;
        }
        if let Some(v) = BigFloat::from_enclosure(&lo, &hi, digits) {
            return Ok(v);
        }
        if lo == hi {
            return Ok(BigFloat::from_q(&lo, digits));
        }
        prec = prec * 2;
    }
}
