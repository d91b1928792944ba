//! The dominant eigenstate of the Matsubara transfer matrix `T_M(0)`.
//!
//! The state is represented by the spectral projector onto the dominant eigenspace,
//! `q(A)` with `q(x) = s(x)/(x − r)`, `s` the squarefree part of the characteristic
//! polynomial of `A = T_M(0)` and `r` the dominant root. For a simple eigenvalue
//! `q(A) ∝ |R⟩⟨L|`, so `Tr(q(A)X)/Tr(q(A)) = ⟨L|X|R⟩/⟨L|R⟩`. Irrational roots are kept
//! as a squarefree polynomial plus an isolating interval; every expectation value is
//! then a ratio of polynomials in `r` evaluated with certified interval arithmetic.

use super::roots::{charpoly, isolate_real_roots, simplest_between, sturm_sequence, Interval, RealRoot};
use crate::arith::{BigFloat, Poly, Ring, Q};
use crate::error::{Error, Result};
use crate::lattice::{fused_transfer, transfer, MatsubaraData};
use crate::linalg::Matrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A real number obtained from the dominant state: exact when rational, otherwise a
/// certified decimal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Value {
    /// Exact value when it is rational.
    #[serde(serialize_with = "ser_opt_q")]
    pub exact: Option<Q>,
    /// Decimal value, correctly rounded to the requested number of digits.
    pub approx: BigFloat,
}

fn ser_opt_q<S: serde::Serializer>(v: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_some(&crate::arith::q_to_string(q)),
        None => s.serialize_none(),
    }
}

impl Value {
    fn exact(x: Q, digits: u32) -> Self {
        Value { approx: BigFloat::from_q(&x, digits), exact: Some(x) }
    }

    /// True if the value is exactly zero.
    pub fn is_zero(&self) -> bool {
        matches!(&self.exact, Some(x) if x.is_zero())
    }
}

impl std::fmt::Display for Value {
    /// `p/q ≈ decimal` when exact, the decimal alone otherwise.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.exact {
            Some(x) => write!(f, "{} ≈ {}", crate::arith::q_to_string(x), self.approx),
            None => write!(f, "{}", self.approx),
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    /// Rational dominant root: the (unnormalized) projector is a rational matrix.
    Exact { proj: Matrix<Q> },
    /// Irrational dominant root of the squarefree polynomial `s`.
    Algebraic { powers: Vec<Matrix<Q>>, s: Poly, seq: Vec<Poly>, root: RealRoot },
}

/// The dominant eigenstate of a Matsubara chain, immutable after construction.
#[derive(Clone, Debug)]
pub struct SpectralState {
    md: MatsubaraData,
    digits: u32,
    eigenvalue0: Value,
    repr: Repr,
}

fn mat_poly(p: &Poly, a: &Matrix<Q>) -> Matrix<Q> {
    let n = a.rows();
    let mut acc = Matrix::<Q>::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc).expect("square").add(&Matrix::identity(n).scale_by(c)).expect("square");
    }
    acc
}

fn abs_interval(r: &RealRoot) -> (Q, Q) {
    let (lo, hi) = r.bounds();
    if !lo.is_negative() {
        (lo, hi)
    } else if !hi.is_positive() {
        (-hi, -lo)
    } else {
        (Q::zero(), if -&lo > hi { -lo } else { hi })
    }
}

fn pow2(k: u32) -> Q {
    Q::from_integer(BigInt::one() << k)
}

/// Finds the dominant eigenvalue of `T_M(0)` and the corresponding projector.
pub fn dominant_state(md: &MatsubaraData, digits: u32) -> Result<SpectralState> {
    let a = transfer(&Q::zero(), md)?;
    if let Some(c) = a.scalar_value() {
        return Ok(SpectralState {
            md: md.clone(),
            digits,
            eigenvalue0: Value::exact(c, digits),
            repr: Repr::Exact { proj: Matrix::identity(a.rows()) },
        });
    }
    let s = charpoly(&a).squarefree().monic();
    if !mat_poly(&s, &a).is_zero() {
        return Err(Error::DegenerateDominantEigenvalue(
            "T_M(0) is not diagonalizable; the dominant state is not defined".into(),
        ));
    }
    let deg = s.degree().unwrap_or(0);
    let mut roots = isolate_real_roots(&s);
    if roots.len() < deg {
        return Err(Error::NonRealSpectrum(format!(
            "T_M(0) has {} non-real eigenvalues",
            deg - roots.len()
        )));
    }
    let seq = sturm_sequence(&s);
    // s(x) and s(−x) share exactly the roots r with −r also a root
    let s_neg = s.compose(&Poly::new(vec![Q::zero(), -Q::one()]));
    let sym = s.gcd(&s_neg);
    let mut width = Q::one();
    let best = loop {
        for r in roots.iter_mut() {
            r.refine(&s, &seq, &width);
        }
        let abs: Vec<(Q, Q)> = roots.iter().map(abs_interval).collect();
        let (bi, _) = abs.iter().enumerate().max_by(|x, y| x.1 .1.cmp(&y.1 .1)).expect("nonempty");
        let (blo, _) = &abs[bi];
        let tie_partner = if sym.degree().unwrap_or(0) > 0 && roots[bi].is_root_of(&sym) {
            let (lo, hi) = roots[bi].bounds();
            let (nlo, nhi) = (-hi, -lo);
            roots.iter().position(|r| {
                let (l, h) = r.bounds();
                l <= nhi && nlo <= h
            })
        } else {
            None
        };
        let separated =
            abs.iter().enumerate().all(|(j, (_, h))| j == bi || Some(j) == tie_partner || h < blo);
        if separated {
            if let Some(j) = tie_partner {
                if j != bi {
                    return Err(Error::DegenerateDominantEigenvalue(
                        "T_M(0) has two dominant eigenvalues ±r of equal modulus".into(),
                    ));
                }
            }
            break bi;
        }
        width /= pow2(16);
    };
    let mut root = roots.swap_remove(best);
    // recognize rational roots
    if let RealRoot::Isolated { .. } = root {
        let tiny = Q::new(BigInt::one(), BigInt::from(10).pow(40));
        root.refine(&s, &seq, &tiny);
        if let RealRoot::Isolated { lo, hi } = &root {
            let c = simplest_between(lo, hi);
            if s.eval(&c).is_zero() {
                root = RealRoot::Exact(c);
            }
        }
    }
    let repr = match &root {
        RealRoot::Exact(r) => {
            let lin = Poly::new(vec![-r.clone(), Q::one()]);
            let q = s.exact_div(&lin)?;
            let proj = mat_poly(&q, &a);
            if proj.trace().is_zero() {
                return Err(Error::DegenerateDominantEigenvalue("spectral projector has zero trace".into()));
            }
            Repr::Exact { proj }
        }
        RealRoot::Isolated { .. } => {
            let mut powers = vec![Matrix::identity(a.rows())];
            for _ in 1..deg {
                let next = powers.last().expect("nonempty").mul(&a)?;
                powers.push(next);
            }
            Repr::Algebraic { powers, s: s.clone(), seq: seq.clone(), root: root.clone() }
        }
    };
    let mut st = SpectralState { md: md.clone(), digits, eigenvalue0: Value::exact(Q::zero(), digits), repr };
    st.eigenvalue0 = match &root {
        RealRoot::Exact(r) => Value::exact(r.clone(), digits),
        RealRoot::Isolated { .. } => st.poly_value(&Poly::x(), &Poly::constant(Q::one()))?,
    };
    st.residual_check(&a)?;
    Ok(st)
}

impl SpectralState {
    /// The Matsubara data.
    pub fn md(&self) -> &MatsubaraData {
        &self.md
    }

    /// Requested precision in decimal digits.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Dominant eigenvalue `T(0)` of `T_M(0)`.
    pub fn eigenvalue0(&self) -> &Value {
        &self.eigenvalue0
    }

    /// True if the dominant eigenvalue is rational.
    pub fn is_rational(&self) -> bool {
        matches!(self.repr, Repr::Exact { .. })
    }

    fn residual_check(&self, a: &Matrix<Q>) -> Result<()> {
        if let (Repr::Exact { proj }, Some(r)) = (&self.repr, &self.eigenvalue0.exact) {
            // A·q(A) = r·q(A) and q(A)·A = r·q(A): right and left eigenvectors
            let ap = a.mul(proj)?;
            let pa = proj.mul(a)?;
            let rp = proj.scale_by(r);
            if ap != rp || pa != rp {
                return Err(Error::DegenerateDominantEigenvalue("eigenvector residual check failed".into()));
            }
        }
        Ok(())
    }

    /// `Σ_k Tr(A^k X) c_k(y)` with `q(A) = Σ_k c_k(r) A^k`.
    fn trace_poly(powers: &[Matrix<Q>], s: &Poly, x: &Matrix<Q>) -> Result<Poly> {
        let deg = s.degree().unwrap_or(0);
        let t: Vec<Q> = powers.iter().map(|p| p.mul(x).map(|m| m.trace())).collect::<Result<_>>()?;
        let mut c = vec![Q::zero(); deg.max(1)];
        for j in 1..=deg {
            let sj = s.coeff(j);
            for (k, tk) in t.iter().enumerate().take(j) {
                c[j - k - 1] += &sj * tk;
            }
        }
        Ok(Poly::new(c))
    }

    /// Value of `n(r)/d(r)` for polynomials `n`, `d` at the dominant root.
    fn poly_value(&self, n: &Poly, d: &Poly) -> Result<Value> {
        let (s, seq, root) = match &self.repr {
            Repr::Algebraic { s, seq, root, .. } => (s, seq, root),
            Repr::Exact { .. } => unreachable!("rational roots evaluate exactly"),
        };
        if root.is_root_of(&d.gcd(s)) {
            return Err(Error::ZeroEigenvalue("denominator vanishes on the dominant state".into()));
        }
        let mut root = root.clone();
        let mut width = Q::new(BigInt::one(), BigInt::from(10).pow(self.digits + 10));
        let mut checked_exact = false;
        loop {
            root.refine(s, seq, &width);
            let (lo, hi) = root.bounds();
            let x = Interval { lo, hi };
            let num = Interval::eval_poly(n, &x);
            let den = Interval::eval_poly(d, &x);
            if let Some(v) = num.div(&den) {
                if !checked_exact {
                    checked_exact = true;
                    let c = simplest_between(&v.lo, &v.hi);
                    let test = Ring::sub(n, &d.scale(&c));
                    if test.degree().is_none() || root.is_root_of(&test.gcd(s)) {
                        return Ok(Value::exact(c, self.digits));
                    }
                }
                if let Some(b) = BigFloat::from_enclosure(&v.lo, &v.hi, self.digits) {
                    return Ok(Value { exact: None, approx: b });
                }
            }
            width /= pow2(64);
        }
    }

    /// `Tr(q(A)X) / Tr(q(A)Y)`: the ratio of expectation values of two Matsubara
    /// operators in the dominant state.
    pub fn ratio(&self, x: &Matrix<Q>, y: &Matrix<Q>) -> Result<Value> {
        match &self.repr {
            Repr::Exact { proj } => {
                let num = proj.mul(x)?.trace();
                let den = proj.mul(y)?.trace();
                if den.is_zero() {
                    return Err(Error::ZeroEigenvalue("denominator vanishes on the dominant state".into()));
                }
                Ok(Value::exact(num / den, self.digits))
            }
            Repr::Algebraic { powers, s, .. } => {
                let n = Self::trace_poly(powers, s, x)?;
                let d = Self::trace_poly(powers, s, y)?;
                self.poly_value(&n, &d)
            }
        }
    }

    /// Normalized expectation value `⟨Ψ|X|Ψ⟩/⟨Ψ|Ψ⟩` of a Matsubara operator.
    pub fn expectation(&self, x: &Matrix<Q>) -> Result<Value> {
        self.ratio(x, &Matrix::identity(x.rows()))
    }

    /// Eigenvalue `T(λ)` of the spin-1/2 transfer matrix on the dominant state.
    pub fn transfer_eigenvalue(&self, lambda: &Q) -> Result<Value> {
        self.expectation(&transfer(lambda, &self.md)?)
    }

    /// Eigenvalue `𝐓(λ)` of the fused spin-1 transfer matrix on the dominant state.
    pub fn fused_eigenvalue(&self, lambda: &Q) -> Result<Value> {
        self.expectation(&fused_transfer(lambda, &self.md)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};
    use crate::lattice::Spin;

    #[test]
    fn single_half_site_is_scalar() {
        let md = MatsubaraData::new(vec![Spin::Half], vec![qi(0)]).unwrap();
        let st = dominant_state(&md, 20).unwrap();
        assert!(st.is_rational());
        assert_eq!(st.eigenvalue0().exact, Some(qi(1)));
    }

    #[test]
    fn expectation_of_identity_is_one() {
        let md = MatsubaraData::new(vec![Spin::Half, Spin::Half], vec![qi(0), q(1, 3)]).unwrap();
        let st = dominant_state(&md, 30).unwrap();
        let v = st.expectation(&Matrix::identity(4)).unwrap();
        assert_eq!(v.exact, Some(qi(1)));
    }
}
