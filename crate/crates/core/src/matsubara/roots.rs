//! Characteristic polynomials and certified real-root isolation.

use crate::arith::{Poly, Q};
use crate::linalg::Matrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Characteristic polynomial `det(x·I − A)` by the Faddeev–LeVerrier recursion.
pub fn charpoly(a: &Matrix<Q>) -> Poly {
    let n = a.rows();
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let id = Matrix::<Q>::identity(n);
    let mut m = Matrix::<Q>::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).expect("square").add(&id.scale_by(&c[n - k + 1])).expect("square");
        let am = a.mul(&m).expect("square");
        c[n - k] = -am.trace() / Q::from_integer(BigInt::from(k));
    }
    Poly::new(c)
}

/// Sturm sequence of a squarefree polynomial.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].degree().is_none() {
            seq.pop();
            break;
        }
        if seq[n - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1]);
        if r.degree().is_none() {
            break;
        }
        seq.push(Poly::new(r.coeffs().iter().map(|c| -c.clone()).collect()));
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Q) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots(seq: &[Poly], lo: &Q, hi: &Q) -> usize {
    sign_changes(seq, lo).saturating_sub(sign_changes(seq, hi))
}

/// Cauchy bound: all roots satisfy `|x| < bound`.
pub fn root_bound(p: &Poly) -> Q {
    let lead = p.lead().abs();
    let d = p.degree().unwrap_or(0);
    let m = (0..d).map(|k| p.coeff(k).abs() / &lead).fold(Q::zero(), |a, b| if b > a { b } else { a });
    m + Q::one()
}

/// A real root of a squarefree polynomial, exact or isolated in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub enum RealRoot {
    /// Rational root.
    Exact(Q),
    /// The only root of the polynomial in `(lo, hi]`, with `lo` and `hi` not roots.
    Isolated {
        /// Lower end (excluded).
        lo: Q,
        /// Upper end (included).
        hi: Q,
    },
}

impl RealRoot {
    /// Lower and upper enclosure.
    pub fn bounds(&self) -> (Q, Q) {
        match self {
            RealRoot::Exact(r) => (r.clone(), r.clone()),
            RealRoot::Isolated { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    /// Halves the isolating interval once (becoming exact if the midpoint is a root).
    pub fn bisect(&mut self, p: &Poly, seq: &[Poly]) {
        if let RealRoot::Isolated { lo, hi } = self {
            let mid = (&*lo + &*hi) / Q::from_integer(BigInt::from(2));
            if p.eval(&mid).is_zero() {
                *self = RealRoot::Exact(mid);
            } else if count_roots(seq, lo, &mid) == 1 {
                *hi = mid;
            } else {
                *lo = mid;
            }
        }
    }

    /// Refines until the enclosure is narrower than `width`.
    pub fn refine(&mut self, p: &Poly, seq: &[Poly], width: &Q) {
        loop {
            let (lo, hi) = self.bounds();
            if &(hi - lo) < width {
                return;
            }
            self.bisect(p, seq);
        }
    }

    /// True if some root of `g` (a divisor-candidate polynomial) coincides with this root.
    pub fn is_root_of(&self, g: &Poly) -> bool {
        match self {
            RealRoot::Exact(r) => g.eval(r).is_zero(),
            RealRoot::Isolated { lo, hi } => {
                if g.degree().is_none() {
                    return true;
                }
                if g.degree() == Some(0) {
                    return false;
                }
                let seq = sturm_sequence(&g.squarefree());
                count_roots(&seq, lo, hi) > 0
            }
        }
    }
}

/// Isolates every real root of a squarefree polynomial.
pub fn isolate_real_roots(p: &Poly) -> Vec<RealRoot> {
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if p.eval(&hi).is_zero() {
            out.push(RealRoot::Exact(hi.clone()));
            if n > 1 {
                // the remaining roots lie strictly below hi
                let eps = (&hi - &lo) / Q::from_integer(BigInt::from(1024));
                let mut h2 = &hi - &eps;
                while p.eval(&h2).is_zero() || count_roots(&seq, &h2, &hi) != 1 {
                    h2 = (&h2 + &hi) / Q::from_integer(BigInt::from(2));
                }
                stack.push((lo, h2));
            }
            continue;
        }
        if n == 1 {
            out.push(RealRoot::Isolated { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / Q::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.bounds().0.cmp(&b.bounds().0));
    out
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Q, hi: &Q) -> Q {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Q::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if fl == *lo {
        return lo.clone();
    }
    if &(fl.clone() + Q::one()) <= hi {
        return fl + Q::one();
    }
    // lo and hi share the integer part; recurse on reciprocals of fractional parts
    let a = &fl;
    let r = simplest_between(&(hi - a).recip(), &(lo - a).recip());
    a + r.recip()
}

/// Closed rational interval.
#[derive(Clone, Debug)]
pub struct Interval {
    /// Lower end.
    pub lo: Q,
    /// Upper end.
    pub hi: Q,
}

impl Interval {
    /// Degenerate interval.
    pub fn point(x: Q) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Interval { lo, hi }
    }

    /// True if 0 lies in the interval.
    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Quotient, defined when the divisor excludes 0.
    pub fn div(&self, o: &Interval) -> Option<Interval> {
        if o.contains_zero() {
            return None;
        }
        self.mul(&Interval { lo: o.hi.recip(), hi: o.lo.recip() }).into()
    }

    /// Enclosure of `p(x)` for `x` in the interval (Horner scheme).
    pub fn eval_poly(p: &Poly, x: &Interval) -> Interval {
        let mut acc = Interval::point(Q::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add(&Interval::point(c.clone()));
        }
        acc
    }
}
