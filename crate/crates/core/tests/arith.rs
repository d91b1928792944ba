//! Exact arithmetic: algebraic laws, series against independent oracles, and
//! decimal reporting of π² polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use s1fc::arith::{p_series, q, qi, BigFloat, LaurentSeries, PiPoly, Ring, Q};
use s1fc::correlator::reference_values;
use s1fc::Error;

fn rational() -> impl Strategy<Value = Q> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| q(n, d))
}

fn pipoly() -> impl Strategy<Value = PiPoly> {
    prop::collection::vec(rational(), 0..4).prop_map(|cs| {
        cs.into_iter().enumerate().fold(PiPoly::zero(), |acc, (k, c)| acc.add(&PiPoly::monomial(k as u32, c)))
    })
}

fn series() -> impl Strategy<Value = LaurentSeries<Q>> {
    (-3i64..3, rational().prop_filter("invertible lead", |c| !c.is_zero()), prop::collection::vec(rational(), 0..6))
        .prop_map(|(start, lead, rest)| {
            let mut cs = vec![lead];
            cs.extend(rest);
            let order = start + cs.len() as i64;
            LaurentSeries::new("t", start, cs, Some(order))
        })
}

proptest! {
    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * a.try_inv().unwrap(), Q::one());
        }
    }

    #[test]
    fn pi_polynomials_form_a_ring(a in pipoly(), b in pipoly(), c in pipoly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), PiPoly::zero());
    }

    #[test]
    fn series_times_inverse_is_one(a in series()) {
        let inv = a.invert(8).unwrap();
        let prod = a.mul(&inv);
        let order = prod.order().expect("truncated");
        prop_assert!(order >= 1);
        for k in 0..order {
            let expect = if k == 0 { Q::one() } else { Q::zero() };
            prop_assert_eq!(prod.coeff(k).unwrap(), expect);
        }
    }

    #[test]
    fn evaluation_is_stable_in_precision(a in pipoly()) {
        let d = 15;
        let lo = a.eval(d);
        let hi = a.eval(d + 20);
        prop_assert!(lo.agrees_with(&hi, d - 2), "{} vs {}", lo, hi);
    }
}

/// `π/(2 sin πt)` by long division of `πt` by the sine series, coefficient by
/// coefficient: `(1/2t)·(1 / Σ (−1)^k (πt)^{2k}/(2k+1)!)`.
fn p_by_long_division(terms: usize) -> Vec<PiPoly> {
    let fact = |n: u64| (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k));
    let sine: Vec<PiPoly> = (0..terms)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            PiPoly::monomial(k as u32, Q::new(BigInt::from(sign), fact(2 * k as u64 + 1)))
        })
        .collect();
    let mut inv: Vec<PiPoly> = Vec::new();
    for k in 0..terms {
        let mut s = if k == 0 { PiPoly::one() } else { PiPoly::zero() };
        for j in 1..=k {
            s = s.sub(&sine[j].mul(&inv[k - j]));
        }
        inv.push(s);
    }
    inv.iter().map(|c| c.scale(&q(1, 2))).collect()
}

#[test]
fn p_series_matches_long_division() {
    let p = p_series("t", &qi(1), 11);
    let oracle = p_by_long_division(6);
    for (k, c) in oracle.iter().enumerate() {
        assert_eq!(p.coeff(2 * k as i64 - 1).unwrap(), *c, "t^{}", 2 * k as i64 - 1);
        assert!(p.coeff(2 * k as i64).unwrap().is_zero());
    }
    assert_eq!(p.coeff(1).unwrap(), PiPoly::monomial(1, q(1, 12)));
    assert_eq!(p.coeff(3).unwrap(), PiPoly::monomial(2, q(7, 720)));
}

#[test]
fn p_series_scales_with_direction() {
    // p(dt) has coefficients c_k d^k of p(t)
    let d = q(-3, 2);
    let a = p_series("t", &d, 7);
    let b = p_series("t", &qi(1), 7);
    for k in -1..7 {
        let dk = if k < 0 { d.recip() } else { num_traits::pow(d.clone(), k as usize) };
        assert_eq!(a.coeff(k).unwrap(), b.coeff(k).unwrap().scale(&dk));
    }
}

#[test]
fn inverse_of_t_plus_t_squared_is_geometric() {
    let s = LaurentSeries::new("t", 1, vec![qi(1), qi(1)], None);
    let inv = s.invert(10).unwrap();
    for k in -1..8 {
        // 1/(t(1+t)) = Σ (−1)^(k+1) t^k
        let expect = if (k + 1) % 2 == 0 { qi(1) } else { qi(-1) };
        assert_eq!(inv.coeff(k).unwrap(), expect);
    }
}

#[test]
fn inverse_of_zero_series_fails() {
    let z: LaurentSeries<Q> = LaurentSeries::zero_to("t", 4);
    assert_eq!(z.invert(4), Err(Error::InvertAtZeroLeading));
}

#[test]
fn unit_times_inverse_monomial() {
    let a = LaurentSeries::monomial("t", -1, qi(1));
    let b = LaurentSeries::monomial("t", 1, qi(1));
    assert_eq!(a.mul(&b), LaurentSeries::constant("t", qi(1)));
}

#[test]
fn n2_value_to_ten_digits() {
    let v = PiPoly::monomial(1, q(8, 9)).add(&PiPoly::constant(q(-34, 3)));
    assert_eq!(v.eval(10).to_string(), "-2.560351643");
    assert_eq!(PiPoly::zero().eval(10).to_q(), Q::zero());
}

#[test]
fn stored_polynomials_evaluate_to_reported_decimals() {
    let expect = [(2, "-2.560351643"), (3, "1.283223553"), (4, "-1.083843468"), (5, "0.8330261734")];
    for (n, s) in expect {
        let r = reference_values(n, 10).unwrap();
        assert_eq!(r.decimal.to_string(), s, "n={n}");
    }
}

#[test]
fn decimals_round_half_even() {
    assert_eq!(BigFloat::from_q(&q(25, 1000), 1).to_string(), "0.02");
    assert_eq!(BigFloat::from_q(&q(35, 1000), 1).to_string(), "0.04");
}
