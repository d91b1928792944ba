//! Expansion of ω-free expressions along the ray `λ_j = t·a_j`.

use super::expr::{omega_reduce, Atom, OmegaExpr};
use crate::algebra::Scaled;
use crate::arith::{p_series, LaurentSeries, PiPoly, RatFunc1, Q};
use crate::error::{Error, Result};
use num_traits::Zero;

const VAR: &str = "t";

fn ratfunc_valuation(r: &RatFunc1) -> i64 {
    r.num().valuation().unwrap_or(0) as i64 - r.den().valuation().unwrap_or(0) as i64
}

/// Laurent expansion in `t` of an expression on the ray with the given directions,
/// correct to `O(t^order)`.
///
/// The expression must be free of ω atoms (`ResidualOmega` otherwise); shifted `p`
/// atoms are reduced first.
pub fn expand_homogeneous(e: &OmegaExpr<RatFunc1>, dirs: &[Q], order: i64) -> Result<LaurentSeries<PiPoly>> {
    let ctx = Scaled::new(dirs.to_vec());
    let e = omega_reduce(e, &ctx)?;
    let mut total = LaurentSeries::zero_to(VAR, order);
    for (mono, c) in e.terms() {
        let mut ps: Vec<Q> = Vec::new();
        for (atom, k) in mono {
            match atom {
                Atom::P { i, j, .. } => {
                    let d = &dirs[*i] - &dirs[*j];
                    if d.is_zero() {
                        return Err(Error::ConfigError("coincident directions".into()));
                    }
                    ps.extend(std::iter::repeat_n(d, *k as usize));
                }
                other => {
                    return Err(Error::ResidualOmega(format!("{other:?} survives reduction")));
                }
            }
        }
        // Every p factor has valuation −1; the whole product has valuation v_c − #p.
        let vc = ratfunc_valuation(c);
        let v_total = vc - ps.len() as i64;
        let mut term = LaurentSeries::from_ratfunc(VAR, c, order - (v_total - vc)).map(|x| PiPoly::constant(x.clone()));
        for d in &ps {
            term = term.mul(&p_series(VAR, d, order - (v_total + 1)));
        }
        total = total.add(&term.truncate(order));
    }
    Ok(total)
}

/// The `t → 0` limit of an expression built on the ray for each direction set.
///
/// Fails with `SingularLimit` when a negative power of `t` survives and with
/// `DirectionDependence` when two direction sets give different constant terms.
pub fn homogeneous_limit<F>(build: F, direction_sets: &[Vec<Q>]) -> Result<PiPoly>
where
    F: Fn(&Scaled) -> Result<OmegaExpr<RatFunc1>>,
{
    let mut found: Option<(PiPoly, &Vec<Q>)> = None;
    for dirs in direction_sets {
        let ctx = Scaled::new(dirs.clone());
        let series = expand_homogeneous(&build(&ctx)?, dirs, 1)?;
        if let Some((k, c)) = series.singular_part().first() {
            return Err(Error::SingularLimit(format!("t^{k} coefficient {c} along directions {}", show(dirs))));
        }
        let c0 = series.coeff(0)?;
        match &found {
            None => found = Some((c0, dirs)),
            Some((prev, pd)) if *prev != c0 => {
                return Err(Error::DirectionDependence(format!(
                    "{prev} along {} but {c0} along {}",
                    show(pd),
                    show(dirs)
                )));
            }
            _ => {}
        }
    }
    found.map(|(c, _)| c).ok_or_else(|| Error::ConfigError("no direction sets given".into()))
}

fn show(d: &[Q]) -> String {
    format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
