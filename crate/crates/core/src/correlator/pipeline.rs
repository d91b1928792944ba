//! Assembly of `⟨Σ_a S^a_1 S^a_n⟩` in the homogeneous zero-temperature limit.

use super::expectation::{Calibration, Expectations};
use super::table::{monomial_key, CoefficientTable};
use crate::algebra::Scaled;
use crate::arith::{q_to_string, BigFloat, PiPoly, RatFunc1, Ring, Q};
use crate::error::{Error, Result};
use crate::omega::{assert_omega_cancellation, expand_homogeneous, OmegaExpr};
use serde::Serialize;
use num_traits::Zero;
use std::collections::BTreeMap;

const REFERENCE: &str = include_str!("../../data/reference.json");

/// Default ray directions `(a₁, a₂, a₃)`.
pub fn default_directions() -> Vec<Q> {
    vec![Q::from_integer(0.into()), Q::from_integer(1.into()), Q::from_integer(3.into())]
}

/// Extra direction tuples used to confirm that the limit does not depend on the ray.
fn auxiliary_directions() -> Vec<Vec<Q>> {
    let z = |v: [i64; 3]| v.iter().map(|&x| Q::from_integer(x.into())).collect::<Vec<Q>>();
    vec![z([0, 2, 5]), z([0, -1, 4]), z([1, 3, 7])]
}

/// A correlator value: exact polynomial in π², its decimal value and a log of the
/// inputs that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrelatorResult {
    /// Distance `n` (sites `1` and `n`).
    pub n: usize,
    /// Exact value as text, e.g. `8/9·π² − 34/3`.
    pub pipoly: String,
    /// Exact value as `(power of π, coefficient)` terms.
    pub terms: PiPoly,
    /// Correctly rounded decimal value.
    pub decimal: BigFloat,
    /// How the value was obtained.
    pub log: Vec<String>,
}

impl CorrelatorResult {
    fn new(n: usize, value: PiPoly, digits: u32, log: Vec<String>) -> Self {
        CorrelatorResult { n, pipoly: value.to_string(), decimal: value.eval(digits), terms: value, log }
    }

    /// The exact value.
    pub fn value(&self) -> &PiPoly {
        &self.terms
    }
}

/// Options of the correlator assembly.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelatorOptions {
    /// Primary ray directions (one per site; only the first `n` are used).
    pub directions: Vec<Q>,
    /// Additional rays checked for direction independence.
    pub extra_directions: Vec<Vec<Q>>,
    /// Normalization conventions.
    pub calibration: Calibration,
    /// Significant digits of the decimal value.
    pub digits: u32,
}

impl Default for CorrelatorOptions {
    fn default() -> Self {
        CorrelatorOptions {
            directions: default_directions(),
            extra_directions: auxiliary_directions(),
            calibration: Calibration::fixed(),
            digits: 50,
        }
    }
}

fn show_dirs(d: &[Q]) -> String {
    format!("({})", d.iter().map(q_to_string).collect::<Vec<_>>().join(", "))
}

/// The ω-free assembly `Σ coefficient × ⟨monomial⟩` on one ray, checking ω
/// cancellation monomial by monomial.
pub fn assemble_on_ray(table: &CoefficientTable, dirs: &[Q], calibration: &Calibration) -> Result<OmegaExpr<RatFunc1>> {
    let ctx = Scaled::new(dirs.to_vec());
    let mut ex = Expectations::new(&ctx, calibration.clone());
    let mut total = OmegaExpr::zero();
    for (w, c) in table.on_ray(dirs)? {
        let e = ex.monomial(&w)?;
        let e = assert_omega_cancellation(&e, &ctx).map_err(|err| match err {
            Error::ResidualOmega(m) => Error::ResidualOmega(format!("⟨{}⟩: {m}", monomial_key(&w))),
            other => other,
        })?;
        total = Ring::add(&total, &e.scale_by(&c));
    }
    assert_omega_cancellation(&total, &ctx)
}

/// Homogeneous-limit value of the table on one ray; the singular part must vanish.
pub fn limit_on_ray(table: &CoefficientTable, dirs: &[Q], calibration: &Calibration) -> Result<PiPoly> {
    let e = assemble_on_ray(table, dirs, calibration)?;
    let s = expand_homogeneous(&e, dirs, 1)?;
    if let Some((k, c)) = s.singular_part().first() {
        return Err(Error::SingularLimit(format!("t^{k} coefficient {c} along {}", show_dirs(dirs))));
    }
    s.coeff(0)
}

/// `⟨Σ_a S^a_1 S^a_n⟩` for `n ∈ {2, 3}` computed from the coefficient tables.
pub fn correlator(n: usize, opts: &CorrelatorOptions) -> Result<CorrelatorResult> {
    let table = CoefficientTable::builtin(n)?;
    if opts.directions.len() < n {
        return Err(Error::ConfigError(format!("{n} directions required, {} given", opts.directions.len())));
    }
    let mut rays: Vec<Vec<Q>> = vec![opts.directions[..n].to_vec()];
    for d in &opts.extra_directions {
        if d.len() >= n {
            let r = d[..n].to_vec();
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    for r in &rays {
        for i in 0..r.len() {
            if r[i + 1..].contains(&r[i]) {
                return Err(Error::ConfigError(format!("directions {} are not pairwise distinct", show_dirs(r))));
            }
        }
    }
    let mut value: Option<PiPoly> = None;
    for r in &rays {
        let v = limit_on_ray(&table, r, &opts.calibration)?;
        match &value {
            None => value = Some(v),
            Some(prev) if *prev != v => {
                return Err(Error::DirectionDependence(format!(
                    "{prev} along {} but {v} along {}",
                    show_dirs(&rays[0]),
                    show_dirs(r)
                )))
            }
            _ => {}
        }
    }
    let value = value.expect("at least one ray");
    let cal = &opts.calibration;
    let log = vec![
        format!("table: n={n}, {} monomials", table.terms().len()),
        format!(
            "calibration: nu={}, sign={}, ope_corrections={}",
            q_to_string(&cal.nu),
            cal.sign.map_or("unset".to_string(), |s| s.to_string()),
            cal.ope_corrections
        ),
        format!("rays: {}", rays.iter().map(|r| show_dirs(r)).collect::<Vec<_>>().join(" ")),
    ];
    Ok(CorrelatorResult::new(n, value, opts.digits, log))
}

/// The stored exact values for `n ∈ {2, …, 5}`.
pub fn reference_values(n: usize, digits: u32) -> Result<CorrelatorResult> {
    let all: BTreeMap<String, serde_json::Value> =
        serde_json::from_str(REFERENCE).map_err(|e| Error::Parse(format!("reference data: {e}")))?;
    let v = all
        .get(&n.to_string())
        .ok_or_else(|| Error::ConfigError(format!("no reference value for n = {n} (available: 2..5)")))?;
    let p = PiPoly::from_json(v)?;
    Ok(CorrelatorResult::new(n, p, digits, vec!["stored reference polynomial".into()]))
}

/// Tries the candidate conventions on the two-site table and returns those whose
/// homogeneous limit is finite and equals the stored two-site value.
pub fn calibrate(candidates: &[Calibration]) -> Result<Vec<Calibration>> {
    let table = CoefficientTable::builtin(2)?;
    let target = reference_values(2, 10)?.terms;
    let dirs = &default_directions()[..2];
    let aux = &auxiliary_directions()[0][..2];
    let mut ok = Vec::new();
    for c in candidates {
        let a = limit_on_ray(&table, dirs, c);
        let b = limit_on_ray(&table, aux, c);
        if let (Ok(a), Ok(b)) = (a, b) {
            if a == target && b == target {
                ok.push(c.clone());
            }
        }
    }
    Ok(ok)
}
