//! Coefficient tables of the two- and three-site decompositions.
//!
//! Each table expresses `Σ_a S^a_1 S^a_n` (in the weak sense) as a combination of
//! generator monomials `g^{ε₁}(λ_{i₁})⋯g^{ε_k}(λ_{i_k})` with coefficients that are
//! rational functions of `m_j = λ_{j+1} − λ_1`.

use crate::algebra::{Kind, Letter, Word};
use crate::arith::{Poly, RatFunc1, RationalFunction, Q};
use crate::error::{Error, Result};
use serde::Deserialize;
use std::collections::BTreeMap;

const APPENDIX_N2: &str = include_str!("../../data/appendix_n2.json");
const APPENDIX_N3: &str = include_str!("../../data/appendix_n3.json");

#[derive(Deserialize)]
struct RawTable {
    n: usize,
    variables: Vec<String>,
    terms: BTreeMap<String, String>,
}

/// A decomposition table: monomials with rational-function coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    n: usize,
    variables: Vec<String>,
    terms: Vec<(Word, RationalFunction)>,
}

/// Parses a monomial key such as `"g13(1) g31(2)"` (`"1"` is the identity).
pub fn parse_monomial(key: &str) -> Result<Word> {
    let key = key.trim();
    if key == "1" || key.is_empty() {
        return Ok(Vec::new());
    }
    key.split_whitespace()
        .map(|tok| {
            let rest = tok.strip_prefix('g').ok_or_else(|| Error::Parse(format!("monomial factor {tok:?}")))?;
            let (eps, site) = rest
                .strip_suffix(')')
                .and_then(|r| r.split_once('('))
                .ok_or_else(|| Error::Parse(format!("monomial factor {tok:?}")))?;
            let site: usize = site.parse().map_err(|_| Error::Parse(format!("site in {tok:?}")))?;
            if site == 0 {
                return Err(Error::Parse("sites are numbered from 1".into()));
            }
            Ok(Letter::new(Kind::from_epsilon(eps)?, site - 1))
        })
        .collect()
}

/// Renders a monomial in the key syntax.
pub fn monomial_key(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|l| {
            let (a, b) = l.kind.epsilon();
            format!("g{a}{b}({})", l.site + 1)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl CoefficientTable {
    /// Parses the JSON form `{"n", "variables", "terms": {key: coefficient}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTable = serde_json::from_str(text).map_err(|e| Error::Parse(format!("table json: {e}")))?;
        if raw.variables.len() + 1 != raw.n {
            return Err(Error::Parse(format!("{} sites need {} difference variables", raw.n, raw.n - 1)));
        }
        let mut terms = Vec::new();
        for (k, v) in &raw.terms {
            let w = parse_monomial(k)?;
            if w.iter().any(|l| l.site >= raw.n) {
                return Err(Error::Parse(format!("monomial {k} exceeds {} sites", raw.n)));
            }
            let c = RationalFunction::parse(v)?;
            if let Some(bad) = c.variables().into_iter().find(|x| !raw.variables.contains(x)) {
                return Err(Error::Parse(format!("unknown variable {bad} in coefficient of {k}")));
            }
            terms.push((w, c));
        }
        terms.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| monomial_key(&a.0).cmp(&monomial_key(&b.0))));
        Ok(CoefficientTable { n: raw.n, variables: raw.variables, terms })
    }

    /// Built-in table for `n ∈ {2, 3}`.
    pub fn builtin(n: usize) -> Result<Self> {
        match n {
            2 => Self::from_json(APPENDIX_N2),
            3 => Self::from_json(APPENDIX_N3),
            _ => Err(Error::ConfigError(format!("no coefficient table for n = {n} (available: 2, 3)"))),
        }
    }

    /// Number of sites.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Difference-variable names `m_1, …`.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Monomials and coefficients.
    pub fn terms(&self) -> &[(Word, RationalFunction)] {
        &self.terms
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, w: &[Letter]) -> Option<&RationalFunction> {
        self.terms.iter().find(|(m, _)| m.as_slice() == w).map(|(_, c)| c)
    }

    /// Coefficients on the ray `λ_j = t·a_j`.
    pub fn on_ray(&self, dirs: &[Q]) -> Result<Vec<(Word, RatFunc1)>> {
        if dirs.len() != self.n {
            return Err(Error::ConfigError(format!("{} directions given for {} sites", dirs.len(), self.n)));
        }
        let map: BTreeMap<String, Poly> = self
            .variables
            .iter()
            .enumerate()
            .map(|(j, v)| (v.clone(), Poly::monomial(1, &dirs[j + 1] - &dirs[0])))
            .collect();
        self.terms.iter().map(|(w, c)| Ok((w.clone(), c.subs_univariate(&map)?))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn keys_round_trip() {
        let w = parse_monomial("g13(1) g31(2) g22(3)").unwrap();
        assert_eq!(w, vec![Letter::new(Kind::Jp, 0), Letter::new(Kind::Jm, 1), Letter::new(Kind::J0, 2)]);
        assert_eq!(monomial_key(&w), "g13(1) g31(2) g22(3)");
        assert!(parse_monomial("g14(1)").is_err());
    }

    #[test]
    fn builtin_tables_load() {
        let t2 = CoefficientTable::builtin(2).unwrap();
        assert_eq!(t2.terms().len(), 3);
        let t3 = CoefficientTable::builtin(3).unwrap();
        assert_eq!(t3.terms().len(), 11);
        let c = t2.coefficient(&[]).unwrap();
        let at0: BTreeMap<String, Q> = [("m1".to_string(), qi(0))].into();
        assert_eq!(c.eval(&at0).unwrap(), q(-34, 3));
    }
}
