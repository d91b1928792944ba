//! The operator-product rules as data.
//!
//! Each rule reads `x(λ) y(μ) = :x(λ) y(μ): + double/(λ−μ)² + single·z(μ)/(λ−μ)`.
//! Pairs not listed have no singular part; a listed pair read in the opposite order
//! has the same double pole and the opposite single pole (with `z` at the second
//! argument).

use super::word::Kind;

/// One normal-ordering rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpeRule {
    /// Left generator `x`.
    pub left: Kind,
    /// Right generator `y`.
    pub right: Kind,
    /// Coefficient of `1/(λ−μ)²`.
    pub double: i64,
    /// Coefficient of `z(μ)/(λ−μ)`.
    pub single: i64,
    /// The generator `z` of the simple pole.
    pub emits: Option<Kind>,
}

const fn rule(left: Kind, right: Kind, double: i64, single: i64, emits: Option<Kind>) -> OpeRule {
    OpeRule { left, right, double, single, emits }
}

/// The eight rules. `:c*(λ) j⁺(μ):` is read with `c*(λ) j⁺(μ)` as its plain product,
/// the doublet partner of the `b*–j⁻` rule.
pub const RULES: [OpeRule; 8] = [
    rule(Kind::J0, Kind::J0, 2, 0, None),
    rule(Kind::Jp, Kind::Jm, -1, -1, Some(Kind::J0)),
    rule(Kind::Jp, Kind::J0, 0, -2, Some(Kind::Jp)),
    rule(Kind::J0, Kind::Jm, 0, -2, Some(Kind::Jm)),
    rule(Kind::B, Kind::Jm, 0, 1, Some(Kind::C)),
    rule(Kind::C, Kind::Jp, 0, -1, Some(Kind::B)),
    rule(Kind::B, Kind::J0, 0, -1, Some(Kind::B)),
    rule(Kind::C, Kind::J0, 0, 1, Some(Kind::C)),
];

/// Singular data `(double, single, z)` of the plain product `x(λ) y(μ)`.
pub fn ope(x: Kind, y: Kind) -> (i64, i64, Option<Kind>) {
    for r in &RULES {
        if r.left == x && r.right == y {
            return (r.double, r.single, r.emits);
        }
        if r.left == y && r.right == x {
            return (r.double, -r.single, r.emits);
        }
    }
    (0, 0, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_consistent() {
        // each unordered pair listed once; emitted kinds carry the right charge
        let charge = |k: Kind| match k {
            Kind::B => 1,
            Kind::C => -1,
            Kind::Jp => 2,
            Kind::J0 => 0,
            Kind::Jm => -2,
        };
        for (i, r) in RULES.iter().enumerate() {
            for s in &RULES[i + 1..] {
                assert!(!(r.left == s.left && r.right == s.right || r.left == s.right && r.right == s.left));
            }
            if let Some(z) = r.emits {
                assert_eq!(charge(r.left) + charge(r.right), charge(z));
            }
        }
    }

    #[test]
    fn reversed_pairs() {
        assert_eq!(ope(Kind::Jm, Kind::Jp), (-1, 1, Some(Kind::J0)));
        assert_eq!(ope(Kind::B, Kind::C), (0, 0, None));
    }
}
