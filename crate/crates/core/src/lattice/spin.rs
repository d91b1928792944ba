//! Spin representations of sl₂ used by the lattice layer.

use crate::arith::{q, qi, Q};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Supported site spins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    /// Spin 1/2 (basis ↑, ↓).
    Half,
    /// Spin 1 (basis e₁, e₂, e₃ of the symmetric square).
    One,
}

impl Spin {
    /// Representation dimension `2s+1`.
    pub fn dim(self) -> usize {
        match self {
            Spin::Half => 2,
            Spin::One => 3,
        }
    }

    /// Parses `"1/2"` or `"1"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "1/2" | "0.5" => Ok(Spin::Half),
            "1" => Ok(Spin::One),
            other => Err(Error::ConfigError(format!("unsupported spin '{other}' (expected 1/2 or 1)"))),
        }
    }

    /// Canonical label.
    pub fn label(self) -> &'static str {
        match self {
            Spin::Half => "1/2",
            Spin::One => "1",
        }
    }
}

/// `(S^z, S^+, S^-)` in the crate's basis for the given spin.
pub fn spin_ops(s: Spin) -> (Matrix<Q>, Matrix<Q>, Matrix<Q>) {
    match s {
        Spin::Half => {
            let z = Matrix::from_rows(vec![vec![q(1, 2), Q::zero()], vec![Q::zero(), q(-1, 2)]]).unwrap();
            let p = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]).unwrap();
            let m = Matrix::from_rows(vec![vec![qi(0), qi(0)], vec![qi(1), qi(0)]]).unwrap();
            (z, p, m)
        }
        Spin::One => {
            let z = Matrix::from_rows(vec![
                vec![qi(1), qi(0), qi(0)],
                vec![qi(0), qi(0), qi(0)],
                vec![qi(0), qi(0), qi(-1)],
            ])
            .unwrap();
            let p = Matrix::from_rows(vec![
                vec![qi(0), qi(2), qi(0)],
                vec![qi(0), qi(0), qi(1)],
                vec![qi(0), qi(0), qi(0)],
            ])
            .unwrap();
            let m = Matrix::from_rows(vec![
                vec![qi(0), qi(0), qi(0)],
                vec![qi(1), qi(0), qi(0)],
                vec![qi(0), qi(2), qi(0)],
            ])
            .unwrap();
            (z, p, m)
        }
    }
}

/// `Σ_a S^a ⊗ S^a = S^z⊗S^z + ½(S^+⊗S^- + S^-⊗S^+)` for two spins.
pub(crate) fn spin_dot(a: Spin, b: Spin) -> Matrix<Q> {
    let (za, pa, ma) = spin_ops(a);
    let (zb, pb, mb) = spin_ops(b);
    let half = q(1, 2);
    za.kron(&zb)
        .add(&pa.kron(&mb).scale_by(&half))
        .unwrap()
        .add(&ma.kron(&pb).scale_by(&half))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_relations() {
        for s in [Spin::Half, Spin::One] {
            let (z, p, m) = spin_ops(s);
            assert_eq!(p.commutator(&m).unwrap(), z.scale_by(&qi(2)));
            assert_eq!(z.commutator(&p).unwrap(), p);
        }
    }

    #[test]
    fn casimir_values() {
        // spin-1 ⊗ spin-1: S·S acts as 1 on the quintet highest weight e₁⊗e₁
        let d = spin_dot(Spin::One, Spin::One);
        assert_eq!(d.get(0, 0), &qi(1));
    }
}
