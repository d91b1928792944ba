//! Coefficient domains for expressions in the spectral variables.

use crate::arith::{Q, RatFunc1, RationalFunction, Ring};
use num_traits::{One, Zero};

/// A coefficient ring together with the differences `λ_i − λ_j` of its spectral
/// variables.
pub trait Spectral {
    /// Coefficient ring.
    type C: Ring;

    /// `λ_i − λ_j`.
    fn diff(&self, i: usize, j: usize) -> Self::C;

    /// `1/(λ_i − λ_j)`; the variables must be distinct.
    fn inv_diff(&self, i: usize, j: usize) -> Self::C {
        self.diff(i, j).try_inv().expect("distinct spectral variables")
    }

    /// Rational constant.
    fn constant(&self, q: &Q) -> Self::C {
        Self::C::one().scale(q)
    }

    /// Name of variable `i` (for display).
    fn name(&self, i: usize) -> String;
}

/// Independent symbols `λ_i` named by the caller; coefficients are multivariate
/// rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbolic {
    names: Vec<String>,
}

impl Symbolic {
    /// Variables with the given names.
    pub fn new(names: Vec<String>) -> Self {
        Symbolic { names }
    }

    /// Variables `l1, …, ln`.
    pub fn numbered(n: usize) -> Self {
        Symbolic { names: (1..=n).map(|k| format!("l{k}")).collect() }
    }

    /// Variable names.
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl Spectral for Symbolic {
    type C = RationalFunction;

    fn diff(&self, i: usize, j: usize) -> RationalFunction {
        Ring::sub(&RationalFunction::var(&self.names[i]), &RationalFunction::var(&self.names[j]))
    }

    fn inv_diff(&self, i: usize, j: usize) -> RationalFunction {
        RationalFunction::inv_diff_pow(&self.names[i], &self.names[j], 1)
    }

    fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }
}

/// The scaling ray `λ_i = t·a_i`; coefficients are rational functions of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaled {
    dirs: Vec<Q>,
}

impl Scaled {
    /// Ray with directions `a_i` (pairwise distinct).
    pub fn new(dirs: Vec<Q>) -> Self {
        Scaled { dirs }
    }

    /// The directions.
    pub fn dirs(&self) -> &[Q] {
        &self.dirs
    }
}

impl Spectral for Scaled {
    type C = RatFunc1;

    fn diff(&self, i: usize, j: usize) -> RatFunc1 {
        RatFunc1::x().scale(&(&self.dirs[i] - &self.dirs[j]))
    }

    fn inv_diff(&self, i: usize, j: usize) -> RatFunc1 {
        let d = &self.dirs[i] - &self.dirs[j];
        assert!(!d.is_zero(), "coincident directions");
        RatFunc1::x().try_inv().expect("t is invertible").scale(&(Q::one() / d))
    }

    fn name(&self, i: usize) -> String {
        format!("λ{}", i + 1)
    }
}
