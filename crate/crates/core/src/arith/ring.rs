//! Minimal algebraic traits shared by the coefficient types.

use super::Q;
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
///
/// The identities and the zero test come from [`Zero`] and [`One`].
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Zero + One {
    /// `self + other`.
    fn add(&self, other: &Self) -> Self;
    /// `self * other`.
    fn mul(&self, other: &Self) -> Self;
    /// `-self`.
    fn neg(&self) -> Self;
    /// `self - other`.
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Q) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Inverse of a nonzero element.
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
}

impl Ring for Q {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Q {}

/// Implements the by-value `+` and `*` operators through [`Ring`], as required by
/// [`Zero`] and [`One`].
macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $crate::arith::Ring::add(&self, &o)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $crate::arith::Ring::mul(&self, &o)
            }
        }
    };
}
pub(crate) use impl_ring_ops;
