//! Truncated power series in `x` over pluggable commutative coefficient
//! rings, theta series and Euler-type products.

mod laurent;
mod product;
mod rings;
mod theta;
mod truncated;

use std::fmt;

pub use laurent::HalfLaurent;
pub use product::{euler_product, PolyFactor, ProductFamily};
pub use rings::{Eisenstein, Poly};
pub use theta::{theta, theta_at_one, theta_neg_x_one, theta_two_sided, ThetaMode};
pub use truncated::TruncatedSeries;

/// A commutative ring with identity, as used for series coefficients.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Inverse of a unit, `None` for non-units.
    fn unit_inverse(&self) -> Option<Self>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn from_i64(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = if n < 0 { Self::one().negated() } else { Self::one() };
        // double-and-add keeps this logarithmic in |n|
        let mut base = one;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.plus(&base);
            }
            base = base.plus(&base);
            m >>= 1;
        }
        acc
    }
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("series coefficient overflow")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("series coefficient overflow")
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn unit_inverse(&self) -> Option<Self> {
        matches!(*self, 1 | -1).then_some(*self)
    }
    fn from_i64(n: i64) -> Self {
        n
    }
}
