use std::fmt;

use super::Ring;
use crate::error::{Error, Result};

/// Power series `Σ_{n<N} cₙ xⁿ` known exactly below the order `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        TruncatedSeries::monomial(c, 0, order)
    }

    /// `c·x^exp`, which is zero when `exp ≥ order`.
    pub fn monomial(c: R, exp: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if exp < order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Takes the first `order` coefficients, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        TruncatedSeries { coeffs }
    }

    /// Sparse input `(exponent, coefficient)`; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, R)>, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        for (e, c) in terms {
            s.add_at(e, &c);
        }
        s
    }

    pub fn add_at(&mut self, exp: usize, c: &R) {
        if let Some(slot) = self.coeffs.get_mut(exp) {
            *slot = slot.plus(c);
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series of different orders");
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scaled(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn times(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.order();
        let mut out = TruncatedSeries::<R>::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0].unit_inverse().ok_or_else(|| {
            Error::invalid(format!("constant term {} is not a unit", self.coeffs[0]))
        })?;
        let mut out = TruncatedSeries::<R>::zero(n);
        out.coeffs[0] = inv0.clone();
        for m in 1..n {
            let mut acc = R::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&out.coeffs[m - j]));
                }
            }
            out.coeffs[m] = acc.times(&inv0).negated();
        }
        Ok(out)
    }

    pub fn divided_by(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TruncatedSeries<S>> {
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// `x ↦ −x`.
    pub fn negate_x(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { c.negated() })
                .collect(),
        }
    }

    /// The same series known to a lower order.
    pub fn truncated(&self, order: usize) -> Self {
        TruncatedSeries::from_coeffs(self.coeffs[..order.min(self.order())].to_vec(), order)
    }

    /// Smallest exponent where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.check_order(other);
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let s = c.to_string();
            let atomic = !s[1..].contains([' ', '-', '+']);
            match (i, atomic) {
                (0, _) => write!(f, "{s}")?,
                (_, true) if s == "1" => {}
                (_, true) => write!(f, "{s}")?,
                (_, false) => write!(f, "({s})")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(x^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::HalfLaurent;
    use proptest::prelude::*;

    #[test]
    fn geometric_inverse() {
        let one_minus_x = TruncatedSeries::from_coeffs(vec![1i64, -1], 6);
        let inv = one_minus_x.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(one_minus_x.times(&inv), TruncatedSeries::one(6));
        assert!(TruncatedSeries::from_coeffs(vec![2i64, 1], 3).inverse().is_err());
    }

    #[test]
    fn display_and_mismatch() {
        let s = TruncatedSeries::from_coeffs(vec![1i64, 2, 0, -3], 5);
        assert_eq!(s.to_string(), "1 + 2x + -3x^3 + O(x^5)");
        let t = TruncatedSeries::from_terms(vec![(1, HalfLaurent::quantum(3))], 3);
        assert_eq!(t.to_string(), "(u + 1 + u^-1)x + O(x^3)");
        let s2 = TruncatedSeries::from_coeffs(vec![1i64, 2, 1], 5);
        assert_eq!(s.first_mismatch(&s2), Some(2));
        assert_eq!(s.first_mismatch(&s), None);
        assert_eq!(s.negate_x().coeffs(), &[1, -2, 0, 3, 0]);
    }

    fn series() -> impl Strategy<Value = TruncatedSeries<i64>> {
        proptest::collection::vec(-5i64..5, 0..7).prop_map(|v| TruncatedSeries::from_coeffs(v, 7))
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(), b in series(), c in series()) {
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.times(&TruncatedSeries::one(7)), a.clone());
        }

        #[test]
        fn inverse_when_constant_is_unit(mut v in proptest::collection::vec(-5i64..5, 1..7), neg in any::<bool>()) {
            v[0] = if neg { -1 } else { 1 };
            let a = TruncatedSeries::from_coeffs(v, 7);
            prop_assert_eq!(a.times(&a.inverse().unwrap()), TruncatedSeries::one(7));
        }
    }
}
