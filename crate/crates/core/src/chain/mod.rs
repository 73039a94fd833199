//! Monomial bases of the graded pieces of `C_*(L_k)`, and the operators
//! `d`, `δ_k` and the `sl₂` actions on them.

mod block;
mod monomial;
mod operators;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use block::{enumerate_block, BlockBasis, GradedCounts};
pub use monomial::{normalize_wedge, Monomial};
pub use operators::{matrix_of, IntChain, Operator, Sl2Generator};

pub(crate) use operators::add_term;

use crate::error::Result;

/// A chain with exact rational coefficients. Zero coefficients are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut c = Chain::zero();
        c.add_term(m, BigRational::one());
        c
    }

    pub fn from_int(c: &IntChain) -> Self {
        let mut out = Chain::zero();
        for (m, &v) in c {
            out.add_term(m.clone(), BigRational::from_integer(BigInt::from(v)));
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(q, w, h)` shared by every monomial, or `None` for a zero or
    /// inhomogeneous chain.
    pub fn homogeneous_grading(&self) -> Option<(usize, i64, i64)> {
        let mut it = self.terms.keys().map(|m| (m.dim(), m.weight(), m.degree()));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn scaled(&self, s: &BigRational) -> Chain {
        let mut out = Chain::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        self.plus(&other.scaled(&-BigRational::one()))
    }

    /// Monomial inner product: monomials are orthonormal.
    pub fn inner(&self, other: &Chain) -> BigRational {
        self.terms
            .iter()
            .filter_map(|(m, c)| other.terms.get(m).map(|d| c * d))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn apply(&self, op: Operator, k: i64) -> Result<Chain> {
        let mut out = Chain::zero();
        for (m, c) in &self.terms {
            for (m2, v) in op.apply_monomial(k, m)? {
                out.add_term(m2, c * BigRational::from_integer(BigInt::from(v)));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

/// `d(c)`.
pub fn differential(k: i64, c: &Chain) -> Result<Chain> {
    c.apply(Operator::Differential, k)
}

/// `δ_k(c)`.
pub fn codifferential(k: i64, c: &Chain) -> Result<Chain> {
    c.apply(Operator::Codifferential, k)
}

/// Derivation extension of the adjoint action of `g ∈ sl₂` on `C_*(L_k)`.
/// Errors if the image would leave `C_*(L_k)`.
pub fn adjoint_action(g: Sl2Generator, c: &Chain, k: i64) -> Result<Chain> {
    c.apply(Operator::sl2(g), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn mono(v: &[i64]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn chain_level_operators() {
        let c = Chain::monomial(mono(&[2, 3]));
        assert_eq!(differential(2, &c).unwrap(), Chain::monomial(mono(&[5])));
        assert_eq!(codifferential(1, &Chain::monomial(mono(&[5]))).unwrap(), c);
        let lowered = adjoint_action(Sl2Generator::Lower, &Chain::monomial(mono(&[4])), 2).unwrap();
        assert_eq!(lowered.coefficient(&mono(&[3])), -BigRational::one());
        assert!(matches!(
            adjoint_action(Sl2Generator::Lower, &Chain::monomial(mono(&[0])), 0),
            Err(Error::IndexBelowCutoff { .. })
        ));
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = Chain::monomial(mono(&[1, 4]));
        assert!(a.minus(&a).is_zero());
        assert_eq!(a.inner(&a), BigRational::one());
        assert_eq!(a.homogeneous_grading(), Some((2, 2, 1)));
        let mixed = a.plus(&Chain::monomial(mono(&[3])));
        assert_eq!(mixed.homogeneous_grading(), None);
        assert_eq!(mixed.to_string(), "e_1∧e_4 + e_3");
    }
}
