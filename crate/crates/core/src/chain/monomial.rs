use std::fmt;

use crate::algebra::{generator_degree, generator_weight};
use crate::error::{Error, Result};

/// A `k`-monomial `e_{i_1} ∧ … ∧ e_{i_q}` with `i_1 < … < i_q`.
///
/// The empty monomial is the unit of `C_0`. Ordering is lexicographic on the
/// index list, which fixes the basis order of every block.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from strictly increasing indices.
    pub fn new(indices: Vec<i64>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "monomial indices must be strictly increasing, got {indices:?}"
            )));
        }
        Ok(Monomial(indices))
    }

    pub(crate) fn from_sorted(indices: Vec<i64>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Monomial(indices)
    }

    pub fn generator(a: i64) -> Self {
        Monomial(vec![a])
    }

    pub fn indices(&self) -> &[i64] {
        &self.0
    }

    /// Chain dimension `q`.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// `π(e_I) = Σ π(e_i)`.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&a| generator_degree(a)).sum()
    }

    /// `ω(e_I) = Σ ε_i`.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&a| generator_weight(a)).sum()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.0.first().copied()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "∧")?;
            }
            write!(f, "e_{a}")?;
        }
        Ok(())
    }
}

/// Sorts a wedge word into canonical order. Returns `None` when an index
/// repeats (the wedge vanishes), otherwise the permutation sign and the
/// canonical monomial.
pub fn normalize_wedge(indices: &[i64]) -> Option<(i64, Monomial)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    // insertion sort; each adjacent swap flips the sign
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, Monomial(v)))
}
