use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{nullity, IntMatrix};

/// The simple module `V(w)` with basis `v_p = e_{−1}^p v₀`, `0 ≤ p ≤ 2w`:
/// `e_{−1} v_p = v_{p+1}`, `e₀ v_p = (w − p) v_p`,
/// `e₁ v_p = p(2w − p + 1)/2 · v_{p−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub doubled_weight: u32,
}

impl Irrep {
    pub fn dim(&self) -> u32 {
        self.doubled_weight + 1
    }

    /// Doubled `e₀`-eigenvalue of `v_p`.
    pub fn doubled_weight_of(&self, p: u32) -> i64 {
        self.doubled_weight as i64 - 2 * p as i64
    }

    /// Twice the coefficient of `v_{p−1}` in `e₁ v_p`.
    pub fn raise_twice(&self, p: u32) -> i64 {
        p as i64 * (self.doubled_weight as i64 - p as i64 + 1)
    }

    pub fn raise(&self, p: u32) -> BigRational {
        BigRational::new(self.raise_twice(p).into(), 2.into())
    }
}

/// A vector of `V(w₁) ⊗ V(w₂)` in the basis `v_i ⊗ v_j`.
pub type TensorVector = BTreeMap<(u32, u32), BigRational>;

/// `e₁ ⊗ 1 + 1 ⊗ e₁` applied to `x`.
pub fn tensor_raise(two_w1: u32, two_w2: u32, x: &TensorVector) -> TensorVector {
    let (v1, v2) = (Irrep { doubled_weight: two_w1 }, Irrep { doubled_weight: two_w2 });
    let mut out = TensorVector::new();
    let mut push = |key: (u32, u32), c: BigRational| {
        let e = out.entry(key).or_insert_with(BigRational::zero);
        *e += c;
    };
    for (&(i, j), c) in x {
        if i > 0 {
            push((i - 1, j), c * v1.raise(i));
        }
        if j > 0 {
            push((i, j - 1), c * v2.raise(j));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Coefficients `c_i`, `0 ≤ i ≤ p`, of the singular vector
/// `Σ c_i e_{−1}^i v₁ ⊗ e_{−1}^{p−i} v₂` of weight `w₁ + w₂ − p` in
/// `V(w₁) ⊗ V(w₂)`:
/// `c_i = (−1)^i (2w₂−p+i)! (2w₁−i)! / ((2w₂−p)! (2w₁)! i! (p−i)!)`.
/// Such a vector exists exactly for `p ≤ 2·min(w₁, w₂)`.
pub fn cg_singular_vector(two_w1: u32, two_w2: u32, p: u32) -> Result<Vec<BigRational>> {
    if p > two_w1.min(two_w2) {
        return Err(Error::invalid(format!(
            "no singular vector of weight (w₁+w₂−{p}) in V({two_w1}/2) ⊗ V({two_w2}/2)"
        )));
    }
    let base = factorial(two_w2 - p) * factorial(two_w1);
    Ok((0..=p)
        .map(|i| {
            let num = factorial(two_w2 - p + i) * factorial(two_w1 - i);
            let den = &base * factorial(i) * factorial(p - i);
            let c = BigRational::new(num, den);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect())
}

/// The coefficients of [`cg_singular_vector`] as a tensor.
pub fn cg_tensor(two_w1: u32, two_w2: u32, p: u32) -> Result<TensorVector> {
    let c = cg_singular_vector(two_w1, two_w2, p)?;
    Ok(c.into_iter().enumerate().map(|(i, c)| ((i as u32, p - i as u32), c)).collect())
}

/// `dim ker e₁` on the weight `(w₁ + w₂ − p)` subspace of `V(w₁) ⊗ V(w₂)`.
pub fn tensor_singular_dim(two_w1: u32, two_w2: u32, p: u32) -> usize {
    let pairs = |s: u32| -> Vec<(u32, u32)> {
        (0..=s).filter(|&i| i <= two_w1 && s - i <= two_w2).map(|i| (i, s - i)).collect()
    };
    let source = pairs(p);
    let target = if p == 0 { Vec::new() } else { pairs(p - 1) };
    let (v1, v2) = (Irrep { doubled_weight: two_w1 }, Irrep { doubled_weight: two_w2 });
    let pos: BTreeMap<(u32, u32), usize> = target.iter().enumerate().map(|(r, &k)| (k, r)).collect();
    let columns = source
        .iter()
        .map(|&(i, j)| {
            let mut col = Vec::new();
            if i > 0 {
                col.push((pos[&(i - 1, j)], v1.raise_twice(i)));
            }
            if j > 0 {
                col.push((pos[&(i, j - 1)], v2.raise_twice(j)));
            }
            col
        })
        .collect();
    nullity(&IntMatrix::from_columns(target.len(), columns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_cases() {
        assert_eq!(cg_singular_vector(2, 2, 1).unwrap(), vec![q(1), q(-1)]);
        assert_eq!(cg_singular_vector(3, 5, 0).unwrap(), vec![q(1)]);
        let v = cg_tensor(2, 2, 2).unwrap();
        assert!(tensor_raise(2, 2, &v).is_empty());
        assert!(cg_singular_vector(2, 4, 3).is_err());
    }

    #[test]
    fn irrep_relations() {
        // [e₁, e₋₁] v_p = (w − p) v_p
        for n in 0..7u32 {
            let v = Irrep { doubled_weight: n };
            for p in 0..=n {
                let up_then = if p < n { v.raise_twice(p + 1) } else { 0 };
                let down_then = v.raise_twice(p);
                assert_eq!(up_then - down_then, v.doubled_weight_of(p));
            }
        }
    }

    #[test]
    fn singular_dimensions_match_clebsch_gordan() {
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for p in 0..=a + b {
                    let expect = usize::from(p <= a.min(b));
                    assert_eq!(tensor_singular_dim(a, b, p), expect, "{a} {b} {p}");
                }
            }
        }
    }
}
