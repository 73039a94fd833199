use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::series::{HalfLaurent, Ring};

/// Element of the representation ring `R(sl₂)`: a finite ℤ-combination of
/// the classes `z^w` of simple modules.  Dominant weights are stored
/// doubled, so the key `n` is the class of the `(n+1)`-dimensional module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepRingElement {
    mults: BTreeMap<u32, i64>,
}

impl RepRingElement {
    /// The class `z^{n/2}` of the simple module of dimension `n + 1`.
    pub fn simple(doubled_weight: u32) -> Self {
        RepRingElement::simple_times(doubled_weight, 1)
    }

    pub fn simple_times(doubled_weight: u32, m: i64) -> Self {
        let mut x = RepRingElement::default();
        x.add(doubled_weight, m);
        x
    }

    /// `Σ cⱼ z^j` with integer dominant weights `j`.
    pub fn from_integer_weights(coeffs: &[i64]) -> Self {
        let mut x = RepRingElement::default();
        for (j, &c) in coeffs.iter().enumerate() {
            x.add(2 * j as u32, c);
        }
        x
    }

    pub fn add(&mut self, doubled_weight: u32, m: i64) {
        if m == 0 {
            return;
        }
        let v = self.mults.entry(doubled_weight).or_insert(0);
        *v += m;
        if *v == 0 {
            self.mults.remove(&doubled_weight);
        }
    }

    pub fn mults(&self) -> &BTreeMap<u32, i64> {
        &self.mults
    }

    pub fn mult(&self, doubled_weight: u32) -> i64 {
        self.mults.get(&doubled_weight).copied().unwrap_or(0)
    }

    /// Multiplicity of `z^w` for an integer weight `w`.
    pub fn mult_integer(&self, w: u32) -> i64 {
        self.mult(2 * w)
    }

    /// Dimension of the (virtual) module: `Σ m_w (2w + 1)`.
    pub fn dimension(&self) -> i64 {
        self.mults.iter().map(|(&n, &m)| m * (n as i64 + 1)).sum()
    }

    pub fn has_integer_weights(&self) -> bool {
        self.mults.keys().all(|n| n % 2 == 0)
    }

    /// Coefficients `c_j` of `Σ c_j z^j` for integer weights.
    pub fn integer_weight_coeffs(&self) -> Result<Vec<i64>> {
        if !self.has_integer_weights() {
            return Err(Error::invalid("element has half-integer weights"));
        }
        let top = self.mults.keys().next_back().map_or(0, |&n| n / 2 + 1);
        Ok((0..top).map(|j| self.mult(2 * j)).collect())
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        for (i, (&n, &m)) in self.mults.iter().rev().enumerate() {
            let (neg, mag) = (m < 0, m.unsigned_abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if n == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            match (n % 2, n / 2) {
                (0, 1) => write!(f, "z")?,
                (0, w) => write!(f, "z^{w}")?,
                _ => write!(f, "z^({n}/2)")?,
            }
        }
        Ok(())
    }
}

impl Ring for RepRingElement {
    fn zero() -> Self {
        RepRingElement::default()
    }
    fn one() -> Self {
        RepRingElement::simple(0)
    }
    fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&n, &m) in &o.mults {
            out.add(n, m);
        }
        out
    }
    /// Clebsch–Gordan: `z^a ⊗ z^b = Σ_{j=|a−b|}^{a+b} z^j`.
    fn times(&self, o: &Self) -> Self {
        let mut out = RepRingElement::default();
        for (&a, &ma) in &self.mults {
            for (&b, &mb) in &o.mults {
                let m = ma.checked_mul(mb).expect("multiplicity overflow");
                let mut j = a.abs_diff(b);
                while j <= a + b {
                    out.add(j, m);
                    j += 2;
                }
            }
        }
        out
    }
    fn negated(&self) -> Self {
        RepRingElement { mults: self.mults.iter().map(|(&n, &m)| (n, -m)).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.mults.iter().collect::<Vec<_>>()[..] {
            [(&0, &m)] if m == 1 || m == -1 => Some(self.clone()),
            _ => None,
        }
    }
    fn from_i64(n: i64) -> Self {
        RepRingElement::simple_times(0, n)
    }
}

/// The Weyl character map `W_u(z^w) = [2w + 1]_u`.
pub fn weyl_map(x: &RepRingElement) -> HalfLaurent {
    x.mults.iter().fold(HalfLaurent::zero(), |acc, (&n, &m)| {
        acc.plus(&HalfLaurent::quantum(n as i64 + 1).times(&HalfLaurent::from_i64(m)))
    })
}

/// Inverse of [`weyl_map`] on its image, by peeling off the top exponent.
pub fn weyl_inverse(f: &HalfLaurent) -> Result<RepRingElement> {
    let mut rest = f.clone();
    let mut out = RepRingElement::default();
    while let Some((&top, &c)) = rest.terms().iter().next_back() {
        if top < 0 {
            return Err(Error::invalid(format!("{f} is not in the span of the [a]_u")));
        }
        out.add(top as u32, c);
        rest = rest.minus(&HalfLaurent::quantum(top + 1).times(&HalfLaurent::from_i64(c)));
    }
    Ok(out)
}

/// `Q_r(z) = z^{⊗r}`, computed by repeated Clebsch–Gordan products and by
/// the recurrence `Q_r = ((z² + z + 1) Q_{r−1} − (z + 1) Q_{r−1}(0)) / z`;
/// the two must agree.
pub fn tensor_power_q(r: u32) -> Result<RepRingElement> {
    let z = RepRingElement::simple(2);
    let mut by_product = RepRingElement::one();
    // recurrence on the plain coefficient vector of Q in z
    let mut poly: Vec<i64> = vec![1];
    for step in 1..=r {
        by_product = by_product.times(&z);
        let q0 = poly[0];
        let mut next = vec![0i64; poly.len() + 2];
        for (j, &c) in poly.iter().enumerate() {
            next[j] += c;
            next[j + 1] += c;
            next[j + 2] += c;
        }
        next[0] -= q0;
        next[1] -= q0;
        if next[0] != 0 {
            return Err(Error::falsified(format!("Q_{step}"), "recurrence numerator not divisible by z"));
        }
        next.remove(0);
        while next.len() > 1 && next.last() == Some(&0) {
            next.pop();
        }
        poly = next;
        let by_rec = RepRingElement::from_integer_weights(&poly);
        if by_rec != by_product {
            return Err(Error::falsified(
                format!("Q_{step}"),
                format!("recurrence gives {by_rec}, Clebsch–Gordan gives {by_product}"),
            ));
        }
    }
    Ok(by_product)
}

/// Motzkin sums `a(n) = (n − 1)(2a(n−1) + 3a(n−2))/(n + 1)`, `a(0)=1`,
/// `a(1)=0`, computed independently of the representation ring.
pub fn motzkin_sums(n: usize) -> Vec<i64> {
    let mut a: Vec<i64> = Vec::with_capacity(n);
    for i in 0..n {
        let v = match i {
            0 => 1,
            1 => 0,
            _ => {
                let i = i as i64;
                (i - 1) * (2 * a[i as usize - 1] + 3 * a[i as usize - 2]) / (i + 1)
            }
        };
        a.push(v);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(w: u32) -> RepRingElement {
        RepRingElement::simple(2 * w)
    }

    #[test]
    fn clebsch_gordan_products() {
        assert_eq!(z(1).times(&z(1)), z(2).plus(&z(1)).plus(&z(0)));
        assert_eq!(z(0).times(&z(3)), z(3));
        let half = RepRingElement::simple(1);
        assert_eq!(half.times(&half), z(1).plus(&z(0)));
        assert_eq!(z(1).times(&z(1)).to_string(), "z^2 + z + 1");
        assert_eq!(RepRingElement::simple(3).to_string(), "z^(3/2)");
        assert_eq!(z(2).times(&z(1)).dimension(), 15);
    }

    #[test]
    fn weyl_characters() {
        assert_eq!(weyl_map(&z(1)).to_string(), "u + 1 + u^-1");
        assert_eq!(weyl_map(&z(0)), HalfLaurent::one());
        let sq = weyl_map(&z(1).times(&z(1)));
        assert_eq!(sq.to_string(), "u^2 + 2u + 3 + 2u^-1 + u^-2");
        assert_eq!(sq, weyl_map(&z(1)).times(&weyl_map(&z(1))));
        assert_eq!(weyl_inverse(&sq).unwrap(), z(1).times(&z(1)));
        assert!(weyl_inverse(&HalfLaurent::u_power(1, 1)).is_err());
    }

    #[test]
    fn tensor_powers() {
        assert_eq!(tensor_power_q(0).unwrap(), RepRingElement::one());
        assert_eq!(tensor_power_q(2).unwrap(), RepRingElement::from_integer_weights(&[1, 1, 1]));
        assert_eq!(tensor_power_q(3).unwrap(), RepRingElement::from_integer_weights(&[1, 3, 2, 1]));
        let constants: Vec<i64> = (0..9).map(|r| tensor_power_q(r).unwrap().mult(0)).collect();
        assert_eq!(constants, vec![1, 0, 1, 1, 3, 6, 15, 36, 91]);
        assert_eq!(motzkin_sums(9), constants);
    }

    fn element() -> impl Strategy<Value = RepRingElement> {
        proptest::collection::vec((0u32..5, -3i64..4), 0..4).prop_map(|v| {
            v.into_iter().fold(RepRingElement::zero(), |acc, (n, m)| {
                acc.plus(&RepRingElement::simple_times(n, m))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_laws_and_weyl_homomorphism(a in element(), b in element(), c in element()) {
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.times(&b).dimension(), a.dimension() * b.dimension());
            prop_assert_eq!(weyl_map(&a.times(&b)), weyl_map(&a).times(&weyl_map(&b)));
            prop_assert_eq!(weyl_inverse(&weyl_map(&a)).unwrap(), a);
        }
    }
}
