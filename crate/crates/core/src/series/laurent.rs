use std::collections::BTreeMap;
use std::fmt;

use super::{Eisenstein, Ring};
use crate::error::{Error, Result};

/// Laurent polynomial in `u^{1/2}` with integer coefficients.  Keys are
/// doubled exponents: the key `e` stands for `u^{e/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, i64>,
}

impl HalfLaurent {
    pub fn monomial(coeff: i64, doubled_exp: i64) -> Self {
        let mut out = HalfLaurent::default();
        out.add_term(doubled_exp, coeff);
        out
    }

    /// `c·u^e` for an integer exponent `e`.
    pub fn u_power(coeff: i64, exp: i64) -> Self {
        HalfLaurent::monomial(coeff, 2 * exp)
    }

    /// `[a]_u = (u^{a/2} − u^{−a/2}) / (u^{1/2} − u^{−1/2})`, which is
    /// `u^{(a−1)/2} + u^{(a−3)/2} + … + u^{−(a−1)/2}` for `a ≥ 1`.
    pub fn quantum(a: i64) -> Self {
        let mut out = HalfLaurent::default();
        let n = a.abs();
        let sign = a.signum();
        for j in 0..n {
            out.add_term(n - 1 - 2 * j, sign);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0);
        *v = v.checked_add(c).expect("Laurent coefficient overflow");
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, i64> {
        &self.terms
    }

    pub fn coefficient(&self, doubled_exp: i64) -> i64 {
        self.terms.get(&doubled_exp).copied().unwrap_or(0)
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// `u ↦ −u`; defined only on integer exponents.
    pub fn negate_u(&self) -> Result<Self> {
        let mut out = HalfLaurent::default();
        for (&e, &c) in &self.terms {
            if e % 2 != 0 {
                return Err(Error::invalid(format!(
                    "u ↦ −u is undefined on u^({e}/2)"
                )));
            }
            out.add_term(e, if (e / 2) % 2 == 0 { c } else { -c });
        }
        Ok(out)
    }

    /// `u ↦ u^m` for an integer `m`.
    pub fn substitute_power(&self, m: i64) -> Self {
        let mut out = HalfLaurent::default();
        for (&e, &c) in &self.terms {
            out.add_term(e * m, c);
        }
        out
    }

    /// Value at `u = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at a primitive cube root of unity `u = ω`.
    pub fn at_omega(&self) -> Result<Eisenstein> {
        let mut acc = Eisenstein::zero();
        for (&e, &c) in &self.terms {
            if e % 2 != 0 {
                return Err(Error::invalid("u = ω needs integer exponents"));
            }
            acc = acc.plus(&Eisenstein::omega_pow(e / 2).times(&Eisenstein::from_i64(c)));
        }
        Ok(acc)
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = (c < 0, c.unsigned_abs());
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            match (e % 2 == 0, e / 2) {
                (true, 1) => write!(f, "u")?,
                (true, x) => write!(f, "u^{x}")?,
                (false, _) => write!(f, "u^({e}/2)")?,
            }
        }
        Ok(())
    }
}

impl Ring for HalfLaurent {
    fn zero() -> Self {
        HalfLaurent::default()
    }
    fn one() -> Self {
        HalfLaurent::monomial(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &o.terms {
            out.add_term(e, c);
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = HalfLaurent::default();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &o.terms {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("Laurent coefficient overflow"));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, &c) = self.terms.iter().next()?;
        matches!(c, 1 | -1).then(|| HalfLaurent::monomial(c, -e))
    }
    fn from_i64(n: i64) -> Self {
        HalfLaurent::monomial(n, 0)
    }
}
