use std::fmt;

use super::Ring;

/// `a + bω` in `ℤ[ω] = ℤ[u]/(u² + u + 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    /// `ωⁿ` for any integer `n`.
    pub fn omega_pow(n: i64) -> Self {
        match n.rem_euclid(3) {
            0 => Eisenstein::new(1, 0),
            1 => Eisenstein::new(0, 1),
            _ => Eisenstein::new(-1, -1),
        }
    }

    pub fn norm(&self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "ω"),
            (0, -1) => write!(f, "-ω"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a} - {}ω", -b),
            (a, b) => write!(f, "{a} + {b}ω"),
        }
    }
}

impl Ring for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(0, 0)
    }
    fn one() -> Self {
        Eisenstein::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
    fn plus(&self, o: &Self) -> Self {
        Eisenstein::new(self.a + o.a, self.b + o.b)
    }
    fn times(&self, o: &Self) -> Self {
        // ω² = −1 − ω
        let bd = self.b * o.b;
        Eisenstein::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
    fn negated(&self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.norm() != 1 {
            return None;
        }
        // conjugate a + bω̄ = (a − b) − bω
        Some(Eisenstein::new(self.a - self.b, -self.b))
    }
    fn from_i64(n: i64) -> Self {
        Eisenstein::new(n, 0)
    }
}

/// Polynomial `Σ cᵢ zⁱ` over a coefficient ring, coefficients ascending
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn monomial(c: R, exp: usize) -> Self {
        let mut v = vec![R::zero(); exp];
        v.push(c);
        Poly::new(v)
    }

    pub fn variable() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `z = v`.
    pub fn eval(&self, v: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(v).plus(c))
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let unit = *c == R::one();
            match (i, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "({c})z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "({c})z^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::new(vec![R::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(out)
    }
    fn negated(&self) -> Self {
        Poly::new(self.coeffs.iter().map(Ring::negated).collect())
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].unit_inverse().map(|c| Poly::new(vec![c]))
        } else {
            None
        }
    }
    fn from_i64(n: i64) -> Self {
        Poly::new(vec![R::from_i64(n)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = Eisenstein::OMEGA;
        let w2 = w.times(&w);
        assert_eq!(w2, Eisenstein::new(-1, -1));
        assert_eq!(w2.times(&w), Eisenstein::one());
        assert!(Eisenstein::one().plus(&w).plus(&w2).is_zero());
        assert_eq!(w.unit_inverse(), Some(w2));
        assert_eq!(Eisenstein::new(2, 0).unit_inverse(), None);
        for n in -6..6 {
            assert_eq!(Eisenstein::omega_pow(n).times(&Eisenstein::omega_pow(-n)), Eisenstein::one());
        }
    }

    #[test]
    fn poly_arithmetic() {
        let z = Poly::<i64>::variable();
        let p = z.plus(&Poly::one()).times(&z.minus(&Poly::one()));
        assert_eq!(p, Poly::new(vec![-1, 0, 1]));
        assert_eq!(p.eval(&3), 8);
        assert_eq!(p.to_string(), "z^2 + -1");
        assert_eq!(<Poly<i64> as Ring>::from_i64(-5), Poly::new(vec![-5i64]));
    }

    fn eis() -> impl Strategy<Value = Eisenstein> {
        (-5i64..5, -5i64..5).prop_map(|(a, b)| Eisenstein::new(a, b))
    }

    proptest! {
        #[test]
        fn eisenstein_ring_laws(x in eis(), y in eis(), z in eis()) {
            prop_assert_eq!(x.times(&y), y.times(&x));
            prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
            prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
            prop_assert_eq!(x.times(&y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn poly_ring_laws(
            a in proptest::collection::vec(-4i64..4, 0..4),
            b in proptest::collection::vec(-4i64..4, 0..4),
            c in proptest::collection::vec(-4i64..4, 0..4),
        ) {
            let (a, b, c) = (Poly::new(a), Poly::new(b), Poly::new(c));
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.times(&Poly::one()), a.clone());
        }
    }
}
