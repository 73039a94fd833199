use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;

/// Dense polynomial over ℤ in one variable `t`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// `t − r`
    pub fn linear_root(r: i64) -> Self {
        IntPoly::from_i64s(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn plus(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn minus(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn times(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.times(self))
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
        )
    }

    /// Exact division in ℤ[t]; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = rat_div_rem(&to_rat(self), &to_rat(divisor));
        if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(IntPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Lowest `t`-power dividing the polynomial and the cofactor.
    pub fn strip_t_power(&self) -> (usize, IntPoly) {
        let z = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (z, IntPoly::new(self.coeffs[z..].to_vec()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

fn to_rat(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs.iter().cloned().map(BigRational::from_integer).collect()
}

fn trim_rat(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn rat_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_rat(&mut r);
    let mut b = b.to_vec();
    trim_rat(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &f * bc;
        }
        q[shift] = f;
        r.pop();
        trim_rat(&mut r);
    }
    trim_rat(&mut q);
    (q, r)
}

fn from_rat_primitive(v: &[BigRational]) -> IntPoly {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPoly::new(v.iter().map(|c| (c * &lcm).to_integer()).collect()).primitive_part()
}

fn rat_monic(v: Vec<BigRational>) -> Vec<BigRational> {
    let l = v.last().cloned().unwrap_or_else(BigRational::one);
    v.into_iter().map(|x| x / &l).collect()
}

fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim_rat(&mut y);
    while !y.is_empty() {
        let (_, r) = rat_div_rem(&x, &y);
        x = y;
        y = r;
    }
    rat_monic(x)
}

fn rat_derivative(v: &[BigRational]) -> Vec<BigRational> {
    v.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect()
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut z: Vec<BigRational> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    trim_rat(&mut z);
    z
}

/// Square-free decomposition (Yun): pairs `(part, multiplicity)` with each
/// part primitive and square-free.
fn square_free(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fv = rat_monic(to_rat(f));
    let fp = rat_derivative(&fv);
    let c = rat_gcd(&fv, &fp);
    let (mut w, _) = rat_div_rem(&fv, &c);
    let (y, _) = rat_div_rem(&fp, &c);
    let mut z = rat_sub(&y, &rat_derivative(&w));
    let mut i = 1;
    while w.len() > 1 {
        let g = if z.is_empty() { rat_monic(w.clone()) } else { rat_gcd(&w, &z) };
        if g.len() > 1 {
            out.push((from_rat_primitive(&g), i));
        }
        let (nw, _) = rat_div_rem(&w, &g);
        let (ny, _) = rat_div_rem(&z, &g);
        w = nw;
        z = rat_sub(&ny, &rat_derivative(&w));
        i += 1;
    }
    out
}

/// One factor of a factorisation over ℤ.  `irreducible` is only set when
/// irreducibility has been proved; a `false` flag means "not split".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: IntPoly,
    pub multiplicity: usize,
    pub irreducible: bool,
}

impl Factor {
    pub fn integer_root(&self) -> Option<i64> {
        if self.poly.degree() == Some(1) && self.poly.leading().is_one() {
            (-self.poly.coeffs()[0].clone()).to_i64()
        } else {
            None
        }
    }
}

/// Largest factor degree tried by the Kronecker splitter.
const KRONECKER_MAX_DEGREE: usize = 3;
/// Upper limit on candidate interpolants per degree.
const KRONECKER_BUDGET: usize = 400_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
        if d > 2_000_000 {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small.into_iter().flat_map(|d| [BigInt::from(d), -BigInt::from(d)]).collect())
}

/// Search for a monic factor of degree `d` of the monic square-free `p`.
/// Returns `Ok(Some(g))` on success, `Ok(None)` when none exists and
/// `Err(())` if the search exceeded its budget.
fn kronecker_factor(p: &IntPoly, d: usize) -> Result<Option<IntPoly>, ()> {
    let mut points: Vec<(BigInt, i64)> =
        (-30i64..=30).map(|x| (p.eval_i64(x), x)).filter(|(v, _)| !v.is_zero()).collect();
    points.sort_by(|a, b| a.0.magnitude().cmp(b.0.magnitude()).then(a.1.cmp(&b.1)));
    if points.len() < d + 1 {
        return Err(());
    }
    let chosen: Vec<(BigInt, i64)> = points[..d].to_vec();
    let check = &points[d];
    let mut div_sets = Vec::new();
    let mut combos: usize = 1;
    for (v, _) in &chosen {
        let ds = divisors(v).ok_or(())?;
        combos = combos.saturating_mul(ds.len());
        div_sets.push(ds);
    }
    if combos > KRONECKER_BUDGET {
        return Err(());
    }
    let xs: Vec<BigRational> =
        chosen.iter().map(|(_, x)| BigRational::from_integer((*x).into())).collect();
    // Π(t − x_i)
    let base = chosen.iter().fold(IntPoly::one(), |acc, (_, x)| acc.times(&IntPoly::linear_root(*x)));
    let mut idx = vec![0usize; d];
    loop {
        // Lagrange interpolant of degree < d through (x_i, value_i)
        let mut l = vec![BigRational::zero(); d];
        for i in 0..d {
            let yi = BigRational::from_integer(div_sets[i][idx[i]].clone());
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for j in 0..d {
                if i == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * &xs[j];
                }
                basis = next;
                denom *= &xs[i] - &xs[j];
            }
            let f = &yi / &denom;
            for (k, c) in basis.iter().enumerate() {
                l[k] += c * &f;
            }
        }
        if l.iter().all(|c| c.is_integer()) {
            let g = base.plus(&IntPoly::new(l.into_iter().map(|c| c.to_integer()).collect()));
            let gv = g.eval_i64(check.1);
            if !gv.is_zero() && (&check.0 % &gv).is_zero() {
                if let Some(_) = p.div_exact(&g) {
                    return Ok(Some(g));
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == d {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < div_sets[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Splits a monic square-free polynomial without integer roots.
fn split_square_free(p: IntPoly, multiplicity: usize, out: &mut Vec<Factor>) {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return;
    }
    if deg <= 3 {
        out.push(Factor { poly: p, multiplicity, irreducible: true });
        return;
    }
    let mut exhausted = true;
    for d in 2..=(deg / 2).min(KRONECKER_MAX_DEGREE) {
        match kronecker_factor(&p, d) {
            Ok(Some(g)) => {
                let rest = p.div_exact(&g).expect("factor divides");
                split_square_free(g, multiplicity, out);
                split_square_free(rest, multiplicity, out);
                return;
            }
            Ok(None) => {}
            Err(()) => exhausted = false,
        }
    }
    let proved = exhausted && deg / 2 <= KRONECKER_MAX_DEGREE;
    out.push(Factor { poly: p, multiplicity, irreducible: proved });
}

/// Factorisation of a monic integer polynomial.  Integer roots are searched
/// in `[-root_bound, root_bound]`; callers pass an eigenvalue bound so that
/// every integer root is found.  The result is sorted with linear factors
/// first.
pub fn factor_over_integers(p: &IntPoly, root_bound: i64) -> Vec<Factor> {
    assert!(p.leading().is_one(), "factorisation expects a monic polynomial");
    let mut out = Vec::new();
    for (part, mult) in square_free(p) {
        let mut rest = part;
        for r in -root_bound..=root_bound {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if rest.eval_i64(r).is_zero() {
                out.push(Factor { poly: IntPoly::linear_root(r), multiplicity: mult, irreducible: true });
                rest = rest.div_exact(&IntPoly::linear_root(r)).expect("root divides");
            }
        }
        split_square_free(rest, mult, &mut out);
    }
    out.sort_by(|a, b| {
        (a.poly.degree(), a.integer_root(), &a.poly).cmp(&(b.poly.degree(), b.integer_root(), &b.poly))
    });
    out
}

/// Characteristic polynomial `det(t·I − A)` by Berkowitz's division-free
/// algorithm.
pub fn charpoly(a: &IntMatrix) -> IntPoly {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let m: Vec<Vec<BigInt>> =
        a.to_dense().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    // coefficients in descending order of t
    let mut vect = vec![BigInt::one()];
    for r in 0..n {
        let mut c = Vec::with_capacity(r + 2);
        c.push(BigInt::one());
        c.push(-m[r][r].clone());
        // x = C^i S, starting with S = column r above the diagonal
        let mut x: Vec<BigInt> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let rs: BigInt = (0..r).map(|j| &m[r][j] * &x[j]).sum();
            c.push(-rs);
            x = (0..r).map(|i| (0..r).map(|j| &m[i][j] * &x[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                if i - j < c.len() {
                    *slot += &c[i - j] * &vect[j];
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    IntPoly::new(vect)
}
