use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Minimal integer arithmetic used by fraction-free elimination.  The `i64`
/// implementation reports overflow so the caller can retry over `BigInt`.
trait EchelonScalar: Clone + Sized {
    fn is_zero_(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    /// `a·x − b·y`
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit_magnitude(&self) -> bool;
}

impl EchelonScalar for i64 {
    fn is_zero_(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd_(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit_magnitude(&self) -> bool {
        self.unsigned_abs() == 1
    }
}

impl EchelonScalar for BigInt {
    fn is_zero_(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit_magnitude(&self) -> bool {
        self.magnitude().is_one()
    }
}

/// Forward elimination in place.  Returns the pivot columns, or `None` on
/// overflow.  Rows are kept primitive (content 1) so growth stays modest.
fn echelon<T: EchelonScalar>(mat: &mut Vec<Vec<T>>, ncols: usize) -> Option<Vec<usize>> {
    let nrows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..nrows {
            if !mat[i][c].is_zero_() {
                match best {
                    Some(b) if !mat[i][c].magnitude_lt(&mat[b][c]) => {}
                    _ => best = Some(i),
                }
                if mat[i][c].is_unit_magnitude() {
                    break;
                }
            }
        }
        let Some(p) = best else { continue };
        mat.swap(p, r);
        let (head, tail) = mat.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero_() {
                continue;
            }
            let g = prow[c].gcd_(&row[c]);
            let a = prow[c].div_exact(&g);
            let b = row[c].div_exact(&g);
            let mut content: Option<T> = None;
            for j in c..ncols {
                let v = T::combine(&a, &row[j], &b, &prow[j])?;
                if !v.is_zero_() {
                    content = Some(match content {
                        None => v.clone(),
                        Some(g) => g.gcd_(&v),
                    });
                }
                row[j] = v;
            }
            if let Some(g) = content {
                if !g.is_unit_magnitude() {
                    for v in row[c..].iter_mut() {
                        *v = v.div_exact(&g);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

fn dense_i64(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    m.submatrix(rows, cols).to_dense()
}

fn component_rank(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut small = dense_i64(m, rows, cols);
    if let Some(p) = echelon(&mut small, cols.len()) {
        return p.len();
    }
    let mut big: Vec<Vec<BigInt>> = dense_i64(m, rows, cols)
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    echelon(&mut big, cols.len()).expect("BigInt elimination cannot overflow").len()
}

/// Rank over ℚ.
pub fn rank(m: &IntMatrix) -> usize {
    m.bipartite_components().iter().map(|(r, c)| component_rank(m, r, c)).sum()
}

pub fn nullity(m: &IntMatrix) -> usize {
    m.cols() - rank(m)
}

/// Reduced row echelon form over ℚ with zero rows removed.
pub fn rref(mut rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(p, r);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Kernel of a single dense component, as vectors over its columns.
fn component_kernel(dense: Vec<Vec<i64>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut big: Vec<Vec<BigInt>> =
        dense.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let pivots = echelon(&mut big, ncols).expect("BigInt elimination cannot overflow");
    big.truncate(pivots.len());
    let reduced: Vec<Vec<BigRational>> = rref(
        big.into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect(),
    );
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// A basis of the right kernel of `m`, returned in reduced row echelon form.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    let n = m.cols();
    let mut vectors = Vec::new();
    for (rows, cols) in m.bipartite_components() {
        let dense = dense_i64(m, &rows, &cols);
        let local = if rows.is_empty() {
            vec![vec![BigRational::one()]]
        } else {
            component_kernel(dense, cols.len())
        };
        for lv in local {
            let mut v = vec![BigRational::zero(); n];
            for (x, &c) in lv.into_iter().zip(&cols) {
                v[c] = x;
            }
            vectors.push(v);
        }
    }
    rref(vectors)
}

/// Normalises a rational vector to a primitive integer vector with positive
/// leading entry.
pub(crate) fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    ints.into_iter().map(|x| x / &g * &sign).collect()
}
