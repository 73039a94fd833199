//! The Laplacian `Γ_k = dδ_k + δ_k d`: matrices by definition and by closed
//! form, exact spectra verified against the eigenvalue laws, harmonic
//! chains and homology.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::algebra::epsilon;
use crate::chain::{add_term, enumerate_block, BlockBasis, Chain, IntChain, Monomial, Operator};
use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, charpoly, factor_over_integers, kernel_basis, nullity, Factor, IntMatrix, IntPoly};

fn check_basis(k: i64, basis: &BlockBasis) -> Result<()> {
    if basis.k() != k {
        return Err(Error::invalid(format!("basis belongs to L_{}, not L_{k}", basis.k())));
    }
    Ok(())
}

fn add_scaled(out: &mut IntChain, c: &IntChain, s: i64) {
    for (m, &v) in c {
        add_term(out, m.clone(), s * v);
    }
}

/// `Γ_k(m) = d δ_k(m) + δ_k d(m)` for a single monomial.
pub fn image_by_definition(k: i64, m: &Monomial) -> Result<IntChain> {
    let d = Operator::Differential;
    let delta = Operator::Codifferential;
    let single: IntChain = [(m.clone(), 1)].into_iter().collect();
    let mut out = d.apply(k, &delta.apply(k, &single)?)?;
    add_scaled(&mut out, &delta.apply(k, &d.apply(k, &single)?)?, 1);
    Ok(out)
}

/// `2Γ_k(m)` from the closed form in terms of the degree, the weight and the
/// adjoint and conjugate actions.
fn twice_closed_form_image(k: i64, m: &Monomial) -> Result<IntChain> {
    let (h, w) = (m.degree(), m.weight());
    let single: IntChain = [(m.clone(), 1)].into_iter().collect();
    let mut out = IntChain::new();
    match k {
        -1 => {
            // 2h + w² + e_{−1}e_1 + e_1e_{−1}
            add_term(&mut out, m.clone(), 2 * h + w * w);
            let (lo, hi) = (Operator::Adjoint(-1), Operator::Adjoint(1));
            add_scaled(&mut out, &lo.apply(k, &hi.apply(k, &single)?)?, 1);
            add_scaled(&mut out, &hi.apply(k, &lo.apply(k, &single)?)?, 1);
        }
        0 => add_term(&mut out, m.clone(), 2 * h + w * w + w),
        _ if k >= 1 => {
            // 2h + ε²_{k+1} w − w² − Σ_{0<s<k} (e_{−s}e_s + e_s e_{−s})
            let e = epsilon(k + 1);
            add_term(&mut out, m.clone(), 2 * h + e * e * w - w * w);
            for s in 1..k {
                let (up, down) = (Operator::Adjoint(s), Operator::Conjugate(s));
                add_scaled(&mut out, &down.apply(k, &up.apply(k, &single)?)?, -1);
                add_scaled(&mut out, &up.apply(k, &down.apply(k, &single)?)?, -1);
            }
        }
        _ => return Err(Error::invalid(format!("k must be ≥ -1, got {k}"))),
    }
    Ok(out)
}

/// `Γ_k(m)` from the closed form, for a single monomial.
pub fn image_by_closed_form(k: i64, m: &Monomial) -> Result<IntChain> {
    let twice = twice_closed_form_image(k, m)?;
    let mut out = IntChain::new();
    for (m2, v) in twice {
        if v % 2 != 0 {
            return Err(Error::falsified(format!("Γ_{k}({m})"), "closed form has an odd coefficient"));
        }
        out.insert(m2, v / 2);
    }
    Ok(out)
}

fn matrix_from_images(
    basis: &BlockBasis,
    image: impl Fn(&Monomial) -> Result<IntChain>,
) -> Result<IntMatrix> {
    let mut columns = Vec::with_capacity(basis.len());
    for m in basis.monomials() {
        let mut col = Vec::new();
        for (m2, c) in image(m)? {
            let row = basis.position(&m2).ok_or_else(|| {
                Error::DimensionMismatch(format!("Γ maps {m} onto {m2}, outside the block"))
            })?;
            col.push((row, c));
        }
        columns.push(col);
    }
    Ok(IntMatrix::from_columns(basis.len(), columns))
}

/// Matrix of `dδ_k + δ_k d` on a block; any `(q, w, h)` filter is allowed
/// since `Γ_k` preserves all three gradings.
pub fn laplacian_by_definition(k: i64, basis: &BlockBasis) -> Result<IntMatrix> {
    check_basis(k, basis)?;
    matrix_from_images(basis, |m| image_by_definition(k, m))
}

/// Matrix of `Γ_k` from its closed form:
/// `Γ_{−1} = p + ½(e_{−1}e_1 + e_0² + e_1e_{−1})`, `Γ_0 = p + ½(e_0² + e_0)`
/// and, for `k ≥ 1`, `Γ_k = p + ½(ε²_{k+1} e_0 − Σ_{−k<r<k} e_{−r}e_r)`.
pub fn laplacian_closed_form(k: i64, basis: &BlockBasis) -> Result<IntMatrix> {
    check_basis(k, basis)?;
    matrix_from_images(basis, |m| image_by_closed_form(k, m))
}

/// `E_k(a)`, the eigenvalue of `Γ_k` on `e_a` for `k ≥ 1`.
pub fn one_dim_eigenvalue(k: i64, a: i64) -> Result<i64> {
    if k < 1 || a < k {
        return Err(Error::invalid(format!("E_k(a) needs 1 ≤ k ≤ a, got k={k}, a={a}")));
    }
    Ok(if a >= 2 * k - 2 { (a - 2 * k + 2).div_euclid(3) } else { 0 })
}

/// `⟨Γ_k(e_a∧e_b), e_x∧e_y⟩` from the explicit case table, for `k ≥ 1`,
/// `a < b`, `x < y`, `a + b = x + y`.
pub fn two_dim_pairing_oracle(k: i64, (a, b): (i64, i64), (x, y): (i64, i64)) -> Result<i64> {
    if a + b != x + y {
        return Err(Error::invalid(format!("a+b = {} differs from x+y = {}", a + b, x + y)));
    }
    if !(a < b && x < y && a >= k && x >= k) || k < 1 {
        return Err(Error::invalid(format!("need 1 ≤ k ≤ a < b, k ≤ x < y; got k={k}, ({a},{b}), ({x},{y})")));
    }
    let e = |n: i64| epsilon(n);
    if (x, y) == (a, b) {
        let base = one_dim_eigenvalue(k, a)? + one_dim_eigenvalue(k, b)?;
        return Ok(if b - a >= k { base - e(a) * e(b) } else { base + e(a - b) * e(a - b) });
    }
    if (0 < x - a && x - a < k && k <= y - a) || (0 < a - x && a - x < k && k <= b - x) {
        return Ok(-e(a + x) * e(b + y));
    }
    if (a < x && y - a < k) || (x < a && b - x < k) {
        return Ok(e(b - a) * e(y - x));
    }
    Ok(0)
}

/// The eigenvalue `λ_k(w, h)` of `Γ_k`: on `C^{(w,h)}` for `k ∈ {0, 1}`
/// and on the isotypic component of dominant weight `w` for `k ∈ {−1, 2}`.
pub fn predicted_lambda(k: i64, w: i64, h: i64) -> Result<i64> {
    match k {
        -1 => Ok(h + w * (w + 1) / 2),
        0 => Ok(h + w * (w + 1) / 2),
        1 => Ok(h - w * (w - 1) / 2),
        2 => Ok(h - w * (w + 1) / 2),
        _ => Err(Error::invalid(format!("no eigenvalue law for k = {k}"))),
    }
}

fn int_vector_to_chain(basis: &BlockBasis, v: Vec<BigRational>) -> Chain {
    let mut c = Chain::zero();
    for (x, m) in primitive_integer_vector(&v).into_iter().zip(basis.monomials()) {
        c.add_term(m.clone(), BigRational::from_integer(x));
    }
    c
}

/// Basis of `ker Γ_k` on the block: the reduced echelon basis, each vector
/// scaled to a primitive integer chain.
pub fn harmonic_basis(k: i64, basis: &BlockBasis) -> Result<Vec<Chain>> {
    let g = laplacian_by_definition(k, basis)?;
    Ok(kernel_basis(&g).into_iter().map(|v| int_vector_to_chain(basis, v)).collect())
}

/// One `(q, w, λ)` piece of a spectral decomposition.  For `k ∈ {−1, 2}`
/// `dominant_weight` names the isotypic component the eigenvalue comes from.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralBlock {
    pub k: i64,
    pub q: usize,
    pub w: i64,
    pub h: i64,
    pub dominant_weight: Option<i64>,
    pub lambda: i64,
    /// Multiplicity, an exact nullity of `Γ_k − λ`.
    pub mult: usize,
    /// Harmonic chains, filled in for `λ = 0`.
    pub harmonic_basis: Vec<Chain>,
}

/// Exact spectrum of `Γ_k` on `C^{(h)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub k: i64,
    pub h: i64,
    pub dim: usize,
    /// `(λ, multiplicity)` in increasing `λ`.
    pub eigenvalues: Vec<(i64, usize)>,
    pub blocks: Vec<SpectralBlock>,
}

fn check_spectral_k(k: i64) -> Result<()> {
    if !(-1..=2).contains(&k) {
        return Err(Error::invalid(format!(
            "exact spectra are available for k ∈ {{-1, 0, 1, 2}}, got {k}; use characteristic_polynomial"
        )));
    }
    Ok(())
}

/// The `(q, w)` sub-blocks of `C^{(h)}(L_k)` in increasing order.
pub fn subblock_keys(k: i64, h: i64) -> Result<Vec<(usize, i64)>> {
    Ok(enumerate_block(k, h, None)?.split().into_keys().collect())
}

/// `Π (G − λ)` over the given eigenvalues.
fn residual(g: &IntMatrix, lambdas: &[i64]) -> Result<IntMatrix> {
    let mut acc = IntMatrix::identity(g.rows());
    for &l in lambdas {
        acc = acc.multiply(&g.shifted(l))?;
    }
    Ok(acc)
}

/// Spectral pieces of the sub-block `C_q^{(w,h)}(L_k)`.
pub fn subblock_spectrum(k: i64, h: i64, q: usize, w: i64) -> Result<Vec<SpectralBlock>> {
    check_spectral_k(k)?;
    let block = enumerate_block(k, h, Some(w))?.restrict(Some(q), None);
    let dim = block.len();
    let here = format!("C_{q}^({w},{h})(L_{k})");
    if dim == 0 {
        return Ok(Vec::new());
    }
    let g = laplacian_by_definition(k, &block)?;
    // candidate eigenvalues with their predicted multiplicities
    let candidates: Vec<(Option<i64>, i64, usize)> = match k {
        0 | 1 => vec![(None, predicted_lambda(k, w, h)?, dim)],
        _ => {
            let mut v = Vec::new();
            let mut dominant = w.abs();
            let mut above = dim;
            while above > 0 {
                let next = enumerate_block(k, h, Some(dominant + 1))?.restrict(Some(q), None).len();
                if next > above {
                    return Err(Error::falsified(&here, format!("weight {} space larger than weight {dominant}", dominant + 1)));
                }
                v.push((Some(dominant), predicted_lambda(k, dominant, h)?, above - next));
                above = next;
                dominant += 1;
            }
            v
        }
    };
    let components = g.components();
    let mut out = Vec::new();
    let mut total = 0;
    for &(dominant, lambda, predicted) in &candidates {
        if predicted == 0 {
            continue;
        }
        if lambda < 0 {
            return Err(Error::falsified(&here, format!("negative eigenvalue {lambda} predicted")));
        }
        let mut mult = 0;
        for comp in &components {
            mult += nullity(&g.principal_submatrix(comp).shifted(lambda));
        }
        if mult != predicted {
            return Err(Error::falsified(
                &here,
                format!("eigenvalue {lambda}: nullity {mult}, predicted multiplicity {predicted}"),
            ));
        }
        total += mult;
        let harmonic = if lambda == 0 {
            kernel_basis(&g).into_iter().map(|v| int_vector_to_chain(&block, v)).collect()
        } else {
            Vec::new()
        };
        out.push(SpectralBlock { k, q, w, h, dominant_weight: dominant, lambda, mult, harmonic_basis: harmonic });
    }
    if total != dim {
        return Err(Error::falsified(&here, format!("eigenspaces have total dimension {total} of {dim}")));
    }
    for comp in &components {
        let gc = g.principal_submatrix(comp);
        let lambdas: Vec<i64> = out
            .iter()
            .map(|b| b.lambda)
            .filter(|&l| nullity(&gc.shifted(l)) > 0)
            .collect();
        if !residual(&gc, &lambdas)?.is_zero() {
            return Err(Error::falsified(&here, "Π(Γ − λ) does not vanish"));
        }
    }
    Ok(out)
}

/// Merges sub-block results into the spectrum of `C^{(h)}`.
pub fn assemble_spectrum(k: i64, h: i64, blocks: Vec<SpectralBlock>) -> Spectrum {
    let mut by_lambda: BTreeMap<i64, usize> = BTreeMap::new();
    for b in &blocks {
        *by_lambda.entry(b.lambda).or_insert(0) += b.mult;
    }
    let dim = blocks.iter().map(|b| b.mult).sum();
    Spectrum { k, h, dim, eigenvalues: by_lambda.into_iter().collect(), blocks }
}

/// Exact spectrum of `Γ_k` on `C^{(h)}(L_k)` for `k ∈ {−1, 0, 1, 2}`; every
/// eigenvalue is checked against `λ_k(w, h)` by exact nullities.
pub fn spectrum(k: i64, h: i64) -> Result<Spectrum> {
    check_spectral_k(k)?;
    let mut blocks = Vec::new();
    for (q, w) in subblock_keys(k, h)? {
        blocks.extend(subblock_spectrum(k, h, q, w)?);
    }
    Ok(assemble_spectrum(k, h, blocks))
}

/// `det(t − Γ_k)` on a block, as a product over the connected components of
/// the matrix.
pub fn characteristic_polynomial(k: i64, basis: &BlockBasis) -> Result<IntPoly> {
    let g = laplacian_by_definition(k, basis)?;
    Ok(g.components()
        .iter()
        .map(|c| charpoly(&g.principal_submatrix(c)))
        .fold(IntPoly::one(), |acc, p| acc.times(&p)))
}

/// A block of `Γ_k` whose characteristic polynomial has an irreducible
/// factor of degree at least two over ℤ.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrationalFinding {
    pub k: i64,
    pub q: usize,
    pub w: i64,
    pub h: i64,
    pub charpoly: IntPoly,
    pub factor: IntPoly,
}

/// Largest absolute row sum, a bound for every eigenvalue.
fn gershgorin_bound(g: &IntMatrix) -> i64 {
    let t = g.transpose();
    (0..t.cols()).map(|j| t.column(j).iter().map(|&(_, v)| v.abs()).sum::<i64>()).max().unwrap_or(0)
}

/// Factors `det(t − Γ_k)` on `C_q^{(w,h)}(L_k)` over ℤ.
pub fn factor_block(k: i64, h: i64, q: usize, w: i64) -> Result<(IntPoly, Vec<Factor>)> {
    let block = enumerate_block(k, h, Some(w))?.restrict(Some(q), None);
    let g = laplacian_by_definition(k, &block)?;
    let mut whole = IntPoly::one();
    let mut factors = Vec::new();
    for comp in g.components() {
        let gc = g.principal_submatrix(&comp);
        let p = charpoly(&gc);
        factors.extend(factor_over_integers(&p, gershgorin_bound(&gc)));
        whole = whole.times(&p);
    }
    Ok((whole, factors))
}

/// Searches `h = 0, 1, …, h_max` for the first block with an irreducible
/// factor of degree `≥ 2`.
pub fn find_irrational_block(k: i64, h_max: i64) -> Result<Option<IrrationalFinding>> {
    for h in 0..=h_max {
        for (q, w) in subblock_keys(k, h)? {
            let (whole, factors) = factor_block(k, h, q, w)?;
            if let Some(f) = factors.iter().find(|f| f.irreducible && f.poly.degree() >= Some(2)) {
                return Ok(Some(IrrationalFinding { k, q, w, h, charpoly: whole, factor: f.poly.clone() }));
            }
        }
    }
    Ok(None)
}

/// Dimensions `dim H_q^{(w,h)}(L_k)` for `h ≤ h_max`, together with the
/// closed-form prediction and any disagreement.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyTable {
    pub k: i64,
    pub h_max: i64,
    /// Nonzero `((q, w, h), dim)`.
    pub entries: BTreeMap<(usize, i64, i64), usize>,
    pub expected: BTreeMap<(usize, i64, i64), usize>,
    pub harmonic: BTreeMap<(usize, i64, i64), Vec<Chain>>,
}

impl HomologyTable {
    /// Keys where computation and closed form differ.
    pub fn deviations(&self) -> Vec<((usize, i64, i64), usize, usize)> {
        let mut keys: Vec<_> = self.entries.keys().chain(self.expected.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|key| {
                let (got, want) = (
                    self.entries.get(&key).copied().unwrap_or(0),
                    self.expected.get(&key).copied().unwrap_or(0),
                );
                (got != want).then_some((key, got, want))
            })
            .collect()
    }

    /// `dim H_q` summed over weights and degrees.
    pub fn total_in_dimension(&self, q: usize) -> usize {
        self.entries.iter().filter(|(&(q2, _, _), _)| q2 == q).map(|(_, &d)| d).sum()
    }
}

/// Closed forms for the homology of `L_k`, `k ∈ {−1, 0, 1, 2}`.
pub fn expected_homology(k: i64, h_max: i64) -> Result<BTreeMap<(usize, i64, i64), usize>> {
    check_spectral_k(k)?;
    let mut out = BTreeMap::new();
    let mut put = |q: usize, w: i64, h: i64| {
        if h <= h_max {
            out.insert((q, w, h), 1);
        }
    };
    put(0, 0, 0);
    match k {
        -1 => put(3, 0, 0),
        0 => put(1, 0, 0),
        1 => {
            // e_1∧e_4∧…∧e_{3q−2} and e_2∧e_5∧…∧e_{3q−1}
            for q in 1.. {
                let qi = q as i64;
                if (qi * qi - qi) / 2 > h_max {
                    break;
                }
                put(q, qi, (qi * qi - qi) / 2);
                put(q, -qi, (qi * qi + qi) / 2);
            }
        }
        _ => {
            for q in 1.. {
                let qi = q as i64;
                let h = (qi * qi + qi) / 2;
                if h > h_max {
                    break;
                }
                for w in -qi..=qi {
                    put(q, w, h);
                }
            }
        }
    }
    Ok(out)
}

/// Homology of `L_k` in degrees `h ≤ h_max`, as harmonic chains.
pub fn homology_table(k: i64, h_max: i64) -> Result<HomologyTable> {
    check_spectral_k(k)?;
    let mut entries = BTreeMap::new();
    let mut harmonic = BTreeMap::new();
    for h in 0..=h_max {
        for ((q, w), block) in enumerate_block(k, h, None)?.split() {
            let g = laplacian_by_definition(k, &block)?;
            let deg: usize = g.components().iter().map(|c| nullity(&g.principal_submatrix(c))).sum();
            if deg > 0 {
                let chains: Vec<Chain> =
                    kernel_basis(&g).into_iter().map(|v| int_vector_to_chain(&block, v)).collect();
                entries.insert((q, w, h), deg);
                harmonic.insert((q, w, h), chains);
            }
        }
    }
    Ok(HomologyTable { k, h_max, entries, expected: expected_homology(k, h_max)?, harmonic })
}

/// Whether `c` is annihilated by `Γ_k`.
pub fn is_harmonic(k: i64, c: &Chain) -> Result<bool> {
    Ok(apply_laplacian(k, c)?.is_zero())
}

/// `Γ_k c`, by definition.
pub fn apply_laplacian(k: i64, c: &Chain) -> Result<Chain> {
    let d = c.apply(Operator::Differential, k)?;
    let delta = c.apply(Operator::Codifferential, k)?;
    Ok(d.apply(Operator::Codifferential, k)?.plus(&delta.apply(Operator::Differential, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(k: i64, h: i64) -> BlockBasis {
        enumerate_block(k, h, None).unwrap()
    }

    #[test]
    fn closed_form_matches_definition() {
        for k in -1..=4 {
            for h in 0..=5 {
                let b = block(k, h);
                let g = laplacian_by_definition(k, &b).unwrap();
                assert_eq!(g, laplacian_closed_form(k, &b).unwrap(), "k={k} h={h}");
                assert!(g.is_symmetric());
            }
        }
    }

    #[test]
    fn generators_are_eigenvectors() {
        for k in 1..=5 {
            for a in k..=25 {
                let m = Monomial::generator(a);
                let img = image_by_definition(k, &m).unwrap();
                let e = one_dim_eigenvalue(k, a).unwrap();
                let want: IntChain = if e == 0 { IntChain::new() } else { [(m, e)].into_iter().collect() };
                assert_eq!(img, want, "k={k} a={a}");
            }
        }
        assert_eq!(one_dim_eigenvalue(1, 7).unwrap(), 2);
        assert!(one_dim_eigenvalue(3, 2).is_err());
    }

    #[test]
    fn wedge_pairs_follow_case_table() {
        for k in 1..=5 {
            for a in k..=18 {
                for b in a + 1..=18 {
                    let m = Monomial::new(vec![a, b]).unwrap();
                    let img = image_by_definition(k, &m).unwrap();
                    for x in k..a + b {
                        let y = a + b - x;
                        if y <= x {
                            break;
                        }
                        let got = img.get(&Monomial::new(vec![x, y]).unwrap()).copied().unwrap_or(0);
                        assert_eq!(got, two_dim_pairing_oracle(k, (a, b), (x, y)).unwrap(), "k={k} ({a},{b}) ({x},{y})");
                    }
                }
            }
        }
        assert!(two_dim_pairing_oracle(1, (1, 2), (1, 3)).is_err());
    }

    #[test]
    fn small_spectra() {
        let s = spectrum(1, 1).unwrap();
        assert_eq!(s.eigenvalues, vec![(0, 2), (1, 4)]);
        let s = spectrum(-1, 0).unwrap();
        assert_eq!(s.dim, 8);
        let zero: usize = s.eigenvalues.iter().filter(|e| e.0 == 0).map(|e| e.1).sum();
        assert_eq!(zero, 2);
        let top = s.blocks.iter().find(|b| b.lambda == 0 && b.q == 3).unwrap();
        assert_eq!(top.harmonic_basis.len(), 1);
        assert_eq!(top.harmonic_basis[0].to_string(), "e_-1∧e_0∧e_1");
        assert!(spectrum(3, 2).is_err());
    }

    #[test]
    fn spectra_verify_through_degree_seven() {
        for k in -1..=2 {
            for h in 0..=7 {
                let s = spectrum(k, h).unwrap();
                assert_eq!(s.dim, block(k, h).len());
                assert!(s.eigenvalues.iter().all(|&(l, _)| l >= 0));
            }
        }
    }

    #[test]
    fn homology_matches_closed_forms() {
        for k in -1..=2 {
            let t = homology_table(k, 7).unwrap();
            assert!(t.deviations().is_empty(), "k={k}: {:?}", t.deviations());
            for (key, chains) in &t.harmonic {
                for c in chains {
                    assert!(is_harmonic(k, c).unwrap(), "{key:?}");
                }
            }
        }
    }

    #[test]
    fn charpoly_splits_for_spectral_k() {
        let b = block(2, 4);
        let p = characteristic_polynomial(2, &b).unwrap();
        assert_eq!(p.degree(), Some(b.len()));
        let g = laplacian_by_definition(2, &b).unwrap();
        let bound = gershgorin_bound(&g);
        assert!(factor_over_integers(&p, bound).iter().all(|f| f.integer_root().is_some()));
    }

    #[test]
    fn level_three_has_irrational_eigenvalues() {
        let f = find_irrational_block(3, 6).unwrap().expect("an irreducible quadratic");
        assert_eq!(f.h, 5);
        assert_eq!(f.factor.degree(), Some(2));
        assert!(find_irrational_block(3, 4).unwrap().is_none());
    }
}
