use std::collections::{BTreeMap, HashMap};

use super::RepRingElement;
use crate::chain::{enumerate_block, matrix_of, BlockBasis, Chain, Monomial, Operator, Sl2Generator};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, nullity, IntMatrix};

fn check_module_cutoff(k: i64) -> Result<()> {
    if (k + 1).rem_euclid(3) != 0 {
        return Err(Error::invalid(format!(
            "C_*(L_{k}) is an sl₂-module only for k ≡ -1 (mod 3)"
        )));
    }
    Ok(())
}

/// A finite set of `k`-monomials closed under the `sl₂` action, with the
/// exact matrices of `e_{−1}`, `e₀`, `e₁` on its span.
#[derive(Clone, Debug)]
pub struct WeightModuleView {
    k: i64,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    lower: IntMatrix,
    cartan: IntMatrix,
    raise: IntMatrix,
}

impl WeightModuleView {
    /// View of a block `C^{(h)}` or `C_q^{(h)}`; weight-filtered blocks are
    /// not `sl₂`-stable and are rejected.
    pub fn from_block(basis: &BlockBasis) -> Result<Self> {
        if basis.weight().is_some() {
            return Err(Error::invalid("a weight-filtered block is not an sl₂-module"));
        }
        WeightModuleView::from_monomials(basis.k(), basis.monomials().to_vec())
    }

    pub fn from_monomials(k: i64, mut monomials: Vec<Monomial>) -> Result<Self> {
        check_module_cutoff(k)?;
        monomials.sort();
        monomials.dedup();
        let index: HashMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let build = |g: Sl2Generator| -> Result<IntMatrix> {
            let op = Operator::sl2(g);
            let mut columns = Vec::with_capacity(monomials.len());
            for m in &monomials {
                let mut col = Vec::new();
                for (m2, c) in op.apply_monomial(k, m)? {
                    let row = *index.get(&m2).ok_or_else(|| {
                        Error::DimensionMismatch(format!("{g:?} maps {m} outside the module"))
                    })?;
                    col.push((row, c));
                }
                columns.push(col);
            }
            Ok(IntMatrix::from_columns(monomials.len(), columns))
        };
        let lower = build(Sl2Generator::Lower)?;
        let cartan = build(Sl2Generator::Cartan)?;
        let raise = build(Sl2Generator::Raise)?;
        Ok(WeightModuleView { k, monomials, index, lower, cartan, raise })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn matrix(&self, g: Sl2Generator) -> &IntMatrix {
        match g {
            Sl2Generator::Lower => &self.lower,
            Sl2Generator::Cartan => &self.cartan,
            Sl2Generator::Raise => &self.raise,
        }
    }

    /// `[e₀, e_{±1}] = ±e_{±1}` and `[e₁, e_{−1}] = e₀` as matrix identities.
    pub fn check_relations(&self) -> Result<()> {
        let comm = |a: &IntMatrix, b: &IntMatrix| -> Result<IntMatrix> {
            a.multiply(b)?.minus(&b.multiply(a)?)
        };
        let checks = [
            ("[e0,e1] = e1", comm(&self.cartan, &self.raise)?, self.raise.clone()),
            ("[e0,e-1] = -e-1", comm(&self.cartan, &self.lower)?, self.lower.scaled(-1)),
            ("[e1,e-1] = e0", comm(&self.raise, &self.lower)?, self.cartan.clone()),
        ];
        for (name, lhs, rhs) in checks {
            if lhs != rhs {
                return Err(Error::falsified(format!("sl₂ module on {} monomials", self.len()), name));
            }
        }
        Ok(())
    }

    /// The Casimir element `e_{−1}e₁ + e₀² + e₁e_{−1}`.
    pub fn casimir(&self) -> Result<IntMatrix> {
        self.lower
            .multiply(&self.raise)?
            .plus(&self.cartan.multiply(&self.cartan)?)?
            .plus(&self.raise.multiply(&self.lower)?)
    }

    fn weight_of(&self, i: usize) -> i64 {
        self.monomials[i].weight()
    }

    pub fn weight_indices(&self, w: i64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.weight_of(i) == w).collect()
    }

    pub fn weight_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for i in 0..self.len() {
            *out.entry(self.weight_of(i)).or_insert(0) += 1;
        }
        out
    }

    /// `e₁` restricted to the weight-`w` space, into the weight-`(w+1)` space.
    fn raise_on_weight(&self, w: i64) -> (Vec<usize>, IntMatrix) {
        let cols = self.weight_indices(w);
        let rows = self.weight_indices(w + 1);
        (cols.clone(), self.raise.submatrix(&rows, &cols))
    }

    /// Basis of the singular vectors of weight `w` (kernel of `e₁` on the
    /// weight space), in reduced echelon form.
    pub fn singular_vectors(&self, w: i64) -> Vec<Chain> {
        let (cols, m) = self.raise_on_weight(w);
        kernel_basis(&m)
            .into_iter()
            .map(|v| {
                let mut c = Chain::zero();
                for (x, &j) in v.into_iter().zip(&cols) {
                    c.add_term(self.monomials[j].clone(), x);
                }
                c
            })
            .collect()
    }

    /// Singular character `S(V) = Σ m(V, w) z^w`, with each multiplicity
    /// computed both as `dim ker e₁ ∩ V_w` and as `dim V_w − dim V_{w+1}`.
    pub fn singular_multiplicities(&self) -> Result<RepRingElement> {
        let dims = self.weight_dims();
        let mut out = RepRingElement::default();
        for (&w, &d) in dims.range(0..) {
            let by_kernel = nullity(&self.raise_on_weight(w).1);
            let by_difference = d as i64 - dims.get(&(w + 1)).copied().unwrap_or(0) as i64;
            if by_kernel as i64 != by_difference {
                return Err(Error::falsified(
                    format!("weight {w}"),
                    format!("dim ker e₁ = {by_kernel} but dim V_w − dim V_(w+1) = {by_difference}"),
                ));
            }
            out.add(2 * w as u32, by_difference);
        }
        if out.dimension() != self.len() as i64 {
            return Err(Error::falsified(
                "singular character",
                format!("dimension {} of {out} differs from {}", out.dimension(), self.len()),
            ));
        }
        Ok(out)
    }
}

/// `dim S_q^{(w,h)}(L_k)`, or `dim S_*^{(w,h)}` when `q` is omitted: the
/// kernel of `e₁` on `C^{(w,h)}`, checked against the weight-space
/// difference `dim C^{(w,h)} − dim C^{(w+1,h)}`.
pub fn singular_block_dims(k: i64, w: i64, h: i64, q: Option<usize>) -> Result<usize> {
    check_module_cutoff(k)?;
    if w < 0 {
        return Err(Error::invalid(format!("dominant weights are non-negative, got {w}")));
    }
    let source = enumerate_block(k, h, Some(w))?.restrict(q, None);
    let target = enumerate_block(k, h, Some(w + 1))?.restrict(q, None);
    let m = matrix_of(Operator::sl2(Sl2Generator::Raise), k, &source, &target)?;
    let by_kernel = nullity(&m);
    let by_difference = source.len() as i64 - target.len() as i64;
    if by_kernel as i64 != by_difference {
        return Err(Error::falsified(
            format!("S^({w},{h})(L_{k}), q = {q:?}"),
            format!("dim ker e₁ = {by_kernel}, weight-space difference {by_difference}"),
        ));
    }
    Ok(by_kernel)
}
