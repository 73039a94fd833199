use std::collections::BTreeMap;

use crate::algebra::{epsilon, generator_degree, generator_weight};
use crate::chain::block::BlockBasis;
use crate::chain::monomial::{normalize_wedge, Monomial};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Integer linear combination of monomials. Zero coefficients are never stored.
pub type IntChain = BTreeMap<Monomial, i64>;

pub(crate) fn add_term(acc: &mut IntChain, m: Monomial, c: i64) {
    if c == 0 {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

fn add_word(acc: &mut IntChain, word: &[i64], c: i64) {
    if c == 0 {
        return;
    }
    if let Some((s, m)) = normalize_wedge(word) {
        add_term(acc, m, s * c);
    }
}

/// The three basis elements of `sl₂ = ⟨e_{−1}, e_0, e_1⟩ ⊂ L_{−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Generator {
    /// `e_{−1}`
    Lower,
    /// `e_0`
    Cartan,
    /// `e_1`
    Raise,
}

impl Sl2Generator {
    pub const ALL: [Sl2Generator; 3] = [Sl2Generator::Lower, Sl2Generator::Cartan, Sl2Generator::Raise];

    pub fn index(self) -> i64 {
        match self {
            Sl2Generator::Lower => -1,
            Sl2Generator::Cartan => 0,
            Sl2Generator::Raise => 1,
        }
    }
}

/// Linear operators on `C_*(L_k)` that act monomial by monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    /// `d`, lowers `q` by one.
    Differential,
    /// `δ_k`, the adjoint of `d` for the monomial inner product; raises `q`.
    Codifferential,
    /// Derivation extension of `ad e_r` for `r ≥ −1`. For `r = −1` the
    /// result stays in `C_*(L_k)` only when `k ≡ −1 (mod 3)`.
    Adjoint(i64),
    /// `e_{−r}` for `r ≥ 1`: the adjoint of `Adjoint(r)`, i.e. the derivation
    /// with `e_a ↦ ε_{a+r} e_{a−r}` and `e_a ↦ 0` once `a − r < k`.
    Conjugate(i64),
}

impl Operator {
    pub fn sl2(g: Sl2Generator) -> Self {
        Operator::Adjoint(g.index())
    }

    /// Shift `(Δq, Δw, Δh)` of the trigrading.
    pub fn shift(&self) -> (i64, i64, i64) {
        match *self {
            Operator::Differential => (-1, 0, 0),
            Operator::Codifferential => (1, 0, 0),
            Operator::Adjoint(r) => (0, generator_weight(r), generator_degree(r)),
            Operator::Conjugate(r) => (0, -generator_weight(r), -generator_degree(r)),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Operator::Adjoint(r) if r < -1 => Err(Error::invalid(format!(
                "ad e_{r} is not an operator on C_*(L_k), k ≥ -1"
            ))),
            Operator::Conjugate(r) if r < 1 => Err(Error::invalid(format!(
                "conjugate action e_{{-{r}}} needs r ≥ 1"
            ))),
            _ => Ok(()),
        }
    }

    /// Image of a single monomial.
    pub fn apply_monomial(&self, k: i64, m: &Monomial) -> Result<IntChain> {
        self.validate()?;
        if let Some(lo) = m.min_index() {
            if lo < k {
                return Err(Error::invalid(format!("{m} is not a {k}-monomial")));
            }
        }
        let mut out = IntChain::new();
        match *self {
            Operator::Differential => differential_into(m, &mut out),
            Operator::Codifferential => codifferential_into(k, m, &mut out),
            Operator::Adjoint(r) => {
                let idx = m.indices();
                for (s, &a) in idx.iter().enumerate() {
                    let c = epsilon(a - r);
                    if c == 0 {
                        continue;
                    }
                    let j = a + r;
                    if j < k {
                        return Err(Error::IndexBelowCutoff { k, index: j });
                    }
                    let mut word = idx.to_vec();
                    word[s] = j;
                    add_word(&mut out, &word, c);
                }
            }
            Operator::Conjugate(r) => {
                let idx = m.indices();
                for (s, &a) in idx.iter().enumerate() {
                    let j = a - r;
                    if j < k {
                        continue;
                    }
                    let mut word = idx.to_vec();
                    word[s] = j;
                    add_word(&mut out, &word, epsilon(a + r));
                }
            }
        }
        Ok(out)
    }

    /// Linear extension to an integer chain.
    pub fn apply(&self, k: i64, c: &IntChain) -> Result<IntChain> {
        let mut out = IntChain::new();
        for (m, &coef) in c {
            for (m2, c2) in self.apply_monomial(k, m)? {
                add_term(&mut out, m2, coef * c2);
            }
        }
        Ok(out)
    }
}

fn differential_into(m: &Monomial, out: &mut IntChain) {
    let idx = m.indices();
    let q = idx.len();
    let mut word = Vec::with_capacity(q.saturating_sub(1));
    for a in 0..q {
        for b in a + 1..q {
            let c = epsilon(idx[b] - idx[a]);
            if c == 0 {
                continue;
            }
            // (-1)^{a+b-1} with 1-based positions
            let sign = if (a + b) % 2 == 0 { -1 } else { 1 };
            word.clear();
            word.push(idx[a] + idx[b]);
            word.extend(
                idx.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != a && i != b)
                    .map(|(_, &x)| x),
            );
            add_word(out, &word, sign * c);
        }
    }
}

/// `δ_k(e_i) = Σ_{a+b=i, k≤a<b} ε_{b−a} e_a∧e_b`.
pub(crate) fn codifferential_generator(k: i64, i: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (k..)
        .take_while(move |&a| 2 * a < i)
        .filter_map(move |a| {
            let b = i - a;
            let c = epsilon(b - a);
            (c != 0).then_some((c, a, b))
        })
}

fn codifferential_into(k: i64, m: &Monomial, out: &mut IntChain) {
    let idx = m.indices();
    let mut word = Vec::with_capacity(idx.len() + 1);
    for (s, &i) in idx.iter().enumerate() {
        let sign = if s % 2 == 0 { 1 } else { -1 };
        for (c, a, b) in codifferential_generator(k, i) {
            word.clear();
            word.extend_from_slice(&idx[..s]);
            word.push(a);
            word.push(b);
            word.extend_from_slice(&idx[s + 1..]);
            add_word(out, &word, sign * c);
        }
    }
}

/// Matrix of `op` from `source` to `target`; column `j` is the image of the
/// `j`-th source monomial. Fails if an image leaves the span of `target`.
pub fn matrix_of(op: Operator, k: i64, source: &BlockBasis, target: &BlockBasis) -> Result<IntMatrix> {
    let mut columns = Vec::with_capacity(source.len());
    for m in source.monomials() {
        let image = op.apply_monomial(k, m)?;
        let mut col = Vec::with_capacity(image.len());
        for (m2, c) in image {
            let row = target.position(&m2).ok_or_else(|| {
                Error::DimensionMismatch(format!(
                    "{op:?} maps {m} onto {m2}, which is not in the target block"
                ))
            })?;
            col.push((row, c));
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(IntMatrix::from_columns(target.len(), columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::block::enumerate_block;

    fn mono(v: &[i64]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn single(m: &[i64], c: i64) -> IntChain {
        let mut x = IntChain::new();
        add_term(&mut x, mono(m), c);
        x
    }

    #[test]
    fn differential_examples() {
        let d = Operator::Differential;
        assert!(d.apply_monomial(2, &mono(&[5])).unwrap().is_empty());
        assert_eq!(d.apply_monomial(2, &mono(&[2, 3])).unwrap(), single(&[5], 1));
        assert!(d.apply_monomial(-1, &mono(&[-1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn codifferential_examples() {
        let dl = Operator::Codifferential;
        assert_eq!(dl.apply_monomial(1, &mono(&[5])).unwrap(), single(&[2, 3], 1));
        assert_eq!(dl.apply_monomial(2, &mono(&[5])).unwrap(), single(&[2, 3], 1));
        assert!(dl.apply_monomial(3, &mono(&[5])).unwrap().is_empty());
        assert_eq!(dl.apply_monomial(0, &mono(&[1])).unwrap(), single(&[0, 1], 1));
        assert!(dl.apply_monomial(1, &mono(&[1])).unwrap().is_empty());
    }

    #[test]
    fn adjoint_examples() {
        let raise = Operator::sl2(Sl2Generator::Raise);
        let lower = Operator::sl2(Sl2Generator::Lower);
        let cartan = Operator::sl2(Sl2Generator::Cartan);
        assert_eq!(raise.apply_monomial(-1, &mono(&[-1])).unwrap(), single(&[0], 1));
        assert_eq!(lower.apply_monomial(2, &mono(&[4])).unwrap(), single(&[3], -1));
        assert!(cartan.apply_monomial(2, &mono(&[2, 4])).unwrap().is_empty());
        assert!(raise.apply_monomial(2, &mono(&[4, 7, 10])).unwrap().is_empty());
        // e_{-1} pushes e_0 out of L_0
        assert_eq!(
            lower.apply_monomial(0, &mono(&[0])),
            Err(Error::IndexBelowCutoff { k: 0, index: -1 })
        );
    }

    #[test]
    fn rejects_foreign_monomials() {
        assert!(Operator::Differential.apply_monomial(2, &mono(&[1, 5])).is_err());
        assert!(Operator::Conjugate(0).apply_monomial(2, &mono(&[5])).is_err());
    }

    #[test]
    fn matrix_restricted_from_two_to_one_chains() {
        let block = enumerate_block(2, 2, None).unwrap();
        let two = block.restrict(Some(2), None);
        let one = block.restrict(Some(1), None);
        let m = matrix_of(Operator::Differential, 2, &two, &one).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        // d(e_2∧e_3) = e_5, d(e_2∧e_4) = −e_6, d(e_3∧e_4) = e_7
        let expected = [(&[2, 3][..], 5, 1), (&[2, 4][..], 6, -1), (&[3, 4][..], 7, 1)];
        let mut dense = vec![vec![0; 3]; 3];
        for (src, dst, c) in expected {
            let j = two.position(&mono(src)).unwrap();
            let i = one.position(&mono(&[dst])).unwrap();
            dense[i][j] = c;
        }
        assert_eq!(m.to_dense(), dense);
        // image outside the target block
        assert!(matches!(
            matrix_of(Operator::Differential, 2, &two, &two),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn cartan_is_weight_times_identity() {
        let block = enumerate_block(-1, 2, Some(1)).unwrap();
        let m = matrix_of(Operator::sl2(Sl2Generator::Cartan), -1, &block, &block).unwrap();
        assert_eq!(m, IntMatrix::identity(block.len()).scaled(1));
    }
}
