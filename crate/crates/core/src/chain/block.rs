use std::collections::{BTreeMap, HashMap};

use crate::algebra::{generator_degree, generator_weight};
use crate::chain::monomial::Monomial;
use crate::error::{Error, Result};

/// An enumerated basis of a graded piece `C^{(h)}`, `C^{(w,h)}` or
/// `C_q^{(w,h)}` of `C_*(L_k)`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockBasis {
    k: i64,
    h: i64,
    w: Option<i64>,
    q: Option<usize>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl BlockBasis {
    fn from_sorted(k: i64, h: i64, w: Option<i64>, q: Option<usize>, monomials: Vec<Monomial>) -> Self {
        debug_assert!(monomials.windows(2).all(|p| p[0] < p[1]));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        BlockBasis { k, h, w, q, monomials, index }
    }

    /// Basis of `C_q^{(w,h)}(L_k)`; any filter may be omitted.
    pub fn graded(k: i64, h: i64, w: Option<i64>, q: Option<usize>) -> Result<Self> {
        let b = enumerate_block(k, h, w)?;
        Ok(b.restrict(q, None))
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn weight(&self) -> Option<i64> {
        self.w
    }

    pub fn chain_dim(&self) -> Option<usize> {
        self.q
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

    /// Sub-basis with the given chain dimension and/or weight.
    pub fn restrict(&self, q: Option<usize>, w: Option<i64>) -> BlockBasis {
        let monomials = self
            .monomials
            .iter()
            .filter(|m| q.map_or(true, |q| m.dim() == q) && w.map_or(true, |w| m.weight() == w))
            .cloned()
            .collect();
        BlockBasis::from_sorted(self.k, self.h, w.or(self.w), q.or(self.q), monomials)
    }

    /// Splits into `(q, w)`-homogeneous pieces, keyed in increasing order.
    pub fn split(&self) -> BTreeMap<(usize, i64), BlockBasis> {
        let mut parts: BTreeMap<(usize, i64), Vec<Monomial>> = BTreeMap::new();
        for m in &self.monomials {
            parts.entry((m.dim(), m.weight())).or_default().push(m.clone());
        }
        parts
            .into_iter()
            .map(|((q, w), ms)| ((q, w), BlockBasis::from_sorted(self.k, self.h, Some(w), Some(q), ms)))
            .collect()
    }
}

/// Generators `e_a`, `a ≥ k`, with `π(e_a) ≤ h`, in increasing order
/// (so also with non-decreasing degree).
fn generators(k: i64, h: i64) -> Vec<i64> {
    (k..).take_while(|&a| generator_degree(a) <= h).collect()
}

fn check_cutoff(k: i64) -> Result<()> {
    if k < -1 {
        return Err(Error::invalid(format!("k must be ≥ -1, got {k}")));
    }
    Ok(())
}

/// Memoised count of subsets of `gens[i..]` with prescribed degree (and
/// weight, when tracked). Drives output-sensitive enumeration.
struct SubsetCounter<'a> {
    gens: &'a [i64],
    track_weight: bool,
    memo: HashMap<(usize, i64, i64), u128>,
}

impl<'a> SubsetCounter<'a> {
    fn new(gens: &'a [i64], track_weight: bool) -> Self {
        SubsetCounter { gens, track_weight, memo: HashMap::new() }
    }

    fn count(&mut self, i: usize, h: i64, w: i64) -> u128 {
        let w = if self.track_weight { w } else { 0 };
        let done = h == 0 && (!self.track_weight || w == 0);
        if i == self.gens.len() || generator_degree(self.gens[i]) > h {
            return done as u128;
        }
        // a weight can move by at most one per remaining generator
        if self.track_weight && w.unsigned_abs() as usize > self.gens.len() - i {
            return 0;
        }
        if let Some(&c) = self.memo.get(&(i, h, w)) {
            return c;
        }
        let a = self.gens[i];
        let with = self.count(i + 1, h - generator_degree(a), w - generator_weight(a));
        let without = self.count(i + 1, h, w);
        let c = with + without;
        self.memo.insert((i, h, w), c);
        c
    }
}

/// All `k`-monomials of degree `h` (and weight `w` when given), including the
/// unit monomial for `h = 0`.
pub fn enumerate_block(k: i64, h: i64, w: Option<i64>) -> Result<BlockBasis> {
    check_cutoff(k)?;
    if h < 0 {
        return Err(Error::invalid(format!("degree must be ≥ 0, got {h}")));
    }
    let gens = generators(k, h);
    let mut counter = SubsetCounter::new(&gens, w.is_some());
    let mut out = Vec::new();
    let mut current = Vec::new();
    walk(&mut counter, 0, h, w.unwrap_or(0), &mut current, &mut out);
    Ok(BlockBasis::from_sorted(k, h, w, None, out))
}

// Depth-first walk emitting in lexicographic order; only descends into
// subtrees that contain at least one solution.
fn walk(
    counter: &mut SubsetCounter<'_>,
    start: usize,
    h: i64,
    w: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Monomial>,
) {
    if h == 0 && (!counter.track_weight || w == 0) {
        out.push(Monomial::from_sorted(current.clone()));
    }
    for j in start..counter.gens.len() {
        let a = counter.gens[j];
        let pa = generator_degree(a);
        if pa > h {
            break;
        }
        let (h2, w2) = (h - pa, w - generator_weight(a));
        if counter.count(j + 1, h2, w2) == 0 {
            continue;
        }
        current.push(a);
        walk(counter, j + 1, h2, w2, current, out);
        current.pop();
    }
}

/// Dimensions `dim C_q^{(w,h)}(L_k)` for all `h ≤ h_max`, obtained by
/// counting subsets generator by generator without listing them.
#[derive(Clone, Debug)]
pub struct GradedCounts {
    k: i64,
    h_max: i64,
    // (q, w, h) -> dim
    table: HashMap<(usize, i64, i64), u128>,
    by_weight: HashMap<(i64, i64), u128>,
    by_chain_dim: HashMap<(usize, i64), u128>,
    by_degree: HashMap<i64, u128>,
}

impl GradedCounts {
    pub fn new(k: i64, h_max: i64) -> Result<Self> {
        check_cutoff(k)?;
        let mut table: HashMap<(usize, i64, i64), u128> = HashMap::new();
        table.insert((0, 0, 0), 1);
        for a in generators(k, h_max) {
            let (pa, wa) = (generator_degree(a), generator_weight(a));
            let snapshot: Vec<_> = table
                .iter()
                .filter(|(&(_, _, h), _)| h + pa <= h_max)
                .map(|(&key, &c)| (key, c))
                .collect();
            for ((q, w, h), c) in snapshot {
                *table.entry((q + 1, w + wa, h + pa)).or_insert(0) += c;
            }
        }
        let mut by_weight = HashMap::new();
        let mut by_chain_dim = HashMap::new();
        let mut by_degree = HashMap::new();
        for (&(q, w, h), &c) in &table {
            *by_weight.entry((w, h)).or_insert(0) += c;
            *by_chain_dim.entry((q, h)).or_insert(0) += c;
            *by_degree.entry(h).or_insert(0) += c;
        }
        Ok(GradedCounts { k, h_max, table, by_weight, by_chain_dim, by_degree })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn h_max(&self) -> i64 {
        self.h_max
    }

    /// `dim C_q^{(w,h)}`, summing over the omitted gradings.
    pub fn dim(&self, q: Option<usize>, w: Option<i64>, h: i64) -> u128 {
        assert!(h <= self.h_max, "degree {h} beyond counted range {}", self.h_max);
        let found = match (q, w) {
            (Some(q), Some(w)) => self.table.get(&(q, w, h)),
            (None, Some(w)) => self.by_weight.get(&(w, h)),
            (Some(q), None) => self.by_chain_dim.get(&(q, h)),
            (None, None) => self.by_degree.get(&h),
        };
        found.copied().unwrap_or(0)
    }

    /// Nonzero entries `((q, w, h), dim)` in increasing key order.
    pub fn entries(&self) -> Vec<((usize, i64, i64), u128)> {
        let mut v: Vec<_> = self.table.iter().map(|(&k, &c)| (k, c)).collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[i64]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn block_l2_degree_two() {
        let b = enumerate_block(2, 2, None).unwrap();
        let mut expect = vec![
            mono(&[5]),
            mono(&[6]),
            mono(&[7]),
            mono(&[2, 3]),
            mono(&[2, 4]),
            mono(&[3, 4]),
        ];
        expect.sort();
        assert_eq!(b.monomials(), &expect[..]);
    }

    #[test]
    fn degree_zero_is_the_unit() {
        let b = enumerate_block(2, 0, None).unwrap();
        assert_eq!(b.monomials(), &[Monomial::unit()]);
        // L_{-1} has three degree-zero generators
        assert_eq!(enumerate_block(-1, 0, None).unwrap().len(), 8);
    }

    #[test]
    fn weight_filter() {
        let b = enumerate_block(1, 1, Some(2)).unwrap();
        assert_eq!(b.monomials(), &[mono(&[1, 4])]);
    }

    #[test]
    fn rejects_bad_cutoff() {
        assert!(enumerate_block(-2, 1, None).is_err());
        assert!(GradedCounts::new(-2, 3).is_err());
        assert!(enumerate_block(0, -1, None).is_err());
    }

    // brute force: every subset of the generator window
    fn brute(k: i64, h: i64, w: Option<i64>) -> Vec<Monomial> {
        let gens: Vec<i64> = (k..=3 * h + 2).filter(|&a| generator_degree(a) <= h).collect();
        assert!(gens.len() < 22);
        let mut out = Vec::new();
        for mask in 0u32..(1 << gens.len()) {
            let idx: Vec<i64> = (0..gens.len()).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
            let m = Monomial::new(idx).unwrap();
            if m.degree() == h && w.map_or(true, |w| m.weight() == w) {
                out.push(m);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_subset_brute_force() {
        for k in -1..=4 {
            for h in 0..=5 {
                if (k..=3 * h + 2).filter(|&a| generator_degree(a) <= h).count() >= 22 {
                    continue;
                }
                assert_eq!(enumerate_block(k, h, None).unwrap().monomials(), &brute(k, h, None)[..]);
                for w in -4..=4 {
                    assert_eq!(
                        enumerate_block(k, h, Some(w)).unwrap().monomials(),
                        &brute(k, h, Some(w))[..],
                        "k={k} h={h} w={w}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_match_listing() {
        for k in -1..=3 {
            let counts = GradedCounts::new(k, 7).unwrap();
            for h in 0..=7 {
                let b = enumerate_block(k, h, None).unwrap();
                assert_eq!(counts.dim(None, None, h), b.len() as u128);
                for ((q, w), part) in b.split() {
                    assert_eq!(counts.dim(Some(q), Some(w), h), part.len() as u128);
                }
            }
        }
    }

    #[test]
    fn split_and_restrict_agree() {
        let b = enumerate_block(-1, 3, None).unwrap();
        let total: usize = b.split().values().map(|p| p.len()).sum();
        assert_eq!(total, b.len());
        let r = b.restrict(Some(2), Some(0));
        assert!(r.monomials().iter().all(|m| m.dim() == 2 && m.weight() == 0));
        assert_eq!(r.position(&r.monomials()[0]), Some(0));
    }
}
