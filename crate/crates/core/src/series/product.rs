use super::{Ring, TruncatedSeries};
use crate::error::{Error, Result};

/// A polynomial factor `Σ cᵢ x^{eᵢ}`, or its reciprocal.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyFactor<R: Ring> {
    pub terms: Vec<(usize, R)>,
    pub inverted: bool,
}

impl<R: Ring> PolyFactor<R> {
    pub fn new(terms: Vec<(usize, R)>) -> Self {
        PolyFactor { terms, inverted: false }
    }

    pub fn inverse(terms: Vec<(usize, R)>) -> Self {
        PolyFactor { terms, inverted: true }
    }

    /// `1 + c·x^e`
    pub fn binomial(c: R, e: usize) -> Self {
        PolyFactor::new(vec![(0, R::one()), (e, c)])
    }

    fn as_series(&self, order: usize) -> Result<TruncatedSeries<R>> {
        let s = TruncatedSeries::from_terms(self.terms.iter().cloned(), order);
        if self.inverted {
            s.inverse()
        } else {
            Ok(s)
        }
    }

    /// Whether the factor is `1 + O(x^a)`.
    fn is_one_below(&self, a: usize) -> bool {
        let mut constant = R::zero();
        for (e, c) in &self.terms {
            if *e == 0 {
                constant = constant.plus(c);
            } else if *e < a && !c.is_zero() {
                return false;
            }
        }
        constant == R::one()
    }
}

type Tail<R> = Box<dyn Fn(usize) -> PolyFactor<R> + Send + Sync>;

/// `∏` of finitely many explicit factors times `∏_{a ≥ start} factor(a)`.
/// Tail factors must be `1 + O(x^a)`, so only `a < N` contribute below the
/// order `N`.
pub struct ProductFamily<R: Ring> {
    prefix: Vec<PolyFactor<R>>,
    tail_start: usize,
    tail: Option<Tail<R>>,
}

impl<R: Ring> ProductFamily<R> {
    pub fn finite(prefix: Vec<PolyFactor<R>>) -> Self {
        ProductFamily { prefix, tail_start: 0, tail: None }
    }

    pub fn tail(start: usize, f: impl Fn(usize) -> PolyFactor<R> + Send + Sync + 'static) -> Self {
        ProductFamily { prefix: Vec::new(), tail_start: start, tail: Some(Box::new(f)) }
    }

    pub fn with_prefix(mut self, prefix: Vec<PolyFactor<R>>) -> Self {
        self.prefix = prefix;
        self
    }
}

/// Exact truncated product of several families.
pub fn euler_product<R: Ring>(families: &[ProductFamily<R>], order: usize) -> Result<TruncatedSeries<R>> {
    let mut acc = TruncatedSeries::one(order);
    for fam in families {
        for f in &fam.prefix {
            acc = acc.times(&f.as_series(order)?);
        }
        let Some(tail) = &fam.tail else { continue };
        if fam.tail_start == 0 {
            return Err(Error::invalid(
                "a tail starting at a = 0 has infinitely many x-degree-0 factors",
            ));
        }
        for a in fam.tail_start..order.max(fam.tail_start) + 2 {
            let f = tail(a);
            if !f.is_one_below(a) {
                return Err(Error::invalid(format!(
                    "tail factor at a = {a} is not 1 + O(x^{a}); the product does not truncate"
                )));
            }
            if a < order {
                acc = acc.times(&f.as_series(order)?);
            }
        }
    }
    Ok(acc)
}
