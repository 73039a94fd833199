use afflap_core::Chain;
use serde::Serialize;

use crate::args::RunConfig;

/// Top-level output document.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope {
    pub tool_version: &'static str,
    pub config: RunConfig,
    pub results: Vec<ResultRecord>,
}

impl Envelope {
    pub fn new(config: &RunConfig, results: Vec<ResultRecord>) -> Self {
        Envelope { tool_version: env!("CARGO_PKG_VERSION"), config: config.clone(), results }
    }

    /// A one-line description of the first failed check, if any.
    pub fn failure_summary(&self) -> Option<String> {
        self.results.iter().find_map(|r| match r {
            ResultRecord::Identity(i) if !i.passed => {
                let part = i.parts.iter().find(|p| !p.passed)?;
                Some(format!("{} fails in part `{}` at x^{}", i.id, part.label, part.first_mismatch?))
            }
            ResultRecord::Homology(h) if h.expected.is_some_and(|e| e != h.dim) => Some(format!(
                "H_{}^({},{})(L_{}) has dimension {}, closed form predicts {}",
                h.q,
                h.w,
                h.h,
                h.k,
                h.dim,
                h.expected.unwrap_or_default()
            )),
            ResultRecord::ClebschGordan(c) if !c.annihilated => {
                Some(format!("e₁ does not annihilate the CG vector ({}, {}, p = {})", c.two_w1, c.two_w2, c.p))
            }
            _ => None,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ResultRecord {
    Spectrum(SpectrumRecord),
    Factorization(FactorizationRecord),
    Homology(HomologyRecord),
    Identity(IdentityRecord),
    Singular(SingularRecord),
    ClebschGordan(CgRecord),
}

#[derive(Clone, Debug, Serialize)]
pub struct Term {
    pub indices: Vec<i64>,
    pub coeff: String,
}

pub fn chain_terms(c: &Chain) -> Vec<Term> {
    c.terms()
        .iter()
        .map(|(m, x)| Term { indices: m.indices().to_vec(), coeff: x.to_string() })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaMult {
    pub lambda: i64,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Refinement {
    pub q: usize,
    pub w: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominant_weight: Option<i64>,
    pub lambda: i64,
    pub mult: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub harmonic: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRecord {
    pub k: i64,
    pub h: i64,
    pub dim: usize,
    pub blocks: Vec<LambdaMult>,
    pub refinement: Vec<Refinement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRecord {
    pub factor: String,
    pub multiplicity: usize,
    pub irreducible: bool,
}

/// `det(t − Γ_k)` on one `(q, w, h)` block, for `k` without an eigenvalue law.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationRecord {
    pub k: i64,
    pub q: usize,
    pub w: i64,
    pub h: i64,
    pub dim: usize,
    pub charpoly: String,
    pub factors: Vec<FactorRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyRecord {
    pub k: i64,
    pub q: usize,
    pub w: i64,
    pub h: i64,
    pub dim: usize,
    pub expected: Option<usize>,
    pub harmonic: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartRecord {
    pub label: String,
    pub passed: bool,
    pub first_mismatch: Option<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityRecord {
    pub id: String,
    pub order: usize,
    pub passed: bool,
    pub parts: Vec<PartRecord>,
}

/// `dim S_q^{(w,h)}`, or the total over `q` when `q` is absent; `lambda` is
/// the Laplacian eigenvalue of the block when one is known.
#[derive(Clone, Debug, Serialize)]
pub struct SingularRecord {
    pub k: i64,
    pub q: Option<usize>,
    pub w: i64,
    pub h: i64,
    pub lambda: Option<i64>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CgRecord {
    pub two_w1: u32,
    pub two_w2: u32,
    pub p: u32,
    pub coefficients: Vec<String>,
    pub annihilated: bool,
}
