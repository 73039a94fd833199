use rayon::prelude::*;

use afflap_core::identities::verify;
use afflap_core::laplacian::{
    assemble_spectrum, expected_homology, factor_block, subblock_keys, subblock_spectrum,
};
use afflap_core::sl2::{cg_singular_vector, cg_tensor, singular_block_dims, tensor_raise};
use afflap_core::{enumerate_block, harmonic_basis, predicted_lambda, IdentityId, WeightModuleView};

use crate::args::{RunConfig, Task};
use crate::error::CliError;
use crate::report::*;
use crate::Outcome;

/// Runs the configured task.  Work items are evaluated in parallel and
/// collected in their enumeration order, so the result never depends on
/// scheduling.
pub fn dispatch(config: &RunConfig) -> Result<(Envelope, Outcome), CliError> {
    let results = match config.command {
        Task::Spectrum => spectrum(config)?,
        Task::Homology => homology(config)?,
        Task::Verify => identities(config)?,
        Task::Singular => singular(config)?,
    };
    let envelope = Envelope::new(config, results);
    let outcome = if envelope.failure_summary().is_some() { Outcome::Failed } else { Outcome::Passed };
    Ok((envelope, outcome))
}

fn required<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{name} is required")))
}

/// All `(h, q, w)` sub-blocks with `h ≤ h_max`.
fn block_jobs(k: i64, h_max: i64) -> Result<Vec<(i64, usize, i64)>, CliError> {
    let per_h: Vec<_> = (0..=h_max).into_par_iter().map(|h| subblock_keys(k, h).map(|keys| (h, keys))).collect();
    let mut jobs = Vec::new();
    for entry in per_h {
        let (h, keys) = entry?;
        jobs.extend(keys.into_iter().map(|(q, w)| (h, q, w)));
    }
    Ok(jobs)
}

/// Evaluates `f` on every job in parallel and returns the results in job
/// order, or the first error in that order.
fn ordered<J: Sync, T: Send>(
    jobs: &[J],
    f: impl Fn(&J) -> Result<T, CliError> + Sync + Send,
) -> Result<Vec<T>, CliError> {
    jobs.par_iter().map(f).collect::<Vec<_>>().into_iter().collect()
}

fn spectrum(config: &RunConfig) -> Result<Vec<ResultRecord>, CliError> {
    let k = required(config.k, "--k")?;
    let h_max = required(config.h_max, "--h-max")?;
    let jobs = block_jobs(k, h_max)?;
    if k > 2 {
        return ordered(&jobs, |&(h, q, w)| {
            let (charpoly, factors) = factor_block(k, h, q, w)?;
            Ok(ResultRecord::Factorization(FactorizationRecord {
                k,
                q,
                w,
                h,
                dim: charpoly.degree().unwrap_or(0),
                charpoly: charpoly.to_string(),
                factors: factors
                    .iter()
                    .map(|f| FactorRecord {
                        factor: f.poly.to_string(),
                        multiplicity: f.multiplicity,
                        irreducible: f.irreducible,
                    })
                    .collect(),
            }))
        });
    }
    let pieces = ordered(&jobs, |&(h, q, w)| Ok((h, subblock_spectrum(k, h, q, w)?)))?;
    let mut records = Vec::new();
    for h in 0..=h_max {
        let blocks: Vec<_> = pieces.iter().filter(|(h2, _)| *h2 == h).flat_map(|(_, b)| b.clone()).collect();
        let s = assemble_spectrum(k, h, blocks);
        records.push(ResultRecord::Spectrum(SpectrumRecord {
            k,
            h,
            dim: s.dim,
            blocks: s.eigenvalues.iter().map(|&(lambda, mult)| LambdaMult { lambda, mult }).collect(),
            refinement: s
                .blocks
                .iter()
                .map(|b| Refinement {
                    q: b.q,
                    w: b.w,
                    dominant_weight: b.dominant_weight,
                    lambda: b.lambda,
                    mult: b.mult,
                    harmonic: b.harmonic_basis.iter().map(chain_terms).collect(),
                })
                .collect(),
        }));
    }
    Ok(records)
}

fn homology(config: &RunConfig) -> Result<Vec<ResultRecord>, CliError> {
    let k = required(config.k, "--k")?;
    let h_max = required(config.h_max, "--h-max")?;
    let expected = if (-1..=2).contains(&k) { Some(expected_homology(k, h_max)?) } else { None };
    let jobs = block_jobs(k, h_max)?;
    let computed = ordered(&jobs, |&(h, q, w)| {
        let block = enumerate_block(k, h, Some(w))?.restrict(Some(q), None);
        Ok(((q, w, h), harmonic_basis(k, &block)?))
    })?;
    let mut records: Vec<HomologyRecord> = computed
        .into_iter()
        .filter(|(_, basis)| !basis.is_empty())
        .map(|((q, w, h), basis)| HomologyRecord {
            k,
            q,
            w,
            h,
            dim: basis.len(),
            expected: expected.as_ref().map(|e| e.get(&(q, w, h)).copied().unwrap_or(0)),
            harmonic: basis.iter().map(chain_terms).collect(),
        })
        .collect();
    // closed-form classes that were not found
    if let Some(expected) = &expected {
        for (&(q, w, h), &dim) in expected {
            if !records.iter().any(|r| (r.q, r.w, r.h) == (q, w, h)) {
                records.push(HomologyRecord { k, q, w, h, dim: 0, expected: Some(dim), harmonic: Vec::new() });
            }
        }
    }
    records.sort_by_key(|r| (r.h, r.q, r.w));
    Ok(records.into_iter().map(ResultRecord::Homology).collect())
}

fn identities(config: &RunConfig) -> Result<Vec<ResultRecord>, CliError> {
    let order = required(config.order, "--order")?;
    let ids = config
        .identities
        .iter()
        .map(|s| s.parse::<IdentityId>().map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    ordered(&ids, |&id| {
        let report = verify(id, order)?;
        Ok(ResultRecord::Identity(IdentityRecord {
            id: id.name().to_string(),
            order,
            passed: report.passed(),
            parts: report
                .parts
                .iter()
                .map(|p| PartRecord {
                    label: p.label.clone(),
                    passed: p.passed(),
                    first_mismatch: p.first_mismatch,
                    lhs: p.lhs.clone(),
                    rhs: p.rhs.clone(),
                })
                .collect(),
        }))
    })
}

fn singular(config: &RunConfig) -> Result<Vec<ResultRecord>, CliError> {
    let k = required(config.k, "--k")?;
    let h_max = required(config.h_max, "--h-max")?;
    let lambda = |w: i64, h: i64| if (-1..=2).contains(&k) { predicted_lambda(k, w, h).ok() } else { None };
    let hs: Vec<i64> = (0..=h_max).collect();
    let per_h = ordered(&hs, |&h| {
        let block = enumerate_block(k, h, None)?;
        let top = block.monomials().iter().map(|m| m.weight()).max().unwrap_or(0);
        let qs: Vec<usize> = {
            let mut v: Vec<usize> = block.monomials().iter().map(|m| m.dim()).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let view = if config.vectors { Some(WeightModuleView::from_block(&block)?) } else { None };
        let mut out = Vec::new();
        for w in 0..=top.max(0) {
            let total = singular_block_dims(k, w, h, None)?;
            if total == 0 {
                continue;
            }
            for &q in &qs {
                let dim = singular_block_dims(k, w, h, Some(q))?;
                if dim > 0 {
                    out.push(SingularRecord { k, q: Some(q), w, h, lambda: lambda(w, h), dim, vectors: Vec::new() });
                }
            }
            let vectors = view.as_ref().map_or_else(Vec::new, |v| v.singular_vectors(w).iter().map(chain_terms).collect());
            out.push(SingularRecord { k, q: None, w, h, lambda: lambda(w, h), dim: total, vectors });
        }
        Ok(out)
    })?;
    let mut records: Vec<ResultRecord> = per_h.into_iter().flatten().map(ResultRecord::Singular).collect();
    for &(a, b) in &config.cg {
        for p in 0..=a.min(b) {
            let coefficients = cg_singular_vector(a, b, p)?.iter().map(ToString::to_string).collect();
            let annihilated = tensor_raise(a, b, &cg_tensor(a, b, p)?).is_empty();
            records.push(ResultRecord::ClebschGordan(CgRecord { two_w1: a, two_w2: b, p, coefficients, annihilated }));
        }
    }
    Ok(records)
}
