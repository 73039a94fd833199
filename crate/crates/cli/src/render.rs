use std::fmt::Write as _;

use crate::args::Format;
use crate::error::CliError;
use crate::report::*;

pub fn render(envelope: &Envelope, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(envelope).map_err(|e| CliError::Internal(e.to_string()))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => csv_rows(envelope),
        Format::Text => Ok(text(envelope).into_bytes()),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn csv_rows(envelope: &Envelope) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Internal(e.to_string());
    let identities = envelope.results.iter().any(|r| matches!(r, ResultRecord::Identity(_)));
    if identities {
        w.write_record(["id", "order", "part", "passed", "first_mismatch"]).map_err(err)?;
    } else {
        w.write_record(["k", "q", "w", "h", "lambda", "dim"]).map_err(err)?;
    }
    for r in &envelope.results {
        let row: Vec<String> = match r {
            ResultRecord::Spectrum(s) => {
                for b in &s.refinement {
                    let row = [s.k.to_string(), b.q.to_string(), b.w.to_string(), s.h.to_string(), b.lambda.to_string(), b.mult.to_string()];
                    w.write_record(&row).map_err(err)?;
                }
                continue;
            }
            ResultRecord::Factorization(f) => {
                vec![f.k.to_string(), f.q.to_string(), f.w.to_string(), f.h.to_string(), String::new(), f.dim.to_string()]
            }
            ResultRecord::Homology(h) => {
                vec![h.k.to_string(), h.q.to_string(), h.w.to_string(), h.h.to_string(), "0".into(), h.dim.to_string()]
            }
            ResultRecord::Singular(s) => {
                vec![s.k.to_string(), opt(s.q), s.w.to_string(), s.h.to_string(), opt(s.lambda), s.dim.to_string()]
            }
            ResultRecord::Identity(i) => {
                for p in &i.parts {
                    let row = [i.id.clone(), i.order.to_string(), p.label.clone(), p.passed.to_string(), opt(p.first_mismatch)];
                    w.write_record(&row).map_err(err)?;
                }
                continue;
            }
            // Clebsch-Gordan vectors have no tabular form; they are in JSON
            ResultRecord::ClebschGordan(_) => continue,
        };
        w.write_record(&row).map_err(err)?;
    }
    w.into_inner().map_err(|e| CliError::Internal(e.to_string()))
}

fn chain_text(terms: &[Term]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (negative, c) = match t.coeff.strip_prefix('-') {
            Some(c) => (true, c),
            None => (false, t.coeff.as_str()),
        };
        match (i, negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let wedge: Vec<String> = t.indices.iter().map(|a| format!("e_{a}")).collect();
        match (c, wedge.is_empty()) {
            (c, true) => s.push_str(c),
            ("1", false) => s.push_str(&wedge.join("∧")),
            (c, false) => {
                let _ = write!(s, "{c} {}", wedge.join("∧"));
            }
        }
    }
    s
}

fn text(envelope: &Envelope) -> String {
    let mut out = String::new();
    for r in &envelope.results {
        match r {
            ResultRecord::Spectrum(s) => {
                let eig: Vec<String> = s.blocks.iter().map(|b| format!("{}×{}", b.lambda, b.mult)).collect();
                let _ = writeln!(out, "k={} h={} dim={} spectrum {}", s.k, s.h, s.dim, eig.join(" "));
                for b in &s.refinement {
                    for c in &b.harmonic {
                        let _ = writeln!(out, "  harmonic q={} w={}: {}", b.q, b.w, chain_text(c));
                    }
                }
            }
            ResultRecord::Factorization(f) => {
                let fs: Vec<String> = f
                    .factors
                    .iter()
                    .map(|x| {
                        let tag = if x.irreducible { "" } else { "?" };
                        if x.multiplicity > 1 {
                            format!("({}){tag}^{}", x.factor, x.multiplicity)
                        } else {
                            format!("({}){tag}", x.factor)
                        }
                    })
                    .collect();
                let _ = writeln!(out, "k={} q={} w={} h={} dim={} charpoly {}", f.k, f.q, f.w, f.h, f.dim, fs.join(" "));
            }
            ResultRecord::Homology(h) => {
                let flag = match h.expected {
                    Some(e) if e != h.dim => format!("  DEVIATION: closed form gives {e}"),
                    _ => String::new(),
                };
                let _ = writeln!(out, "H_{}^({},{})(L_{}) dim {}{flag}", h.q, h.w, h.h, h.k, h.dim);
                for c in &h.harmonic {
                    let _ = writeln!(out, "  {}", chain_text(c));
                }
            }
            ResultRecord::Identity(i) => {
                let status = if i.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{status} {} (order {})", i.id, i.order);
                for p in i.parts.iter().filter(|p| !p.passed) {
                    if let Some(n) = p.first_mismatch {
                        let _ = writeln!(out, "  {}: x^{n}: {} vs {}", p.label, p.lhs[n], p.rhs[n]);
                    }
                }
            }
            ResultRecord::Singular(s) => {
                let q = s.q.map_or_else(|| "*".to_string(), |q| q.to_string());
                let lambda = s.lambda.map_or_else(String::new, |l| format!(" λ={l}"));
                let _ = writeln!(out, "S_{q}^({},{})(L_{}) dim {}{lambda}", s.w, s.h, s.k, s.dim);
                for c in &s.vectors {
                    let _ = writeln!(out, "  {}", chain_text(c));
                }
            }
            ResultRecord::ClebschGordan(c) => {
                let status = if c.annihilated { "singular" } else { "NOT SINGULAR" };
                let _ = writeln!(out, "V({}/2) ⊗ V({}/2), p={}: [{}] {status}", c.two_w1, c.two_w2, c.p, c.coefficients.join(", "));
            }
        }
    }
    out
}
