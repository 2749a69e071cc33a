use serde_json::{json, Value};

use crate::commands::{CertifyOutput, CharpolyReport, InvariantsReport};
use irreducibility::{AlgorithmOutcome, Conclusion};
use surface_model::BadPrimesReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

fn poly_json(q: &exact_algebra::RatPoly) -> Value {
    Value::Array(
        q.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn render_charpoly(report: &CharpolyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| match &r.poly {
                    Some(q) => {
                        let mut obj = json!({
                            "p": r.p,
                            "bad": false,
                            "coeffs": poly_json(q),
                            "poly": q.to_string_var("x"),
                        });
                        if let Some((pred, counted)) = r.oracle {
                            obj["oracle"] = json!({
                                "predicted": pred,
                                "counted": counted,
                                "ok": pred == counted,
                            });
                        }
                        obj
                    }
                    None => json!({"p": r.p, "bad": true}),
                })
                .collect();
            let doc = json!({"surface": report.surface, "rows": rows});
            serde_json::to_string_pretty(&doc).unwrap()
        }
        Format::Markdown => {
            let oracle = report.rows.iter().any(|r| r.oracle.is_some());
            let mut out = format!("# Characteristic polynomials: {}\n\n", report.surface);
            out.push_str(if oracle {
                "| p | Q_p(x) | F_p^3 oracle |\n|---|---|---|\n"
            } else {
                "| p | Q_p(x) |\n|---|---|\n"
            });
            for r in &report.rows {
                let cell = match &r.poly {
                    Some(q) => q.to_string_var("x"),
                    None => "bad prime".to_string(),
                };
                if oracle {
                    let o = match r.oracle {
                        Some((pred, counted)) if pred == counted => format!("ok ({counted})"),
                        Some((pred, counted)) => format!("MISMATCH {pred} != {counted}"),
                        None => String::new(),
                    };
                    out.push_str(&format!("| {} | {} | {} |\n", r.p, cell, o));
                } else {
                    out.push_str(&format!("| {} | {} |\n", r.p, cell));
                }
            }
            out
        }
    }
}

fn outcome_json(o: &AlgorithmOutcome) -> Value {
    serde_json::to_value(o).unwrap()
}

pub fn render_certificate(out: &CertifyOutput, format: Format) -> String {
    let c = &out.certificate;
    match format {
        Format::Json => {
            let charpolys: Vec<Value> = out
                .charpolys
                .iter()
                .map(|(p, q)| json!({"p": p, "coeffs": poly_json(q)}))
                .collect();
            let doc = json!({
                "surface": c.surface,
                "s": {"values": c.s, "origin": c.s_origin},
                "charpolys": charpolys,
                "alg1": outcome_json(&c.alg1),
                "alg2": outcome_json(&c.alg2),
                "alg3": outcome_json(&c.alg3),
                "conclusion": match c.conclusion {
                    Conclusion::LieIrreducibleSo5 => "LIE_IRREDUCIBLE_ALMOST_ALL_L_SO5",
                    Conclusion::InconclusiveUpToBound => "INCONCLUSIVE_UP_TO_BOUND",
                },
                "assumptions": c.assumptions,
            });
            serde_json::to_string_pretty(&doc).unwrap()
        }
        Format::Markdown => {
            let mut md = format!("# Certificate: {}\n\n", c.surface);
            md.push_str(&format!(
                "Bad primes S = {:?} ({})\n\n",
                c.s, c.s_origin
            ));
            md.push_str(&format!(
                "- Algorithm 1: {} (witness p = {}, least p = {})\n",
                status(c.alg1.terminated),
                opt(c.alg1.witness),
                opt(c.alg1.least)
            ));
            for (label, o) in [("Algorithm 2 (real fields)", &c.alg2), ("Algorithm 3 (imaginary fields)", &c.alg3)] {
                md.push_str(&format!("- {}: {}\n", label, status(o.terminated)));
                for f in &o.fields {
                    md.push_str(&format!(
                        "    - m = {}: witness p = {} (least p = {})\n",
                        f.m,
                        opt(f.witness),
                        opt(f.least)
                    ));
                }
            }
            md.push_str(&format!(
                "\nConclusion: {}\n",
                match c.conclusion {
                    Conclusion::LieIrreducibleSo5 =>
                        "Lie irreducible for all but finitely many primes; monodromy SO(5)",
                    Conclusion::InconclusiveUpToBound => "inconclusive up to the scan bound",
                }
            ));
            md.push_str("\nAssumptions (asserted, not recomputed):\n");
            for a in &c.assumptions {
                md.push_str(&format!("- {a}\n"));
            }
            md
        }
    }
}

fn status(terminated: bool) -> &'static str {
    if terminated {
        "terminated"
    } else {
        "did not terminate"
    }
}

fn opt(p: Option<u64>) -> String {
    match p {
        Some(p) => p.to_string(),
        None => "-".to_string(),
    }
}

pub fn render_invariants(r: &InvariantsReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "surface": r.surface,
            "a": r.inv.a,
            "e": r.inv.e,
            "chi": r.inv.chi,
            "p_g": r.inv.p_g,
            "ntriv_rank": r.inv.ntriv_rank,
            "rho_at_rank0": r.rho_at_rank0,
        }))
        .unwrap(),
        Format::Markdown => format!(
            "# Invariants: {}\n\n\
             - weight a = {}\n- Euler number e = {}\n- chi = {}\n- p_g = {}\n\
             - non-trivial rank = {}\n- Picard number at Mordell-Weil rank 0: {}\n",
            r.surface, r.inv.a, r.inv.e, r.inv.chi, r.inv.p_g, r.inv.ntriv_rank, r.rho_at_rank0
        ),
    }
}

pub fn render_badprimes(surface: &str, r: &BadPrimesReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "surface": surface,
            "candidates": r.candidates.iter().collect::<Vec<_>>(),
            "refined": r.refined.iter().collect::<Vec<_>>(),
            "two_refined_heuristically": r.two_refined_heuristically,
            "notes": r.notes,
        }))
        .unwrap(),
        Format::Markdown => {
            let mut md = format!("# Bad primes: {surface}\n\n");
            md.push_str(&format!("- candidates: {:?}\n", r.candidates));
            md.push_str(&format!("- refined: {:?}\n", r.refined));
            if r.two_refined_heuristically {
                md.push_str("- note: the status of p = 2 was decided heuristically\n");
            }
            for n in &r.notes {
                md.push_str(&format!("- {n}\n"));
            }
            md
        }
    }
}
