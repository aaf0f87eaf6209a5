//! Deterministic report rendering: tab-separated tables for terminals and
//! a single self-describing JSON document per run. Given identical inputs
//! and configuration the output is byte-identical regardless of how the
//! underlying computation was scheduled.

use crate::ideals::HilbertReport;
use crate::tangent::TangentReport;
use serde_json::{json, Value};

pub fn hilbert_tsv(report: &HilbertReport) -> String {
    let mut out = String::from("n\td\tdim\twitness\tcertificate\tok\n");
    for row in &report.rows {
        let witness = row
            .witness
            .map(|m| m.to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            row.weight.n, row.weight.d, row.dim, witness, row.certificate, row.ok
        ));
    }
    out.push_str(&format!("# verdict: {}\n", report.verdict));
    out
}

pub fn hilbert_json(report: &HilbertReport) -> Value {
    json!({
        "config": {
            "p": report.p,
            "q": report.q,
            "m": report.m,
            "variant": report.variant.to_string(),
            "s": report.s.to_string(),
            "n_min": report.n_min,
            "n_max": report.n_max,
            "degree_bound": report.degree_bound,
        },
        "rows": report.rows.iter().map(|r| json!({
            "n": r.weight.n,
            "d": r.weight.d,
            "dim": r.dim,
            "witness": r.witness.map(|m| m.to_string()),
            "certificate": r.certificate,
            "ok": r.ok,
        })).collect::<Vec<_>>(),
        "verdict": report.verdict.to_string(),
    })
}

pub fn tangent_tsv(report: &TangentReport) -> String {
    let mut out = format!(
        "dimension\t{}\nhypersurface_constraint\t{}\ndegree_bound\t{}\n",
        report.dimension, report.hypersurface_constraint_present, report.degree_bound
    );
    for row in &report.constraint_basis {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("constraint\t{}\n", cells.join("\t")));
    }
    out
}

pub fn tangent_json(report: &TangentReport) -> Value {
    json!({
        "dimension": report.dimension,
        "hypersurface_constraint_present": report.hypersurface_constraint_present,
        "degree_bound": report.degree_bound,
        "constraints": report.constraint_basis.iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}
