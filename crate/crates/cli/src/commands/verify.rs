//! `verify`: recheck a certificate from scratch.
//!
//! The verifier never trusts the reports embedded in the certificate: it
//! rebuilds the graph, replays the labels onto it, and recomputes every
//! weight and property. Embedded reports, when present, are then compared
//! against the recomputation and any drift is itself a failure.

use std::path::Path;

use antimagic_core::WeightGroup;

use crate::certificate::Certificate;
use crate::commands::{read_certificate, tag_report};
use crate::CliError;

pub fn cmd_verify(path: &Path) -> Result<(), CliError> {
    let certificate = read_certificate(path)?;
    let labeling = certificate
        .to_labeling()
        .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;

    let graph = labeling.graph();
    let bijection = labeling.check_total_bijection();
    let properties = tag_report(&labeling);
    let weights = labeling.weight_report();

    println!(
        "graph: {} ({} vertices, {} edges, labels 1..{})",
        graph,
        graph.vertex_count(),
        graph.edge_count(),
        graph.element_count()
    );
    println!("construction: {}", certificate.provenance.construction);

    let mut failures: Vec<String> = Vec::new();

    if bijection.is_bijection() {
        println!("bijection onto 1..p+q: ok");
    } else {
        let detail = bijection_detail(&bijection);
        println!("bijection onto 1..p+q: FAILED ({detail})");
        failures.push(format!("labels are not a bijection ({detail})"));
    }
    println!(
        "super (vertices take 1..p): {}",
        yes_no(properties.is_super)
    );

    report_class(
        "edge weights",
        properties.is_eat,
        &weights.duplicate_edge_weight_groups,
        &mut failures,
    );
    report_class(
        "vertex weights",
        properties.is_vat,
        &weights.duplicate_vertex_weight_groups,
        &mut failures,
    );
    println!("totally antimagic: {}", yes_no(properties.is_tat));

    for (class, verdict) in &properties.class_orderings {
        println!("ordering {class}: {}", verdict.as_str());
    }
    println!("weak-ordered: {}", yes_no(properties.is_weak_ordered));

    match &certificate.reports {
        None => println!("embedded reports: none"),
        Some(embedded) => {
            let recomputed = Certificate::recompute_reports(&labeling);
            if *embedded == recomputed {
                println!("embedded reports: match recomputation");
            } else {
                println!("embedded reports: DO NOT match recomputation");
                failures.push(
                    "embedded reports disagree with recomputation; \
                     the certificate was edited or produced by a defective writer"
                        .to_string(),
                );
            }
        }
    }

    if !properties.is_tat && bijection.is_bijection() {
        failures.push("labeling is not totally antimagic".to_string());
    }

    if failures.is_empty() {
        println!("verdict: PASS");
        Ok(())
    } else {
        println!("verdict: FAIL");
        Err(CliError::Verification(failures.join("; ")))
    }
}

fn report_class(
    what: &str,
    distinct: bool,
    groups: &[WeightGroup<impl std::fmt::Display>],
    failures: &mut Vec<String>,
) {
    if distinct {
        println!("{what} pairwise distinct: ok");
    } else {
        let shown = groups
            .iter()
            .take(3)
            .map(|g| {
                format!(
                    "{} on {}",
                    g.weight,
                    g.members
                        .iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        let suffix = if groups.len() > 3 {
            format!("; and {} more groups", groups.len() - 3)
        } else {
            String::new()
        };
        println!("{what} pairwise distinct: FAILED (repeated {shown}{suffix})");
        failures.push(format!("{what} repeat ({shown}{suffix})"));
    }
}

fn bijection_detail(check: &antimagic_core::BijectionCheck) -> String {
    let mut parts = Vec::new();
    if !check.missing.is_empty() {
        parts.push(format!("missing {}", join_i64(&check.missing)));
    }
    if !check.duplicated.is_empty() {
        parts.push(format!("duplicated {}", join_i64(&check.duplicated)));
    }
    if !check.out_of_range.is_empty() {
        parts.push(format!("out of range {}", join_i64(&check.out_of_range)));
    }
    parts.join("; ")
}

fn join_i64(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
