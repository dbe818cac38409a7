//! `construct`: build a labeling for one graph and emit its certificate.
//!
//! The certificate is always written, even when the labeling fails a check —
//! the exit code carries the verdict, and the certificate carries the
//! evidence. `--force` bypasses the side-size bounds under which the schemes
//! are claimed to work, which is how the negative controls are produced.

use std::path::PathBuf;

use antimagic_core::{
    construct_knm, construct_knm_forced, construct_knm_join_candidate, construct_knm_join_forced,
    construct_knn, construct_knn_forced, construct_knn_join, construct_knn_join_forced, knm_case,
    ConstructionError, TotalLabeling,
};

use crate::certificate::Certificate;
use crate::commands::{family_name, resolve_sides, tag_report, write_output, Family};
use crate::CliError;

pub struct ConstructOptions {
    pub family: Family,
    pub n: u32,
    pub m: Option<u32>,
    pub force: bool,
    pub output: Option<PathBuf>,
}

pub fn cmd_construct(opts: &ConstructOptions) -> Result<(), CliError> {
    let (n, m) = resolve_sides(opts.family, opts.n, opts.m)?;
    let (labeling, case) = build_labeling(opts.family, n, m, opts.force)?;

    let certificate = Certificate::from_labeling(&labeling, case);
    write_output(opts.output.as_deref(), &certificate.to_json())?;

    let graph = labeling.graph();
    let properties = tag_report(&labeling);
    eprintln!(
        "constructed {} ({} vertices, {} edges, labels 1..{})",
        graph,
        graph.vertex_count(),
        graph.edge_count(),
        graph.element_count()
    );

    if properties.is_bijection && properties.is_tat {
        eprintln!("verdict: totally antimagic");
        Ok(())
    } else {
        let weights = labeling.weight_report();
        let mut reasons = Vec::new();
        if !properties.is_bijection {
            reasons.push("labels are not a bijection onto 1..p+q".to_string());
        }
        for group in &weights.duplicate_edge_weight_groups {
            reasons.push(format!(
                "edge weight {} repeats on {}",
                group.weight,
                join_display(&group.members)
            ));
        }
        for group in &weights.duplicate_vertex_weight_groups {
            reasons.push(format!(
                "vertex weight {} repeats on {}",
                group.weight,
                join_display(&group.members)
            ));
        }
        Err(CliError::Verification(format!(
            "labeling is not totally antimagic: {}",
            reasons.join("; ")
        )))
    }
}

fn build_labeling(
    family: Family,
    n: u32,
    m: u32,
    force: bool,
) -> Result<(TotalLabeling, &'static str), CliError> {
    let result = match family {
        Family::Knn => {
            let build = if force {
                construct_knn_forced
            } else {
                construct_knn
            };
            build(n).map(|l| (l, "knn"))
        }
        Family::Knm => {
            let case = knm_case(n, m).map_err(map_construction_error)?;
            let build = if force {
                construct_knm_forced
            } else {
                construct_knm
            };
            build(n, m).map(|l| (l, case.as_str()))
        }
        Family::KnnJoin => {
            let build = if force {
                construct_knn_join_forced
            } else {
                construct_knn_join
            };
            build(n).map(|l| (l, "knn_join"))
        }
        Family::KnmJoin => {
            let build = if force {
                construct_knm_join_forced
            } else {
                construct_knm_join_candidate
            };
            build(n, m).map(|l| (l, "knm_join"))
        }
    };
    result.map_err(map_construction_error)
}

fn map_construction_error(err: ConstructionError) -> CliError {
    match &err {
        ConstructionError::EqualPartitionSizes(n) => CliError::Usage(format!(
            "{err}; use --family {} for K{{{n},{n}}}",
            family_name(Family::Knn)
        )),
        ConstructionError::BelowKnnBound(_) | ConstructionError::BelowKnmBound { .. } => {
            CliError::Usage(format!("{err}; pass --force to build it anyway"))
        }
        _ => CliError::Usage(err.to_string()),
    }
}

fn join_display<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
