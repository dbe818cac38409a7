//! `sweep`: run a construction over a parameter range and emit a CSV report.
//!
//! Every requested point becomes exactly one CSV row, in a fixed order
//! (n-major, then m), regardless of `--jobs`; parallelism only changes how
//! fast the rows are computed. A point that fails any check still produces
//! its row — the exit code reports whether the whole sweep was clean.
//!
//! Row fields never contain commas or quotes, so the CSV needs no escaping;
//! lists inside a failure token are separated with `;`.

use std::path::PathBuf;

use antimagic_core::{
    construct_knm_forced, construct_knm_join_forced, construct_knn_forced,
    construct_knn_join_forced, cross_check, knm_case, ConstructionCase, ConstructionError,
    TotalLabeling, WeightGroup,
};
use rayon::prelude::*;

use crate::commands::{family_name, tag_report, write_output, Family};
use crate::CliError;

/// Default sweep bounds; larger ranges need `--override-bounds`.
const MAX_N: u32 = 64;
const MAX_M: u32 = 48;

pub struct SweepOptions {
    pub family: Family,
    pub n: String,
    pub m: Option<String>,
    pub force: bool,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub override_bounds: bool,
}

pub fn cmd_sweep(opts: &SweepOptions) -> Result<(), CliError> {
    let points = sweep_points(opts)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Runtime(format!("cannot build thread pool: {e}")))?;
    let rows: Vec<SweepRow> = pool.install(|| {
        points
            .par_iter()
            .map(|&(n, m)| evaluate_point(opts.family, n, m, opts.force))
            .collect()
    });

    let mut csv = String::from(HEADER);
    for row in &rows {
        csv.push_str(&row.to_csv_line());
    }
    write_output(opts.output.as_deref(), &csv)?;

    let failed: Vec<&SweepRow> = rows.iter().filter(|r| !r.passes).collect();
    eprintln!(
        "swept {} points: {} passed, {} failed",
        rows.len(),
        rows.len() - failed.len(),
        failed.len()
    );
    if failed.is_empty() {
        Ok(())
    } else {
        let shown = failed
            .iter()
            .take(5)
            .map(|r| {
                format!(
                    "K{{{},{}}}{}: {}",
                    r.n,
                    r.m,
                    apex_suffix(opts.family),
                    r.failure
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        let suffix = if failed.len() > 5 {
            format!("; and {} more", failed.len() - 5)
        } else {
            String::new()
        };
        Err(CliError::Verification(format!(
            "{} of {} points failed: {shown}{suffix}",
            failed.len(),
            rows.len()
        )))
    }
}

fn apex_suffix(family: Family) -> &'static str {
    if family.has_apex() {
        "+K1"
    } else {
        ""
    }
}

/// Expand the requested ranges into the ordered point list.
fn sweep_points(opts: &SweepOptions) -> Result<Vec<(u32, u32)>, CliError> {
    let (n_lo, n_hi) = parse_range(&opts.n)?;
    if opts.family.is_square() {
        if opts.m.is_some() {
            return Err(CliError::Usage(format!(
                "--family {} sweeps a single side size; drop --m",
                family_name(opts.family)
            )));
        }
        check_bound("n", n_hi, MAX_N, opts.override_bounds)?;
        return Ok((n_lo..=n_hi).map(|n| (n, n)).collect());
    }

    let m_spec = opts.m.as_deref().ok_or_else(|| {
        CliError::Usage(format!(
            "--family {} needs both --n and --m ranges",
            family_name(opts.family)
        ))
    })?;
    let (m_lo, m_hi) = parse_range(m_spec)?;
    check_bound("n", n_hi, MAX_N, opts.override_bounds)?;
    check_bound("m", m_hi, MAX_M, opts.override_bounds)?;

    let mut points = Vec::new();
    for n in n_lo..=n_hi {
        for m in m_lo..=m_hi {
            if n != m {
                points.push((n, m));
            }
        }
    }
    if points.is_empty() {
        return Err(CliError::Usage(
            "the requested ranges contain no points (equal side sizes are skipped)".to_string(),
        ));
    }
    Ok(points)
}

/// Parse `"4"` or `"4..64"` (inclusive on both ends).
fn parse_range(spec: &str) -> Result<(u32, u32), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid range {spec:?}: expected a size like 8 or an inclusive range like 4..64"
        ))
    };
    let (lo, hi) = match spec.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse::<u32>().map_err(|_| bad())?,
            hi.trim().parse::<u32>().map_err(|_| bad())?,
        ),
        None => {
            let v = spec.trim().parse::<u32>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn check_bound(name: &str, hi: u32, max: u32, overridden: bool) -> Result<(), CliError> {
    if hi > max && !overridden {
        return Err(CliError::Usage(format!(
            "{name} = {hi} exceeds the default sweep bound {max}; \
             pass --override-bounds to sweep it anyway"
        )));
    }
    Ok(())
}

const HEADER: &str = "family,case,n,m,p,q,is_bijection,is_super,is_eat,is_vat,is_tat,\
                      ordering_u,ordering_v,ordering_apex,is_weak_ordered,\
                      min_edge_weight,max_edge_weight,min_vertex_weight,max_vertex_weight,\
                      formula_mismatches,passes,failure\n";

struct SweepRow {
    family: &'static str,
    case: String,
    n: u32,
    m: u32,
    p: usize,
    q: usize,
    verdicts: Option<RowVerdicts>,
    passes: bool,
    failure: String,
}

struct RowVerdicts {
    is_bijection: bool,
    is_super: bool,
    is_eat: bool,
    is_vat: bool,
    is_tat: bool,
    ordering_u: &'static str,
    ordering_v: &'static str,
    ordering_apex: &'static str,
    is_weak_ordered: bool,
    min_edge_weight: i64,
    max_edge_weight: i64,
    min_vertex_weight: i64,
    max_vertex_weight: i64,
    formula_mismatches: usize,
}

impl SweepRow {
    fn to_csv_line(&self) -> String {
        match &self.verdicts {
            Some(v) => format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                self.family,
                self.case,
                self.n,
                self.m,
                self.p,
                self.q,
                v.is_bijection,
                v.is_super,
                v.is_eat,
                v.is_vat,
                v.is_tat,
                v.ordering_u,
                v.ordering_v,
                v.ordering_apex,
                v.is_weak_ordered,
                v.min_edge_weight,
                v.max_edge_weight,
                v.min_vertex_weight,
                v.max_vertex_weight,
                v.formula_mismatches,
                self.passes,
                self.failure
            ),
            None => format!(
                "{},{},{},{},{},{},,,,,,,,,,,,,,,{},{}\n",
                self.family, self.case, self.n, self.m, self.p, self.q, self.passes, self.failure
            ),
        }
    }
}

fn evaluate_point(family: Family, n: u32, m: u32, force: bool) -> SweepRow {
    let family_str = family_name(family);
    let (labeling, case) = match build_for_sweep(family, n, m, force) {
        Ok(pair) => pair,
        Err(err) => {
            return SweepRow {
                family: family_str,
                case: case_name_for(family, n, m),
                n,
                m,
                p: 0,
                q: 0,
                verdicts: None,
                passes: false,
                failure: format!("construction_rejected[{}]", sanitize(&err.to_string())),
            }
        }
    };

    let graph = labeling.graph();
    let properties = tag_report(&labeling);
    let weights = labeling.weight_report();
    let mismatches = match cross_check(case) {
        Ok(list) => list,
        Err(err) => {
            return SweepRow {
                family: family_str,
                case: case.as_str().to_string(),
                n,
                m,
                p: graph.vertex_count(),
                q: graph.edge_count(),
                verdicts: None,
                passes: false,
                failure: format!("formula_check_failed[{}]", sanitize(&err.to_string())),
            }
        }
    };

    let ordering = |name: &str| -> &'static str {
        properties
            .class_orderings
            .iter()
            .find(|(class, _)| class == name)
            .map(|(_, v)| v.as_str())
            .unwrap_or("")
    };

    let edge_weights = labeling.all_edge_weights();
    let vertex_weights = labeling.all_vertex_weights();

    let mut failure_tokens = Vec::new();
    if !properties.is_bijection {
        failure_tokens.push("not_a_bijection".to_string());
    }
    // Joined graphs label the apex above p, so `super` only gates the
    // bipartite families.
    if !family.has_apex() && !properties.is_super {
        failure_tokens.push("not_super".to_string());
    }
    if !properties.is_eat {
        failure_tokens.push(duplicate_token(
            "duplicate_edge_weights",
            &weights.duplicate_edge_weight_groups,
        ));
    }
    if !properties.is_vat {
        failure_tokens.push(duplicate_token(
            "duplicate_vertex_weights",
            &weights.duplicate_vertex_weight_groups,
        ));
    }
    // Weak ordering is only claimed for the bipartite schemes; join rows are
    // judged on total antimagicness alone (its failure shows up as the
    // duplicate-weight tokens above).
    if !family.has_apex() && !properties.is_weak_ordered {
        let classes = properties
            .class_orderings
            .iter()
            .filter(|(_, v)| !v.is_monotone())
            .map(|(class, v)| format!("{class}={}", v.as_str()))
            .collect::<Vec<_>>()
            .join(";");
        failure_tokens.push(format!("not_weak_ordered[{classes}]"));
    }
    if !mismatches.is_empty() {
        let shown = mismatches
            .iter()
            .take(2)
            .map(|mm| format!("{}@{}", mm.formula.as_str(), mm.element))
            .collect::<Vec<_>>()
            .join(";");
        failure_tokens.push(format!(
            "formula_mismatches[{shown}{}]",
            if mismatches.len() > 2 { ";..." } else { "" }
        ));
    }

    let passes = if family.has_apex() {
        properties.is_bijection && properties.is_tat && mismatches.is_empty()
    } else {
        properties.is_bijection
            && properties.is_super
            && properties.is_eat
            && properties.is_vat
            && properties.is_weak_ordered
            && mismatches.is_empty()
    };

    SweepRow {
        family: family_str,
        case: case.as_str().to_string(),
        n,
        m,
        p: graph.vertex_count(),
        q: graph.edge_count(),
        verdicts: Some(RowVerdicts {
            is_bijection: properties.is_bijection,
            is_super: properties.is_super,
            is_eat: properties.is_eat,
            is_vat: properties.is_vat,
            is_tat: properties.is_tat,
            ordering_u: ordering("U"),
            ordering_v: ordering("V"),
            ordering_apex: ordering("APEX"),
            is_weak_ordered: properties.is_weak_ordered,
            min_edge_weight: *edge_weights.iter().min().expect("graph has edges"),
            max_edge_weight: *edge_weights.iter().max().expect("graph has edges"),
            min_vertex_weight: *vertex_weights.iter().min().expect("graph has vertices"),
            max_vertex_weight: *vertex_weights.iter().max().expect("graph has vertices"),
            formula_mismatches: mismatches.len(),
        }),
        passes,
        failure: failure_tokens.join(";"),
    }
}

fn build_for_sweep(
    family: Family,
    n: u32,
    m: u32,
    force: bool,
) -> Result<(TotalLabeling, ConstructionCase), ConstructionError> {
    match family {
        Family::Knn => {
            if !force && n <= 3 {
                return Err(ConstructionError::BelowKnnBound(n));
            }
            construct_knn_forced(n).map(|l| (l, ConstructionCase::Knn { n }))
        }
        Family::Knm => {
            let case = knm_case(n, m)?;
            if !force && (n < 3 || m < 3) {
                return Err(ConstructionError::BelowKnmBound { n, m });
            }
            construct_knm_forced(n, m).map(|l| (l, case))
        }
        Family::KnnJoin => {
            if !force && n <= 3 {
                return Err(ConstructionError::BelowKnnBound(n));
            }
            construct_knn_join_forced(n).map(|l| (l, ConstructionCase::KnnJoin { n }))
        }
        Family::KnmJoin => {
            knm_case(n, m)?;
            if !force && (n < 3 || m < 3) {
                return Err(ConstructionError::BelowKnmBound { n, m });
            }
            construct_knm_join_forced(n, m).map(|l| (l, ConstructionCase::KnmJoin { n, m }))
        }
    }
}

/// Best-effort case name for rows whose construction was rejected.
fn case_name_for(family: Family, n: u32, m: u32) -> String {
    match family {
        Family::Knn => "knn".to_string(),
        Family::KnnJoin => "knn_join".to_string(),
        Family::KnmJoin => "knm_join".to_string(),
        Family::Knm => knm_case(n, m)
            .map(|c| c.as_str().to_string())
            .unwrap_or_default(),
    }
}

fn duplicate_token(kind: &str, groups: &[WeightGroup<impl std::fmt::Display>]) -> String {
    let shown = groups
        .iter()
        .take(2)
        .map(|g| {
            let members = g
                .members
                .iter()
                .take(4)
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";");
            format!("{}@{members}", g.weight)
        })
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{kind}[{shown}{}]",
        if groups.len() > 2 { ";..." } else { "" }
    )
}

/// Keep CSV fields comma- and quote-free.
fn sanitize(message: &str) -> String {
    message.replace(',', ";").replace('"', "'")
}
