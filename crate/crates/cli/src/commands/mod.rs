//! Subcommand implementations.
//!
//! Each `cmd_*` function takes a plain options struct (mirroring the clap
//! surface in `main.rs`) and returns `Result<(), CliError>`; the binary maps
//! errors onto process exit codes. Keeping the logic here lets integration
//! tests exercise subcommands without spawning processes, while the
//! `CARGO_BIN_EXE`-based tests cover the argv wiring.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use antimagic_core::{OrderedPartition, PropertyReport, TotalLabeling};
use clap::ValueEnum;

use crate::certificate::Certificate;
use crate::CliError;

mod construct;
mod export;
mod search;
mod sweep;
mod verify;

pub use construct::{cmd_construct, ConstructOptions};
pub use export::{cmd_export, ExportOptions};
pub use search::{cmd_search, SearchOptions};
pub use sweep::{cmd_sweep, SweepOptions};
pub use verify::cmd_verify;

/// Graph family addressed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete bipartite graph with equal sides, K{n,n}.
    Knn,
    /// Complete bipartite graph with distinct sides, K{n,m}.
    Knm,
    /// K{n,n} joined with one extra vertex.
    KnnJoin,
    /// K{n,m} joined with one extra vertex.
    KnmJoin,
}

impl Family {
    pub fn is_square(self) -> bool {
        matches!(self, Family::Knn | Family::KnnJoin)
    }

    pub fn has_apex(self) -> bool {
        matches!(self, Family::KnnJoin | Family::KnmJoin)
    }
}

/// Enumeration strategy for `search`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    /// Visit every bijection. Only feasible for tiny element counts.
    Exhaustive,
    /// Depth-first assignment with collision pruning.
    Pruned,
}

/// Output format for `export`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    /// The certificate itself, byte-identical to the input.
    Json,
    /// Graphviz source with labels and edge weights.
    Dot,
    /// One `element,label,weight` row per graph element.
    Csv,
}

/// Resolve the side sizes for a family, enforcing that square families take
/// `n` alone and rectangular families require `m`.
pub(crate) fn resolve_sides(
    family: Family,
    n: u32,
    m: Option<u32>,
) -> Result<(u32, u32), CliError> {
    if family.is_square() {
        match m {
            None => Ok((n, n)),
            Some(m) if m == n => Ok((n, n)),
            Some(m) => Err(CliError::Usage(format!(
                "--family {} takes a single side size; got --n {n} --m {m}",
                family_name(family)
            ))),
        }
    } else {
        match m {
            Some(m) => Ok((n, m)),
            None => Err(CliError::Usage(format!(
                "--family {} needs both --n and --m",
                family_name(family)
            ))),
        }
    }
}

pub(crate) fn family_name(family: Family) -> &'static str {
    match family {
        Family::Knn => "knn",
        Family::Knm => "knm",
        Family::KnnJoin => "knn-join",
        Family::KnmJoin => "knm-join",
    }
}

/// Write `content` to `path`, or to stdout when no path is given.
pub(crate) fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Runtime(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Property report over the natural side classes (`U`, `V`, and the apex
/// when present). The tag partition always covers its own graph.
pub(crate) fn tag_report(labeling: &TotalLabeling) -> PropertyReport {
    let partition = OrderedPartition::by_partition_tag(labeling.graph());
    labeling
        .property_report(&partition)
        .expect("tag partition covers the graph")
}

/// Load and parse a certificate file.
pub(crate) fn read_certificate(path: &Path) -> Result<Certificate, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
    Certificate::from_json(&text).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
}
