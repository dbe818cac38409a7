//! `search`: count antimagic labelings of a small graph by brute force.
//!
//! Two interchangeable engines back the count: full enumeration of every
//! bijection, and a depth-first search that prunes branches already carrying
//! both an edge-weight and a vertex-weight collision. Whenever a frozen
//! fixture exists for the graph, a completed search is compared against it;
//! disagreement is a hard failure, because it means one of the engines (or
//! the fixture) is wrong.
//!
//! The fixture table is compiled into the binary; set `ANTIMAGIC_FIXTURES`
//! to a directory containing `oracle_counts.txt` to check against a
//! different copy.

use antimagic_core::{
    enumerate_all, search_with_pruning, FixtureRecord, Graph, SearchResult,
    EXHAUSTIVE_ELEMENT_LIMIT,
};

use crate::commands::{resolve_sides, Family, SearchMode};
use crate::CliError;

/// Compiled-in copy of the frozen oracle counts.
const EMBEDDED_FIXTURES: &str = include_str!("../../../../fixtures/oracle_counts.txt");

/// Environment variable naming a directory with a replacement fixture file.
pub const FIXTURE_DIR_ENV: &str = "ANTIMAGIC_FIXTURES";

pub struct SearchOptions {
    pub family: Family,
    pub n: u32,
    pub m: Option<u32>,
    pub mode: SearchMode,
    pub budget: Option<u64>,
}

pub fn cmd_search(opts: &SearchOptions) -> Result<(), CliError> {
    let (n, m) = resolve_sides(opts.family, opts.n, opts.m)?;
    let graph = build_graph(opts.family, n, m)?;

    if opts.mode == SearchMode::Exhaustive && graph.element_count() > EXHAUSTIVE_ELEMENT_LIMIT {
        return Err(CliError::Usage(format!(
            "{} has {} elements; exhaustive search is capped at {} \
             (use --mode pruned, optionally with --budget)",
            graph,
            graph.element_count(),
            EXHAUSTIVE_ELEMENT_LIMIT
        )));
    }

    let result = match opts.mode {
        SearchMode::Exhaustive => {
            enumerate_all(&graph, opts.budget).map_err(|e| CliError::Usage(e.to_string()))?
        }
        SearchMode::Pruned => search_with_pruning(&graph, opts.budget),
    };

    print_result(&graph, opts.mode, &result);

    if !result.complete {
        return Err(CliError::BudgetExhausted(format!(
            "budget of {} exhausted after scanning {} complete labelings; counts are partial",
            opts.budget.expect("incomplete search implies a budget"),
            result.scanned
        )));
    }

    let fixtures = load_fixtures()?;
    match FixtureRecord::find(&fixtures, &graph) {
        None => {
            println!("fixture: no frozen record for this graph");
        }
        Some(record) => match record.matches(&result) {
            Ok(()) => println!("fixture: ok (matches frozen counts)"),
            Err(detail) => {
                println!("fixture: MISMATCH");
                return Err(CliError::FixtureMismatch(detail));
            }
        },
    }
    Ok(())
}

fn build_graph(family: Family, n: u32, m: u32) -> Result<Graph, CliError> {
    let base = Graph::complete_bipartite(n, m).map_err(|e| CliError::Usage(e.to_string()))?;
    if family.has_apex() {
        base.join_with_apex()
            .map_err(|e| CliError::Usage(e.to_string()))
    } else {
        Ok(base)
    }
}

fn print_result(graph: &Graph, mode: SearchMode, result: &SearchResult) {
    println!(
        "graph: {} (p={}, q={}, labels 1..{})",
        graph,
        graph.vertex_count(),
        graph.edge_count(),
        graph.element_count()
    );
    println!(
        "mode: {}",
        match mode {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Pruned => "pruned",
        }
    );
    println!("scanned: {} complete labelings", result.scanned);
    println!("nodes visited: {}", result.nodes_visited);
    println!("complete: {}", result.complete);
    println!("edge-antimagic: {}", result.eat_count);
    println!("vertex-antimagic: {}", result.vat_count);
    println!("totally antimagic: {}", result.tat_count);
    if let Some(hash) = &result.tat_hash {
        println!("tat_sha256: {hash}");
    }
    if !result.samples.is_empty() {
        println!(
            "samples (first {} totally antimagic labelings; vertex labels u1..un,v1..vm{}, then edge labels):",
            result.samples.len(),
            if graph.has_apex() { ",apex" } else { "" }
        );
        for sample in &result.samples {
            let line = sample
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!("  {line}");
        }
    }
}

fn load_fixtures() -> Result<Vec<FixtureRecord>, CliError> {
    match std::env::var_os(FIXTURE_DIR_ENV) {
        None => FixtureRecord::parse_file(EMBEDDED_FIXTURES)
            .map_err(|e| CliError::Runtime(format!("embedded fixture table is invalid: {e}"))),
        Some(dir) => {
            let path = std::path::Path::new(&dir).join("oracle_counts.txt");
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
            FixtureRecord::parse_file(&text)
                .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
        }
    }
}
