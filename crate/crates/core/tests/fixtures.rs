//! Re-derives every frozen oracle fixture and compares. A failure here
//! means either the oracle's behavior changed or the golden file was
//! edited; regenerate with
//! `cargo run -p antimagic-core --example freeze_fixtures`.

use antimagic_core::{enumerate_all, search_with_pruning, FixtureRecord, Graph};

fn golden_file() -> String {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/oracle_counts.txt"
    );
    std::fs::read_to_string(path).expect("golden fixture file is checked in")
}

fn graph_for(record: &FixtureRecord) -> Graph {
    let base = Graph::complete_bipartite(record.n, record.m).unwrap();
    if record.has_apex {
        base.join_with_apex().unwrap()
    } else {
        base
    }
}

#[test]
fn frozen_counts_are_rederivable() {
    let records = FixtureRecord::parse_file(&golden_file()).unwrap();
    assert!(!records.is_empty(), "golden file has no records");
    for record in &records {
        let graph = graph_for(record);
        let result = enumerate_all(&graph, None).unwrap();
        assert!(result.complete);
        record
            .matches(&result)
            .unwrap_or_else(|e| panic!("fixture for {graph} is stale: {e}"));
        assert_eq!(
            record.scanned, result.scanned,
            "permutation count for {graph}"
        );
    }
}

#[test]
fn pruned_search_reproduces_the_frozen_counts() {
    let records = FixtureRecord::parse_file(&golden_file()).unwrap();
    for record in &records {
        let graph = graph_for(record);
        let result = search_with_pruning(&graph, None);
        assert!(result.complete);
        record
            .matches(&result)
            .unwrap_or_else(|e| panic!("pruned search disagrees on {graph}: {e}"));
    }
}

#[test]
fn expected_graphs_are_frozen() {
    let records = FixtureRecord::parse_file(&golden_file()).unwrap();
    for (n, m, apex) in [(1, 1, false), (1, 2, false), (2, 2, false), (1, 1, true)] {
        let mut graph = Graph::complete_bipartite(n, m).unwrap();
        if apex {
            graph = graph.join_with_apex().unwrap();
        }
        assert!(
            FixtureRecord::find(&records, &graph).is_some(),
            "no frozen record for {graph}"
        );
    }
}
