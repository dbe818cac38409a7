//! Regenerates the golden oracle fixture file. Run from the workspace root:
//!
//! ```text
//! cargo run -p antimagic-core --example freeze_fixtures > fixtures/oracle_counts.txt
//! ```
//!
//! The graphs listed here are the ones small enough to enumerate
//! exhaustively; the counts and digests they produce are frozen so later
//! runs (and the pruned search) can be checked against them.

use antimagic_core::{enumerate_all, FixtureRecord, Graph};

fn main() {
    let mut records = Vec::new();
    for (n, m, apex) in [
        (1u32, 1u32, false),
        (1, 2, false),
        (1, 3, false),
        (2, 2, false),
        (1, 1, true),
    ] {
        let mut graph = Graph::complete_bipartite(n, m).expect("valid sizes");
        if apex {
            graph = graph.join_with_apex().expect("no apex yet");
        }
        let result = enumerate_all(&graph, None).expect("small enough to enumerate");
        assert!(result.complete);
        records.push(FixtureRecord::from_result(&result).expect("complete run has a digest"));
    }
    print!("{}", FixtureRecord::format_file(&records));
}
