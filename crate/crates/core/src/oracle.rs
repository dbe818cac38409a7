//! Brute-force ground truth for the antimagic predicates.
//!
//! Everything here recomputes weights directly from the graph's edge list,
//! on purpose sharing no code with [`crate::labeling`]: the two paths are
//! tested against each other, so a bug in one is caught by the other.
//!
//! [`enumerate_all`] walks every total labeling of a small graph in
//! lexicographic order and counts how many are edge-antimagic,
//! vertex-antimagic, and both. [`search_with_pruning`] produces the same
//! counts by backtracking over partial assignments, cutting a branch as
//! soon as it carries both an edge-weight and a vertex-weight collision
//! (such a branch can no longer contribute to any of the three counts).
//! Both report a SHA-256 digest over the stream of totally antimagic
//! labelings they saw, so their agreement can be checked exactly.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::TotalLabeling;

/// Largest `p + q` for which a full enumeration runs without an explicit
/// budget: `10! = 3_628_800` labelings.
pub const EXHAUSTIVE_ELEMENT_LIMIT: usize = 10;

/// How many totally antimagic labelings a search keeps as samples.
pub const SAMPLE_LIMIT: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive enumeration is limited to p+q <= {limit} elements (graph has {elements}); pass a budget to run a partial scan")]
    TooLargeForExhaustive { elements: usize, limit: usize },
}

/// Verdicts recomputed from scratch for one labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndependentClassification {
    pub is_eat: bool,
    pub is_vat: bool,
    pub is_tat: bool,
}

/// Outcome of an oracle run over (part of) the labeling space of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub graph: Graph,
    /// Complete labelings examined (leaves, for the pruned search).
    pub scanned: u64,
    /// Partial assignments visited; equals `scanned` for plain enumeration.
    pub nodes_visited: u64,
    pub eat_count: u64,
    pub vat_count: u64,
    pub tat_count: u64,
    /// False when a budget ran out before the space was exhausted.
    pub complete: bool,
    /// Up to [`SAMPLE_LIMIT`] totally antimagic label vectors, in canonical
    /// element order (vertices then edges), lexicographically first.
    pub samples: Vec<Vec<i64>>,
    /// Hex SHA-256 over all totally antimagic label vectors in
    /// lexicographic order; `None` for partial runs.
    pub tat_hash: Option<String>,
}

/// Element-order view of a graph used by both search strategies: edges as
/// `(a, b)` canonical vertex positions.
struct Arena {
    p: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
}

impl Arena {
    fn of(graph: &Graph) -> Self {
        let edges = graph
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (
                    graph.vertex_position(a).expect("endpoint in graph"),
                    graph.vertex_position(b).expect("endpoint in graph"),
                )
            })
            .collect();
        Arena {
            p: graph.vertex_count(),
            q: graph.edge_count(),
            edges,
        }
    }

    fn elements(&self) -> usize {
        self.p + self.q
    }
}

/// Collects TAT evidence: the rolling hash and the first few samples.
struct TatEvidence {
    hasher: Sha256,
    samples: Vec<Vec<i64>>,
    line: String,
}

impl TatEvidence {
    fn new() -> Self {
        TatEvidence {
            hasher: Sha256::new(),
            samples: Vec::new(),
            line: String::new(),
        }
    }

    fn record(&mut self, assignment: &[i64]) {
        self.line.clear();
        for (idx, label) in assignment.iter().enumerate() {
            if idx > 0 {
                self.line.push(',');
            }
            write!(self.line, "{label}").expect("writing to a String cannot fail");
        }
        self.line.push('\n');
        self.hasher.update(self.line.as_bytes());
        if self.samples.len() < SAMPLE_LIMIT {
            self.samples.push(assignment.to_vec());
        }
    }

    fn finish(self, complete: bool) -> (Vec<Vec<i64>>, Option<String>) {
        let hash = complete.then(|| format!("{:x}", self.hasher.finalize()));
        (self.samples, hash)
    }
}

/// Scans every total labeling of `graph` in lexicographic order, counting
/// the edge-antimagic, vertex-antimagic, and totally antimagic ones.
///
/// Without a budget the graph must have at most
/// [`EXHAUSTIVE_ELEMENT_LIMIT`] elements. With `budget = Some(b)` the scan
/// stops after `b` labelings and the result is marked incomplete unless
/// the space was exhausted first.
pub fn enumerate_all(graph: &Graph, budget: Option<u64>) -> Result<SearchResult, OracleError> {
    let arena = Arena::of(graph);
    let k = arena.elements();
    if budget.is_none() && k > EXHAUSTIVE_ELEMENT_LIMIT {
        return Err(OracleError::TooLargeForExhaustive {
            elements: k,
            limit: EXHAUSTIVE_ELEMENT_LIMIT,
        });
    }

    let mut assignment: Vec<i64> = (1..=k as i64).collect();
    let mut evidence = TatEvidence::new();
    let mut scanned = 0u64;
    let (mut eat_count, mut vat_count, mut tat_count) = (0u64, 0u64, 0u64);
    let mut complete = true;

    let mut edge_weights = vec![0i64; arena.q];
    let mut vertex_weights = vec![0i64; arena.p];
    let mut edge_sorted = vec![0i64; arena.q];
    let mut vertex_sorted = vec![0i64; arena.p];

    loop {
        if budget.is_some_and(|b| scanned >= b) {
            complete = false;
            break;
        }
        scanned += 1;

        vertex_weights.copy_from_slice(&assignment[..arena.p]);
        for (idx, &(a, b)) in arena.edges.iter().enumerate() {
            let label = assignment[arena.p + idx];
            edge_weights[idx] = assignment[a] + label + assignment[b];
            vertex_weights[a] += label;
            vertex_weights[b] += label;
        }
        edge_sorted.copy_from_slice(&edge_weights);
        vertex_sorted.copy_from_slice(&vertex_weights);
        let eat = sorted_distinct(&mut edge_sorted);
        let vat = sorted_distinct(&mut vertex_sorted);
        eat_count += u64::from(eat);
        vat_count += u64::from(vat);
        if eat && vat {
            tat_count += 1;
            evidence.record(&assignment);
        }

        if !next_permutation(&mut assignment) {
            break;
        }
    }

    let (samples, tat_hash) = evidence.finish(complete);
    Ok(SearchResult {
        graph: graph.clone(),
        scanned,
        nodes_visited: scanned,
        eat_count,
        vat_count,
        tat_count,
        complete,
        samples,
        tat_hash,
    })
}

fn sorted_distinct(values: &mut [i64]) -> bool {
    values.sort_unstable();
    values.windows(2).all(|w| w[0] != w[1])
}

/// Rearranges `values` into the next lexicographic permutation, returning
/// false (and leaving the slice sorted ascending) after the last one.
fn next_permutation(values: &mut [i64]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut pivot = values.len() - 1;
    while pivot > 0 && values[pivot - 1] >= values[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        values.reverse();
        return false;
    }
    let successor = values
        .iter()
        .rposition(|&v| v > values[pivot - 1])
        .expect("pivot guarantees a successor");
    values.swap(pivot - 1, successor);
    values[pivot..].reverse();
    true
}

/// Backtracking state for [`search_with_pruning`].
struct Pruned<'a> {
    arena: &'a Arena,
    assignment: Vec<i64>,
    used: Vec<bool>,
    /// Count per edge-weight value of completed edges with that weight.
    edge_weight_counts: Vec<u32>,
    /// Count per vertex-weight value of completed vertices with that weight.
    vertex_weight_counts: Vec<u32>,
    /// Elements currently colliding with an earlier one, per kind.
    edge_dups: u32,
    vertex_dups: u32,
    /// Running vertex weight (label plus placed incident edge labels).
    vertex_sums: Vec<i64>,
    /// Incident edges of each vertex not yet labeled.
    vertex_remaining: Vec<u32>,
    scanned: u64,
    nodes_visited: u64,
    eat_count: u64,
    vat_count: u64,
    tat_count: u64,
    budget: Option<u64>,
    out_of_budget: bool,
    evidence: TatEvidence,
}

impl Pruned<'_> {
    fn descend(&mut self, depth: usize) {
        let k = self.arena.elements();
        if depth == k {
            self.scanned += 1;
            let eat = self.edge_dups == 0;
            let vat = self.vertex_dups == 0;
            self.eat_count += u64::from(eat);
            self.vat_count += u64::from(vat);
            if eat && vat {
                self.tat_count += 1;
                self.evidence.record(&self.assignment);
            }
            return;
        }
        for label in 1..=k as i64 {
            if self.out_of_budget {
                return;
            }
            if self.used[label as usize] {
                continue;
            }
            if self.budget.is_some_and(|b| self.nodes_visited >= b) {
                self.out_of_budget = true;
                return;
            }
            self.nodes_visited += 1;
            self.used[label as usize] = true;
            self.assignment[depth] = label;
            let placed = self.place(depth, label);
            // A branch holding both kinds of collision cannot produce an
            // edge-antimagic, vertex-antimagic, or totally antimagic leaf.
            if !(self.edge_dups > 0 && self.vertex_dups > 0) {
                self.descend(depth + 1);
            }
            self.unplace(depth, placed);
            self.used[label as usize] = false;
        }
    }

    /// Applies the side effects of labeling element `depth`, returning the
    /// bookkeeping needed to undo them: (edge weight, completed vertices).
    fn place(&mut self, depth: usize, label: i64) -> (Option<i64>, [Option<(usize, i64)>; 2]) {
        let p = self.arena.p;
        if depth < p {
            // Vertex labels only seed the vertex sum; no weight completes
            // here because every vertex has at least one incident edge.
            self.vertex_sums[depth] = label;
            return (None, [None, None]);
        }
        let (a, b) = self.arena.edges[depth - p];
        let edge_weight = self.assignment[a] + label + self.assignment[b];
        self.bump_edge(edge_weight);
        let mut completed = [None, None];
        for (slot, v) in [a, b].into_iter().enumerate() {
            self.vertex_sums[v] += label;
            self.vertex_remaining[v] -= 1;
            if self.vertex_remaining[v] == 0 {
                let weight = self.vertex_sums[v];
                self.bump_vertex(weight);
                completed[slot] = Some((v, weight));
            }
        }
        (Some(edge_weight), completed)
    }

    fn unplace(&mut self, depth: usize, placed: (Option<i64>, [Option<(usize, i64)>; 2])) {
        let p = self.arena.p;
        let (edge_weight, completed) = placed;
        if depth < p {
            self.vertex_sums[depth] = 0;
            return;
        }
        let label = self.assignment[depth];
        let (a, b) = self.arena.edges[depth - p];
        for (slot, v) in [a, b].into_iter().enumerate() {
            if let Some((vertex, weight)) = completed[slot] {
                debug_assert_eq!(vertex, v);
                self.drop_vertex(weight);
            }
            self.vertex_sums[v] -= label;
            self.vertex_remaining[v] += 1;
        }
        self.drop_edge(edge_weight.expect("edge depth recorded a weight"));
    }

    fn bump_edge(&mut self, weight: i64) {
        let slot = &mut self.edge_weight_counts[weight as usize];
        if *slot >= 1 {
            self.edge_dups += 1;
        }
        *slot += 1;
    }

    fn drop_edge(&mut self, weight: i64) {
        let slot = &mut self.edge_weight_counts[weight as usize];
        *slot -= 1;
        if *slot >= 1 {
            self.edge_dups -= 1;
        }
    }

    fn bump_vertex(&mut self, weight: i64) {
        let slot = &mut self.vertex_weight_counts[weight as usize];
        if *slot >= 1 {
            self.vertex_dups += 1;
        }
        *slot += 1;
    }

    fn drop_vertex(&mut self, weight: i64) {
        let slot = &mut self.vertex_weight_counts[weight as usize];
        *slot -= 1;
        if *slot >= 1 {
            self.vertex_dups -= 1;
        }
    }
}

/// Counts edge-antimagic, vertex-antimagic, and totally antimagic total
/// labelings by depth-first search over partial assignments (canonical
/// element order, labels tried ascending), pruning branches that already
/// collide in both weight kinds. On a complete run all three counts — and
/// the TAT hash and samples — equal those of [`enumerate_all`].
///
/// `budget` bounds the number of partial assignments visited; an exhausted
/// budget yields `complete = false`.
pub fn search_with_pruning(graph: &Graph, budget: Option<u64>) -> SearchResult {
    let arena = Arena::of(graph);
    let k = arena.elements();
    // Any weight is at most the sum of all labels, 1 + 2 + ... + k.
    let weight_bound = k * (k + 1) / 2 + 1;
    let vertex_remaining = (0..arena.p)
        .map(|v| {
            arena
                .edges
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .count() as u32
        })
        .collect();

    let mut search = Pruned {
        arena: &arena,
        assignment: vec![0; k],
        used: vec![false; k + 1],
        edge_weight_counts: vec![0; weight_bound],
        vertex_weight_counts: vec![0; weight_bound],
        edge_dups: 0,
        vertex_dups: 0,
        vertex_sums: vec![0; arena.p],
        vertex_remaining,
        scanned: 0,
        nodes_visited: 0,
        eat_count: 0,
        vat_count: 0,
        tat_count: 0,
        budget,
        out_of_budget: false,
        evidence: TatEvidence::new(),
    };
    search.descend(0);

    let complete = !search.out_of_budget;
    let (samples, tat_hash) = search.evidence.finish(complete);
    SearchResult {
        graph: graph.clone(),
        scanned: search.scanned,
        nodes_visited: search.nodes_visited,
        eat_count: search.eat_count,
        vat_count: search.vat_count,
        tat_count: search.tat_count,
        complete,
        samples,
        tat_hash,
    }
}

/// Classifies one labeling by recomputing every weight from the edge list.
/// Distinctness is decided with occupancy bitmaps rather than sorting, so
/// this path shares no logic with the predicate implementations.
pub fn classify_independent(labeling: &TotalLabeling) -> IndependentClassification {
    let graph = labeling.graph();
    let arena = Arena::of(graph);
    let vertex_labels = labeling.vertex_labels();
    let edge_labels = labeling.edge_labels();

    let mut vertex_weights: Vec<i64> = vertex_labels.to_vec();
    let mut edge_weights: Vec<i64> = Vec::with_capacity(arena.q);
    for (idx, &(a, b)) in arena.edges.iter().enumerate() {
        let label = edge_labels[idx];
        edge_weights.push(vertex_labels[a] + label + vertex_labels[b]);
        vertex_weights[a] += label;
        vertex_weights[b] += label;
    }

    let is_eat = bitmap_distinct(&edge_weights);
    let is_vat = bitmap_distinct(&vertex_weights);
    IndependentClassification {
        is_eat,
        is_vat,
        is_tat: is_eat && is_vat,
    }
}

fn bitmap_distinct(weights: &[i64]) -> bool {
    let max = match weights.iter().max() {
        Some(&m) => m,
        None => return true,
    };
    let min = *weights.iter().min().expect("non-empty");
    let span = (max - min) as usize + 1;
    let mut seen = vec![false; span];
    for &w in weights {
        let slot = (w - min) as usize;
        if seen[slot] {
            return false;
        }
        seen[slot] = true;
    }
    true
}

/// One uniformly random total labeling of `graph`, deterministic in `seed`.
pub fn random_labeling(graph: &Graph, seed: u64) -> TotalLabeling {
    let k = graph.element_count();
    let mut labels: Vec<i64> = (1..=k as i64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    labels.shuffle(&mut rng);
    let edge_labels = labels.split_off(graph.vertex_count());
    TotalLabeling::new(graph.clone(), labels, edge_labels)
        .expect("shuffled labels have the right shape")
}

/// One frozen oracle run: the exact counts and TAT digest for a graph,
/// as stored in the `fixtures/oracle_counts.txt` golden file.
///
/// Line format (whitespace-separated):
/// `family n m elements scanned eat vat tat tat_sha256`, where family is
/// `base` for `K_{n,m}` or `join` for its apex join, and `scanned` is the
/// full permutation count `(p+q)!`. Blank lines and `#` comments are
/// allowed. Comparisons check the counts, element total, and digest;
/// `scanned` is informational (the pruned search reaches fewer leaves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRecord {
    pub has_apex: bool,
    pub n: u32,
    pub m: u32,
    pub elements: usize,
    pub scanned: u64,
    pub eat: u64,
    pub vat: u64,
    pub tat: u64,
    pub tat_sha256: String,
}

impl FixtureRecord {
    /// Captures a completed exhaustive run as a fixture line.
    pub fn from_result(result: &SearchResult) -> Option<Self> {
        let hash = result.tat_hash.clone()?;
        Some(FixtureRecord {
            has_apex: result.graph.has_apex(),
            n: result.graph.n(),
            m: result.graph.m(),
            elements: result.graph.element_count(),
            scanned: result.scanned,
            eat: result.eat_count,
            vat: result.vat_count,
            tat: result.tat_count,
            tat_sha256: hash,
        })
    }

    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {} {} {} {} {} {}",
            if self.has_apex { "join" } else { "base" },
            self.n,
            self.m,
            self.elements,
            self.scanned,
            self.eat,
            self.vat,
            self.tat,
            self.tat_sha256,
        )
    }

    pub fn parse_line(line: &str) -> Result<Option<Self>, String> {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return Ok(None);
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 9 {
            return Err(format!(
                "expected 9 fields, got {}: {trimmed:?}",
                fields.len()
            ));
        }
        let has_apex = match fields[0] {
            "base" => false,
            "join" => true,
            other => return Err(format!("unknown family {other:?}")),
        };
        let num = |idx: usize| -> Result<u64, String> {
            fields[idx]
                .parse()
                .map_err(|e| format!("field {idx} ({:?}): {e}", fields[idx]))
        };
        Ok(Some(FixtureRecord {
            has_apex,
            n: num(1)? as u32,
            m: num(2)? as u32,
            elements: num(3)? as usize,
            scanned: num(4)?,
            eat: num(5)?,
            vat: num(6)?,
            tat: num(7)?,
            tat_sha256: fields[8].to_string(),
        }))
    }

    pub fn parse_file(text: &str) -> Result<Vec<Self>, String> {
        let mut records = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if let Some(record) =
                Self::parse_line(line).map_err(|e| format!("line {}: {e}", lineno + 1))?
            {
                records.push(record);
            }
        }
        Ok(records)
    }

    pub fn format_file(records: &[Self]) -> String {
        let mut out = String::from(
            "# Frozen oracle runs: family n m elements scanned eat vat tat tat_sha256\n\
             # scanned is the full permutation count (p+q)! and is informational.\n",
        );
        for record in records {
            out.push_str(&record.to_line());
            out.push('\n');
        }
        out
    }

    /// Finds the fixture for a graph, if one is frozen.
    pub fn find<'a>(records: &'a [Self], graph: &Graph) -> Option<&'a Self> {
        records
            .iter()
            .find(|r| r.n == graph.n() && r.m == graph.m() && r.has_apex == graph.has_apex())
    }

    /// Checks a completed search against this fixture; describes the first
    /// disagreement.
    pub fn matches(&self, result: &SearchResult) -> Result<(), String> {
        if !result.complete {
            return Err("search was incomplete; nothing to compare".to_string());
        }
        let pairs = [
            (
                "elements",
                self.elements as u64,
                result.graph.element_count() as u64,
            ),
            ("eat", self.eat, result.eat_count),
            ("vat", self.vat, result.vat_count),
            ("tat", self.tat, result.tat_count),
        ];
        for (name, expected, got) in pairs {
            if expected != got {
                return Err(format!(
                    "{name}: fixture has {expected}, search found {got}"
                ));
            }
        }
        match &result.tat_hash {
            Some(hash) if *hash != self.tat_sha256 => Err(format!(
                "tat_sha256: fixture has {}, search found {hash}",
                self.tat_sha256
            )),
            None => Err("search reported no TAT digest".to_string()),
            _ => Ok(()),
        }
    }
}
