//! Explicit total labeling schemes for `K_{n,n}`, `K_{n,m}`, and their
//! joins with one apex vertex.
//!
//! Each scheme assigns closed-form labels; the resulting weights are
//! checked elsewhere ([`crate::closed_forms`] compares them against the
//! formula values, [`crate::labeling`] recomputes everything from raw
//! labels). The `K_{n,m}` scheme dispatches on parity:
//!
//! - `n` even: the direct scheme (case 1);
//! - `n` odd, `m` even: case 1 built for `(m, n)`, then the partition
//!   tags are swapped (case 2);
//! - `n`, `m` both odd: a separate scheme requiring `m > n` (case 3),
//!   applied with the smaller class as `U` (tags swapped when `n > m`).
//!
//! The apex join extends a base labeling: the apex gets the next unused
//! label, and the apex edges take the following labels alternating between
//! the `U` and `V` sides (`u_1, v_1, u_2, v_2, ...`). For the `K_{n,n}`
//! base this reduces to apex-edge labels `n^2 + 2(n+i)` on the `U` side
//! and `n^2 + 2(n+j) + 1` on the `V` side.
//!
//! The square scheme is only claimed for `n > 3`, and the rectangular one
//! for `n, m >= 3`; `*_forced` variants build the same label patterns
//! outside those bounds so the small cases can be probed and their
//! failures inspected. The rectangular join has no distinctness guarantee
//! at all, so [`construct_knm_join`] verifies its own output and reports
//! failure as an error carrying the full evidence.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::labeling::{OrderedPartition, PropertyReport, TotalLabeling, WeightReport};

/// Which labeling scheme produced (or would produce) a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionCase {
    Knn { n: u32 },
    KnmCase1 { n: u32, m: u32 },
    KnmCase2 { n: u32, m: u32 },
    KnmCase3 { n: u32, m: u32 },
    KnnJoin { n: u32 },
    KnmJoin { n: u32, m: u32 },
}

impl ConstructionCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionCase::Knn { .. } => "knn",
            ConstructionCase::KnmCase1 { .. } => "knm_case1",
            ConstructionCase::KnmCase2 { .. } => "knm_case2",
            ConstructionCase::KnmCase3 { .. } => "knm_case3",
            ConstructionCase::KnnJoin { .. } => "knn_join",
            ConstructionCase::KnmJoin { .. } => "knm_join",
        }
    }

    /// `(n, m)` as passed to the construction.
    pub fn parameters(&self) -> (u32, u32) {
        match *self {
            ConstructionCase::Knn { n } | ConstructionCase::KnnJoin { n } => (n, n),
            ConstructionCase::KnmCase1 { n, m }
            | ConstructionCase::KnmCase2 { n, m }
            | ConstructionCase::KnmCase3 { n, m }
            | ConstructionCase::KnmJoin { n, m } => (n, m),
        }
    }
}

impl std::fmt::Display for ConstructionCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(
        "the K{{n,n}} scheme requires n > 3 (got n={0}); use the forced variant to probe smaller n"
    )]
    BelowKnnBound(u32),
    #[error("the K{{n,m}} scheme requires n, m >= 3 (got n={n}, m={m}); use the forced variant to probe smaller sizes")]
    BelowKnmBound { n: u32, m: u32 },
    #[error("equal partition sizes n = m = {0}: use the K{{n,n}} scheme")]
    EqualPartitionSizes(u32),
    #[error("construction case {requested} does not apply: {detail}")]
    CaseMismatch {
        requested: ConstructionCase,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the apex join of K{{{n},{m}}} is not totally antimagic: {summary}")]
    JoinNotTat {
        n: u32,
        m: u32,
        summary: String,
        labeling: Box<TotalLabeling>,
        properties: Box<PropertyReport>,
        weights: Box<WeightReport>,
    },
}

/// Which parity case applies to `K_{n,m}`. Requires `n != m` and both
/// classes non-empty.
pub fn knm_case(n: u32, m: u32) -> Result<ConstructionCase, ConstructionError> {
    if n == 0 || m == 0 {
        return Err(GraphError::EmptyPartition { n, m }.into());
    }
    if n == m {
        return Err(ConstructionError::EqualPartitionSizes(n));
    }
    Ok(if n.is_multiple_of(2) {
        ConstructionCase::KnmCase1 { n, m }
    } else if m.is_multiple_of(2) {
        ConstructionCase::KnmCase2 { n, m }
    } else {
        ConstructionCase::KnmCase3 { n, m }
    })
}

/// The square scheme on `K_{n,n}`, `n > 3`:
/// `f(u_i) = 2i - 1`, `f(v_j) = 2j`, `f(u_i v_j) = n(2+j) - (i-1)`.
pub fn construct_knn(n: u32) -> Result<TotalLabeling, ConstructionError> {
    if n <= 3 {
        return Err(ConstructionError::BelowKnnBound(n));
    }
    knn_labels(n)
}

/// The square scheme applied outside its claimed bound (any `n >= 1`).
pub fn construct_knn_forced(n: u32) -> Result<TotalLabeling, ConstructionError> {
    knn_labels(n)
}

fn knn_labels(n: u32) -> Result<TotalLabeling, ConstructionError> {
    let graph = Graph::complete_bipartite(n, n)?;
    let n64 = n as i64;
    let mut vertex_labels = Vec::with_capacity(2 * n as usize);
    vertex_labels.extend((1..=n64).map(|i| 2 * i - 1));
    vertex_labels.extend((1..=n64).map(|j| 2 * j));
    let mut edge_labels = Vec::with_capacity((n * n) as usize);
    for i in 1..=n64 {
        for j in 1..=n64 {
            edge_labels.push(n64 * (2 + j) - (i - 1));
        }
    }
    Ok(TotalLabeling::new(graph, vertex_labels, edge_labels).expect("scheme has correct shape"))
}

/// The rectangular scheme on `K_{n,m}`, `n, m >= 3`, `n != m`, dispatching
/// on parity as described at module level.
pub fn construct_knm(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    if n == m {
        return Err(ConstructionError::EqualPartitionSizes(n));
    }
    if n < 3 || m < 3 {
        return Err(ConstructionError::BelowKnmBound { n, m });
    }
    construct_knm_forced(n, m)
}

/// The rectangular scheme applied outside its claimed bounds
/// (any `n, m >= 1` with `n != m`).
pub fn construct_knm_forced(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    match knm_case(n, m)? {
        ConstructionCase::KnmCase1 { .. } => knm_case1_labels(n, m),
        ConstructionCase::KnmCase2 { .. } => Ok(swap_partitions(&knm_case1_labels(m, n)?)),
        ConstructionCase::KnmCase3 { .. } => {
            if m > n {
                knm_case3_labels(n, m)
            } else {
                Ok(swap_partitions(&knm_case3_labels(m, n)?))
            }
        }
        _ => unreachable!("knm_case only returns KnmCase* variants"),
    }
}

/// Case 1 (`n` even): `f(u_i) = i`, `f(v_j) = n + j`,
/// `f(u_i v_j) = nj + m + i`.
fn knm_case1_labels(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    let graph = Graph::complete_bipartite(n, m)?;
    let (n64, m64) = (n as i64, m as i64);
    let mut vertex_labels = Vec::with_capacity((n + m) as usize);
    vertex_labels.extend(1..=n64);
    vertex_labels.extend((1..=m64).map(|j| n64 + j));
    let mut edge_labels = Vec::with_capacity((n * m) as usize);
    for i in 1..=n64 {
        for j in 1..=m64 {
            edge_labels.push(n64 * j + m64 + i);
        }
    }
    Ok(TotalLabeling::new(graph, vertex_labels, edge_labels).expect("scheme has correct shape"))
}

/// Case 3 (`n`, `m` odd, `m > n`): `f(u_i) = n + m - 2i + 1`;
/// `f(v_j) = j` for `j <= m - n`, `f(v_j) = n + 2j - m` above that;
/// `f(u_i v_j) = m + nj + i`.
fn knm_case3_labels(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    debug_assert!(m > n && n % 2 == 1 && m % 2 == 1);
    let graph = Graph::complete_bipartite(n, m)?;
    let (n64, m64) = (n as i64, m as i64);
    let mut vertex_labels = Vec::with_capacity((n + m) as usize);
    vertex_labels.extend((1..=n64).map(|i| n64 + m64 - 2 * i + 1));
    vertex_labels.extend((1..=m64).map(|j| if j <= m64 - n64 { j } else { n64 + 2 * j - m64 }));
    let mut edge_labels = Vec::with_capacity((n * m) as usize);
    for i in 1..=n64 {
        for j in 1..=m64 {
            edge_labels.push(m64 + n64 * j + i);
        }
    }
    Ok(TotalLabeling::new(graph, vertex_labels, edge_labels).expect("scheme has correct shape"))
}

/// Relabels `K_{a,b}` as `K_{b,a}` by exchanging the partition tags:
/// the new `u_i` is the old `v_i`, the new `v_j` is the old `u_j`, and
/// every edge keeps its label.
fn swap_partitions(labeling: &TotalLabeling) -> TotalLabeling {
    let old = labeling.graph();
    let (a, b) = (old.n() as usize, old.m() as usize);
    debug_assert!(!old.has_apex(), "swap applies to bipartite bases only");
    let graph = Graph::complete_bipartite(b as u32, a as u32).expect("same classes, swapped");

    let old_vertices = labeling.vertex_labels();
    let mut vertex_labels = Vec::with_capacity(a + b);
    vertex_labels.extend((0..b).map(|i| old_vertices[a + i]));
    vertex_labels.extend(old_vertices[..a].iter().copied());

    let old_edges = labeling.edge_labels();
    let mut edge_labels = Vec::with_capacity(a * b);
    for i in 0..b {
        for j in 0..a {
            edge_labels.push(old_edges[j * b + i]);
        }
    }
    TotalLabeling::new(graph, vertex_labels, edge_labels).expect("swap preserves shape")
}

/// Extends a bipartite base labeling to its apex join: the apex takes the
/// next label after the base universe, and the apex edges take the
/// following labels alternating `u_1, v_1, u_2, v_2, ...`.
fn extend_with_apex(base: &TotalLabeling) -> Result<TotalLabeling, ConstructionError> {
    let graph = base.graph().join_with_apex()?;
    let (n, m) = (base.graph().n() as usize, base.graph().m() as usize);
    let base_universe = base.graph().element_count() as i64;

    let mut vertex_labels = Vec::with_capacity(n + m + 1);
    vertex_labels.extend(base.vertex_labels().iter().copied());
    vertex_labels.push(base_universe + 1);

    let mut u_side = vec![0i64; n];
    let mut v_side = vec![0i64; m];
    let mut next = base_universe + 2;
    for k in 0..n.max(m) {
        if k < n {
            u_side[k] = next;
            next += 1;
        }
        if k < m {
            v_side[k] = next;
            next += 1;
        }
    }

    let mut edge_labels = Vec::with_capacity(graph.edge_count());
    edge_labels.extend(base.edge_labels().iter().copied());
    edge_labels.extend(u_side);
    edge_labels.extend(v_side);
    Ok(TotalLabeling::new(graph, vertex_labels, edge_labels).expect("join preserves shape"))
}

/// The apex join of the square scheme, `n > 3`.
pub fn construct_knn_join(n: u32) -> Result<TotalLabeling, ConstructionError> {
    extend_with_apex(&construct_knn(n)?)
}

/// The apex join of the square scheme applied outside its bound (`n >= 1`).
pub fn construct_knn_join_forced(n: u32) -> Result<TotalLabeling, ConstructionError> {
    extend_with_apex(&construct_knn_forced(n)?)
}

/// The apex join of the rectangular scheme, without any verification.
///
/// Unlike the square join, this extension has no distinctness guarantee;
/// callers that need a vetted labeling should use [`construct_knm_join`],
/// which checks the result and reports failures with evidence.
pub fn construct_knm_join_candidate(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    extend_with_apex(&construct_knm(n, m)?)
}

/// The rectangular join applied outside the `n, m >= 3` bounds, still
/// unverified (any `n, m >= 1` with `n != m`).
pub fn construct_knm_join_forced(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    extend_with_apex(&construct_knm_forced(n, m)?)
}

/// The apex join of the rectangular scheme, verified: returns the labeling
/// only if it is totally antimagic, and otherwise reports the duplicate
/// weights that break it.
pub fn construct_knm_join(n: u32, m: u32) -> Result<TotalLabeling, ConstructionError> {
    let labeling = construct_knm_join_candidate(n, m)?;
    let partition = OrderedPartition::by_partition_tag(labeling.graph());
    let properties = labeling
        .property_report(&partition)
        .expect("tag partition covers the join");
    if properties.is_tat {
        return Ok(labeling);
    }
    let weights = labeling.weight_report();
    let mut parts = Vec::new();
    if !properties.is_eat {
        let dupes: Vec<String> = weights
            .duplicate_edge_weight_groups
            .iter()
            .map(|g| format!("edge weight {} repeats {} times", g.weight, g.members.len()))
            .collect();
        parts.push(dupes.join(", "));
    }
    if !properties.is_vat {
        let dupes: Vec<String> = weights
            .duplicate_vertex_weight_groups
            .iter()
            .map(|g| {
                format!(
                    "vertex weight {} repeats {} times",
                    g.weight,
                    g.members.len()
                )
            })
            .collect();
        parts.push(dupes.join(", "));
    }
    Err(ConstructionError::JoinNotTat {
        n,
        m,
        summary: parts.join("; "),
        labeling: Box::new(labeling),
        properties: Box::new(properties),
        weights: Box::new(weights),
    })
}
