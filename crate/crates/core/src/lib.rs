//! Total labelings of complete bipartite graphs `K_{n,m}` and their joins
//! with a single apex vertex (`K_{n,m} + K_1`).
//!
//! A *total labeling* assigns the integers `1..=p+q` bijectively to the
//! `p` vertices and `q` edges of a graph. The crate provides:
//!
//! - [`graph`]: the two graph families and their canonical vertex/edge order;
//! - [`labeling`]: label storage, edge/vertex weights, and the antimagic
//!   predicates (edge-antimagic, vertex-antimagic, totally antimagic,
//!   per-class weight orderings);
//! - [`constructions`]: explicit labeling schemes for `K_{n,n}`, `K_{n,m}`,
//!   and the apex joins;
//! - [`closed_forms`]: closed-form weight formulas for those schemes and a
//!   cross-check of formula values against weights recomputed from labels;
//! - [`oracle`]: brute-force enumeration and pruned backtracking search over
//!   all total labelings of small graphs, implemented independently of the
//!   predicate code so the two can be tested against each other.

pub mod closed_forms;
pub mod constructions;
pub mod graph;
pub mod labeling;
pub mod oracle;

pub use closed_forms::{
    cross_check, eval_formula, FormulaArgs, FormulaError, FormulaId, FormulaMismatch,
};
pub use constructions::{
    construct_knm, construct_knm_forced, construct_knm_join, construct_knm_join_candidate,
    construct_knm_join_forced, construct_knn, construct_knn_forced, construct_knn_join,
    construct_knn_join_forced, knm_case, ConstructionCase, ConstructionError,
};
pub use graph::{Edge, Graph, GraphError, PartitionTag, VertexId};
pub use labeling::{
    BijectionCheck, LabelingError, OrderedPartition, OrderingVerdict, PropertyReport,
    TotalLabeling, WeightGroup, WeightReport,
};
pub use oracle::{
    classify_independent, enumerate_all, random_labeling, search_with_pruning, FixtureRecord,
    IndependentClassification, OracleError, SearchResult, EXHAUSTIVE_ELEMENT_LIMIT, SAMPLE_LIMIT,
};
