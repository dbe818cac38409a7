//! Total labelings, weights, and the antimagic predicates.
//!
//! A total labeling assigns one integer to every vertex and every edge.
//! The weight of an edge `uv` is `f(u) + f(uv) + f(v)`; the weight of a
//! vertex `v` is `f(v)` plus the labels of all edges incident to `v`.
//! A labeling is edge-antimagic (EAT) when all edge weights are pairwise
//! distinct, vertex-antimagic (VAT) when all vertex weights are, and
//! totally antimagic (TAT) when both hold. On top of that, vertex classes
//! can be checked for monotone weight orderings.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("expected {expected_vertices} vertex labels and {expected_edges} edge labels, got {got_vertices} and {got_edges}")]
    WrongArity {
        expected_vertices: usize,
        expected_edges: usize,
        got_vertices: usize,
        got_edges: usize,
    },
    #[error("labels must be positive, found {0}")]
    NonPositiveLabel(i64),
    #[error("partition classes must be disjoint and cover the vertex set: {0}")]
    MalformedPartition(String),
}

/// A total labeling of a [`Graph`]: one label per vertex and per edge,
/// stored in canonical order.
///
/// Construction only checks shape and positivity; whether the labels form
/// a bijection onto `1..=p+q` is a property to query, not a precondition,
/// so that defective labelings can be loaded and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    graph: Graph,
    vertex_labels: Vec<i64>,
    edge_labels: Vec<i64>,
}

impl TotalLabeling {
    pub fn new(
        graph: Graph,
        vertex_labels: Vec<i64>,
        edge_labels: Vec<i64>,
    ) -> Result<Self, LabelingError> {
        if vertex_labels.len() != graph.vertex_count() || edge_labels.len() != graph.edge_count() {
            return Err(LabelingError::WrongArity {
                expected_vertices: graph.vertex_count(),
                expected_edges: graph.edge_count(),
                got_vertices: vertex_labels.len(),
                got_edges: edge_labels.len(),
            });
        }
        if let Some(&bad) = vertex_labels.iter().chain(&edge_labels).find(|&&l| l <= 0) {
            return Err(LabelingError::NonPositiveLabel(bad));
        }
        Ok(TotalLabeling {
            graph,
            vertex_labels,
            edge_labels,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex labels in canonical vertex order.
    pub fn vertex_labels(&self) -> &[i64] {
        &self.vertex_labels
    }

    /// Edge labels in canonical edge order.
    pub fn edge_labels(&self) -> &[i64] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: VertexId) -> Result<i64, LabelingError> {
        let pos = self
            .graph
            .vertex_position(v)
            .ok_or(LabelingError::UnknownVertex(v))?;
        Ok(self.vertex_labels[pos])
    }

    pub fn edge_label(&self, e: Edge) -> Result<i64, LabelingError> {
        let pos = self
            .graph
            .edge_position(e)
            .ok_or(LabelingError::UnknownEdge(e))?;
        Ok(self.edge_labels[pos])
    }

    /// `f(a) + f(ab) + f(b)` for the edge `ab`.
    pub fn edge_weight(&self, e: Edge) -> Result<i64, LabelingError> {
        let label = self.edge_label(e)?;
        let (a, b) = e.endpoints();
        Ok(self.vertex_label(a)? + label + self.vertex_label(b)?)
    }

    /// `f(v)` plus the labels of all edges incident to `v`.
    pub fn vertex_weight(&self, v: VertexId) -> Result<i64, LabelingError> {
        let positions = self
            .graph
            .incident_edge_positions(v)
            .ok_or(LabelingError::UnknownVertex(v))?;
        let incident: i64 = positions.iter().map(|&pos| self.edge_labels[pos]).sum();
        Ok(self.vertex_label(v)? + incident)
    }

    /// All edge weights in canonical edge order.
    pub fn all_edge_weights(&self) -> Vec<i64> {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .map(|(pos, e)| {
                let (a, b) = e.endpoints();
                let ap = self.graph.vertex_position(a).expect("endpoint in graph");
                let bp = self.graph.vertex_position(b).expect("endpoint in graph");
                self.vertex_labels[ap] + self.edge_labels[pos] + self.vertex_labels[bp]
            })
            .collect()
    }

    /// All vertex weights in canonical vertex order, accumulated in one pass
    /// over the edge list.
    pub fn all_vertex_weights(&self) -> Vec<i64> {
        let mut weights = self.vertex_labels.clone();
        for (pos, e) in self.graph.edges().iter().enumerate() {
            let (a, b) = e.endpoints();
            let ap = self.graph.vertex_position(a).expect("endpoint in graph");
            let bp = self.graph.vertex_position(b).expect("endpoint in graph");
            weights[ap] += self.edge_labels[pos];
            weights[bp] += self.edge_labels[pos];
        }
        weights
    }

    /// Checks that the labels form a bijection onto `1..=p+q` and reports
    /// exactly which values are missing, repeated, or out of range.
    pub fn check_total_bijection(&self) -> BijectionCheck {
        let total = self.graph.element_count() as i64;
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &label in self.vertex_labels.iter().chain(&self.edge_labels) {
            *counts.entry(label).or_default() += 1;
        }
        let mut missing = Vec::new();
        let mut duplicated = Vec::new();
        let mut out_of_range = Vec::new();
        for value in 1..=total {
            match counts.get(&value) {
                None => missing.push(value),
                Some(&c) if c > 1 => duplicated.push(value),
                _ => {}
            }
        }
        for (&value, &c) in &counts {
            if !(1..=total).contains(&value) {
                for _ in 0..c {
                    out_of_range.push(value);
                }
            }
        }
        BijectionCheck {
            missing,
            duplicated,
            out_of_range,
        }
    }

    pub fn is_bijection(&self) -> bool {
        self.check_total_bijection().is_bijection()
    }

    /// True when the vertex labels are exactly `{1..=p}` (the smallest
    /// labels all sit on vertices).
    pub fn is_super(&self) -> bool {
        let p = self.vertex_labels.len() as i64;
        let mut sorted = self.vertex_labels.clone();
        sorted.sort_unstable();
        sorted.iter().copied().eq(1..=p)
    }

    /// Edge-antimagic: all edge weights pairwise distinct.
    pub fn is_eat(&self) -> bool {
        all_distinct(self.all_edge_weights())
    }

    /// Vertex-antimagic: all vertex weights pairwise distinct.
    pub fn is_vat(&self) -> bool {
        all_distinct(self.all_vertex_weights())
    }

    /// Totally antimagic: both edge- and vertex-antimagic.
    pub fn is_tat(&self) -> bool {
        self.is_eat() && self.is_vat()
    }

    /// Full weight listing plus every group of elements sharing a weight.
    pub fn weight_report(&self) -> WeightReport {
        let edge_weights: Vec<(Edge, i64)> = self
            .graph
            .edges()
            .iter()
            .copied()
            .zip(self.all_edge_weights())
            .collect();
        let vertex_weights: Vec<(VertexId, i64)> = self
            .graph
            .vertices()
            .zip(self.all_vertex_weights())
            .collect();
        WeightReport {
            duplicate_edge_weight_groups: duplicate_groups(&edge_weights),
            duplicate_vertex_weight_groups: duplicate_groups(&vertex_weights),
            edge_weights,
            vertex_weights,
        }
    }

    /// How the vertex weights of `class` behave when the class is sorted by
    /// vertex label. Ties in label are broken by canonical position, which
    /// can only arise for non-bijective labelings.
    pub fn class_ordering(&self, class: &[VertexId]) -> Result<OrderingVerdict, LabelingError> {
        let mut keyed: Vec<(i64, usize)> = Vec::with_capacity(class.len());
        for &v in class {
            let pos = self
                .graph
                .vertex_position(v)
                .ok_or(LabelingError::UnknownVertex(v))?;
            keyed.push((self.vertex_labels[pos], pos));
        }
        keyed.sort_unstable();
        let all_weights = self.all_vertex_weights();
        let weights: Vec<i64> = keyed.iter().map(|&(_, pos)| all_weights[pos]).collect();
        Ok(OrderingVerdict::of_sequence(&weights))
    }

    /// True when every class of `partition` has a monotone weight sequence
    /// (in either direction, strictly or not). The partition must cover the
    /// vertex set exactly.
    pub fn is_weak_ordered(&self, partition: &OrderedPartition) -> Result<bool, LabelingError> {
        partition.validate(&self.graph)?;
        for class in &partition.classes {
            if self.class_ordering(&class.members)? == OrderingVerdict::Unordered {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All predicate results and per-class orderings in one report.
    pub fn property_report(
        &self,
        partition: &OrderedPartition,
    ) -> Result<PropertyReport, LabelingError> {
        partition.validate(&self.graph)?;
        let bijection = self.check_total_bijection();
        let is_eat = self.is_eat();
        let is_vat = self.is_vat();
        let mut class_orderings = Vec::with_capacity(partition.classes.len());
        let mut weak = true;
        for class in &partition.classes {
            let verdict = self.class_ordering(&class.members)?;
            weak &= verdict != OrderingVerdict::Unordered;
            class_orderings.push((class.name.clone(), verdict));
        }
        Ok(PropertyReport {
            is_bijection: bijection.is_bijection(),
            is_super: self.is_super(),
            is_eat,
            is_vat,
            is_tat: is_eat && is_vat,
            class_orderings,
            is_weak_ordered: weak,
        })
    }
}

fn all_distinct(mut values: Vec<i64>) -> bool {
    values.sort_unstable();
    values.windows(2).all(|w| w[0] != w[1])
}

fn duplicate_groups<T: Copy>(weighted: &[(T, i64)]) -> Vec<WeightGroup<T>> {
    let mut by_weight: BTreeMap<i64, Vec<T>> = BTreeMap::new();
    for &(item, weight) in weighted {
        by_weight.entry(weight).or_default().push(item);
    }
    by_weight
        .into_iter()
        .filter(|(_, members)| members.len() > 1)
        .map(|(weight, members)| WeightGroup { weight, members })
        .collect()
}

/// Outcome of checking a labeling against the bijection requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCheck {
    /// Values in `1..=p+q` that no element carries.
    pub missing: Vec<i64>,
    /// Values in `1..=p+q` carried by more than one element.
    pub duplicated: Vec<i64>,
    /// Labels outside `1..=p+q`, one entry per offending element.
    pub out_of_range: Vec<i64>,
}

impl BijectionCheck {
    pub fn is_bijection(&self) -> bool {
        self.missing.is_empty() && self.duplicated.is_empty() && self.out_of_range.is_empty()
    }
}

/// Elements sharing one weight value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightGroup<T> {
    pub weight: i64,
    pub members: Vec<T>,
}

/// Full weight listing for a labeling, with duplicate groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    pub edge_weights: Vec<(Edge, i64)>,
    pub vertex_weights: Vec<(VertexId, i64)>,
    pub duplicate_edge_weight_groups: Vec<WeightGroup<Edge>>,
    pub duplicate_vertex_weight_groups: Vec<WeightGroup<VertexId>>,
}

/// Monotonicity verdict for one class's weight sequence, taken in order of
/// increasing vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingVerdict {
    /// Empty, singleton, or all weights equal.
    Constant,
    /// Strictly increasing.
    SharpAscending,
    /// Non-decreasing with at least one tie.
    Ascending,
    /// Strictly decreasing.
    SharpDescending,
    /// Non-increasing with at least one tie.
    Descending,
    /// Not monotone in either direction.
    Unordered,
}

impl OrderingVerdict {
    fn of_sequence(weights: &[i64]) -> Self {
        if weights.len() <= 1 {
            return OrderingVerdict::Constant;
        }
        let mut any_up = false;
        let mut any_down = false;
        let mut any_tie = false;
        for w in weights.windows(2) {
            match w[1].cmp(&w[0]) {
                std::cmp::Ordering::Greater => any_up = true,
                std::cmp::Ordering::Less => any_down = true,
                std::cmp::Ordering::Equal => any_tie = true,
            }
        }
        match (any_up, any_down, any_tie) {
            (false, false, _) => OrderingVerdict::Constant,
            (true, false, false) => OrderingVerdict::SharpAscending,
            (true, false, true) => OrderingVerdict::Ascending,
            (false, true, false) => OrderingVerdict::SharpDescending,
            (false, true, true) => OrderingVerdict::Descending,
            (true, true, _) => OrderingVerdict::Unordered,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OrderingVerdict::Constant => "CONSTANT",
            OrderingVerdict::SharpAscending => "SHARP_ASCENDING",
            OrderingVerdict::Ascending => "ASCENDING",
            OrderingVerdict::SharpDescending => "SHARP_DESCENDING",
            OrderingVerdict::Descending => "DESCENDING",
            OrderingVerdict::Unordered => "NONE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "CONSTANT" => OrderingVerdict::Constant,
            "SHARP_ASCENDING" => OrderingVerdict::SharpAscending,
            "ASCENDING" => OrderingVerdict::Ascending,
            "SHARP_DESCENDING" => OrderingVerdict::SharpDescending,
            "DESCENDING" => OrderingVerdict::Descending,
            "NONE" => OrderingVerdict::Unordered,
            _ => return None,
        })
    }

    /// Monotone in some direction (anything but [`OrderingVerdict::Unordered`]).
    pub fn is_monotone(&self) -> bool {
        *self != OrderingVerdict::Unordered
    }
}

impl fmt::Display for OrderingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named class of vertices inside an [`OrderedPartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClass {
    pub name: String,
    pub members: Vec<VertexId>,
}

/// A named partition of the vertex set, used for per-class ordering checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    classes: Vec<PartitionClass>,
}

impl OrderedPartition {
    pub fn new(classes: Vec<(String, Vec<VertexId>)>) -> Self {
        OrderedPartition {
            classes: classes
                .into_iter()
                .map(|(name, members)| PartitionClass { name, members })
                .collect(),
        }
    }

    /// The natural partition by tag: `U`, `V`, and (when present) `APEX`.
    pub fn by_partition_tag(graph: &Graph) -> Self {
        let mut classes = vec![
            ("U".to_string(), (1..=graph.n()).map(VertexId::u).collect()),
            ("V".to_string(), (1..=graph.m()).map(VertexId::v).collect()),
        ];
        if graph.has_apex() {
            classes.push(("APEX".to_string(), vec![VertexId::apex()]));
        }
        OrderedPartition::new(classes)
    }

    pub fn classes(&self) -> &[PartitionClass] {
        &self.classes
    }

    /// Checks the classes are disjoint, contain only graph vertices, and
    /// together cover the whole vertex set.
    pub fn validate(&self, graph: &Graph) -> Result<(), LabelingError> {
        let mut seen = vec![false; graph.vertex_count()];
        for class in &self.classes {
            for &v in &class.members {
                let pos = graph
                    .vertex_position(v)
                    .ok_or(LabelingError::UnknownVertex(v))?;
                if seen[pos] {
                    return Err(LabelingError::MalformedPartition(format!(
                        "vertex {v} appears in more than one class"
                    )));
                }
                seen[pos] = true;
            }
        }
        if let Some(pos) = seen.iter().position(|&s| !s) {
            return Err(LabelingError::MalformedPartition(format!(
                "vertex {} is not covered by any class",
                graph.vertex_at(pos)
            )));
        }
        Ok(())
    }
}

/// Predicate results plus per-class orderings for one labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub is_bijection: bool,
    pub is_super: bool,
    pub is_eat: bool,
    pub is_vat: bool,
    pub is_tat: bool,
    pub class_orderings: Vec<(String, OrderingVerdict)>,
    pub is_weak_ordered: bool,
}
