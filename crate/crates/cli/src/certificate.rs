//! Labeling certificates: a versioned JSON artifact carrying a graph, its
//! total labeling, and (optionally) the weight and property reports.
//!
//! The JSON key order is fixed by struct declaration order and the
//! serializer is deterministic, so `serialize(parse(s)) == s` for any `s`
//! this module produced. Embedded reports are convenience output only —
//! every consumer recomputes them from the labels and treats a mismatch
//! as a verification failure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use antimagic_core::{
    Edge, Graph, GraphError, LabelingError, OrderedPartition, PartitionTag, PropertyReport,
    TotalLabeling, VertexId, WeightReport,
};

/// Bumped on any incompatible change to the JSON layout.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("invalid certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?} (this tool reads version {SCHEMA_VERSION})")]
    SchemaVersion(String),
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("graph family {family:?} contradicts has_apex={has_apex}")]
    FamilyApexMismatch { family: String, has_apex: bool },
    #[error("unknown partition tag {0:?}")]
    UnknownTag(String),
    #[error("certificate labels do not cover the graph: {0}")]
    Structure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub graph: GraphSpec,
    pub labels: Labels,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reports: Option<Reports>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub family: String,
    pub n: u32,
    pub m: u32,
    pub has_apex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<EdgeLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub tag: String,
    pub index: u32,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabel {
    pub a_tag: String,
    pub a_index: u32,
    pub b_tag: String,
    pub b_index: u32,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reports {
    pub weights: WeightsSection,
    pub properties: PropertiesSection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsSection {
    pub edge_weights: Vec<EdgeWeight>,
    pub vertex_weights: Vec<VertexWeight>,
    pub duplicate_edge_weight_groups: Vec<EdgeWeightGroup>,
    pub duplicate_vertex_weight_groups: Vec<VertexWeightGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWeight {
    pub edge: String,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWeight {
    pub vertex: String,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWeightGroup {
    pub weight: i64,
    pub edges: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWeightGroup {
    pub weight: i64,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertiesSection {
    pub is_bijection: bool,
    pub is_super: bool,
    pub is_eat: bool,
    pub is_vat: bool,
    pub is_tat: bool,
    pub class_orderings: Vec<ClassOrdering>,
    pub is_weak_ordered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOrdering {
    pub class: String,
    pub ordering: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub tool_version: String,
}

fn tag_str(tag: PartitionTag) -> &'static str {
    match tag {
        PartitionTag::U => "U",
        PartitionTag::V => "V",
        PartitionTag::Apex => "APEX",
    }
}

fn parse_tag(s: &str) -> Result<PartitionTag, CertificateError> {
    match s {
        "U" => Ok(PartitionTag::U),
        "V" => Ok(PartitionTag::V),
        "APEX" => Ok(PartitionTag::Apex),
        other => Err(CertificateError::UnknownTag(other.to_string())),
    }
}

fn reports_from(weights: &WeightReport, properties: &PropertyReport) -> Reports {
    Reports {
        weights: WeightsSection {
            edge_weights: weights
                .edge_weights
                .iter()
                .map(|&(e, weight)| EdgeWeight {
                    edge: e.to_string(),
                    weight,
                })
                .collect(),
            vertex_weights: weights
                .vertex_weights
                .iter()
                .map(|&(v, weight)| VertexWeight {
                    vertex: v.to_string(),
                    weight,
                })
                .collect(),
            duplicate_edge_weight_groups: weights
                .duplicate_edge_weight_groups
                .iter()
                .map(|g| EdgeWeightGroup {
                    weight: g.weight,
                    edges: g.members.iter().map(|e| e.to_string()).collect(),
                })
                .collect(),
            duplicate_vertex_weight_groups: weights
                .duplicate_vertex_weight_groups
                .iter()
                .map(|g| VertexWeightGroup {
                    weight: g.weight,
                    vertices: g.members.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        },
        properties: PropertiesSection {
            is_bijection: properties.is_bijection,
            is_super: properties.is_super,
            is_eat: properties.is_eat,
            is_vat: properties.is_vat,
            is_tat: properties.is_tat,
            class_orderings: properties
                .class_orderings
                .iter()
                .map(|(class, verdict)| ClassOrdering {
                    class: class.clone(),
                    ordering: verdict.as_str().to_string(),
                })
                .collect(),
            is_weak_ordered: properties.is_weak_ordered,
        },
    }
}

impl Certificate {
    /// Wraps a labeling as a certificate, embedding freshly computed
    /// reports over the tag partition.
    pub fn from_labeling(labeling: &TotalLabeling, construction: &str) -> Certificate {
        let graph = labeling.graph();
        let partition = OrderedPartition::by_partition_tag(graph);
        let properties = labeling
            .property_report(&partition)
            .expect("tag partition covers the graph");
        let weights = labeling.weight_report();

        let vertices = graph
            .vertices()
            .map(|v| VertexLabel {
                tag: tag_str(v.tag).to_string(),
                index: v.index,
                label: labeling.vertex_label(v).expect("vertex in graph"),
            })
            .collect();
        let edges = graph
            .edges()
            .iter()
            .map(|&e| {
                let (a, b) = e.endpoints();
                EdgeLabel {
                    a_tag: tag_str(a.tag).to_string(),
                    a_index: a.index,
                    b_tag: tag_str(b.tag).to_string(),
                    b_index: b.index,
                    label: labeling.edge_label(e).expect("edge in graph"),
                }
            })
            .collect();

        Certificate {
            schema_version: SCHEMA_VERSION.to_string(),
            graph: GraphSpec {
                family: if graph.has_apex() {
                    "apex_join"
                } else {
                    "complete_bipartite"
                }
                .to_string(),
                n: graph.n(),
                m: graph.m(),
                has_apex: graph.has_apex(),
            },
            labels: Labels { vertices, edges },
            reports: Some(reports_from(&weights, &properties)),
            provenance: Provenance {
                construction: construction.to_string(),
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    /// Serializes with stable key order, two-space indentation, and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("certificate serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertificateError> {
        let cert: Certificate = serde_json::from_str(text)?;
        if cert.schema_version != SCHEMA_VERSION {
            return Err(CertificateError::SchemaVersion(cert.schema_version));
        }
        Ok(cert)
    }

    /// Rebuilds the graph described by the `graph` section.
    pub fn to_graph(&self) -> Result<Graph, CertificateError> {
        let expected_apex = match self.graph.family.as_str() {
            "complete_bipartite" => false,
            "apex_join" => true,
            other => return Err(CertificateError::UnknownFamily(other.to_string())),
        };
        if self.graph.has_apex != expected_apex {
            return Err(CertificateError::FamilyApexMismatch {
                family: self.graph.family.clone(),
                has_apex: self.graph.has_apex,
            });
        }
        let base = Graph::complete_bipartite(self.graph.n, self.graph.m)?;
        Ok(if expected_apex {
            base.join_with_apex()?
        } else {
            base
        })
    }

    /// Rebuilds the labeling, requiring every vertex and edge of the graph
    /// to be labeled exactly once. Label *values* are not vetted here
    /// beyond positivity — defective labelings load fine and are diagnosed
    /// by the property predicates.
    pub fn to_labeling(&self) -> Result<TotalLabeling, CertificateError> {
        let graph = self.to_graph()?;

        let mut vertex_labels: Vec<Option<i64>> = vec![None; graph.vertex_count()];
        for entry in &self.labels.vertices {
            let v = VertexId {
                tag: parse_tag(&entry.tag)?,
                index: entry.index,
            };
            let pos = graph.vertex_position(v).ok_or_else(|| {
                CertificateError::Structure(format!(
                    "vertex {v} is not in K{{{},{}}}",
                    graph.n(),
                    graph.m()
                ))
            })?;
            if vertex_labels[pos].replace(entry.label).is_some() {
                return Err(CertificateError::Structure(format!(
                    "vertex {v} is labeled twice"
                )));
            }
        }

        let mut edge_labels: Vec<Option<i64>> = vec![None; graph.edge_count()];
        for entry in &self.labels.edges {
            let a = VertexId {
                tag: parse_tag(&entry.a_tag)?,
                index: entry.a_index,
            };
            let b = VertexId {
                tag: parse_tag(&entry.b_tag)?,
                index: entry.b_index,
            };
            let e = Edge::new(a, b);
            let pos = graph.edge_position(e).ok_or_else(|| {
                CertificateError::Structure(format!("edge {e} is not in the graph"))
            })?;
            if edge_labels[pos].replace(entry.label).is_some() {
                return Err(CertificateError::Structure(format!(
                    "edge {e} is labeled twice"
                )));
            }
        }

        let vertex_labels: Vec<i64> = vertex_labels
            .into_iter()
            .enumerate()
            .map(|(pos, label)| {
                label.ok_or_else(|| {
                    CertificateError::Structure(format!(
                        "vertex {} has no label",
                        graph.vertex_at(pos)
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        let edge_labels: Vec<i64> = edge_labels
            .into_iter()
            .enumerate()
            .map(|(pos, label)| {
                label.ok_or_else(|| {
                    CertificateError::Structure(format!("edge {} has no label", graph.edge_at(pos)))
                })
            })
            .collect::<Result<_, _>>()?;

        Ok(TotalLabeling::new(graph, vertex_labels, edge_labels)?)
    }

    /// Recomputes the report section from the labels. Used by the verifier
    /// to cross-check any embedded reports.
    pub fn recompute_reports(labeling: &TotalLabeling) -> Reports {
        let partition = OrderedPartition::by_partition_tag(labeling.graph());
        let properties = labeling
            .property_report(&partition)
            .expect("tag partition covers the graph");
        reports_from(&labeling.weight_report(), &properties)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use antimagic_core::construct_knn;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let labeling = construct_knn(4).unwrap();
        let cert = Certificate::from_labeling(&labeling, "knn");
        let json = cert.to_json();
        let parsed = Certificate::from_json(&json).unwrap();
        assert_eq!(parsed, cert);
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn labeling_round_trips_through_certificate() {
        let labeling = construct_knn(4).unwrap();
        let cert = Certificate::from_labeling(&labeling, "knn");
        let rebuilt = cert.to_labeling().unwrap();
        assert_eq!(rebuilt, labeling);
    }

    #[test]
    fn embedded_reports_match_recomputation() {
        let labeling = construct_knn(5).unwrap();
        let cert = Certificate::from_labeling(&labeling, "knn");
        let rebuilt = cert.to_labeling().unwrap();
        assert_eq!(
            cert.reports.unwrap(),
            Certificate::recompute_reports(&rebuilt)
        );
    }

    #[test]
    fn schema_version_is_checked() {
        let labeling = construct_knn(4).unwrap();
        let mut cert = Certificate::from_labeling(&labeling, "knn");
        cert.schema_version = "99".to_string();
        let err = Certificate::from_json(&cert.to_json()).unwrap_err();
        assert!(matches!(err, CertificateError::SchemaVersion(v) if v == "99"));
    }

    #[test]
    fn structural_defects_are_rejected() {
        let labeling = construct_knn(4).unwrap();
        let good = Certificate::from_labeling(&labeling, "knn");

        let mut missing = good.clone();
        missing.labels.vertices.pop();
        assert!(matches!(
            missing.to_labeling(),
            Err(CertificateError::Structure(_))
        ));

        let mut doubled = good.clone();
        let first = doubled.labels.edges[0].clone();
        doubled.labels.edges.push(first);
        assert!(matches!(
            doubled.to_labeling(),
            Err(CertificateError::Structure(_))
        ));

        let mut alien = good.clone();
        alien.labels.vertices[0].tag = "W".to_string();
        assert!(matches!(
            alien.to_labeling(),
            Err(CertificateError::UnknownTag(_))
        ));

        let mut wrong_family = good;
        wrong_family.graph.family = "apex_join".to_string();
        assert!(matches!(
            wrong_family.to_graph(),
            Err(CertificateError::FamilyApexMismatch { .. })
        ));
    }

    #[test]
    fn corrupted_label_values_still_load() {
        // Value-level corruption is a verification matter, not a parse error.
        let labeling = construct_knn(4).unwrap();
        let mut cert = Certificate::from_labeling(&labeling, "knn");
        cert.labels.edges[0].label = cert.labels.edges[1].label;
        let rebuilt = cert.to_labeling().unwrap();
        let check = rebuilt.check_total_bijection();
        assert!(!check.is_bijection());
        assert_eq!(check.duplicated.len(), 1);
        assert_eq!(check.missing.len(), 1);
    }
}
