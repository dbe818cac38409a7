//! Complete bipartite graphs and their joins with one apex vertex.
//!
//! Vertices and edges carry a fixed canonical order so that label vectors,
//! weight vectors, and exported certificates all agree on positions:
//! vertices are `u1..un, v1..vm` and then the apex (if present); edges are
//! the bipartite pairs `(u_i, v_j)` in `i`-major order, followed by the
//! apex edges `(u_i, apex)` for `i = 1..n`, then `(v_j, apex)` for
//! `j = 1..m`. Positions are computed arithmetically, not by lookup.

use std::fmt;

use thiserror::Error;

/// Which side of the bipartition (or the apex) a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartitionTag {
    U,
    V,
    Apex,
}

impl fmt::Display for PartitionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionTag::U => write!(f, "U"),
            PartitionTag::V => write!(f, "V"),
            PartitionTag::Apex => write!(f, "APEX"),
        }
    }
}

/// A vertex: a partition tag plus a 1-based index within its class.
///
/// The apex uses index 0; `u_i` and `v_j` use `i, j >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub tag: PartitionTag,
    pub index: u32,
}

impl VertexId {
    pub fn u(index: u32) -> Self {
        VertexId {
            tag: PartitionTag::U,
            index,
        }
    }

    pub fn v(index: u32) -> Self {
        VertexId {
            tag: PartitionTag::V,
            index,
        }
    }

    pub fn apex() -> Self {
        VertexId {
            tag: PartitionTag::Apex,
            index: 0,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            PartitionTag::U => write!(f, "u{}", self.index),
            PartitionTag::V => write!(f, "v{}", self.index),
            PartitionTag::Apex => write!(f, "apex"),
        }
    }
}

/// An undirected edge, stored with its endpoints in canonical order
/// (`U` before `V` before `Apex`, then by index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds the edge `{x, y}`, normalizing endpoint order.
    pub fn new(x: VertexId, y: VertexId) -> Self {
        if x <= y {
            Edge { a: x, b: y }
        } else {
            Edge { a: y, b: x }
        }
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    pub fn is_incident_to(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("both partition classes must be non-empty (got n={n}, m={m})")]
    EmptyPartition { n: u32, m: u32 },
    #[error("graph already has an apex vertex; joining again is not supported")]
    AlreadyJoined,
}

/// `K_{n,m}`, optionally joined with one extra vertex adjacent to all others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    m: u32,
    has_apex: bool,
    edges: Vec<Edge>,
}

impl Graph {
    /// The complete bipartite graph `K_{n,m}` with classes `u1..un` and
    /// `v1..vm`. Both classes must be non-empty.
    pub fn complete_bipartite(n: u32, m: u32) -> Result<Self, GraphError> {
        if n == 0 || m == 0 {
            return Err(GraphError::EmptyPartition { n, m });
        }
        let mut edges = Vec::with_capacity((n * m) as usize);
        for i in 1..=n {
            for j in 1..=m {
                edges.push(Edge::new(VertexId::u(i), VertexId::v(j)));
            }
        }
        Ok(Graph {
            n,
            m,
            has_apex: false,
            edges,
        })
    }

    /// The join of this graph with a single new vertex adjacent to every
    /// existing vertex.
    pub fn join_with_apex(&self) -> Result<Self, GraphError> {
        if self.has_apex {
            return Err(GraphError::AlreadyJoined);
        }
        let mut edges = self.edges.clone();
        edges.reserve((self.n + self.m) as usize);
        for i in 1..=self.n {
            edges.push(Edge::new(VertexId::u(i), VertexId::apex()));
        }
        for j in 1..=self.m {
            edges.push(Edge::new(VertexId::v(j), VertexId::apex()));
        }
        Ok(Graph {
            n: self.n,
            m: self.m,
            has_apex: true,
            edges,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn has_apex(&self) -> bool {
        self.has_apex
    }

    /// Number of vertices, `p`.
    pub fn vertex_count(&self) -> usize {
        (self.n + self.m) as usize + usize::from(self.has_apex)
    }

    /// Number of edges, `q`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total number of labeled elements, `p + q`.
    pub fn element_count(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    /// Vertices in canonical order: `u1..un, v1..vm`, then the apex.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|pos| self.vertex_at(pos))
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        match v.tag {
            PartitionTag::U => 1 <= v.index && v.index <= self.n,
            PartitionTag::V => 1 <= v.index && v.index <= self.m,
            PartitionTag::Apex => self.has_apex && v.index == 0,
        }
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edge_position(e).is_some()
    }

    /// Position of `v` in canonical vertex order.
    pub fn vertex_position(&self, v: VertexId) -> Option<usize> {
        if !self.contains_vertex(v) {
            return None;
        }
        Some(match v.tag {
            PartitionTag::U => (v.index - 1) as usize,
            PartitionTag::V => (self.n + v.index - 1) as usize,
            PartitionTag::Apex => (self.n + self.m) as usize,
        })
    }

    /// Vertex at canonical position `pos`. Panics if out of range.
    pub fn vertex_at(&self, pos: usize) -> VertexId {
        let n = self.n as usize;
        let m = self.m as usize;
        if pos < n {
            VertexId::u((pos + 1) as u32)
        } else if pos < n + m {
            VertexId::v((pos - n + 1) as u32)
        } else if pos == n + m && self.has_apex {
            VertexId::apex()
        } else {
            panic!(
                "vertex position {pos} out of range for K_{{{},{}}}",
                self.n, self.m
            );
        }
    }

    /// Position of `e` in canonical edge order, computed arithmetically:
    /// bipartite edges occupy `0..n*m` in `i`-major order, apex edges follow
    /// (`U` side first, then `V`).
    pub fn edge_position(&self, e: Edge) -> Option<usize> {
        let n = self.n as usize;
        let m = self.m as usize;
        let (a, b) = e.endpoints();
        match (a.tag, b.tag) {
            (PartitionTag::U, PartitionTag::V) => {
                if self.contains_vertex(a) && self.contains_vertex(b) {
                    Some((a.index as usize - 1) * m + (b.index as usize - 1))
                } else {
                    None
                }
            }
            (PartitionTag::U, PartitionTag::Apex) => {
                if self.has_apex && self.contains_vertex(a) {
                    Some(n * m + (a.index as usize - 1))
                } else {
                    None
                }
            }
            (PartitionTag::V, PartitionTag::Apex) => {
                if self.has_apex && self.contains_vertex(a) {
                    Some(n * m + n + (a.index as usize - 1))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Edge at canonical position `pos`. Panics if out of range.
    pub fn edge_at(&self, pos: usize) -> Edge {
        self.edges[pos]
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        if !self.contains_vertex(v) {
            return None;
        }
        let apex_bonus = usize::from(self.has_apex);
        Some(match v.tag {
            PartitionTag::U => self.m as usize + apex_bonus,
            PartitionTag::V => self.n as usize + apex_bonus,
            PartitionTag::Apex => (self.n + self.m) as usize,
        })
    }

    /// Canonical positions of the edges incident to `v`.
    pub fn incident_edge_positions(&self, v: VertexId) -> Option<Vec<usize>> {
        if !self.contains_vertex(v) {
            return None;
        }
        let n = self.n as usize;
        let m = self.m as usize;
        let mut positions = Vec::with_capacity(self.degree(v).unwrap_or(0));
        match v.tag {
            PartitionTag::U => {
                let i = v.index as usize - 1;
                positions.extend((0..m).map(|j| i * m + j));
                if self.has_apex {
                    positions.push(n * m + i);
                }
            }
            PartitionTag::V => {
                let j = v.index as usize - 1;
                positions.extend((0..n).map(|i| i * m + j));
                if self.has_apex {
                    positions.push(n * m + n + j);
                }
            }
            PartitionTag::Apex => {
                positions.extend(n * m..n * m + n + m);
            }
        }
        Some(positions)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_apex {
            write!(f, "K{{{},{}}}+K1", self.n, self.m)
        } else {
            write!(f, "K{{{},{}}}", self.n, self.m)
        }
    }
}
