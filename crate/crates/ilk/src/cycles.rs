//! Elementary cycles of a multigraph and the disjointness structure the
//! linking-number machinery needs: all cycles, all vertex-disjoint cycle
//! pairs, and all endpoint-disjoint edge pairs.
//!
//! A [`Cycle`] records both its vertex sequence and the exact edge
//! instances traversed, so parallel edges yield distinct cycles (two
//! parallel edges form a 2-cycle). Loops are not cycles here. Every cycle
//! is kept in canonical orientation: it starts at its smallest vertex and
//! proceeds toward the smaller of that vertex's two cycle neighbors; for
//! 2-cycles, where both neighbors coincide, the lower edge id goes first.

use crate::graph::{EdgeId, Graph, VertexId};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle length {0} is below 2")]
    TooShort(usize),
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(VertexId),
    #[error("edge {edge} does not join {from} and {to}")]
    EdgeMismatch { edge: EdgeId, from: VertexId, to: VertexId },
    #[error("edge {0} is used twice")]
    RepeatedEdge(EdgeId),
    #[error("vertex and edge sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

/// An elementary cycle in canonical orientation. `edges[i]` joins
/// `vertices[i]` to `vertices[(i + 1) % len]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl std::fmt::Debug for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle({:?} via {:?})", self.vertices, self.edges)
    }
}

// Serialization is one-way: a `Cycle` can always be written out, but raw
// data only becomes a `Cycle` through validation against a graph, via
// [`CycleData`] and [`Cycle::from_data`].
impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cycle", 2)?;
        s.serialize_field("vertices", &self.vertices)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

/// Unvalidated cycle data as it appears in serialized certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleData {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    /// Validates a vertex/edge sequence against `g` and canonicalizes its
    /// orientation.
    pub fn new(
        g: &Graph,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    ) -> Result<Cycle, CycleError> {
        if vertices.len() != edges.len() {
            return Err(CycleError::LengthMismatch(vertices.len(), edges.len()));
        }
        let k = vertices.len();
        if k < 2 {
            return Err(CycleError::TooShort(k));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex(v));
            }
        }
        let mut seen_edges = std::collections::HashSet::new();
        for i in 0..k {
            let (from, to) = (vertices[i], vertices[(i + 1) % k]);
            let (a, b) = g
                .edge(edges[i])
                .map_err(|_| CycleError::EdgeMismatch { edge: edges[i], from, to })?;
            if (a, b) != (from.min(to), from.max(to)) {
                return Err(CycleError::EdgeMismatch { edge: edges[i], from, to });
            }
            if !seen_edges.insert(edges[i]) {
                return Err(CycleError::RepeatedEdge(edges[i]));
            }
        }
        Ok(Self::canonicalize(vertices, edges))
    }

    /// Validates serialized cycle data against `g`.
    pub fn from_data(g: &Graph, data: CycleData) -> Result<Cycle, CycleError> {
        Cycle::new(g, data.vertices, data.edges)
    }

    /// The serializable form of this cycle.
    pub fn data(&self) -> CycleData {
        CycleData { vertices: self.vertices.clone(), edges: self.edges.clone() }
    }

    /// Rotates and possibly reverses into canonical orientation; inputs
    /// must already form a valid elementary cycle.
    fn canonicalize(mut vertices: Vec<VertexId>, mut edges: Vec<EdgeId>) -> Cycle {
        let k = vertices.len();
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .expect("nonempty");
        vertices.rotate_left(start);
        edges.rotate_left(start);
        let reverse = if k == 2 {
            edges[1] < edges[0]
        } else {
            vertices[k - 1] < vertices[1]
        };
        if reverse {
            // Reversed traversal visits the same start, then the old
            // vertices backwards; step i uses the old edge k-1-i.
            vertices[1..].reverse();
            edges.reverse();
        }
        Cycle { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid cycle has at least two vertices
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Position of `e` in the traversal, if the cycle uses it.
    pub fn edge_position(&self, e: EdgeId) -> Option<usize> {
        self.edges.iter().position(|&f| f == e)
    }

    /// +1 when step `i` traverses its edge from lower to higher label,
    /// -1 otherwise.
    pub fn step_direction(&self, i: usize) -> i64 {
        let k = self.vertices.len();
        if self.vertices[i] < self.vertices[(i + 1) % k] {
            1
        } else {
            -1
        }
    }

    pub fn is_vertex_disjoint(&self, other: &Cycle) -> bool {
        // Cycles are short; quadratic scan beats allocating sets.
        self.vertices.iter().all(|v| !other.vertices.contains(v))
    }
}

/// Every elementary cycle of `g`, each exactly once, sorted by vertex
/// sequence then edge sequence.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    let inc = g.incidence();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path_v: Vec<VertexId> = Vec::new();
    let mut path_e: Vec<EdgeId> = Vec::new();
    for start in g.vertices() {
        on_path[start] = true;
        path_v.push(start);
        dfs(g, &inc, start, &mut on_path, &mut path_v, &mut path_e, &mut out);
        path_v.pop();
        on_path[start] = false;
    }
    out.sort_unstable();
    out
}

fn dfs(
    g: &Graph,
    inc: &[Vec<(VertexId, EdgeId)>],
    start: VertexId,
    on_path: &mut Vec<bool>,
    path_v: &mut Vec<VertexId>,
    path_e: &mut Vec<EdgeId>,
    out: &mut Vec<Cycle>,
) {
    let current = *path_v.last().expect("path nonempty");
    for &(next, eid) in &inc[current] {
        if next == start && path_v.len() >= 2 {
            // Closing edge. Emit each undirected cycle exactly once: for
            // 2-cycles require ascending edge ids, otherwise require the
            // second vertex below the last (canonical direction).
            let closes_canonically = if path_v.len() == 2 {
                path_e[0] < eid
            } else {
                path_v[1] < path_v[path_v.len() - 1]
            };
            if closes_canonically && eid != path_e[0] {
                let mut vertices = path_v.clone();
                let mut edges = path_e.clone();
                edges.push(eid);
                // Already canonical: starts at the minimum vertex.
                debug_assert!(vertices.iter().all(|&v| v >= vertices[0]));
                let cycle = Cycle { vertices: std::mem::take(&mut vertices), edges: std::mem::take(&mut edges) };
                out.push(cycle);
            }
        }
        if next > start && !on_path[next] {
            on_path[next] = true;
            path_v.push(next);
            path_e.push(eid);
            dfs(g, inc, start, on_path, path_v, path_e, out);
            path_e.pop();
            path_v.pop();
            on_path[next] = false;
        }
    }
}

/// Indices `(i, j)`, `i < j`, of vertex-disjoint cycle pairs, in
/// lexicographic order. Buckets by length first, since two disjoint
/// cycles cannot exceed the vertex count combined.
pub fn disjoint_pair_indices(cycles: &[Cycle], vertex_count: usize) -> Vec<(usize, usize)> {
    let min_len = cycles.iter().map(Cycle::len).min().unwrap_or(0);
    let mut pairs = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        if c.len() + min_len > vertex_count {
            // Too long to pair with even the shortest cycle. Cycles are
            // sorted by vertex sequence, not length, so scan on.
            continue;
        }
        for (j, d) in cycles.iter().enumerate().skip(i + 1) {
            if c.len() + d.len() <= vertex_count && c.is_vertex_disjoint(d) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Vertex-disjoint cycle pairs of `g` as owned values, lexicographically
/// ordered.
pub fn disjoint_cycle_pairs(g: &Graph) -> Vec<(Cycle, Cycle)> {
    let cycles = enumerate_cycles(g);
    disjoint_pair_indices(&cycles, g.vertex_count())
        .into_iter()
        .map(|(i, j)| (cycles[i].clone(), cycles[j].clone()))
        .collect()
}

/// An unordered pair of edges with disjoint endpoint sets, identified by
/// its position in the lexicographic pair list. Twist vectors are indexed
/// by this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePair {
    pub index: usize,
    pub edges: (EdgeId, EdgeId),
}

/// All endpoint-disjoint edge pairs `(e, f)`, `e < f`, in lexicographic
/// order; `index` is the position in this list.
pub fn disjoint_edge_pairs(g: &Graph) -> Vec<EdgePair> {
    let edges = g.edges();
    let mut out = Vec::new();
    for e in 0..edges.len() {
        let (a, b) = edges[e];
        for f in (e + 1)..edges.len() {
            let (c, d) = edges[f];
            if a != c && a != d && b != c && b != d {
                out.push(EdgePair { index: out.len(), edges: (e, f) });
            }
        }
    }
    out
}
