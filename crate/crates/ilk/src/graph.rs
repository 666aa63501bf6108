//! Finite multigraphs with loops, plus the local operations the rest of
//! the crate builds on: complement, cone (join), edge deletion and
//! contraction, and the ∇Y / Y∇ moves.
//!
//! A [`Graph`] is immutable after construction. Edges are stored as a
//! sorted list of normalized endpoint pairs, so two graphs are equal
//! exactly when they have the same vertex count and the same edge
//! multiset, and an [`EdgeId`] is a stable index into that list.

use thiserror::Error;

/// Vertex label, always in `0..vertex_count`.
pub type VertexId = usize;

/// Index into [`Graph::edges`]; parallel edges get distinct ids.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge index {edge} out of range for graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("operation requires a simple graph: {reason}")]
    NotSimple { reason: String },
    #[error("cannot contract a loop (edge {edge} at vertex {vertex})")]
    LoopContraction { edge: EdgeId, vertex: VertexId },
    #[error("vertices ({0}, {1}, {2}) do not form a triangle")]
    NotATriangle(VertexId, VertexId, VertexId),
    #[error("vertex {vertex} has degree {degree}, not 3")]
    NotDegreeThree { vertex: VertexId, degree: usize },
    #[error("vertex {vertex} carries a loop")]
    LoopAtVertex { vertex: VertexId },
    #[error("vertex {vertex} does not have three distinct neighbors")]
    NeighborsNotDistinct { vertex: VertexId },
}

/// An undirected multigraph on vertices `0..vertex_count`.
///
/// Loops and parallel edges are allowed. Each stored edge is a pair
/// `(u, v)` with `u <= v`; the edge list is sorted, so the representation
/// is canonical for a fixed labeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.vertex_count, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new() }
    }

    /// Builds a graph from an edge list. Endpoint order within a pair is
    /// irrelevant; repeating a pair raises its multiplicity.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph { vertex_count, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    /// Normalized edge list, sorted; [`EdgeId`]s index into it.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Endpoints of edge `e`, normalized so the first is the lower label.
    pub fn edge(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges
            .get(e)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange { edge: e, edge_count: self.edges.len() })
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e), Some((u, v)) if u == v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Number of parallel copies of the edge `{u, v}` (or loops at `u`
    /// when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = (u.min(v), u.max(v));
        let start = self.edges.partition_point(|&e| e < key);
        self.edges[start..].iter().take_while(|&&e| e == key).count()
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Distinct vertices adjacent to `v`, sorted. A loop does not make a
    /// vertex its own neighbor here.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v && b != v {
                    Some(b)
                } else if b == v && a != v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Incidence list: for each vertex the `(other_endpoint, edge_id)`
    /// pairs of its incident edges; a loop at `v` appears twice under `v`.
    pub fn incidence(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, id));
            inc[v].push((u, id));
        }
        inc
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1]) && self.edges.iter().all(|&(u, v)| u != v)
    }

    /// Drops loops and collapses parallel edges to single copies.
    pub fn simplify(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|&(u, v)| u != v).collect();
        edges.dedup();
        Graph { vertex_count: self.vertex_count, edges }
    }

    /// True when every vertex is reachable from vertex 0 (vacuously true
    /// for the empty vertex set).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &inc[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &(w, _) in &inc[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Complement within the simple graphs: edge present iff absent in
    /// `self`. Errors on loops or parallel edges.
    pub fn complement(&self) -> Result<Graph, GraphError> {
        if !self.is_simple() {
            return Err(GraphError::NotSimple {
                reason: "complement is defined for simple graphs only".into(),
            });
        }
        let mut edges = Vec::new();
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph { vertex_count: self.vertex_count, edges })
    }

    /// Join: disjoint union of `self` and `other` plus every edge between
    /// the two sides. Vertices of `other` are relabeled to start at
    /// `self.vertex_count()`.
    pub fn cone(&self, other: &Graph) -> Graph {
        let n = self.vertex_count + other.vertex_count;
        let mut edges = self.edges.clone();
        let shift = self.vertex_count;
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        for u in 0..self.vertex_count {
            for v in 0..other.vertex_count {
                edges.push((u, v + shift));
            }
        }
        edges.sort_unstable();
        Graph { vertex_count: n, edges }
    }

    /// Removes one edge instance; vertex set unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph, GraphError> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Graph { vertex_count: self.vertex_count, edges })
    }

    /// Removes a vertex and its incident edges; higher labels shift down
    /// to keep vertices contiguous.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        if v >= self.vertex_count {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
        }
        let relabel = |w: VertexId| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        // Relabeling preserves order of normalized pairs, so the list stays sorted.
        Ok(Graph { vertex_count: self.vertex_count - 1, edges })
    }

    /// Removes every vertex in `set` at once (duplicates allowed),
    /// relabeling the survivors to stay contiguous.
    pub fn delete_vertices(&self, set: &[VertexId]) -> Result<Graph, GraphError> {
        let mut drop = vec![false; self.vertex_count];
        for &v in set {
            if v >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
            drop[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if !drop[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| !drop[a] && !drop[b])
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        Ok(Graph { vertex_count: next, edges })
    }

    /// Contracts edge `e`: its endpoints merge into the lower label and
    /// the higher label disappears (labels above it shift down). Other
    /// parallel copies of `e` become loops; with `simplify` set, loops
    /// and parallel duplicates in the result are dropped.
    pub fn contract_edge(&self, e: EdgeId, simplify: bool) -> Result<Graph, GraphError> {
        let (a, b) = self.edge(e)?;
        if a == b {
            return Err(GraphError::LoopContraction { edge: e, vertex: a });
        }
        // a < b by normalization: b merges into a, labels > b shift down.
        let relabel = |w: VertexId| {
            if w == b {
                a
            } else if w > b {
                w - 1
            } else {
                w
            }
        };
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &(u, v))| {
                let (x, y) = (relabel(u), relabel(v));
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        let contracted = Graph { vertex_count: self.vertex_count - 1, edges };
        Ok(if simplify { contracted.simplify() } else { contracted })
    }

    /// ∇Y move: removes one copy of each edge of the triangle `{a, b, c}`
    /// and attaches a new vertex (label `vertex_count`) to all three
    /// corners. Preserves edge count.
    pub fn delta_y(&self, a: VertexId, b: VertexId, c: VertexId) -> Result<Graph, GraphError> {
        for &v in &[a, b, c] {
            if v >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
            }
        }
        let distinct = a != b && b != c && a != c;
        if !distinct || !self.has_edge(a, b) || !self.has_edge(b, c) || !self.has_edge(a, c) {
            return Err(GraphError::NotATriangle(a, b, c));
        }
        let mut edges = self.edges.clone();
        for (u, v) in [(a, b), (b, c), (a, c)] {
            let key = (u.min(v), u.max(v));
            let pos = edges.binary_search(&key).expect("triangle edge present");
            edges.remove(pos);
        }
        let w = self.vertex_count;
        edges.extend([(a, w), (b, w), (c, w)]);
        edges.sort_unstable();
        Ok(Graph { vertex_count: self.vertex_count + 1, edges })
    }

    /// Y∇ move: removes a degree-3 vertex with three distinct neighbors
    /// and joins those neighbors pairwise. A pair that was already
    /// adjacent does not receive a parallel copy, so the created triangle
    /// is simple; preexisting multiplicities elsewhere are untouched.
    pub fn y_delta(&self, v: VertexId) -> Result<Graph, GraphError> {
        if v >= self.vertex_count {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
        }
        if self.multiplicity(v, v) > 0 {
            return Err(GraphError::LoopAtVertex { vertex: v });
        }
        let degree = self.degree(v);
        if degree != 3 {
            return Err(GraphError::NotDegreeThree { vertex: v, degree });
        }
        let nbrs = self.neighbors(v);
        if nbrs.len() != 3 {
            return Err(GraphError::NeighborsNotDistinct { vertex: v });
        }
        let stripped = self.delete_vertex(v)?;
        let relabel = |w: VertexId| if w > v { w - 1 } else { w };
        let mut edges = stripped.edges;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let (x, y) = (relabel(nbrs[i]), relabel(nbrs[j]));
                let key = (x.min(y), x.max(y));
                if edges.binary_search(&key).is_err() {
                    let pos = edges.partition_point(|&e| e < key);
                    edges.insert(pos, key);
                }
            }
        }
        Ok(Graph { vertex_count: self.vertex_count - 1, edges })
    }

    /// Subgraph induced by `verts` (deduplicated), relabeled by the sorted
    /// position of each kept vertex.
    pub fn induced(&self, verts: &[VertexId]) -> Result<Graph, GraphError> {
        let mut keep = vec![false; self.vertex_count];
        for &v in verts {
            if v >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
            }
            keep[v] = true;
        }
        let drop: Vec<VertexId> = (0..self.vertex_count).filter(|&v| !keep[v]).collect();
        self.delete_vertices(&drop)
    }

    /// Applies a permutation (`perm[old] = new`) to the vertex labels.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph, GraphError> {
        if perm.len() != self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                vertex_count: self.vertex_count,
            });
        }
        let mut seen = vec![false; self.vertex_count];
        for &p in perm {
            if p >= self.vertex_count || seen[p] {
                return Err(GraphError::VertexOutOfRange { vertex: p, vertex_count: self.vertex_count });
            }
            seen[p] = true;
        }
        Graph::from_edges(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn from_edges_normalizes_and_sorts() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3), (1, 3)]);
        assert_eq!(g.multiplicity(3, 1), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, vertex_count: 3 })
        );
    }

    #[test]
    fn degree_counts_loops_twice() {
        let g = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.neighbors(0), vec![1]);
    }

    #[test]
    fn simplify_drops_loops_and_parallels() {
        let g = Graph::from_edges(3, [(0, 0), (0, 1), (0, 1), (1, 2)]).unwrap();
        let s = g.simplify();
        assert_eq!(s.edges(), &[(0, 1), (1, 2)]);
        assert!(s.is_simple());
    }

    #[test]
    fn complement_is_involutive_and_rejects_multigraphs() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let c = g.complement().unwrap();
        assert_eq!(c.edge_count(), 10 - 5);
        assert_eq!(c.complement().unwrap(), g);
        let multi = Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert!(multi.complement().is_err());
    }

    #[test]
    fn cone_edge_count_and_k6() {
        // Joining with a single vertex adds one edge per vertex.
        let k5 = k(5);
        let coned = k5.cone(&Graph::empty(1));
        assert_eq!(coned, k(6));
        // Join edge count: e(G) + e(H) + |G||H|.
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let j = c4.cone(&k(2));
        assert_eq!(j.edge_count(), 4 + 1 + 8);
        assert_eq!(j.vertex_count(), 6);
    }

    #[test]
    fn delete_edge_removes_single_instance() {
        let g = Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let d = g.delete_edge(0).unwrap();
        assert_eq!(d.multiplicity(0, 1), 1);
        assert!(d.delete_edge(5).is_err());
    }

    #[test]
    fn delete_vertex_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = g.delete_vertex(1).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.edges(), &[(1, 2)]); // old (2,3) shifted down
    }

    #[test]
    fn contract_edge_merges_to_lower_label() {
        // Triangle with a pendant: contracting (1,2) keeps labels compact.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let e = g.edges().iter().position(|&p| p == (1, 2)).unwrap();
        let c = g.contract_edge(e, false).unwrap();
        assert_eq!(c.vertex_count(), 3);
        // (0,1) and (0,2) become parallel (0,1); (2,3) becomes (1,2).
        assert_eq!(c.edges(), &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(c.simplify(), g.contract_edge(e, true).unwrap());
    }

    #[test]
    fn contract_parallel_copy_leaves_loop() {
        let g = Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let c = g.contract_edge(0, false).unwrap();
        assert_eq!(c.edges(), &[(0, 0)]);
        assert_eq!(g.contract_edge(0, true).unwrap().edge_count(), 0);
    }

    #[test]
    fn contract_loop_is_an_error() {
        let g = Graph::from_edges(1, [(0, 0)]).unwrap();
        assert_eq!(
            g.contract_edge(0, false),
            Err(GraphError::LoopContraction { edge: 0, vertex: 0 })
        );
    }

    #[test]
    fn delta_y_then_y_delta_round_trips() {
        let g = k(6);
        let moved = g.delta_y(0, 1, 2).unwrap();
        assert_eq!(moved.vertex_count(), 7);
        assert_eq!(moved.edge_count(), 15);
        assert_eq!(moved.degree(6), 3);
        let back = moved.y_delta(6).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn delta_y_requires_a_triangle() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.delta_y(0, 1, 2), Err(GraphError::NotATriangle(0, 1, 2)));
        assert!(k(3).delta_y(0, 0, 1).is_err());
    }

    #[test]
    fn y_delta_requires_degree_three_distinct_neighbors() {
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.y_delta(0), Err(GraphError::NotDegreeThree { vertex: 0, degree: 4 }));
        let doubled = Graph::from_edges(3, [(0, 1), (0, 1), (0, 2)]).unwrap();
        assert_eq!(doubled.y_delta(0), Err(GraphError::NeighborsNotDistinct { vertex: 0 }));
        let looped = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(looped.y_delta(0), Err(GraphError::LoopAtVertex { vertex: 0 }));
    }

    #[test]
    fn y_delta_skips_existing_edges() {
        // Neighbors 1,2 already adjacent: no parallel copy is created.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let t = g.y_delta(0).unwrap();
        assert!(t.is_simple());
        assert_eq!(t.edge_count(), 3);
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(k(4).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn induced_subgraph_relabels_by_position() {
        let g = k(5);
        let h = g.induced(&[1, 3, 4]).unwrap();
        assert_eq!(h, k(3));
    }

    #[test]
    fn relabel_validates_permutation() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let r = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(r.edges(), &[(0, 2)]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        assert!(g.relabel(&[0, 1]).is_err());
    }
}
