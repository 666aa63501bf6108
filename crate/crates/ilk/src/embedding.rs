//! A combinatorial model of spatial embeddings: the base diagram places
//! the vertices in convex position (vertex `k` at angle `2πk/n` on a
//! circle) with straight chords for edges, and an integer twist vector,
//! indexed by the endpoint-disjoint edge pairs, inserts full twists
//! between edge pairs. Every spatial embedding is equivalent to one of
//! this form for the purposes of pairwise linking numbers.
//!
//! Crossing conventions, fixed once here and used everywhere:
//!
//! * two chords cross when their endpoints interleave on the circle;
//! * at a crossing the edge with the lexicographically smaller endpoint
//!   pair passes over;
//! * the stored sign orients both edges from lower to higher endpoint
//!   and is positive when (over direction, under direction) is a
//!   positively oriented plane basis — with the over/under rule above
//!   this works out to +1 at every base crossing, which the tests verify
//!   against a floating-point determinant oracle;
//! * a `+1` twist on the pair `(e, f)` adds `+1` to the linking number
//!   of any disjoint cycle pair traversing `e` and `f` in their
//!   lower-to-higher directions.
//!
//! The linking number of disjoint cycles `C`, `D` is the signed count of
//! crossings where `C` passes over `D`, plus the twist contributions of
//! the edge pairs split across the two cycles.

use crate::cycles::{self, Cycle, EdgePair};
use crate::graph::{EdgeId, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("twist vector has length {found}, expected one twist per disjoint edge pair ({expected})")]
    TwistLengthMismatch { expected: usize, found: usize },
    #[error("cycles are not vertex-disjoint")]
    CyclesNotDisjoint,
    #[error("cycle does not belong to this graph: {reason}")]
    ForeignCycle { reason: String },
    #[error("negative twist bound {0}")]
    NegativeTwistBound(i64),
}

/// A transverse crossing of the base diagram. `over` passes in front of
/// `under`; `sign` follows the orientation convention in the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub over: EdgeId,
    pub under: EdgeId,
    pub sign: i8,
}

/// All crossings of the convex-position diagram of `g`, ordered by edge
/// id pair. Loops cross nothing; parallel edges run side by side, so they
/// cross exactly the chords their twin crosses and never each other.
pub fn base_crossings(g: &Graph) -> Vec<Crossing> {
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        if a == b {
            continue;
        }
        for j in (i + 1)..edges.len() {
            let (c, d) = edges[j];
            if c == d || a == c || a == d || b == c || b == d {
                continue;
            }
            // Chords {a,b}, {c,d} with a<b, c<d cross iff exactly one of
            // c, d lies strictly inside the arc interval (a, b).
            let inside = |x: usize| a < x && x < b;
            if inside(c) == inside(d) {
                continue;
            }
            // Sorted pairs of distinct endpoints: the lex-smaller pair is
            // the one with the smaller first coordinate, and the derived
            // sign convention makes every stored crossing positive.
            let (over, under) = if (a, b) < (c, d) { (i, j) } else { (j, i) };
            out.push(Crossing { over, under, sign: 1 });
        }
    }
    out
}

/// A graph embedding described by the base diagram plus one integer
/// twist per disjoint edge pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingSpec {
    graph: Graph,
    twists: Vec<i64>,
    // Caches derived from the graph alone.
    pairs: Vec<EdgePair>,
    pair_index: HashMap<(EdgeId, EdgeId), usize>,
    crossings: Vec<Crossing>,
}

impl EmbeddingSpec {
    /// Wraps a graph and twist vector; the vector length must match the
    /// number of disjoint edge pairs.
    pub fn new(graph: Graph, twists: Vec<i64>) -> Result<Self, EmbeddingError> {
        let pairs = cycles::disjoint_edge_pairs(&graph);
        if twists.len() != pairs.len() {
            return Err(EmbeddingError::TwistLengthMismatch {
                expected: pairs.len(),
                found: twists.len(),
            });
        }
        let pair_index = pairs.iter().map(|p| (p.edges, p.index)).collect();
        let crossings = base_crossings(&graph);
        Ok(EmbeddingSpec { graph, twists, pairs, pair_index, crossings })
    }

    /// The base embedding: all twists zero.
    pub fn base(graph: Graph) -> Self {
        let pairs = cycles::disjoint_edge_pairs(&graph);
        let twists = vec![0; pairs.len()];
        let pair_index = pairs.iter().map(|p| (p.edges, p.index)).collect();
        let crossings = base_crossings(&graph);
        EmbeddingSpec { graph, twists, pairs, pair_index, crossings }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn edge_pairs(&self) -> &[EdgePair] {
        &self.pairs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Twist applied between two disjoint edges, in either order; `None`
    /// when the edges share an endpoint.
    pub fn twist_between(&self, e: EdgeId, f: EdgeId) -> Option<i64> {
        let key = (e.min(f), e.max(f));
        self.pair_index.get(&key).map(|&i| self.twists[i])
    }

    fn check_cycle(&self, c: &Cycle) -> Result<(), EmbeddingError> {
        let k = c.len();
        for i in 0..k {
            let (from, to) = (c.vertices()[i], c.vertices()[(i + 1) % k]);
            match self.graph.edge(c.edges()[i]) {
                Ok(pair) if pair == (from.min(to), from.max(to)) => {}
                _ => {
                    return Err(EmbeddingError::ForeignCycle {
                        reason: format!(
                            "edge {} does not join {from} and {to} in this graph",
                            c.edges()[i]
                        ),
                    })
                }
            }
        }
        Ok(())
    }

    /// Exact linking number of two vertex-disjoint cycles in this
    /// embedding. Symmetric in its arguments.
    pub fn linking_number(&self, c: &Cycle, d: &Cycle) -> Result<i64, EmbeddingError> {
        self.check_cycle(c)?;
        self.check_cycle(d)?;
        if !c.is_vertex_disjoint(d) {
            return Err(EmbeddingError::CyclesNotDisjoint);
        }
        Ok(self.linking_oriented(c, d, false))
    }

    /// Core sum; `reverse_c` flips the traversal orientation of `c`,
    /// which negates the result (each term carries one direction factor
    /// of `c`).
    fn linking_oriented(&self, c: &Cycle, d: &Cycle, reverse_c: bool) -> i64 {
        let flip = if reverse_c { -1 } else { 1 };
        let dir_c = direction_table(c, flip);
        let dir_d = direction_table(d, 1);
        let mut lk = 0i64;
        for cr in &self.crossings {
            if let (Some(&tc), Some(&td)) = (dir_c.get(&cr.over), dir_d.get(&cr.under)) {
                lk += cr.sign as i64 * tc * td;
            }
        }
        for (&eid, &tc) in &dir_c {
            for (&fid, &td) in &dir_d {
                if let Some(&p) = self.pair_index.get(&(eid.min(fid), eid.max(fid))) {
                    lk += self.twists[p] * tc * td;
                }
            }
        }
        lk
    }

    #[cfg(test)]
    pub(crate) fn linking_number_reversed(&self, c: &Cycle, d: &Cycle) -> i64 {
        self.linking_oriented(c, d, true)
    }

    /// Linking number mod 2; `true` means odd.
    pub fn linking_number_mod2(&self, c: &Cycle, d: &Cycle) -> Result<bool, EmbeddingError> {
        Ok(self.linking_number(c, d)?.rem_euclid(2) == 1)
    }

    /// Every disjoint cycle pair whose linking number has absolute value
    /// at least `min_abs`, sorted by decreasing |lk| and then by the
    /// cycle pair itself.
    pub fn all_links(&self, min_abs: u64) -> Vec<Link> {
        let cycle_list = cycles::enumerate_cycles(&self.graph);
        let mut out = Vec::new();
        for (i, j) in cycles::disjoint_pair_indices(&cycle_list, self.graph.vertex_count()) {
            let lk = self
                .linking_number(&cycle_list[i], &cycle_list[j])
                .expect("enumerated cycles are valid and disjoint");
            if lk.unsigned_abs() >= min_abs {
                out.push(Link {
                    first: cycle_list[i].clone(),
                    second: cycle_list[j].clone(),
                    linking_number: lk,
                });
            }
        }
        out.sort_by(|x, y| {
            y.linking_number
                .abs()
                .cmp(&x.linking_number.abs())
                .then_with(|| (&x.first, &x.second).cmp(&(&y.first, &y.second)))
        });
        out
    }
}

fn direction_table(c: &Cycle, flip: i64) -> HashMap<EdgeId, i64> {
    (0..c.len()).map(|i| (c.edges()[i], flip * c.step_direction(i))).collect()
}

/// A disjoint cycle pair with its linking number.
#[derive(Debug, Clone, Serialize)]
pub struct Link {
    pub first: Cycle,
    pub second: Cycle,
    pub linking_number: i64,
}

/// Deterministic random embedding: twists drawn uniformly from
/// `-twist_bound..=twist_bound`, seeded.
pub fn random_embedding(
    g: &Graph,
    seed: u64,
    twist_bound: i64,
) -> Result<EmbeddingSpec, EmbeddingError> {
    if twist_bound < 0 {
        return Err(EmbeddingError::NegativeTwistBound(twist_bound));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = cycles::disjoint_edge_pairs(g).len();
    let twists = (0..count).map(|_| rng.gen_range(-twist_bound..=twist_bound)).collect();
    EmbeddingSpec::new(g.clone(), twists)
}

// Wire format: the graph plus the raw twist vector; reconstruction
// revalidates the twist length.
#[derive(Serialize, Deserialize)]
struct EmbeddingWire {
    graph: Graph,
    twists: Vec<i64>,
}

impl Serialize for EmbeddingSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EmbeddingWire { graph: self.graph.clone(), twists: self.twists.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EmbeddingSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = EmbeddingWire::deserialize(deserializer)?;
        EmbeddingSpec::new(wire.graph, wire.twists).map_err(D::Error::custom)
    }
}
