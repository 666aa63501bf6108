//! Exact, budgeted search for a doubled-4-cycle minor that is double
//! linked mod 2 in a given embedding.
//!
//! The doubled 4-cycle (catalog name `D4`) is the 4-cycle with every edge
//! doubled; its four digons pair up into two vertex-disjoint opposite
//! pairs. A witness here is a minor model of it inside the host: four
//! pairwise-disjoint connected branch sets `B0..B3` (indices cyclic mod
//! 4), two distinct connecting edges between each consecutive pair
//! `(Bi, Bi+1)`, and the four derived cycles `Z0..Z3`, where `Zi` runs
//! through `Bi` and `Bi+1` using both connecting edges of that side.
//! Opposite cycles are vertex-disjoint by construction, and the witness
//! requires both linking parities, `lk(Z0, Z2)` and `lk(Z1, Z3)` mod 2,
//! to be odd.
//!
//! The search is exact within its node budget: a returned witness always
//! verifies, and the "none" outcome is only reported after the whole
//! space has been exhausted — every 4-tuple of branch sets (smallest
//! total size first, each tuple once up to the dihedral symmetry of the
//! cyclic structure), every choice of connecting-edge pairs, and every
//! pair of branch-set paths completing the cycles. Anything cut short by
//! the budget is reported as a distinct budget-exceeded outcome. The
//! search is single threaded, so the reported witness is deterministic.

use crate::catalog;
use crate::cycles::{Cycle, CycleData};
use crate::embedding::{random_embedding, EmbeddingError, EmbeddingSpec};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso;
use crate::minors::connected_in;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default search-node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum D4Error {
    #[error("graphs beyond 64 vertices exceed the search's bitmask width")]
    TooManyVertices,
    #[error("bad witness data: {reason}")]
    BadWitness { reason: String },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// A verified-shape double-link witness: the minor model plus the four
/// derived cycles and their recorded parities. Serializes freely; raw
/// data re-enters only through [`D4Witness::from_data`], and semantic
/// validity is [`verify_d4_witness`]'s job.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct D4Witness {
    branch_sets: [Vec<VertexId>; 4],
    connecting_edges: [(EdgeId, EdgeId); 4],
    cycles: [Cycle; 4],
    parities: (bool, bool),
}

/// Unvalidated witness data as it appears in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D4WitnessData {
    pub branch_sets: [Vec<VertexId>; 4],
    pub connecting_edges: [(EdgeId, EdgeId); 4],
    pub cycles: [CycleData; 4],
    pub parities: (bool, bool),
}

impl D4Witness {
    /// Branch sets in cyclic order; side `i` joins set `i` to set
    /// `(i + 1) % 4`.
    pub fn branch_sets(&self) -> &[Vec<VertexId>; 4] {
        &self.branch_sets
    }

    /// The two connecting edges of each side.
    pub fn connecting_edges(&self) -> &[(EdgeId, EdgeId); 4] {
        &self.connecting_edges
    }

    /// The derived cycles; `cycles()[i]` crosses side `i`'s edges.
    pub fn cycles(&self) -> &[Cycle; 4] {
        &self.cycles
    }

    /// Recorded linking parities of `(Z0, Z2)` and `(Z1, Z3)`.
    pub fn parities(&self) -> (bool, bool) {
        self.parities
    }

    /// The serializable form of this witness.
    pub fn data(&self) -> D4WitnessData {
        D4WitnessData {
            branch_sets: self.branch_sets.clone(),
            connecting_edges: self.connecting_edges,
            cycles: [
                self.cycles[0].data(),
                self.cycles[1].data(),
                self.cycles[2].data(),
                self.cycles[3].data(),
            ],
            parities: self.parities,
        }
    }

    /// Rebuilds a witness from serialized data, checking well-formedness
    /// against `g`: valid cycles, in-range vertices and edge ids, and two
    /// distinct edges per side. Semantic claims (disjointness,
    /// connectivity, the quotient shape, the parities) stay with
    /// [`verify_d4_witness`], so tampered witnesses can be constructed
    /// and then rejected there.
    pub fn from_data(g: &Graph, data: D4WitnessData) -> Result<D4Witness, D4Error> {
        let bad = |reason: String| D4Error::BadWitness { reason };
        for (i, set) in data.branch_sets.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for &v in set {
                if v >= g.vertex_count() {
                    return Err(bad(format!("vertex {v} of branch set {i} is out of range")));
                }
                if !seen.insert(v) {
                    return Err(bad(format!("vertex {v} repeats in branch set {i}")));
                }
            }
        }
        for (i, &(e, f)) in data.connecting_edges.iter().enumerate() {
            if e == f {
                return Err(bad(format!("side {i} lists edge {e} twice")));
            }
            for edge in [e, f] {
                if g.edge(edge).is_err() {
                    return Err(bad(format!("side {i} names unknown edge {edge}")));
                }
            }
        }
        let [c0, c1, c2, c3] = data.cycles;
        let cycle = |d: CycleData| {
            Cycle::from_data(g, d).map_err(|e| bad(format!("invalid cycle: {e}")))
        };
        Ok(D4Witness {
            branch_sets: data.branch_sets,
            connecting_edges: data.connecting_edges,
            cycles: [cycle(c0)?, cycle(c1)?, cycle(c2)?, cycle(c3)?],
            parities: data.parities,
        })
    }
}

/// Three-valued search result. Budget exhaustion is kept apart from a
/// completed negative answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum D4Outcome {
    Witness(D4Witness),
    None,
    BudgetExceeded { nodes: u64 },
}

/// Searches `emb` for a double-linked doubled-4-cycle minor under the
/// default node budget.
pub fn find_double_linked_d4(emb: &EmbeddingSpec) -> Result<D4Outcome, D4Error> {
    find_double_linked_d4_budgeted(emb, DEFAULT_NODE_BUDGET)
}

/// Budgeted variant of [`find_double_linked_d4`]. A witness outcome has
/// already passed [`verify_d4_witness`]; the none outcome means the full
/// search space was exhausted.
pub fn find_double_linked_d4_budgeted(
    emb: &EmbeddingSpec,
    budget: u64,
) -> Result<D4Outcome, D4Error> {
    if emb.graph().vertex_count() > 64 {
        return Err(D4Error::TooManyVertices);
    }
    let mut searcher = Searcher::new(emb, budget);
    Ok(searcher.outcome())
}

/// Recomputes every witness invariant against `emb`: branch sets
/// nonempty, pairwise disjoint and connected; two distinct connecting
/// edges per side, each joining consecutive sets; the quotient by the
/// branch sets isomorphic to the doubled 4-cycle; each cycle confined to
/// its two sets and crossing between them exactly via its side's edges;
/// opposite cycles vertex-disjoint; and both linking parities recomputed,
/// odd, and equal to the recorded ones.
pub fn verify_d4_witness(emb: &EmbeddingSpec, w: &D4Witness) -> bool {
    let g = emb.graph();
    let n = g.vertex_count();
    if n > 64 {
        return false;
    }
    let mut side_of = vec![None; n];
    let mut masks = [0u64; 4];
    for (i, set) in w.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= n || side_of[v].is_some() {
                return false;
            }
            side_of[v] = Some(i);
            masks[i] |= 1 << v;
        }
        if !connected_in(g, masks[i]) {
            return false;
        }
    }
    let mut quotient_edges = Vec::with_capacity(8);
    for (i, &(e, f)) in w.connecting_edges.iter().enumerate() {
        if e == f {
            return false;
        }
        for edge in [e, f] {
            let Ok((a, b)) = g.edge(edge) else {
                return false;
            };
            match (side_of[a], side_of[b]) {
                (Some(x), Some(y)) if (x == i && y == (i + 1) % 4) || (y == i && x == (i + 1) % 4) => {
                    quotient_edges.push((x, y));
                }
                _ => return false,
            }
        }
    }
    let quotient = Graph::from_edges(4, quotient_edges).expect("side indices are below four");
    let d4 = catalog::catalog("D4").expect("the catalog knows the doubled 4-cycle");
    if !iso::is_isomorphic(&quotient, &d4) {
        return false;
    }
    for (i, z) in w.cycles.iter().enumerate() {
        let (e, f) = w.connecting_edges[i];
        if z.edge_position(e).is_none() || z.edge_position(f).is_none() {
            return false;
        }
        for &v in z.vertices() {
            if side_of[v] != Some(i) && side_of[v] != Some((i + 1) % 4) {
                return false;
            }
        }
        for &edge in z.edges() {
            if edge == e || edge == f {
                continue;
            }
            let Ok((a, b)) = g.edge(edge) else {
                return false;
            };
            // Interior edges stay inside one branch set of the side.
            if side_of[a] != side_of[b] || (side_of[a] != Some(i) && side_of[a] != Some((i + 1) % 4))
            {
                return false;
            }
        }
    }
    if !w.cycles[0].is_vertex_disjoint(&w.cycles[2])
        || !w.cycles[1].is_vertex_disjoint(&w.cycles[3])
    {
        return false;
    }
    let (Ok(p02), Ok(p13)) = (
        emb.linking_number_mod2(&w.cycles[0], &w.cycles[2]),
        emb.linking_number_mod2(&w.cycles[1], &w.cycles[3]),
    ) else {
        return false;
    };
    p02 && p13 && w.parities == (p02, p13)
}

/// Outcome of one census sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleOutcome {
    Witness,
    None,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusSample {
    pub index: usize,
    pub outcome: SampleOutcome,
    pub nodes: u64,
}

/// Aggregate census over sampled embeddings. `fraction` is witnesses
/// over completed (non-budget) samples, `0.0` when nothing completed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct D4Census {
    pub samples: Vec<CensusSample>,
    pub witnesses: usize,
    pub completed: usize,
    pub fraction: f64,
    pub total_nodes: u64,
}

/// Runs the search over `samples` seeded random embeddings of `g` and
/// reports the fraction admitting a double-link witness plus the search
/// effort. Deterministic in `seed`; per-sample budget overruns are
/// recorded, not fatal.
pub fn d4_census(
    g: &Graph,
    samples: usize,
    seed: u64,
    twist_bound: i64,
    budget: u64,
) -> Result<D4Census, D4Error> {
    if g.vertex_count() > 64 {
        return Err(D4Error::TooManyVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    let (mut witnesses, mut completed, mut total_nodes) = (0usize, 0usize, 0u64);
    for index in 0..samples {
        let emb = random_embedding(g, rng.gen::<u64>(), twist_bound)?;
        let mut searcher = Searcher::new(&emb, budget);
        let outcome = match searcher.outcome() {
            D4Outcome::Witness(_) => {
                witnesses += 1;
                completed += 1;
                SampleOutcome::Witness
            }
            D4Outcome::None => {
                completed += 1;
                SampleOutcome::None
            }
            D4Outcome::BudgetExceeded { .. } => SampleOutcome::BudgetExceeded,
        };
        total_nodes += searcher.ticker.nodes;
        out.push(CensusSample { index, outcome, nodes: searcher.ticker.nodes });
    }
    let fraction = if completed > 0 { witnesses as f64 / completed as f64 } else { 0.0 };
    Ok(D4Census { samples: out, witnesses, completed, fraction, total_nodes })
}

/// Budget exhaustion signal threaded through the search.
struct Stop;

struct Ticker {
    nodes: u64,
    budget: u64,
}

impl Ticker {
    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Stop)
        } else {
            Ok(())
        }
    }
}

/// A candidate cycle for one side: the connecting-edge pair it crosses
/// on, plus the cycle itself.
struct SideChoice {
    edges: (EdgeId, EdgeId),
    cycle: Cycle,
}

type PathInSet = (Vec<VertexId>, Vec<EdgeId>);

struct Searcher<'a> {
    emb: &'a EmbeddingSpec,
    g: &'a Graph,
    n: usize,
    full: u64,
    nbr: Vec<u64>,
    inc: Vec<Vec<(VertexId, EdgeId)>>,
    edge_bits: Vec<(u64, u64)>,
    ticker: Ticker,
}

impl<'a> Searcher<'a> {
    fn new(emb: &'a EmbeddingSpec, budget: u64) -> Self {
        let g = emb.graph();
        let n = g.vertex_count();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let nbr: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).into_iter().fold(0u64, |m, w| m | 1 << w))
            .collect();
        let edge_bits = g.edges().iter().map(|&(u, v)| (1u64 << u, 1u64 << v)).collect();
        Searcher {
            emb,
            g,
            n,
            full,
            nbr,
            inc: g.incidence(),
            edge_bits,
            ticker: Ticker { nodes: 0, budget },
        }
    }

    fn outcome(&mut self) -> D4Outcome {
        match self.run() {
            Ok(Some(w)) => D4Outcome::Witness(w),
            Ok(None) => D4Outcome::None,
            Err(Stop) => D4Outcome::BudgetExceeded { nodes: self.ticker.nodes },
        }
    }

    /// Iterates branch-set tuples smallest total size first; within a
    /// total, size compositions in lexicographic order.
    fn run(&mut self) -> Result<Option<D4Witness>, Stop> {
        for total in 4..=self.n {
            for s0 in 1..=(total - 3) {
                for s1 in 1..=(total - s0 - 2) {
                    for s2 in 1..=(total - s0 - s1 - 1) {
                        let sizes = [s0, s1, s2, total - s0 - s1 - s2];
                        if let Some(w) = self.structures(sizes)? {
                            return Ok(Some(w));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Every placement of four disjoint connected branch sets with the
    /// given sizes and at least two connecting edges per side, each
    /// cyclic structure exactly once: the smallest vertex of the union
    /// sits in set 0 (kills rotations) and set 1's minimum is below set
    /// 3's (kills the remaining reflection).
    fn structures(&mut self, sizes: [usize; 4]) -> Result<Option<D4Witness>, Stop> {
        let total: usize = sizes.iter().sum();
        for m in 0..self.n {
            if self.n - m < total {
                break;
            }
            let mut b0s = Vec::new();
            collect_connected(
                &self.nbr,
                &mut self.ticker,
                1u64 << m,
                self.nbr[m] & above(m, self.full),
                above(m, self.full),
                sizes[0],
                &mut b0s,
            )?;
            for &b0 in &b0s {
                let rem1 = above(m, self.full) & !b0;
                let mut seeds1 = rem1;
                while seeds1 != 0 {
                    let seed1 = seeds1.trailing_zeros() as usize;
                    seeds1 &= seeds1 - 1;
                    let allowed1 = rem1 & above(seed1, self.full);
                    let mut b1s = Vec::new();
                    collect_connected(
                        &self.nbr,
                        &mut self.ticker,
                        1u64 << seed1,
                        self.nbr[seed1] & allowed1,
                        allowed1,
                        sizes[1],
                        &mut b1s,
                    )?;
                    for &b1 in &b1s {
                        if self.edge_count_between(b0, b1) < 2 {
                            continue;
                        }
                        let rem2 = rem1 & !b1;
                        let mut seeds2 = rem2;
                        while seeds2 != 0 {
                            let seed2 = seeds2.trailing_zeros() as usize;
                            seeds2 &= seeds2 - 1;
                            let allowed2 = rem2 & above(seed2, self.full);
                            let mut b2s = Vec::new();
                            collect_connected(
                                &self.nbr,
                                &mut self.ticker,
                                1u64 << seed2,
                                self.nbr[seed2] & allowed2,
                                allowed2,
                                sizes[2],
                                &mut b2s,
                            )?;
                            for &b2 in &b2s {
                                if self.edge_count_between(b1, b2) < 2 {
                                    continue;
                                }
                                let rem3 = rem2 & !b2;
                                let mut seeds3 = rem3 & above(seed1, self.full);
                                while seeds3 != 0 {
                                    let seed3 = seeds3.trailing_zeros() as usize;
                                    seeds3 &= seeds3 - 1;
                                    let allowed3 = rem3 & above(seed3, self.full);
                                    let mut b3s = Vec::new();
                                    collect_connected(
                                        &self.nbr,
                                        &mut self.ticker,
                                        1u64 << seed3,
                                        self.nbr[seed3] & allowed3,
                                        allowed3,
                                        sizes[3],
                                        &mut b3s,
                                    )?;
                                    for &b3 in &b3s {
                                        if self.edge_count_between(b2, b3) < 2
                                            || self.edge_count_between(b3, b0) < 2
                                        {
                                            continue;
                                        }
                                        if let Some(w) = self.try_structure([b0, b1, b2, b3])? {
                                            return Ok(Some(w));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn edge_count_between(&self, a: u64, b: u64) -> usize {
        self.edge_bits
            .iter()
            .filter(|&&(bu, bv)| (bu & a != 0 && bv & b != 0) || (bu & b != 0 && bv & a != 0))
            .count()
    }

    fn connecting_edges(&self, a: u64, b: u64) -> Vec<EdgeId> {
        self.edge_bits
            .iter()
            .enumerate()
            .filter(|&(_, &(bu, bv))| (bu & a != 0 && bv & b != 0) || (bu & b != 0 && bv & a != 0))
            .map(|(id, _)| id)
            .collect()
    }

    /// Decides one branch-set tuple exhaustively. The two parity
    /// conditions touch disjoint sides, so they are searched
    /// independently; both must admit an odd pair.
    fn try_structure(&mut self, b: [u64; 4]) -> Result<Option<D4Witness>, Stop> {
        self.ticker.tick()?;
        let side0 = self.side_cycles(b[0], b[1])?;
        let side2 = self.side_cycles(b[2], b[3])?;
        let Some((i0, i2)) = self.odd_pair(&side0, &side2)? else {
            return Ok(None);
        };
        let side1 = self.side_cycles(b[1], b[2])?;
        let side3 = self.side_cycles(b[3], b[0])?;
        let Some((i1, i3)) = self.odd_pair(&side1, &side3)? else {
            return Ok(None);
        };
        let witness = D4Witness {
            branch_sets: [set_of(b[0]), set_of(b[1]), set_of(b[2]), set_of(b[3])],
            connecting_edges: [
                side0[i0].edges,
                side1[i1].edges,
                side2[i2].edges,
                side3[i3].edges,
            ],
            cycles: [
                side0[i0].cycle.clone(),
                side1[i1].cycle.clone(),
                side2[i2].cycle.clone(),
                side3[i3].cycle.clone(),
            ],
            parities: (true, true),
        };
        assert!(
            verify_d4_witness(self.emb, &witness),
            "search produced a witness its own verifier rejects"
        );
        Ok(Some(witness))
    }

    /// All candidate cycles crossing between `bi` and `bj`: every
    /// unordered pair of connecting edges combined with every pair of
    /// simple paths through the two sets.
    fn side_cycles(&mut self, bi: u64, bj: u64) -> Result<Vec<SideChoice>, Stop> {
        let conn = self.connecting_edges(bi, bj);
        let mut out = Vec::new();
        for x in 0..conn.len() {
            for y in (x + 1)..conn.len() {
                let (e, f) = (conn[x], conn[y]);
                let (ea, eb) = self.oriented(e, bi);
                let (fa, fb) = self.oriented(f, bi);
                let mut paths_i = Vec::new();
                simple_paths(&self.inc, &mut self.ticker, bi, ea, fa, &mut paths_i)?;
                let mut paths_j = Vec::new();
                simple_paths(&self.inc, &mut self.ticker, bj, eb, fb, &mut paths_j)?;
                for p in &paths_i {
                    for q in &paths_j {
                        self.ticker.tick()?;
                        // Walk p from ea to fa, cross f, walk q backwards
                        // from fb to eb, cross e home.
                        let mut vertices = p.0.clone();
                        vertices.extend(q.0.iter().rev());
                        let mut edges = p.1.clone();
                        edges.push(f);
                        edges.extend(q.1.iter().rev());
                        edges.push(e);
                        let cycle = Cycle::new(self.g, vertices, edges).expect(
                            "two disjoint simple paths joined by distinct edges form a cycle",
                        );
                        out.push(SideChoice { edges: (e.min(f), e.max(f)), cycle });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Endpoints of connecting edge `e` ordered as (inside `side`,
    /// outside `side`).
    fn oriented(&self, e: EdgeId, side: u64) -> (VertexId, VertexId) {
        let (u, v) = self.g.edge(e).expect("connecting edge ids come from the edge scan");
        if side >> u & 1 == 1 {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// First index pair whose cycles link oddly, if any.
    fn odd_pair(
        &mut self,
        a: &[SideChoice],
        b: &[SideChoice],
    ) -> Result<Option<(usize, usize)>, Stop> {
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                self.ticker.tick()?;
                let odd = self
                    .emb
                    .linking_number_mod2(&x.cycle, &y.cycle)
                    .expect("side cycles are valid and lie in disjoint branch sets");
                if odd {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// Vertices strictly above `v` within `full`.
fn above(v: usize, full: u64) -> u64 {
    full & !((1u64 << v) | ((1u64 << v) - 1))
}

fn set_of(mask: u64) -> Vec<VertexId> {
    let mut m = mask;
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Exclusive-neighborhood enumeration of connected supersets of `s`
/// inside `allowed`, emitting those of exactly `size` vertices once each.
fn collect_connected(
    nbr: &[u64],
    ticker: &mut Ticker,
    s: u64,
    ext: u64,
    allowed: u64,
    size: usize,
    out: &mut Vec<u64>,
) -> Result<(), Stop> {
    ticker.tick()?;
    if s.count_ones() as usize == size {
        out.push(s);
        return Ok(());
    }
    let closed = {
        let mut acc = s;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            acc |= nbr[v];
        }
        acc
    };
    let mut rest = ext;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let new_ext = rest | (nbr[w] & allowed & !closed);
        collect_connected(nbr, ticker, s | 1 << w, new_ext, allowed, size, out)?;
    }
    Ok(())
}

/// Depth-first enumeration of all simple paths from `from` to `to` whose
/// vertices stay inside `mask`; parallel edges yield distinct paths.
fn simple_paths(
    inc: &[Vec<(VertexId, EdgeId)>],
    ticker: &mut Ticker,
    mask: u64,
    from: VertexId,
    to: VertexId,
    out: &mut Vec<PathInSet>,
) -> Result<(), Stop> {
    let mut vertices = vec![from];
    let mut edges = Vec::new();
    path_dfs(inc, ticker, mask, to, 1u64 << from, &mut vertices, &mut edges, out)
}

#[allow(clippy::too_many_arguments)]
fn path_dfs(
    inc: &[Vec<(VertexId, EdgeId)>],
    ticker: &mut Ticker,
    mask: u64,
    to: VertexId,
    visited: u64,
    vertices: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<PathInSet>,
) -> Result<(), Stop> {
    ticker.tick()?;
    let current = *vertices.last().expect("path starts nonempty");
    if current == to {
        out.push((vertices.clone(), edges.clone()));
        return Ok(());
    }
    for &(next, eid) in &inc[current] {
        if mask >> next & 1 == 0 || visited >> next & 1 == 1 {
            continue;
        }
        vertices.push(next);
        edges.push(eid);
        path_dfs(inc, ticker, mask, to, visited | 1 << next, vertices, edges, out)?;
        edges.pop();
        vertices.pop();
    }
    Ok(())
}
