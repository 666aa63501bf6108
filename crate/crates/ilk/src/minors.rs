//! Exact minor containment and everything built on it: the seven-member
//! obstruction test for intrinsic linkedness, planarity via the K5/K3,3
//! obstructions, n-apex testing, the knotting classifier, the clique
//! minor edge bound, and the 13-vertex complement sweep.
//!
//! The search maps pattern vertices to disjoint connected branch sets of
//! the host, growing candidate sets over 64-bit vertex masks. It is
//! exhaustive with pruning: "no" means no model exists, and running out
//! of budget is a third outcome distinct from "no".

use crate::catalog;
use crate::graph::{EdgeId, Graph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default node budget for one minor search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinorError {
    #[error("graph has {0} vertices; the mask-based search handles at most 64")]
    TooManyVertices(usize),
    #[error("pattern graph must be simple")]
    NonSimplePattern,
    #[error("search budget exhausted after {explored} nodes (budget {budget})")]
    BudgetExceeded { explored: u64, budget: u64 },
    #[error("clique bound parameter n = {0} outside the proven range 1..=5")]
    MaderRange(usize),
}

/// A minor model: one branch set per pattern vertex and one host edge per
/// pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    /// `branch_sets[u]` is the host vertex set representing pattern
    /// vertex `u`; sorted, nonempty, pairwise disjoint, connected.
    pub branch_sets: Vec<Vec<VertexId>>,
    /// `edge_assignment[i]` is a host edge joining the branch sets of the
    /// endpoints of pattern edge `i`.
    pub edge_assignment: Vec<EdgeId>,
}

/// Finds an `h` minor in `g` with the default budget.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorWitness>, MinorError> {
    has_minor_budgeted(g, h, DEFAULT_BUDGET)
}

/// Finds an `h` minor in `g`, exploring at most `budget` search nodes.
/// Loops and parallel edges of `g` are irrelevant to simple minors and
/// are ignored; `h` must be simple.
pub fn has_minor_budgeted(
    g: &Graph,
    h: &Graph,
    budget: u64,
) -> Result<Option<MinorWitness>, MinorError> {
    if !h.is_simple() {
        return Err(MinorError::NonSimplePattern);
    }
    if g.vertex_count() > 64 {
        return Err(MinorError::TooManyVertices(g.vertex_count()));
    }
    if h.vertex_count() == 0 {
        return Ok(Some(MinorWitness { branch_sets: vec![], edge_assignment: vec![] }));
    }
    let simple_edges = g.simplify().edge_count();
    if h.vertex_count() > g.vertex_count() || h.edge_count() > simple_edges {
        return Ok(None);
    }

    let mut search = Search::new(g, h, budget);
    let found = search.place(0)?;
    if !found {
        return Ok(None);
    }
    let witness = search.witness();
    assert!(
        verify_minor_witness(g, h, &witness),
        "internal error: search produced an invalid minor model"
    );
    Ok(Some(witness))
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    budget: u64,
    explored: u64,
    nbr: Vec<u64>,
    full: u64,
    /// Pattern vertices in placement order: descending degree, then id.
    order: Vec<usize>,
    /// For placement step k: positions of earlier steps whose pattern
    /// vertices are adjacent to `order[k]`.
    required: Vec<Vec<usize>>,
    /// Branch-set masks placed so far, with their host neighborhoods.
    placed: Vec<u64>,
    placed_nbr: Vec<u64>,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Graph, budget: u64) -> Self {
        let n = g.vertex_count();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let nbr: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).into_iter().fold(0u64, |m, w| m | 1 << w))
            .collect();
        let mut order: Vec<usize> = (0..h.vertex_count()).collect();
        order.sort_by_key(|&v| (usize::MAX - h.degree(v), v));
        let pos_of: Vec<usize> = {
            let mut p = vec![0; h.vertex_count()];
            for (k, &v) in order.iter().enumerate() {
                p[v] = k;
            }
            p
        };
        let required = order
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let mut req: Vec<usize> =
                    h.neighbors(v).into_iter().map(|w| pos_of[w]).filter(|&p| p < k).collect();
                req.sort_unstable();
                req
            })
            .collect();
        Search {
            g,
            h,
            budget,
            explored: 0,
            nbr,
            full,
            order,
            required,
            placed: Vec::new(),
            placed_nbr: Vec::new(),
            used: 0,
        }
    }

    fn tick(&mut self) -> Result<(), MinorError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(MinorError::BudgetExceeded {
                explored: self.explored,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn neighborhood(&self, mask: u64) -> u64 {
        let mut acc = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            acc |= self.nbr[v];
        }
        acc
    }

    /// Places the branch set for `order[k]` and recurses. True = model
    /// completed; the placed stacks then hold it.
    fn place(&mut self, k: usize) -> Result<bool, MinorError> {
        self.tick()?;
        if k == self.h.vertex_count() {
            return Ok(true);
        }
        let free = self.full & !self.used;
        let remaining_after = (self.h.vertex_count() - k - 1) as u32;
        if free.count_ones() <= remaining_after {
            return Ok(false);
        }
        for &r in &self.required[k] {
            if self.placed_nbr[r] & free == 0 {
                return Ok(false);
            }
        }
        let max_size = free.count_ones() - remaining_after;
        let mut seeds = free;
        while seeds != 0 {
            let seed = seeds.trailing_zeros() as usize;
            seeds &= seeds - 1;
            // Connected subsets with minimum vertex `seed` grow only
            // through free vertices above the seed.
            let allowed = free & !((1u64 << seed) | ((1u64 << seed) - 1));
            let s = 1u64 << seed;
            if self.grow(k, s, self.nbr[seed] & allowed, allowed, max_size)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Extends candidate set `s` (exclusive-neighborhood enumeration:
    /// each connected superset is generated exactly once), trying every
    /// intermediate set as the branch set for step `k`.
    fn grow(
        &mut self,
        k: usize,
        s: u64,
        ext: u64,
        allowed: u64,
        max_size: u32,
    ) -> Result<bool, MinorError> {
        self.tick()?;
        if self.required[k].iter().all(|&r| self.placed_nbr[r] & s != 0) {
            self.placed.push(s);
            self.placed_nbr.push(self.neighborhood(s));
            self.used |= s;
            let done = self.place(k + 1)?;
            self.used &= !s;
            self.placed_nbr.pop();
            if done {
                return Ok(true);
            }
            self.placed.pop();
        }
        if s.count_ones() == max_size {
            return Ok(false);
        }
        let closed = s | self.neighborhood(s);
        let mut rest = ext;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let new_ext = rest | (self.nbr[w] & allowed & !closed);
            if self.grow(k, s | 1 << w, new_ext, allowed, max_size)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn witness(&self) -> MinorWitness {
        let mut branch_sets = vec![Vec::new(); self.h.vertex_count()];
        for (kk, &mask) in self.placed.iter().enumerate() {
            let mut m = mask;
            let mut set = Vec::new();
            while m != 0 {
                set.push(m.trailing_zeros() as usize);
                m &= m - 1;
            }
            branch_sets[self.order[kk]] = set;
        }
        let masks: Vec<u64> = branch_sets
            .iter()
            .map(|set| set.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let edge_assignment = (0..self.h.edge_count())
            .map(|i| {
                let (hu, hv) = self.h.edge(i).expect("pattern edge id");
                (0..self.g.edge_count())
                    .find(|&e| {
                        let (a, b) = self.g.edge(e).expect("host edge id");
                        a != b
                            && ((masks[hu] >> a & 1 == 1 && masks[hv] >> b & 1 == 1)
                                || (masks[hv] >> a & 1 == 1 && masks[hu] >> b & 1 == 1))
                    })
                    .expect("placed adjacency guarantees a connecting edge")
            })
            .collect();
        MinorWitness { branch_sets, edge_assignment }
    }
}

/// Checks a minor model against its definition: disjoint nonempty
/// connected branch sets and distinct host edges joining the right sets.
pub fn verify_minor_witness(g: &Graph, h: &Graph, w: &MinorWitness) -> bool {
    if !h.is_simple() || g.vertex_count() > 64 {
        return false;
    }
    if w.branch_sets.len() != h.vertex_count() || w.edge_assignment.len() != h.edge_count() {
        return false;
    }
    let mut seen = 0u64;
    let mut masks = Vec::with_capacity(w.branch_sets.len());
    for set in &w.branch_sets {
        if set.is_empty() {
            return false;
        }
        let mut mask = 0u64;
        for &v in set {
            if v >= g.vertex_count() || mask >> v & 1 == 1 {
                return false;
            }
            mask |= 1 << v;
        }
        if seen & mask != 0 {
            return false;
        }
        seen |= mask;
        if !connected_in(g, mask) {
            return false;
        }
        masks.push(mask);
    }
    let mut used_edges = std::collections::HashSet::new();
    for (i, &e) in w.edge_assignment.iter().enumerate() {
        let Ok((a, b)) = g.edge(e) else {
            return false;
        };
        let Ok((hu, hv)) = h.edge(i) else {
            return false;
        };
        if a == b || !used_edges.insert(e) {
            return false;
        }
        let forward = masks[hu] >> a & 1 == 1 && masks[hv] >> b & 1 == 1;
        let backward = masks[hv] >> a & 1 == 1 && masks[hu] >> b & 1 == 1;
        if !(forward || backward) {
            return false;
        }
    }
    true
}

pub(crate) fn connected_in(g: &Graph, mask: u64) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        let mut m = frontier;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            for w in g.neighbors(v) {
                next |= 1 << w;
            }
        }
        frontier = next & mask & !reached;
        reached |= frontier;
    }
    reached == mask
}

/// Planarity through the two forbidden minors.
pub fn is_planar(g: &Graph) -> Result<bool, MinorError> {
    is_planar_budgeted(g, DEFAULT_BUDGET)
}

pub fn is_planar_budgeted(g: &Graph, budget: u64) -> Result<bool, MinorError> {
    let k5 = catalog::complete(5);
    let k33 = catalog::multipartite(&[3, 3]);
    Ok(has_minor_budgeted(g, &k5, budget)?.is_none()
        && has_minor_budgeted(g, &k33, budget)?.is_none())
}

/// Verdict of the intrinsic-linkedness minor test: the first obstruction
/// family member found, ascending by vertex count, with its model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IlVerdict {
    pub il: bool,
    /// Catalog name PF1..PF7 of the member found.
    pub member: Option<String>,
    pub witness: Option<MinorWitness>,
}

/// A graph is intrinsically linked iff it contains one of the seven
/// obstruction family members as a minor.
pub fn is_il(g: &Graph) -> Result<IlVerdict, MinorError> {
    is_il_budgeted(g, DEFAULT_BUDGET)
}

pub fn is_il_budgeted(g: &Graph, budget: u64) -> Result<IlVerdict, MinorError> {
    for (i, member) in catalog::petersen_family().iter().enumerate() {
        if let Some(witness) = has_minor_budgeted(g, member, budget)? {
            return Ok(IlVerdict {
                il: true,
                member: Some(format!("PF{}", i + 1)),
                witness: Some(witness),
            });
        }
    }
    Ok(IlVerdict { il: false, member: None, witness: None })
}

/// True when `g` is intrinsically linked but no proper minor is. Single
/// edge deletions, single edge contractions, and isolated-vertex
/// deletions cover all proper minors one step down; minor-closedness
/// extends the conclusion to every proper minor.
pub fn is_minor_minimal_il(g: &Graph) -> Result<bool, MinorError> {
    is_minor_minimal_il_budgeted(g, DEFAULT_BUDGET)
}

pub fn is_minor_minimal_il_budgeted(g: &Graph, budget: u64) -> Result<bool, MinorError> {
    if !is_il_budgeted(g, budget)?.il {
        return Ok(false);
    }
    if g.vertices().any(|v| g.degree(v) == 0) {
        // Dropping an isolated vertex leaves the cycles untouched, so the
        // smaller graph is equally linked.
        return Ok(false);
    }
    let mut candidates = Vec::new();
    for e in 0..g.edge_count() {
        candidates.push(g.delete_edge(e).expect("edge id in range"));
        let (a, b) = g.edge(e).expect("edge id in range");
        if a != b {
            candidates.push(g.contract_edge(e, true).expect("non-loop edge"));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for minor in candidates {
        if !seen.insert(crate::iso::certificate(&minor)) {
            continue;
        }
        if is_il_budgeted(&minor, budget)?.il {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for `n` vertices whose deletion leaves a planar graph,
/// trying vertex subsets of size exactly `n` in lexicographic order.
pub fn is_n_apex(g: &Graph, n: usize) -> Result<Option<Vec<VertexId>>, MinorError> {
    is_n_apex_budgeted(g, n, DEFAULT_BUDGET)
}

pub fn is_n_apex_budgeted(
    g: &Graph,
    n: usize,
    budget: u64,
) -> Result<Option<Vec<VertexId>>, MinorError> {
    if n > g.vertex_count() {
        return Ok(None);
    }
    let mut subset: Vec<VertexId> = (0..n).collect();
    loop {
        if is_planar_budgeted(&g.delete_vertices(&subset).expect("subset in range"), budget)? {
            return Ok(Some(subset));
        }
        // Next lexicographic n-combination of 0..vertex_count.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if subset[i] != g.vertex_count() - n + i {
                break;
            }
            if i == 0 {
                return Ok(None);
            }
        }
        subset[i] += 1;
        for j in i + 1..n {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Three-valued knotting classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IkVerdict {
    Ik,
    NotIk,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IkClassification {
    pub verdict: IkVerdict,
    pub reason: String,
    /// Model of the K7 or K3,3,1,1 minor when the verdict is Ik.
    pub witness: Option<MinorWitness>,
    /// Deleted vertex set when the verdict is NotIk.
    pub apex_set: Option<Vec<VertexId>>,
}

/// Classifies intrinsic knotting by the two known sufficient minors (K7,
/// K3,3,1,1) and the two-apex exclusion; everything else is unknown. A
/// graph can never satisfy both routes; this is asserted at runtime.
pub fn classify_ik(g: &Graph) -> Result<IkClassification, MinorError> {
    classify_ik_budgeted(g, DEFAULT_BUDGET)
}

pub fn classify_ik_budgeted(g: &Graph, budget: u64) -> Result<IkClassification, MinorError> {
    let k7 = catalog::complete(7);
    let k3311 = catalog::multipartite(&[3, 3, 1, 1]);
    let (reason, witness) = if let Some(w) = has_minor_budgeted(g, &k7, budget)? {
        ("K7 minor".to_string(), Some(w))
    } else if let Some(w) = has_minor_budgeted(g, &k3311, budget)? {
        ("K3,3,1,1 minor".to_string(), Some(w))
    } else {
        (String::new(), None)
    };
    if witness.is_some() {
        assert!(
            is_n_apex_budgeted(g, 2, budget)?.is_none(),
            "internal error: a knotted-minor graph cannot be 2-apex"
        );
        return Ok(IkClassification { verdict: IkVerdict::Ik, reason, witness, apex_set: None });
    }
    if let Some(apex_set) = is_n_apex_budgeted(g, 2, budget)? {
        return Ok(IkClassification {
            verdict: IkVerdict::NotIk,
            reason: "2-apex".to_string(),
            witness: None,
            apex_set: Some(apex_set),
        });
    }
    Ok(IkClassification {
        verdict: IkVerdict::Unknown,
        reason: "no K7 or K3,3,1,1 minor, not 2-apex".to_string(),
        witness: None,
        apex_set: None,
    })
}

/// Edge threshold above which a clique minor is forced: a graph on `v`
/// vertices with more than `n*v - C(n+1,2)` edges contains K_{n+2} as a
/// minor, for 1 <= n <= 5.
pub fn mader_threshold(n: usize, v: usize) -> Result<i64, MinorError> {
    if !(1..=5).contains(&n) {
        return Err(MinorError::MaderRange(n));
    }
    let n = n as i64;
    Ok(n * v as i64 - n * (n + 1) / 2)
}

/// True when the edge count of `g` exceeds the clique-minor threshold,
/// guaranteeing a K_{n+2} minor. The edge bound carries that guarantee
/// only on at least n vertices (below that, a dense graph can beat the
/// threshold while being too small to hold the minor), so smaller hosts
/// never fire.
pub fn mader_guarantees_clique_minor(n: usize, g: &Graph) -> Result<bool, MinorError> {
    let threshold = mader_threshold(n, g.vertex_count())?;
    if g.vertex_count() < n {
        return Ok(false);
    }
    Ok(g.simplify().edge_count() as i64 > threshold)
}

/// Per-sample outcome of the complement sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementOutcome {
    Both,
    GraphOnly,
    ComplementOnly,
    Neither,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementSample {
    pub index: usize,
    /// None = that side's search ran out of budget.
    pub graph_il: Option<bool>,
    pub complement_il: Option<bool>,
    pub outcome: ComplementOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub vertex_count: usize,
    pub samples: Vec<ComplementSample>,
}

/// Samples random graphs G(v, 1/2) and reports which of G and its
/// complement are intrinsically linked. Budget overruns are recorded per
/// sample, never fatal.
pub fn complement_il_check(
    v: usize,
    samples: usize,
    seed: u64,
    budget: u64,
) -> Result<ComplementReport, MinorError> {
    if v > 64 {
        return Err(MinorError::TooManyVertices(v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for index in 0..samples {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in (a + 1)..v {
                if rng.gen::<bool>() {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(v, edges).expect("in-range random edges");
        let side = |graph: &Graph| match is_il_budgeted(graph, budget) {
            Ok(verdict) => Ok(Some(verdict.il)),
            Err(MinorError::BudgetExceeded { .. }) => Ok(None),
            Err(other) => Err(other),
        };
        let graph_il = side(&g)?;
        let complement_il = side(&g.complement().expect("random graph is simple"))?;
        let outcome = match (graph_il, complement_il) {
            (Some(true), Some(true)) => ComplementOutcome::Both,
            (Some(true), Some(false)) => ComplementOutcome::GraphOnly,
            (Some(false), Some(true)) => ComplementOutcome::ComplementOnly,
            (Some(false), Some(false)) => ComplementOutcome::Neither,
            _ => ComplementOutcome::BudgetExceeded,
        };
        out.push(ComplementSample { index, graph_il, complement_il, outcome });
    }
    Ok(ComplementReport { vertex_count: v, samples: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, petersen_family};
    use crate::iso;
    use std::collections::HashMap;

    // Definitional oracle: explore all delete/contract/isolated-delete
    // sequences, memoized on canonical certificates. Exponential, for
    // small graphs only.
    fn minor_oracle(g: &Graph, h: &Graph) -> bool {
        fn recurse(g: &Graph, h: &Graph, memo: &mut HashMap<String, bool>) -> bool {
            if g.vertex_count() < h.vertex_count() || g.edge_count() < h.edge_count() {
                return false;
            }
            if g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() {
                return iso::is_isomorphic(g, h);
            }
            let key = iso::certificate(g);
            if let Some(&hit) = memo.get(&key) {
                return hit;
            }
            let mut found = false;
            for e in 0..g.edge_count() {
                if recurse(&g.delete_edge(e).unwrap(), h, memo) {
                    found = true;
                    break;
                }
                if g.vertex_count() > h.vertex_count()
                    && recurse(&g.contract_edge(e, true).unwrap(), h, memo)
                {
                    found = true;
                    break;
                }
            }
            if !found && g.vertex_count() > h.vertex_count() {
                for v in g.vertices() {
                    if g.degree(v) == 0 && recurse(&g.delete_vertex(v).unwrap(), h, memo) {
                        found = true;
                        break;
                    }
                }
            }
            memo.insert(key, found);
            found
        }
        if h.vertex_count() == 0 {
            return true;
        }
        recurse(&g.simplify(), h, &mut HashMap::new())
    }

    fn random_graph(n: usize, tenths: u32, rng: &mut ChaCha8Rng) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.gen_range(0..10) < tenths {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn agrees_with_delete_contract_oracle() {
        let patterns = [
            catalog("K4").unwrap(),
            catalog("K5").unwrap(),
            catalog("K3,3").unwrap(),
            catalog("C4").unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..60 {
            let n = rng.gen_range(4..=7);
            let density = rng.gen_range(3..=9);
            let g = random_graph(n, density, &mut rng);
            for h in &patterns {
                let got = has_minor(&g, h).unwrap();
                let expected = minor_oracle(&g, h);
                assert_eq!(got.is_some(), expected, "trial {trial}, pattern {h:?}");
                if let Some(w) = got {
                    assert!(verify_minor_witness(&g, h, &w), "trial {trial}");
                }
            }
        }
    }

    #[test]
    fn basic_minor_relations() {
        let k6 = catalog("K6").unwrap();
        let k5 = catalog("K5").unwrap();
        let w = has_minor(&k6, &k5).unwrap().expect("subgraph");
        assert!(verify_minor_witness(&k6, &k5, &w));

        // Reflexive: the identity model.
        let w = has_minor(&k6, &k6).unwrap().expect("itself");
        assert!(w.branch_sets.iter().all(|s| s.len() == 1));

        // Too big to fit.
        assert!(has_minor(&k5, &k6).unwrap().is_none());
        assert!(has_minor(&k5, &catalog("C4").unwrap()).unwrap().is_some());

        // Transitivity sample: K4 <= K5 <= K6 and directly K4 <= K6.
        assert!(has_minor(&k6, &catalog("K4").unwrap()).unwrap().is_some());

        // Empty pattern embeds trivially.
        let empty = Graph::empty(0);
        let w = has_minor(&k5, &empty).unwrap().expect("empty pattern");
        assert!(w.branch_sets.is_empty());
        assert!(verify_minor_witness(&k5, &empty, &w));

        // Loops and parallel edges of the host change nothing.
        let multi = Graph::from_edges(3, [(0, 0), (0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        let c3 = catalog("C3").unwrap();
        assert!(has_minor(&multi, &c3).unwrap().is_some());
        assert_eq!(has_minor(&c3, &multi).unwrap_err(), MinorError::NonSimplePattern);
    }

    #[test]
    fn petersen_contains_k5_but_not_k6() {
        let p = catalog("PetersenGraph").unwrap();
        let w = has_minor(&p, &catalog("K5").unwrap()).unwrap().expect("contract a matching");
        assert!(verify_minor_witness(&p, &catalog("K5").unwrap(), &w));
        assert!(has_minor(&p, &catalog("K6").unwrap()).unwrap().is_none());
    }

    #[test]
    fn corrupted_witnesses_fail_verification() {
        let k6 = catalog("K6").unwrap();
        let k5 = catalog("K5").unwrap();
        let w = has_minor(&k6, &k5).unwrap().unwrap();

        let mut shared = w.clone();
        shared.branch_sets[0] = shared.branch_sets[1].clone();
        assert!(!verify_minor_witness(&k6, &k5, &shared));

        let mut emptied = w.clone();
        emptied.branch_sets[0].clear();
        assert!(!verify_minor_witness(&k6, &k5, &emptied));

        let mut bad_edge = w.clone();
        bad_edge.edge_assignment[0] = bad_edge.edge_assignment[1];
        assert!(!verify_minor_witness(&k6, &k5, &bad_edge));

        let mut short = w.clone();
        short.edge_assignment.pop();
        assert!(!verify_minor_witness(&k6, &k5, &short));

        // Disconnected branch set: {0, 3} with the joining edges absent.
        let path = catalog("Path4").unwrap(); // 0-1-2-3
        let k1 = Graph::empty(1);
        let disconnected =
            MinorWitness { branch_sets: vec![vec![0, 3]], edge_assignment: vec![] };
        assert!(!verify_minor_witness(&path, &k1, &disconnected));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let k6 = catalog("K6").unwrap();
        match has_minor_budgeted(&k6, &catalog("K5").unwrap(), 3) {
            Err(MinorError::BudgetExceeded { explored, budget: 3 }) => assert!(explored > 3),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn planarity_matches_the_classics() {
        assert!(is_planar(&catalog("K4").unwrap()).unwrap());
        assert!(is_planar(&catalog("C5").unwrap()).unwrap());
        assert!(!is_planar(&catalog("K5").unwrap()).unwrap());
        assert!(!is_planar(&catalog("K3,3").unwrap()).unwrap());
        assert!(!is_planar(&catalog("PetersenGraph").unwrap()).unwrap());
        // K5 minus an edge is planar.
        assert!(is_planar(&catalog("K5").unwrap().delete_edge(0).unwrap()).unwrap());
    }

    #[test]
    fn family_members_are_il_and_k7_is_il_via_k6() {
        for (i, member) in petersen_family().iter().enumerate() {
            let verdict = is_il(member).unwrap();
            assert!(verdict.il, "member {}", i + 1);
            assert_eq!(verdict.member.as_deref(), Some(format!("PF{}", i + 1).as_str()));
            let w = verdict.witness.unwrap();
            assert!(verify_minor_witness(member, member, &w));
        }
        let verdict = is_il(&catalog("K7").unwrap()).unwrap();
        assert!(verdict.il);
        assert_eq!(verdict.member.as_deref(), Some("PF1"), "K6 found first");
        assert!(!is_il(&catalog("K5").unwrap()).unwrap().il);
        assert!(!is_il(&catalog("K4").unwrap()).unwrap().il);
    }

    #[test]
    fn minimality_of_family_members_and_counterexamples() {
        for (i, member) in petersen_family().iter().enumerate() {
            assert!(is_minor_minimal_il(member).unwrap(), "member {}", i + 1);
        }
        assert!(!is_minor_minimal_il(&catalog("K7").unwrap()).unwrap());
        assert!(!is_minor_minimal_il(&catalog("K5").unwrap()).unwrap(), "not even IL");
        // K6 plus an isolated vertex: IL, but the vertex deletion is a
        // proper IL minor.
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in (a + 1)..6 {
                edges.push((a, b));
            }
        }
        let k6_plus = Graph::from_edges(7, edges).unwrap();
        assert!(is_il(&k6_plus).unwrap().il);
        assert!(!is_minor_minimal_il(&k6_plus).unwrap());
    }

    #[test]
    fn apex_counts() {
        assert_eq!(is_n_apex(&catalog("K5").unwrap(), 1).unwrap(), Some(vec![0]));
        assert_eq!(is_n_apex(&catalog("K6").unwrap(), 1).unwrap(), None);
        assert_eq!(is_n_apex(&catalog("K6").unwrap(), 2).unwrap(), Some(vec![0, 1]));
        assert!(is_n_apex(&catalog("K3,3,1,1").unwrap(), 2).unwrap().is_none());
        assert_eq!(is_n_apex(&catalog("K4").unwrap(), 0).unwrap(), Some(vec![]));
        assert_eq!(is_n_apex(&catalog("K5").unwrap(), 0).unwrap(), None);
        // More vertices requested than exist.
        assert_eq!(is_n_apex(&Graph::empty(1), 2).unwrap(), None);
    }

    #[test]
    fn knotting_classification() {
        let k7 = classify_ik(&catalog("K7").unwrap()).unwrap();
        assert_eq!(k7.verdict, IkVerdict::Ik);
        assert!(k7.witness.is_some());

        let k3311 = classify_ik(&catalog("K3,3,1,1").unwrap()).unwrap();
        assert_eq!(k3311.verdict, IkVerdict::Ik);
        assert_eq!(k3311.reason, "K3,3,1,1 minor");

        let petersen = classify_ik(&catalog("PetersenGraph").unwrap()).unwrap();
        assert_eq!(petersen.verdict, IkVerdict::NotIk);
        assert!(petersen.apex_set.is_some());

        let k6 = classify_ik(&catalog("K6").unwrap()).unwrap();
        assert_eq!(k6.verdict, IkVerdict::NotIk, "K6 is 2-apex");
    }

    #[test]
    fn clique_minor_bound() {
        assert_eq!(mader_threshold(4, 15).unwrap(), 50);
        assert_eq!(mader_threshold(1, 3).unwrap(), 2);
        assert!(matches!(mader_threshold(0, 10), Err(MinorError::MaderRange(0))));
        assert!(matches!(mader_threshold(6, 10), Err(MinorError::MaderRange(6))));

        // A triangle exceeds the n=1 threshold and indeed has a K3 minor.
        let c3 = catalog("C3").unwrap();
        assert!(mader_guarantees_clique_minor(1, &c3).unwrap());
        assert!(has_minor(&c3, &catalog("K3").unwrap()).unwrap().is_some());
        // A path does not fire.
        assert!(!mader_guarantees_clique_minor(1, &catalog("Path4").unwrap()).unwrap());
        // K7 fires at n=5: 21 > 5*7 - 15 = 20.
        assert!(mader_guarantees_clique_minor(5, &catalog("K7").unwrap()).unwrap());
        // K4 beats the raw n=5 threshold (6 > 5*4 - 15) but is too small
        // to hold a K7 minor; the guarantee must stay quiet.
        assert!(!mader_guarantees_clique_minor(5, &catalog("K4").unwrap()).unwrap());
        assert!(has_minor(&catalog("K4").unwrap(), &catalog("K7").unwrap()).unwrap().is_none());
    }

    #[test]
    fn complement_sweep_on_six_vertices() {
        let report = complement_il_check(6, 8, 99, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.samples.len(), 8);
        for sample in &report.samples {
            assert_ne!(sample.outcome, ComplementOutcome::BudgetExceeded);
            // Six-vertex graphs: G and its complement cannot both hold a
            // 15-edge minor (only 15 edges exist in total).
            assert_ne!(sample.outcome, ComplementOutcome::Both);
        }
        // Determinism.
        let again = complement_il_check(6, 8, 99, DEFAULT_BUDGET).unwrap();
        assert_eq!(report, again);
    }
}
