//! Decides whether a graph admits an embedding with all disjoint cycle
//! pairs having even linking number, by exact GF(2) linear algebra over
//! the twist model.
//!
//! The system has one row per vertex-disjoint cycle pair and one column
//! per endpoint-disjoint edge pair. A column bit is set when the edge
//! pair splits across the cycle pair (one edge in each cycle); the
//! right-hand side is the base-embedding linking parity of the row.
//! Twist parities solving the system give an embedding where every
//! disjoint cycle pair links evenly; when no solution exists, the rows
//! certifying inconsistency form an obstruction no embedding can evade.
//! Both certificate kinds are verified here by direct recomputation in
//! the embedding model, independent of the elimination.

use crate::cycles::{self, Cycle, CycleData, EdgePair};
use crate::embedding::EmbeddingSpec;
use crate::gf2::{self, BitMatrix, SolveOutcome};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default ceiling on both the cycle count and the cycle-pair count.
pub const DEFAULT_PAIR_CAP: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Z2Error {
    #[error("system too large: {cycles} cycles, {pairs} disjoint pairs (cap {cap})")]
    TooManyCyclePairs { cycles: usize, pairs: usize, cap: usize },
    #[error("bad certificate: {reason}")]
    BadCertificate { reason: String },
}

/// The GF(2) linking system of a graph.
#[derive(Debug, Clone)]
pub struct Gf2System {
    cycles: Vec<Cycle>,
    rows: Vec<(usize, usize)>,
    edge_pairs: Vec<EdgePair>,
    matrix: BitMatrix,
    rhs: Vec<bool>,
}

impl Gf2System {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Row order: lexicographic in the sorted cycle list.
    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn row_cycles(&self, r: usize) -> (&Cycle, &Cycle) {
        let (i, j) = self.rows[r];
        (&self.cycles[i], &self.cycles[j])
    }

    /// Column order: lexicographic in edge ids.
    pub fn edge_pairs(&self) -> &[EdgePair] {
        &self.edge_pairs
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }
}

/// Builds the linking system with the default size cap.
pub fn build_system(g: &Graph) -> Result<Gf2System, Z2Error> {
    build_system_with_cap(g, DEFAULT_PAIR_CAP)
}

/// Builds the linking system, refusing graphs whose cycle count or
/// disjoint-pair count exceeds `cap`.
pub fn build_system_with_cap(g: &Graph, cap: usize) -> Result<Gf2System, Z2Error> {
    let cycle_list = cycles::enumerate_cycles(g);
    let rows = cycles::disjoint_pair_indices(&cycle_list, g.vertex_count());
    if cycle_list.len() > cap || rows.len() > cap {
        return Err(Z2Error::TooManyCyclePairs {
            cycles: cycle_list.len(),
            pairs: rows.len(),
            cap,
        });
    }
    let edge_pairs = cycles::disjoint_edge_pairs(g);
    let base = EmbeddingSpec::base(g.clone());

    let mut matrix = BitMatrix::zero(rows.len(), edge_pairs.len());
    let mut rhs = vec![false; rows.len()];
    let m = g.edge_count();
    let mut in_c = vec![false; m];
    let mut in_d = vec![false; m];
    for (r, &(i, j)) in rows.iter().enumerate() {
        let (c, d) = (&cycle_list[i], &cycle_list[j]);
        in_c.fill(false);
        in_d.fill(false);
        for &e in c.edges() {
            in_c[e] = true;
        }
        for &e in d.edges() {
            in_d[e] = true;
        }
        for pair in &edge_pairs {
            let (e, f) = pair.edges;
            if (in_c[e] && in_d[f]) || (in_c[f] && in_d[e]) {
                matrix.set(r, pair.index, true);
            }
        }
        rhs[r] = base.linking_number_mod2(c, d).expect("enumerated cycles are disjoint and valid");
    }
    Ok(Gf2System { cycles: cycle_list, rows, edge_pairs, matrix, rhs })
}

/// Outcome of the linking-system decision, always carrying a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Z2Certificate {
    /// Twist parities (one per disjoint edge pair) under which every
    /// disjoint cycle pair links evenly.
    LinklessWitness { twists: Vec<bool> },
    /// Disjoint cycle pairs that cover every disjoint edge pair an even
    /// number of times while their base linking parities sum odd; no
    /// twist assignment can make all of them even.
    Obstruction { pairs: Vec<(Cycle, Cycle)> },
}

/// Serialized certificate form; becomes a [`Z2Certificate`] only through
/// validation against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Z2CertificateData {
    LinklessWitness { twists: Vec<bool> },
    Obstruction { pairs: Vec<(CycleData, CycleData)> },
}

impl Z2Certificate {
    pub fn data(&self) -> Z2CertificateData {
        match self {
            Z2Certificate::LinklessWitness { twists } => {
                Z2CertificateData::LinklessWitness { twists: twists.clone() }
            }
            Z2Certificate::Obstruction { pairs } => Z2CertificateData::Obstruction {
                pairs: pairs.iter().map(|(c, d)| (c.data(), d.data())).collect(),
            },
        }
    }

    /// Validates serialized certificate data against `g`: twist vector
    /// length, cycle well-formedness, and pairwise disjointness.
    pub fn from_data(g: &Graph, data: Z2CertificateData) -> Result<Z2Certificate, Z2Error> {
        match data {
            Z2CertificateData::LinklessWitness { twists } => {
                let expected = cycles::disjoint_edge_pairs(g).len();
                if twists.len() != expected {
                    return Err(Z2Error::BadCertificate {
                        reason: format!(
                            "witness has {} twists, expected {expected}",
                            twists.len()
                        ),
                    });
                }
                Ok(Z2Certificate::LinklessWitness { twists })
            }
            Z2CertificateData::Obstruction { pairs } => {
                let mut out = Vec::with_capacity(pairs.len());
                for (cd, dd) in pairs {
                    let c = Cycle::from_data(g, cd)
                        .map_err(|e| Z2Error::BadCertificate { reason: e.to_string() })?;
                    let d = Cycle::from_data(g, dd)
                        .map_err(|e| Z2Error::BadCertificate { reason: e.to_string() })?;
                    if !c.is_vertex_disjoint(&d) {
                        return Err(Z2Error::BadCertificate {
                            reason: format!("cycles {c:?} and {d:?} share a vertex"),
                        });
                    }
                    let (c, d) = if c <= d { (c, d) } else { (d, c) };
                    out.push((c, d));
                }
                Ok(Z2Certificate::Obstruction { pairs: out })
            }
        }
    }
}

/// Solves a built system; no verification here.
pub fn solve_system(sys: &Gf2System) -> Z2Certificate {
    match gf2::solve(&sys.matrix, &sys.rhs) {
        SolveOutcome::Solution(twists) => Z2Certificate::LinklessWitness { twists },
        SolveOutcome::Inconsistent { combination } => Z2Certificate::Obstruction {
            pairs: combination
                .into_iter()
                .map(|r| {
                    let (c, d) = sys.row_cycles(r);
                    (c.clone(), d.clone())
                })
                .collect(),
        },
    }
}

/// Verdict of [`decide_z2_il`]: linked in the mod-2 sense, plus the
/// verified certificate and the system dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z2Decision {
    pub il: bool,
    pub certificate: Z2Certificate,
    pub rows: usize,
    pub cols: usize,
}

/// Decides mod-2 intrinsic linking. The returned certificate has already
/// been re-verified in the embedding model.
pub fn decide_z2_il(g: &Graph) -> Result<Z2Decision, Z2Error> {
    decide_z2_il_with_cap(g, DEFAULT_PAIR_CAP)
}

pub fn decide_z2_il_with_cap(g: &Graph, cap: usize) -> Result<Z2Decision, Z2Error> {
    let sys = build_system_with_cap(g, cap)?;
    let certificate = solve_system(&sys);
    let il = match &certificate {
        Z2Certificate::LinklessWitness { twists } => {
            assert!(
                verify_linkless_witness(g, twists),
                "internal error: solver witness failed embedding verification"
            );
            false
        }
        Z2Certificate::Obstruction { pairs } => {
            assert!(
                verify_obstruction(g, pairs),
                "internal error: solver obstruction failed embedding verification"
            );
            true
        }
    };
    Ok(Z2Decision { il, certificate, rows: sys.rows.len(), cols: sys.edge_pairs.len() })
}

/// Checks a linkless witness by direct recomputation: under the claimed
/// twist parities, every disjoint cycle pair must link evenly.
pub fn verify_linkless_witness(g: &Graph, twists: &[bool]) -> bool {
    let pairs = cycles::disjoint_edge_pairs(g);
    if twists.len() != pairs.len() {
        return false;
    }
    let twist_ints: Vec<i64> = twists.iter().map(|&t| t as i64).collect();
    let Ok(emb) = EmbeddingSpec::new(g.clone(), twist_ints) else {
        return false;
    };
    let cycle_list = cycles::enumerate_cycles(g);
    cycles::disjoint_pair_indices(&cycle_list, g.vertex_count())
        .into_iter()
        .all(|(i, j)| {
            !emb.linking_number_mod2(&cycle_list[i], &cycle_list[j])
                .expect("enumerated cycles are disjoint and valid")
        })
}

/// Checks an obstruction: every disjoint edge pair must split across an
/// even number of the listed cycle pairs, and the base linking parities
/// must sum odd. Together these rule out every twist assignment.
pub fn verify_obstruction(g: &Graph, pairs: &[(Cycle, Cycle)]) -> bool {
    if pairs.is_empty() {
        return false;
    }
    let base = EmbeddingSpec::base(g.clone());
    let mut rhs_parity = false;
    let m = g.edge_count();
    let mut coverage = vec![0usize; cycles::disjoint_edge_pairs(g).len()];
    let mut in_c = vec![false; m];
    let mut in_d = vec![false; m];
    for (c, d) in pairs {
        match base.linking_number_mod2(c, d) {
            Ok(parity) => rhs_parity ^= parity,
            Err(_) => return false,
        }
        in_c.fill(false);
        in_d.fill(false);
        for &e in c.edges() {
            if e >= m {
                return false;
            }
            in_c[e] = true;
        }
        for &e in d.edges() {
            if e >= m {
                return false;
            }
            in_d[e] = true;
        }
        for pair in base.edge_pairs() {
            let (e, f) = pair.edges;
            if (in_c[e] && in_d[f]) || (in_c[f] && in_d[e]) {
                coverage[pair.index] += 1;
            }
        }
    }
    rhs_parity && coverage.iter().all(|&c| c % 2 == 0)
}

/// Parity of the sum of linking numbers over all disjoint cycle pairs;
/// `true` means odd.
pub fn total_linking_parity(emb: &EmbeddingSpec) -> bool {
    let cycle_list = cycles::enumerate_cycles(emb.graph());
    cycles::disjoint_pair_indices(&cycle_list, emb.graph().vertex_count())
        .into_iter()
        .fold(false, |acc, (i, j)| {
            acc ^ emb
                .linking_number_mod2(&cycle_list[i], &cycle_list[j])
                .expect("enumerated cycles are disjoint and valid")
        })
}
