//! Closure of a seed graph under the triangle/star exchange moves, up to
//! isomorphism. A ∇Y move replaces a triangle by a new degree-3 vertex
//! joined to its corners; Y∇ is the reverse, with already-present
//! triangle edges skipped rather than doubled. The closure records the
//! full move relation between members and, per member, whether it is
//! reachable from the seed by ∇Y moves alone.

use crate::graph::{Graph, VertexId};
use crate::iso;
use crate::minors::{self, IkVerdict, MinorError};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Default ceiling on closure size; the families of interest have at
/// most twenty members, so larger closures signal a misuse.
pub const DEFAULT_MEMBER_BUDGET: usize = 10_000;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("seed graph must be simple")]
    SeedNotSimple,
    #[error("member budget {budget} exceeded; partial closure retained")]
    BudgetExceeded { budget: usize, partial: FamilyClosure },
}

/// One application of a move, between member indices of the closure. The
/// parameters refer to the stored representative graph of `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum MoveKind {
    DeltaY { triangle: (VertexId, VertexId, VertexId) },
    YDelta { vertex: VertexId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyMove {
    pub from: usize,
    pub to: usize,
    pub kind: MoveKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    /// Representative as first discovered; member 0 is the seed itself.
    pub graph: Graph,
    pub certificate: String,
    /// Reachable from the seed using ∇Y moves exclusively.
    pub delta_y_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClosure {
    pub members: Vec<FamilyMember>,
    pub moves: Vec<FamilyMove>,
    /// False only inside a budget error: some member was not expanded.
    pub complete: bool,
}

/// Breadth-first closure of `seed` under ∇Y and (optionally) Y∇ moves,
/// deduplicated by canonical certificate. Members are ordered by
/// discovery; move generation is deterministic (triangles ascending,
/// then degree-3 vertices ascending), so the whole structure is.
pub fn closure(
    seed: &Graph,
    allow_y_delta: bool,
    max_members: usize,
) -> Result<FamilyClosure, FamilyError> {
    if !seed.is_simple() {
        return Err(FamilyError::SeedNotSimple);
    }
    let mut members: Vec<FamilyMember> = Vec::new();
    let mut index_of: HashMap<String, usize> = HashMap::new();
    let mut moves: Vec<FamilyMove> = Vec::new();

    let seed_cert = iso::certificate(seed);
    index_of.insert(seed_cert.clone(), 0);
    members.push(FamilyMember { graph: seed.clone(), certificate: seed_cert, delta_y_only: true });
    if max_members == 0 {
        return Err(FamilyError::BudgetExceeded {
            budget: 0,
            partial: FamilyClosure { members, moves, complete: false },
        });
    }

    let mut next = 0;
    while next < members.len() {
        let g = members[next].graph.clone();
        let mut images: Vec<(MoveKind, Graph)> = Vec::new();
        for (a, b, c) in triangles(&g) {
            let img = g.delta_y(a, b, c).expect("listed triangle");
            images.push((MoveKind::DeltaY { triangle: (a, b, c) }, img));
        }
        if allow_y_delta {
            for v in g.vertices() {
                if g.degree(v) == 3 {
                    let img = g.y_delta(v).expect("degree-3 vertex of a simple graph");
                    images.push((MoveKind::YDelta { vertex: v }, img));
                }
            }
        }
        for (kind, img) in images {
            let cert = iso::certificate(&img);
            let to = match index_of.get(&cert) {
                Some(&i) => i,
                None => {
                    if members.len() == max_members {
                        return Err(FamilyError::BudgetExceeded {
                            budget: max_members,
                            partial: FamilyClosure { members, moves, complete: false },
                        });
                    }
                    let i = members.len();
                    index_of.insert(cert.clone(), i);
                    members.push(FamilyMember {
                        graph: img,
                        certificate: cert,
                        delta_y_only: false, // settled by the reachability pass
                    });
                    i
                }
            };
            moves.push(FamilyMove { from: next, to, kind });
        }
        next += 1;
    }

    mark_delta_y_reachable(&mut members, &moves);
    Ok(FamilyClosure { members, moves, complete: true })
}

/// The ∇Y-only closure: members reachable from the seed without any Y∇
/// move.
pub fn descendants(seed: &Graph, max_members: usize) -> Result<FamilyClosure, FamilyError> {
    closure(seed, false, max_members)
}

fn mark_delta_y_reachable(members: &mut [FamilyMember], moves: &[FamilyMove]) {
    let mut reachable = vec![false; members.len()];
    reachable[0] = true;
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for mv in moves {
            if mv.from == i
                && matches!(mv.kind, MoveKind::DeltaY { .. })
                && !reachable[mv.to]
            {
                reachable[mv.to] = true;
                frontier.push(mv.to);
            }
        }
    }
    for (member, flag) in members.iter_mut().zip(reachable) {
        member.delta_y_only = flag;
    }
}

fn triangles(g: &Graph) -> Vec<(VertexId, VertexId, VertexId)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Per-member classification summary of a closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberReport {
    pub index: usize,
    pub vertices: usize,
    pub edges: usize,
    pub certificate: String,
    pub delta_y_only: bool,
    pub il: bool,
    pub minor_minimal_il: bool,
    pub ik: IkVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub member_count: usize,
    /// Members not reachable by ∇Y moves alone.
    pub y_delta_required: usize,
    pub complete: bool,
    pub members: Vec<MemberReport>,
}

/// Classifies every member of a closure through the minor machinery.
pub fn family_report(closure: &FamilyClosure) -> Result<FamilyReport, MinorError> {
    let mut out = Vec::with_capacity(closure.members.len());
    for (index, member) in closure.members.iter().enumerate() {
        out.push(MemberReport {
            index,
            vertices: member.graph.vertex_count(),
            edges: member.graph.edge_count(),
            certificate: member.certificate.clone(),
            delta_y_only: member.delta_y_only,
            il: minors::is_il(&member.graph)?.il,
            minor_minimal_il: minors::is_minor_minimal_il(&member.graph)?,
            ik: minors::classify_ik(&member.graph)?.verdict,
        });
    }
    Ok(FamilyReport {
        member_count: closure.members.len(),
        y_delta_required: closure.members.iter().filter(|m| !m.delta_y_only).count(),
        complete: closure.complete,
        members: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn k6_closure_has_seven_members() {
        let k6 = catalog("K6").unwrap();
        let fam = closure(&k6, true, DEFAULT_MEMBER_BUDGET).unwrap();
        assert!(fam.complete);
        assert_eq!(fam.members.len(), 7);
        let mut counts: Vec<usize> =
            fam.members.iter().map(|m| m.graph.vertex_count()).collect();
        counts.sort_unstable();
        assert_eq!(counts, [6, 7, 7, 8, 8, 9, 10]);
        assert!(fam.members.iter().all(|m| m.graph.edge_count() == 15));
        assert!(fam.members[0].delta_y_only, "the seed is trivially reachable");

        // All twenty K6 triangles produce the same 7-vertex image.
        let from_seed: Vec<&FamilyMove> = fam.moves.iter().filter(|m| m.from == 0).collect();
        assert_eq!(from_seed.len(), 20);
        assert!(from_seed.iter().all(|m| m.to == from_seed[0].to));
    }

    #[test]
    fn k331_needs_a_star_triangle_exchange() {
        // One ∇Y on K6 gives the unique 7-vertex image; K3,3,1 is the
        // other 7-vertex member, so it cannot be a ∇Y-only descendant.
        let k6 = catalog("K6").unwrap();
        let k331_cert = iso::certificate(&catalog("K3,3,1").unwrap());
        let full = closure(&k6, true, DEFAULT_MEMBER_BUDGET).unwrap();
        let member = full
            .members
            .iter()
            .find(|m| m.certificate == k331_cert)
            .expect("K3,3,1 belongs to the closure");
        assert!(!member.delta_y_only);

        let dy = descendants(&k6, DEFAULT_MEMBER_BUDGET).unwrap();
        assert!(dy.members.iter().all(|m| m.certificate != k331_cert));
        assert!(dy.members.iter().all(|m| m.delta_y_only));
        assert!(dy.members.len() < full.members.len());
        // Containment in the two-move closure.
        let full_certs: Vec<&str> =
            full.members.iter().map(|m| m.certificate.as_str()).collect();
        assert!(dy.members.iter().all(|m| full_certs.contains(&m.certificate.as_str())));
    }

    #[test]
    fn closure_is_idempotent_from_any_member() {
        let k6 = catalog("K6").unwrap();
        let fam = closure(&k6, true, DEFAULT_MEMBER_BUDGET).unwrap();
        let mut base: Vec<String> =
            fam.members.iter().map(|m| m.certificate.clone()).collect();
        base.sort();
        for member in &fam.members {
            let again = closure(&member.graph, true, DEFAULT_MEMBER_BUDGET).unwrap();
            let mut certs: Vec<String> =
                again.members.iter().map(|m| m.certificate.clone()).collect();
            certs.sort();
            assert_eq!(certs, base, "closure from {}", member.certificate);
        }
    }

    #[test]
    fn budget_error_carries_partial_closure() {
        let k6 = catalog("K6").unwrap();
        match closure(&k6, true, 3) {
            Err(FamilyError::BudgetExceeded { budget: 3, partial }) => {
                assert!(!partial.complete);
                assert_eq!(partial.members.len(), 3);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn moveless_seeds_close_immediately() {
        // No triangles and no degree-3 vertices: the closure is the seed.
        let c4 = catalog("C4").unwrap();
        let fam = closure(&c4, true, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 1);
        assert!(fam.moves.is_empty());
        assert!(fam.complete);

        let empty = Graph::empty(0);
        let fam = closure(&empty, true, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 1);

        let multigraph = catalog("D4").unwrap();
        assert!(matches!(
            closure(&multigraph, true, DEFAULT_MEMBER_BUDGET),
            Err(FamilyError::SeedNotSimple)
        ));
    }

    #[test]
    fn k4_report_sanity() {
        // K4 -> K2,3 by ∇Y; Y∇ at a K4 vertex drops the full triangle
        // among its neighbors and leaves C3, whose own closure adds K1,3.
        let k4 = catalog("K4").unwrap();
        let fam = closure(&k4, true, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 4);
        let mut edge_counts: Vec<usize> =
            fam.members.iter().map(|m| m.graph.edge_count()).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, [3, 3, 6, 6], "Y∇ here loses the skipped triangle edges");

        let report = family_report(&fam).unwrap();
        assert_eq!(report.member_count, 4);
        assert!(report.complete);
        assert_eq!(report.y_delta_required, 2, "C3 and K1,3 need a Y∇ step");
        for member in &report.members {
            assert!(!member.il);
            assert!(!member.minor_minimal_il);
            assert_eq!(member.ik, IkVerdict::NotIk, "planar graphs are 2-apex");
        }

        let dy = descendants(&k4, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(dy.members.len(), 2);
    }
}
