//! Acceptance gate: ten end-to-end criteria covering linking parity,
//! obstruction-family minimality, agreement of the two decision paths,
//! move-family censuses, cone duality, the clique-minor edge bound, the
//! double-link structure search, the complement guarantee, and a final
//! certificate soundness sweep.
//!
//! Each test prints one `ACCEPTANCE <k> (<name>): PASS|FAIL` line; run
//! `cargo test --test acceptance -- --nocapture` to see them all.

use ilk::catalog::{self, catalog as named, complete, multipartite};
use ilk::cycles::{disjoint_cycle_pairs, disjoint_edge_pairs, enumerate_cycles};
use ilk::d4::{self, verify_d4_witness, D4Outcome};
use ilk::embedding::random_embedding;
use ilk::families::{closure, descendants};
use ilk::minors::{
    self, classify_ik, is_il, is_minor_minimal_il, is_n_apex, is_planar, mader_threshold,
    verify_minor_witness, IkVerdict,
};
use ilk::z2::{
    decide_z2_il, total_linking_parity, verify_linkless_witness, verify_obstruction,
    Z2Certificate,
};
use ilk::{iso, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn criterion(k: usize, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {k} ({name}): PASS"),
        Err(cause) => {
            println!("ACCEPTANCE {k} ({name}): FAIL");
            std::panic::resume_unwind(cause);
        }
    }
}

/// All graphs up to isomorphism with 1..=max_n vertices, grouped by
/// vertex count. Built by vertex augmentation: every n-vertex graph is
/// some (n-1)-vertex graph plus one vertex attached to a subset, so
/// augmenting every smaller graph by every subset reaches everything.
/// The counts are pinned to the known census numbers below, which keeps
/// the enumerator itself honest.
fn all_graphs_by_vertex_count(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_n: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &by_n[n - 2] {
            let base = g.edges().to_vec();
            for mask in 0u64..(1 << (n - 1)) {
                let mut edges = base.clone();
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        edges.push((v, n - 1));
                    }
                }
                let h = Graph::from_edges(n, edges).expect("edges are in range");
                if seen.insert(iso::certificate(&h)) {
                    next.push(h);
                }
            }
        }
        by_n.push(next);
    }
    by_n
}

/// Number of graphs up to isomorphism on 1..=7 vertices.
const GRAPH_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
/// Number of connected graphs up to isomorphism on 1..=7 vertices.
const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("edges are in range")
}

#[test]
fn criterion_01_k6_linking_parity_and_censuses() {
    criterion(1, "K6 linking parity and censuses", || {
        let k6 = complete(6);

        // Census oracles, computed from first principles: C(6,3) triangles,
        // C(6,3)/2 complementary triangle splits, and per-edge counting of
        // endpoint-disjoint partners.
        let triangle_oracle = 6 * 5 * 4 / 6;
        let pair_oracle = triangle_oracle / 2;
        let mut edge_pair_oracle = 0;
        let edges = k6.edges();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a != c && a != d && b != c && b != d {
                    edge_pair_oracle += 1;
                }
            }
        }
        assert_eq!(edge_pair_oracle, 45);

        let triangles = enumerate_cycles(&k6).iter().filter(|c| c.len() == 3).count();
        assert_eq!(triangles, triangle_oracle);
        assert_eq!(triangles, 20);
        assert_eq!(disjoint_cycle_pairs(&k6).len(), pair_oracle);
        assert_eq!(disjoint_cycle_pairs(&k6).len(), 10);
        assert_eq!(disjoint_edge_pairs(&k6).len(), edge_pair_oracle);

        // Every embedding of K6 holds an odd number of oddly-linked
        // triangle pairs; checked via the mod-2 aggregate and again via
        // integer linking numbers.
        for seed in 0..1000u64 {
            let emb = random_embedding(&k6, seed, 4).expect("nonnegative bound");
            assert!(total_linking_parity(&emb), "seed {seed} produced even total parity");
            let integer_sum: i64 = disjoint_cycle_pairs(&k6)
                .iter()
                .map(|(c, d)| emb.linking_number(c, d).expect("disjoint"))
                .sum();
            assert_eq!(integer_sum.rem_euclid(2), 1, "seed {seed}");
        }
    });
}

#[test]
fn criterion_02_obstruction_family_minimality() {
    criterion(2, "obstruction family minimality", || {
        for k in 1..=7 {
            let name = format!("PF{k}");
            let member = named(&name).expect("family members are cataloged");

            // Both decision paths call the member itself linked.
            let minor_verdict = is_il(&member).expect("desk scale");
            assert!(minor_verdict.il, "{name} must be linked (minor path)");
            let witness = minor_verdict.witness.expect("linked verdicts carry witnesses");
            let pattern = named(minor_verdict.member.as_deref().unwrap()).unwrap();
            assert!(verify_minor_witness(&member, &pattern, &witness), "{name} witness");
            let algebra = decide_z2_il(&member).expect("desk scale");
            assert!(algebra.il, "{name} must be linked (GF(2) path)");
            if let Z2Certificate::Obstruction { pairs } = &algebra.certificate {
                assert!(verify_obstruction(&member, pairs), "{name} obstruction");
            } else {
                panic!("{name}: linked verdict must carry an obstruction");
            }
            assert!(is_minor_minimal_il(&member).expect("desk scale"), "{name} minimality");

            // Every proper minor one step down is unlinked, by both paths,
            // with a machine-verified linkless witness.
            let mut proper_minors = Vec::new();
            for e in 0..member.edge_count() {
                proper_minors.push(member.delete_edge(e).expect("edge id in range"));
                proper_minors.push(member.contract_edge(e, true).expect("edge id in range"));
            }
            for (i, smaller) in proper_minors.iter().enumerate() {
                assert!(
                    !is_il(smaller).expect("desk scale").il,
                    "{name} proper minor {i} must be unlinked (minor path)"
                );
                let sub = decide_z2_il(smaller).expect("desk scale");
                assert!(!sub.il, "{name} proper minor {i} must be unlinked (GF(2) path)");
                match &sub.certificate {
                    Z2Certificate::LinklessWitness { twists } => {
                        assert!(
                            verify_linkless_witness(smaller, twists),
                            "{name} proper minor {i} witness"
                        );
                    }
                    Z2Certificate::Obstruction { .. } => {
                        panic!("{name} proper minor {i}: unlinked verdict with an obstruction")
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_03_decision_path_agreement() {
    criterion(3, "decision path agreement", || {
        let by_n = all_graphs_by_vertex_count(7);
        for (i, graphs) in by_n.iter().enumerate() {
            assert_eq!(graphs.len(), GRAPH_COUNTS[i], "graph census on {} vertices", i + 1);
        }

        let mut checked = 0usize;
        for graphs in &by_n {
            for g in graphs.iter().filter(|g| g.is_connected()) {
                let minor = is_il(g).expect("no budget failures allowed");
                let algebra = decide_z2_il(g).expect("no budget failures allowed");
                assert_eq!(minor.il, algebra.il, "disagreement on {g:?}");
                checked += 1;
            }
        }
        assert_eq!(checked, CONNECTED_COUNTS.iter().sum::<usize>());
        assert_eq!(checked, 996);

        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for i in 0..200 {
            let n = 8 + (i % 2);
            let g = random_graph(&mut rng, n, 0.5);
            let minor = is_il(&g).expect("no budget failures allowed");
            let algebra = decide_z2_il(&g).expect("no budget failures allowed");
            assert_eq!(minor.il, algebra.il, "disagreement on sample {i}: {g:?}");
        }
    });
}

#[test]
fn criterion_04_move_family_censuses() {
    criterion(4, "move-family censuses", || {
        let six = closure(&complete(6), true, 64).expect("within budget");
        assert_eq!(six.members.len(), 7);
        assert!(six.complete);

        let seven = closure(&complete(7), true, 64).expect("within budget");
        assert_eq!(seven.members.len(), 20);
        assert!(seven.complete);
        let unreachable = seven.members.iter().filter(|m| !m.delta_y_only).count();
        assert_eq!(unreachable, 6);

        let down = descendants(&complete(7), 64).expect("within budget");
        assert_eq!(down.members.len(), 14);
        assert!(down.members.iter().all(|m| m.delta_y_only));
    });
}

#[test]
fn criterion_05_cone_duality() {
    criterion(5, "cone duality", || {
        let by_n = all_graphs_by_vertex_count(6);
        let k1 = complete(1);
        let mut planar_pool = Vec::new();
        let mut total = 0usize;
        for graphs in &by_n {
            for g in graphs {
                total += 1;
                let planar = is_planar(g).expect("desk scale");
                let coned_linked = is_il(&g.cone(&k1)).expect("desk scale").il;
                assert_eq!(planar, !coned_linked, "cone duality fails on {g:?}");
                if planar {
                    planar_pool.push(g.clone());
                }
            }
        }
        assert_eq!(total, 208);

        // 50 sampled planar graphs: the double cone is never knotted.
        let k2 = complete(2);
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..50 {
            let g = &planar_pool[rng.gen_range(0..planar_pool.len())];
            let classification = classify_ik(&g.cone(&k2)).expect("desk scale");
            assert!(
                matches!(classification.verdict, IkVerdict::NotIk),
                "double cone of planar {g:?} classified {:?}",
                classification.verdict
            );
            let apex = classification.apex_set.expect("NotIk verdicts carry an apex set");
            let rest = g.cone(&k2).delete_vertices(&apex).expect("apex set in range");
            assert!(is_planar(&rest).expect("desk scale"));
        }
    });
}

#[test]
fn criterion_06_k7_edge_deletions_stay_linked() {
    criterion(6, "K7 edge deletions stay linked", || {
        let k7 = complete(7);
        assert_eq!(k7.edge_count(), 21);
        for e in 0..21 {
            let g = k7.delete_edge(e).expect("edge id in range");
            let verdict = is_il(&g).expect("desk scale");
            assert!(verdict.il, "K7 minus edge {e} must stay linked");
            let witness = verdict.witness.expect("linked verdicts carry witnesses");
            let pattern = named(verdict.member.as_deref().unwrap()).unwrap();
            assert!(verify_minor_witness(&g, &pattern, &witness), "K7 minus edge {e}");
        }
    });
}

#[test]
fn criterion_07_edge_bound_forces_clique_minors() {
    criterion(7, "edge bound forces clique minors", || {
        assert_eq!(mader_threshold(4, 15).expect("in range"), 50);

        let mut rng = ChaCha8Rng::seed_from_u64(70);
        let mut fired = 0usize;
        for _ in 0..500 {
            let n = rng.gen_range(1..=5usize);
            let v = rng.gen_range(3..=11usize);
            let p = rng.gen_range(0.3..=0.95);
            let g = random_graph(&mut rng, v, p);
            if !minors::mader_guarantees_clique_minor(n, &g).expect("n in range") {
                continue;
            }
            fired += 1;
            let pattern = complete(n + 2);
            let witness = minors::has_minor(&g, &pattern)
                .expect("desk scale")
                .unwrap_or_else(|| panic!("bound fired on {g:?} but no K{} minor", n + 2));
            assert!(verify_minor_witness(&g, &pattern, &witness));
        }
        assert!(fired > 100, "only {fired} of 500 samples fired; sweep too weak");
    });
}

#[test]
fn criterion_08_double_link_search() {
    criterion(8, "double-link search", || {
        let d4 = named("D4").expect("cataloged");
        let pairs = disjoint_edge_pairs(&d4);

        // Both digon pairs oddly linked: twist the (0,6) and (2,4) edge
        // pairs once each.
        let mut twists = vec![0i64; pairs.len()];
        for (i, p) in pairs.iter().enumerate() {
            if p.edges == (0, 6) || p.edges == (2, 4) {
                twists[i] = 1;
            }
        }
        let doubled = ilk::embedding::EmbeddingSpec::new(d4.clone(), twists).expect("length");
        match d4::find_double_linked_d4(&doubled).expect("desk scale") {
            D4Outcome::Witness(w) => assert!(verify_d4_witness(&doubled, &w)),
            other => panic!("double-linked embedding must yield a witness, got {other:?}"),
        }

        // The flat embedding has no odd link at all.
        let flat = ilk::embedding::EmbeddingSpec::base(d4.clone());
        assert_eq!(d4::find_double_linked_d4(&flat).expect("desk scale"), D4Outcome::None);

        // 25 seeded embeddings of the four-partite seed: every completed
        // search yields a verified witness; a small budget overrun quota
        // is tolerated and "none" never happens.
        let k3311 = multipartite(&[3, 3, 1, 1]);
        let budget = d4::DEFAULT_NODE_BUDGET;
        let census = d4::d4_census(&k3311, 25, 80, 3, budget).expect("64-vertex limit");
        let mut master = ChaCha8Rng::seed_from_u64(80);
        let (mut witnesses, mut exhausted) = (0usize, 0usize);
        for sample in &census.samples {
            let emb = random_embedding(&k3311, master.gen::<u64>(), 3).expect("bound");
            match d4::find_double_linked_d4_budgeted(&emb, budget).expect("64-vertex limit") {
                D4Outcome::Witness(w) => {
                    assert!(verify_d4_witness(&emb, &w), "sample {}", sample.index);
                    witnesses += 1;
                    assert_eq!(sample.outcome, d4::SampleOutcome::Witness);
                }
                D4Outcome::None => panic!("sample {}: no witness found", sample.index),
                D4Outcome::BudgetExceeded { .. } => {
                    exhausted += 1;
                    assert_eq!(sample.outcome, d4::SampleOutcome::BudgetExceeded);
                }
            }
        }
        assert_eq!(witnesses + exhausted, 25);
        assert_eq!(census.witnesses, witnesses);
        assert!(exhausted * 10 <= 25, "{exhausted} of 25 samples ran out of budget");
    });
}

#[test]
fn criterion_09_complement_guarantee() {
    criterion(9, "complement guarantee", || {
        let report = minors::complement_il_check(13, 20, 90, minors::DEFAULT_BUDGET)
            .expect("13 vertices fit the masks");
        assert_eq!(report.samples.len(), 20);
        let mut exhausted = 0usize;
        for sample in &report.samples {
            match sample.outcome {
                minors::ComplementOutcome::Neither => {
                    panic!("sample {}: neither side linked on 13 vertices", sample.index)
                }
                minors::ComplementOutcome::BudgetExceeded => exhausted += 1,
                _ => {
                    assert!(
                        sample.graph_il == Some(true) || sample.complement_il == Some(true),
                        "sample {}: completed but no linked side",
                        sample.index
                    );
                }
            }
        }
        assert!(exhausted * 4 <= 20, "{exhausted} of 20 samples ran out of budget");
    });
}

#[test]
fn criterion_10_certificate_soundness_sweep() {
    criterion(10, "certificate soundness sweep", || {
        let mut linkless = 0usize;
        let mut obstructions = 0usize;
        let mut minor_witnesses = 0usize;
        let mut d4_witnesses = 0usize;

        // Linking certificates across every graph on <= 6 vertices.
        for graphs in &all_graphs_by_vertex_count(6) {
            for g in graphs {
                let decision = decide_z2_il(g).expect("desk scale");
                match &decision.certificate {
                    Z2Certificate::LinklessWitness { twists } => {
                        assert!(verify_linkless_witness(g, twists), "witness on {g:?}");
                        linkless += 1;
                    }
                    Z2Certificate::Obstruction { pairs } => {
                        assert!(verify_obstruction(g, pairs), "obstruction on {g:?}");
                        obstructions += 1;
                    }
                }
            }
        }

        // Minor witnesses from the family members and from dense randoms.
        for member in catalog::petersen_family() {
            let verdict = is_il(member).expect("desk scale");
            let witness = verdict.witness.expect("family members are linked");
            let pattern = named(verdict.member.as_deref().unwrap()).unwrap();
            assert!(verify_minor_witness(member, &pattern, &witness));
            minor_witnesses += 1;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 9, 0.75);
            let verdict = is_il(&g).expect("desk scale");
            if let (Some(name), Some(witness)) = (&verdict.member, &verdict.witness) {
                let pattern = named(name).unwrap();
                assert!(verify_minor_witness(&g, &pattern, witness), "dense sample {g:?}");
                minor_witnesses += 1;
            }
        }

        // Double-link witnesses over seeded embeddings.
        let k3311 = multipartite(&[3, 3, 1, 1]);
        for seed in 0..5u64 {
            let emb = random_embedding(&k3311, seed, 3).expect("bound");
            if let D4Outcome::Witness(w) =
                d4::find_double_linked_d4(&emb).expect("64-vertex limit")
            {
                assert!(verify_d4_witness(&emb, &w), "seed {seed}");
                d4_witnesses += 1;
            }
        }

        // One apex-style spot check: deleting a verified apex set of a
        // linked graph leaves a planar remainder.
        let apex = is_n_apex(&complete(6), 2).expect("desk scale").expect("K6 is two-apex");
        assert!(is_planar(&complete(6).delete_vertices(&apex).unwrap()).unwrap());

        assert!(linkless > 0 && obstructions > 0 && minor_witnesses > 0 && d4_witnesses > 0);
        println!(
            "  verified {linkless} linkless witnesses, {obstructions} obstructions, \
             {minor_witnesses} minor witnesses, {d4_witnesses} double-link witnesses"
        );
    });
}
