//! Command implementations: input resolution, execution, report assembly,
//! and the cache-aware emit path shared by every subcommand.

use crate::cache;
use crate::report::{no_certificate, BudgetBlock, InputBlock, RunReport, TOOL, VERSION};
use crate::{EmbedArgs, InputArgs, MoveArgs, MovesChoice, OptionalInputArgs};
use anyhow::{anyhow, bail, Context, Result};
use ilk::cycles::{disjoint_cycle_pairs, disjoint_edge_pairs, enumerate_cycles};
use ilk::embedding::{random_embedding, EmbeddingSpec};
use ilk::formats::{parse_edge_list, parse_graph6, to_graph6};
use ilk::{catalog, d4, families, minors, z2, Graph};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub struct Ctx {
    pub cache_dir: Option<PathBuf>,
    pub human: bool,
}

/// What one command run produced, before report framing. A populated
/// `budget_detail` means the verdict is undecided and the process should
/// exit 3 after printing the report.
pub struct CmdOutput {
    pub verdict: Value,
    pub certificate: Value,
    pub result: Option<Value>,
    pub budget_detail: Option<String>,
    pub summary: String,
}

impl CmdOutput {
    fn budget(detail: String, summary: String) -> CmdOutput {
        CmdOutput {
            verdict: Value::Null,
            certificate: no_certificate(),
            result: None,
            budget_detail: Some(detail),
            summary,
        }
    }
}

// ---------------------------------------------------------------- input

pub fn resolve_parts(
    graph6: Option<&str>,
    edge_list: Option<&Path>,
    catalog_name: Option<&str>,
) -> Result<(Value, Graph)> {
    if let Some(text) = graph6 {
        let text = text.trim();
        let g = parse_graph6(text).map_err(|e| anyhow!("invalid graph6 input: {e}"))?;
        return Ok((json!({"kind": "graph6", "text": text}), g));
    }
    if let Some(path) = edge_list {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read edge list {}", path.display()))?;
        let g = parse_edge_list(&text).map_err(|e| anyhow!("invalid edge list: {e}"))?;
        return Ok((json!({"kind": "edge_list", "path": path.display().to_string()}), g));
    }
    if let Some(name) = catalog_name {
        let g = catalog::catalog(name).map_err(|e| anyhow!("{e}"))?;
        return Ok((json!({"kind": "catalog", "name": name}), g));
    }
    bail!("one of --graph6, --edge-list, --catalog is required")
}

pub fn resolve_input(args: &InputArgs) -> Result<(Value, Graph)> {
    resolve_parts(args.graph6.as_deref(), args.edge_list.as_deref(), args.catalog.as_deref())
}

/// Twist vector for the requested embedding: explicit JSON, seeded
/// random, or the all-zero base diagram when neither flag is given.
pub fn resolve_twists(g: &Graph, embed: &EmbedArgs) -> Result<Vec<i64>> {
    let pair_count = disjoint_edge_pairs(g).len();
    if let Some(text) = &embed.twists {
        let twists: Vec<i64> =
            serde_json::from_str(text).context("--twists must be a JSON array of integers")?;
        if twists.len() != pair_count {
            bail!(
                "twist vector has {} entries; this graph has {pair_count} disjoint edge pairs",
                twists.len()
            );
        }
        Ok(twists)
    } else if let Some(seed) = embed.seed {
        let emb = random_embedding(g, seed, embed.twist_bound).map_err(|e| anyhow!("{e}"))?;
        Ok(emb.twists().to_vec())
    } else {
        Ok(vec![0; pair_count])
    }
}

// ----------------------------------------------------------------- emit

/// Runs `exec` and prints exactly one report line, consulting the cache
/// first for cacheable commands. Cache entries are keyed on the
/// canonical form of the graph, so a hit may have been computed from an
/// isomorphic labelling; verdicts are label-independent. Reports from
/// cacheable commands carry no timing so hit and miss emit identical
/// bytes. Returns the process exit code.
fn emit(
    ctx: &Ctx,
    command: &'static str,
    input: InputBlock,
    parameters: Value,
    cacheable: bool,
    exec: impl FnOnce() -> Result<CmdOutput>,
) -> Result<i32> {
    let cache_slot = if cacheable {
        ctx.cache_dir.as_ref().map(|dir| {
            let canonical = input.canonical.as_deref().unwrap_or("");
            (dir.clone(), cache::key(canonical, command, &parameters))
        })
    } else {
        None
    };
    if let Some((dir, key)) = &cache_slot {
        if let Some(line) = cache::lookup(dir, key) {
            println!("{line}");
            if ctx.human {
                eprintln!("{command}: cache hit");
            }
            return Ok(0);
        }
    }
    let started = Instant::now();
    let out = exec()?;
    let report = RunReport {
        tool: TOOL,
        version: VERSION,
        command,
        input,
        parameters,
        verdict: out.verdict,
        certificate: out.certificate,
        result: out.result,
        budget: BudgetBlock {
            exceeded: out.budget_detail.is_some(),
            detail: out.budget_detail.clone(),
        },
        timing_ms: if cacheable { None } else { Some(started.elapsed().as_millis() as u64) },
        error: None,
    };
    let line = report.to_line();
    println!("{line}");
    if ctx.human {
        eprintln!("{}", out.summary);
    }
    if out.budget_detail.is_some() {
        return Ok(3);
    }
    if let Some((dir, key)) = &cache_slot {
        cache::store(dir, key, &line)
            .with_context(|| format!("cannot write cache entry in {}", dir.display()))?;
    }
    Ok(0)
}

fn graph_result(g: &Graph) -> Result<Value> {
    let mut v = json!({
        "graph": serde_json::to_value(g)?,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
    });
    if let Ok(g6) = to_graph6(g) {
        v["graph6"] = json!(g6);
    }
    Ok(v)
}

fn minor_certificate(pattern_name: &str, pattern: &Graph, w: &minors::MinorWitness) -> Result<Value> {
    Ok(json!({
        "kind": "minor_witness",
        "pattern_name": pattern_name,
        "pattern": serde_json::to_value(pattern)?,
        "witness": serde_json::to_value(w)?,
    }))
}

// ----------------------------------------------------- reusable bodies
// The four batch-capable commands keep their execution separate from
// report plumbing so the batch runner can call them directly.

pub fn exec_info(g: &Graph, twists: Option<&[i64]>, min_abs: u64) -> Result<CmdOutput> {
    let cycles = enumerate_cycles(g);
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut result = json!({
        "degree_sequence": degrees,
        "cycle_count": cycles.len(),
        "disjoint_cycle_pairs": disjoint_cycle_pairs(g).len(),
        "disjoint_edge_pairs": disjoint_edge_pairs(g).len(),
    });
    if let Some(tw) = twists {
        let emb = EmbeddingSpec::new(g.clone(), tw.to_vec()).map_err(|e| anyhow!("{e}"))?;
        result["links"] = serde_json::to_value(emb.all_links(min_abs))?;
        result["total_linking_parity"] = json!(z2::total_linking_parity(&emb));
    }
    Ok(CmdOutput {
        verdict: json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "simple": g.is_simple(),
            "connected": g.is_connected(),
        }),
        certificate: no_certificate(),
        result: Some(result),
        budget_detail: None,
        summary: format!(
            "{} vertices, {} edges, {} cycles",
            g.vertex_count(),
            g.edge_count(),
            cycles.len()
        ),
    })
}

pub fn exec_z2il(g: &Graph, cap: usize) -> Result<CmdOutput> {
    match z2::decide_z2_il_with_cap(g, cap) {
        Ok(decision) => {
            let summary = match &decision.certificate {
                z2::Z2Certificate::Obstruction { pairs } => format!(
                    "IL: every embedding keeps an odd linking parity ({} cycle pairs obstruct)",
                    pairs.len()
                ),
                z2::Z2Certificate::LinklessWitness { .. } => {
                    "not IL: a twist assignment kills every linking parity".to_string()
                }
            };
            Ok(CmdOutput {
                verdict: json!(if decision.il { "IL" } else { "notIL" }),
                certificate: serde_json::to_value(&decision.certificate)?,
                result: Some(json!({"rows": decision.rows, "cols": decision.cols})),
                budget_detail: None,
                summary,
            })
        }
        Err(z2::Z2Error::TooManyCyclePairs { cycles, pairs, cap }) => Ok(CmdOutput {
            result: Some(json!({"cycles": cycles, "pairs": pairs, "cap": cap})),
            ..CmdOutput::budget(
                format!("{pairs} disjoint cycle pairs exceed the cap of {cap}"),
                format!("undecided: {pairs} cycle pairs over the cap of {cap}"),
            )
        }),
        Err(e) => Err(anyhow!("{e}")),
    }
}

pub fn exec_il(g: &Graph, budget: u64) -> Result<CmdOutput> {
    match minors::is_il_budgeted(g, budget) {
        Ok(v) => {
            let certificate = match (&v.member, &v.witness) {
                (Some(name), Some(w)) => {
                    let pattern = catalog::catalog(name).expect("member names are canonical");
                    minor_certificate(name, &pattern, w)?
                }
                _ => no_certificate(),
            };
            let summary = match &v.member {
                Some(name) => format!("IL: contains obstruction-family member {name} as a minor"),
                None => "not IL: no obstruction-family minor".to_string(),
            };
            Ok(CmdOutput {
                verdict: json!(if v.il { "IL" } else { "notIL" }),
                certificate,
                result: None,
                budget_detail: None,
                summary,
            })
        }
        Err(minors::MinorError::BudgetExceeded { explored, budget }) => Ok(CmdOutput::budget(
            format!("minor search explored {explored} nodes (budget {budget})"),
            "undecided: minor search budget exhausted".to_string(),
        )),
        Err(e) => Err(anyhow!("{e}")),
    }
}

pub fn exec_planar(g: &Graph, budget: u64) -> Result<CmdOutput> {
    match minors::is_planar_budgeted(g, budget) {
        Ok(planar) => Ok(CmdOutput {
            verdict: json!({ "planar": planar }),
            certificate: no_certificate(),
            result: None,
            budget_detail: None,
            summary: if planar { "planar".to_string() } else { "not planar".to_string() },
        }),
        Err(minors::MinorError::BudgetExceeded { explored, budget }) => Ok(CmdOutput::budget(
            format!("planarity search explored {explored} nodes (budget {budget})"),
            "undecided: planarity search budget exhausted".to_string(),
        )),
        Err(e) => Err(anyhow!("{e}")),
    }
}

// ------------------------------------------------------------ commands

pub fn info(ctx: &Ctx, input: &InputArgs, embed: &EmbedArgs, min_abs: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let wants_embedding = embed.twists.is_some() || embed.seed.is_some();
    let twists = if wants_embedding { Some(resolve_twists(&g, embed)?) } else { None };
    let parameters = json!({"min_abs": min_abs, "twists": twists});
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "info", block, parameters, false, || exec_info(&g, twists.as_deref(), min_abs))
}

pub fn z2il(ctx: &Ctx, input: &InputArgs, cap: usize) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "z2il", block, json!({ "cap": cap }), true, || exec_z2il(&g, cap))
}

pub fn il(ctx: &Ctx, input: &InputArgs, budget: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "il", block, json!({ "budget": budget }), true, || exec_il(&g, budget))
}

pub fn planar(ctx: &Ctx, input: &InputArgs, budget: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "planar", block, json!({ "budget": budget }), true, || exec_planar(&g, budget))
}

pub fn apex(ctx: &Ctx, input: &InputArgs, n: usize, budget: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "apex", block, json!({"n": n, "budget": budget}), true, || {
        match minors::is_n_apex_budgeted(&g, n, budget) {
            Ok(Some(set)) => Ok(CmdOutput {
                verdict: json!({"apex": true, "n": n}),
                certificate: json!({"kind": "apex_set", "vertices": set}),
                result: None,
                budget_detail: None,
                summary: format!("deleting {set:?} leaves a planar graph"),
            }),
            Ok(None) => Ok(CmdOutput {
                verdict: json!({"apex": false, "n": n}),
                certificate: no_certificate(),
                result: None,
                budget_detail: None,
                summary: format!("no {n}-vertex deletion set leaves a planar graph"),
            }),
            Err(minors::MinorError::BudgetExceeded { explored, budget }) => {
                Ok(CmdOutput::budget(
                    format!("apex search explored {explored} nodes (budget {budget})"),
                    "undecided: apex search budget exhausted".to_string(),
                ))
            }
            Err(e) => Err(anyhow!("{e}")),
        }
    })
}

pub fn cone(ctx: &Ctx, input: &InputArgs, with: &str) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let other = if let Ok(named) = catalog::catalog(with) {
        named
    } else {
        parse_graph6(with.trim())
            .map_err(|_| anyhow!("--with must name a catalog graph or be graph6 text: {with}"))?
    };
    let coned = g.cone(&other);
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "cone", block, json!({ "with": with }), false, || {
        Ok(CmdOutput {
            verdict: json!({"vertices": coned.vertex_count(), "edges": coned.edge_count()}),
            certificate: no_certificate(),
            result: Some(graph_result(&coned)?),
            budget_detail: None,
            summary: format!(
                "join with {with}: {} vertices, {} edges",
                coned.vertex_count(),
                coned.edge_count()
            ),
        })
    })
}

pub fn complement(ctx: &Ctx, input: &InputArgs) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let c = g.complement().map_err(|e| anyhow!("{e}"))?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "complement", block, json!({}), false, || {
        Ok(CmdOutput {
            verdict: json!({"vertices": c.vertex_count(), "edges": c.edge_count()}),
            certificate: no_certificate(),
            result: Some(graph_result(&c)?),
            budget_detail: None,
            summary: format!("complement has {} edges", c.edge_count()),
        })
    })
}

pub fn moves(ctx: &Ctx, input: &InputArgs, args: &MoveArgs) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let (parameters, moved, summary) = if let Some(spec) = &args.delta_y {
        let (a, b, c) = parse_triangle(spec)?;
        let moved = g.delta_y(a, b, c).map_err(|e| anyhow!("{e}"))?;
        (
            json!({"move": "delta_y", "triangle": [a, b, c]}),
            moved,
            format!("triangle ({a},{b},{c}) replaced by a new degree-3 vertex"),
        )
    } else {
        let v = args.y_delta.expect("the argument group guarantees one move");
        let moved = g.y_delta(v).map_err(|e| anyhow!("{e}"))?;
        (
            json!({"move": "y_delta", "vertex": v}),
            moved,
            format!("degree-3 vertex {v} replaced by a triangle on its neighbors"),
        )
    };
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "moves", block, parameters, false, || {
        Ok(CmdOutput {
            verdict: json!({"vertices": moved.vertex_count(), "edges": moved.edge_count()}),
            certificate: no_certificate(),
            result: Some(graph_result(&moved)?),
            budget_detail: None,
            summary,
        })
    })
}

fn parse_triangle(spec: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = spec
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| anyhow!("--delta-y expects three vertices as A,B,C"))?;
    match parts[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => bail!("--delta-y expects exactly three vertices, got {}", parts.len()),
    }
}

pub fn closure(
    ctx: &Ctx,
    input: &InputArgs,
    moves: MovesChoice,
    max_members: usize,
    emit_graph6: Option<&Path>,
) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let allow_y_delta = matches!(moves, MovesChoice::Both);
    let moves_name = if allow_y_delta { "both" } else { "delta-y" };
    let parameters = json!({"moves": moves_name, "max_members": max_members});
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "closure", block, parameters, false, || {
        match families::closure(&g, allow_y_delta, max_members) {
            Ok(cl) => {
                if let Some(path) = emit_graph6 {
                    let mut text = String::new();
                    for m in &cl.members {
                        text.push_str(&to_graph6(&m.graph).map_err(|e| anyhow!("{e}"))?);
                        text.push('\n');
                    }
                    std::fs::write(path, text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
                let ydelta_required = cl.members.iter().filter(|m| !m.delta_y_only).count();
                let summary = format!(
                    "{} members; {} unreachable without the reverse move",
                    cl.members.len(),
                    ydelta_required
                );
                Ok(CmdOutput {
                    verdict: json!({
                        "members": cl.members.len(),
                        "ydelta_required": ydelta_required,
                        "complete": cl.complete,
                    }),
                    certificate: no_certificate(),
                    result: Some(json!({
                        "members": member_summaries(&cl)?,
                        "moves": serde_json::to_value(&cl.moves)?,
                    })),
                    budget_detail: None,
                    summary,
                })
            }
            Err(families::FamilyError::BudgetExceeded { budget, partial }) => Ok(CmdOutput {
                result: Some(json!({
                    "members": member_summaries(&partial)?,
                    "complete": false,
                })),
                ..CmdOutput::budget(
                    format!(
                        "member budget {budget} exceeded with {} members found",
                        partial.members.len()
                    ),
                    "undecided: closure budget exhausted".to_string(),
                )
            }),
            Err(e) => Err(anyhow!("{e}")),
        }
    })
}

fn member_summaries(cl: &families::FamilyClosure) -> Result<Value> {
    let rows: Vec<Value> = cl
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            json!({
                "index": i,
                "vertices": m.graph.vertex_count(),
                "edges": m.graph.edge_count(),
                "certificate": m.certificate,
                "delta_y_only": m.delta_y_only,
                "graph6": to_graph6(&m.graph).ok(),
            })
        })
        .collect();
    Ok(json!(rows))
}

pub fn d4(ctx: &Ctx, input: &InputArgs, embed: &EmbedArgs, budget: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let twists = resolve_twists(&g, embed)?;
    // The resolved twists are echoed so the run can be replayed (and
    // verified) without knowing the original seed.
    let parameters = json!({"twists": twists, "budget": budget});
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "d4", block, parameters, true, || {
        let emb = EmbeddingSpec::new(g.clone(), twists.clone()).map_err(|e| anyhow!("{e}"))?;
        match d4::find_double_linked_d4_budgeted(&emb, budget) {
            Ok(d4::D4Outcome::Witness(w)) => Ok(CmdOutput {
                verdict: json!({"outcome": "witness"}),
                certificate: json!({"kind": "d4_witness", "witness": serde_json::to_value(w.data())?}),
                result: None,
                budget_detail: None,
                summary: "double-linked doubled-square minor found in this embedding".to_string(),
            }),
            Ok(d4::D4Outcome::None) => Ok(CmdOutput {
                verdict: json!({"outcome": "none"}),
                certificate: no_certificate(),
                result: None,
                budget_detail: None,
                summary: "no double-linked doubled-square minor in this embedding".to_string(),
            }),
            Ok(d4::D4Outcome::BudgetExceeded { nodes }) => Ok(CmdOutput::budget(
                format!("search stopped after {nodes} nodes (budget {budget})"),
                "undecided: structure search budget exhausted".to_string(),
            )),
            Err(e) => Err(anyhow!("{e}")),
        }
    })
}

pub fn mader(ctx: &Ctx, input: &InputArgs, n: usize, budget: u64) -> Result<i32> {
    let (source, g) = resolve_input(input)?;
    let threshold = minors::mader_threshold(n, g.vertex_count()).map_err(|e| anyhow!("{e}"))?;
    let fires = minors::mader_guarantees_clique_minor(n, &g).map_err(|e| anyhow!("{e}"))?;
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "mader", block, json!({"n": n, "budget": budget}), true, || {
        let simple_edges = g.simplify().edge_count();
        let verdict = json!({
            "fires": fires,
            "n": n,
            "threshold": threshold,
            "simple_edges": simple_edges,
        });
        if !fires {
            return Ok(CmdOutput {
                verdict,
                certificate: no_certificate(),
                result: None,
                budget_detail: None,
                summary: format!(
                    "{simple_edges} edges do not exceed the threshold of {threshold}"
                ),
            });
        }
        let pattern_name = format!("K{}", n + 2);
        let pattern = catalog::complete(n + 2);
        match minors::has_minor_budgeted(&g, &pattern, budget) {
            Ok(Some(w)) => Ok(CmdOutput {
                verdict,
                certificate: minor_certificate(&pattern_name, &pattern, &w)?,
                result: None,
                budget_detail: None,
                summary: format!(
                    "{simple_edges} edges exceed the threshold of {threshold}; {pattern_name} minor found"
                ),
            }),
            Ok(None) => Err(anyhow!(
                "edge count {simple_edges} exceeds the threshold {threshold} but no {pattern_name} \
                 minor was found; the bound guarantees one"
            )),
            Err(minors::MinorError::BudgetExceeded { explored, budget }) => {
                Ok(CmdOutput::budget(
                    format!("clique-minor search explored {explored} nodes (budget {budget})"),
                    "bound fires but the witness search ran out of budget".to_string(),
                ))
            }
            Err(e) => Err(anyhow!("{e}")),
        }
    })
}

pub fn complement_il(
    ctx: &Ctx,
    vertices: usize,
    samples: usize,
    seed: u64,
    budget: u64,
) -> Result<i32> {
    let parameters = json!({
        "vertices": vertices,
        "samples": samples,
        "seed": seed,
        "budget": budget,
    });
    let block = InputBlock::bare(json!({"kind": "none"}));
    emit(ctx, "complement-il", block, parameters, true, || {
        let report =
            minors::complement_il_check(vertices, samples, seed, budget).map_err(|e| anyhow!("{e}"))?;
        let count = |o: minors::ComplementOutcome| {
            report.samples.iter().filter(|s| s.outcome == o).count()
        };
        let both = count(minors::ComplementOutcome::Both);
        let graph_only = count(minors::ComplementOutcome::GraphOnly);
        let complement_only = count(minors::ComplementOutcome::ComplementOnly);
        let neither = count(minors::ComplementOutcome::Neither);
        let exhausted = count(minors::ComplementOutcome::BudgetExceeded);
        Ok(CmdOutput {
            verdict: json!({
                "samples": report.samples.len(),
                "both": both,
                "graph_only": graph_only,
                "complement_only": complement_only,
                "neither": neither,
                "budget_exceeded": exhausted,
            }),
            certificate: no_certificate(),
            result: Some(serde_json::to_value(&report)?),
            budget_detail: None,
            summary: format!(
                "{} samples on {vertices} vertices: {both} both, {graph_only} graph only, \
                 {complement_only} complement only, {neither} neither, {exhausted} exhausted",
                report.samples.len()
            ),
        })
    })
}

pub fn catalog_cmd(ctx: &Ctx, name: Option<&str>) -> Result<i32> {
    match name {
        Some(n) => {
            let g = catalog::catalog(n).map_err(|e| anyhow!("{e}"))?;
            let block = InputBlock::for_graph(json!({"kind": "catalog", "name": n}), &g);
            emit(ctx, "catalog", block, json!({ "name": n }), false, || {
                Ok(CmdOutput {
                    verdict: json!({"vertices": g.vertex_count(), "edges": g.edge_count()}),
                    certificate: no_certificate(),
                    result: Some(graph_result(&g)?),
                    budget_detail: None,
                    summary: format!(
                        "{n}: {} vertices, {} edges",
                        g.vertex_count(),
                        g.edge_count()
                    ),
                })
            })
        }
        None => {
            let block = InputBlock::bare(json!({"kind": "none"}));
            emit(ctx, "catalog", block, json!({}), false, || {
                Ok(CmdOutput {
                    verdict: json!({"names": catalog::name_forms()}),
                    certificate: no_certificate(),
                    result: None,
                    budget_detail: None,
                    summary: format!("name forms: {}", catalog::name_forms().join(", ")),
                })
            })
        }
    }
}

// ------------------------------------------------------------- verify

pub fn verify(
    ctx: &Ctx,
    certificate_path: &Path,
    input: &OptionalInputArgs,
    twists_flag: Option<&str>,
) -> Result<i32> {
    let text = std::fs::read_to_string(certificate_path)
        .with_context(|| format!("cannot read {}", certificate_path.display()))?;
    let doc: Value = serde_json::from_str(&text).context("certificate file is not valid JSON")?;

    // A full run report carries its graph and parameters; a bare
    // certificate object needs them from flags.
    let is_report = doc.get("certificate").is_some() && doc.get("input").is_some();
    let (cert, report_graph, report_twists) = if is_report {
        let graph = doc["input"]
            .get("graph")
            .and_then(|gv| serde_json::from_value::<Graph>(gv.clone()).ok());
        let twists = doc["parameters"]
            .get("twists")
            .and_then(|t| serde_json::from_value::<Vec<i64>>(t.clone()).ok());
        (doc["certificate"].clone(), graph, twists)
    } else {
        (doc, None, None)
    };

    let (source, g) = match report_graph {
        Some(g) => (
            json!({"kind": "report", "path": certificate_path.display().to_string()}),
            g,
        ),
        None => resolve_parts(
            input.graph6.as_deref(),
            input.edge_list.as_deref(),
            input.catalog.as_deref(),
        )
        .context("the certificate file does not embed a graph; pass --graph6, --edge-list, or --catalog")?,
    };
    let twists: Option<Vec<i64>> = match twists_flag {
        Some(text) => {
            Some(serde_json::from_str(text).context("--twists must be a JSON array of integers")?)
        }
        None => report_twists,
    };

    let kind = cert.get("kind").and_then(|k| k.as_str()).unwrap_or("").to_string();
    let parameters = json!({
        "file": certificate_path.display().to_string(),
        "kind": kind,
    });
    let block = InputBlock::for_graph(source, &g);
    emit(ctx, "verify", block, parameters, false, || {
        let (valid, note) = check_certificate(&g, &cert, twists.as_deref())?;
        let summary = if valid {
            format!("{kind}: verified")
        } else {
            match &note {
                Some(n) => format!("{kind}: REJECTED ({n})"),
                None => format!("{kind}: REJECTED"),
            }
        };
        Ok(CmdOutput {
            verdict: json!({"valid": valid, "kind": kind, "note": note}),
            certificate: cert.clone(),
            result: None,
            budget_detail: None,
            summary,
        })
    })
}

/// Replays one certificate against its graph. `Ok((false, note))` means
/// the certificate is well-formed enough to check but fails; `Err` means
/// the file cannot even be interpreted.
fn check_certificate(
    g: &Graph,
    cert: &Value,
    twists: Option<&[i64]>,
) -> Result<(bool, Option<String>)> {
    let kind = cert.get("kind").and_then(|k| k.as_str()).unwrap_or("");
    match kind {
        "none" => Ok((false, Some("no certificate to verify".to_string()))),
        "linkless_witness" | "obstruction" => {
            let data: z2::Z2CertificateData =
                serde_json::from_value(cert.clone()).context("malformed linking certificate")?;
            match z2::Z2Certificate::from_data(g, data) {
                Ok(z2::Z2Certificate::LinklessWitness { twists }) => {
                    Ok((z2::verify_linkless_witness(g, &twists), None))
                }
                Ok(z2::Z2Certificate::Obstruction { pairs }) => {
                    Ok((z2::verify_obstruction(g, &pairs), None))
                }
                Err(e) => Ok((false, Some(e.to_string()))),
            }
        }
        "minor_witness" => {
            let pattern: Graph = serde_json::from_value(cert["pattern"].clone())
                .context("minor witness lacks a pattern graph")?;
            let witness: minors::MinorWitness = serde_json::from_value(cert["witness"].clone())
                .context("malformed minor witness")?;
            Ok((minors::verify_minor_witness(g, &pattern, &witness), None))
        }
        "apex_set" => {
            let set: Vec<usize> = serde_json::from_value(cert["vertices"].clone())
                .context("apex set lacks a vertices array")?;
            match g.delete_vertices(&set) {
                Ok(rest) => Ok((minors::is_planar(&rest).map_err(|e| anyhow!("{e}"))?, None)),
                Err(e) => Ok((false, Some(e.to_string()))),
            }
        }
        "d4_witness" => {
            let data: d4::D4WitnessData = serde_json::from_value(cert["witness"].clone())
                .context("malformed witness data")?;
            let twists = twists
                .ok_or_else(|| {
                    anyhow!(
                        "a d4 witness is checked against an embedding; pass --twists or verify \
                         a full run report"
                    )
                })?
                .to_vec();
            let emb = EmbeddingSpec::new(g.clone(), twists).map_err(|e| anyhow!("{e}"))?;
            match d4::D4Witness::from_data(g, data) {
                Ok(w) => Ok((d4::verify_d4_witness(&emb, &w), None)),
                Err(e) => Ok((false, Some(e.to_string()))),
            }
        }
        other => bail!("unknown certificate kind {other:?}"),
    }
}
