//! Named graphs used throughout the crate and the CLI.
//!
//! Recognized names:
//!
//! * `K<n>` — complete graph, e.g. `K6`.
//! * `K<a,b,...>` — complete multipartite, parts labeled consecutively in
//!   the listed order (so `K3,3,1` puts the apex last as vertex 6).
//! * `C<n>` — cycle; `C1` is a loop and `C2` a pair of parallel edges.
//! * `Path<n>` — path on `n` vertices.
//! * `PetersenGraph` — outer cycle `0..5`, inner pentagram `5..10` with
//!   `5+i ~ 5+((i+2) mod 5)`, spokes `i ~ i+5`.
//! * `D4` — the doubled 4-cycle: two parallel copies of each edge of `C4`.
//! * `PF1`..`PF7` — the seven-member minor obstruction family for
//!   intrinsic linkedness (the Petersen family), computed once as the
//!   ∇Y/Y∇ closure of `K6` and ordered by vertex count, then sorted
//!   degree sequence, then certificate; each is returned in canonical
//!   labeling. `PF1` is `K6` and `PF7` is the Petersen graph.

use crate::graph::Graph;
use crate::iso;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}; expected K<n>, K<a,b,...>, C<n>, Path<n>, PetersenGraph, D4, or PF1..PF7")]
    UnknownName(String),
    #[error("bad parameter in catalog name {name:?}: {reason}")]
    BadParameter { name: String, reason: String },
}

/// Looks up a graph by name.
pub fn catalog(name: &str) -> Result<Graph, CatalogError> {
    match name {
        "PetersenGraph" => return Ok(petersen()),
        "D4" => return Ok(doubled_cycle(4)),
        _ => {}
    }
    if let Some(k) = name.strip_prefix("PF") {
        let k: usize = k
            .parse()
            .map_err(|_| CatalogError::UnknownName(name.to_string()))?;
        if !(1..=7).contains(&k) {
            return Err(CatalogError::BadParameter {
                name: name.to_string(),
                reason: "family members are PF1..PF7".into(),
            });
        }
        return Ok(petersen_family()[k - 1].clone());
    }
    if let Some(spec) = name.strip_prefix("Path") {
        let n = parse_positive(name, spec)?;
        return Ok(path(n));
    }
    if let Some(spec) = name.strip_prefix('K') {
        let parts = parse_part_list(name, spec)?;
        return Ok(if parts.len() == 1 { complete(parts[0]) } else { multipartite(&parts) });
    }
    if let Some(spec) = name.strip_prefix('C') {
        let n = parse_positive(name, spec)?;
        return Ok(cycle(n));
    }
    Err(CatalogError::UnknownName(name.to_string()))
}

/// The catalog's name schema, for CLI listings.
pub fn name_forms() -> &'static [&'static str] {
    &["K<n>", "K<a,b,...>", "C<n>", "Path<n>", "PetersenGraph", "D4", "PF1..PF7"]
}

fn parse_positive(name: &str, spec: &str) -> Result<usize, CatalogError> {
    let n: usize = spec.parse().map_err(|_| CatalogError::UnknownName(name.to_string()))?;
    if n == 0 {
        return Err(CatalogError::BadParameter {
            name: name.to_string(),
            reason: "size must be positive".into(),
        });
    }
    Ok(n)
}

fn parse_part_list(name: &str, spec: &str) -> Result<Vec<usize>, CatalogError> {
    let mut parts = Vec::new();
    for piece in spec.split(',') {
        let k: usize = piece.parse().map_err(|_| CatalogError::UnknownName(name.to_string()))?;
        if k == 0 {
            return Err(CatalogError::BadParameter {
                name: name.to_string(),
                reason: "part sizes must be positive".into(),
            });
        }
        parts.push(k);
    }
    Ok(parts)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("indices below n")
}

/// Complete multipartite graph; part `i` occupies the labels right after
/// part `i - 1`.
pub fn multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("indices below n")
}

/// Cycle on `n` vertices; `C1` is a loop, `C2` a doubled edge.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, edges).expect("indices below n")
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, edges).expect("indices below n")
}

/// `k` parallel copies of every edge of `C<n>`; `doubled_cycle(4)` is `D4`.
fn doubled_cycle(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, (i + 1) % n));
    }
    Graph::from_edges(n, edges).expect("indices below n")
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("indices below 10")
}

/// The seven Petersen-family members in canonical labeling, ordered as
/// documented on [`catalog`]. Computed once on first use.
pub fn petersen_family() -> &'static [Graph; 7] {
    static FAMILY: OnceLock<[Graph; 7]> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let closure = crate::families::closure(&complete(6), true, 64)
            .expect("the move closure of K6 stays within any sane budget");
        let mut keyed: Vec<(usize, Vec<usize>, String, Graph)> = closure
            .members
            .into_iter()
            .map(|m| m.graph)
            .map(|g| {
                let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
                degrees.sort_unstable();
                let form = iso::canonical_form(&g);
                let canonical = g.relabel(&form.permutation).expect("valid permutation");
                (g.vertex_count(), degrees, form.certificate, canonical)
            })
            .collect();
        keyed.sort_by(|a, b| (&a.0, &a.1, &a.2).cmp(&(&b.0, &b.1, &b.2)));
        let graphs: Vec<Graph> = keyed.into_iter().map(|(_, _, _, g)| g).collect();
        graphs.try_into().unwrap_or_else(|v: Vec<Graph>| {
            panic!("move closure of K6 has {} members, expected 7", v.len())
        })
    })
}
