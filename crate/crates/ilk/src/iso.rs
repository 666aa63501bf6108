//! Canonical labeling and isomorphism testing for multigraphs.
//!
//! The canonical form is computed by iterated partition refinement with
//! backtracking: the refinement colors vertices by (color, multiset of
//! neighbor colors with multiplicities, loop count) until stable, then
//! branches on the first non-singleton color class. Leaves yield candidate
//! labelings; the lexicographically smallest relabeled edge list wins.
//! Automorphisms discovered from equal leaf certificates prune sibling
//! branches (orbit pruning restricted to automorphisms fixing the current
//! branching path pointwise, which keeps the pruning sound).
//!
//! Two graphs are isomorphic exactly when their certificates are equal.
//! Intended scale is at most ~16 vertices; larger inputs work but may be
//! slow on highly symmetric graphs.

use crate::graph::{Graph, VertexId};

/// A canonical relabeling together with the certificate it produces.
pub struct CanonicalForm {
    /// `permutation[old_label] = canonical_label`.
    pub permutation: Vec<VertexId>,
    /// Certificate string; equal across a graph's isomorphism class.
    pub certificate: String,
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { permutation: Vec::new(), certificate: encode(0, &[]) };
    }
    let mut mult = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        if u != v {
            mult[v][u] += 1;
        }
    }
    let mut search = Search {
        n,
        mult,
        best: None,
        first: None,
        generators: Vec::new(),
        path: Vec::new(),
    };
    let initial = search.refine(vec![0; n]);
    search.run(initial);
    let (edges, permutation) = search.best.expect("at least one leaf is always reached");
    CanonicalForm { permutation, certificate: encode(n, &edges) }
}

/// Certificate of `g`; equal for isomorphic graphs, distinct otherwise.
pub fn certificate(g: &Graph) -> String {
    canonical_form(g).certificate
}

/// Exact isomorphism test via canonical certificates, with cheap
/// invariant pre-checks.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return false;
    }
    certificate(a) == certificate(b)
}

fn encode(n: usize, edges: &[(usize, usize)]) -> String {
    let body: Vec<String> = edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect();
    format!("G{n}|{}", body.join(","))
}

struct Search {
    n: usize,
    mult: Vec<Vec<u32>>,
    /// Smallest canonical edge list seen, with its permutation.
    best: Option<(Vec<(usize, usize)>, Vec<usize>)>,
    /// First leaf reached; equal later leaves reveal automorphisms.
    first: Option<(Vec<(usize, usize)>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search {
    /// Refines a coloring to a stable one. Colors are `0..k` and the new
    /// coloring always refines the old class order, so the result is
    /// deterministic and isomorphism-invariant.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        loop {
            let class_count = colors.iter().max().map_or(0, |m| m + 1);
            let mut keys: Vec<(usize, Vec<(usize, u32)>, u32, usize)> = (0..self.n)
                .map(|v| {
                    let mut nbr: Vec<(usize, u32)> = (0..self.n)
                        .filter(|&u| u != v && self.mult[v][u] > 0)
                        .map(|u| (colors[u], self.mult[v][u]))
                        .collect();
                    nbr.sort_unstable();
                    (colors[v], nbr, self.mult[v][v], v)
                })
                .collect();
            keys.sort_unstable();
            let mut new_colors = vec![0; self.n];
            let mut next = 0;
            for i in 0..keys.len() {
                if i > 0 && (keys[i].0, &keys[i].1, keys[i].2) != (keys[i - 1].0, &keys[i - 1].1, keys[i - 1].2)
                {
                    next += 1;
                }
                new_colors[keys[i].3] = next;
            }
            if next + 1 == class_count {
                return new_colors;
            }
            colors = new_colors;
        }
    }

    fn run(&mut self, colors: Vec<usize>) {
        // Discrete coloring: the colors are the canonical labels.
        if is_discrete(&colors) {
            self.leaf(colors);
            return;
        }
        let target = first_nonsingleton(&colors);
        let cell: Vec<usize> =
            (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.same_orbit(u, v)) {
                continue;
            }
            explored.push(v);
            self.path.push(v);
            let split = self.refine(individualize(&colors, v));
            self.run(split);
            self.path.pop();
        }
    }

    fn leaf(&mut self, colors: Vec<usize>) {
        let perm = colors;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                let m = self.mult[u][v];
                if m > 0 {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    edges.extend(std::iter::repeat_n((a, b), m as usize));
                }
            }
        }
        edges.sort_unstable();
        match &self.first {
            None => self.first = Some((edges.clone(), perm.clone())),
            Some((first_edges, first_perm)) => {
                if *first_edges == edges {
                    // perm and first_perm relabel to the same graph, so
                    // first_perm⁻¹ ∘ perm is an automorphism.
                    let mut inv = vec![0; self.n];
                    for (orig, &canon) in first_perm.iter().enumerate() {
                        inv[canon] = orig;
                    }
                    let sigma: Vec<usize> = perm.iter().map(|&c| inv[c]).collect();
                    if sigma.iter().enumerate().any(|(v, &s)| v != s) {
                        self.generators.push(sigma);
                    }
                }
            }
        }
        if self.best.as_ref().is_none_or(|(b, _)| edges < *b) {
            self.best = Some((edges, perm));
        }
    }

    /// Orbit test using only automorphisms that fix the branching path
    /// pointwise; those map the sibling subtree of `u` onto `v`'s exactly.
    fn same_orbit(&self, u: usize, v: usize) -> bool {
        let valid: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|sigma| self.path.iter().all(|&p| sigma[p] == p))
            .collect();
        if valid.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for sigma in valid {
            for w in 0..self.n {
                let (a, b) = (find(&mut parent, w), find(&mut parent, sigma[w]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
}

fn is_discrete(colors: &[usize]) -> bool {
    let max = colors.iter().max().map_or(0, |m| m + 1);
    max == colors.len()
}

fn first_nonsingleton(colors: &[usize]) -> usize {
    let mut counts = vec![0usize; colors.len()];
    for &c in colors {
        counts[c] += 1;
    }
    counts.iter().position(|&c| c > 1).expect("non-discrete coloring has one")
}

/// Splits `v` off its class, ordered before the rest of the class.
fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            let mut c = 2 * c;
            if c == 2 * colors[v] && u != v {
                c += 1;
            }
            c
        })
        .collect()
}
