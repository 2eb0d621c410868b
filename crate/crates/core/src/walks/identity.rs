use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use super::{count_subgraph_copies, PatternCatalog, WalkError};
use crate::graph::{canonical_form, Graph};

/// Longest walk length for which identities are derived.
pub const MAX_WALK_LENGTH: usize = 8;

/// `N_G(k) = sum coefficient * N_G(pattern)`.
#[derive(Debug, Clone, Serialize)]
pub struct WalkIdentity {
    pub k: usize,
    pub terms: Vec<WalkTerm>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkTerm {
    pub name: String,
    pub graph6: String,
    pub vertices: usize,
    pub edges: usize,
    pub coefficient: u64,
    #[serde(skip)]
    pub pattern: Graph,
}

impl WalkIdentity {
    /// Right-hand side evaluated on `g`.
    pub fn evaluate(&self, g: &Graph) -> BigUint {
        self.terms
            .iter()
            .map(|t| BigUint::from(t.coefficient) * count_subgraph_copies(g, &t.pattern))
            .sum()
    }

    pub fn coefficient(&self, name: &str) -> Option<u64> {
        self.terms
            .iter()
            .find(|t| t.name == name)
            .map(|t| t.coefficient)
    }
}

/// Connected graphs with `1..=max_edges` edges and no isolated vertices, one
/// per isomorphism class, canonically labeled and sorted by
/// (vertices, edges, certificate).
pub fn connected_patterns(max_edges: usize) -> Vec<Graph> {
    let mut out: Vec<(usize, usize, Vec<u8>, Graph)> = Vec::new();
    let mut seen = HashSet::new();
    let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let mut level = vec![edge];
    let mut e = 1;
    while e <= max_edges && !level.is_empty() {
        let mut next = Vec::new();
        for g in &level {
            let cf = canonical_form(g);
            let canon = g.permuted(&cf.labeling);
            out.push((g.n(), e, cf.bytes, canon));
        }
        if e == max_edges {
            break;
        }
        for g in &level {
            let n = g.n();
            let mut grow = |h: Graph| {
                let cf = canonical_form(&h);
                if seen.insert(cf.bytes) {
                    next.push(h);
                }
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        grow(h);
                    }
                }
                let mut h = Graph::empty(n + 1);
                for (a, b) in g.edges() {
                    h.add_edge(a, b);
                }
                h.add_edge(u, n);
                grow(h);
            }
        }
        level = next;
        e += 1;
    }
    out.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    out.into_iter().map(|t| t.3).collect()
}

/// Closed walks of length `k` in `h`, over all start vertices, that use every
/// edge of `h` at least once. Dynamic program over (vertex, covered edges).
pub fn covering_walks(h: &Graph, k: usize) -> u64 {
    let edges = h.edges();
    let m = edges.len();
    assert!(m <= 16, "covering-walk DP supports at most 16 edges");
    if k < m {
        return 0;
    }
    let n = h.n();
    let mut index = HashMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        index.insert((u, v), i);
        index.insert((v, u), i);
    }
    let full = (1usize << m) - 1;
    let mut total = 0;
    for s in 0..n {
        let mut cur = vec![0u64; n << m];
        cur[s << m] = 1;
        for _ in 0..k {
            let mut nxt = vec![0u64; n << m];
            for v in 0..n {
                for mask in 0..=full {
                    let c = cur[(v << m) | mask];
                    if c == 0 {
                        continue;
                    }
                    for w in h.neighbors(v) {
                        let bit = 1 << index[&(v, w)];
                        nxt[(w << m) | mask | bit] += c;
                    }
                }
            }
            cur = nxt;
        }
        total += cur[(s << m) | full];
    }
    total
}

/// Nonzero `(pattern, coefficient)` pairs for walk length `k`, in pattern order.
pub(crate) fn raw_terms(k: usize) -> Vec<(Graph, u64)> {
    connected_patterns(k)
        .into_iter()
        .filter_map(|h| {
            let c = covering_walks(&h, k);
            (c > 0).then_some((h, c))
        })
        .collect()
}

/// Derives the decomposition of `N_G(k)` into pattern counts from scratch.
pub fn derive_walk_identity(k: usize) -> Result<WalkIdentity, WalkError> {
    if k > MAX_WALK_LENGTH {
        return Err(WalkError::Capacity {
            requested: k,
            limit: MAX_WALK_LENGTH,
        });
    }
    let catalog = PatternCatalog::builtin();
    let terms = raw_terms(k)
        .into_iter()
        .map(|(h, coefficient)| {
            let graph6 = h.to_graph6();
            let name = catalog
                .name_of(&h)
                .map(str::to_string)
                .unwrap_or_else(|| format!("[{graph6}]"));
            WalkTerm {
                name,
                graph6,
                vertices: h.n(),
                edges: h.edge_count(),
                coefficient,
                pattern: h,
            }
        })
        .collect();
    Ok(WalkIdentity { k, terms })
}
