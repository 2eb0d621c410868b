use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::key::{spectrum_key, SpectrumKey};
use super::DsError;
use crate::graph::{
    build_family, canonical_form, enumerate_trees, free_tree_count, Family, Graph,
    DEFAULT_TREE_LIMIT,
};
use crate::invariants::laplacian_facts;
use crate::poly::MatrixKind;

/// Largest vertex count for forest enumeration.
pub const FOREST_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchSpace {
    TreesSameN,
    ForestsSameNm,
}

impl SearchSpace {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchSpace::TreesSameN => "trees_same_n",
            SearchSpace::ForestsSameNm => "forests_same_nm",
        }
    }
}

impl fmt::Display for SearchSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchSpace {
    type Err = String;
    fn from_str(s: &str) -> Result<SearchSpace, String> {
        match s {
            "trees" | "trees_same_n" => Ok(SearchSpace::TreesSameN),
            "forests" | "forests_same_nm" => Ok(SearchSpace::ForestsSameNm),
            _ => Err(format!("unknown search space {s:?}")),
        }
    }
}

fn all_trees(n: usize) -> Result<Vec<Graph>, DsError> {
    Ok(enumerate_trees(n)?.collect())
}

/// Non-increasing partitions of `n` into exactly `k` positive parts.
fn partitions(n: usize, k: usize, max: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        if first * k < n {
            break;
        }
        for mut rest in partitions(n - first, k - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Multisets of size `k` drawn from `0..len`, as non-decreasing index lists.
fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(len: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..len {
            cur.push(i);
            go(len, k, i, cur, out);
            cur.pop();
        }
    }
    go(len, k, 0, &mut cur, &mut out);
    out
}

/// Every forest on `n` vertices with `m` edges, one per isomorphism class.
pub fn enumerate_forests(n: usize, m: usize) -> Result<Vec<Graph>, DsError> {
    if n > FOREST_LIMIT {
        return Err(DsError::Capacity(format!(
            "forests need n <= {FOREST_LIMIT}, got {n}"
        )));
    }
    if n == 0 || m >= n {
        return Ok(if n == 0 && m == 0 {
            vec![Graph::empty(0)]
        } else {
            Vec::new()
        });
    }
    let components = n - m;
    let mut trees_of: HashMap<usize, Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for parts in partitions(n, components, n) {
        // group equal part sizes; each group is a multiset of trees of that size
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &s in &parts {
            match groups.last_mut() {
                Some((size, k)) if *size == s => *k += 1,
                _ => groups.push((s, 1)),
            }
        }
        let mut partial = vec![Graph::empty(0)];
        for (size, k) in groups {
            if let Entry::Vacant(slot) = trees_of.entry(size) {
                slot.insert(all_trees(size)?);
            }
            let trees = &trees_of[&size];
            let choices = multisets(trees.len(), k);
            let mut next = Vec::with_capacity(partial.len() * choices.len());
            for g in &partial {
                for c in &choices {
                    let mut h = g.clone();
                    for &i in c {
                        h = h.disjoint_union(&trees[i]);
                    }
                    next.push(h);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    Ok(out)
}

fn candidates(g: &Graph, kind: MatrixKind, space: SearchSpace) -> Result<Vec<Graph>, DsError> {
    match space {
        SearchSpace::TreesSameN => {
            if kind == MatrixKind::Laplacian {
                let facts = laplacian_facts(&spectrum_key(g, kind).poly())?;
                if facts.components != 1 || facts.m + 1 != facts.n {
                    return Err(DsError::Hypothesis(
                        "the Laplacian spectrum does not certify a tree, so mates need not be trees"
                            .into(),
                    ));
                }
            }
            if g.n() > DEFAULT_TREE_LIMIT {
                return Err(DsError::Capacity(format!(
                    "trees need n <= {DEFAULT_TREE_LIMIT}, got {}",
                    g.n()
                )));
            }
            all_trees(g.n())
        }
        SearchSpace::ForestsSameNm => enumerate_forests(g.n(), g.edge_count()),
    }
}

/// Graphs in `space` cospectral with `g` but not isomorphic to it.
pub fn cospectral_mate_search(
    g: &Graph,
    kind: MatrixKind,
    space: SearchSpace,
) -> Result<Vec<Graph>, DsError> {
    let target = spectrum_key(g, kind);
    let cert = canonical_form(g).bytes;
    Ok(candidates(g, kind, space)?
        .into_par_iter()
        .filter(|h| spectrum_key(h, kind) == target && canonical_form(h).bytes != cert)
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct MateReport {
    pub graph6: String,
    pub n: usize,
    pub kind: MatrixKind,
    pub space: SearchSpace,
    pub candidates_checked: usize,
    pub mates: Vec<String>,
}

/// Laplacian mates among trees of the centipede on `n` vertices (`n` even).
pub fn ds_check_centipede(n: usize) -> Result<MateReport, DsError> {
    if n < 4 || n % 2 == 1 {
        return Err(DsError::Hypothesis(format!(
            "centipedes have an even number >= 4 of vertices, got {n}"
        )));
    }
    let g = build_family(&Family::Centipede(n / 2 + 1))?;
    let mates = cospectral_mate_search(&g, MatrixKind::Laplacian, SearchSpace::TreesSameN)?;
    Ok(MateReport {
        graph6: g.to_graph6(),
        n,
        kind: MatrixKind::Laplacian,
        space: SearchSpace::TreesSameN,
        candidates_checked: free_tree_count(n).unwrap_or(0) as usize,
        mates: mates.iter().map(Graph::to_graph6).collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleResult {
    pub params: [usize; 3],
    /// The spectrum itself shows `m = n - 1` and one component.
    pub tree_certified: bool,
    pub mates: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DsT4Report {
    pub n: usize,
    pub trees_checked: usize,
    pub expected_trees: Option<u64>,
    pub triples: Vec<TripleResult>,
    /// At `n = 10`: every tree with degree multiset `{3^4, 1^6}`, labelled.
    pub degree_multiset_trees: Option<Vec<(String, String)>>,
}

impl DsT4Report {
    pub fn passed(&self) -> bool {
        Some(self.trees_checked as u64) == self.expected_trees
            && self
                .triples
                .iter()
                .all(|t| t.tree_certified && t.mates.is_empty())
    }

    pub fn mate_count(&self) -> usize {
        self.triples.iter().map(|t| t.mates.len()).sum()
    }
}

/// Searches every tree on `n` vertices for Laplacian mates of each
/// `T4(p,q,r)` with `p + q + r + 7 = n`.
pub fn ds_check_t4(n: usize) -> Result<DsT4Report, DsError> {
    if n < 10 {
        return Err(DsError::Hypothesis(format!(
            "T4 trees have n >= 10, got {n}"
        )));
    }
    if n > DEFAULT_TREE_LIMIT {
        return Err(DsError::Capacity(format!(
            "trees need n <= {DEFAULT_TREE_LIMIT}, got {n}"
        )));
    }
    let trees = all_trees(n)?;
    let keys: Vec<SpectrumKey> = trees
        .par_iter()
        .map(|t| spectrum_key(t, MatrixKind::Laplacian))
        .collect();
    let mut classes: HashMap<&SpectrumKey, Vec<usize>> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        classes.entry(k).or_default().push(i);
    }
    let s = n - 7;
    let mut triples = Vec::new();
    for p in 1..=s / 3 {
        for q in p..=(s - p) / 2 {
            let r = s - p - q;
            let g = build_family(&Family::T4 { p, q, r })?;
            let key = spectrum_key(&g, MatrixKind::Laplacian);
            let facts = laplacian_facts(&key.poly())?;
            let cert = canonical_form(&g).bytes;
            let members = classes.get(&key).cloned().unwrap_or_default();
            let found_self = members
                .iter()
                .any(|&i| canonical_form(&trees[i]).bytes == cert);
            if !found_self {
                return Err(DsError::Hypothesis(format!(
                    "T4({p},{q},{r}) missing from the tree enumeration"
                )));
            }
            let mates = members
                .iter()
                .filter(|&&i| canonical_form(&trees[i]).bytes != cert)
                .map(|&i| trees[i].to_graph6())
                .collect();
            triples.push(TripleResult {
                params: [p, q, r],
                tree_certified: facts.components == 1 && facts.m + 1 == n,
                mates,
            });
        }
    }
    let degree_multiset_trees = (n == 10).then(|| degree_multiset_listing(&trees));
    Ok(DsT4Report {
        n,
        trees_checked: trees.len(),
        expected_trees: free_tree_count(n),
        triples,
        degree_multiset_trees,
    })
}

fn degree_multiset_listing(trees: &[Graph]) -> Vec<(String, String)> {
    let want = [3, 3, 3, 3, 1, 1, 1, 1, 1, 1];
    let t4 = canonical_form(&build_family(&Family::T4 { p: 1, q: 1, r: 1 }).unwrap()).bytes;
    let centipede = canonical_form(&build_family(&Family::Centipede(6)).unwrap()).bytes;
    trees
        .iter()
        .filter(|t| {
            let mut d = t.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d == want
        })
        .map(|t| {
            let c = canonical_form(t).bytes;
            let label = if c == t4 {
                "T4(1,1,1)"
            } else if c == centipede {
                "centipede"
            } else {
                "other"
            };
            (t.to_graph6(), label.to_string())
        })
        .collect()
}
