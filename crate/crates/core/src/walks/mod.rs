//! Closed walks, subgraph-copy counts and the walk decompositions that tie
//! them together.

mod catalog;
mod census;
mod identity;

pub use catalog::{named_pattern, PatternCatalog, PatternEntry};
pub use census::{verify_walk_identities, CensusReport, Violation};
pub use identity::{
    connected_patterns, covering_walks, derive_walk_identity, WalkIdentity, WalkTerm,
    MAX_WALK_LENGTH,
};

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::{bits, canonical_form, Graph, GraphError};

#[derive(Debug, Error)]
pub enum WalkError {
    #[error("walk length {requested} exceeds the supported bound {limit}")]
    Capacity { requested: usize, limit: usize },
    #[error("pattern catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `trace(A^k)`.
pub fn closed_walks(g: &Graph, k: usize) -> BigUint {
    let n = g.n();
    // trace(A^k) = sum_s <A^a e_s, A^b e_s> with a + b = k
    let (a, b) = (k / 2, k - k / 2);
    let step = |x: &[BigUint]| {
        let mut y = vec![BigUint::zero(); n];
        for (u, xu) in x.iter().enumerate().filter(|(_, xu)| !xu.is_zero()) {
            for w in g.neighbors(u) {
                y[w] += xu;
            }
        }
        y
    };
    let mut total = BigUint::zero();
    for s in 0..n {
        let mut x = vec![BigUint::zero(); n];
        x[s] = BigUint::from(1u32);
        let mut xa = x.clone();
        for i in 1..=b {
            x = step(&x);
            if i == a {
                xa = x.clone();
            }
        }
        for (p, q) in xa.iter().zip(&x) {
            total += p * q;
        }
    }
    total
}

/// Number of (not necessarily induced) subgraphs of `g` isomorphic to the
/// connected pattern `h`: injective homomorphisms divided by `|Aut(h)|`.
pub fn count_subgraph_copies(g: &Graph, h: &Graph) -> u64 {
    assert!(
        h.n() > 0 && h.is_connected(),
        "pattern must be connected and nonempty"
    );
    let aut = canonical_form(h).aut_count;
    let emb = count_embeddings(g, h);
    let aut: u64 = aut
        .try_into()
        .expect("pattern automorphism group fits in u64");
    debug_assert_eq!(emb % aut, 0);
    emb / aut
}

fn count_embeddings(g: &Graph, h: &Graph) -> u64 {
    if h.n() > g.n() {
        return 0;
    }
    // BFS order from a maximum-degree vertex so every later vertex has an
    // earlier neighbour
    let root = (0..h.n())
        .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut order = vec![root];
    let mut placed = vec![false; h.n()];
    placed[root] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for w in h.neighbors(u) {
            if !placed[w] {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; h.n()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut b: Vec<usize> = h
                .neighbors(v)
                .map(|w| pos[w])
                .filter(|&j| j < pos[v])
                .collect();
            b.sort_unstable();
            b
        })
        .collect();
    let need: Vec<usize> = order.iter().map(|&v| h.degree(v)).collect();

    struct Ctx<'a> {
        g: &'a Graph,
        back: &'a [Vec<usize>],
        need: &'a [usize],
        image: Vec<usize>,
        used: Vec<u64>,
    }
    fn rec(c: &mut Ctx, depth: usize) -> u64 {
        if depth == c.back.len() {
            return 1;
        }
        let mut cand: Vec<u64> = if c.back[depth].is_empty() {
            let mut all = vec![u64::MAX; c.g.words()];
            let n = c.g.n();
            if !n.is_multiple_of(64) {
                *all.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
            }
            all
        } else {
            c.g.row(c.image[c.back[depth][0]]).to_vec()
        };
        let back = c.back;
        for &j in back[depth].iter().skip(1) {
            for (a, b) in cand.iter_mut().zip(c.g.row(c.image[j])) {
                *a &= b;
            }
        }
        for (a, b) in cand.iter_mut().zip(&c.used) {
            *a &= !b;
        }
        let mut total = 0;
        let vs: Vec<usize> = bits(&cand).collect();
        for v in vs {
            if c.g.degree(v) < c.need[depth] {
                continue;
            }
            c.image[depth] = v;
            c.used[v / 64] |= 1 << (v % 64);
            total += rec(c, depth + 1);
            c.used[v / 64] &= !(1 << (v % 64));
        }
        total
    }
    let mut ctx = Ctx {
        g,
        back: &back,
        need: &need,
        image: vec![0; h.n()],
        used: vec![0; g.words()],
    };
    rec(&mut ctx, 0)
}
