use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{IntPoly, LaurentPoly, PolyError};
use crate::graph::{bits, Graph};

/// Path polynomial `p_r = x p_(r-1) - p_(r-2)` with `p_0 = 1`, `p_-1 = 0`,
/// `p_-2 = -1`. For `r >= 1` this is the adjacency polynomial of `P_r`.
pub fn path_poly(r: i64) -> Result<IntPoly, PolyError> {
    if r < -2 {
        return Err(PolyError::Domain(format!("p_r needs r >= -2, got {r}")));
    }
    let (mut prev, mut cur) = (IntPoly::from_i64(&[-1]), IntPoly::zero());
    for _ in -1..r {
        let next = &(&IntPoly::x() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(if r == -2 { prev } else { cur })
}

/// `pre_factor * p(x + 1/x)`.
pub fn to_laurent(p: &IntPoly, pre_factor: &LaurentPoly) -> LaurentPoly {
    let t = LaurentPoly::new(-1, vec![BigInt::one(), BigInt::from(0), BigInt::one()]);
    let inner = p.coeffs().iter().rev().fold(LaurentPoly::zero(), |acc, c| {
        &(&acc * &t) + &LaurentPoly::monomial(c.clone(), 0)
    });
    &inner * pre_factor
}

/// Adjacency polynomial through the vertex-deletion recurrence
/// `P(G) = x P(G-v) - sum_{u~v} P(G-u-v) - 2 sum_{Z in C(v)} P(G-V(Z))`,
/// applied recursively (always at the lowest remaining vertex below the top
/// level) with memoisation on the remaining vertex set.
pub fn deletion_charpoly(g: &Graph, v: usize) -> IntPoly {
    assert!(v < g.n(), "vertex {v} out of range");
    let mut all = vec![0u64; g.words()];
    for u in 0..g.n() {
        all[u / 64] |= 1 << (u % 64);
    }
    let mut memo = HashMap::new();
    expand(g, &all, v, &mut memo)
}

fn without(set: &[u64], vs: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut s = set.to_vec();
    for v in vs {
        s[v / 64] &= !(1 << (v % 64));
    }
    s
}

fn contains(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn solve(g: &Graph, set: &[u64], memo: &mut HashMap<Vec<u64>, IntPoly>) -> IntPoly {
    let Some(v) = bits(set).next() else {
        return IntPoly::one();
    };
    if let Some(p) = memo.get(set) {
        return p.clone();
    }
    let p = expand(g, set, v, memo);
    memo.insert(set.to_vec(), p.clone());
    p
}

fn expand(g: &Graph, set: &[u64], v: usize, memo: &mut HashMap<Vec<u64>, IntPoly>) -> IntPoly {
    let rest = without(set, [v]);
    let mut p = &IntPoly::x() * &solve(g, &rest, memo);
    let nbrs: Vec<usize> = g.neighbors(v).filter(|&u| contains(set, u)).collect();
    for &u in &nbrs {
        p = &p - &solve(g, &without(&rest, [u]), memo);
    }
    for cycle in cycles_through(g, set, v) {
        let q = solve(g, &without(set, cycle), memo);
        p = &p - &q.scale(&BigInt::from(2));
    }
    p
}

/// Vertex sets of the cycles through `v` inside `set`, each cycle once.
fn cycles_through(g: &Graph, set: &[u64], v: usize) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, set: &[u64], start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if !contains(set, w) {
                continue;
            }
            // closing edge; the direction test keeps one orientation
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w != start && !path.contains(&w) {
                path.push(w);
                dfs(g, set, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    dfs(g, set, v, &mut vec![v], &mut out);
    out
}
