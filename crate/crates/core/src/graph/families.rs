use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};
use crate::walks::{count_subgraph_copies, named_pattern};

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Spider with legs of `p <= q <= r` vertices whose tips carry two leaves each.
    T4 {
        p: usize,
        q: usize,
        r: usize,
    },
    /// `P_k`, `k` vertices.
    Path(usize),
    /// `C_k`, `k >= 3`.
    Cycle(usize),
    /// `K_{1,k}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// Spine `P_k` with one pendant vertex on each of its `k - 2` inner vertices.
    Centipede(usize),
    /// `W_n`: `P_{n-2}` plus pendant edges at its 2nd and (n-3)th vertices.
    WGraph(usize),
    Complete(usize),
}

/// The three subfamilies the walk-count arguments separate, plus `T4(1,1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum T4Subfamily {
    /// `2 <= p`
    General,
    /// `1 = p < q`
    OneUnitLeg,
    /// `1 = p = q < r`
    TwoUnitLegs,
    /// `p = q = r = 1`
    ThreeUnitLegs,
}

impl T4Subfamily {
    pub fn of(p: usize, q: usize, r: usize) -> T4Subfamily {
        match (p, q, r) {
            (1, 1, 1) => T4Subfamily::ThreeUnitLegs,
            (1, 1, _) => T4Subfamily::TwoUnitLegs,
            (1, _, _) => T4Subfamily::OneUnitLeg,
            _ => T4Subfamily::General,
        }
    }

    pub fn unit_legs(self) -> usize {
        match self {
            T4Subfamily::General => 0,
            T4Subfamily::OneUnitLeg => 1,
            T4Subfamily::TwoUnitLegs => 2,
            T4Subfamily::ThreeUnitLegs => 3,
        }
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg()))
    }
}

fn path_edges(start: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..k).map(move |i| (start + i - 1, start + i))
}

pub fn build_family(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::T4 { p, q, r } => {
            if !(1 <= p && p <= q && q <= r) {
                return Err(GraphError::ParameterOrder(format!(
                    "T4 needs 1 <= p <= q <= r, got ({p},{q},{r})"
                )));
            }
            let g = spider(&[p, q, r])?;
            validate_t4_structure(&g, p, q, r)?;
            Ok(g)
        }
        Family::Path(k) => {
            need(k >= 1, || format!("path needs k >= 1, got {k}"))?;
            let mut g = Graph::try_empty(k)?;
            for (u, v) in path_edges(0, k) {
                g.add_edge(u, v);
            }
            Ok(g)
        }
        Family::Cycle(k) => {
            need(k >= 3, || format!("cycle needs k >= 3, got {k}"))?;
            let mut g = build_family(&Family::Path(k))?;
            g.add_edge(k - 1, 0);
            Ok(g)
        }
        Family::Star(k) => build_family(&Family::CompleteBipartite(1, k)),
        Family::CompleteBipartite(a, b) => {
            need(a >= 1 && b >= 1, || {
                format!("K_{{{a},{b}}} needs a, b >= 1")
            })?;
            let mut g = Graph::try_empty(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        Family::Centipede(k) => {
            need(k >= 2, || format!("centipede needs spine k >= 2, got {k}"))?;
            let mut g = Graph::try_empty(2 * k - 2)?;
            for (u, v) in path_edges(0, k) {
                g.add_edge(u, v);
            }
            for (i, v) in (1..k - 1).enumerate() {
                g.add_edge(v, k + i);
            }
            Ok(g)
        }
        Family::WGraph(n) => {
            need(n >= 6, || format!("W_n needs n >= 6, got {n}"))?;
            let spine = n - 2;
            let mut g = Graph::try_empty(n)?;
            for (u, v) in path_edges(0, spine) {
                g.add_edge(u, v);
            }
            // spine vertices 2 and n-3 in 1-based numbering
            g.add_edge(1, spine);
            g.add_edge(spine - 2, spine + 1);
            Ok(g)
        }
        Family::Complete(k) => {
            need(k >= 1, || format!("K_k needs k >= 1, got {k}"))?;
            let mut g = Graph::try_empty(k)?;
            for u in 0..k {
                for v in u + 1..k {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
    }
}

/// Center 0; each leg is a path hung from the center whose last vertex gets
/// two extra leaves.
fn spider(legs: &[usize]) -> Result<Graph, GraphError> {
    let n = 1 + legs.iter().map(|a| a + 2).sum::<usize>();
    let mut g = Graph::try_empty(n)?;
    let mut next = 1;
    for &a in legs {
        let mut prev = 0;
        for _ in 0..a {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, next);
        g.add_edge(prev, next + 1);
        next += 2;
    }
    Ok(g)
}

/// Checks a candidate `T4(p,q,r)` against four independent constraints:
/// vertex count, degree multiset, line-graph degree census and the number of
/// triangle-with-pendant copies in the line graph.
pub fn validate_t4_structure(g: &Graph, p: usize, q: usize, r: usize) -> Result<(), GraphError> {
    let fail = |what: String| Err(GraphError::StructuralHypothesis(what));
    let n = p + q + r + 7;
    if g.n() != n {
        return fail(format!("expected {n} vertices, found {}", g.n()));
    }
    let mut deg = g.degrees();
    deg.sort_unstable();
    let ones = deg.iter().filter(|&&d| d == 1).count();
    let threes = deg.iter().filter(|&&d| d == 3).count();
    let twos = deg.iter().filter(|&&d| d == 2).count();
    if ones != 6 || threes != 4 || twos != n - 10 {
        return fail(format!("degree multiset {deg:?}"));
    }
    if !g.is_tree() {
        return fail("not a tree".into());
    }
    let sub = T4Subfamily::of(p, q, r);
    let l = g.line_graph();
    let ldeg = l.degrees();
    let fours = ldeg.iter().filter(|&&d| d == 4).count();
    let l_threes = ldeg.iter().filter(|&&d| d == 3).count();
    let expected_max = if sub.unit_legs() == 0 { 3 } else { 4 };
    if l.n() != n - 1 || l.max_degree() != expected_max || fours != sub.unit_legs() {
        return fail(format!(
            "line graph census: n={}, max degree {}, {} vertices of degree 4",
            l.n(),
            l.max_degree(),
            fours
        ));
    }
    if sub == T4Subfamily::General && l_threes != 6 {
        return fail(format!(
            "line graph has {l_threes} vertices of degree 3, expected 6"
        ));
    }
    let g1 = named_pattern("G1").expect("G1 is a built-in pattern");
    let copies = count_subgraph_copies(&l, &g1);
    let expected = 6 + 2 * sub.unit_legs() as u64;
    if copies != expected {
        return fail(format!(
            "line graph has {copies} G1 copies, expected {expected}"
        ));
    }
    Ok(())
}
