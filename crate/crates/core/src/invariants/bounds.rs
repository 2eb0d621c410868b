use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::facts::laplacian_facts;
use super::InvariantError;
use crate::graph::{build_family, canonical_form, Family, Graph};
use crate::poly::rational_to_f64;
use crate::poly::{
    charpoly, largest_root_enclosure, roots_above, Bound, IntPoly, MatrixKind, SturmChain,
};

/// Width of every reported eigenvalue enclosure.
pub fn enclosure_tolerance() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact test that every root of `p` is at most `bound`.
pub fn mu1_at_most(p: &IntPoly, bound: &BigRational) -> bool {
    roots_above(p, bound) == 0
}

/// Exact test that every root of `p` is strictly below `bound`.
pub fn mu1_below(p: &IntPoly, bound: &BigRational) -> bool {
    mu1_at_most(p, bound) && p.sign_at(bound) != 0
}

#[derive(Debug, Clone, Serialize)]
pub struct Mu1Report {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// `max_degree + 1`
    pub lower: u64,
    /// Largest `(d_u (d_u + m_u) + d_v (d_v + m_v)) / (d_u + d_v)` over edges,
    /// `m_v` the average degree of the neighbours of `v`.
    #[serde(serialize_with = "crate::report::as_string")]
    pub upper: BigRational,
    #[serde(serialize_with = "crate::report::as_string")]
    pub mu1_lo: BigRational,
    #[serde(serialize_with = "crate::report::as_string")]
    pub mu1_hi: BigRational,
    pub mu1_approx: f64,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl Mu1Report {
    pub fn passed(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

/// Checks `max_degree + 1 <= mu1 <= upper` exactly; the enclosure is for display.
pub fn mu1_bounds_check(g: &Graph) -> Result<Mu1Report, InvariantError> {
    if g.edge_count() == 0 {
        return Err(InvariantError::Domain("graph has no edges".into()));
    }
    let deg = g.degrees();
    let nsum: Vec<usize> = (0..g.n())
        .map(|v| g.neighbors(v).map(|w| deg[w]).sum())
        .collect();
    let upper = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (du, dv) = (deg[u] as i64, deg[v] as i64);
            BigRational::new(
                BigInt::from(du * du + nsum[u] as i64 + dv * dv + nsum[v] as i64),
                BigInt::from(du + dv),
            )
        })
        .max()
        .expect("at least one edge");
    let p = charpoly(g, MatrixKind::Laplacian);
    let max_degree = g.max_degree();
    let lower = rat(max_degree as i64 + 1);
    let lower_holds = p.sign_at(&lower) == 0 || roots_above(&p, &lower) > 0;
    let upper_holds = mu1_at_most(&p, &upper);
    let (mu1_lo, mu1_hi) =
        largest_root_enclosure(&p, &enclosure_tolerance()).expect("Laplacian roots are real");
    Ok(Mu1Report {
        n: g.n(),
        m: g.edge_count(),
        max_degree,
        lower: max_degree as u64 + 1,
        upper,
        mu1_approx: rational_to_f64(&mu1_hi),
        mu1_lo,
        mu1_hi,
        lower_holds,
        upper_holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubdivisionVerdict {
    Decrease,
    Equal,
    Increase,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubdivisionReport {
    pub u: usize,
    pub v: usize,
    #[serde(serialize_with = "crate::report::as_string")]
    pub before_lo: BigRational,
    #[serde(serialize_with = "crate::report::as_string")]
    pub before_hi: BigRational,
    #[serde(serialize_with = "crate::report::as_string")]
    pub after_lo: BigRational,
    #[serde(serialize_with = "crate::report::as_string")]
    pub after_hi: BigRational,
    pub before_approx: f64,
    pub after_approx: f64,
    pub verdict: SubdivisionVerdict,
}

impl SubdivisionReport {
    pub fn non_increase(&self) -> bool {
        self.verdict != SubdivisionVerdict::Increase
    }
}

/// Walks from `start` away from `from` along degree-2 vertices. `Some(true)`
/// on reaching a vertex of degree at least 3, `Some(false)` at a leaf, `None`
/// when the walk closes up (the graph is a cycle).
fn path_end_is_branch(g: &Graph, from: usize, start: usize) -> Option<bool> {
    let (mut prev, mut cur) = (from, start);
    for _ in 0..=g.n() {
        match g.degree(cur) {
            2 => {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree 2");
                if next == start {
                    return None;
                }
                prev = cur;
                cur = next;
            }
            1 => return Some(false),
            _ => return Some(true),
        }
    }
    None
}

/// Compares the largest adjacency eigenvalue before and after subdividing
/// `uv`, exactly.
///
/// `uv` must lie on an internal path: following degree-2 vertices from either
/// end must reach a vertex of degree at least 3. Cycles are accepted as well.
pub fn subdivision_check(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<SubdivisionReport, InvariantError> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(InvariantError::Domain(format!("{u}{v} is not an edge")));
    }
    if !g.is_connected() {
        return Err(InvariantError::Hypothesis("graph is not connected".into()));
    }
    if g.n() >= 6 {
        let w = build_family(&Family::WGraph(g.n()))?;
        if canonical_form(&w).bytes == canonical_form(g).bytes {
            return Err(InvariantError::ExceptionCase(format!(
                "graph is isomorphic to W_{}",
                g.n()
            )));
        }
    }
    let internal = match (path_end_is_branch(g, v, u), path_end_is_branch(g, u, v)) {
        (None, _) | (_, None) => true,
        (Some(a), Some(b)) => a && b,
    };
    if !internal {
        return Err(InvariantError::Hypothesis(format!(
            "edge {u}{v} is not on an internal path"
        )));
    }
    let h = g.subdivide_edge(u, v)?;
    let p = charpoly(g, MatrixKind::Adjacency);
    let q = charpoly(&h, MatrixKind::Adjacency);
    let tol = enclosure_tolerance();
    let (before_lo, before_hi) = largest_root_enclosure(&p, &tol).expect("real spectrum");
    let (after_lo, after_hi) = largest_root_enclosure(&q, &tol).expect("real spectrum");
    let verdict = compare_largest_roots(&p, &q, before_lo.clone(), before_hi.clone());
    Ok(SubdivisionReport {
        u,
        v,
        before_approx: rational_to_f64(&before_hi),
        after_approx: rational_to_f64(&after_hi),
        before_lo,
        before_hi,
        after_lo,
        after_hi,
        verdict,
    })
}

/// Orders the largest real roots of `p` and `q`, given `(lo, hi]` holding the
/// largest root of `p`.
fn compare_largest_roots(
    p: &IntPoly,
    q: &IntPoly,
    mut lo: BigRational,
    mut hi: BigRational,
) -> SubdivisionVerdict {
    let cp = SturmChain::new(p);
    let cq = SturmChain::new(q);
    let cg = SturmChain::new(&p.gcd(q));
    let two = rat(2);
    loop {
        let (a, b) = (Bound::Finite(lo.clone()), Bound::Finite(hi.clone()));
        if cq.count(&b, &Bound::PosInf) > 0 {
            return SubdivisionVerdict::Increase;
        }
        let q_inside = cq.count(&a, &b);
        if q_inside == 0 {
            return SubdivisionVerdict::Decrease;
        }
        if q_inside == 1 && cp.count(&a, &b) == 1 && cg.count(&a, &b) > 0 {
            return SubdivisionVerdict::Equal;
        }
        let mid = (&lo + &hi) / &two;
        if cp.count(&Bound::Finite(mid.clone()), &b) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Laplacian polynomial of the complement: nonzero roots `mu` map to `n - mu`
/// and one zero root is kept. Works on coefficients only.
pub fn complement_laplacian(p: &IntPoly, n: usize) -> Result<IntPoly, InvariantError> {
    if p.degree() != Some(n) {
        return Err(InvariantError::Domain(format!(
            "expected a degree-{n} polynomial"
        )));
    }
    laplacian_facts(p)?;
    // p = x * r(x); complement polynomial is x * (-1)^(n-1) r(n - x)
    let r = IntPoly::new(p.coeffs()[1..].to_vec());
    let flipped = r.compose(&IntPoly::from_i64(&[n as i64, -1]));
    let signed = if (n - 1) % 2 == 1 { -&flipped } else { flipped };
    debug_assert!(!signed.is_zero());
    Ok(signed.shift(1))
}
