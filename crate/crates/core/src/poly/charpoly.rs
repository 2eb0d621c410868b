use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

impl MatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "laplacian" | "l" => Ok(MatrixKind::Laplacian),
            _ => Err(format!("unknown matrix kind {s:?}")),
        }
    }
}

/// `det(xI - M)` for `M = A(G)` or `M = D(G) - A(G)`.
///
/// Forests go through a leaf-to-root determinant recursion; other graphs use
/// the division-free Berkowitz algorithm.
pub fn charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    if g.is_forest() {
        return forest_charpoly(g, kind);
    }
    let m = match kind {
        MatrixKind::Adjacency => g.adjacency_matrix(),
        MatrixKind::Laplacian => g.laplacian_matrix(),
    };
    berkowitz(&m)
}

/// Characteristic polynomial `det(xI - M)` of a square integer matrix,
/// O(n^4) ring operations, no division.
pub fn berkowitz(m: &[Vec<i64>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let big = |v: i64| BigInt::from(v);
    // coefficients highest degree first
    let mut vect = vec![BigInt::one(), -big(m[0][0])];
    for r in 1..n {
        // Toeplitz column: 1, -a, -R C, -R S C, ..., -R S^(r-1) C
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-big(m[r][r]));
        let mut col: Vec<BigInt> = (0..r).map(|i| big(m[i][r])).collect();
        for k in 0..r {
            let dot: BigInt = (0..r)
                .filter(|&j| m[r][j] != 0)
                .map(|j| &col[j] * m[r][j])
                .sum();
            t.push(-dot);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| m[i][j] != 0)
                            .map(|j| &col[j] * m[i][j])
                            .sum()
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < t.len())
                    .map(|j| &t[i - j] * &vect[j])
                    .sum()
            })
            .collect();
        vect = next;
    }
    vect.reverse();
    IntPoly::new(vect)
}

/// For a tree rooted at `v`, `det` of `xI - M` restricted to the subtree
/// satisfies `D_v = (x - M_vv) prod D_c - sum_c E_c prod_{c' != c} D_c'`,
/// where `E_c` is the product of `D` over the children of `c`.
fn forest_charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    let n = g.n();
    let mut result = IntPoly::one();
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // BFS order, then process in reverse
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        let mut d: Vec<Option<IntPoly>> = vec![None; n];
        let mut e: Vec<Option<IntPoly>> = vec![None; n];
        for &v in order.iter().rev() {
            let kids: Vec<usize> = g.neighbors(v).filter(|&w| parent[w] == v).collect();
            let diag = match kind {
                MatrixKind::Adjacency => IntPoly::x(),
                MatrixKind::Laplacian => IntPoly::from_i64(&[-(g.degree(v) as i64), 1]),
            };
            let ds: Vec<&IntPoly> = kids.iter().map(|&c| d[c].as_ref().unwrap()).collect();
            // prefix[i] = prod ds[..i], suffix[i] = prod ds[i..]
            let mut prefix = vec![IntPoly::one()];
            for p in &ds {
                prefix.push(prefix.last().unwrap() * *p);
            }
            let mut suffix = vec![IntPoly::one(); ds.len() + 1];
            for i in (0..ds.len()).rev() {
                suffix[i] = &suffix[i + 1] * ds[i];
            }
            let all = prefix.last().unwrap().clone();
            let mut dv = &diag * &all;
            for (i, &c) in kids.iter().enumerate() {
                let others = &prefix[i] * &suffix[i + 1];
                dv = &dv - &(e[c].as_ref().unwrap() * &others);
            }
            d[v] = Some(dv);
            e[v] = Some(all);
        }
        result = &result * d[root].as_ref().unwrap();
    }
    result
}

/// Number of spanning trees via a fraction-free determinant of the reduced
/// Laplacian. Zero for disconnected graphs and for the empty graph.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let n = g.n();
    if n == 0 {
        return BigUint::zero();
    }
    let lap = g.laplacian_matrix();
    let mut a: Vec<Vec<BigInt>> = (1..n)
        .map(|i| (1..n).map(|j| BigInt::from(lap[i][j])).collect())
        .collect();
    bareiss_det(&mut a).magnitude().clone()
}

fn bareiss_det(a: &mut [Vec<BigInt>]) -> BigInt {
    let k = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..k {
        if a[i][i].is_zero() {
            let Some(r) = (i + 1..k).find(|&r| !a[r][i].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(i, r);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
                a[r][c] = v;
            }
        }
        prev = a[i][i].clone();
    }
    let det = if k == 0 {
        BigInt::one()
    } else {
        a[k - 1][k - 1].clone()
    };
    let det = sign * det;
    if det.is_negative() {
        -det
    } else {
        det
    }
}
