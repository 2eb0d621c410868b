use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::InvariantError;
use crate::poly::IntPoly;

/// What a Laplacian characteristic polynomial says about its graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaplacianFacts {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    #[serde(serialize_with = "crate::report::as_string")]
    pub spanning_trees: BigUint,
    pub sum_deg_sq: u64,
    /// Only present when the data certify a forest (`m + components = n`),
    /// hence a bipartite graph.
    pub sum_deg_cube: Option<u64>,
}

/// Number of vertices of degree 1, 2, 3 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeCensus {
    pub counts: [u64; 4],
}

impl DegreeCensus {
    pub fn of_degrees(degrees: &[usize]) -> Option<DegreeCensus> {
        let mut counts = [0u64; 4];
        for &d in degrees {
            if !(1..=4).contains(&d) {
                return None;
            }
            counts[d - 1] += 1;
        }
        Some(DegreeCensus { counts })
    }
}

/// Power sums `p_1..=p_k` of the roots of a monic polynomial (Newton).
pub fn power_sums(p: &IntPoly, k: usize) -> Vec<BigInt> {
    let n = p.degree().unwrap_or(0);
    assert!(p.is_monic(), "power sums need a monic polynomial");
    // e_j = (-1)^j c_(n-j)
    let e = |j: usize| -> BigInt {
        if j > n {
            return BigInt::zero();
        }
        let c = p.coeff(n - j);
        if j % 2 == 1 {
            -c
        } else {
            c
        }
    };
    let mut ps: Vec<BigInt> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut s = BigInt::zero();
        for i in 1..j {
            let t = e(i) * &ps[j - i - 1];
            if i % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        let last = e(j) * BigInt::from(j);
        if j % 2 == 1 {
            s += last;
        } else {
            s -= last;
        }
        ps.push(s);
    }
    ps
}

fn to_u64(x: &BigInt, what: &str) -> Result<u64, InvariantError> {
    x.to_u64().ok_or_else(|| {
        InvariantError::Domain(format!("{what} = {x} is not a small nonnegative integer"))
    })
}

/// Reads vertex, edge and component counts, the spanning-tree count and the
/// degree moments from `det(xI - L)`.
pub fn laplacian_facts(p: &IntPoly) -> Result<LaplacianFacts, InvariantError> {
    let n = p
        .degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| InvariantError::Domain("need a polynomial of degree >= 1".into()))?;
    if !p.is_monic() {
        return Err(InvariantError::Domain("not monic".into()));
    }
    if !p.coeff(0).is_zero() {
        return Err(InvariantError::Domain(
            "nonzero constant term: not a Laplacian polynomial".into(),
        ));
    }
    for (i, c) in p.coeffs().iter().enumerate() {
        let expect_negative = (n - i) % 2 == 1;
        if !c.is_zero() && c.is_negative() != expect_negative {
            return Err(InvariantError::Domain(format!(
                "coefficient of x^{i} has the wrong sign for a Laplacian polynomial"
            )));
        }
    }
    let components = p.zero_root_multiplicity();
    let ps = power_sums(p, 3);
    if ps[0].is_odd() {
        return Err(InvariantError::Domain("odd trace".into()));
    }
    let m = to_u64(&(&ps[0] / 2), "m")? as usize;
    let sum_deg_sq = to_u64(&(&ps[1] - &ps[0]), "sum of squared degrees")?;
    let spanning_trees = if components == 1 {
        let c1 = p.coeff(1).abs();
        let nn = BigInt::from(n);
        if !(&c1 % &nn).is_zero() {
            return Err(InvariantError::Domain(
                "x coefficient not divisible by n".into(),
            ));
        }
        (c1 / nn).magnitude().clone()
    } else {
        BigUint::zero()
    };
    let sum_deg_cube = if m + components == n {
        // trace L^3 = sum d^3 + 3 sum d^2 - 6 * triangles, no triangles here
        Some(to_u64(
            &(&ps[2] - BigInt::from(3) * BigInt::from(sum_deg_sq)),
            "sum of cubed degrees",
        )?)
    } else {
        None
    };
    Ok(LaplacianFacts {
        n,
        m,
        components,
        spanning_trees,
        sum_deg_sq,
        sum_deg_cube,
    })
}

/// Solves the moment system for the degree counts of a tree with maximum
/// degree at most 4:
/// `sum x_i = n`, `sum i x_i = 2m`, `sum i^2 x_i = S2`, `sum i^3 x_i = S3`.
///
/// `mu1_at_most_5` must come from an exact certificate (see
/// [`super::mu1_at_most`]); the degree cap rests on it.
pub fn degree_recovery(
    facts: &LaplacianFacts,
    mu1_at_most_5: bool,
) -> Result<DegreeCensus, InvariantError> {
    if !mu1_at_most_5 {
        return Err(InvariantError::Hypothesis(
            "largest Laplacian eigenvalue exceeds 5".into(),
        ));
    }
    if facts.components != 1 || facts.m + 1 != facts.n {
        return Err(InvariantError::Hypothesis("input is not a tree".into()));
    }
    let s3 = facts
        .sum_deg_cube
        .ok_or_else(|| InvariantError::Hypothesis("no bipartiteness certificate".into()))?;
    let rhs = [facts.n as u64, 2 * facts.m as u64, facts.sum_deg_sq, s3];
    let mut a: Vec<Vec<BigRational>> = (0..4)
        .map(|row| {
            let mut r: Vec<BigRational> = (1..=4i64)
                .map(|d| BigRational::from_integer(BigInt::from(d.pow(row as u32))))
                .collect();
            r.push(BigRational::from_integer(BigInt::from(rhs[row])));
            r
        })
        .collect();
    // Gauss-Jordan; the Vandermonde matrix is nonsingular
    for col in 0..4 {
        let piv = (col..4).find(|&r| !a[r][col].is_zero()).unwrap();
        a.swap(col, piv);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..4 {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= y * &f;
                }
            }
        }
    }
    let mut counts = [0u64; 4];
    for (i, row) in a.iter().enumerate() {
        let x = &row[4];
        if !x.is_integer() || x.is_negative() {
            return Err(InvariantError::Inconsistent(format!(
                "x_{} = {x} is not a nonnegative integer",
                i + 1
            )));
        }
        counts[i] = x.to_integer().to_u64().unwrap();
    }
    Ok(DegreeCensus { counts })
}
