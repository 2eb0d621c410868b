use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::facts::{power_sums, DegreeCensus};
use super::InvariantError;
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::walks::closed_walks;

/// Adjacency-spectrum data of a candidate line graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphCounts {
    pub vertices: u64,
    pub edges: u64,
    #[serde(serialize_with = "crate::report::as_string")]
    pub closed_walks_4: BigInt,
}

impl LineGraphCounts {
    pub fn from_graph(l: &Graph) -> LineGraphCounts {
        LineGraphCounts {
            vertices: l.n() as u64,
            edges: l.edge_count() as u64,
            closed_walks_4: BigInt::from(closed_walks(l, 4)),
        }
    }

    /// Reads the counts from `det(xI - A)` through Newton's identities.
    pub fn from_adjacency_charpoly(p: &IntPoly) -> Result<LineGraphCounts, InvariantError> {
        let n = p
            .degree()
            .ok_or_else(|| InvariantError::Domain("zero polynomial".into()))?;
        if !p.is_monic() {
            return Err(InvariantError::Domain("not monic".into()));
        }
        let ps = power_sums(p, 4);
        if !ps[0].is_zero() {
            return Err(InvariantError::Domain("adjacency trace must vanish".into()));
        }
        let two_e = &ps[1];
        let edges = (two_e / 2u32)
            .to_u64()
            .filter(|e| BigInt::from(2 * e) == *two_e)
            .ok_or_else(|| {
                InvariantError::Domain(format!("p_2 = {two_e} is not twice an edge count"))
            })?;
        Ok(LineGraphCounts {
            vertices: n as u64,
            edges,
            closed_walks_4: ps[3].clone(),
        })
    }

    /// Number of pairs of adjacent edges, `sum C(d, 2)`.
    ///
    /// A closed 4-walk either retraces one edge, retraces a 2-path or goes
    /// around a 4-cycle: `N(4) = 2e + 4 * pairs + 8 * C4`. The count assumes
    /// no 4-cycles, which holds for line graphs of trees of maximum degree 3.
    pub fn adjacent_pairs(&self) -> Option<u64> {
        let rest = &self.closed_walks_4 - BigInt::from(2 * self.edges);
        let four = BigInt::from(4);
        if (&rest % &four).is_zero() {
            (rest / four).to_u64()
        } else {
            None
        }
    }
}

/// Every nonnegative integer `(y1, y2, y3, y4)` with
/// `y1 + y2 + y3 + y4 = n`, `y1 + 2y2 + 3y3 + 4y4 = 2e` and
/// `y2 + 3y3 + 6y4 = pairs`, ordered by `y4`.
pub fn linegraph_degree_census(counts: &LineGraphCounts) -> Vec<DegreeCensus> {
    let Some(pairs) = counts.adjacent_pairs() else {
        return Vec::new();
    };
    let a = counts.vertices as i128;
    let b = 2 * counts.edges as i128;
    let c = pairs as i128;
    let mut out = Vec::new();
    for y4 in 0.. {
        let y3 = c - b + a - 3 * y4;
        if y3 < 0 {
            break;
        }
        let y2 = b - a - 3 * y4 - 2 * y3;
        let y1 = a - y4 - y2 - y3;
        if y1 >= 0 && y2 >= 0 {
            out.push(DegreeCensus {
                counts: [y1 as u64, y2 as u64, y3 as u64, y4 as u64],
            });
        }
    }
    out
}
