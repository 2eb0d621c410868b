use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{closed_walks, derive_walk_identity, WalkError, WalkIdentity};
use crate::graph::{enumerate_graphs, GraphError, MAX_GRAPH_CENSUS};

/// Walk lengths covered by the census.
pub const CENSUS_LENGTHS: [usize; 5] = [2, 3, 4, 5, 7];

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub census_max_n: usize,
    pub graphs_checked: usize,
    pub checks: usize,
    pub identities: Vec<WalkIdentity>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub k: usize,
    #[serde(serialize_with = "crate::report::as_string")]
    pub closed_walks: BigUint,
    #[serde(serialize_with = "crate::report::as_string")]
    pub pattern_sum: BigUint,
}

/// Checks every derived identity on every graph with at most
/// `census_max_n` vertices.
pub fn verify_walk_identities(census_max_n: usize) -> Result<CensusReport, WalkError> {
    let limit = MAX_GRAPH_CENSUS.min(8);
    if census_max_n > limit {
        return Err(GraphError::Capacity {
            requested: census_max_n,
            limit,
        }
        .into());
    }
    let identities: Vec<WalkIdentity> = CENSUS_LENGTHS
        .iter()
        .map(|&k| derive_walk_identity(k))
        .collect::<Result<_, _>>()?;
    let mut graphs = Vec::new();
    for n in 1..=census_max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    let violations: Vec<Violation> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            identities.iter().filter_map(move |id| {
                let lhs = closed_walks(g, id.k);
                let rhs = id.evaluate(g);
                (lhs != rhs).then(|| Violation {
                    graph6: g.to_graph6(),
                    k: id.k,
                    closed_walks: lhs,
                    pattern_sum: rhs,
                })
            })
        })
        .collect();
    Ok(CensusReport {
        census_max_n,
        graphs_checked: graphs.len(),
        checks: graphs.len() * identities.len(),
        identities,
        violations,
    })
}
