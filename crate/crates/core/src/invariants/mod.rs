//! Graph invariants read off characteristic polynomials, degree-moment
//! systems, Laplacian eigenvalue bounds and the subdivision comparison.
//!
//! Everything labelled "spectral" here works from polynomial coefficients
//! alone; the graph is consulted only by the cross-checks in the tests.

mod bounds;
mod census;
mod facts;

pub use bounds::{
    complement_laplacian, enclosure_tolerance, mu1_at_most, mu1_below, mu1_bounds_check,
    subdivision_check, Mu1Report, SubdivisionReport, SubdivisionVerdict,
};
pub use census::{linegraph_degree_census, LineGraphCounts};
pub use facts::{degree_recovery, laplacian_facts, power_sums, DegreeCensus, LaplacianFacts};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("inconsistent moment data: {0}")]
    Inconsistent(String),
    #[error("exceptional case: {0}")]
    ExceptionCase(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
