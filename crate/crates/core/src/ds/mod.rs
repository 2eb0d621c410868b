//! Exact cospectrality: spectrum keys, a persistent key cache, exhaustive
//! mate search over trees and forests, and the scans over the `T4` family.

mod cache;
mod key;
mod scan;
mod search;

pub use cache::SpectrumCache;
pub use key::{spectrum_key, SpectrumKey};
pub use scan::{
    family_collision_scan, smallest_cospectral_trees, verify_line_correspondence,
    CorrespondenceReport, CospectralClass, FamilyScanReport, SubfamilySeparation, FAMILY_SUM_LIMIT,
};
pub use search::{
    cospectral_mate_search, ds_check_centipede, ds_check_t4, enumerate_forests, DsT4Report,
    MateReport, SearchSpace, TripleResult, FOREST_LIMIT,
};

use thiserror::Error;

use crate::graph::GraphError;
use crate::invariants::InvariantError;

#[derive(Debug, Error)]
pub enum DsError {
    #[error("capacity: {0}")]
    Capacity(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
