//! Closed-form polynomials for the `T4(p,q,r)` family and their exact audit
//! against directly computed characteristic polynomials.
//!
//! The coefficient tables are transcriptions kept in `tables.txt`; they are
//! claims under test, never used as ground truth.

mod formulas;
mod scan;
mod tables;
mod verify;

pub use formulas::{
    build_f_qr, build_f_qr_repaired, build_f_r, build_h, formula_line_t4_charpoly,
    formula_line_t4_charpoly_repaired, formula_t4_charpoly_cases,
    formula_t4_charpoly_cases_repaired,
};
pub use scan::{injectivity_scan, InjectivityReport, INJECTIVITY_SUM_LIMIT};
pub use tables::{
    instantiate_table, table, table_checksum, verify_table_checksum, Affine, CoefficientTable,
    TableName, TABLE_SHA256,
};
pub use verify::{
    audit_formula, formula_grid, identity_grid, triples, verify_identity, DiffEntry, Formula,
    FormulaVerdict, Identity, IdentityVerdict, Status,
};

use thiserror::Error;

use crate::graph::GraphError;
use crate::poly::PolyError;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown table {0:?}")]
    UnknownTable(String),
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("coverage gap: {0}")]
    CoverageGap(String),
    #[error("table data: {0}")]
    Table(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
