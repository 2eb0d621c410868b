//! Exact spectral computations on small graphs: characteristic polynomials,
//! walk and subgraph counts, spectrum-determined invariants, closed-form
//! audits for the `T4(p,q,r)` tree family and exhaustive cospectrality search.

pub mod closed_forms;
pub mod ds;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod report;
pub mod walks;
