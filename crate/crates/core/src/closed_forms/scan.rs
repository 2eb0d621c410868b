use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::tables::{instantiate_table, TableName};
use super::verify::triples;
use super::ClosedFormError;

/// Largest `p + q + r` accepted by [`injectivity_scan`].
pub const INJECTIVITY_SUM_LIMIT: usize = 30;

#[derive(Debug, Clone, Serialize)]
pub struct InjectivityReport {
    pub table: TableName,
    pub sum_bound: usize,
    pub triples_checked: usize,
    /// Pairs of distinct triples with the same sum and equal instantiations.
    pub collisions: Vec<([usize; 3], [usize; 3])>,
}

/// Checks that `W`, `U` (over `2 <= p <= q <= r`) or `W1`, `U1` (over
/// `p = 1 < q <= r`) separate triples of equal sum.
pub fn injectivity_scan(
    table: TableName,
    sum_bound: usize,
) -> Result<InjectivityReport, ClosedFormError> {
    if sum_bound > INJECTIVITY_SUM_LIMIT {
        return Err(ClosedFormError::Domain(format!(
            "sum bound {sum_bound} exceeds {INJECTIVITY_SUM_LIMIT}"
        )));
    }
    let keep: fn(&[usize; 3]) -> bool = match table {
        TableName::W | TableName::U => |t| t[0] >= 2,
        TableName::W1 | TableName::U1 => |t| t[0] == 1 && t[1] >= 2,
        other => {
            return Err(ClosedFormError::Domain(format!(
                "{other} is not a parameter table"
            )))
        }
    };
    let grid: Vec<[usize; 3]> = triples(sum_bound).into_iter().filter(keep).collect();
    let polys = grid
        .par_iter()
        .map(|&[p, q, r]| instantiate_table(table, p + q + r + 7, p, q, r))
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = HashMap::new();
    let mut collisions = Vec::new();
    for (t, poly) in grid.iter().zip(polys) {
        let key = (t.iter().sum::<usize>(), poly);
        if let Some(prev) = seen.insert(key, *t) {
            collisions.push((prev, *t));
        }
    }
    Ok(InjectivityReport {
        table,
        sum_bound,
        triples_checked: grid.len(),
        collisions,
    })
}
