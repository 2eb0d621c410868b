use std::collections::HashSet;

use rayon::prelude::*;

use super::{canonical_form, Graph, GraphError};

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_GRAPH_CENSUS: usize = 9;

/// All graphs on exactly `n` vertices up to isomorphism, canonically labeled
/// and sorted by their graph6 certificate.
///
/// Built by vertex augmentation: every class on `n` vertices arises from some
/// class on `n - 1` vertices by adding a vertex with a chosen neighbourhood.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_GRAPH_CENSUS {
        return Err(GraphError::Capacity {
            requested: n,
            limit: MAX_GRAPH_CENSUS,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let extended: Vec<(Vec<u8>, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..1 << (k - 1)).map(move |mask| {
                    let mut h = Graph::empty(k);
                    for (u, v) in g.edges() {
                        h.add_edge(u, v);
                    }
                    for u in 0..k - 1 {
                        if mask >> u & 1 == 1 {
                            h.add_edge(u, k - 1);
                        }
                    }
                    let cf = canonical_form(&h);
                    let canon = h.permuted(&cf.labeling);
                    (cf.bytes, canon)
                })
            })
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<(Vec<u8>, Graph)> = extended
            .into_iter()
            .filter(|(b, _)| seen.insert(b.clone()))
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(enumerate_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // OEIS A000088 and A001349
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            let gs = enumerate_graphs(n).unwrap();
            assert_eq!(gs.len(), all[n], "n = {n}");
            assert_eq!(
                gs.iter().filter(|g| g.is_connected()).count(),
                connected[n],
                "n = {n}"
            );
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            enumerate_graphs(10),
            Err(GraphError::Capacity { .. })
        ));
    }
}
