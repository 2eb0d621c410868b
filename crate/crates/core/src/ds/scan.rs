use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::key::{spectrum_key, SpectrumKey};
use super::DsError;
use crate::closed_forms::triples;
use crate::graph::{build_family, enumerate_trees, Family, Graph, T4Subfamily, DEFAULT_TREE_LIMIT};
use crate::poly::{charpoly, IntPoly, MatrixKind};
use crate::walks::{count_subgraph_copies, named_pattern};

/// Largest `p + q + r` for [`family_collision_scan`].
pub const FAMILY_SUM_LIMIT: usize = 30;

#[derive(Debug, Clone, Serialize)]
pub struct SubfamilySeparation {
    pub subfamily: T4Subfamily,
    pub members: usize,
    /// Distinct numbers of `G1` copies in the line graphs of the members.
    pub g1_counts: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyScanReport {
    pub kind: MatrixKind,
    pub sum_bound: usize,
    pub candidates_checked: usize,
    pub collisions: Vec<([usize; 3], [usize; 3])>,
    pub separation: Vec<SubfamilySeparation>,
}

impl FamilyScanReport {
    /// No collisions, and each subfamily has one `G1` count differing from
    /// the others.
    pub fn passed(&self) -> bool {
        let counts: Vec<&Vec<u64>> = self.separation.iter().map(|s| &s.g1_counts).collect();
        let distinct: BTreeSet<&Vec<u64>> = counts.iter().copied().collect();
        self.collisions.is_empty()
            && counts.iter().all(|c| c.len() == 1)
            && distinct.len() == counts.len()
    }
}

/// Spectrum keys of every `T4(p,q,r)` with `p + q + r <= sum_bound`, checked
/// pairwise distinct, plus the `G1` counts of the line graphs per subfamily.
pub fn family_collision_scan(
    kind: MatrixKind,
    sum_bound: usize,
) -> Result<FamilyScanReport, DsError> {
    if sum_bound > FAMILY_SUM_LIMIT {
        return Err(DsError::Capacity(format!(
            "sum bound {sum_bound} exceeds {FAMILY_SUM_LIMIT}"
        )));
    }
    let g1 = named_pattern("G1").expect("built-in pattern");
    let grid = triples(sum_bound);
    let rows = grid
        .par_iter()
        .map(|&[p, q, r]| -> Result<(SpectrumKey, u64), DsError> {
            let g = build_family(&Family::T4 { p, q, r })?;
            Ok((
                spectrum_key(&g, kind),
                count_subgraph_copies(&g.line_graph(), &g1),
            ))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen: HashMap<&SpectrumKey, [usize; 3]> = HashMap::new();
    let mut collisions = Vec::new();
    let mut sep: BTreeMap<T4Subfamily, (usize, BTreeSet<u64>)> = BTreeMap::new();
    for (t, (key, g1_count)) in grid.iter().zip(&rows) {
        if let Some(prev) = seen.insert(key, *t) {
            collisions.push((prev, *t));
        }
        let e = sep.entry(T4Subfamily::of(t[0], t[1], t[2])).or_default();
        e.0 += 1;
        e.1.insert(*g1_count);
    }
    Ok(FamilyScanReport {
        kind,
        sum_bound,
        candidates_checked: grid.len(),
        collisions,
        separation: sep
            .into_iter()
            .map(|(subfamily, (members, counts))| SubfamilySeparation {
                subfamily,
                members,
                g1_counts: counts.into_iter().collect(),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub max_n: usize,
    pub trees_checked: usize,
    /// Trees where `det(lambda I - A(L(T)))` differs from `mu(T)(lambda + 2) / (lambda + 2)`.
    pub shift_violations: Vec<String>,
    /// Same-size tree pairs where exactly one of the two keys agrees.
    pub pair_violations: Vec<(String, String)>,
    pub cospectral_laplacian_pairs: usize,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.shift_violations.is_empty() && self.pair_violations.is_empty()
    }
}

/// Checks on all trees with at most `max_n` vertices that the line graph's
/// adjacency polynomial is the shifted Laplacian polynomial, and that the two
/// cospectrality relations agree pairwise.
pub fn verify_line_correspondence(max_n: usize) -> Result<CorrespondenceReport, DsError> {
    if max_n > 10 {
        return Err(DsError::Capacity(format!(
            "line correspondence needs max_n <= 10, got {max_n}"
        )));
    }
    let shift = IntPoly::from_i64(&[2, 1]);
    let mut report = CorrespondenceReport {
        max_n,
        trees_checked: 0,
        shift_violations: Vec::new(),
        pair_violations: Vec::new(),
        cospectral_laplacian_pairs: 0,
    };
    for n in 1..=max_n {
        let trees: Vec<Graph> = enumerate_trees(n)?.collect();
        let rows: Vec<(SpectrumKey, SpectrumKey, bool)> = trees
            .par_iter()
            .map(|t| {
                let lap = charpoly(t, MatrixKind::Laplacian);
                let line = charpoly(&t.line_graph(), MatrixKind::Adjacency);
                let reduced = IntPoly::new(lap.coeffs()[1..].to_vec());
                let shift_ok = reduced.compose(&shift) == line;
                (
                    spectrum_key(t, MatrixKind::Laplacian),
                    SpectrumKey {
                        kind: MatrixKind::Adjacency,
                        coeffs: line.coeffs().to_vec(),
                    },
                    shift_ok,
                )
            })
            .collect();
        for (i, (li, ai, ok)) in rows.iter().enumerate() {
            if !ok {
                report.shift_violations.push(trees[i].to_graph6());
            }
            for (j, (lj, aj, _)) in rows.iter().enumerate().skip(i + 1) {
                let lap_eq = li == lj;
                if lap_eq {
                    report.cospectral_laplacian_pairs += 1;
                }
                if lap_eq != (ai == aj) {
                    report
                        .pair_violations
                        .push((trees[i].to_graph6(), trees[j].to_graph6()));
                }
            }
        }
        report.trees_checked += trees.len();
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct CospectralClass {
    pub n: usize,
    pub kind: MatrixKind,
    /// Each class lists the graph6 of two or more cospectral trees.
    pub classes: Vec<Vec<String>>,
}

/// The smallest `n <= max_n` with cospectral non-isomorphic trees.
pub fn smallest_cospectral_trees(
    kind: MatrixKind,
    max_n: usize,
) -> Result<Option<CospectralClass>, DsError> {
    for n in 1..=max_n.min(DEFAULT_TREE_LIMIT) {
        let trees: Vec<Graph> = enumerate_trees(n)?.collect();
        let keys: Vec<SpectrumKey> = trees.par_iter().map(|t| spectrum_key(t, kind)).collect();
        let mut groups: BTreeMap<Vec<String>, Vec<String>> = BTreeMap::new();
        for (t, k) in trees.iter().zip(&keys) {
            let label: Vec<String> = k.coeffs.iter().map(|c| c.to_string()).collect();
            groups.entry(label).or_default().push(t.to_graph6());
        }
        let classes: Vec<Vec<String>> = groups.into_values().filter(|g| g.len() > 1).collect();
        if !classes.is_empty() {
            return Ok(Some(CospectralClass { n, kind, classes }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correspondence_small() {
        let r = verify_line_correspondence(7).unwrap();
        assert!(r.passed());
        assert_eq!(r.trees_checked, 1 + 1 + 1 + 2 + 3 + 6 + 11);
    }

    #[test]
    fn shift_examples() {
        // P3: Laplacian {0,1,3}; L(P3) = P2 with adjacency {-1, 1}
        let p3 = build_family(&Family::Path(3)).unwrap();
        let lap = charpoly(&p3, MatrixKind::Laplacian);
        let reduced = IntPoly::new(lap.coeffs()[1..].to_vec());
        assert_eq!(
            reduced.compose(&IntPoly::from_i64(&[2, 1])),
            IntPoly::from_i64(&[-1, 0, 1])
        );
    }

    #[test]
    fn adjacency_positive_control() {
        let c = smallest_cospectral_trees(MatrixKind::Adjacency, 9)
            .unwrap()
            .unwrap();
        assert_eq!(c.n, 8);
        assert!(!c.classes.is_empty());
        assert!(smallest_cospectral_trees(MatrixKind::Laplacian, 7)
            .unwrap()
            .is_none());
    }

    #[test]
    fn small_family_scan() {
        let r = family_collision_scan(MatrixKind::Laplacian, 9).unwrap();
        assert!(r.passed(), "{r:?}");
        let counts: Vec<u64> = r.separation.iter().map(|s| s.g1_counts[0]).collect();
        assert_eq!(counts, [6, 8, 10, 12]);
    }
}
