use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::Index;
use specgraph_core::graph::Graph;
use specgraph_core::invariants::{
    complement_laplacian, degree_recovery, laplacian_facts, linegraph_degree_census, mu1_at_most,
    mu1_bounds_check, power_sums, subdivision_check, DegreeCensus, InvariantError, LineGraphCounts,
};
use specgraph_core::poly::{charpoly, spanning_tree_count, MatrixKind};
use specgraph_core::walks::closed_walks;

/// Vertex `i > 0` hangs from a uniformly chosen earlier vertex.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| prop::collection::vec(any::<Index>(), n - 1))
        .prop_map(|parents| {
            let n = parents.len() + 1;
            let mut g = Graph::empty(n);
            for (i, p) in parents.iter().enumerate() {
                g.add_edge(i + 1, p.index(i + 1));
            }
            g
        })
}

/// Trees of maximum degree at most `cap`: a parent that is full is skipped
/// in favour of the next vertex with room.
fn capped_tree(max_n: usize, cap: usize) -> impl Strategy<Value = Graph> {
    tree(max_n).prop_map(move |t| {
        let n = t.n();
        let mut g = Graph::empty(n);
        for v in 1..n {
            let want = t.neighbors(v).find(|&u| u < v).unwrap();
            let p = (0..v)
                .map(|k| (want + k) % v)
                .find(|&u| g.degree(u) < cap)
                .unwrap();
            g.add_edge(v, p);
        }
        g
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn facts_match_direct_counts(g in graph(8)) {
        let f = laplacian_facts(&charpoly(&g, MatrixKind::Laplacian)).unwrap();
        let d = g.degrees();
        prop_assert_eq!(f.n, g.n());
        prop_assert_eq!(f.m, g.edge_count());
        prop_assert_eq!(f.components, g.component_count());
        prop_assert_eq!(f.sum_deg_sq, d.iter().map(|&x| (x * x) as u64).sum::<u64>());
        if g.is_connected() {
            prop_assert_eq!(f.spanning_trees, spanning_tree_count(&g));
        }
        if g.is_forest() {
            prop_assert_eq!(f.sum_deg_cube, Some(d.iter().map(|&x| (x * x * x) as u64).sum::<u64>()));
        }
    }

    #[test]
    fn tree_facts(t in tree(14)) {
        let f = laplacian_facts(&charpoly(&t, MatrixKind::Laplacian)).unwrap();
        prop_assert_eq!(f.components, 1);
        prop_assert_eq!(f.m + 1, f.n);
        prop_assert_eq!(f.spanning_trees, BigUint::from(1u8));
    }

    #[test]
    fn power_sums_are_closed_walks(g in graph(8)) {
        let ps = power_sums(&charpoly(&g, MatrixKind::Adjacency), 6);
        for (i, s) in ps.iter().enumerate() {
            prop_assert_eq!(s, &BigInt::from(closed_walks(&g, i + 1)));
        }
    }

    #[test]
    fn complement_polynomial(g in graph(8)) {
        let n = g.n();
        let lap = charpoly(&g, MatrixKind::Laplacian);
        let comp = complement_laplacian(&lap, n).unwrap();
        prop_assert_eq!(&comp, &charpoly(&g.complement(), MatrixKind::Laplacian));
        prop_assert_eq!(complement_laplacian(&comp, n).unwrap(), lap);
    }

    #[test]
    fn degree_recovery_on_small_degree_trees(t in capped_tree(16, 4)) {
        let lap = charpoly(&t, MatrixKind::Laplacian);
        let f = laplacian_facts(&lap).unwrap();
        let cert = mu1_at_most(&lap, &BigRational::from_integer(5.into()));
        let got = degree_recovery(&f, cert);
        if cert {
            prop_assert_eq!(got.unwrap(), DegreeCensus::of_degrees(&t.degrees()).unwrap());
        } else {
            prop_assert!(matches!(got, Err(InvariantError::Hypothesis(_))));
        }
    }

    #[test]
    fn line_graph_census_contains_truth(t in capped_tree(16, 3)) {
        prop_assume!(t.n() >= 3);
        let l = t.line_graph();
        let counts = LineGraphCounts::from_adjacency_charpoly(&charpoly(&l, MatrixKind::Adjacency)).unwrap();
        prop_assert_eq!(&counts, &LineGraphCounts::from_graph(&l));
        let truth = DegreeCensus::of_degrees(&l.degrees()).unwrap();
        prop_assert!(linegraph_degree_census(&counts).contains(&truth));
    }

    #[test]
    fn mu1_bounds_on_trees(t in tree(12)) {
        prop_assert!(mu1_bounds_check(&t).unwrap().passed());
    }

    #[test]
    fn subdividing_internal_paths_never_raises_the_index(t in tree(12), e in any::<Index>()) {
        let edges = t.edges();
        let (u, v) = edges[e.index(edges.len())];
        match subdivision_check(&t, u, v) {
            Ok(r) => prop_assert!(r.non_increase(), "{:?}", r.verdict),
            Err(InvariantError::Hypothesis(_)) | Err(InvariantError::ExceptionCase(_)) => {}
            Err(other) => prop_assert!(false, "{other}"),
        }
    }
}
