//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process fails when the set of red criteria differs from
//! `KNOWN_RED`; a red criterion stays red in the printout either way.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgraph_core::closed_forms::{identity_grid, injectivity_scan, Identity, Status, TableName};
use specgraph_core::ds::{
    ds_check_centipede, ds_check_t4, family_collision_scan, verify_line_correspondence,
};
use specgraph_core::graph::{
    build_family, enumerate_graphs, enumerate_trees, free_tree_count, Family, Graph, T4Subfamily,
};
use specgraph_core::invariants::{
    degree_recovery, enclosure_tolerance, laplacian_facts, linegraph_degree_census, mu1_at_most,
    mu1_below, mu1_bounds_check, subdivision_check, DegreeCensus, InvariantError, LineGraphCounts,
};
use specgraph_core::poly::{
    charpoly, deletion_charpoly, path_poly, to_laurent, LaurentPoly, MatrixKind,
};
use specgraph_core::walks::{
    count_subgraph_copies, derive_walk_identity, named_pattern, verify_walk_identities,
};

/// Criteria expected to fail, each analysed in the decisions notes:
/// 1: the derived N(7) identity has 12 terms (extra K_{1,1,3} term, 84).
/// 14: mu1(T4(1,1,1)) = 5 and mu1(T4(1,1,2)) lies in (4.9, 5).
const KNOWN_RED: &[u32] = &[1, 14];

/// Exact criteria have no numeric tolerance; the only float-facing knob is
/// the width of displayed eigenvalue enclosures.
const ENCLOSURE_WIDTH: f64 = 1e-9;
const MU1_T4_BOUND: (i64, i64) = (49, 10);
const SUBDIVISION_SAMPLES: usize = 100;
const SUBDIVISION_SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t4(p: usize, q: usize, r: usize) -> Graph {
    build_family(&Family::T4 { p, q, r }).unwrap()
}

fn all_t4(max_sum: usize) -> Vec<[usize; 3]> {
    specgraph_core::closed_forms::triples(max_sum)
}

fn c01_walk_identities() -> Outcome {
    let expect: [(usize, &[(&str, u64)]); 4] = [
        (2, &[("P2", 2)]),
        (3, &[("K3", 6)]),
        (4, &[("P2", 2), ("P3", 4), ("C4", 8)]),
        (5, &[("K3", 30), ("C5", 10), ("G1", 10)]),
    ];
    for (k, want) in expect {
        let id = derive_walk_identity(k).map_err(|e| e.to_string())?;
        let mut got: Vec<(String, u64)> = id
            .terms
            .iter()
            .map(|t| (t.name.clone(), t.coefficient))
            .collect();
        got.sort();
        let mut want: Vec<(String, u64)> = want.iter().map(|&(n, c)| (n.to_string(), c)).collect();
        want.sort();
        ensure(got == want, || {
            format!("k={k}: derived {got:?}, expected {want:?}")
        })?;
    }
    let id7 = derive_walk_identity(7).map_err(|e| e.to_string())?;
    let mut got: Vec<u64> = id7.terms.iter().map(|t| t.coefficient).collect();
    got.sort_unstable();
    let mut want = vec![126, 84, 14, 14, 14, 28, 42, 28, 112, 70, 14];
    want.sort_unstable();
    ensure(got == want, || {
        let extra: Vec<String> = id7
            .terms
            .iter()
            .filter(|t| t.name == "K113")
            .map(|t| format!("{} ({} edges) x{}", t.name, t.edges, t.coefficient))
            .collect();
        format!(
            "k=2..5 exact; k=7 derived {} terms {got:?}, expected 11 terms {want:?}; extra: {}",
            got.len(),
            extra.join(", ")
        )
    })?;
    Ok("k=2,3,4,5 and k=7 (11 terms) exact".into())
}

fn c02_identity_census() -> Outcome {
    let r = verify_walk_identities(8).map_err(|e| e.to_string())?;
    ensure(r.violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations.first()
        )
    })?;
    Ok(format!(
        "{} graphs (n <= 8), {} checks, 0 violations",
        r.graphs_checked, r.checks
    ))
}

fn c03_path_polynomials() -> Outcome {
    for r in 1..=50i64 {
        let v = path_poly(r).unwrap().eval(&BigInt::from(2));
        ensure(v == BigInt::from(r + 1), || format!("p_{r}(2) = {v}"))?;
    }
    // p_r(x + 1/x) (x^(r+2) - x^r) = x^(2r+2) - 1
    for r in 0..=30i64 {
        let pre = &LaurentPoly::monomial(1.into(), r + 2) - &LaurentPoly::monomial(1.into(), r);
        let lhs = to_laurent(&path_poly(r).unwrap(), &pre);
        let rhs = &LaurentPoly::monomial(1.into(), 2 * r + 2) - &LaurentPoly::one();
        ensure(lhs == rhs, || format!("Laurent form fails at r={r}"))?;
    }
    Ok("p_r(2) = r+1 for r <= 50; Laurent form exact for r <= 30".into())
}

fn c04_schwenk() -> Outcome {
    let mut checks = 0;
    for n in 1..=7 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            let truth = charpoly(&g, MatrixKind::Adjacency);
            for v in 0..n {
                ensure(deletion_charpoly(&g, v) == truth, || {
                    format!("{} at vertex {v}", g.to_graph6())
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (graph, vertex) pairs with n <= 7"))
}

fn c05_correspondence() -> Outcome {
    let r = verify_line_correspondence(9).map_err(|e| e.to_string())?;
    ensure(r.passed(), || {
        format!(
            "{} shift and {} pair violations",
            r.shift_violations.len(),
            r.pair_violations.len()
        )
    })?;
    Ok(format!(
        "{} trees (n <= 9), {} Laplacian-cospectral pairs, 0 violations",
        r.trees_checked, r.cospectral_laplacian_pairs
    ))
}

fn c06_degree_recovery() -> Outcome {
    let five = BigRational::from_integer(5.into());
    let (mut recovered, mut skipped) = (0, 0);
    for n in 2..=12 {
        for t in enumerate_trees(n).map_err(|e| e.to_string())? {
            let lap = charpoly(&t, MatrixKind::Laplacian);
            if !mu1_at_most(&lap, &five) {
                skipped += 1;
                continue;
            }
            let facts = laplacian_facts(&lap).map_err(|e| e.to_string())?;
            let got =
                degree_recovery(&facts, true).map_err(|e| format!("{}: {e}", t.to_graph6()))?;
            let truth = DegreeCensus::of_degrees(&t.degrees());
            ensure(Some(got) == truth, || {
                format!("{}: recovered {got:?}, true {truth:?}", t.to_graph6())
            })?;
            recovered += 1;
        }
    }
    Ok(format!(
        "{recovered} trees recovered exactly, {skipped} without the mu1 <= 5 certificate"
    ))
}

fn c07_census_families() -> Outcome {
    let c = |y: [i64; 4]| DegreeCensus {
        counts: y.map(|v| v as u64),
    };
    let mut checked = 0;
    for [p, q, r] in all_t4(18) {
        let sub = T4Subfamily::of(p, q, r);
        if sub == T4Subfamily::ThreeUnitLegs {
            continue;
        }
        let l = t4(p, q, r).line_graph();
        let m = l.n() as i64;
        let counts = LineGraphCounts::from_adjacency_charpoly(&charpoly(&l, MatrixKind::Adjacency))
            .map_err(|e| e.to_string())?;
        let want = match sub {
            T4Subfamily::General => vec![c([0, m - 6, 6, 0])],
            T4Subfamily::OneUnitLeg => vec![c([1, m - 8, 7, 0]), c([0, m - 5, 4, 1])],
            T4Subfamily::TwoUnitLegs => vec![
                c([2, m - 10, 8, 0]),
                c([1, m - 7, 5, 1]),
                c([0, m - 4, 2, 2]),
            ],
            T4Subfamily::ThreeUnitLegs => unreachable!(),
        };
        let got = linegraph_degree_census(&counts);
        ensure(got == want, || {
            format!("T4({p},{q},{r}): {got:?} vs {want:?}")
        })?;
        let truth = DegreeCensus::of_degrees(&l.degrees()).unwrap();
        ensure(got.contains(&truth), || {
            format!("T4({p},{q},{r}) misses its own census")
        })?;
        checked += 1;
    }
    Ok(format!(
        "{checked} members with p+q+r <= 18 match their subfamily's solution set"
    ))
}

fn c08_g1_separation() -> Outcome {
    let g1 = named_pattern("G1").unwrap();
    let mut seen: BTreeMap<T4Subfamily, Vec<u64>> = BTreeMap::new();
    for [p, q, r] in all_t4(12) {
        let sub = T4Subfamily::of(p, q, r);
        if sub == T4Subfamily::ThreeUnitLegs {
            continue;
        }
        let got = count_subgraph_copies(&t4(p, q, r).line_graph(), &g1);
        let want = 6 + 2 * sub.unit_legs() as u64;
        ensure(got == want, || {
            format!("T4({p},{q},{r}): {got} copies, expected {want}")
        })?;
        seen.entry(sub).or_default().push(got);
    }
    Ok(format!(
        "G1 copies 6/8/10 over {} members with p+q+r <= 12",
        seen.values().map(Vec::len).sum::<usize>()
    ))
}

fn c09_closed_form_audit() -> Outcome {
    let mut tally: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for id in [Identity::Eq31, Identity::Eq32, Identity::Eq41] {
        for v in identity_grid(id, 15).map_err(|e| e.to_string())? {
            let status = match v.status {
                Status::Pass => "PASS",
                Status::Mismatch if v.documented.is_some() => "MISMATCH(documented)",
                Status::Mismatch => "MISMATCH",
                Status::CoverageGap => "COVERAGE_GAP",
            };
            ensure(v.acceptable(), || {
                format!("{} at {:?}: undocumented {status}", id.as_str(), v.params)
            })?;
            *tally.entry((id.as_str(), status)).or_default() += 1;
        }
    }
    let parts: Vec<String> = tally
        .iter()
        .map(|((id, s), n)| format!("{id} {s} {n}"))
        .collect();
    Ok(parts.join(", "))
}

fn c10_injectivity() -> Outcome {
    let mut parts = Vec::new();
    for t in [TableName::W, TableName::U] {
        let r = injectivity_scan(t, 24).map_err(|e| e.to_string())?;
        ensure(r.collisions.is_empty(), || {
            format!(
                "{t}: collisions {:?}",
                &r.collisions[..r.collisions.len().min(3)]
            )
        })?;
        parts.push(format!("{t} distinct on {} triples", r.triples_checked));
    }
    Ok(parts.join(", "))
}

fn c11_t4_ds() -> Outcome {
    let mut parts = Vec::new();
    for n in 10..=16 {
        let r = ds_check_t4(n).map_err(|e| e.to_string())?;
        ensure(Some(r.trees_checked as u64) == free_tree_count(n), || {
            format!(
                "n={n}: enumerated {} trees, oracle {:?}",
                r.trees_checked,
                free_tree_count(n)
            )
        })?;
        ensure(r.passed(), || format!("n={n}: {} mates", r.mate_count()))?;
        parts.push(format!("{n}:{}", r.trees_checked));
    }
    Ok(format!("0 mates; trees per n {}", parts.join(" ")))
}

fn c12_family_scan() -> Outcome {
    let r = family_collision_scan(MatrixKind::Adjacency, 24).map_err(|e| e.to_string())?;
    ensure(r.collisions.is_empty(), || {
        format!("{} collisions", r.collisions.len())
    })?;
    Ok(format!(
        "{} members with p+q+r <= 24, 0 collisions",
        r.candidates_checked
    ))
}

fn c13_centipedes() -> Outcome {
    let mut parts = Vec::new();
    for n in [6, 8, 10, 12] {
        let r = ds_check_centipede(n).map_err(|e| e.to_string())?;
        ensure(r.mates.is_empty(), || format!("n={n}: mates {:?}", r.mates))?;
        parts.push(format!("{n}:{}", r.candidates_checked));
    }
    Ok(format!("0 mates; trees per n {}", parts.join(" ")))
}

fn c14_bounds() -> Outcome {
    let tol = enclosure_tolerance();
    let width_cap = BigRational::new(1.into(), 1_000_000_000.into());
    ensure(tol == width_cap, || {
        format!("enclosure tolerance {tol}, pinned {ENCLOSURE_WIDTH}")
    })?;
    let mut trees = 0;
    for n in 2..=10 {
        for t in enumerate_trees(n).map_err(|e| e.to_string())? {
            let r = mu1_bounds_check(&t).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{}: {r:?}", t.to_graph6()))?;
            ensure(&r.mu1_hi - &r.mu1_lo <= tol, || {
                format!("{}: wide enclosure", t.to_graph6())
            })?;
            trees += 1;
        }
    }
    let bound = BigRational::new(MU1_T4_BOUND.0.into(), MU1_T4_BOUND.1.into());
    let five = BigRational::from_integer(5.into());
    let mut members = 0;
    let mut over = Vec::new();
    for [p, q, r] in all_t4(12) {
        let lap = charpoly(&t4(p, q, r), MatrixKind::Laplacian);
        ensure(mu1_at_most(&lap, &five), || {
            format!("T4({p},{q},{r}): mu1 > 5")
        })?;
        if !mu1_below(&lap, &bound) {
            let at_five = lap.sign_at(&five) == 0;
            over.push(format!(
                "T4({p},{q},{r}) mu1 {}",
                if at_five {
                    "= 5".to_string()
                } else {
                    "in [4.9, 5)".to_string()
                }
            ));
        }
        members += 1;
    }
    ensure(over.is_empty(), || {
        format!(
            "mu1 < 4.9 fails for {} of {members} T4 members: {}; mu1 <= 5 holds for all",
            over.len(),
            over.join(", ")
        )
    })?;
    let pool: Vec<Graph> = (6..=10).flat_map(|n| enumerate_trees(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SUBDIVISION_SEED);
    let (mut sampled, mut attempts) = (0, 0);
    while sampled < SUBDIVISION_SAMPLES {
        attempts += 1;
        ensure(attempts < 100_000, || "too few internal-path edges".into())?;
        let t = &pool[rng.gen_range(0..pool.len())];
        let edges = t.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        match subdivision_check(t, u, v) {
            Ok(r) => {
                ensure(r.non_increase(), || {
                    format!("{} edge {u}{v}: {:?}", t.to_graph6(), r.verdict)
                })?;
                sampled += 1;
            }
            Err(InvariantError::Hypothesis(_)) | Err(InvariantError::ExceptionCase(_)) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    for n in 6..=12 {
        let w = build_family(&Family::WGraph(n)).unwrap();
        for (u, v) in w.edges() {
            let res = subdivision_check(&w, u, v);
            ensure(res.is_err(), || format!("W_{n} edge {u}{v} accepted"))?;
        }
        let inner = w
            .edges()
            .into_iter()
            .find(|&(u, v)| w.degree(u) >= 2 && w.degree(v) >= 2);
        if let Some((u, v)) = inner {
            ensure(
                matches!(
                    subdivision_check(&w, u, v),
                    Err(InvariantError::ExceptionCase(_))
                ),
                || format!("W_{n} not flagged as the exceptional graph"),
            )?;
        }
    }
    Ok(format!(
        "bounds on {trees} trees; mu1 < 4.9 on {members} T4 members; \
         {sampled} subdivisions non-increasing; W_6..W_12 rejected"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let min = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion {
            id: 1,
            name: "walk identities",
            limit: min(1),
            run: c01_walk_identities,
        },
        Criterion {
            id: 2,
            name: "identity census n<=8",
            limit: min(10),
            run: c02_identity_census,
        },
        Criterion {
            id: 3,
            name: "path polynomials",
            limit: min(10),
            run: c03_path_polynomials,
        },
        Criterion {
            id: 4,
            name: "vertex-deletion recurrence",
            limit: min(10),
            run: c04_schwenk,
        },
        Criterion {
            id: 5,
            name: "line-graph correspondence",
            limit: min(2),
            run: c05_correspondence,
        },
        Criterion {
            id: 6,
            name: "degree recovery",
            limit: min(10),
            run: c06_degree_recovery,
        },
        Criterion {
            id: 7,
            name: "line-graph degree censuses",
            limit: min(10),
            run: c07_census_families,
        },
        Criterion {
            id: 8,
            name: "G1 separation",
            limit: min(10),
            run: c08_g1_separation,
        },
        Criterion {
            id: 9,
            name: "closed-form audit",
            limit: min(10),
            run: c09_closed_form_audit,
        },
        Criterion {
            id: 10,
            name: "table injectivity",
            limit: min(5),
            run: c10_injectivity,
        },
        Criterion {
            id: 11,
            name: "T4 Laplacian DS n=10..16",
            limit: min(30),
            run: c11_t4_ds,
        },
        Criterion {
            id: 12,
            name: "adjacency family scan",
            limit: min(10),
            run: c12_family_scan,
        },
        Criterion {
            id: 13,
            name: "centipedes",
            limit: min(10),
            run: c13_centipedes,
        },
        Criterion {
            id: 14,
            name: "eigenvalue bounds",
            limit: min(10),
            run: c14_bounds,
        },
    ];
    let mut red = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let mut res = (c.run)();
        let took = start.elapsed();
        if res.is_ok() && took > c.limit {
            res = Err(format!("runtime {took:.1?} over {:?}", c.limit));
        }
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!(
            "criterion {:>2} {tag} {} [{took:.2?}]: {detail}",
            c.id, c.name
        );
        if res.is_err() {
            red.push(c.id);
        }
    }
    let green = criteria.len() - red.len();
    println!(
        "acceptance: {green} PASS, {} FAIL {red:?}; documented red {KNOWN_RED:?}",
        red.len()
    );
    if red == KNOWN_RED {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: red set differs from the documented one");
        ExitCode::FAILURE
    }
}
