use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::Value;
use specgraph_core::closed_forms::{
    formula_grid, identity_grid, injectivity_scan, Formula, Identity, Status, TableName,
};
use specgraph_core::ds::{
    cospectral_mate_search, ds_check_centipede, ds_check_t4, family_collision_scan,
    verify_line_correspondence, SearchSpace, SpectrumCache,
};
use specgraph_core::graph::{free_tree_count, to_edge_list, Graph};
use specgraph_core::invariants::{
    laplacian_facts, linegraph_degree_census, mu1_bounds_check, LineGraphCounts,
};
use specgraph_core::poly::{charpoly, IntPoly, MatrixKind};
use specgraph_core::walks::{closed_walks, derive_walk_identity, verify_walk_identities};

use crate::input::{build, read_graph};
use crate::output::{Format, Outcome, RunConfig};
use crate::{Command, DsSearchArgs};

const CACHE_FILE: &str = "spectra.tsv";

fn param(cfg: &mut RunConfig, key: &str, v: impl Serialize) {
    cfg.params.insert(
        key.to_string(),
        serde_json::to_value(v).expect("params serialize"),
    );
}

fn kind(s: &str) -> Result<MatrixKind> {
    s.parse().map_err(anyhow::Error::msg)
}

fn graph_out(cfg: &RunConfig, g: &Graph) -> Option<String> {
    match cfg.format {
        Format::Graph6 => Some(g.to_graph6()),
        Format::Edges => Some(to_edge_list(g)),
        _ => None,
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn check_ceiling(cfg: &RunConfig, what: &str, count: u64) -> Result<()> {
    if count > cfg.ceiling as u64 {
        bail!(
            "{what} would visit {count} candidates, above the ceiling {} (raise --ceiling)",
            cfg.ceiling
        );
    }
    Ok(())
}

pub fn dispatch(cmd: &Command, cfg: &mut RunConfig) -> Result<Outcome> {
    match cmd {
        Command::Gen { family, params } => gen(cfg, family, params),
        Command::Charpoly { graph, kind: k } => charpoly_cmd(cfg, graph, kind(k)?),
        Command::Linegraph { graph } => linegraph(cfg, graph),
        Command::Walks { graph, lengths } => walks(cfg, graph, lengths),
        Command::Identities { target, max_sum } => identities(cfg, target, *max_sum),
        Command::DsSearch(args) => ds_search(cfg, args),
        Command::FamilyScan {
            kind: k,
            max_sum,
            table,
        } => family_scan(cfg, kind(k)?, *max_sum, table.as_deref()),
        Command::Correspondence { max_n } => correspondence(cfg, *max_n),
        Command::Census { max_n } => census(cfg, *max_n),
        Command::DeriveCoeffs { lengths } => derive_coeffs(cfg, lengths),
    }
}

fn gen(cfg: &mut RunConfig, family: &str, params: &[usize]) -> Result<Outcome> {
    param(cfg, "family", family);
    param(cfg, "params", params);
    let g = build(family, params)?;
    let mut o = Outcome {
        graph_text: graph_out(cfg, &g),
        ..Outcome::default()
    };
    o.set("graph6", g.to_graph6());
    o.set("n", g.n());
    o.set("m", g.edge_count());
    o.set("degrees", g.degrees());
    Ok(o)
}

fn charpoly_cmd(cfg: &mut RunConfig, graph: &str, k: MatrixKind) -> Result<Outcome> {
    let g = read_graph(graph)?;
    param(cfg, "graph", g.to_graph6());
    param(cfg, "kind", k);
    let p = match &cfg.cache_dir {
        Some(dir) => {
            let cache = SpectrumCache::open(&dir.join(CACHE_FILE))
                .with_context(|| format!("opening cache in {}", dir.display()))?;
            let key = cache.key(&g, k)?;
            let (hits, misses) = cache.stats();
            eprintln!("cache: {hits} hit(s), {misses} miss(es)");
            key.poly()
        }
        None => charpoly(&g, k),
    };
    let mut o = Outcome::default();
    o.set("n", g.n());
    o.set("m", g.edge_count());
    o.set("polynomial", p.to_text());
    o.set("coefficients", coeff_strings(&p));
    if k == MatrixKind::Laplacian {
        o.set("facts", laplacian_facts(&p)?);
        if g.is_tree() && g.edge_count() > 0 {
            let mu = mu1_bounds_check(&g)?;
            o.failed = !mu.passed();
            o.set("mu1", mu);
        }
    }
    Ok(o)
}

fn linegraph(cfg: &mut RunConfig, graph: &str) -> Result<Outcome> {
    let g = read_graph(graph)?;
    param(cfg, "graph", g.to_graph6());
    let l = g.line_graph();
    let mut o = Outcome {
        graph_text: graph_out(cfg, &l),
        ..Outcome::default()
    };
    let counts = LineGraphCounts::from_adjacency_charpoly(&charpoly(&l, MatrixKind::Adjacency))?;
    o.set("graph6", l.to_graph6());
    o.set("n", l.n());
    o.set("m", l.edge_count());
    o.set("adjacent_pairs", counts.adjacent_pairs());
    o.set("counts", &counts);
    o.set("max_degree", l.max_degree());
    if l.max_degree() <= 4 {
        for c in linegraph_degree_census(&counts) {
            o.push(c);
        }
    }
    Ok(o)
}

#[derive(Serialize)]
struct WalkRow {
    k: usize,
    closed_walks: String,
    pattern_sum: String,
    terms: usize,
    holds: bool,
}

fn walks(cfg: &mut RunConfig, graph: &str, lengths: &[usize]) -> Result<Outcome> {
    let g = read_graph(graph)?;
    param(cfg, "graph", g.to_graph6());
    param(cfg, "k", lengths);
    let mut o = Outcome::default();
    for &k in lengths {
        let id = derive_walk_identity(k)?;
        let lhs = closed_walks(&g, k);
        let rhs = id.evaluate(&g);
        o.failed |= lhs != rhs;
        o.push(WalkRow {
            k,
            closed_walks: lhs.to_string(),
            pattern_sum: rhs.to_string(),
            terms: id.terms.len(),
            holds: lhs == rhs,
        });
    }
    Ok(o)
}

fn formula_named(s: &str) -> Option<Formula> {
    Some(match s {
        "line" => Formula::LineHead,
        "line-repaired" => Formula::LineHeadRepaired,
        "cases" => Formula::Cases,
        "cases-repaired" => Formula::CasesRepaired,
        _ => return None,
    })
}

fn identities(cfg: &mut RunConfig, target: &str, max_sum: usize) -> Result<Outcome> {
    param(cfg, "target", target);
    param(cfg, "max_sum", max_sum);
    let mut o = Outcome::default();
    let mut statuses: Vec<(Status, bool)> = Vec::new();
    if let Some(f) = formula_named(target) {
        for v in formula_grid(f, max_sum)? {
            statuses.push((v.status, false));
            o.push(v);
        }
    } else {
        let which: Vec<Identity> = if target == "all" {
            vec![Identity::Eq31, Identity::Eq32, Identity::Eq41]
        } else {
            vec![target.parse().map_err(|_| {
                anyhow::anyhow!(
                    "unknown target {target:?} (expected eq31, eq32, eq41, all, line, \
                     line-repaired, cases or cases-repaired)"
                )
            })?]
        };
        for id in which {
            for v in identity_grid(id, max_sum)? {
                statuses.push((v.status, v.documented.is_some()));
                o.push(v);
            }
        }
    }
    let count = |s: Status| statuses.iter().filter(|(t, _)| *t == s).count();
    let (pass, mismatch, gap) = (
        count(Status::Pass),
        count(Status::Mismatch),
        count(Status::CoverageGap),
    );
    let documented = statuses
        .iter()
        .filter(|(s, d)| *s == Status::Mismatch && *d)
        .count();
    o.set("pass", pass);
    o.set("mismatch", mismatch);
    o.set("documented_mismatch", documented);
    o.set("coverage_gap", gap);
    o.failed = mismatch + gap > 0;
    o.message = Some(format!(
        "{pass} PASS, {mismatch} MISMATCH ({documented} documented), {gap} COVERAGE_GAP"
    ));
    Ok(o)
}

fn ds_search(cfg: &mut RunConfig, a: &DsSearchArgs) -> Result<Outcome> {
    let mut o = Outcome::default();
    match (&a.family, &a.graph) {
        (Some(fam), None) => {
            let Some(n) = a.n else {
                bail!("--family needs --n");
            };
            param(cfg, "family", fam);
            param(cfg, "n", n);
            check_ceiling(
                cfg,
                "tree enumeration",
                free_tree_count(n).unwrap_or(u64::MAX),
            )?;
            match fam.as_str() {
                "t4" => {
                    let r = ds_check_t4(n)?;
                    let mates = r.mate_count();
                    o.failed = !r.passed();
                    o.message = Some(format!(
                        "{mates} cospectral mates among {} trees",
                        r.trees_checked
                    ));
                    o.set("n", r.n);
                    o.set("trees_checked", r.trees_checked);
                    o.set("expected_trees", r.expected_trees);
                    o.set("degree_multiset_trees", &r.degree_multiset_trees);
                    for t in &r.triples {
                        o.push(t);
                    }
                }
                "centipede" => {
                    let r = ds_check_centipede(n)?;
                    o.failed = !r.mates.is_empty();
                    o.message = Some(format!(
                        "{} cospectral mates among {} trees",
                        r.mates.len(),
                        r.candidates_checked
                    ));
                    for m in &r.mates {
                        o.push(m);
                    }
                    o.set("report", &r);
                }
                other => bail!("unknown family {other:?} for ds-search (expected t4 or centipede)"),
            }
        }
        (None, Some(graph)) => {
            let g = read_graph(graph)?;
            let k = kind(&a.kind)?;
            let space: SearchSpace = a.space.parse().map_err(anyhow::Error::msg)?;
            param(cfg, "graph", g.to_graph6());
            param(cfg, "kind", k);
            param(cfg, "space", space);
            if space == SearchSpace::TreesSameN {
                check_ceiling(
                    cfg,
                    "tree enumeration",
                    free_tree_count(g.n()).unwrap_or(u64::MAX),
                )?;
            }
            let mates = cospectral_mate_search(&g, k, space)?;
            o.failed = !mates.is_empty();
            o.message = Some(format!("{} cospectral mates in {space}", mates.len()));
            for m in &mates {
                o.push(m.to_graph6());
            }
        }
        _ => bail!("ds-search needs either --family with --n, or --graph"),
    }
    Ok(o)
}

fn family_scan(
    cfg: &mut RunConfig,
    k: MatrixKind,
    max_sum: usize,
    table: Option<&str>,
) -> Result<Outcome> {
    param(cfg, "max_sum", max_sum);
    let mut o = Outcome::default();
    if let Some(t) = table {
        let name: TableName = t.parse()?;
        param(cfg, "table", name);
        let r = injectivity_scan(name, max_sum)?;
        o.failed = !r.collisions.is_empty();
        o.message = Some(format!(
            "{} collisions among {} triples",
            r.collisions.len(),
            r.triples_checked
        ));
        for c in &r.collisions {
            o.push(c);
        }
        o.set("triples_checked", r.triples_checked);
        return Ok(o);
    }
    param(cfg, "kind", k);
    let r = family_collision_scan(k, max_sum)?;
    o.failed = !r.passed();
    o.message = Some(format!(
        "{} collisions among {} family members",
        r.collisions.len(),
        r.candidates_checked
    ));
    for c in &r.collisions {
        o.push(c);
    }
    o.set("candidates_checked", r.candidates_checked);
    o.set("separation", &r.separation);
    Ok(o)
}

fn correspondence(cfg: &mut RunConfig, max_n: usize) -> Result<Outcome> {
    param(cfg, "max_n", max_n);
    let total: u64 = (1..=max_n).filter_map(free_tree_count).sum();
    check_ceiling(cfg, "tree enumeration", total)?;
    let r = verify_line_correspondence(max_n)?;
    let mut o = Outcome {
        failed: !r.passed(),
        message: Some(format!(
            "{} violations among {} trees",
            r.shift_violations.len() + r.pair_violations.len(),
            r.trees_checked
        )),
        ..Outcome::default()
    };
    for g in &r.shift_violations {
        o.push(serde_json::json!({"shift_violation": g}));
    }
    for (a, b) in &r.pair_violations {
        o.push(serde_json::json!({"pair_violation": [a, b]}));
    }
    o.set("trees_checked", r.trees_checked);
    o.set("cospectral_laplacian_pairs", r.cospectral_laplacian_pairs);
    Ok(o)
}

fn census(cfg: &mut RunConfig, max_n: usize) -> Result<Outcome> {
    param(cfg, "max_n", max_n);
    let r = verify_walk_identities(max_n)?;
    let mut o = Outcome {
        failed: !r.violations.is_empty(),
        message: Some(format!(
            "{} violations in {} checks over {} graphs",
            r.violations.len(),
            r.checks,
            r.graphs_checked
        )),
        ..Outcome::default()
    };
    for v in &r.violations {
        o.push(v);
    }
    o.set("graphs_checked", r.graphs_checked);
    o.set("checks", r.checks);
    let terms: Vec<Value> = r
        .identities
        .iter()
        .map(|id| serde_json::json!({"k": id.k, "terms": id.terms.len()}))
        .collect();
    o.set("identities", terms);
    Ok(o)
}

#[derive(Serialize)]
struct TermRow<'a> {
    k: usize,
    name: &'a str,
    graph6: &'a str,
    vertices: usize,
    edges: usize,
    coefficient: u64,
}

fn derive_coeffs(cfg: &mut RunConfig, lengths: &[usize]) -> Result<Outcome> {
    param(cfg, "k", lengths);
    let mut o = Outcome::default();
    let mut sizes = Vec::new();
    for &k in lengths {
        let id = derive_walk_identity(k)?;
        sizes.push(serde_json::json!({"k": k, "terms": id.terms.len()}));
        for t in &id.terms {
            o.push(TermRow {
                k,
                name: &t.name,
                graph6: &t.graph6,
                vertices: t.vertices,
                edges: t.edges,
                coefficient: t.coefficient,
            });
        }
    }
    o.set("identities", sizes);
    Ok(o)
}
