use std::process::{Command, Output};

use serde_json::Value;
use specgraph_core::ds::smallest_cospectral_trees;
use specgraph_core::graph::Graph;
use specgraph_core::poly::MatrixKind;

fn specgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(args)
        .env_remove("SPECGRAPH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_json(o: &Output) -> Value {
    let text = stdout(o);
    serde_json::from_str(text.lines().last().expect("summary line")).unwrap()
}

#[test]
fn gen_t4_graph6_round_trips() {
    let o = specgraph(&["gen", "t4", "2", "3", "4", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = Graph::from_graph6(text.trim()).unwrap();
    assert_eq!(g.n(), 16);
    assert!(g.is_tree());
}

#[test]
fn ds_search_t4_ten() {
    let o = specgraph(&["ds-search", "--family", "t4", "--n", "10", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let s = last_json(&o);
    assert_eq!(s["message"], "0 cospectral mates among 106 trees");
    assert_eq!(s["summary"]["trees_checked"], 106);
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 cospectral mates among 106 trees"));
}

#[test]
fn identities_exit_codes() {
    let o = specgraph(&["identities", "eq31", "--max-sum", "12", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    let rows: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let (verdicts, summary) = rows.split_at(rows.len() - 1);
    assert!(!verdicts.is_empty());
    for v in verdicts {
        assert_eq!(v["status"], "MISMATCH");
        assert!(v["documented"].is_string());
    }
    assert_eq!(summary[0]["summary"]["pass"], 0);

    let o = specgraph(&["identities", "eq32", "--max-sum", "12", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_json(&o)["summary"]["mismatch"], 0);
}

#[test]
fn identities_tsv_table() {
    let o = specgraph(&["identities", "eq41", "--max-sum", "10", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("identity\tparams\tn\tstatus"));
    assert!(text.contains("\tPASS\t"));
    assert!(text.contains("\tMISMATCH\t"));
    assert!(text.contains("# elapsed_ms\t"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["charpoly", "~~"],
        &["charpoly", "3 2\n0 1\n"],
        &["gen", "t4", "3", "2", "1"],
        &["census", "--max-n", "9"],
        &["identities", "eq99"],
        &["identities", "eq31", "--format", "graph6"],
        &["ds-search", "--family", "t4"],
        &[
            "ds-search",
            "--family",
            "t4",
            "--n",
            "16",
            "--ceiling",
            "1000",
        ],
    ] {
        let o = specgraph(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = specgraph(&[
        "family-scan",
        "--max-sum",
        "10",
        "--omit-timing",
        "--workers",
        "1",
    ]);
    let b = specgraph(&[
        "family-scan",
        "--max-sum",
        "10",
        "--omit-timing",
        "--workers",
        "1",
    ]);
    let c = specgraph(&[
        "family-scan",
        "--max-sum",
        "10",
        "--omit-timing",
        "--workers",
        "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn reports_embed_version_config_and_time() {
    let s = last_json(&specgraph(&["derive-coeffs", "--k", "2,3"]));
    assert_eq!(s["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(s["config"]["params"]["k"], serde_json::json!([2, 3]));
    assert!(s["elapsed_ms"].is_u64());
    let s = last_json(&specgraph(&[
        "derive-coeffs",
        "--k",
        "2,3",
        "--omit-timing",
    ]));
    assert!(s.get("elapsed_ms").is_none());
}

#[test]
fn edge_list_file_and_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k13.txt");
    std::fs::write(&path, "# star\n4 3\n0 1\n0 2\n0 3\n").unwrap();
    let cache = dir.path().join("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_specgraph"))
            .args([
                "charpoly",
                path.to_str().unwrap(),
                "--kind",
                "laplacian",
                "--omit-timing",
            ])
            .env("SPECGRAPH_CACHE_DIR", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let s = last_json(&first);
    assert_eq!(s["summary"]["polynomial"], "0 -4 9 -6 1");
    assert_eq!(s["summary"]["facts"]["sum_deg_cube"], 30);
    assert_eq!(s["summary"]["mu1"]["lower_holds"], true);
    assert_eq!(s["config"]["cache_dir"], cache.to_str().unwrap());
    let records = std::fs::read_to_string(cache.join("spectra.tsv")).unwrap();
    assert_eq!(records.lines().count(), 1);
    assert!(String::from_utf8_lossy(&second.stderr).contains("1 hit(s)"));
}

#[test]
fn walks_linegraph_and_census() {
    let o = specgraph(&["walks", "Bw", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);

    let t4 = stdout(&specgraph(&[
        "gen", "t4", "1", "1", "4", "--format", "graph6",
    ]));
    let o = specgraph(&["linegraph", t4.trim(), "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let censuses: Vec<Value> = text
        .lines()
        .take_while(|l| l.starts_with("{\"counts\""))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let y4: Vec<u64> = censuses
        .iter()
        .map(|c| c["counts"][3].as_u64().unwrap())
        .collect();
    assert_eq!(y4, [0, 1, 2]);

    let o = specgraph(&["census", "--max-n", "5", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        last_json(&o)["summary"]["graphs_checked"],
        1 + 2 + 4 + 11 + 34
    );

    let o = specgraph(&["correspondence", "--max-n", "7", "--omit-timing"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn injectivity_and_centipede() {
    let o = specgraph(&[
        "family-scan",
        "--table",
        "W",
        "--max-sum",
        "14",
        "--omit-timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = specgraph(&[
        "ds-search",
        "--family",
        "centipede",
        "--n",
        "8",
        "--omit-timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        last_json(&o)["message"],
        "0 cospectral mates among 23 trees"
    );
}

#[test]
fn mate_search_finds_adjacency_mates() {
    let class = smallest_cospectral_trees(MatrixKind::Adjacency, 8)
        .unwrap()
        .unwrap();
    let g6 = &class.classes[0][0];
    let o = specgraph(&[
        "ds-search",
        "--graph",
        g6,
        "--kind",
        "adjacency",
        "--omit-timing",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let mates: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(mates.len(), class.classes[0].len());
    assert!(class.classes[0].contains(&mates[0].as_str().unwrap().to_string()));
}
