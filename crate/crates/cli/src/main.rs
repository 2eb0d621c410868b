//! `specgraph`: exact spectral graph computations from the command line.
//!
//! Exit codes: 0 when every asserted property held, 2 when an audit found
//! mismatches or counterexamples, 1 on usage or input errors.

mod commands;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

use output::{Format, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "specgraph",
    version,
    about = "Exact spectral computations on small graphs"
)]
struct Cli {
    /// Output format. `graph6` and `edges` apply to graph-producing commands.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for grids and enumerations (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Largest number of candidate graphs an enumeration may visit.
    #[arg(long, global = true, default_value_t = 200_000)]
    ceiling: usize,
    /// Directory for the persistent spectrum-key cache.
    #[arg(long, global = true, env = "SPECGRAPH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Leave wall time out of reports so reruns are byte-identical.
    #[arg(long, global = true)]
    omit_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member: `t4 p q r`, `path k`, `cycle k`, `star k`,
    /// `complete k`, `complete-bipartite a b`, `centipede k`, `w n`.
    Gen { family: String, params: Vec<usize> },
    /// Characteristic polynomial of a graph (graph6, edge list, file or `-`).
    Charpoly {
        graph: String,
        #[arg(long, default_value = "adjacency")]
        kind: String,
    },
    /// Line graph, its spectral counts and the degree censuses they allow.
    Linegraph { graph: String },
    /// Closed-walk counts against the derived subgraph identities.
    Walks {
        graph: String,
        #[arg(long = "k", value_delimiter = ',', default_values_t = [2, 3, 4, 5, 7])]
        lengths: Vec<usize>,
    },
    /// Closed-form audit: eq31, eq32, eq41, all, or a path-polynomial formula
    /// (line, line-repaired, cases, cases-repaired).
    Identities {
        target: String,
        #[arg(long, default_value_t = 15)]
        max_sum: usize,
    },
    /// Exhaustive cospectral-mate search.
    DsSearch(DsSearchArgs),
    /// Spectrum collisions across the T4 family, or table injectivity.
    FamilyScan {
        #[arg(long, default_value = "adjacency")]
        kind: String,
        #[arg(long, default_value_t = 24)]
        max_sum: usize,
        /// Check injectivity of a coefficient table (W, U, W1, U1) instead.
        #[arg(long)]
        table: Option<String>,
    },
    /// Laplacian spectra of trees against adjacency spectra of line graphs.
    Correspondence {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Every derived walk identity on every graph up to `max-n` vertices.
    Census {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Derive the subgraph-count decomposition of closed walks of length k.
    DeriveCoeffs {
        #[arg(long = "k", value_delimiter = ',', default_values_t = [2, 3, 4, 5, 7])]
        lengths: Vec<usize>,
    },
}

#[derive(Debug, Args)]
pub struct DsSearchArgs {
    /// `t4` or `centipede`; both need `--n`.
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Search mates of this graph instead.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, default_value = "laplacian")]
    kind: String,
    /// `trees` or `forests`.
    #[arg(long, default_value = "trees")]
    space: String,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Charpoly { .. } => "charpoly",
            Command::Linegraph { .. } => "linegraph",
            Command::Walks { .. } => "walks",
            Command::Identities { .. } => "identities",
            Command::DsSearch(_) => "ds-search",
            Command::FamilyScan { .. } => "family-scan",
            Command::Correspondence { .. } => "correspondence",
            Command::Census { .. } => "census",
            Command::DeriveCoeffs { .. } => "derive-coeffs",
        }
    }

    fn makes_graph(&self) -> bool {
        matches!(self, Command::Gen { .. } | Command::Linegraph { .. })
    }
}

fn run(cli: Cli) -> Result<u8> {
    if matches!(cli.format, Format::Graph6 | Format::Edges) && !cli.command.makes_graph() {
        bail!(
            "--format {:?} only applies to gen and linegraph",
            cli.format
        );
    }
    let mut cfg = RunConfig {
        command: cli.command.name().to_string(),
        params: Default::default(),
        ceiling: cli.ceiling,
        cache_dir: cli.cache_dir,
        format: cli.format,
        workers: cli.workers,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()?;
    let start = Instant::now();
    let outcome = pool.install(|| commands::dispatch(&cli.command, &mut cfg))?;
    let elapsed = (!cli.omit_timing).then(|| start.elapsed());
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    output::emit(&mut lock, &cfg, &outcome, elapsed)?;
    lock.flush()?;
    if let Some(m) = &outcome.message {
        if outcome.graph_text.is_none() {
            eprintln!("{m}");
        }
    }
    Ok(if outcome.failed { 2 } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
