use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use specgraph_core::graph::{build_family, parse_edge_list, Family, Graph};

/// Reads a graph argument: a graph6 string, an edge list, a file holding
/// either, or `-` for stdin.
pub fn read_graph(arg: &str) -> Result<Graph> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading graph from stdin")?;
        s
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    parse_graph_text(&text)
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let body: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    match body.as_slice() {
        [] => bail!("empty graph input"),
        [one] if !one.contains(char::is_whitespace) => {
            let line = one.strip_prefix(">>graph6<<").unwrap_or(one);
            Graph::from_graph6(line).with_context(|| format!("malformed graph6 {line:?}"))
        }
        _ => parse_edge_list(text).context("malformed edge list"),
    }
}

/// `t4 p q r`, `path k`, `centipede k`, ...
pub fn parse_family(name: &str, params: &[usize]) -> Result<Family> {
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("family {name} takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let fam = match name.to_ascii_lowercase().as_str() {
        "t4" => {
            arity(3)?;
            Family::T4 {
                p: params[0],
                q: params[1],
                r: params[2],
            }
        }
        "path" => {
            arity(1)?;
            Family::Path(params[0])
        }
        "cycle" => {
            arity(1)?;
            Family::Cycle(params[0])
        }
        "star" => {
            arity(1)?;
            Family::Star(params[0])
        }
        "complete" => {
            arity(1)?;
            Family::Complete(params[0])
        }
        "complete-bipartite" | "kmn" => {
            arity(2)?;
            Family::CompleteBipartite(params[0], params[1])
        }
        "centipede" => {
            arity(1)?;
            Family::Centipede(params[0])
        }
        "w" | "wgraph" => {
            arity(1)?;
            Family::WGraph(params[0])
        }
        other => bail!(
            "unknown family {other:?} (expected t4, path, cycle, star, complete, \
             complete-bipartite, centipede or w)"
        ),
    };
    Ok(fam)
}

pub fn build(name: &str, params: &[usize]) -> Result<Graph> {
    let fam = parse_family(name, params)?;
    Ok(build_family(&fam)?)
}
