use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// JSON lines: one object per row, then a summary object.
    Json,
    /// Tab-separated rows with `#`-prefixed summary lines.
    Tsv,
    /// Bare graph6 (graph-producing commands only).
    Graph6,
    /// Edge list (graph-producing commands only).
    Edges,
}

/// Everything that determines a report. Echoed into each one.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub params: Map<String, Value>,
    pub ceiling: usize,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    /// Not echoed: reports are identical for every worker count.
    #[serde(skip)]
    pub workers: usize,
}

/// What a command hands back for printing.
#[derive(Debug, Default)]
pub struct Outcome {
    pub rows: Vec<Value>,
    pub summary: Map<String, Value>,
    pub message: Option<String>,
    /// An asserted property failed (exit code 2).
    pub failed: bool,
    /// Replaces the report entirely for `graph6` / `edges` output.
    pub graph_text: Option<String>,
}

impl Outcome {
    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.summary.insert(
            key.to_string(),
            serde_json::to_value(v).expect("report values serialize"),
        );
    }

    pub fn push(&mut self, row: impl Serialize) {
        self.rows
            .push(serde_json::to_value(row).expect("report rows serialize"));
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.replace(['\t', '\n'], " "),
        other => other.to_string(),
    }
}

pub fn emit(
    out: &mut impl Write,
    cfg: &RunConfig,
    outcome: &Outcome,
    elapsed: Option<Duration>,
) -> Result<()> {
    if let Some(text) = &outcome.graph_text {
        out.write_all(text.as_bytes())?;
        if !text.ends_with('\n') {
            writeln!(out)?;
        }
        return Ok(());
    }
    let mut head = Map::new();
    head.insert("task".into(), Value::from(cfg.command.clone()));
    head.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    head.insert("config".into(), serde_json::to_value(cfg)?);
    head.insert(
        "status".into(),
        Value::from(if outcome.failed { "fail" } else { "ok" }),
    );
    if let Some(m) = &outcome.message {
        head.insert("message".into(), Value::from(m.clone()));
    }
    head.insert("rows".into(), Value::from(outcome.rows.len()));
    head.insert("summary".into(), Value::Object(outcome.summary.clone()));
    if let Some(d) = elapsed {
        head.insert("elapsed_ms".into(), Value::from(d.as_millis() as u64));
    }
    match cfg.format {
        Format::Tsv => {
            if let Some(Value::Object(first)) = outcome.rows.first() {
                let cols: Vec<&String> = first.keys().collect();
                let header: Vec<&str> = cols.iter().map(|s| s.as_str()).collect();
                writeln!(out, "{}", header.join("\t"))?;
                for row in &outcome.rows {
                    let cells: Vec<String> = cols
                        .iter()
                        .map(|c| row.get(c.as_str()).map(tsv_cell).unwrap_or_default())
                        .collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
            }
            for (k, v) in &head {
                writeln!(out, "# {k}\t{}", tsv_cell(v))?;
            }
        }
        _ => {
            for row in &outcome.rows {
                writeln!(out, "{}", serde_json::to_string(row)?)?;
            }
            writeln!(out, "{}", serde_json::to_string(&Value::Object(head))?)?;
        }
    }
    Ok(())
}
