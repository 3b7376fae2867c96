//! Command-line front door: reproduce the feasibility table, run individual
//! certificates, explore violation sets, and merge everything into one
//! machine-readable report.
//!
//! Every JSON document carries a `schema` version and a `generated_unix`
//! timestamp isolated in the header; the payload below it is byte-identical
//! across runs with the same configuration.

pub mod commands;
pub mod table;

use anyhow::Context;
use ineqforge::explorer::GridSpec;
use ineqforge::rational::{parse_rational, Rational};
use serde::Serialize;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => anyhow::bail!("unknown format {other:?}; use json, csv, or text"),
        }
    }
}

/// Resolved run configuration shared by the subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_max: u32,
    pub grid: GridSpec,
    pub out_dir: PathBuf,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(
        n_max: u32,
        grid_lo: &str,
        grid_hi: &str,
        grid_steps: u32,
        n_values: &[u32],
        out_dir: PathBuf,
        format: OutputFormat,
    ) -> anyhow::Result<Self> {
        if n_max < 1 {
            anyhow::bail!("--n-max must be >= 1");
        }
        let lo: Rational = parse_rational(grid_lo).context("parsing --grid-lo")?;
        let hi: Rational = parse_rational(grid_hi).context("parsing --grid-hi")?;
        let grid = GridSpec::new(lo, hi, grid_steps, n_values.to_vec())?;
        Ok(RunConfig {
            n_max,
            grid,
            out_dir,
            format,
        })
    }
}

/// JSON envelope: schema version and timestamp in the header, deterministic
/// payload below.
#[derive(Debug, Serialize)]
pub struct Document<T: Serialize> {
    pub schema: u32,
    pub generated_unix: u64,
    pub payload: T,
}

impl<T: Serialize> Document<T> {
    pub fn new(payload: T) -> Self {
        let generated_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Document {
            schema: SCHEMA_VERSION,
            generated_unix,
            payload,
        }
    }
}

pub fn write_document<T: Serialize>(path: &Path, payload: T) -> anyhow::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)
            .with_context(|| format!("creating {}", parent.display()))?;
    }
    let doc = Document::new(payload);
    let json = serde_json::to_string_pretty(&doc)?;
    std::fs::write(path, json.as_bytes())
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Load a document written by `write_document` as a raw value, returning the
/// payload.
pub fn read_payload(path: &Path) -> anyhow::Result<serde_json::Value> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    value
        .get("payload")
        .cloned()
        .with_context(|| format!("{} has no payload field", path.display()))
}
