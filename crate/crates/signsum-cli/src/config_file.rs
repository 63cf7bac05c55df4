//! Configuration file I/O in two equivalent formats.
//!
//! Text format: line 1 is `d n`; lines 2..n+1 hold d space-separated
//! decimals (17 significant digits on write, so coordinates round-trip
//! exactly); `#`-prefixed lines are metadata comments and are skipped on
//! load. JSON format: `{"d": …, "n": …, "vectors": [[…], …], "metadata":
//! {"kind": …, "seed": …}}`.
//!
//! Load-time normalization policy: a row whose norm deviates from 1 by at
//! most 1e−12 is kept byte-exact; a deviation in (1e−12, 1e−9] is
//! renormalized with a warning on stderr; anything beyond 1e−9 is an error.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use std::path::Path;

use signsum_core::{Configuration, UnitVector};

use crate::output::fmt17;

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct ConfigFile {
    pub config: Configuration,
    pub metadata: Metadata,
}

#[derive(Serialize, Deserialize)]
struct JsonConfig {
    d: usize,
    n: usize,
    vectors: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    metadata: Option<Metadata>,
}

pub fn write_config(path: &Path, file: &ConfigFile) -> anyhow::Result<()> {
    let json = path.extension().is_some_and(|e| e == "json");
    let body = if json {
        render_json(file)?
    } else {
        render_text(file)
    };
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn render_text(file: &ConfigFile) -> String {
    let cfg = &file.config;
    let mut out = format!("{} {}\n", cfg.dim(), cfg.len());
    for v in cfg.vectors() {
        let row: Vec<String> = v.coords().iter().map(|&c| fmt17(c)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(kind) = &file.metadata.kind {
        out.push_str(&format!("# kind: {kind}\n"));
    }
    if let Some(seed) = file.metadata.seed {
        out.push_str(&format!("# seed: {seed}\n"));
    }
    out
}

fn render_json(file: &ConfigFile) -> anyhow::Result<String> {
    let cfg = &file.config;
    let json = JsonConfig {
        d: cfg.dim(),
        n: cfg.len(),
        vectors: cfg.vectors().iter().map(|v| v.coords().to_vec()).collect(),
        metadata: if file.metadata.kind.is_some() || file.metadata.seed.is_some() {
            Some(file.metadata.clone())
        } else {
            None
        },
    };
    let mut body = serde_json::to_string_pretty(&json)?;
    body.push('\n');
    Ok(body)
}

pub fn read_config(path: &Path) -> anyhow::Result<ConfigFile> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let looks_json = raw.trim_start().starts_with('{');
    if looks_json {
        parse_json(&raw).with_context(|| format!("parsing {}", path.display()))
    } else {
        parse_text(&raw).with_context(|| format!("parsing {}", path.display()))
    }
}

fn parse_json(raw: &str) -> anyhow::Result<ConfigFile> {
    let json: JsonConfig = serde_json::from_str(raw)?;
    if json.vectors.len() != json.n {
        bail!("header says n={}, found {} vectors", json.n, json.vectors.len());
    }
    let mut vectors = Vec::with_capacity(json.n);
    for (i, row) in json.vectors.into_iter().enumerate() {
        if row.len() != json.d {
            bail!("vector {} has {} coordinates, expected d={}", i + 1, row.len(), json.d);
        }
        vectors.push(load_row(row, i)?);
    }
    Ok(ConfigFile {
        config: Configuration::new(vectors)?,
        metadata: json.metadata.unwrap_or_default(),
    })
}

fn parse_text(raw: &str) -> anyhow::Result<ConfigFile> {
    let mut metadata = Metadata::default();
    let mut data_lines = Vec::new();
    for line in raw.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(kind) = comment.strip_prefix("kind:") {
                metadata.kind = Some(kind.trim().to_string());
            } else if let Some(seed) = comment.strip_prefix("seed:") {
                metadata.seed = seed.trim().parse().ok();
            }
            continue;
        }
        data_lines.push(trimmed);
    }
    let Some(header) = data_lines.first() else {
        bail!("empty configuration file");
    };
    let head: Vec
        <usize> = header
        .split_whitespace()
        .map(|t| t.parse().context("header must be `d n`"))
        .collect::<anyhow::Result<_>>()?;
    if head.len() != 2 {
        bail!("header must be `d n`, got {header:?}");
    }
    let (d, n) = (head[0], head[1]);
    if data_lines.len() != n + 1 {
        bail!("expected {n} coordinate rows, found {}", data_lines.len() - 1);
    }
    let mut vectors = Vec::with_capacity(n);
    for (i, line) in data_lines[1..].iter().enumerate() {
        let coords: Vec<f64> = line
            .split_whitespace()
            .map(|t| t.parse().with_context(|| format!("row {}: bad number {t:?}", i + 1)))
            .collect::<anyhow::Result<_>>()?;
        if coords.len() != d {
            bail!("row {} has {} coordinates, expected d={d}", i + 1, coords.len());
        }
        vectors.push(load_row(coords, i)?);
    }
    Ok(ConfigFile {
        config: Configuration::new(vectors)?,
        metadata,
    })
}

fn load_row(coords: Vec<f64>, idx: usize) -> anyhow::Result<UnitVector> {
    let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
    let dev = (norm - 1.0).abs();
    if dev <= 1e-12 {
        return Ok(UnitVector::from_unit(coords)?);
    }
    if dev <= 1e-9 {
        eprintln!(
            "warning: row {} norm deviates by {dev:.3e}; renormalizing",
            idx + 1
        );
        return Ok(UnitVector::new(coords)?);
    }
    Err(signsum_core::Error::InvalidParameter(format!(
        "row {} norm deviates from 1 by {dev:.3e} (beyond 1e-9)",
        idx + 1
    ))
    .into())
}
