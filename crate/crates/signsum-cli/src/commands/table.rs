//! `signsum table` — cross-product of (d, n, k) ranges × methods, one CSV
//! row per cell; failed cells are recorded with an error marker and the run
//! continues. For solver methods one random configuration is generated per
//! (d, n) cell — fixed across k, so monotonicity in k is visible across
//! rows.

use anyhow::{bail, Context};
use clap::Args;
use rayon::prelude::*;
use std::path::PathBuf;
use std::time::Instant;

use signsum_core::bounds::{exact_lower_bounds, trivial_upper};
use signsum_core::exact::{max_over_selections, max_over_selections_planar};
use signsum_core::gen::gen_random_uniform;
use signsum_core::heur::{bang_ascent, cap_greedy_selection};
use signsum_core::{Configuration, Error as CoreError};

use crate::output::{write_csv, ResultRow};

#[derive(Args)]
pub struct TableArgs {
    /// Dimension range, e.g. `2`, `2..4`, or `2,3,5`
    #[arg(long, value_name = "RANGE")]
    pub d_range: String,
    /// Vector-count range
    #[arg(long, value_name = "RANGE")]
    pub n_range: String,
    /// Selection-size range
    #[arg(long, value_name = "RANGE")]
    pub k_range: String,
    /// Comma- or plus-separated: exact, planar, bang, cap-greedy, bounds
    #[arg(long, default_value = "exact")]
    pub methods: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output CSV path (overwritten)
    #[arg(short, long)]
    pub output: PathBuf,
}

pub fn parse_range(spec: &str) -> anyhow::Result<Vec<usize>> {
    let spec = spec.trim();
    if let Some((a, b)) = spec.split_once("..") {
        let a: usize = a.trim().parse().context("range start")?;
        let b: usize = b.trim().parse().context("range end")?;
        if a > b {
            bail!("empty range {spec:?}");
        }
        return Ok((a..=b).collect());
    }
    spec.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad range item {t:?}")))
        .collect()
}

fn cell_seed(seed: u64, d: usize, n: usize) -> u64 {
    let mut z = seed ^ (d as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (n as u64) << 32;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z ^ (z >> 31)
}

fn error_token(err: &CoreError) -> &'static str {
    match err {
        CoreError::BudgetExceeded { .. } => "error:budget-exceeded",
        CoreError::NonConvergence(_) => "error:non-convergence",
        _ => "error:invalid-parameter",
    }
}

fn solver_rows(
    d: usize,
    n: usize,
    k: usize,
    method: &str,
    config: &Configuration,
    seed: u64,
) -> Vec<ResultRow> {
    let started = Instant::now();
    let mut row = ResultRow {
        d,
        n,
        k,
        method: method.to_string(),
        value: None,
        seed,
        iterations: 0,
        runtime_ms: 0,
        certificate: String::new(),
    };
    let outcome: Result<(f64, String, u64), CoreError> = (|| {
        if k == 0 || k > n {
            return Err(CoreError::InvalidParameter(format!("k={k} outside 1..={n}")));
        }
        match method {
            "exact" => {
                let r = max_over_selections(config, k)?;
                Ok((r.value, "exhaustive".into(), 0))
            }
            "planar" => {
                let r = max_over_selections_planar(config, k)?;
                Ok((r.value, "planar-sweep".into(), 0))
            }
            "bang" => {
                if k != n {
                    return Err(CoreError::InvalidParameter(
                        "bang needs k = n".to_string(),
                    ));
                }
                let out = bang_ascent(config, None, seed)?;
                Ok((out.result.value, "heuristic".into(), out.flips as u64))
            }
            "cap-greedy" => {
                let out = cap_greedy_selection(config, k)?;
                Ok((out.result.value, "heuristic".into(), 0))
            }
            other => Err(CoreError::InvalidParameter(format!("unknown method {other}"))),
        }
    })();
    match outcome {
        Ok((value, certificate, iterations)) => {
            row.value = Some(value);
            row.certificate = certificate;
            row.iterations = iterations;
        }
        Err(err) => {
            eprintln!("table cell d={d} n={n} k={k} method={method}: {err}");
            row.certificate = error_token(&err).to_string();
        }
    }
    row.runtime_ms = started.elapsed().as_millis();
    vec![row]
}

fn bound_rows(d: usize, n: usize, k: usize, seed: u64) -> Vec<ResultRow> {
    let mut rows = Vec::new();
    let mut push = |method: String, value: f64, certificate: &str| {
        rows.push(ResultRow {
            d,
            n,
            k,
            method,
            value: Some(value),
            seed,
            iterations: 0,
            runtime_ms: 0,
            certificate: certificate.to_string(),
        });
    };
    if k == 0 || k > n {
        rows.push(ResultRow {
            d,
            n,
            k,
            method: "bounds".to_string(),
            value: None,
            seed,
            iterations: 0,
            runtime_ms: 0,
            certificate: "error:invalid-parameter".to_string(),
        });
        return rows;
    }
    for b in exact_lower_bounds(d, n, k) {
        push(b.name.to_string(), b.value, b.validity.as_str());
    }
    push("trivial-upper".to_string(), trivial_upper(k), "exact");
    rows
}

pub fn run(args: TableArgs) -> anyhow::Result<()> {
    let ds = parse_range(&args.d_range)?;
    let ns = parse_range(&args.n_range)?;
    let ks = parse_range(&args.k_range)?;
    let methods: Vec<String> = args
        .methods
        .split([',', '+'])
        .map(|m| m.trim().to_string())
        .filter(|m| !m.is_empty())
        .collect();
    if methods.is_empty() {
        bail!("no methods given");
    }
    for m in &methods {
        if !matches!(m.as_str(), "exact" | "planar" | "bang" | "cap-greedy" | "bounds") {
            bail!("unknown method '{m}' (exact | planar | bang | cap-greedy | bounds)");
        }
    }

    let mut cells = Vec::new();
    for &d in &ds {
        for &n in &ns {
            for &k in &ks {
                cells.push((d, n, k));
            }
        }
    }

    let rows: Vec<Vec<ResultRow>> = cells
        .par_iter()
        .map(|&(d, n, k)| {
            let mut cell_rows = Vec::new();
            let config = (d >= 1 && n >= 1).then(|| {
                gen_random_uniform(d, n, cell_seed(args.seed, d, n))
                    .expect("d, n >= 1 checked")
            });
            for method in &methods {
                if method == "bounds" {
                    cell_rows.extend(bound_rows(d, n, k, args.seed));
                } else if let Some(cfg) = &config {
                    cell_rows.extend(solver_rows(d, n, k, method, cfg, args.seed));
                }
            }
            cell_rows
        })
        .collect();

    let flat: Vec<ResultRow> = rows.into_iter().flatten().collect();
    write_csv(&args.output, &flat)?;
    eprintln!(
        "wrote {} rows ({} parameter cells x {} methods) to {}",
        flat.len(),
        cells.len(),
        methods.len(),
        args.output.display()
    );
    Ok(())
}
