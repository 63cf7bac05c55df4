//! `signsum solve` — maximize the signed k-term subset sum of a stored
//! configuration with the chosen method.

use anyhow::bail;
use clap::Args;
use serde::Serialize;
use std::path::PathBuf;

use signsum_core::exact::{max_over_selections, max_over_selections_planar};
use signsum_core::heur::{bang_ascent, cap_greedy_selection};
use signsum_core::SolveResult;

use crate::config_file::read_config;
use crate::output::fmt17;

#[derive(Args)]
pub struct SolveArgs {
    /// Configuration file (text or JSON)
    #[arg(long)]
    pub config: PathBuf,
    /// Selection size
    #[arg(long)]
    pub k: usize,
    /// exact | planar | bang | cap-greedy
    #[arg(long, default_value = "exact")]
    pub method: String,
    /// Seed for randomized methods (bang start signs)
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Machine-readable output
    #[arg(long)]
    pub json: bool,
}

#[derive(Serialize)]
struct SolveOutput {
    d: usize,
    n: usize,
    k: usize,
    method: String,
    value: f64,
    /// 1-based, to match the human-facing convention
    indices: Vec<usize>,
    signs: Vec<i8>,
    certificate: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    guaranteed: Option<bool>,
}

fn to_output(d: usize, n: usize, k: usize, method: &str, r: &SolveResult) -> SolveOutput {
    SolveOutput {
        d,
        n,
        k,
        method: method.to_string(),
        value: r.value,
        indices: r.selection.indices().iter().map(|i| i + 1).collect(),
        signs: r.selection.signs().to_vec(),
        certificate: r
            .certificate
            .map(|c| c.as_str().to_string())
            .unwrap_or_else(|| "none".to_string()),
        min_margin: None,
        cap_radius: None,
        cap_count: None,
        guaranteed: None,
    }
}

pub fn run(args: SolveArgs) -> anyhow::Result<()> {
    let file = read_config(&args.config)?;
    let cfg = &file.config;
    let (d, n, k) = (cfg.dim(), cfg.len(), args.k);

    let out = match args.method.as_str() {
        "exact" => to_output(d, n, k, "exact", &max_over_selections(cfg, k)?),
        "planar" => to_output(d, n, k, "planar", &max_over_selections_planar(cfg, k)?),
        "bang" => {
            if k != n {
                return Err(signsum_core::Error::InvalidParameter(format!(
                    "bang chooses signs for the full system; needs k = n \
                     (got k={k}, n={n}); use exact or cap-greedy for k < n"
                ))
                .into());
            }
            let bang = bang_ascent(cfg, None, args.seed)?;
            let mut out = to_output(d, n, k, "bang", &bang.result);
            out.min_margin = Some(bang.certificate.min_margin);
            out
        }
        "cap-greedy" => {
            let greedy = cap_greedy_selection(cfg, k)?;
            let mut out = to_output(d, n, k, "cap-greedy", &greedy.result);
            out.cap_radius = Some(greedy.cap_radius);
            out.cap_count = Some(greedy.cap_count);
            out.guaranteed = Some(greedy.guaranteed);
            out
        }
        other => bail!("unknown method '{other}' (exact | planar | bang | cap-greedy)"),
    };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("method       {}", out.method);
        println!("value        {}", fmt17(out.value));
        let sel: Vec<String> = out
            .indices
            .iter()
            .zip(&out.signs)
            .map(|(i, s)| format!("{}{i}", if *s > 0 { '+' } else { '-' }))
            .collect();
        println!("selection    {}", sel.join(" "));
        println!("certificate  {}", out.certificate);
        if let Some(m) = out.min_margin {
            println!("min-margin   {}", fmt17(m));
        }
        if let Some(r) = out.cap_radius {
            println!("cap-radius   {}", fmt17(r));
            println!("cap-count    {}", out.cap_count.unwrap_or(0));
            println!("guaranteed   {}", out.guaranteed.unwrap_or(false));
        }
    }
    Ok(())
}
