//! `signsum minimax` — search for a configuration minimizing the exact
//! inner maximum; reports an upper estimate of the minimax value.

use anyhow::bail;
use clap::Args;
use std::path::PathBuf;
use std::time::Instant;

use signsum_core::minimax::{estimate_c, InnerSolver, SearchSettings};

use crate::config_file::{write_config, ConfigFile, Metadata};
use crate::output::{append_csv, fmt17, ResultRow};

#[derive(Args)]
pub struct MinimaxArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Random restarts on top of the warm starts
    #[arg(long, default_value_t = 16)]
    pub restarts: usize,
    /// Maximum descent iterations per restart
    #[arg(long, default_value_t = 2000)]
    pub iters: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Inner solver: exact | planar | bang-multistart
    #[arg(long, default_value = "exact")]
    pub inner: String,
    /// Append a result row to this CSV
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the best configuration found to this path
    #[arg(long)]
    pub config_out: Option<PathBuf>,
}

pub fn run(args: MinimaxArgs) -> anyhow::Result<()> {
    let Some(inner) = InnerSolver::from_name(&args.inner) else {
        bail!("unknown inner solver '{}' (exact | planar | bang-multistart)", args.inner);
    };
    let settings = SearchSettings {
        restarts: args.restarts,
        max_iters: args.iters,
        seed: args.seed,
        inner,
        ..SearchSettings::default()
    };
    let started = Instant::now();
    let est = estimate_c(args.d, args.n, args.k, &settings)?;
    let runtime_ms = started.elapsed().as_millis();
    let iterations = est.trace.last().map(|&(it, _)| it as u64).unwrap_or(0);

    println!("value        {}", fmt17(est.value));
    println!("certificate  upper-estimate ({} inner)", est.inner_solver);
    println!("restarts     {}", est.restarts_used);
    println!("iterations   {iterations}");
    println!(
        "trace        {} accepted steps, initial {} final {}",
        est.trace.len().saturating_sub(1),
        fmt17(est.trace.first().map(|&(_, v)| v).unwrap_or(est.value)),
        fmt17(est.value)
    );

    if let Some(path) = &args.config_out {
        write_config(
            path,
            &ConfigFile {
                config: est.best_config.clone(),
                metadata: Metadata {
                    kind: Some("minimax-best".to_string()),
                    seed: Some(args.seed),
                },
            },
        )?;
        eprintln!("wrote best configuration to {}", path.display());
    }
    if let Some(path) = &args.output {
        append_csv(
            path,
            &[ResultRow {
                d: args.d,
                n: args.n,
                k: args.k,
                method: format!("minimax-{}", est.inner_solver),
                value: Some(est.value),
                seed: args.seed,
                iterations,
                runtime_ms,
                certificate: "upper-estimate".to_string(),
            }],
        )?;
    }
    Ok(())
}
