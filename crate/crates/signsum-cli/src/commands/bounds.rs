//! `signsum bounds` — every applicable closed-form bound at (d, n, k).

use clap::Args;
use serde::Serialize;

use signsum_core::bounds::bound_reports;
use signsum_core::BoundReport;

use crate::output::fmt17;

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Machine-readable output
    #[arg(long)]
    pub json: bool,
}

#[derive(Serialize)]
struct BoundRow {
    name: String,
    side: String,
    value: f64,
    validity: String,
    applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharp: Option<bool>,
    anchor: String,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        BoundRow {
            name: r.name.to_string(),
            side: r.side.as_str().to_string(),
            value: r.value,
            validity: r.validity.as_str().to_string(),
            applicable: r.applicable,
            sharp: r.sharp,
            anchor: r.anchor.to_string(),
        }
    }
}

pub fn run(args: BoundsArgs) -> anyhow::Result<()> {
    if args.d == 0 || args.n == 0 || args.k == 0 || args.k > args.n {
        return Err(signsum_core::Error::InvalidParameter(format!(
            "needs d >= 1 and 1 <= k <= n, got d={}, n={}, k={}",
            args.d, args.n, args.k
        ))
        .into());
    }
    let reports = bound_reports(args.d, args.n, args.k);
    if args.json {
        let rows: Vec<BoundRow> = reports.iter().map(BoundRow::from).collect();
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(());
    }
    println!(
        "{:<20} {:<6} {:<24} {:<16} {:<6} {:<6} anchor",
        "name", "side", "value", "validity", "appl", "sharp"
    );
    for r in &reports {
        let sharp = r.sharp.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<20} {:<6} {:<24} {:<16} {:<6} {:<6} {}",
            r.name,
            r.side.as_str(),
            fmt17(r.value),
            r.validity.as_str(),
            r.applicable,
            sharp,
            r.anchor
        );
    }
    Ok(())
}
