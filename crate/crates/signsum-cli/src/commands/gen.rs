//! `signsum gen` — generate a configuration and write it to disk.

use anyhow::bail;
use clap::Args;
use std::path::PathBuf;

use signsum_core::GeneratorSpec;

use crate::config_file::{write_config, ConfigFile, Metadata};

#[derive(Args)]
pub struct GenArgs {
    /// Generator kind: orthonormal, orthonormal-copies, simplex,
    /// polygon-multiplicity (alias: polygon), simplex-plus-orthonormal,
    /// random-uniform (alias: random), zero-sum, delta-separated,
    /// antipodal-separated
    #[arg(long)]
    pub kind: String,
    /// Ambient dimension d
    #[arg(long)]
    pub d: Option<usize>,
    /// Number of vectors n
    #[arg(long)]
    pub n: Option<usize>,
    /// Copies per basis vector (orthonormal-copies)
    #[arg(long)]
    pub m: Option<usize>,
    /// Even simplex-subspace dimension (simplex-plus-orthonormal)
    #[arg(long)]
    pub h: Option<usize>,
    /// Selection size parameter (polygon-multiplicity)
    #[arg(long)]
    pub k: Option<usize>,
    /// Separation angle or distance (separated kinds)
    #[arg(long)]
    pub delta: Option<f64>,
    /// RNG seed for randomized kinds
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path (.json for the structured format); stdout when omitted
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn require<T: Copy>(value: Option<T>, kind: &str, flag: &str) -> anyhow::Result<T> {
    match value {
        Some(v) => Ok(v),
        None => bail!("kind '{kind}' requires --{flag}"),
    }
}

pub fn build_spec(args: &GenArgs) -> anyhow::Result<GeneratorSpec> {
    let kind = args.kind.as_str();
    Ok(match kind {
        "orthonormal" => GeneratorSpec::Orthonormal {
            d: require(args.d, kind, "d")?,
            n: require(args.n, kind, "n")?,
        },
        "orthonormal-copies" => GeneratorSpec::OrthonormalCopies {
            d: require(args.d, kind, "d")?,
            m: require(args.m, kind, "m")?,
        },
        "simplex" => GeneratorSpec::Simplex {
            d: require(args.d, kind, "d")?,
        },
        "polygon" | "polygon-multiplicity" => GeneratorSpec::PolygonMultiplicity {
            n: require(args.n, kind, "n")?,
            k: require(args.k, kind, "k")?,
        },
        "simplex-plus-orthonormal" => GeneratorSpec::SimplexPlusOrthonormal {
            d: require(args.d, kind, "d")?,
            h: require(args.h, kind, "h")?,
        },
        "random" | "random-uniform" => GeneratorSpec::RandomUniform {
            d: require(args.d, kind, "d")?,
            n: require(args.n, kind, "n")?,
            seed: args.seed,
        },
        "zero-sum" => GeneratorSpec::ZeroSum {
            d: require(args.d, kind, "d")?,
            n: require(args.n, kind, "n")?,
            seed: args.seed,
        },
        "delta-separated" => GeneratorSpec::DeltaSeparated {
            d: require(args.d, kind, "d")?,
            delta: require(args.delta, kind, "delta")?,
            seed: args.seed,
        },
        "antipodal-separated" => GeneratorSpec::AntipodalSeparated {
            d: require(args.d, kind, "d")?,
            n: require(args.n, kind, "n")?,
            delta: require(args.delta, kind, "delta")?,
            seed: args.seed,
        },
        other => bail!("unknown generator kind '{other}'"),
    })
}

pub fn run(args: GenArgs) -> anyhow::Result<()> {
    let spec = build_spec(&args)?;
    let config = spec.generate()?;
    let randomized = matches!(
        spec,
        GeneratorSpec::RandomUniform { .. }
            | GeneratorSpec::ZeroSum { .. }
            | GeneratorSpec::DeltaSeparated { .. }
            | GeneratorSpec::AntipodalSeparated { .. }
    );
    let file = ConfigFile {
        config,
        metadata: Metadata {
            kind: Some(spec.kind_name().to_string()),
            seed: randomized.then_some(args.seed),
        },
    };
    match &args.output {
        Some(path) => {
            write_config(path, &file)?;
            eprintln!(
                "wrote {} ({} vectors in R^{})",
                path.display(),
                file.config.len(),
                file.config.dim()
            );
        }
        None => print!("{}", crate::config_file::render_text(&file)),
    }
    Ok(())
}
