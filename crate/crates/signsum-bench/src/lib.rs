//! Benchmark-only crate; see `benches/solvers.rs`.
//!
//! Deterministic instance builders shared by the benchmarks live here so
//! the bench targets stay minimal.

use signsum_core::gen::gen_random_uniform;
use signsum_core::Configuration;

pub fn instance(d: usize, n: usize) -> Configuration {
    gen_random_uniform(d, n, 0xb0_0c_5e_ed ^ (d as u64) << 8 ^ n as u64).unwrap()
}
