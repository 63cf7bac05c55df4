//! Shared test helpers: independent brute-force oracles and random
//! orthogonal maps. The oracles deliberately avoid the library's Gray-code
//! and sweep paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signsum_core::{Configuration, UnitVector};

/// Norm of Σ signs·u over `subset` — plain recomputation.
pub fn sum_norm(config: &Configuration, subset: &[usize], signs: &[i8]) -> f64 {
    let d = config.dim();
    let mut sum = vec![0.0f64; d];
    for (&i, &s) in subset.iter().zip(signs) {
        for (acc, c) in sum.iter_mut().zip(config.get(i).coords()) {
            *acc += f64::from(s) * c;
        }
    }
    sum.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Max over all 2^k sign patterns of a fixed subset (bitmask loop).
pub fn naive_max_signed_sum(config: &Configuration, subset: &[usize]) -> f64 {
    let k = subset.len();
    assert!(k <= 24, "oracle is for small instances");
    let mut best = f64::NEG_INFINITY;
    for mask in 0u64..(1 << k) {
        let signs: Vec<i8> = (0..k)
            .map(|j| if mask >> j & 1 == 1 { -1 } else { 1 })
            .collect();
        best = best.max(sum_norm(config, subset, &signs));
    }
    best
}

/// Max over all k-subsets and all 2^k sign patterns (recursive subsets).
pub fn naive_max_over_selections(config: &Configuration, k: usize) -> f64 {
    fn rec(config: &Configuration, k: usize, start: usize, acc: &mut Vec<usize>, best: &mut f64) {
        if acc.len() == k {
            *best = best.max(naive_max_signed_sum(config, acc));
            return;
        }
        for i in start..config.len() {
            acc.push(i);
            rec(config, k, i + 1, acc, best);
            acc.pop();
        }
    }
    let mut best = f64::NEG_INFINITY;
    rec(config, k, 0, &mut Vec::new(), &mut best);
    best
}

/// Random orthogonal d×d matrix via Gram-Schmidt on a Gaussian matrix.
pub fn random_rotation(d: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gauss = || loop {
        let u1: f64 = rng.gen();
        if u1 > f64::MIN_POSITIVE {
            let u2: f64 = rng.gen();
            return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        }
    };
    loop {
        let mut q: Vec<Vec<f64>> = (0..d).map(|_| (0..d).map(|_| gauss()).collect()).collect();
        let mut ok = true;
        for i in 0..d {
            for j in 0..i {
                let proj: f64 = q[i].iter().zip(&q[j]).map(|(a, b)| a * b).sum();
                let row_j = q[j].clone();
                for (a, b) in q[i].iter_mut().zip(&row_j) {
                    *a -= proj * b;
                }
            }
            let len: f64 = q[i].iter().map(|x| x * x).sum::<f64>().sqrt();
            if len < 1e-6 {
                ok = false;
                break;
            }
            for a in q[i].iter_mut() {
                *a /= len;
            }
        }
        if ok {
            return q;
        }
    }
}

/// Applies an orthogonal map to every vector of a configuration.
pub fn rotate_config(config: &Configuration, q: &[Vec<f64>]) -> Configuration {
    let rotated = config
        .vectors()
        .iter()
        .map(|v| {
            let coords: Vec<f64> = q
                .iter()
                .map(|row| row.iter().zip(v.coords()).map(|(a, b)| a * b).sum())
                .collect();
            UnitVector::new(coords).unwrap()
        })
        .collect();
    Configuration::new(rotated).unwrap()
}
