//! Configuration generators: orthonormal systems and their stacked copies,
//! regular simplices, planar polygon-multiplicity systems, simplex ⊕
//! orthonormal unions, seeded uniform samples, zero-sum systems, and
//! separated systems.
//!
//! Randomized generators are pure functions of (parameters, seed): the RNG
//! state is local to each call. Separation conventions differ by generator:
//! [`gen_delta_separated`] separates in geodesic distance, while
//! [`gen_antipodal_separated`] separates in Euclidean (chordal) distance and
//! additionally keeps antipodes apart.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sphere::{norm, Configuration, UnitVector};
use crate::{Error, Result};

/// Parameters of one generator invocation; `generate` dispatches on the kind.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Orthonormal { d: usize, n: usize },
    OrthonormalCopies { d: usize, m: usize },
    Simplex { d: usize },
    PolygonMultiplicity { n: usize, k: usize },
    SimplexPlusOrthonormal { d: usize, h: usize },
    RandomUniform { d: usize, n: usize, seed: u64 },
    ZeroSum { d: usize, n: usize, seed: u64 },
    DeltaSeparated { d: usize, delta: f64, seed: u64 },
    AntipodalSeparated { d: usize, n: usize, delta: f64, seed: u64 },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Configuration> {
        match *self {
            GeneratorSpec::Orthonormal { d, n } => gen_orthonormal(d, n),
            GeneratorSpec::OrthonormalCopies { d, m } => gen_orthonormal_copies(d, m),
            GeneratorSpec::Simplex { d } => gen_simplex(d),
            GeneratorSpec::PolygonMultiplicity { n, k } => gen_polygon_multiplicity(n, k),
            GeneratorSpec::SimplexPlusOrthonormal { d, h } => {
                gen_simplex_plus_orthonormal(d, h)
            }
            GeneratorSpec::RandomUniform { d, n, seed } => gen_random_uniform(d, n, seed),
            GeneratorSpec::ZeroSum { d, n, seed } => gen_zero_sum(d, n, seed),
            GeneratorSpec::DeltaSeparated { d, delta, seed } => {
                gen_delta_separated(d, delta, seed)
            }
            GeneratorSpec::AntipodalSeparated { d, n, delta, seed } => {
                gen_antipodal_separated(d, n, delta, seed)
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GeneratorSpec::Orthonormal { .. } => "orthonormal",
            GeneratorSpec::OrthonormalCopies { .. } => "orthonormal-copies",
            GeneratorSpec::Simplex { .. } => "simplex",
            GeneratorSpec::PolygonMultiplicity { .. } => "polygon-multiplicity",
            GeneratorSpec::SimplexPlusOrthonormal { .. } => "simplex-plus-orthonormal",
            GeneratorSpec::RandomUniform { .. } => "random-uniform",
            GeneratorSpec::ZeroSum { .. } => "zero-sum",
            GeneratorSpec::DeltaSeparated { .. } => "delta-separated",
            GeneratorSpec::AntipodalSeparated { .. } => "antipodal-separated",
        }
    }
}

/// The first n standard basis vectors of R^d.
pub fn gen_orthonormal(d: usize, n: usize) -> Result<Configuration> {
    if n == 0 || n > d {
        return Err(Error::invalid(format!(
            "orthonormal generator needs 1 <= n <= d, got n={n}, d={d}"
        )));
    }
    Configuration::new((0..n).map(|i| UnitVector::basis(d, i)).collect())
}

/// Each of e_1, …, e_d repeated m times (grouped by basis vector), n = m·d.
pub fn gen_orthonormal_copies(d: usize, m: usize) -> Result<Configuration> {
    if d == 0 || m == 0 {
        return Err(Error::invalid(format!(
            "orthonormal copies need d >= 1 and m >= 1, got d={d}, m={m}"
        )));
    }
    let mut vectors = Vec::with_capacity(d * m);
    for i in 0..d {
        for _ in 0..m {
            vectors.push(UnitVector::basis(d, i));
        }
    }
    Configuration::new(vectors)
}

/// Vertex set of a regular d-simplex inscribed in S^{d−1}: d+1 unit vectors
/// with pairwise inner products −1/d and zero sum. Built by factoring the
/// Gram matrix: the leading d×d block is SPD, its Cholesky rows are the
/// first d vertices, and the last vertex is the negated sum.
pub fn gen_simplex(d: usize) -> Result<Configuration> {
    if d == 0 {
        return Err(Error::invalid("simplex generator needs d >= 1"));
    }
    let off = -1.0 / d as f64;
    let gram = |i: usize, j: usize| if i == j { 1.0 } else { off };
    let mut rows = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..=i {
            let partial: f64 = rows[i][..j].iter().zip(&rows[j][..j]).map(|(a, b)| a * b).sum();
            let s = gram(i, j) - partial;
            if i == j {
                rows[i][j] = s.sqrt();
            } else {
                rows[i][j] = s / rows[j][j];
            }
        }
    }
    let mut last = vec![0.0; d];
    for row in &rows {
        for (acc, c) in last.iter_mut().zip(row) {
            *acc -= c;
        }
    }
    let mut vectors: Vec<UnitVector> = rows
        .into_iter()
        .map(UnitVector::new)
        .collect::<Result<_>>()?;
    vectors.push(UnitVector::new(last)?);
    Configuration::new(vectors)
}

/// Planar system ω_n such that ±ω_n is the vertex set of the regular
/// 2n/(k−1)-gon with every vertex at multiplicity k−1: one vertex per
/// antipodal pair, each repeated k−1 times.
pub fn gen_polygon_multiplicity(n: usize, k: usize) -> Result<Configuration> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "polygon multiplicity generator needs k >= 2, got k={k}"
        )));
    }
    if n == 0 || !n.is_multiple_of(k - 1) {
        return Err(Error::invalid(format!(
            "(k-1) must divide n: got n={n}, k={k}"
        )));
    }
    let gon = 2 * n / (k - 1); // even, since (k-1) | n
    let mut vectors = Vec::with_capacity(n);
    for j in 0..gon / 2 {
        let angle = 2.0 * std::f64::consts::PI * j as f64 / gon as f64;
        for _ in 0..k - 1 {
            vectors.push(UnitVector::new(vec![angle.cos(), angle.sin()])?);
        }
    }
    Configuration::new(vectors)
}

/// Union of a regular simplex spanning the first h coordinates (h+1
/// vectors) and the standard basis of the orthogonal complement (d−h
/// vectors), n = d+1 in total. h must be even and at least 2; the h = 0
/// reading is rejected as ill-formed.
pub fn gen_simplex_plus_orthonormal(d: usize, h: usize) -> Result<Configuration> {
    if !h.is_multiple_of(2) || h == 0 {
        return Err(Error::invalid(format!(
            "subspace dimension h must be even and >= 2, got h={h}"
        )));
    }
    if h > d {
        return Err(Error::invalid(format!("h={h} exceeds d={d}")));
    }
    let simplex = gen_simplex(h)?;
    let mut vectors = Vec::with_capacity(d + 1);
    for v in simplex.vectors() {
        let mut coords = v.coords().to_vec();
        coords.resize(d, 0.0);
        vectors.push(UnitVector::new(coords)?);
    }
    for i in h..d {
        vectors.push(UnitVector::basis(d, i));
    }
    Configuration::new(vectors)
}

/// n independent uniform points of S^{d−1} (normalized Gaussian samples),
/// deterministic per seed.
pub fn gen_random_uniform(d: usize, n: usize, seed: u64) -> Result<Configuration> {
    if d == 0 || n == 0 {
        return Err(Error::invalid(format!(
            "uniform generator needs d >= 1 and n >= 1, got d={d}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors = (0..n).map(|_| random_unit(d, &mut rng)).collect();
    Configuration::new(vectors)
}

/// Unit vectors with ‖Σu_i‖ ≤ 1e−9, by alternating projection from a seeded
/// random start: subtract the mean, renormalize, repeat. Fails over to a
/// fresh seed after 10^4 iterations; reports non-convergence after 16 seeds.
pub fn gen_zero_sum(d: usize, n: usize, seed: u64) -> Result<Configuration> {
    if d == 0 || n < d + 1 {
        return Err(Error::invalid(format!(
            "zero-sum generator needs n >= d+1, got d={d}, n={n}"
        )));
    }
    'attempt: for attempt in 0..16u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, attempt));
        let mut vectors: Vec<Vec<f64>> = (0..n)
            .map(|_| random_unit(d, &mut rng).coords().to_vec())
            .collect();
        for _ in 0..10_000 {
            let mut sum = vec![0.0; d];
            for v in &vectors {
                for (acc, c) in sum.iter_mut().zip(v) {
                    *acc += c;
                }
            }
            if norm(&sum) <= 1e-12 {
                let vectors = vectors
                    .into_iter()
                    .map(UnitVector::new)
                    .collect::<Result<_>>()?;
                return Configuration::new(vectors);
            }
            for v in vectors.iter_mut() {
                for (c, m) in v.iter_mut().zip(&sum) {
                    *c -= m / n as f64;
                }
                let len = norm(v);
                if len < 1e-12 {
                    continue 'attempt; // degenerate collapse, restart
                }
                for c in v.iter_mut() {
                    *c /= len;
                }
            }
        }
    }
    Err(Error::NonConvergence(format!(
        "zero-sum projection failed for d={d}, n={n} after 16 seeds"
    )))
}

/// Greedy maximal-ish δ-separated set (geodesic separation): uniform random
/// candidates are accepted when at geodesic distance ≥ delta from every
/// accepted point; stops after 10^4·size consecutive rejections.
pub fn gen_delta_separated(d: usize, delta: f64, seed: u64) -> Result<Configuration> {
    if d < 2 {
        return Err(Error::invalid("delta-separated generator needs d >= 2"));
    }
    if !(delta > 0.0 && delta < std::f64::consts::FRAC_PI_2) {
        return Err(Error::invalid(format!(
            "separation delta {delta} outside (0, pi/2)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cos_delta = delta.cos();
    let mut accepted: Vec<UnitVector> = Vec::new();
    let mut rejections: u64 = 0;
    loop {
        let cand = random_unit(d, &mut rng);
        // geodesic dist >= delta  <=>  dot <= cos(delta)
        if accepted.iter().all(|p| p.dot(&cand) <= cos_delta) {
            accepted.push(cand);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= 10_000 * accepted.len().max(1) as u64 {
                break;
            }
        }
    }
    Configuration::new(accepted)
}

/// Greedy system with both ‖x_i − x_j‖ ≥ delta and ‖x_i + x_j‖ ≥ delta in
/// Euclidean distance; since ‖x−y‖² + ‖x+y‖² = 4 for unit vectors, every
/// 2-term signed sum of the output has norm ≤ √(4 − δ²). Errors if n points
/// are not found within the rejection budget.
pub fn gen_antipodal_separated(d: usize, n: usize, delta: f64, seed: u64) -> Result<Configuration> {
    if d < 2 {
        return Err(Error::invalid("antipodal-separated generator needs d >= 2"));
    }
    if n == 0 {
        return Err(Error::invalid("antipodal-separated generator needs n >= 1"));
    }
    if delta <= 0.0 {
        return Err(Error::invalid(format!(
            "separation delta {delta} must be positive"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<UnitVector> = Vec::new();
    let mut rejections: u64 = 0;
    while accepted.len() < n {
        let cand = random_unit(d, &mut rng);
        let ok = accepted.iter().all(|p| {
            let dot = p.dot(&cand);
            // ‖p−c‖² = 2−2⟨p,c⟩, ‖p+c‖² = 2+2⟨p,c⟩
            (2.0 - 2.0 * dot) >= delta * delta && (2.0 + 2.0 * dot) >= delta * delta
        });
        if ok {
            accepted.push(cand);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= 10_000 * accepted.len().max(1) as u64 {
                return Err(Error::NonConvergence(format!(
                    "found only {} of {n} points at separation {delta} in d={d}",
                    accepted.len()
                )));
            }
        }
    }
    Configuration::new(accepted)
}

pub(crate) fn mix_seed(seed: u64, salt: u64) -> u64 {
    // splitmix64 step keeps failover seeds decorrelated
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; the cosine half of the pair is enough here
    loop {
        let u1: f64 = rng.gen();
        if u1 > f64::MIN_POSITIVE {
            let u2: f64 = rng.gen();
            return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        }
    }
}

pub(crate) fn random_unit(d: usize, rng: &mut ChaCha8Rng) -> UnitVector {
    loop {
        let coords: Vec<f64> = (0..d).map(|_| gaussian(rng)).collect();
        if let Ok(v) = UnitVector::new(coords) {
            return v;
        }
    }
}
