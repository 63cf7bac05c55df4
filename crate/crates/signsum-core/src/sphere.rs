//! Geometric primitives on the unit sphere S^{d-1}: unit vectors,
//! configurations, spherical caps, the normalized surface measure, and
//! unit-ball volume constants.
//!
//! Distances are spherical (geodesic) throughout: the distance between unit
//! vectors u, v is arccos⟨u, v⟩, and the cap C(x, r) is the set of points at
//! geodesic distance at most r from x, equivalently {y : ⟨x, y⟩ ≥ cos r}.

use crate::{Error, Result};

/// Constructors accept a vector as already-unit if its norm deviates from 1
/// by at most this much.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Vectors of norm below this threshold are rejected rather than normalized.
pub const ZERO_NORM_TOL: f64 = 1e-9;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// A point of S^{d-1}; the constructor guarantees |‖coords‖ − 1| ≤ 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    coords: Vec<f64>,
}

impl UnitVector {
    /// Normalizes `coords` to unit length. Rejects d = 0 and vectors of norm
    /// below [`ZERO_NORM_TOL`].
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("unit vector needs dimension d >= 1"));
        }
        let n = norm(&coords);
        if n < ZERO_NORM_TOL || !n.is_finite() {
            return Err(Error::ZeroVector { norm: n });
        }
        let mut coords = coords;
        if (n - 1.0).abs() > f64::EPSILON {
            for c in &mut coords {
                *c /= n;
            }
        }
        Ok(UnitVector { coords })
    }

    /// Accepts `coords` verbatim, requiring the norm to already be within
    /// [`UNIT_NORM_TOL`] of 1. Keeps the exact bytes, which makes file
    /// round-trips reproducible.
    pub fn from_unit(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("unit vector needs dimension d >= 1"));
        }
        let n = norm(&coords);
        if (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::invalid(format!(
                "vector norm {n:.17e} deviates from 1 by more than {UNIT_NORM_TOL:e}"
            )));
        }
        Ok(UnitVector { coords })
    }

    /// The i-th standard basis vector of R^d (0-based).
    pub fn basis(d: usize, i: usize) -> Self {
        assert!(i < d, "basis index {i} out of range for dimension {d}");
        let mut coords = vec![0.0; d];
        coords[i] = 1.0;
        UnitVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        assert_eq!(self.dim(), other.dim());
        dot(&self.coords, &other.coords)
    }

    pub fn negated(&self) -> UnitVector {
        UnitVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// An ordered list of n unit vectors sharing one dimension d. Order is
/// significant: indices are stable identifiers into the system.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    dim: usize,
    vectors: Vec<UnitVector>,
}

impl Configuration {
    pub fn new(vectors: Vec<UnitVector>) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::invalid("configuration needs n >= 1 vectors"));
        };
        let dim = first.dim();
        for v in &vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
        }
        Ok(Configuration { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn vectors(&self) -> &[UnitVector] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> &UnitVector {
        &self.vectors[i]
    }

    /// Σ_j signs[j] · u_{indices[j]}.
    pub fn signed_sum(&self, indices: &[usize], signs: &[i8]) -> Vec<f64> {
        debug_assert_eq!(indices.len(), signs.len());
        let mut sum = vec![0.0; self.dim];
        for (&i, &s) in indices.iter().zip(signs) {
            let s = f64::from(s);
            for (acc, c) in sum.iter_mut().zip(self.get(i).coords()) {
                *acc += s * c;
            }
        }
        sum
    }

    /// View of the 2n-element antipodal system u_1, −u_1, …, u_n, −u_n.
    pub fn antipodal(&self) -> AntipodalConfiguration<'_> {
        AntipodalConfiguration { base: self }
    }
}

/// The antipodal system ±ω_n of a base configuration: element 2i is u_i and
/// element 2i+1 is −u_i (0-based).
#[derive(Debug, Clone, Copy)]
pub struct AntipodalConfiguration<'a> {
    base: &'a Configuration,
}

impl<'a> AntipodalConfiguration<'a> {
    pub fn base(&self) -> &'a Configuration {
        self.base
    }

    pub fn len(&self) -> usize {
        2 * self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Decomposes element j into (base index, sign).
    pub fn signed(&self, j: usize) -> (usize, i8) {
        debug_assert!(j < self.len());
        (j / 2, if j.is_multiple_of(2) { 1 } else { -1 })
    }

    /// ⟨element j, x⟩ without materializing the negated vector.
    pub fn dot(&self, j: usize, x: &UnitVector) -> f64 {
        let (i, s) = self.signed(j);
        f64::from(s) * self.base.get(i).dot(x)
    }

    pub fn vector(&self, j: usize) -> UnitVector {
        let (i, s) = self.signed(j);
        if s > 0 {
            self.base.get(i).clone()
        } else {
            self.base.get(i).negated()
        }
    }
}

/// Spherical cap C(x, r): points at geodesic distance at most r from x.
#[derive(Debug, Clone)]
pub struct Cap {
    center: UnitVector,
    radius: f64,
}

impl Cap {
    pub fn new(center: UnitVector, radius: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&radius) {
            return Err(Error::invalid(format!(
                "cap radius {radius} outside [0, pi]"
            )));
        }
        Ok(Cap { center, radius })
    }

    pub fn center(&self) -> &UnitVector {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Membership test ⟨x, y⟩ ≥ cos r.
    pub fn contains(&self, y: &UnitVector) -> bool {
        self.center.dot(y) >= self.radius.cos()
    }
}

/// Volume κ_d of the unit ball B^d, via the recursion κ_d = (2π/d)·κ_{d−2}
/// with κ_0 = 1, κ_1 = 2.
pub fn ball_volume(d: usize) -> Result<f64> {
    if d == 0 {
        return Err(Error::invalid("ball volume needs d >= 1"));
    }
    let mut k = if d.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut i = if d.is_multiple_of(2) { 0 } else { 1 };
    while i < d {
        i += 2;
        k *= 2.0 * std::f64::consts::PI / i as f64;
    }
    Ok(k)
}

/// κ_{d−1}/(d·κ_d), computed by the stable ratio recursion
/// g_d = κ_d/κ_{d−1} = 2π/(d·g_{d−1}), g_1 = 2. Gautschi's inequality pins
/// the value strictly between 1/√(2πd) and √(d+2)/(d·√(2π)).
pub fn kappa_ratio(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::invalid("kappa ratio needs d >= 2"));
    }
    let mut g = 2.0; // κ_1/κ_0
    for i in 2..=d {
        g = 2.0 * std::f64::consts::PI / (i as f64 * g);
    }
    Ok(1.0 / (d as f64 * g))
}

/// Normalized surface measure σ(C_r) of a cap of radius r in S^{d−1}:
/// ((d−1)·κ_{d−1}/(d·κ_d)) ∫_0^r sin^{d−2}θ dθ, by adaptive quadrature to
/// absolute error ≤ 1e−12.
pub fn cap_measure(d: usize, r: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::invalid("cap measure needs d >= 2"));
    }
    if !(0.0..=std::f64::consts::PI).contains(&r) {
        return Err(Error::invalid(format!("cap radius {r} outside [0, pi]")));
    }
    let coef = (d as f64 - 1.0) * kappa_ratio(d)?;
    let p = (d - 2) as i32;
    let integral = adaptive_simpson(&|t: f64| t.sin().powi(p), 0.0, r, 5e-14);
    Ok((coef * integral).clamp(0.0, 1.0))
}

/// Inverts [`cap_measure`] for a target measure in (0, 1/2] by bisection on
/// [0, π/2]; the result satisfies |σ(C_r) − target| ≤ 1e−10.
pub fn cap_radius_for_measure(d: usize, target: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::invalid("cap radius inversion needs d >= 2"));
    }
    if !(target > 0.0 && target <= 0.5) {
        return Err(Error::invalid(format!(
            "target measure {target} outside (0, 1/2]"
        )));
    }
    let (mut lo, mut hi) = (0.0_f64, std::f64::consts::FRAC_PI_2);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if cap_measure(d, mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Geodesic distance arccos(clamp(⟨u, v⟩, −1, 1)); the clamp guards against
/// NaN from inner products a rounding error outside [−1, 1].
pub fn geodesic_distance(u: &UnitVector, v: &UnitVector) -> Result<f64> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(dot(u.coords(), v.coords()).clamp(-1.0, 1.0).acos())
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (fa, fb) = (f(a), f(b));
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    simpson_step(f, a, fa, m, fm, b, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (left, lm, flm) = simpson(f, a, fa, m, fm);
    let (right, rm, frm) = simpson(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1)
            + simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1)
    }
}
