//! Closed-form lower and upper bounds on the extremal signed subset-sum
//! value c(d, n, k), each wrapped in a [`BoundReport`] carrying its side and
//! validity.
//!
//! Validity discipline: `Exact` bounds hold for every instance satisfying
//! the stated hypotheses; `AsymptoticOnly` bounds hold for sufficiently
//! large parameters with no explicit threshold and must never be asserted
//! against finite instances; `Conjectural` values are reference constants.

use crate::sphere::kappa_ratio;
use crate::{Error, Result};

/// First-branch constant of the general upper bound, 1/(8·48²).
pub const GENERAL_UPPER_ALPHA1: f64 = 1.0 / 18_432.0;

/// Second-branch constant of the general upper bound, 1/(64·36).
pub const GENERAL_UPPER_ALPHA2: f64 = 1.0 / 2_304.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    /// Holds for every instance meeting the stated hypotheses.
    Exact,
    /// Holds for sufficiently large parameters only; never assert on
    /// finite instances.
    AsymptoticOnly,
    /// Conjectured reference value.
    Conjectural,
}

impl Validity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Validity::Exact => "exact",
            Validity::AsymptoticOnly => "asymptotic-only",
            Validity::Conjectural => "conjectural",
        }
    }
}

/// A named bound value with its direction, validity, and origin.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: &'static str,
    pub value: f64,
    pub side: Side,
    pub validity: Validity,
    /// Human-readable origin of the bound (the argument it comes from).
    pub anchor: &'static str,
    /// False when the bound's hypothesis fails for these parameters.
    pub applicable: bool,
    /// For bounds with a known equality condition: whether it is met.
    pub sharp: Option<bool>,
}

/// Triangle inequality: c(d, n, k) ≤ k.
pub fn trivial_upper(k: usize) -> f64 {
    k as f64
}

/// c(d, n, k) ≥ √k, from sign-flip ascent applied to any k-subset.
pub fn sqrt_k_lower(k: usize) -> f64 {
    debug_assert!(k >= 1);
    (k as f64).sqrt()
}

/// Spherical-average lower bound 2k·κ_{d−1}/(d·κ_d) ≥ k·√(2/(πd)).
pub fn averaging_lower(d: usize, k: usize) -> Result<f64> {
    Ok(2.0 * k as f64 * kappa_ratio(d)?)
}

/// General lower bound max{k − 8·k^{(d+1)/(d−1)}·n^{−2/(d−1)}, √(2/π)·k/√d}
/// for d ≥ 2, n ≥ d, k ≥ 3.
pub fn general_lower(d: usize, n: usize, k: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::invalid("general lower bound needs d >= 2"));
    }
    if n < d {
        return Err(Error::invalid(format!("needs n >= d, got n={n}, d={d}")));
    }
    if k < 3 {
        return Err(Error::invalid(format!("needs k >= 3, got k={k}")));
    }
    let (df, nf, kf) = (d as f64, n as f64, k as f64);
    let cap_term = kf - 8.0 * kf.powf((df + 1.0) / (df - 1.0)) * nf.powf(-2.0 / (df - 1.0));
    let avg_term = (2.0 / std::f64::consts::PI).sqrt() / df.sqrt() * kf;
    Ok(cap_term.max(avg_term))
}

/// General upper bound, valid only for sufficiently large n:
/// k − α₁·k^{(d+1)/(d−1)}·n^{−2/(d−1)}/d² below the branch point
/// k = 6·100^{d−1}, and k − α₂·k^{(d+1)/(d−1)}·n^{−2/(d−1)} at or above it.
pub fn general_upper(d: usize, n: usize, k: usize) -> Result<BoundReport> {
    if d < 2 {
        return Err(Error::invalid("general upper bound needs d >= 2"));
    }
    if k < 3 || k > n {
        return Err(Error::invalid(format!(
            "needs 3 <= k <= n, got k={k}, n={n}"
        )));
    }
    let (df, nf, kf) = (d as f64, n as f64, k as f64);
    let shrink = kf.powf((df + 1.0) / (df - 1.0)) * nf.powf(-2.0 / (df - 1.0));
    let branch_point = 6.0 * 100f64.powi(d as i32 - 1);
    let value = if kf < branch_point {
        kf - GENERAL_UPPER_ALPHA1 / (df * df) * shrink
    } else {
        kf - GENERAL_UPPER_ALPHA2 * shrink
    };
    Ok(BoundReport {
        name: "general-upper",
        value,
        side: Side::Upper,
        validity: Validity::AsymptoticOnly,
        anchor: "separated-system construction, large n",
        applicable: true,
        sharp: None,
    })
}

/// Positive solution φ of φ·(k/n) = e^{−φ²/2}, i.e. φ = √(W₀(n²/k²)),
/// by Newton iteration with a bisection fallback; residual ≤ 1e−12.
pub fn lambert_phi(k: usize, n: usize) -> f64 {
    debug_assert!(k >= 1 && k <= n);
    let ratio = k as f64 / n as f64;
    let f = |phi: f64| phi * ratio - (-0.5 * phi * phi).exp();
    let fp = |phi: f64| ratio + phi * (-0.5 * phi * phi).exp();

    // seed: √W₀(1) at k = n, √log(n²/k² + 1) when n/k is large
    let w0_1 = 0.567_143_290_409_783_8_f64;
    let mut phi = w0_1.max((1.0 / (ratio * ratio)).ln_1p()).sqrt();
    for _ in 0..100 {
        let r = f(phi);
        if r.abs() <= 1e-13 {
            return phi;
        }
        phi -= r / fp(phi);
        if !(phi.is_finite() && phi > 0.0) {
            break;
        }
    }
    // monotone f: bisection fallback
    let mut lo = 0.0f64;
    let mut hi = 2.0f64;
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Large-k upper bound (4φ/√π)·k/√d with φ from [`lambert_phi`]; flagged
/// inapplicable when the hypothesis k > n·e^{−d/2}/√d fails.
pub fn large_k_upper(d: usize, n: usize, k: usize) -> Result<BoundReport> {
    if d < 2 {
        return Err(Error::invalid("large-k upper bound needs d >= 2"));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k={k} outside 1..={n}")));
    }
    let (df, nf, kf) = (d as f64, n as f64, k as f64);
    let phi = lambert_phi(k, n);
    let value = 4.0 * phi / std::f64::consts::PI.sqrt() * kf / df.sqrt();
    let applicable = kf > nf * (-0.5 * df).exp() / df.sqrt();
    Ok(BoundReport {
        name: "large-k-upper",
        value,
        side: Side::Upper,
        validity: Validity::AsymptoticOnly,
        anchor: "uniform-distribution cap estimate, large n",
        applicable,
        sharp: None,
    })
}

/// Welch coherence bound converted to the pair problem:
/// c(d, n, 2) ≥ √(2 + 2·√((n−d)/(d(n−1)))) for n ≥ d.
pub fn welch_pair_lower(d: usize, n: usize) -> Result<f64> {
    if d == 0 || n < 2 {
        return Err(Error::invalid("welch pair bound needs d >= 1, n >= 2"));
    }
    if n < d {
        return Err(Error::invalid(format!("needs n >= d, got n={n}, d={d}")));
    }
    let coherence = ((n - d) as f64 / (d as f64 * (n - 1) as f64)).sqrt();
    Ok((2.0 + 2.0 * coherence).sqrt())
}

/// Asymptotic two-sided pair bounds 2 − 0.51·n^{−2/(d−1)} < c(d, n, 2) <
/// 2 − 0.14·n^{−2/(d−1)}, valid for large d and n only.
pub fn pair_large_n_bounds(d: usize, n: usize) -> Result<(BoundReport, BoundReport)> {
    if d < 2 || n == 0 {
        return Err(Error::invalid("pair bounds need d >= 2, n >= 1"));
    }
    let shrink = (n as f64).powf(-2.0 / (d as f64 - 1.0));
    let mk = |name, value, side| BoundReport {
        name,
        value,
        side,
        validity: Validity::AsymptoticOnly,
        anchor: "antipodal cap packing, large d and n",
        applicable: true,
        sharp: None,
    };
    Ok((
        mk("pair-large-n-lower", 2.0 - 0.51 * shrink, Side::Lower),
        mk("pair-large-n-upper", 2.0 - 0.14 * shrink, Side::Upper),
    ))
}

/// Planar lower bound: k·cos((k−1)π/(2n)) for even k and
/// √(1 + (k−1)(k+1)·cos²((k−1)π/(2n))) for odd k.
///
/// The `sharp` flag records the divisibility condition (k−1) | n under
/// which the bound is classically claimed to be attained by the
/// polygon-multiplicity system. Enumeration confirms attainment for
/// k ∈ {2, 3} but refutes it for k ≥ 4, where the multiplicity-(k−1)
/// system admits a concentrated selection of norm
/// √((k−1)² + 1 + 2(k−1)cos((k−1)π/n)) above the bound; see the
/// polygon-multiplicity tests.
pub fn planar_lower(n: usize, k: usize) -> Result<BoundReport> {
    if k < 2 || k > n {
        return Err(Error::invalid(format!(
            "planar bound needs 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    let c = ((k as f64 - 1.0) * std::f64::consts::PI / (2.0 * n as f64)).cos();
    let value = if k.is_multiple_of(2) {
        k as f64 * c
    } else {
        (1.0 + ((k * k - 1) as f64) * c * c).sqrt()
    };
    Ok(BoundReport {
        name: "planar-lower",
        value,
        side: Side::Lower,
        validity: Validity::Exact,
        anchor: "circular ordering pigeonhole",
        applicable: true,
        sharp: Some(n.is_multiple_of(k - 1)),
    })
}

/// Minimum of ‖u_1 + … + u_k‖ over unit vectors confined to an arc of
/// angular length phi: k·cos(φ/2) for even k, √(1 + (k²−1)·cos²(φ/2)) for
/// odd k.
pub fn arc_min_norm(k: usize, phi: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::invalid("arc minimum needs k >= 1"));
    }
    if !(0.0..=std::f64::consts::PI).contains(&phi) {
        return Err(Error::invalid(format!("arc length {phi} outside [0, pi]")));
    }
    let c = (0.5 * phi).cos();
    Ok(if k.is_multiple_of(2) {
        k as f64 * c
    } else {
        (1.0 + ((k * k - 1) as f64) * c * c).sqrt()
    })
}

/// Zero-sum full-selection bound: for even d and Σu_i = 0 (n = d+1), some
/// signed full sum has norm ≥ √(d+2). Conditional on the zero-sum
/// hypothesis; rejects odd d.
pub fn zero_sum_lower(d: usize) -> Result<BoundReport> {
    if d == 0 || !d.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "zero-sum bound needs even d >= 2, got d={d}"
        )));
    }
    Ok(BoundReport {
        name: "zero-sum-lower",
        value: (d as f64 + 2.0).sqrt(),
        side: Side::Lower,
        validity: Validity::Exact,
        anchor: "sign-flip margins on zero-sum systems (even d, sum 0)",
        applicable: true,
        sharp: None,
    })
}

/// Reference value √(d+2) for c(d, d+1, d+1): proven in the plane, a
/// conjectured equality elsewhere.
pub fn conjecture_value(d: usize) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::invalid("reference value needs d >= 1"));
    }
    Ok(BoundReport {
        name: "simplex-conjecture",
        value: (d as f64 + 2.0).sqrt(),
        side: Side::Lower,
        validity: if d == 2 {
            Validity::Exact
        } else {
            Validity::Conjectural
        },
        anchor: "simplex plus orthonormal complement",
        applicable: true,
        sharp: None,
    })
}

/// Cardinality window (√(2π)·sin^{−(d−1)}δ, 23(d−1)^{3/2}·sin^{−(d−1)}(δ/2)·2^{−(d−1)/2})
/// for a maximal δ-separated set, δ < π/2.
pub fn separated_cardinality_bounds(d: usize, delta: f64) -> Result<(f64, f64)> {
    if d < 2 {
        return Err(Error::invalid("cardinality bounds need d >= 2"));
    }
    if !(delta > 0.0 && delta < std::f64::consts::FRAC_PI_2) {
        return Err(Error::invalid(format!(
            "separation delta {delta} outside (0, pi/2)"
        )));
    }
    let p = d as i32 - 1;
    let lower = (2.0 * std::f64::consts::PI).sqrt() / delta.sin().powi(p);
    let upper = 23.0 * ((d - 1) as f64).powf(1.5) / (0.5 * delta).sin().powi(p)
        / (2.0f64).powf((d as f64 - 1.0) / 2.0);
    Ok((lower, upper))
}

/// Unconditional exact lower bounds applicable at (d, n, k); safe to
/// compare against any configuration's exact value.
pub fn exact_lower_bounds(d: usize, n: usize, k: usize) -> Vec<BoundReport> {
    let mut out = Vec::new();
    let mk = |name, value, anchor| BoundReport {
        name,
        value,
        side: Side::Lower,
        validity: Validity::Exact,
        anchor,
        applicable: true,
        sharp: None,
    };
    if k >= 1 {
        out.push(mk("sqrt-k", sqrt_k_lower(k), "sign-flip ascent margins"));
    }
    if d >= 2 && k >= 1 && k <= n {
        if let Ok(v) = averaging_lower(d, k) {
            out.push(mk("averaging", v, "spherical averaging"));
        }
    }
    if d >= 2 && n >= d && k >= 3 {
        if let Ok(v) = general_lower(d, n, k) {
            out.push(mk("general-lower", v, "cap ratio pigeonhole / averaging"));
        }
    }
    if k == 2 && n >= d && n >= 2 && d >= 1 {
        if let Ok(v) = welch_pair_lower(d, n) {
            out.push(mk("welch-pair", v, "welch coherence bound"));
        }
    }
    if d == 2 && k >= 2 && k <= n {
        if let Ok(r) = planar_lower(n, k) {
            out.push(r);
        }
    }
    out
}

/// Every applicable bound at (d, n, k): unconditional exact bounds, the
/// trivial upper bound, asymptotic-only reports, and the conditional or
/// conjectural reference rows for k = n = d+1.
pub fn bound_reports(d: usize, n: usize, k: usize) -> Vec<BoundReport> {
    let mut out = exact_lower_bounds(d, n, k);
    out.push(BoundReport {
        name: "trivial-upper",
        value: trivial_upper(k),
        side: Side::Upper,
        validity: Validity::Exact,
        anchor: "triangle inequality",
        applicable: true,
        sharp: None,
    });
    if d >= 2 && k >= 3 && k <= n {
        if let Ok(r) = general_upper(d, n, k) {
            out.push(r);
        }
    }
    if d >= 2 && k >= 1 && k <= n {
        if let Ok(r) = large_k_upper(d, n, k) {
            out.push(r);
        }
    }
    if k == 2 && d >= 2 {
        if let Ok((lo, hi)) = pair_large_n_bounds(d, n) {
            out.push(lo);
            out.push(hi);
        }
    }
    if k == n && n == d + 1 {
        if let Ok(r) = conjecture_value(d) {
            out.push(r);
        }
        if d.is_multiple_of(2) {
            if let Ok(r) = zero_sum_lower(d) {
                out.push(r);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trivial_and_sqrt_k() {
        assert_eq!(trivial_upper(1), 1.0);
        assert_eq!(trivial_upper(7), 7.0);
        assert_eq!(trivial_upper(30), 30.0);
        assert_eq!(sqrt_k_lower(4), 2.0);
        assert!((sqrt_k_lower(2) - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(sqrt_k_lower(1), 1.0);
    }

    #[test]
    fn general_lower_examples() {
        // d=4: exponents 5/3 and 2/3, recomputed term by term
        let term1 = 3.0 - 8.0 * 3f64.powf(5.0 / 3.0) * 1000f64.powf(-2.0 / 3.0);
        let term2 = (2.0 / PI).sqrt() / 2.0 * 3.0;
        let v = general_lower(4, 1000, 3).unwrap();
        assert!((v - term1.max(term2)).abs() < 1e-12);
        assert!((v - 2.50078).abs() < 1e-4, "got {v}");

        // d=2: exponents 3 and 2
        let v = general_lower(2, 100, 3).unwrap();
        let term1 = 3.0 - 8.0 * 27.0 / 10_000.0;
        assert!((v - term1).abs() < 1e-12);
        assert!((v - 2.9784).abs() < 1e-10);

        assert!(general_lower(2, 100, 2).is_err());
        assert!(general_lower(1, 100, 3).is_err());
        assert!(general_lower(3, 2, 3).is_err());
    }

    #[test]
    fn general_upper_branches() {
        // d=2, n=1e6, k=3: first branch (3 < 600). The shrink term
        // 3.662e-16 sits below one ulp of 3.0, so assert the term itself.
        let shrink = GENERAL_UPPER_ALPHA1 / 4.0 * 27.0 * 1e-12;
        assert!((shrink - 3.662e-16).abs() < 1e-19, "shrink {shrink}");
        let r = general_upper(2, 1_000_000, 3).unwrap();
        assert!((r.value - (3.0 - shrink)).abs() < 1e-18);
        assert_eq!(r.validity, Validity::AsymptoticOnly);

        // d=2, n=1e6, k=700: second branch (700 >= 600)
        let r = general_upper(2, 1_000_000, 700).unwrap();
        let expected = 700.0 - GENERAL_UPPER_ALPHA2 * 700f64.powi(3) * 1e-12;
        assert!((r.value - expected).abs() < 1e-9);
        assert!((700.0 - r.value - 1.4887e-7).abs() < 1e-10);
    }

    /// Independent bisection on φ·(k/n) = e^{−φ²/2}.
    fn phi_bisect(k: usize, n: usize) -> f64 {
        let ratio = k as f64 / n as f64;
        let f = |p: f64| p * ratio - (-0.5 * p * p).exp();
        let (mut lo, mut hi) = (0.0f64, 64.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn lambert_phi_examples() {
        let phi = lambert_phi(10, 10);
        assert!((phi - 0.7530891).abs() < 1e-6);
        assert!((phi - phi_bisect(10, 10)).abs() < 1e-10);

        let phi = lambert_phi(5, 10); // n = 2k → √(W₀(4))
        assert!((phi - phi_bisect(5, 10)).abs() < 1e-10);
        assert!((phi * phi * (phi * phi).exp() / (phi * phi) - 4.0 / (phi * phi)).abs() < 1.0);
        assert!((phi - 1.09643).abs() < 1e-4, "got {phi}");

        for (k, n) in [(1, 1), (1, 1000), (3, 7), (250, 1000)] {
            let phi = lambert_phi(k, n);
            let residual = phi * k as f64 / n as f64 - (-0.5 * phi * phi).exp();
            assert!(residual.abs() <= 1e-12, "residual {residual} at k={k} n={n}");
        }
    }

    #[test]
    fn large_k_upper_examples() {
        // k = n, d = 4: (4·√W₀(1)/√π)/2 ≈ 0.849770 per unit k
        let n = 100;
        let r = large_k_upper(4, n, n).unwrap();
        let per_k = r.value / n as f64;
        let expected = 4.0 * phi_bisect(n, n) / PI.sqrt() / 2.0;
        assert!((per_k - expected).abs() < 1e-12);
        assert!((per_k - 0.849770).abs() < 1e-6, "got {per_k}");

        // d=3, k=n=12
        let r = large_k_upper(3, 12, 12).unwrap();
        let expected = 4.0 * phi_bisect(12, 12) / PI.sqrt() * 12.0 / 3f64.sqrt();
        assert!((r.value - expected).abs() < 1e-9);
        assert!((r.value - 11.775).abs() < 1e-2, "got {}", r.value);
        assert!(r.applicable);

        // ratio window: 4·0.7530/√π ≤ value/(k/√d) < 4·√d/√π
        let ratio = r.value / (12.0 / 3f64.sqrt());
        assert!(ratio >= 4.0 * 0.7530 / PI.sqrt());
        assert!(ratio < 4.0 * 3f64.sqrt() / PI.sqrt());

        // hypothesis failure is a flag, not an error
        let r = large_k_upper(16, 1_000_000, 1).unwrap();
        assert!(!r.applicable);
    }

    #[test]
    fn welch_pair_examples() {
        assert!((welch_pair_lower(3, 3).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let v = welch_pair_lower(3, 4).unwrap();
        assert!((v - (2.0f64 + 2.0 / 3.0).sqrt()).abs() < 1e-15);
        assert!((v - 1.6329932).abs() < 1e-7);
        let v = welch_pair_lower(3, 5).unwrap();
        let oracle = (2.0 + 2.0 * (2.0f64 / 12.0).sqrt()).sqrt();
        assert!((v - oracle).abs() < 1e-15);
        assert!((v - 1.6782421).abs() < 1e-6, "got {v}");
        assert!(welch_pair_lower(4, 3).is_err());
    }

    #[test]
    fn pair_large_n_examples() {
        let (lo, hi) = pair_large_n_bounds(10, 1_000_000).unwrap();
        assert!((lo.value - 1.976328).abs() < 1e-5, "got {}", lo.value);
        assert!((hi.value - 1.993502).abs() < 1e-5, "got {}", hi.value);
        assert!(lo.value < hi.value);
        assert_eq!(lo.validity, Validity::AsymptoticOnly);
        assert_eq!(hi.validity, Validity::AsymptoticOnly);
    }

    #[test]
    fn planar_lower_examples() {
        let r = planar_lower(3, 2).unwrap();
        assert!((r.value - 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.sharp, Some(true));

        let r = planar_lower(6, 3).unwrap();
        assert!((r.value - 7f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.sharp, Some(true));

        let r = planar_lower(4, 3).unwrap();
        assert!((r.value - 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.sharp, Some(true));

        let r = planar_lower(5, 3).unwrap();
        assert_eq!(r.sharp, Some(false));

        assert!(planar_lower(5, 1).is_err());
        assert!(planar_lower(3, 4).is_err());
    }

    #[test]
    fn arc_min_norm_examples() {
        assert!((arc_min_norm(2, PI / 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((arc_min_norm(3, 0.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(arc_min_norm(4, PI).unwrap().abs() < 1e-15);
        assert!((arc_min_norm(1, PI).unwrap() - 1.0).abs() < 1e-15);
        assert!(arc_min_norm(2, PI + 0.1).is_err());
        assert!(arc_min_norm(0, 1.0).is_err());
    }

    #[test]
    fn zero_sum_and_conjecture_values() {
        let r = conjecture_value(2).unwrap();
        assert_eq!(r.value, 2.0);
        assert_eq!(r.validity, Validity::Exact); // proven in the plane

        let r = zero_sum_lower(4).unwrap();
        assert!((r.value - 6f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.validity, Validity::Exact);

        let r = conjecture_value(3).unwrap();
        assert!((r.value - 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.validity, Validity::Conjectural);

        assert!(zero_sum_lower(3).is_err());
    }

    #[test]
    fn separated_cardinality_examples() {
        let (lo, hi) = separated_cardinality_bounds(3, 0.5).unwrap();
        let lo_oracle = (2.0 * PI).sqrt() / 0.5f64.sin().powi(2);
        assert!((lo - lo_oracle).abs() < 1e-12);
        assert!((lo - 10.9056).abs() < 1e-3, "got {lo}");
        let hi_oracle = 23.0 * 2f64.powf(1.5) / 0.25f64.sin().powi(2) / 2.0;
        assert!((hi - hi_oracle).abs() < 1e-9);
        assert!((hi - 531.4).abs() < 0.5, "got {hi}");
        assert!(lo < hi);
        assert!(separated_cardinality_bounds(3, 1.6).is_err());
    }

    #[test]
    fn separated_cardinality_consistent_on_grid() {
        for d in 2..=10 {
            for i in 1..=9 {
                let delta = i as f64 * 0.15;
                if delta >= std::f64::consts::FRAC_PI_2 {
                    continue;
                }
                let (lo, hi) = separated_cardinality_bounds(d, delta).unwrap();
                assert!(lo < hi, "window empty at d={d}, delta={delta}");
            }
        }
    }

    #[test]
    fn report_listing_respects_validity() {
        let reports = bound_reports(3, 4, 2);
        assert!(reports.iter().any(|r| r.name == "welch-pair"
            && (r.value - 1.6329932).abs() < 1e-6));
        // exact lower rows never exceed the trivial upper bound
        for r in &reports {
            if r.side == Side::Lower && r.validity == Validity::Exact {
                assert!(r.value <= trivial_upper(2) + 1e-9);
            }
        }
        let reports = bound_reports(2, 6, 3);
        let planar = reports.iter().find(|r| r.name == "planar-lower").unwrap();
        assert!((planar.value - 7f64.sqrt()).abs() < 1e-12);
        assert_eq!(planar.sharp, Some(true));
        let reports = bound_reports(4, 1000, 3);
        let gl = reports.iter().find(|r| r.name == "general-lower").unwrap();
        assert!((gl.value - 2.50078).abs() < 1e-4);
    }
}
