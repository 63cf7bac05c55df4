//! Lower-bound heuristics that come with guarantees.
//!
//! Sign-flip ascent: flipping the sign of term i changes ‖s‖² by
//! 4 − 4⟨ε_i u_i, s⟩, so steepest single flips strictly increase the norm
//! until every margin ⟨ε_i u_i, s⟩ is at least 1; summing the margins then
//! gives ‖s‖ ≥ √n. The margins are returned as a checkable certificate.
//!
//! Cap-greedy selection: choose a cap radius whose normalized measure is
//! k/(2n); some cap of that radius contains k of the 2n vectors ±u_i on
//! average, and selecting the k best-aligned orientations around a good
//! center x gives a sum of norm at least Σ⟨x, v_i⟩ ≥ k·cos r. The search
//! restricts centers to ±ω_n plus a golden-section refinement toward the
//! selection centroid, and re-verifies the cap count before claiming the
//! guarantee.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::exact::{Certificate, SignedSelection, SolveResult};
use crate::sphere::{cap_radius_for_measure, dot, norm, Configuration, UnitVector};
use crate::{Error, Result};

/// A flip is taken only if it increases ‖s‖² by more than this; guarantees
/// termination and keeps margins within 2.5e−13 of the ideal 1.
const FLIP_TOL: f64 = 1e-12;

/// Margins ⟨ε_i u_i, Σ_j ε_j u_j⟩ at a flip-local maximum; all at least
/// 1 − 1e−9 on termination.
#[derive(Debug, Clone)]
pub struct BangCertificate {
    pub margins: Vec<f64>,
    pub min_margin: f64,
}

/// Result of one sign-flip ascent run.
#[derive(Debug, Clone)]
pub struct BangOutcome {
    pub result: SolveResult,
    pub certificate: BangCertificate,
    pub flips: usize,
}

/// Steepest single-flip ascent on the full configuration (k = n). Starts
/// from `initial_signs` when given, otherwise from seeded random signs.
/// Terminates at a flip-local maximum with value ≥ √n − 1e−9.
pub fn bang_ascent(
    config: &Configuration,
    initial_signs: Option<&[i8]>,
    seed: u64,
) -> Result<BangOutcome> {
    let n = config.len();
    let mut signs: Vec<i8> = match initial_signs {
        Some(s) => {
            if s.len() != n {
                return Err(Error::invalid(format!(
                    "initial signs length {} does not match n={n}",
                    s.len()
                )));
            }
            if !s.iter().all(|&x| x == 1 || x == -1) {
                return Err(Error::invalid("initial signs must be +1 or -1"));
            }
            s.to_vec()
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect()
        }
    };

    let all: Vec<usize> = (0..n).collect();
    let mut flips = 0usize;
    let flip_cap = 10_000 * n.max(1);
    loop {
        let sum = config.signed_sum(&all, &signs);
        // steepest flip = smallest margin; gain_i = 4·(1 − margin_i)
        let mut best: Option<(usize, f64)> = None;
        for (i, &sign) in signs.iter().enumerate() {
            let margin = f64::from(sign) * dot(config.get(i).coords(), &sum);
            if best.is_none_or(|(_, m)| margin < m) {
                best = Some((i, margin));
            }
        }
        let (i, margin) = best.expect("n >= 1");
        if 4.0 - 4.0 * margin <= FLIP_TOL {
            break;
        }
        signs[i] = -signs[i];
        flips += 1;
        if flips > flip_cap {
            return Err(Error::NonConvergence(format!(
                "sign-flip ascent exceeded {flip_cap} flips"
            )));
        }
    }

    let sum = config.signed_sum(&all, &signs);
    let margins: Vec<f64> = (0..n)
        .map(|i| f64::from(signs[i]) * dot(config.get(i).coords(), &sum))
        .collect();
    let min_margin = margins.iter().cloned().fold(f64::INFINITY, f64::min);
    let value = norm(&sum);
    let result = SolveResult {
        selection: SignedSelection::new(all, signs)?,
        sum,
        value,
        certificate: Some(Certificate::Heuristic),
    };
    Ok(BangOutcome {
        result,
        certificate: BangCertificate {
            margins,
            min_margin,
        },
        flips,
    })
}

/// Cap-greedy selection outcome; `guaranteed` holds when the chosen cap
/// provably contains at least k of the 2n signed vectors, in which case
/// value ≥ k·cos(cap_radius).
#[derive(Debug, Clone)]
pub struct CapGreedyOutcome {
    pub result: SolveResult,
    pub cap_radius: f64,
    pub cap_count: usize,
    pub guaranteed: bool,
}

/// Selects k vectors (one orientation per index) best aligned with a cap
/// center of radius r = cap_radius_for_measure(d, k/(2n)), searching centers
/// over ±ω_n with local great-circle refinement.
pub fn cap_greedy_selection(config: &Configuration, k: usize) -> Result<CapGreedyOutcome> {
    let n = config.len();
    let d = config.dim();
    if d < 2 {
        return Err(Error::invalid("cap-greedy selection needs d >= 2"));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k={k} outside 1..={n}")));
    }
    let r = cap_radius_for_measure(d, k as f64 / (2.0 * n as f64))?;
    let cos_r = r.cos();

    let mut best_center: Option<(usize, f64, Vec<f64>)> = None; // (count, top-k sum, center)
    let consider = |center: &[f64],
                        best: &mut Option<(usize, f64, Vec<f64>)>| {
        let (count, topk) = score_center(config, center, k, cos_r);
        let better = match best {
            None => true,
            Some((bc, bs, _)) => count > *bc || (count == *bc && topk > *bs),
        };
        if better {
            *best = Some((count, topk, center.to_vec()));
        }
    };

    for i in 0..n {
        let c = config.get(i).coords().to_vec();
        consider(&c, &mut best_center);
        let neg: Vec<f64> = c.iter().map(|x| -x).collect();
        consider(&neg, &mut best_center);
    }
    let (_, _, coarse) = best_center.clone().expect("n >= 1 candidates");

    // refine along the great circle toward the current selection's centroid
    let (sel_idx, sel_signs) = top_k_by_center(config, &coarse, k);
    let centroid = config.signed_sum(&sel_idx, &sel_signs);
    if let Some(path) = great_circle(&coarse, &centroid) {
        let mut lo = 0.0f64;
        let mut hi = 1.0f64;
        let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
        let eval = |t: f64| score_center(config, &path(t), k, cos_r).1;
        let mut t1 = hi - inv_phi * (hi - lo);
        let mut t2 = lo + inv_phi * (hi - lo);
        let mut f1 = eval(t1);
        let mut f2 = eval(t2);
        for _ in 0..50 {
            if f1 < f2 {
                lo = t1;
                t1 = t2;
                f1 = f2;
                t2 = lo + inv_phi * (hi - lo);
                f2 = eval(t2);
            } else {
                hi = t2;
                t2 = t1;
                f2 = f1;
                t1 = hi - inv_phi * (hi - lo);
                f1 = eval(t1);
            }
        }
        consider(&path(0.5 * (lo + hi)), &mut best_center);
    }

    let (count, _, center) = best_center.expect("candidate set nonempty");
    let (indices, signs) = top_k_by_center(config, &center, k);
    let sum = config.signed_sum(&indices, &signs);
    let value = norm(&sum);
    Ok(CapGreedyOutcome {
        result: SolveResult {
            selection: SignedSelection::new(indices, signs)?,
            sum,
            value,
            certificate: Some(Certificate::Heuristic),
        },
        cap_radius: r,
        cap_count: count,
        guaranteed: count >= k,
    })
}

/// (#(±ω_n ∩ C(x, r)), sum of the k largest |⟨x, u_i⟩|).
fn score_center(config: &Configuration, center: &[f64], k: usize, cos_r: f64) -> (usize, f64) {
    let n = config.len();
    let mut abs_projs: Vec<f64> = Vec::with_capacity(n);
    let mut count = 0usize;
    for i in 0..n {
        let p = dot(config.get(i).coords(), center);
        if p >= cos_r - 1e-12 {
            count += 1;
        }
        if -p >= cos_r - 1e-12 {
            count += 1;
        }
        abs_projs.push(p.abs());
    }
    abs_projs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (count, abs_projs[..k].iter().sum())
}

/// Indices of the k largest |⟨center, u_i⟩| (ties to the lowest index),
/// sorted ascending, with signs following the projections.
fn top_k_by_center(config: &Configuration, center: &[f64], k: usize) -> (Vec<usize>, Vec<i8>) {
    let n = config.len();
    let proj: Vec<f64> = (0..n).map(|i| dot(config.get(i).coords(), center)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        proj[b]
            .abs()
            .partial_cmp(&proj[a].abs())
            .unwrap()
            .then(a.cmp(&b))
    });
    let mut chosen = order[..k].to_vec();
    chosen.sort_unstable();
    let signs = chosen
        .iter()
        .map(|&i| if proj[i] >= 0.0 { 1 } else { -1 })
        .collect();
    (chosen, signs)
}

/// Unit-speed great-circle arc from `from` toward `to` (both renormalized);
/// None when the two directions are degenerate or (anti)parallel.
fn great_circle(from: &[f64], to: &[f64]) -> Option<impl Fn(f64) -> Vec<f64>> {
    let a = UnitVector::new(from.to_vec()).ok()?;
    let b = UnitVector::new(to.to_vec()).ok()?;
    let cos_omega = a.dot(&b).clamp(-1.0, 1.0);
    let omega = cos_omega.acos();
    if !(1e-9..=std::f64::consts::PI - 1e-9).contains(&omega) {
        return None;
    }
    let sin_omega = omega.sin();
    let (a, b) = (a.coords().to_vec(), b.coords().to_vec());
    Some(move |t: f64| -> Vec<f64> {
        let (wa, wb) = (
            ((1.0 - t) * omega).sin() / sin_omega,
            (t * omega).sin() / sin_omega,
        );
        a.iter().zip(&b).map(|(x, y)| wa * x + wb * y).collect()
    })
}

/// Spherical-average lower bound k·2·κ_{d−1}/(d·κ_d) on the max signed sum
/// of any k-subset; always at least k·√(2/(πd)).
pub fn averaging_lower_bound(config: &Configuration, k: usize) -> Result<f64> {
    if k == 0 || k > config.len() {
        return Err(Error::invalid(format!(
            "k={k} outside 1..={}",
            config.len()
        )));
    }
    bounds::averaging_lower(config.dim(), k)
}
