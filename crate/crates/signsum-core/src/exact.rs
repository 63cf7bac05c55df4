//! Exact maximization of signed k-term subset sums.
//!
//! `max_signed_sum` enumerates the 2^{k−1} sign classes of a fixed subset
//! (global sign flips leave the norm unchanged) in Gray-code order, so each
//! step costs one vector add or subtract. `max_over_selections` wraps this in
//! lexicographic subset enumeration. In the plane, `max_over_selections_planar`
//! computes the same maximum by sweeping a direction v over the O(n²) critical
//! angles where the top-k index set or a sign can change, using the identity
//!
//!   max_ε ‖Σ ε_i u_i‖ = max_{v ∈ S^{d−1}} Σ |⟨v, u_i⟩|
//!
//! (the sweep evaluates each interval's fixed selection by its exact norm, so
//! the identity is a checked property, not the correctness argument).
//!
//! Ties between equal-norm selections break to the lexicographically smallest
//! indices, then signs with +1 before −1, so outputs are reproducible.

use crate::sphere::{dot, norm, Configuration};
use crate::{Error, Result};

/// Largest subset size accepted by the sign-pattern enumerators.
pub const MAX_SIGN_PATTERN_K: usize = 30;

/// Default cap on C(n,k)·2^{k−1} for full selection enumeration.
pub const DEFAULT_ENUM_BUDGET: u128 = 100_000_000;

/// k strictly increasing 0-based indices with their ±1 signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSelection {
    indices: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedSelection {
    pub fn new(indices: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if indices.is_empty() || indices.len() != signs.len() {
            return Err(Error::invalid(
                "selection needs equal, nonzero numbers of indices and signs",
            ));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("selection indices must strictly increase"));
        }
        if !signs.iter().all(|&s| s == 1 || s == -1) {
            return Err(Error::invalid("selection signs must be +1 or -1"));
        }
        Ok(SignedSelection { indices, signs })
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

}

/// How a result was obtained, and hence what it certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Every subset and sign class was enumerated; the value is the exact max.
    Exhaustive,
    /// Planar critical-angle sweep; exact in d = 2.
    PlanarSweep,
    /// A feasible selection with no optimality claim.
    Heuristic,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::Exhaustive => "exhaustive",
            Certificate::PlanarSweep => "planar-sweep",
            Certificate::Heuristic => "heuristic",
        }
    }
}

/// A selection together with its signed sum and the sum's norm.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub selection: SignedSelection,
    pub sum: Vec<f64>,
    pub value: f64,
    pub certificate: Option<Certificate>,
}

impl SolveResult {
    fn from_selection(
        config: &Configuration,
        indices: Vec<usize>,
        signs: Vec<i8>,
        certificate: Option<Certificate>,
    ) -> Result<Self> {
        let selection = SignedSelection::new(indices, signs)?;
        let sum = config.signed_sum(selection.indices(), selection.signs());
        let value = norm(&sum);
        Ok(SolveResult {
            selection,
            sum,
            value,
            certificate,
        })
    }
}

/// C(n,k)·2^{k−1}, saturating; the work of full selection enumeration.
pub fn enumeration_work(n: usize, k: usize) -> u128 {
    if k == 0 || k > n {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    let shift = (k - 1).min(100) as u32;
    c.saturating_mul(1u128 << shift)
}

fn check_subset(config: &Configuration, subset: &[usize]) -> Result<()> {
    if subset.is_empty() {
        return Err(Error::invalid("subset must not be empty"));
    }
    if subset.len() > MAX_SIGN_PATTERN_K {
        return Err(Error::invalid(format!(
            "subset size {} exceeds the sign enumeration limit {MAX_SIGN_PATTERN_K}",
            subset.len()
        )));
    }
    if !subset.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::invalid("subset indices must strictly increase"));
    }
    if *subset.last().unwrap() >= config.len() {
        return Err(Error::invalid(format!(
            "subset index {} out of range for n={}",
            subset.last().unwrap(),
            config.len()
        )));
    }
    Ok(())
}

fn sign_key_less(a: &[i8], b: &[i8]) -> bool {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            return x > y; // +1 sorts before −1
        }
    }
    false
}

/// Gray-code walk over the 2^{k−1} sign classes of `subset` (the first
/// element's sign is pinned to +1), one vector add/subtract per step;
/// `visit` sees every pattern with its running norm².
fn walk_signs(config: &Configuration, subset: &[usize], visit: &mut impl FnMut(&[i8], f64)) {
    let k = subset.len();
    let mut signs = vec![1i8; k];
    let mut sum = config.signed_sum(subset, &signs);
    visit(&signs, dot(&sum, &sum));
    let steps: u64 = 1 << (k - 1);
    for t in 1..steps {
        let j = t.trailing_zeros() as usize + 1;
        let s = f64::from(signs[j]);
        for (acc, c) in sum.iter_mut().zip(config.get(subset[j]).coords()) {
            *acc -= 2.0 * s * c;
        }
        signs[j] = -signs[j];
        visit(&signs, dot(&sum, &sum));
    }
}

/// Best sign class over `subset`: highest norm², ties to the
/// lexicographically smallest signs.
fn enumerate_signs(config: &Configuration, subset: &[usize]) -> (Vec<i8>, f64) {
    let mut best_val2 = f64::NEG_INFINITY;
    let mut best_signs: Vec<i8> = Vec::new();
    walk_signs(config, subset, &mut |signs, v2| {
        if v2 > best_val2 || (v2 == best_val2 && sign_key_less(signs, &best_signs)) {
            best_val2 = v2;
            best_signs = signs.to_vec();
        }
    });
    (best_signs, best_val2)
}

/// Exact max of ‖Σ ε_i u_i‖ over all sign patterns for a fixed subset.
/// The sum and value of the winner are recomputed from scratch, so the
/// result is free of accumulated Gray-walk rounding.
pub fn max_signed_sum(config: &Configuration, subset: &[usize]) -> Result<SolveResult> {
    check_subset(config, subset)?;
    let (signs, _) = enumerate_signs(config, subset);
    SolveResult::from_selection(
        config,
        subset.to_vec(),
        signs,
        Some(Certificate::Exhaustive),
    )
}

/// Exact max over all k-subsets and sign patterns, with the default budget.
pub fn max_over_selections(config: &Configuration, k: usize) -> Result<SolveResult> {
    max_over_selections_with_budget(config, k, DEFAULT_ENUM_BUDGET)
}

/// Exact max over all k-subsets and sign patterns; errors with
/// [`Error::BudgetExceeded`] when C(n,k)·2^{k−1} exceeds `budget`.
///
/// Large workloads parallelize over the subset's first index; the
/// reduction key (norm², then indices, then signs) is a total order, so the
/// result is identical to the sequential run.
pub fn max_over_selections_with_budget(
    config: &Configuration,
    k: usize,
    budget: u128,
) -> Result<SolveResult> {
    let n = config.len();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k={k} outside 1..={n}")));
    }
    if k > MAX_SIGN_PATTERN_K {
        return Err(Error::invalid(format!(
            "k={k} exceeds the sign enumeration limit {MAX_SIGN_PATTERN_K}"
        )));
    }
    let work = enumeration_work(n, k);
    if work > budget {
        return Err(Error::BudgetExceeded { work, budget });
    }

    let (_, indices, signs) = if work >= 1_000_000 && n > k {
        use rayon::prelude::*;
        (0..=n - k)
            .into_par_iter()
            .filter_map(|first| best_with_first(config, k, first))
            .reduce_with(|a, b| if candidate_less(&b, &a) { b } else { a })
            .expect("k >= 1 guarantees at least one subset")
    } else {
        let mut best: Option<(f64, Vec<usize>, Vec<i8>)> = None;
        for_each_subset(n, k, |subset| {
            let (signs, val2) = enumerate_signs(config, subset);
            let cand = (val2, subset.to_vec(), signs);
            if best.as_ref().is_none_or(|b| candidate_less(&cand, b)) {
                best = Some(cand);
            }
        });
        best.expect("k >= 1 guarantees at least one subset")
    };
    SolveResult::from_selection(config, indices, signs, Some(Certificate::Exhaustive))
}

/// Strict total order on enumeration candidates: larger norm² first, ties
/// to the smaller (indices, signs) key.
fn candidate_less(a: &(f64, Vec<usize>, Vec<i8>), b: &(f64, Vec<usize>, Vec<i8>)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && (a.1 < b.1 || (a.1 == b.1 && sign_key_less(&a.2, &b.2))))
}

/// Best candidate among subsets whose smallest index is `first`.
fn best_with_first(
    config: &Configuration,
    k: usize,
    first: usize,
) -> Option<(f64, Vec<usize>, Vec<i8>)> {
    let n = config.len();
    let mut best: Option<(f64, Vec<usize>, Vec<i8>)> = None;
    let mut subset = vec![0usize; k];
    subset[0] = first;
    let rest = k - 1;
    if rest == 0 {
        let (signs, val2) = enumerate_signs(config, &subset);
        return Some((val2, subset, signs));
    }
    if n - first - 1 < rest {
        return None;
    }
    for_each_subset(n - first - 1, rest, |tail| {
        for (slot, &t) in subset[1..].iter_mut().zip(tail) {
            *slot = first + 1 + t;
        }
        let (signs, val2) = enumerate_signs(config, &subset);
        let cand = (val2, subset.clone(), signs);
        if best.as_ref().is_none_or(|b| candidate_less(&cand, b)) {
            best = Some(cand);
        }
    });
    best
}

/// All selections whose value is within `tol` of the exact maximum, best
/// first, truncated to `cap` entries (enumeration order after the best).
/// Used for subgradient averaging at ties.
pub fn top_selections(
    config: &Configuration,
    k: usize,
    tol: f64,
    cap: usize,
) -> Result<Vec<SolveResult>> {
    let best = max_over_selections(config, k)?;
    let threshold2 = {
        let t = (best.value - tol).max(0.0);
        t * t
    };
    let n = config.len();
    let mut out: Vec<SolveResult> = vec![best.clone()];
    for_each_subset(n, k, |subset| {
        if out.len() > cap {
            return;
        }
        let mut hits: Vec<Vec<i8>> = Vec::new();
        walk_signs(config, subset, &mut |signs, v2| {
            if v2 >= threshold2 && hits.len() <= cap {
                hits.push(signs.to_vec());
            }
        });
        for signs in hits {
            if out.len() > cap {
                break;
            }
            if subset == best.selection.indices() && signs == best.selection.signs() {
                continue;
            }
            if let Ok(r) = SolveResult::from_selection(
                config,
                subset.to_vec(),
                signs,
                Some(Certificate::Exhaustive),
            ) {
                if r.value >= best.value - tol {
                    out.push(r);
                }
            }
        }
    });
    out.truncate(cap.max(1));
    Ok(out)
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        f(&subset);
        // advance to next lexicographic k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Exact planar maximum over selections by critical-angle sweep; agrees with
/// [`max_over_selections`] and has no combinatorial budget.
pub fn max_over_selections_planar(config: &Configuration, k: usize) -> Result<SolveResult> {
    let champions = planar_champions(config, k)?;
    let mut best: Option<(f64, Vec<usize>, Vec<i8>)> = None;
    for (indices, signs) in champions {
        let sum = config.signed_sum(&indices, &signs);
        let val2 = dot(&sum, &sum);
        let better = match &best {
            None => true,
            Some((bv, bi, bs)) => {
                val2 > *bv
                    || (val2 == *bv
                        && (indices < *bi || (indices == *bi && sign_key_less(&signs, bs))))
            }
        };
        if better {
            best = Some((val2, indices, signs));
        }
    }
    let (_, indices, signs) = best.expect("sweep produces at least one candidate");
    SolveResult::from_selection(config, indices, signs, Some(Certificate::PlanarSweep))
}

/// Planar analogue of [`top_selections`]: interval champions within `tol`
/// of the sweep maximum, deduplicated, best first.
pub fn top_selections_planar(
    config: &Configuration,
    k: usize,
    tol: f64,
    cap: usize,
) -> Result<Vec<SolveResult>> {
    let best = max_over_selections_planar(config, k)?;
    let mut champs = planar_champions(config, k)?;
    champs.sort();
    champs.dedup();
    let mut out = vec![best.clone()];
    for (indices, signs) in champs {
        if out.len() > cap {
            break;
        }
        if indices == best.selection.indices() && signs == best.selection.signs() {
            continue;
        }
        let r = SolveResult::from_selection(
            config,
            indices,
            signs,
            Some(Certificate::PlanarSweep),
        )?;
        if r.value >= best.value - tol {
            out.push(r);
        }
    }
    out.truncate(cap.max(1));
    Ok(out)
}

/// The top-k selections chosen at every critical angle and every interval
/// midpoint of the sweep.
fn planar_champions(config: &Configuration, k: usize) -> Result<Vec<(Vec<usize>, Vec<i8>)>> {
    use std::f64::consts::PI;
    if config.dim() != 2 {
        return Err(Error::invalid(format!(
            "planar solver needs d = 2, got d = {}",
            config.dim()
        )));
    }
    let n = config.len();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k={k} outside 1..={n}")));
    }

    // Critical angles of v(θ) = (cos θ, sin θ), reduced mod π:
    //  - ⟨v, u_i⟩ = 0 at θ = angle(u_i) + π/2
    //  - |⟨v, u_i⟩| = |⟨v, u_j⟩| at θ = angle(u_i ∓ u_j) + π/2
    let mut events: Vec<f64> = Vec::with_capacity(n + n * n);
    let push_perp = |x: f64, y: f64, events: &mut Vec<f64>| {
        if x.hypot(y) > 1e-12 {
            let mut a = (y.atan2(x) + PI / 2.0) % PI;
            if a < 0.0 {
                a += PI;
            }
            events.push(a);
        }
    };
    for i in 0..n {
        let ui = config.get(i).coords();
        push_perp(ui[0], ui[1], &mut events);
        for j in i + 1..n {
            let uj = config.get(j).coords();
            push_perp(ui[0] - uj[0], ui[1] - uj[1], &mut events);
            push_perp(ui[0] + uj[0], ui[1] + uj[1], &mut events);
        }
    }
    events.sort_by(|a, b| a.partial_cmp(b).unwrap());
    events.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    if events.len() >= 2 && (events[0] + PI - events[events.len() - 1]).abs() <= 1e-12 {
        events.pop(); // wraparound duplicate
    }
    if events.is_empty() {
        events.push(0.0);
    }

    // candidate directions: every event angle and every interval midpoint
    let mut angles: Vec<f64> = Vec::with_capacity(2 * events.len());
    for (idx, &a) in events.iter().enumerate() {
        angles.push(a);
        let next = if idx + 1 < events.len() {
            events[idx + 1]
        } else {
            events[0] + PI
        };
        angles.push(0.5 * (a + next));
    }

    let mut out = Vec::with_capacity(angles.len());
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for theta in angles {
        let v = [theta.cos(), theta.sin()];
        let proj: Vec<f64> = (0..n).map(|i| dot(config.get(i).coords(), &v)).collect();
        order.clear();
        order.extend(0..n);
        order.sort_by(|&a, &b| {
            proj[b]
                .abs()
                .partial_cmp(&proj[a].abs())
                .unwrap()
                .then(a.cmp(&b))
        });
        let mut chosen: Vec<usize> = order[..k].to_vec();
        chosen.sort_unstable();
        let signs: Vec<i8> = chosen
            .iter()
            .map(|&i| if proj[i] >= 0.0 { 1 } else { -1 })
            .collect();
        out.push((chosen, signs));
    }
    Ok(out)
}

/// Coherence max_{i<j} |⟨u_i, u_j⟩| of the system; the k = 2 problem in
/// disguise through ‖u ± v‖² = 2 ± 2⟨u, v⟩.
pub fn coherence(config: &Configuration) -> Result<f64> {
    let n = config.len();
    if n < 2 {
        return Err(Error::invalid("coherence needs n >= 2"));
    }
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(config.get(i).dot(config.get(j)).abs());
        }
    }
    Ok(best)
}
