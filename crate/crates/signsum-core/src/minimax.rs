//! Numerical estimation of the minimax value c(d, n, k): the smallest, over
//! configurations of n unit vectors in R^d, of the exact max signed k-term
//! subset sum.
//!
//! The search runs projected subgradient descent against an inner solver
//! from every restart: compute the maximizing selection(s), move each
//! selected vector against its sign times the normalized sum direction,
//! renormalize, and accept the step only if the inner max decreased. At ties
//! (several selections within 1e−9 of the max) the subgradients are
//! averaged; single-selection steps oscillate at symmetric optima like the
//! simplex. Named candidate configurations join the random restarts as warm
//! starts, so known-sharp systems are never missed.
//!
//! The returned value is the inner value of a concrete configuration and is
//! therefore an UPPER estimate of c(d, n, k); no convergence to the true
//! minimum is claimed.

use rayon::prelude::*;

use crate::exact::{
    max_over_selections, max_over_selections_planar, top_selections, top_selections_planar,
    SolveResult,
};
use crate::gen::{
    gen_orthonormal, gen_orthonormal_copies, gen_polygon_multiplicity, gen_random_uniform,
    gen_simplex, gen_simplex_plus_orthonormal, mix_seed,
};
use crate::heur::bang_ascent;
use crate::sphere::{norm, Configuration, UnitVector};
use crate::{Error, Result};

/// Selections within this much of the inner max share the subgradient.
const TIE_TOL: f64 = 1e-9;

/// At most this many tied selections enter the subgradient average.
const TIE_CAP: usize = 64;

/// Inner maximization engine used by the outer search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerSolver {
    /// Exhaustive enumeration (exact, budgeted).
    Exact,
    /// Critical-angle sweep (exact, d = 2 only).
    Planar,
    /// Multi-start sign-flip ascent (heuristic, k = n only).
    BangMultistart,
}

impl InnerSolver {
    pub fn name(&self) -> &'static str {
        match self {
            InnerSolver::Exact => "exact",
            InnerSolver::Planar => "planar",
            InnerSolver::BangMultistart => "bang-multistart",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "exact" => Some(InnerSolver::Exact),
            "planar" => Some(InnerSolver::Planar),
            "bang-multistart" | "bang" => Some(InnerSolver::BangMultistart),
            _ => None,
        }
    }

    fn solve(&self, config: &Configuration, k: usize, seed: u64) -> Result<SolveResult> {
        match self {
            InnerSolver::Exact => max_over_selections(config, k),
            InnerSolver::Planar => max_over_selections_planar(config, k),
            InnerSolver::BangMultistart => {
                let mut best: Option<SolveResult> = None;
                for j in 0..8 {
                    let out = bang_ascent(config, None, mix_seed(seed, j))?;
                    if best.as_ref().is_none_or(|b| out.result.value > b.value) {
                        best = Some(out.result);
                    }
                }
                Ok(best.expect("eight starts"))
            }
        }
    }

    fn top(&self, config: &Configuration, k: usize, seed: u64) -> Result<Vec<SolveResult>> {
        match self {
            InnerSolver::Exact => top_selections(config, k, TIE_TOL, TIE_CAP),
            InnerSolver::Planar => top_selections_planar(config, k, TIE_TOL, TIE_CAP),
            InnerSolver::BangMultistart => Ok(vec![self.solve(config, k, seed)?]),
        }
    }
}

/// Knobs of the outer search; all strictly positive, tolerance ≥ 1e−12.
#[derive(Debug, Clone)]
pub struct SearchSettings {
    /// Number of random restarts (warm starts are added on top).
    pub restarts: usize,
    pub max_iters: usize,
    pub step_init: f64,
    /// Multiplicative step shrink applied on every rejected step.
    pub step_decay: f64,
    /// The search stops once the step size falls below this.
    pub tolerance: f64,
    pub seed: u64,
    pub inner: InnerSolver,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            restarts: 16,
            max_iters: 2000,
            step_init: 0.25,
            step_decay: 0.5,
            tolerance: 1e-10,
            seed: 0,
            inner: InnerSolver::Exact,
        }
    }
}

impl SearchSettings {
    fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iters == 0 {
            return Err(Error::invalid("restarts and max_iters must be positive"));
        }
        let step_ok = self.step_init.is_finite() && self.step_init > 0.0;
        let decay_ok = self.step_decay.is_finite() && self.step_decay > 0.0 && self.step_decay < 1.0;
        if !step_ok || !decay_ok {
            return Err(Error::invalid(
                "step_init must be positive and step_decay in (0, 1)",
            ));
        }
        if !self.tolerance.is_finite() || self.tolerance < 1e-12 {
            return Err(Error::invalid("tolerance must be at least 1e-12"));
        }
        Ok(())
    }
}

/// Best configuration found, its re-verified inner value, and the winning
/// restart's accepted-value trace (non-increasing by construction).
#[derive(Debug, Clone)]
pub struct MinimaxEstimate {
    pub best_config: Configuration,
    pub value: f64,
    pub trace: Vec<(usize, f64)>,
    pub restarts_used: usize,
    pub inner_solver: &'static str,
}

/// Upper estimate of c(d, n, k) by multi-start projected subgradient
/// descent. Warm starts cover the named candidate systems applicable at
/// (d, n, k); `settings.restarts` seeded uniform starts are added.
pub fn estimate_c(d: usize, n: usize, k: usize, settings: &SearchSettings) -> Result<MinimaxEstimate> {
    settings.validate()?;
    if d == 0 || n < d {
        return Err(Error::invalid(format!("needs 1 <= d <= n, got d={d}, n={n}")));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k={k} outside 1..={n}")));
    }
    if settings.inner == InnerSolver::Planar && d != 2 {
        return Err(Error::invalid("planar inner solver needs d = 2"));
    }
    if settings.inner == InnerSolver::BangMultistart && k != n {
        return Err(Error::invalid("bang-multistart inner solver needs k = n"));
    }

    let mut starts: Vec<Configuration> = Vec::new();
    let push_unique = |cfg: Configuration, starts: &mut Vec<Configuration>| {
        if !starts.contains(&cfg) {
            starts.push(cfg);
        }
    };
    if n <= d {
        push_unique(gen_orthonormal(d, n)?, &mut starts);
    }
    if n.is_multiple_of(d) {
        push_unique(gen_orthonormal_copies(d, n / d)?, &mut starts);
    }
    if n == d + 1 {
        push_unique(gen_simplex(d)?, &mut starts);
        for h in (2..=d).step_by(2) {
            push_unique(gen_simplex_plus_orthonormal(d, h)?, &mut starts);
        }
    }
    if d == 2 && k >= 2 && n.is_multiple_of(k - 1) {
        push_unique(gen_polygon_multiplicity(n, k)?, &mut starts);
    }
    for i in 0..settings.restarts {
        starts.push(gen_random_uniform(d, n, mix_seed(settings.seed, i as u64))?);
    }

    let outcomes: Vec<DescentOutcome> = starts
        .par_iter()
        .map(|cfg| descend_from(cfg, k, settings))
        .collect::<Result<_>>()?;

    let restarts_used = outcomes.len();
    let mut winner = 0usize;
    for (i, o) in outcomes.iter().enumerate() {
        if o.value < outcomes[winner].value {
            winner = i;
        }
    }
    let DescentOutcome {
        config: best_config,
        trace,
        ..
    } = outcomes.into_iter().nth(winner).expect("nonempty starts");
    // re-verify the reported value against the inner solver
    let value = settings
        .inner
        .solve(&best_config, k, settings.seed)?
        .value;
    Ok(MinimaxEstimate {
        best_config,
        value,
        trace,
        restarts_used,
        inner_solver: settings.inner.name(),
    })
}

/// Final configuration of one descent run with its inner value and the
/// accepted-value trace.
#[derive(Debug, Clone)]
pub struct DescentOutcome {
    pub config: Configuration,
    pub value: f64,
    pub trace: Vec<(usize, f64)>,
}

/// One descent run from a fixed configuration.
pub fn descend_from(
    config: &Configuration,
    k: usize,
    settings: &SearchSettings,
) -> Result<DescentOutcome> {
    settings.validate()?;
    let n = config.len();
    let d = config.dim();
    let inner = settings.inner;
    let mut cur = config.clone();
    let mut cur_val = inner.solve(&cur, k, settings.seed)?.value;
    let mut trace = vec![(0usize, cur_val)];
    let mut step = settings.step_init;

    for it in 1..=settings.max_iters {
        if step < settings.tolerance {
            break;
        }
        let ties = inner.top(&cur, k, settings.seed)?;
        let mut grad = vec![vec![0.0f64; d]; n];
        let mut touched = vec![false; n];
        let weight = 1.0 / ties.len() as f64;
        for t in &ties {
            let len = norm(&t.sum);
            if len < 1e-12 {
                continue;
            }
            for (&idx, &sign) in t.selection.indices().iter().zip(t.selection.signs()) {
                touched[idx] = true;
                let s = f64::from(sign) * weight / len;
                for (g, c) in grad[idx].iter_mut().zip(&t.sum) {
                    *g += s * c;
                }
            }
        }

        let mut moved = Vec::with_capacity(n);
        for i in 0..n {
            if !touched[i] {
                moved.push(cur.get(i).clone());
                continue;
            }
            let w: Vec<f64> = cur
                .get(i)
                .coords()
                .iter()
                .zip(&grad[i])
                .map(|(c, g)| c - step * g)
                .collect();
            match UnitVector::new(w) {
                Ok(v) => moved.push(v),
                Err(_) => moved.push(cur.get(i).clone()),
            }
        }
        let candidate = Configuration::new(moved)?;
        let cand_val = inner.solve(&candidate, k, settings.seed)?.value;
        if cand_val < cur_val {
            cur = candidate;
            cur_val = cand_val;
            trace.push((it, cur_val));
        } else {
            step *= settings.step_decay;
        }
    }
    Ok(DescentOutcome {
        config: cur,
        value: cur_val,
        trace,
    })
}

/// True iff the exact inner value of `config` at k is at least
/// `reference − 1e−9`; confirms that a claimed extremal configuration
/// attains a reference value.
pub fn certify_not_below(config: &Configuration, k: usize, reference: f64) -> Result<bool> {
    Ok(max_over_selections(config, k)?.value >= reference - 1e-9)
}
