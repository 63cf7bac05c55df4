//! Extremal signed k-term subset sums of unit-vector systems in R^d.
//!
//! Given n unit vectors, pick k of them with signs ±1 so that the signed sum
//! has large Euclidean norm. The library provides:
//!
//! - [`sphere`] — unit vectors, configurations, spherical caps and their
//!   normalized surface measure;
//! - [`gen`] — deterministic and seeded generators for the named extremal
//!   configurations (orthonormal systems, simplices, polygon multiplicity
//!   systems, zero-sum and separated systems);
//! - [`exact`] — exact maximization over selections by Gray-code sign
//!   enumeration, plus an exact planar critical-angle sweep;
//! - [`heur`] — scalable lower-bound heuristics with certificates (sign-flip
//!   ascent, cap-greedy selection);
//! - [`bounds`] — closed-form lower/upper bound evaluators with validity
//!   tags, including a Lambert-W based large-k bound;
//! - [`minimax`] — multi-start projected subgradient search for the minimax
//!   value over all configurations (an upper estimate).

pub mod bounds;
pub mod exact;
pub mod gen;
pub mod heur;
pub mod minimax;
pub mod sphere;

pub use bounds::{BoundReport, Side, Validity};
pub use exact::{Certificate, SignedSelection, SolveResult};
pub use gen::GeneratorSpec;
pub use heur::{BangCertificate, BangOutcome, CapGreedyOutcome};
pub use minimax::{InnerSolver, MinimaxEstimate, SearchSettings};
pub use sphere::{Cap, Configuration, UnitVector};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A vector with norm below the normalization threshold (1e-9).
    #[error("cannot normalize vector of norm {norm:.3e}")]
    ZeroVector { norm: f64 },

    /// Two vectors (or a vector and a configuration) of different dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A violated precondition; the message names the offending parameter.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Enumeration work would exceed the configured budget.
    #[error("enumeration budget exceeded: {work} sign evaluations > budget {budget}; \
             use the planar solver (d = 2) or a heuristic method instead")]
    BudgetExceeded { work: u128, budget: u128 },

    /// An iterative procedure exhausted its iteration or rejection budget.
    #[error("did not converge: {0}")]
    NonConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
