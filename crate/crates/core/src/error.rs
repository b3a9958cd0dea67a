use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series could not be certified to the requested tolerance.
    #[error("truncation error: tail bound {tail_bound:e} above tolerance {tol:e} after {terms} terms")]
    Truncation { terms: usize, tail_bound: f64, tol: f64 },

    /// The hypotheses of a theorem required by the operation are not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An iterative method did not converge; `partial` carries the last iterate.
    #[error("no convergence after {iterations} iterations (max correction {max_correction:e})")]
    NoConvergence {
        iterations: usize,
        max_correction: f64,
        partial: Vec<(f64, f64)>,
    },

    /// A bisection bracket does not straddle a verdict change.
    #[error("bracket [{lo}, {hi}] does not contain a verdict change")]
    Bracket { lo: f64, hi: f64 },

    /// A sweep verdict sequence is not interval shaped.
    #[error("verdicts for {criterion} are not interval shaped ({transitions} transitions)")]
    NotMonotone { criterion: String, transitions: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
