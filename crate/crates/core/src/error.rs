//! Crate-wide error type.

/// Errors shared by every layer of the solver.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor or operation received a parameter outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An evaluation point lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Deformed cosech/coth evaluated at the zero of sinh_q (y = ln sqrt(q)).
    #[error("{func}_q has a pole at y = {y} (zero of sinh_q)")]
    Pole { func: &'static str, y: f64 },

    /// Requested bound-state index at or beyond the number of bound states.
    #[error("state index {n} out of range: potential supports {count} bound state(s)")]
    StateIndex { n: usize, count: usize },

    /// The spectral parameter eta vanished for this quantum number.
    #[error("degenerate state: eta = 0 for n = {n}")]
    DegenerateState { n: usize },

    /// A nominally real energy came out with a non-negligible imaginary part.
    #[error("non-real energy: imaginary residue {residue:e} exceeds {limit:e}")]
    NonRealEnergy { residue: f64, limit: f64 },

    /// Global-phase removal left a complex wavefunction behind.
    #[error("phase removal failed: imaginary residue {residue:e} exceeds {limit:e}")]
    PhaseRemoval { residue: f64, limit: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge to tol {tol:e} within {max_depth} subdivision levels")]
    QuadratureNonConvergence { tol: f64, max_depth: usize },

    /// Inversion requested outside the attained range of the mapping.
    #[error("y = {y} outside the mapping range ({lo}, {hi})")]
    MappingRange { y: f64, lo: f64, hi: f64 },

    /// A computation produced a non-finite intermediate value.
    #[error("numeric overflow in {0}")]
    Overflow(String),

    /// Tridiagonal eigensolver failure.
    #[error("eigensolver: {0}")]
    Eigensolver(String),

    /// Scarf sigma != tau branches are excluded from automated verification.
    #[error("experimental Scarf branch (sigma != tau) requires an explicit override")]
    ExperimentalBranch,
}

pub type Result<T> = std::result::Result<T, Error>;
