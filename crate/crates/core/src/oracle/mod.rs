//! Independent numerical verification: finite-difference eigensolvers for
//! constant-mass and PDM Hamiltonians, residual and node diagnostics, and
//! the isospectrality report.

mod grid;
mod solve;
mod tridiag;
mod verify;

pub use grid::{Grid, DEFAULT_CONSTANT_GRID, DEFAULT_PDM_GRID};
pub use solve::{
    assemble_constant_mass, assemble_pdm, constant_mass_stencil_residual, count_nodes,
    pdm_stencil_residual, residual_norm, solve_constant_mass, solve_pdm, EigenPair,
    DEFAULT_NODE_THRESHOLD,
};
pub use tridiag::SymTridiag;
pub use verify::{
    verify_isospectrality, StateRecord, VerificationReport, VerifyOptions, DEFAULT_VERIFY_TOLERANCE,
};
