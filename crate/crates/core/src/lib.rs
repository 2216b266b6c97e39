//! Exact and numerical solutions of the position-dependent-mass Schrödinger
//! equation via point canonical transformations.
//!
//! The crate is layered bottom-up:
//!
//! - [`specfun`]: deformed hyperbolic functions, complex Jacobi polynomials,
//!   cosine-power antiderivatives, adaptive quadrature;
//! - [`refpot`]: deformed Rosen-Morse and Scarf reference potentials with
//!   exact spectra and closed-form bound states;
//! - [`massprofile`] / [`mapping`]: the mass distributions m(x) and the
//!   monotone mappings y = f(x) with f' = m^{2 alpha + 1};
//! - [`pct`]: the transformation engine producing target potentials,
//!   transformed wavefunctions, and (isospectral) energies;
//! - [`oracle`]: finite-difference eigensolvers and the verification report
//!   that checks every analytic formula against independent numerics.
//!
//! Grid sampling and per-state verification fan out over rayon when the
//! default `parallel` feature is enabled; disabling it yields a fully
//! sequential build with bit-identical results.

pub mod error;
pub mod mapping;
pub mod massprofile;
pub mod oracle;
mod parallel;
pub mod pct;
pub mod refpot;
pub mod specfun;

pub use error::{Error, Result};
pub use mapping::Mapping;
pub use massprofile::MassProfile;
pub use oracle::{Grid, VerificationReport, VerifyOptions};
pub use pct::{PctContext, TargetPotential, TransformedWavefunction};
pub use refpot::{BoundState, BranchSign, ReferencePotential, RosenMorseParams, ScarfParams};
