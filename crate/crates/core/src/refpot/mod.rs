//! Analytic reference-potential layer: deformed Rosen-Morse and Scarf
//! potentials with exact spectra and closed-form bound-state wavefunctions.
//!
//! Energies are eigenvalues of -d^2/dy^2 + V(y), i.e. the kappa = 1 kinetic
//! convention; the transformation layer owns kappa and keeps itself
//! consistent with that convention.

mod rosen_morse;
mod scarf;

pub use rosen_morse::{RosenMorseParams, RosenMorseWavefunction};
pub use scarf::{BranchSign, ScarfParams, ScarfWavefunction};

use crate::error::Result;

/// Either of the two solvable reference potentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferencePotential {
    RosenMorse(RosenMorseParams),
    Scarf(ScarfParams),
}

impl ReferencePotential {
    pub fn potential(&self, y: f64) -> Result<f64> {
        match self {
            Self::RosenMorse(p) => p.potential(y),
            Self::Scarf(p) => p.potential(y),
        }
    }

    pub fn num_bound_states(&self) -> usize {
        match self {
            Self::RosenMorse(p) => p.num_bound_states(),
            Self::Scarf(p) => p.num_bound_states(),
        }
    }

    /// Exact bound-state energy in the kappa = 1 convention.
    pub fn energy(&self, n: usize) -> Result<f64> {
        match self {
            Self::RosenMorse(p) => p.energy(n),
            Self::Scarf(p) => p.energy(n),
        }
    }

    pub fn wavefunction(&self, n: usize) -> Result<Wavefunction> {
        Ok(match self {
            Self::RosenMorse(p) => Wavefunction::RosenMorse(p.wavefunction(n)?),
            Self::Scarf(p) => Wavefunction::Scarf(p.wavefunction(n)?),
        })
    }

    /// Quantum number, energy, and sampler bundled together.
    pub fn bound_state(&self, n: usize) -> Result<BoundState> {
        Ok(BoundState {
            n,
            energy: self.energy(n)?,
            wavefunction: self.wavefunction(n)?,
        })
    }

    /// True for Scarf sigma != tau branch combinations.
    pub fn is_experimental(&self) -> bool {
        match self {
            Self::RosenMorse(_) => false,
            Self::Scarf(p) => p.is_experimental(),
        }
    }
}

/// Unnormalized reference-space bound-state sampler.
#[derive(Debug, Clone)]
pub enum Wavefunction {
    RosenMorse(RosenMorseWavefunction),
    Scarf(ScarfWavefunction),
}

impl Wavefunction {
    pub fn eval(&self, y: f64) -> Result<f64> {
        match self {
            Self::RosenMorse(w) => w.eval(y),
            Self::Scarf(w) => w.eval(y),
        }
    }
}

/// A bound state of a reference potential.
#[derive(Debug, Clone)]
pub struct BoundState {
    pub n: usize,
    pub energy: f64,
    pub wavefunction: Wavefunction,
}
