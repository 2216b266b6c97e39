//! Uniform spatial grid for the finite-difference solvers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || x_min >= x_max {
            return Err(Error::InvalidParameter(format!(
                "grid needs finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 3 points, got {n_points}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    /// Uniform spacing h.
    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.spacing()
    }

    /// Number of interior points (the Dirichlet unknowns).
    pub fn interior_len(&self) -> usize {
        self.n_points - 2
    }

    /// The i-th interior point, skipping the wall at x_min.
    pub fn interior_point(&self, i: usize) -> f64 {
        self.point(i + 1)
    }

    /// Same window at doubled resolution, for convergence rows.
    pub fn refined(&self) -> Self {
        Self {
            x_min: self.x_min,
            x_max: self.x_max,
            n_points: 2 * self.n_points,
        }
    }
}

/// Default window and resolution for constant-mass reference checks.
pub const DEFAULT_CONSTANT_GRID: Grid = Grid {
    x_min: -12.0,
    x_max: 12.0,
    n_points: 4000,
};

/// Default window and resolution for transformed (PDM) problems.
pub const DEFAULT_PDM_GRID: Grid = Grid {
    x_min: -15.0,
    x_max: 15.0,
    n_points: 4000,
};
