//! Deformed Rosen-Morse potential: V(y) = -V1 sech_q^2(beta y) - V2 tanh_q(beta y).
//!
//! The spectral parameter eta(n) = n + 1/2 - sqrt(1/4 + V1/(q beta^2)) is
//! negative for every admissible quantum number, which is what makes the
//! energies negative and the Jacobi superscripts well formed. Energies are
//! exact eigenvalues of -d^2/dy^2 + V (kinetic coefficient kappa = 1).

use crate::error::{Error, Result};
use crate::specfun::{deformed_cosh, deformed_sech, deformed_tanh, jacobi_eval, JacobiParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RosenMorseParams {
    pub v1: f64,
    pub v2: f64,
    pub beta: f64,
    pub q: f64,
}

impl RosenMorseParams {
    pub fn new(v1: f64, v2: f64, beta: f64, q: f64) -> Result<Self> {
        if !(v1 >= 0.0 && v1.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "Rosen-Morse well depth V1 must be >= 0, got {v1}"
            )));
        }
        if !v2.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Rosen-Morse tilt V2 must be finite, got {v2}"
            )));
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "Rosen-Morse range beta must be > 0, got {beta}"
            )));
        }
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "deformation q must be > 0, got {q}"
            )));
        }
        Ok(Self { v1, v2, beta, q })
    }

    /// Pointwise potential value.
    pub fn potential(&self, y: f64) -> Result<f64> {
        let s = deformed_sech(self.beta * y, self.q)?;
        let t = deformed_tanh(self.beta * y, self.q)?;
        Ok(-self.v1 * s * s - self.v2 * t)
    }

    /// sqrt(1/4 + V1 / (q beta^2)).
    fn radical(&self) -> f64 {
        (0.25 + self.v1 / (self.q * self.beta * self.beta)).sqrt()
    }

    /// Number of bound states: integers n with n < radical - 1/2, strictly
    /// (a state exactly at the zero-energy threshold is excluded).
    ///
    /// The count ignores the tilt: for V2 != 0 the asymptotic decay rates of
    /// level n are -beta eta -+ V2/(2 beta eta), so levels with
    /// eta^2 <= |V2| / (2 beta^2) are at or beyond the continuum threshold
    /// E = -|V2| and not normalizable even though they are counted here.
    /// [`Self::is_normalizable`] exposes that extra condition.
    pub fn num_bound_states(&self) -> usize {
        let bound = self.radical() - 0.5;
        if bound <= 0.0 {
            0
        } else {
            bound.ceil() as usize
        }
    }

    fn check_index(&self, n: usize) -> Result<()> {
        let count = self.num_bound_states();
        if n >= count {
            return Err(Error::StateIndex { n, count });
        }
        Ok(())
    }

    /// eta(n) = n + 1/2 - radical; negative for every valid n.
    pub fn eta(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(n as f64 + 0.5 - self.radical())
    }

    /// True when level n decays at both infinities: eta^2 > |V2|/(2 beta^2).
    pub fn is_normalizable(&self, n: usize) -> Result<bool> {
        let eta = self.eta(n)?;
        Ok(eta * eta > self.v2.abs() / (2.0 * self.beta * self.beta))
    }

    /// E(n) = -V2^2 / (4 beta^2 eta^2) - beta^2 eta^2.
    pub fn energy(&self, n: usize) -> Result<f64> {
        let eta = self.eta(n)?;
        if eta == 0.0 {
            return Err(Error::DegenerateState { n });
        }
        let b2 = self.beta * self.beta;
        Ok(-self.v2 * self.v2 / (4.0 * b2 * eta * eta) - b2 * eta * eta)
    }

    /// Unnormalized bound-state wavefunction
    /// phi_n(y) = cosh_q(beta y)^eta exp[-V2 y / (2 beta eta)]
    ///            P_n^{(-2 P+, -2 P-)}(-tanh_q(beta y)),
    /// with P+- = (eta +- V2 / (2 beta^2 eta)) / 2.
    pub fn wavefunction(&self, n: usize) -> Result<RosenMorseWavefunction> {
        let eta = self.eta(n)?;
        if eta == 0.0 {
            return Err(Error::DegenerateState { n });
        }
        let b2 = self.beta * self.beta;
        let p_plus = 0.5 * (eta + self.v2 / (2.0 * b2 * eta));
        let p_minus = 0.5 * (eta - self.v2 / (2.0 * b2 * eta));
        Ok(RosenMorseWavefunction {
            params: *self,
            eta,
            exp_slope: -self.v2 / (2.0 * self.beta * eta),
            jacobi: JacobiParams::real(n, -2.0 * p_plus, -2.0 * p_minus),
        })
    }
}

/// Sampler for a Rosen-Morse bound state; captures only immutable parameters.
#[derive(Debug, Clone)]
pub struct RosenMorseWavefunction {
    params: RosenMorseParams,
    eta: f64,
    exp_slope: f64,
    jacobi: JacobiParams,
}

impl RosenMorseWavefunction {
    pub fn eval(&self, y: f64) -> Result<f64> {
        let by = self.params.beta * y;
        let cosh = deformed_cosh(by, self.params.q)?;
        let tanh = deformed_tanh(by, self.params.q)?;
        let poly = jacobi_eval(&self.jacobi, (-tanh).into())?;
        Ok(cosh.powf(self.eta) * (self.exp_slope * y).exp() * poly.re)
    }
}
