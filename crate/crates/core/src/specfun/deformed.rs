//! q-deformed hyperbolic functions.
//!
//! sinh_q(y) = (e^y - q e^{-y})/2,  cosh_q(y) = (e^y + q e^{-y})/2, and the
//! four derived ratios. The deformation parameter q must be strictly
//! positive; cosh_q is then positive everywhere, while sinh_q has its single
//! zero at y = ln sqrt(q). Setting q = 1 recovers the ordinary hyperbolic
//! functions, and more generally
//!
//!   sinh_q(y) = sqrt(q) sinh(y - ln sqrt(q)),
//!   cosh_q(y) = sqrt(q) cosh(y - ln sqrt(q)),
//!
//! so a deformation is a coordinate translation plus rescaling.

use crate::error::{Error, Result};

/// Arguments with |y| beyond this would overflow exp in double precision;
/// they are rejected rather than silently saturated.
pub const EXP_ARG_LIMIT: f64 = 700.0;

/// Validated (y, q) argument pair for the deformed functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedArg {
    y: f64,
    q: f64,
}

impl DeformedArg {
    pub fn new(y: f64, q: f64) -> Result<Self> {
        if q <= 0.0 || !q.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "deformation q must be a positive finite real, got {q}"
            )));
        }
        if !y.is_finite() || y.abs() > EXP_ARG_LIMIT {
            return Err(Error::Domain(format!(
                "|y| = {} exceeds the exp overflow threshold {EXP_ARG_LIMIT}",
                y.abs()
            )));
        }
        Ok(Self { y, q })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    fn sinh(&self) -> f64 {
        ((self.y).exp() - self.q * (-self.y).exp()) / 2.0
    }

    fn cosh(&self) -> f64 {
        ((self.y).exp() + self.q * (-self.y).exp()) / 2.0
    }
}

/// sinh_q(y) = (e^y - q e^{-y})/2.
pub fn deformed_sinh(y: f64, q: f64) -> Result<f64> {
    Ok(DeformedArg::new(y, q)?.sinh())
}

/// cosh_q(y) = (e^y + q e^{-y})/2; strictly positive for q > 0.
pub fn deformed_cosh(y: f64, q: f64) -> Result<f64> {
    Ok(DeformedArg::new(y, q)?.cosh())
}

/// tanh_q = sinh_q / cosh_q.
pub fn deformed_tanh(y: f64, q: f64) -> Result<f64> {
    let arg = DeformedArg::new(y, q)?;
    Ok(arg.sinh() / arg.cosh())
}

/// sech_q = 1 / cosh_q.
pub fn deformed_sech(y: f64, q: f64) -> Result<f64> {
    Ok(1.0 / DeformedArg::new(y, q)?.cosh())
}

/// cosech_q = 1 / sinh_q; pole at y = ln sqrt(q).
pub fn deformed_cosech(y: f64, q: f64) -> Result<f64> {
    let s = DeformedArg::new(y, q)?.sinh();
    if s == 0.0 {
        return Err(Error::Pole { func: "cosech", y });
    }
    Ok(1.0 / s)
}

/// coth_q = cosh_q / sinh_q; pole at y = ln sqrt(q).
pub fn deformed_coth(y: f64, q: f64) -> Result<f64> {
    let arg = DeformedArg::new(y, q)?;
    let s = arg.sinh();
    if s == 0.0 {
        return Err(Error::Pole { func: "coth", y });
    }
    Ok(arg.cosh() / s)
}
