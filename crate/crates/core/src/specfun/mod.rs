//! Special-function bedrock: deformed hyperbolic functions, Jacobi polynomials
//! with complex parameters, cosine-power antiderivatives, and adaptive
//! quadrature.
//!
//! Everything here is a pure function of its arguments and safe to call from
//! any number of threads.

mod deformed;
mod integrate;
mod jacobi;

pub use deformed::{
    deformed_cosech, deformed_cosh, deformed_coth, deformed_sech, deformed_sinh, deformed_tanh,
    DeformedArg, EXP_ARG_LIMIT,
};
pub use integrate::{cos_power_antiderivative, integrate_adaptive, DEFAULT_MAX_DEPTH};
pub use jacobi::{jacobi_eval, JacobiParams};
