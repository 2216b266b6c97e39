//! Jacobi polynomials P_n^{(a,b)}(z) with complex superscripts and argument.
//!
//! Bound-state wavefunctions need only small degrees (n < 10 in practice),
//! so the three-term degree recurrence in complex arithmetic is both the
//! simplest and the most robust evaluation route; no hypergeometric series.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Degree and (possibly complex) superscripts of a Jacobi polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub n: usize,
    pub a: Complex64,
    pub b: Complex64,
}

impl JacobiParams {
    pub fn new(n: usize, a: Complex64, b: Complex64) -> Self {
        Self { n, a, b }
    }

    pub fn real(n: usize, a: f64, b: f64) -> Self {
        Self::new(n, Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }
}

/// Evaluate P_n^{(a,b)}(z) by the three-term recurrence
///
///   2k (k+a+b) (2k+a+b-2) P_k
///     = (2k+a+b-1) [ (2k+a+b)(2k+a+b-2) z + a^2 - b^2 ] P_{k-1}
///       - 2 (k+a-1)(k+b-1)(2k+a+b) P_{k-2}.
pub fn jacobi_eval(p: &JacobiParams, z: Complex64) -> Result<Complex64> {
    let (a, b) = (p.a, p.b);
    if p.n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = (a - b) / 2.0 + (a + b + 2.0) * z / 2.0;
    for k in 2..=p.n {
        let kf = k as f64;
        let s = a + b + 2.0 * kf; // 2k + a + b
        let denom = 2.0 * kf * (a + b + kf) * (s - 2.0);
        if denom.norm() == 0.0 {
            return Err(Error::Domain(format!(
                "Jacobi recurrence degenerate at degree {k} (a + b = {})",
                a + b
            )));
        }
        let next = ((s - 1.0) * ((s * (s - 2.0)) * z + a * a - b * b) * cur
            - 2.0 * (a + (kf - 1.0)) * (b + (kf - 1.0)) * s * prev)
            / denom;
        if !next.re.is_finite() || !next.im.is_finite() {
            return Err(Error::Overflow(format!(
                "Jacobi recurrence at degree {k} of {}",
                p.n
            )));
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
