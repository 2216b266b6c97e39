//! Cosine-power antiderivatives and adaptive quadrature.

use crate::error::{Error, Result};

/// Maximum recursion depth of the adaptive scheme before it reports failure.
pub const DEFAULT_MAX_DEPTH: usize = 60;

/// I_p(theta) = integral of cos^p t over [0, theta] for integer p >= 0, via
/// the reduction I_p = sin(t) cos^{p-1}(t)/p + (p-1)/p I_{p-2}, with
/// I_0 = theta and I_1 = sin(theta).
pub fn cos_power_antiderivative(p: u32, theta: f64) -> f64 {
    let (s, c) = (theta.sin(), theta.cos());
    let start = p % 2;
    let mut acc = if start == 0 { theta } else { s };
    let mut k = start + 2;
    while k <= p {
        let kf = f64::from(k);
        acc = s * c.powi(k as i32 - 1) / kf + (kf - 1.0) / kf * acc;
        k += 2;
    }
    acc
}

/// Integrate f over [x0, x1] to absolute accuracy tol by adaptive Simpson
/// subdivision (Richardson-corrected). Fails loudly when the subdivision
/// budget runs out instead of returning a bad value.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, x0: f64, x1: f64, tol: f64) -> Result<f64> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "quadrature tolerance must be positive, got {tol}"
        )));
    }
    if x0 == x1 {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if x0 < x1 {
        (x0, x1, 1.0)
    } else {
        (x1, x0, -1.0)
    };
    let mid = 0.5 * (lo + hi);
    let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
    for (x, v) in [(lo, flo), (mid, fmid), (hi, fhi)] {
        if !v.is_finite() {
            return Err(Error::Domain(format!("integrand not finite at x = {x}")));
        }
    }
    let whole = simpson(lo, hi, flo, fmid, fhi);
    let value = adapt(&f, lo, hi, flo, fmid, fhi, whole, tol, DEFAULT_MAX_DEPTH)?;
    Ok(sign * value)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    if !flm.is_finite() || !frm.is_finite() {
        return Err(Error::Domain(format!(
            "integrand not finite inside [{a}, {b}]"
        )));
    }
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    // Simpson halving gains a factor 16; delta/15 is the standard error
    // estimate of the refined value.
    if delta.abs() <= 15.0 * tol || (b - a).abs() < f64::EPSILON * (a.abs() + b.abs()) {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence {
            tol,
            max_depth: DEFAULT_MAX_DEPTH,
        });
    }
    let half_tol = 0.5 * tol;
    Ok(adapt(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
        + adapt(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?)
}
