//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for the
//! lowest eigenvalues plus shifted inverse iteration for eigenvectors.
//!
//! The matrix is stored as (diagonal, off-diagonal) only, so it is symmetric
//! by representation. Bisection resolves each eigenvalue to machine-level
//! relative accuracy of the discrete operator; for the window sizes used
//! here (N up to a few hundred thousand) this is both simpler and faster
//! than dense routines.

use crate::error::{Error, Result};
use crate::parallel::map_indexed;

/// Guard against vanishing pivots in the LDL Sturm sequence.
const PIVOT_GUARD: f64 = 1e-300;
/// Bisection iteration cap; 200 halvings exhaust f64 resolution many times over.
const BISECT_MAX_ITER: usize = 200;
const INVERSE_ITERATIONS: usize = 4;

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "tridiagonal shape mismatch: {} diagonal vs {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below lambda (negative pivots of the
    /// shifted LDL factorization).
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut piv = self.diag[0] - lambda;
        if piv < 0.0 {
            count += 1;
        }
        for i in 1..self.size() {
            let safe = if piv.abs() < PIVOT_GUARD {
                if piv >= 0.0 {
                    PIVOT_GUARD
                } else {
                    -PIVOT_GUARD
                }
            } else {
                piv
            };
            piv = (self.diag[i] - lambda) - self.off[i - 1] * self.off[i - 1] / safe;
            if piv < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin bounds on the spectrum, padded by one unit.
    fn spectral_bounds(&self) -> (f64, f64) {
        let n = self.size();
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo - 1.0, hi + 1.0)
    }

    /// The k lowest eigenvalues, ascending, each resolved by bisection.
    pub fn lowest_eigenvalues(&self, k: usize) -> Result<Vec<f64>> {
        if k == 0 || k > self.size() {
            return Err(Error::Eigensolver(format!(
                "requested {k} eigenvalues of a {} x {0} matrix",
                self.size()
            )));
        }
        let (lo, hi) = self.spectral_bounds();
        let values = map_indexed(k, |idx| {
            let mut a = lo;
            let mut b = hi;
            for _ in 0..BISECT_MAX_ITER {
                let mid = 0.5 * (a + b);
                if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                    break;
                }
                if self.sturm_count(mid) <= idx {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            0.5 * (a + b)
        });
        Ok(values)
    }

    /// Eigenvector for an isolated eigenvalue by shifted inverse iteration;
    /// returned with unit 2-norm, sign fixed so the entry of largest
    /// magnitude is positive.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.size();
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        // Tiny relative offset keeps the shifted solve well posed when
        // lambda is an eigenvalue to machine precision.
        let shift = lambda * (1.0 + 1e-14) + 1e-300;
        for _ in 0..INVERSE_ITERATIONS {
            v = self.solve_shifted(shift, &v)?;
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !norm.is_finite() || norm == 0.0 {
                return Err(Error::Eigensolver(format!(
                    "inverse iteration broke down at lambda = {lambda}"
                )));
            }
            for x in &mut v {
                *x /= norm;
            }
        }
        let mut max_idx = 0;
        for i in 1..n {
            if v[i].abs() > v[max_idx].abs() {
                max_idx = i;
            }
        }
        if v[max_idx] < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
        Ok(v)
    }

    /// Solve (T - shift I) x = b by LU with partial pivoting specialized to
    /// the tridiagonal band (fill-in limited to a second superdiagonal).
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.size();
        let mut main: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut upper1: Vec<f64> = self.off.clone();
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut lower = self.off.clone();
        let mut x = b.to_vec();

        let guard = |p: f64| {
            if p.abs() < PIVOT_GUARD {
                PIVOT_GUARD.copysign(if p == 0.0 { 1.0 } else { p })
            } else {
                p
            }
        };

        for i in 0..n - 1 {
            if lower[i].abs() > main[i].abs() {
                // Swap rows i and i+1 column by column.
                std::mem::swap(&mut main[i], &mut lower[i]);
                std::mem::swap(&mut upper1[i], &mut main[i + 1]);
                if i + 2 < n {
                    std::mem::swap(&mut upper2[i], &mut upper1[i + 1]);
                }
                x.swap(i, i + 1);
            }
            let piv = guard(main[i]);
            let factor = lower[i] / piv;
            main[i + 1] -= factor * upper1[i];
            if i + 2 < n {
                upper1[i + 1] -= factor * upper2[i];
            }
            x[i + 1] -= factor * x[i];
        }

        // Back substitution against the (main, upper1, upper2) band.
        x[n - 1] /= guard(main[n - 1]);
        if n >= 2 {
            x[n - 2] = (x[n - 2] - upper1[n - 2] * x[n - 1]) / guard(main[n - 2]);
        }
        for i in (0..n.saturating_sub(2)).rev() {
            x[i] = (x[i] - upper1[i] * x[i + 1] - upper2[i] * x[i + 2]) / guard(main[i]);
        }
        Ok(x)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.size();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.off[i - 1] * v[i - 1];
            }
            if i < n - 1 {
                acc += self.off[i] * v[i + 1];
            }
            out[i] = acc;
        }
        out
    }
}
