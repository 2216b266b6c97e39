//! The coordinate mapping y = f(x) defined by f' = m^{2 alpha + 1}.
//!
//! Closed forms are used whenever the profile tabulates one; otherwise the
//! mapping is materialized as a knot table on an evaluation window, with the
//! integral accumulated by adaptive quadrature from the anchor f(0) = 0 and
//! refined locally on evaluation. f is strictly increasing (the integrand is
//! positive), so inversion is safeguarded Newton over a bracketing interval.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::massprofile::MassProfile;
use crate::specfun::{cos_power_antiderivative, integrate_adaptive};

/// Per-interval quadrature tolerance used while accumulating knot values.
const KNOT_TOL: f64 = 1e-13;
/// Tolerance for the local refinement between a knot and the query point.
const EVAL_TOL: f64 = 1e-13;
/// Relative accuracy target of `invert` (on the f-residual).
const INVERT_TOL: f64 = 1e-14;

#[derive(Debug, Clone)]
pub(crate) enum MappingForm {
    /// f(x) = x.
    Identity,
    /// f(x) = scale * I_p(atan(x / x_scale)) with I_p the cosine-power
    /// antiderivative; covers every arctan-type closed form.
    CosPower { scale: f64, x_scale: f64, p: u32 },
    /// f(x) = a ln(x + sqrt(q + x^2)).
    Log { a: f64, q: f64 },
    /// f(x) = -e^{-c x} / c.
    Exp { c: f64 },
    /// Quadrature-accumulated knots on a window.
    Table(Arc<MappingTable>),
}

/// Monotone mapping with evaluation, exact derivative, and inversion.
#[derive(Debug, Clone)]
pub struct Mapping {
    profile: MassProfile,
    alpha: f64,
    form: MappingForm,
}

impl Mapping {
    pub(crate) fn from_closed_form(profile: MassProfile, alpha: f64, form: MappingForm) -> Self {
        Self {
            profile,
            alpha,
            form,
        }
    }

    /// Build the mapping by quadrature on `window` (which must contain 0,
    /// where the accumulation is anchored at f(0) = 0).
    pub fn tabulated(
        profile: MassProfile,
        alpha: f64,
        window: (f64, f64),
        n_intervals: usize,
    ) -> Result<Self> {
        let table = MappingTable::build(profile, alpha, window, n_intervals)?;
        Ok(Self {
            profile,
            alpha,
            form: MappingForm::Table(Arc::new(table)),
        })
    }

    /// True when this mapping is a tabulated closed form rather than a
    /// quadrature table.
    pub fn is_closed_form(&self) -> bool {
        !matches!(self.form, MappingForm::Table(_))
    }

    /// y = f(x).
    pub fn eval(&self, x: f64) -> Result<f64> {
        match &self.form {
            MappingForm::Identity => Ok(x),
            MappingForm::CosPower { scale, x_scale, p } => {
                Ok(scale * cos_power_antiderivative(*p, (x / x_scale).atan()))
            }
            MappingForm::Log { a, q } => Ok(a * (x + (q + x * x).sqrt()).ln()),
            MappingForm::Exp { c } => Ok(-(-c * x).exp() / c),
            MappingForm::Table(t) => t.eval(&self.profile, self.alpha, x),
        }
    }

    /// f'(x) = m(x)^{2 alpha + 1}, exact for every form.
    pub fn derivative(&self, x: f64) -> f64 {
        self.profile.mapping_derivative(self.alpha, x)
    }

    /// The attained (open) range of f; table mappings report the range
    /// materialized on their window.
    pub fn range(&self) -> (f64, f64) {
        match &self.form {
            MappingForm::Identity | MappingForm::Log { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            MappingForm::CosPower { scale, p, .. } => {
                let l = scale * cos_power_antiderivative(*p, FRAC_PI_2);
                (-l, l)
            }
            MappingForm::Exp { c } => {
                if *c > 0.0 {
                    (f64::NEG_INFINITY, 0.0)
                } else {
                    (0.0, f64::INFINITY)
                }
            }
            MappingForm::Table(t) => (t.y[0], *t.y.last().unwrap()),
        }
    }

    /// x with f(x) = y, to relative accuracy 1e-12; errors outside the range.
    pub fn invert(&self, y: f64) -> Result<f64> {
        match &self.form {
            MappingForm::Identity => Ok(y),
            MappingForm::CosPower { scale, x_scale, p } => {
                let (lo, hi) = self.range();
                if !(y > lo && y < hi) {
                    return Err(Error::MappingRange { y, lo, hi });
                }
                let theta = invert_cos_power(*p, y / scale)?;
                Ok(x_scale * theta.tan())
            }
            MappingForm::Log { a, q } => {
                // y/a = ln(x + sqrt(q + x^2)) = arcsinh(x / sqrt q) + ln sqrt q
                let t = y / a - 0.5 * q.ln();
                Ok(q.sqrt() * t.sinh())
            }
            MappingForm::Exp { c } => {
                let arg = -c * y;
                if arg <= 0.0 {
                    let (lo, hi) = self.range();
                    return Err(Error::MappingRange { y, lo, hi });
                }
                Ok(-arg.ln() / c)
            }
            MappingForm::Table(t) => t.invert(&self.profile, self.alpha, y),
        }
    }
}

/// Solve I_p(theta) = target on (-pi/2, pi/2) by bracketed Newton; the
/// derivative of I_p is cos^p, positive on the open interval.
fn invert_cos_power(p: u32, target: f64) -> Result<f64> {
    let mut lo = -FRAC_PI_2;
    let mut hi = FRAC_PI_2;
    let mut theta = target.clamp(lo + 1e-12, hi - 1e-12); // I_p(t) ~ t near 0
    for _ in 0..200 {
        let g = cos_power_antiderivative(p, theta) - target;
        if g.abs() <= 1e-15 * (1.0 + target.abs()) {
            return Ok(theta);
        }
        if g > 0.0 {
            hi = theta;
        } else {
            lo = theta;
        }
        let deriv = theta.cos().powi(p as i32);
        let newton = theta - g / deriv;
        theta = if deriv > 1e-12 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < 1e-16 {
            return Ok(theta);
        }
    }
    Ok(theta)
}

/// Uniform knot table for quadrature-built mappings.
#[derive(Debug)]
pub(crate) struct MappingTable {
    x_lo: f64,
    h: f64,
    y: Vec<f64>,
}

impl MappingTable {
    fn build(
        profile: MassProfile,
        alpha: f64,
        (lo, hi): (f64, f64),
        n_intervals: usize,
    ) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi || n_intervals < 2 {
            return Err(Error::InvalidParameter(format!(
                "mapping window must satisfy lo < hi with >= 2 intervals, got [{lo}, {hi}] / {n_intervals}"
            )));
        }
        if !(lo <= 0.0 && hi >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "mapping window [{lo}, {hi}] must contain the anchor x = 0"
            )));
        }
        let h = (hi - lo) / n_intervals as f64;
        let n_knots = n_intervals + 1;
        let fp = |x: f64| profile.mapping_derivative(alpha, x);
        let knot = |i: usize| lo + i as f64 * h;

        // Anchor at the knot nearest x = 0, then accumulate outward so the
        // constant of integration is f(0) = 0 with no directional drift.
        let i0 = ((-lo) / h).round() as usize;
        let i0 = i0.min(n_intervals);
        let mut y = vec![0.0; n_knots];
        y[i0] = integrate_adaptive(fp, 0.0, knot(i0), KNOT_TOL)?;
        for i in (i0 + 1)..n_knots {
            y[i] = y[i - 1] + integrate_adaptive(fp, knot(i - 1), knot(i), KNOT_TOL)?;
        }
        for i in (0..i0).rev() {
            y[i] = y[i + 1] - integrate_adaptive(fp, knot(i), knot(i + 1), KNOT_TOL)?;
        }
        Ok(Self { x_lo: lo, h, y })
    }

    fn eval(&self, profile: &MassProfile, alpha: f64, x: f64) -> Result<f64> {
        let fp = |t: f64| profile.mapping_derivative(alpha, t);
        let n = self.y.len();
        let idx = ((x - self.x_lo) / self.h).round();
        let k = if idx < 0.0 {
            0
        } else if idx >= n as f64 {
            n - 1
        } else {
            idx as usize
        };
        let xk = self.x_lo + k as f64 * self.h;
        Ok(self.y[k] + integrate_adaptive(fp, xk, x, EVAL_TOL)?)
    }

    fn invert(&self, profile: &MassProfile, alpha: f64, target: f64) -> Result<f64> {
        let (y_lo, y_hi) = (self.y[0], *self.y.last().unwrap());
        if !(target >= y_lo && target <= y_hi) {
            return Err(Error::MappingRange {
                y: target,
                lo: y_lo,
                hi: y_hi,
            });
        }
        // Knot values are strictly increasing; find the bracketing interval.
        let k = match self
            .y
            .binary_search_by(|v| v.partial_cmp(&target).expect("knot values are finite"))
        {
            Ok(i) => return Ok(self.x_lo + i as f64 * self.h),
            Err(i) => i.saturating_sub(1).min(self.y.len() - 2),
        };
        let mut lo = self.x_lo + k as f64 * self.h;
        let mut hi = lo + self.h;
        let frac = (target - self.y[k]) / (self.y[k + 1] - self.y[k]);
        let mut x = lo + frac.clamp(0.0, 1.0) * self.h;
        for _ in 0..100 {
            let g = self.eval(profile, alpha, x)? - target;
            if g.abs() <= INVERT_TOL * (1.0 + target.abs()) {
                return Ok(x);
            }
            if g > 0.0 {
                hi = x;
            } else {
                lo = x;
            }
            let deriv = profile.mapping_derivative(alpha, x);
            let newton = x - g / deriv;
            x = if newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
        }
        Err(Error::Eigensolver(format!(
            "mapping inversion failed to converge at y = {target}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn table_mapping(profile: MassProfile, alpha: f64) -> Mapping {
        Mapping::tabulated(profile, alpha, (-12.0, 12.0), 1024).unwrap()
    }

    #[test]
    fn table_matches_direct_quadrature() {
        let profile = MassProfile::rational_single(1.0, 1.0).unwrap();
        let alpha = 0.3;
        let f = table_mapping(profile, alpha);
        for i in 0..25 {
            let x = -6.0 + 0.5 * i as f64;
            let direct =
                integrate_adaptive(|t| profile.mapping_derivative(alpha, t), 0.0, x, 1e-13)
                    .unwrap();
            assert!(
                (f.eval(x).unwrap() - direct).abs() < 1e-11,
                "x={x}: {} vs {direct}",
                f.eval(x).unwrap()
            );
        }
    }

    #[test]
    fn table_round_trips_under_inversion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6d617031);
        let cases = [
            (MassProfile::rational_single(1.0, 1.0).unwrap(), 0.3, 8.0),
            (MassProfile::rational_squared(1.0, 1.5).unwrap(), 0.15, 5.0),
            (MassProfile::rational_single(0.8, 2.0).unwrap(), -0.6, 8.0),
        ];
        for (profile, alpha, half) in cases {
            let f = table_mapping(profile, alpha);
            for _ in 0..50 {
                let x = rng.gen_range(-half..half);
                let y = f.eval(x).unwrap();
                let back = f.invert(y).unwrap();
                assert!(
                    (back - x).abs() < 1e-10 * (1.0 + x.abs()),
                    "{profile:?} alpha={alpha} x={x} -> y={y} -> {back}"
                );
            }
        }
    }

    #[test]
    fn closed_form_round_trips() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6d617032);
        let cases = [
            (MassProfile::rational_single(1.0, 1.0).unwrap(), 0.0),
            (MassProfile::rational_single(1.2, 3.0).unwrap(), -0.25),
            (MassProfile::rational_single(1.0, 1.0).unwrap(), 1.0),
            (MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.5),
            (MassProfile::exponential(0.7).unwrap(), 0.1),
            (MassProfile::Constant, 0.4),
        ];
        for (profile, alpha) in cases {
            let f = profile.closed_form_mapping(alpha).unwrap();
            for _ in 0..50 {
                let x = rng.gen_range(-6.0..6.0);
                let y = f.eval(x).unwrap();
                let back = f.invert(y).unwrap();
                assert!(
                    (f.eval(back).unwrap() - y).abs() < 1e-12 * (1.0 + y.abs()),
                    "{profile:?} alpha={alpha}: x={x}"
                );
                assert!(
                    (back - x).abs() < 1e-9 * (1.0 + x.abs()),
                    "{profile:?} alpha={alpha}: x={x} back={back}"
                );
            }
        }
    }

    #[test]
    fn monotonicity_on_samples() {
        let cases = [
            MassProfile::rational_single(1.0, 1.0)
                .unwrap()
                .closed_form_mapping(1.0)
                .unwrap(),
            table_mapping(MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.3),
            MassProfile::exponential(-0.5)
                .unwrap()
                .closed_form_mapping(0.2)
                .unwrap(),
        ];
        for f in cases {
            let mut prev = f.eval(-8.0).unwrap();
            let mut x = -7.75;
            while x <= 8.0 {
                let cur = f.eval(x).unwrap();
                assert!(cur > prev, "not increasing at x={x}");
                prev = cur;
                x += 0.25;
            }
        }
    }

    #[test]
    fn finite_range_reported_and_enforced() {
        // alpha = 0, a = q = 1 maps onto (-pi/2, pi/2).
        let f = MassProfile::rational_single(1.0, 1.0)
            .unwrap()
            .closed_form_mapping(0.0)
            .unwrap();
        let (lo, hi) = f.range();
        assert!((lo + PI / 2.0).abs() < 1e-15 && (hi - PI / 2.0).abs() < 1e-15);
        match f.invert(2.0) {
            Err(Error::MappingRange { lo, hi, .. }) => {
                assert!((hi - PI / 2.0).abs() < 1e-15 && (lo + PI / 2.0).abs() < 1e-15);
            }
            other => panic!("expected range error, got {other:?}"),
        }
        // Exponential range is a half line.
        let f = MassProfile::exponential(1.0)
            .unwrap()
            .closed_form_mapping(0.0)
            .unwrap();
        assert!(f.invert(0.5).is_err());
        assert!(f.invert(-0.5).is_ok());
    }

    #[test]
    fn numerical_derivative_recovers_mass_power() {
        // f' = m^{2 alpha + 1}: five-point Richardson stencil against the
        // analytic power, relative to the local derivative value.
        let cases: Vec<(MassProfile, f64, Mapping, f64)> = vec![
            {
                let p = MassProfile::rational_single(1.0, 1.0).unwrap();
                (p, 0.0, p.closed_form_mapping(0.0).unwrap(), 8.0)
            },
            {
                let p = MassProfile::rational_single(1.0, 1.0).unwrap();
                (p, -0.25, p.closed_form_mapping(-0.25).unwrap(), 8.0)
            },
            {
                // f' = m^2 = (1+x^2)^{-4} decays so fast that beyond
                // |x| ~ 5 the 1e-8 relative check runs out of f64
                // significand; sample where the comparison is well posed.
                let p = MassProfile::rational_squared(1.0, 1.0).unwrap();
                (p, 0.5, p.closed_form_mapping(0.5).unwrap(), 5.0)
            },
            {
                let p = MassProfile::exponential(1.0).unwrap();
                (p, 0.0, p.closed_form_mapping(0.0).unwrap(), 6.0)
            },
            {
                let p = MassProfile::rational_single(1.0, 1.0).unwrap();
                (p, 0.3, table_mapping(p, 0.3), 6.0)
            },
        ];
        let h = 0.005;
        for (profile, alpha, f, half_width) in cases {
            for i in 0..100 {
                let x = -half_width + (2.0 * half_width) * (i as f64 + 0.5) / 100.0;
                let e = |t: f64| f.eval(t).unwrap();
                let diff =
                    (8.0 * (e(x + h) - e(x - h)) - (e(x + 2.0 * h) - e(x - 2.0 * h))) / (12.0 * h);
                let exact = profile.mapping_derivative(alpha, x);
                assert!(
                    (diff - exact).abs() <= 1e-8 * exact.abs(),
                    "{profile:?} alpha={alpha} x={x}: {diff} vs {exact}"
                );
            }
        }
    }
}
