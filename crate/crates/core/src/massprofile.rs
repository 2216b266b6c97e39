//! Position-dependent mass distributions and their closed-form mappings.
//!
//! Three parametrized families plus constant mass, each smooth and strictly
//! positive on the whole real line, with analytic first and second
//! derivatives. A profile knows which (profile, alpha) combinations admit a
//! closed-form mapping y = f(x) with f' = m^{2 alpha + 1}; everything else
//! falls back to the quadrature-built mapping (see [`crate::mapping`]).

use crate::error::{Error, Result};
use crate::mapping::{Mapping, MappingForm};

/// One of the supported mass distributions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MassProfile {
    /// m(x) = a^2 / (q + x^2)
    RationalSingle { a: f64, q: f64 },
    /// m(x) = a^2 / (b + x^2)^2
    RationalSquared { a: f64, b: f64 },
    /// m(x) = e^{-a x}
    Exponential { a: f64 },
    /// m(x) = 1
    Constant,
}

impl MassProfile {
    pub fn rational_single(a: f64, q: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rational-single profile needs a > 0, got a = {a}"
            )));
        }
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rational-single profile needs q > 0, got q = {q}"
            )));
        }
        Ok(Self::RationalSingle { a, q })
    }

    pub fn rational_squared(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rational-squared profile needs a > 0, got a = {a}"
            )));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rational-squared profile needs b > 0, got b = {b}"
            )));
        }
        Ok(Self::RationalSquared { a, b })
    }

    pub fn exponential(a: f64) -> Result<Self> {
        if a == 0.0 || !a.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "exponential profile needs a != 0, got a = {a}"
            )));
        }
        Ok(Self::Exponential { a })
    }

    /// m(x), strictly positive everywhere.
    pub fn mass(&self, x: f64) -> f64 {
        match *self {
            Self::RationalSingle { a, q } => a * a / (q + x * x),
            Self::RationalSquared { a, b } => {
                let d = b + x * x;
                a * a / (d * d)
            }
            Self::Exponential { a } => (-a * x).exp(),
            Self::Constant => 1.0,
        }
    }

    /// dm/dx.
    pub fn mass_d1(&self, x: f64) -> f64 {
        match *self {
            Self::RationalSingle { a, q } => {
                let d = q + x * x;
                -2.0 * a * a * x / (d * d)
            }
            Self::RationalSquared { a, b } => {
                let d = b + x * x;
                -4.0 * a * a * x / (d * d * d)
            }
            Self::Exponential { a } => -a * (-a * x).exp(),
            Self::Constant => 0.0,
        }
    }

    /// d2m/dx2.
    pub fn mass_d2(&self, x: f64) -> f64 {
        match *self {
            Self::RationalSingle { a, q } => {
                let d = q + x * x;
                a * a * (6.0 * x * x - 2.0 * q) / (d * d * d)
            }
            Self::RationalSquared { a, b } => {
                let d = b + x * x;
                a * a * (20.0 * x * x - 4.0 * b) / (d * d * d * d)
            }
            Self::Exponential { a } => a * a * (-a * x).exp(),
            Self::Constant => 0.0,
        }
    }

    /// f'(x) = m(x)^{2 alpha + 1}, the mapping derivative for any alpha.
    pub fn mapping_derivative(&self, alpha: f64, x: f64) -> f64 {
        let p = 2.0 * alpha + 1.0;
        if p == 0.0 {
            return 1.0;
        }
        self.mass(x).powf(p)
    }

    /// The closed-form mapping for (profile, alpha) when one exists.
    ///
    /// Covered cases:
    /// - constant mass, any alpha: identity;
    /// - rational-single, alpha = -1/4: y = a ln(x + sqrt(q + x^2));
    /// - rational-single, 4 alpha a nonnegative integer:
    ///   y = a^{4a+2} q^{-2a-1/2} I_{4a}(atan(x / sqrt q));
    /// - rational-squared, 8 alpha + 2 a nonnegative integer:
    ///   y = a^{4a+2} b^{-(4a+3/2)} I_{8a+2}(atan(x / sqrt b));
    /// - exponential, any alpha (alpha = -1/2 degenerates to the identity):
    ///   y = -e^{-(2a+1)ax} / ((2a+1)a).
    ///
    /// Here I_p is the cosine-power antiderivative. Anything else returns
    /// `None` and the caller builds the mapping by quadrature.
    pub fn closed_form_mapping(&self, alpha: f64) -> Option<Mapping> {
        let form = match *self {
            Self::Constant => Some(MappingForm::Identity),
            Self::RationalSingle { a, q } => {
                if alpha == -0.25 {
                    Some(MappingForm::Log { a, q })
                } else {
                    nonneg_integer(4.0 * alpha).map(|p| MappingForm::CosPower {
                        scale: a.powf(4.0 * alpha + 2.0) * q.powf(-2.0 * alpha - 0.5),
                        x_scale: q.sqrt(),
                        p,
                    })
                }
            }
            Self::RationalSquared { a, b } => {
                nonneg_integer(8.0 * alpha + 2.0).map(|p| MappingForm::CosPower {
                    scale: a.powf(4.0 * alpha + 2.0) * b.powf(-(4.0 * alpha + 1.5)),
                    x_scale: b.sqrt(),
                    p,
                })
            }
            Self::Exponential { a } => {
                let c = (2.0 * alpha + 1.0) * a;
                if c == 0.0 {
                    // f' = m^0 = 1: the degenerate identity mapping.
                    Some(MappingForm::Identity)
                } else {
                    Some(MappingForm::Exp { c })
                }
            }
        };
        form.map(|f| Mapping::from_closed_form(*self, alpha, f))
    }
}

/// Some(v as u32) when v is a nonnegative integer up to float tolerance.
fn nonneg_integer(v: f64) -> Option<u32> {
    let r = v.round();
    if r >= 0.0 && (v - r).abs() < 1e-12 {
        Some(r as u32)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn pointwise_values() {
        let p = MassProfile::rational_single(1.0, 1.0).unwrap();
        assert_eq!(p.mass(0.0), 1.0);

        let p = MassProfile::rational_squared(2.0, 1.0).unwrap();
        assert_eq!(p.mass(1.0), 1.0); // 4/4

        let p = MassProfile::exponential(1.0).unwrap();
        assert_eq!(p.mass(0.0), 1.0);
        assert_eq!(p.mass_d1(0.0), -1.0);
    }

    #[test]
    fn constructor_validation() {
        assert!(MassProfile::rational_single(0.0, 1.0).is_err());
        assert!(MassProfile::rational_single(1.0, -1.0).is_err());
        assert!(MassProfile::rational_squared(1.0, 0.0).is_err());
        assert!(MassProfile::exponential(0.0).is_err());
    }

    #[test]
    fn positivity_on_grid() {
        let profiles = [
            MassProfile::rational_single(0.7, 2.5).unwrap(),
            MassProfile::rational_squared(1.3, 0.8).unwrap(),
            MassProfile::exponential(-0.4).unwrap(),
            MassProfile::Constant,
        ];
        for p in profiles {
            let mut x = -12.0;
            while x <= 12.0 {
                assert!(p.mass(x) > 0.0, "{p:?} at x={x}");
                x += 0.25;
            }
        }
    }

    #[test]
    fn analytic_derivatives_match_finite_differences() {
        let profiles = [
            MassProfile::rational_single(1.0, 1.0).unwrap(),
            MassProfile::rational_single(0.7, 2.5).unwrap(),
            MassProfile::rational_squared(1.0, 1.0).unwrap(),
            MassProfile::exponential(0.5).unwrap(),
        ];
        let h = 1e-4;
        for p in profiles {
            let mut x = -6.0;
            while x <= 6.0 {
                let d1 = (p.mass(x + h) - p.mass(x - h)) / (2.0 * h);
                let d2 = (p.mass(x + h) - 2.0 * p.mass(x) + p.mass(x - h)) / (h * h);
                let s1 = p.mass_d1(x).abs().max(1e-3);
                let s2 = p.mass_d2(x).abs().max(1e-3);
                assert!(
                    (p.mass_d1(x) - d1).abs() <= 1e-6 * s1,
                    "{p:?} m' at x={x}: {} vs {d1}",
                    p.mass_d1(x)
                );
                assert!(
                    (p.mass_d2(x) - d2).abs() <= 1e-6 * s2,
                    "{p:?} m'' at x={x}: {} vs {d2}",
                    p.mass_d2(x)
                );
                x += 0.5;
            }
        }
    }

    #[test]
    fn closed_form_arctan_case() {
        // rational-single, alpha = 0: f = (a^2/sqrt q) atan(x / sqrt q)
        let p = MassProfile::rational_single(1.0, 1.0).unwrap();
        let f = p.closed_form_mapping(0.0).unwrap();
        assert!((f.eval(1.0).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((f.invert(PI / 4.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_log_case() {
        // rational-single, alpha = -1/4: f = a ln(x + sqrt(q + x^2)), which is
        // arcsinh(x) at a = q = 1.
        let p = MassProfile::rational_single(1.0, 1.0).unwrap();
        let f = p.closed_form_mapping(-0.25).unwrap();
        assert_eq!(f.eval(0.0).unwrap(), 0.0);
        for x in [0.5, 1.0, 3.0] {
            assert!((f.eval(x).unwrap() - x.asinh()).abs() < 1e-14);
        }
        // anchored at f(0) = a ln sqrt(q) in general
        let p = MassProfile::rational_single(2.0, 4.0).unwrap();
        let f = p.closed_form_mapping(-0.25).unwrap();
        assert!((f.eval(0.0).unwrap() - 2.0 * 4.0f64.sqrt().ln()).abs() < 1e-14);
    }

    #[test]
    fn closed_form_exponential_case() {
        let p = MassProfile::exponential(1.0).unwrap();
        let f = p.closed_form_mapping(0.0).unwrap();
        assert_eq!(f.eval(0.0).unwrap(), -1.0);
        assert!((f.invert(-1.0).unwrap() - 0.0).abs() < 1e-14);
        // degenerate alpha = -1/2 is the identity, not an error
        let id = p.closed_form_mapping(-0.5).unwrap();
        assert_eq!(id.eval(3.25).unwrap(), 3.25);
    }

    #[test]
    fn closed_form_coverage_table() {
        let rs = MassProfile::rational_single(1.0, 1.0).unwrap();
        assert!(rs.closed_form_mapping(0.0).is_some());
        assert!(rs.closed_form_mapping(-0.25).is_some());
        assert!(rs.closed_form_mapping(1.0).is_some());
        assert!(rs.closed_form_mapping(0.3).is_none());

        let rq = MassProfile::rational_squared(1.0, 1.0).unwrap();
        assert!(rq.closed_form_mapping(0.0).is_some());
        assert!(rq.closed_form_mapping(-0.25).is_some());
        assert!(rq.closed_form_mapping(0.5).is_some());
        assert!(rq.closed_form_mapping(0.4).is_none());

        assert!(MassProfile::Constant.closed_form_mapping(0.77).is_some());
    }

    #[test]
    fn closed_forms_agree_with_quadrature_of_mapping_derivative() {
        use crate::specfun::integrate_adaptive;
        let cases = [
            (MassProfile::rational_single(1.0, 1.0).unwrap(), 0.0),
            (MassProfile::rational_single(1.3, 2.0).unwrap(), -0.25),
            (MassProfile::rational_single(1.0, 1.0).unwrap(), 1.0),
            (MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.0),
            (MassProfile::rational_squared(0.9, 1.5).unwrap(), -0.25),
            (MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.5),
            (MassProfile::exponential(0.5).unwrap(), 0.0),
            (MassProfile::exponential(1.0).unwrap(), 0.25),
        ];
        for (profile, alpha) in cases {
            let f = profile.closed_form_mapping(alpha).unwrap();
            let f0 = f.eval(0.0).unwrap();
            for i in 0..20 {
                let x = -5.0 + 0.5 * i as f64;
                let quad =
                    integrate_adaptive(|t| profile.mapping_derivative(alpha, t), 0.0, x, 1e-12)
                        .unwrap();
                let closed = f.eval(x).unwrap() - f0;
                assert!(
                    (closed - quad).abs() < 1e-10,
                    "{profile:?} alpha={alpha} x={x}: closed {closed} vs quad {quad}"
                );
            }
        }
    }
}
