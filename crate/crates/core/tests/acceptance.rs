//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! per checked item (run with `--nocapture` to see them all).
//!
//! Criterion 8 (CLI determinism and exit-code contract) lives in the
//! pdmsolve-cli crate's `acceptance` test target, next to the binary it
//! exercises.
//!
//! Known physics limitation, deliberately not masked: three of the six
//! isospectrality configurations (criterion 4) use mappings whose range is a
//! finite interval (arctan-type), so the transformed problem is unitarily
//! equivalent to the reference potential hard-walled at the interval ends
//! where its bound states have not decayed. The finite-difference eigenvalue
//! then converges (in window and resolution) to the walled spectrum, about
//! 0.09-0.18 away from the full-line analytic energy, so those entries fail
//! the 1e-3 tolerance at any grid, and their convergence rows (criterion 6)
//! stall at the wall-limited value. The `wall_equivalence` integration test
//! pins the same numbers to the hard-walled reference to 2e-4, showing the
//! transformation itself is exact. Criteria 5 and 7 pass for every
//! configuration, including the wall-limited ones.

use std::f64::consts::{FRAC_PI_2, PI};

use pdmsolve_core::oracle::{
    solve_constant_mass, verify_isospectrality, Grid, StateRecord, VerifyOptions,
    DEFAULT_CONSTANT_GRID,
};
use pdmsolve_core::pct::PctContext;
use pdmsolve_core::refpot::{BranchSign, RosenMorseParams, ScarfParams};
use pdmsolve_core::specfun::{
    deformed_cosh, deformed_sech, deformed_sinh, deformed_tanh, integrate_adaptive,
};
use pdmsolve_core::{MassProfile, ReferencePotential};

const VERIFY_TOL: f64 = 1e-3;

fn rm(v1: f64, v2: f64) -> ReferencePotential {
    ReferencePotential::RosenMorse(RosenMorseParams::new(v1, v2, 1.0, 1.0).unwrap())
}

fn scarf(v1: f64, v2: f64) -> ReferencePotential {
    ReferencePotential::Scarf(
        ScarfParams::new(v1, v2, 1.0, 1.0, BranchSign::Plus, BranchSign::Plus).unwrap(),
    )
}

/// The six isospectrality configurations of criterion 4 (shared by 5 and 6).
struct Config {
    name: &'static str,
    profile: MassProfile,
    alpha: f64,
    reference: ReferencePotential,
    states: &'static [usize],
    grid: Grid,
}

fn isospectrality_configs() -> Vec<Config> {
    let rs = MassProfile::rational_single(1.0, 1.0).unwrap();
    let rq = MassProfile::rational_squared(1.0, 1.0).unwrap();
    let default = DEFAULT_CONSTANT_GRID;
    let pdm_default = Grid::new(-15.0, 15.0, 4000).unwrap();
    let wide = Grid::new(-500.0, 500.0, 80000).unwrap();
    vec![
        Config {
            name: "constant alpha=0 x RM(6,0,1,1)",
            profile: MassProfile::Constant,
            alpha: 0.0,
            reference: rm(6.0, 0.0),
            states: &[0, 1],
            grid: default,
        },
        Config {
            name: "constant alpha=-1/4 x RM(6,0,1,1)",
            profile: MassProfile::Constant,
            alpha: -0.25,
            reference: rm(6.0, 0.0),
            states: &[0, 1],
            grid: default,
        },
        Config {
            name: "rational-single(1,1) alpha=-1/4 x RM(6,0,1,1)",
            profile: rs,
            alpha: -0.25,
            reference: rm(6.0, 0.0),
            states: &[0, 1],
            grid: wide,
        },
        Config {
            name: "rational-single(1,1) alpha=0 x RM(6,0,1,1)",
            profile: rs,
            alpha: 0.0,
            reference: rm(6.0, 0.0),
            states: &[0],
            grid: pdm_default,
        },
        Config {
            name: "rational-squared(1,1) alpha=-1/4 x RM(6,0,1,1)",
            profile: rq,
            alpha: -0.25,
            reference: rm(6.0, 0.0),
            states: &[0],
            grid: pdm_default,
        },
        Config {
            name: "rational-single(1,1) alpha=0 x Scarf(6,0,1,1,+,+)",
            profile: rs,
            alpha: 0.0,
            reference: scarf(6.0, 0.0),
            states: &[0],
            grid: pdm_default,
        },
    ]
}

fn run_config(c: &Config) -> Vec<StateRecord> {
    let report = verify_isospectrality(
        c.profile,
        c.alpha,
        &c.reference,
        c.states,
        &c.grid,
        1.0,
        &VerifyOptions::default(),
    )
    .unwrap_or_else(|e| panic!("{}: {e}", c.name));
    assert!(
        report.failures.is_empty(),
        "{}: sub-operation failures {:?}",
        c.name,
        report.failures
    );
    report.records
}

#[test]
fn criterion_1_deformed_function_identities() {
    // cosh_q^2 - sinh_q^2 = q and the ln(sqrt q) translation reduction over
    // y in [-10, 10], q in {0.25, 1, 4}. The 1e-12 relative tolerance is
    // measured against cosh_q(y), the working scale of both sides (the
    // subtraction destroys information below eps * cosh_q^2, so no f64
    // evaluation can meet 1e-12 relative to q itself at |y| = 10).
    for &q in &[0.25f64, 1.0, 4.0] {
        let shift = 0.5 * q.ln();
        let mut y = -10.0;
        while y <= 10.0 {
            let c = deformed_cosh(y, q).unwrap();
            let s = deformed_sinh(y, q).unwrap();
            assert!(
                (c * c - s * s - q).abs() <= 1e-12 * c * c,
                "identity at q={q} y={y}"
            );
            assert!(
                (s - q.sqrt() * (y - shift).sinh()).abs() <= 1e-12 * c,
                "sinh translation at q={q} y={y}"
            );
            assert!(
                (c - q.sqrt() * (y - shift).cosh()).abs() <= 1e-12 * c,
                "cosh translation at q={q} y={y}"
            );
            y += 0.25;
        }
    }
    println!("criterion 1 (deformed-function identities): PASS");
}

#[test]
fn criterion_2_mapping_correctness() {
    // Every shipped closed form, two parameter draws each: closed form vs
    // adaptive quadrature of m^{2a+1} to 1e-10 absolute at 100 points, and a
    // five-point numerical derivative recovering m^{2a+1} to 1e-8 relative
    // at 100 points. Differentiation windows stay where the comparison is
    // f64-feasible (steeply decaying powers run out of significand further
    // out; see the mapping unit tests).
    let cases: Vec<(MassProfile, f64, f64)> = vec![
        // (profile, alpha, half-width for the derivative check)
        (MassProfile::rational_single(1.0, 1.0).unwrap(), 0.0, 8.0),
        (MassProfile::rational_single(1.3, 2.0).unwrap(), 0.0, 8.0),
        (MassProfile::rational_single(1.0, 1.0).unwrap(), -0.25, 8.0),
        (MassProfile::rational_single(2.0, 4.0).unwrap(), -0.25, 8.0),
        (MassProfile::rational_single(1.0, 1.0).unwrap(), 1.0, 6.0),
        (MassProfile::rational_single(0.9, 1.5).unwrap(), 1.0, 6.0),
        (MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.0, 8.0),
        (MassProfile::rational_squared(1.1, 0.8).unwrap(), 0.0, 8.0),
        (MassProfile::rational_squared(1.0, 1.0).unwrap(), -0.25, 8.0),
        (MassProfile::rational_squared(0.8, 2.0).unwrap(), -0.25, 8.0),
        (MassProfile::rational_squared(1.0, 1.0).unwrap(), 0.5, 5.0),
        (MassProfile::rational_squared(1.2, 1.5).unwrap(), 0.5, 5.0),
        (MassProfile::exponential(1.0).unwrap(), 0.0, 6.0),
        (MassProfile::exponential(0.5).unwrap(), 0.25, 6.0),
        (MassProfile::exponential(-0.7).unwrap(), 0.1, 6.0),
    ];
    for (profile, alpha, half) in &cases {
        let f = profile
            .closed_form_mapping(*alpha)
            .unwrap_or_else(|| panic!("{profile:?} alpha={alpha}: no closed form"));
        let f0 = f.eval(0.0).unwrap();
        for i in 0..100 {
            let x = -8.0 + 16.0 * (i as f64 + 0.5) / 100.0;
            let quad = integrate_adaptive(|t| profile.mapping_derivative(*alpha, t), 0.0, x, 1e-12)
                .unwrap();
            let closed = f.eval(x).unwrap() - f0;
            assert!(
                (closed - quad).abs() < 1e-10,
                "{profile:?} alpha={alpha} x={x}: closed {closed} vs quadrature {quad}"
            );
        }
        let h = 0.005;
        for i in 0..100 {
            let x = -half + 2.0 * half * (i as f64 + 0.5) / 100.0;
            let e = |t: f64| f.eval(t).unwrap();
            let diff =
                (8.0 * (e(x + h) - e(x - h)) - (e(x + 2.0 * h) - e(x - 2.0 * h))) / (12.0 * h);
            let exact = profile.mapping_derivative(*alpha, x);
            assert!(
                (diff - exact).abs() <= 1e-8 * exact.abs(),
                "{profile:?} alpha={alpha} x={x}: d/dx {diff} vs m^(2a+1) {exact}"
            );
        }
    }
    println!(
        "criterion 2 (mapping correctness, {} closed-form cases): PASS",
        cases.len()
    );
}

#[test]
fn criterion_3_constant_mass_oracle_vs_analytic() {
    let checks: Vec<(&str, ReferencePotential, Vec<f64>)> = vec![
        ("RM(6,0,1,1)", rm(6.0, 0.0), vec![-4.0, -1.0]),
        ("RM(6,2,1,1)", rm(6.0, 2.0), vec![-4.25]),
        (
            "Scarf(2,2,1,1,+,+)",
            scarf(2.0, 2.0),
            vec![scarf(2.0, 2.0).energy(0).unwrap()],
        ),
    ];
    for (name, reference, expected) in checks {
        let pairs = solve_constant_mass(
            |y| reference.potential(y),
            &DEFAULT_CONSTANT_GRID,
            expected.len(),
            1.0,
        )
        .unwrap();
        for (n, want) in expected.iter().enumerate() {
            let got = pairs[n].energy;
            assert!(
                (got - want).abs() < VERIFY_TOL,
                "{name} E_{n}: FD {got} vs analytic {want}"
            );
            println!("criterion 3 ({name} E_{n}): PASS  FD {got:.6} vs analytic {want:.6}");
        }
    }
}

#[test]
fn criterion_4_isospectrality() {
    let mut failures = Vec::new();
    for config in isospectrality_configs() {
        let records = run_config(&config);
        for r in &records {
            let ok = r.passes(VERIFY_TOL);
            println!(
                "criterion 4 ({} n={}): {}  abs_error {:.3e}, nodes {}/{}",
                config.name,
                r.n,
                if ok { "PASS" } else { "FAIL" },
                r.abs_error,
                r.nodes_observed,
                r.nodes_expected,
            );
            if !ok {
                failures.push(format!(
                    "{} n={}: abs_error {:.3e} (tolerance {VERIFY_TOL:.0e})",
                    config.name, r.n, r.abs_error
                ));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "isospectrality failures (finite-range mappings hard-wall the \
         reference problem; see the wall_equivalence test):\n  {}",
        failures.join("\n  ")
    );
}

#[test]
fn criterion_5_transformed_wavefunction_residuals() {
    for config in isospectrality_configs() {
        for r in run_config(&config) {
            println!(
                "criterion 5 ({} n={}): {}  residual {:.3e}",
                config.name,
                r.n,
                if r.residual_norm < VERIFY_TOL {
                    "PASS"
                } else {
                    "FAIL"
                },
                r.residual_norm,
            );
            assert!(
                r.residual_norm < VERIFY_TOL,
                "{} n={}: residual {:.3e}",
                config.name,
                r.n,
                r.residual_norm
            );
        }
    }
}

#[test]
fn criterion_6_convergence_order() {
    // Doubling N must reduce the eigenvalue error by at least 2.5x whenever
    // the error exceeds 1e-8.
    let min_ratio = 2.5;
    let floor = 1e-8;
    let mut failures = Vec::new();

    // Constant-mass reference checks of criterion 3.
    let analytic: Vec<(&str, ReferencePotential, f64)> = vec![
        ("RM(6,0,1,1) E_0", rm(6.0, 0.0), -4.0),
        ("RM(6,2,1,1) E_0", rm(6.0, 2.0), -4.25),
        (
            "Scarf(2,2,1,1,+,+) E_0",
            scarf(2.0, 2.0),
            scarf(2.0, 2.0).energy(0).unwrap(),
        ),
    ];
    for (name, reference, want) in analytic {
        let coarse =
            solve_constant_mass(|y| reference.potential(y), &DEFAULT_CONSTANT_GRID, 1, 1.0)
                .unwrap()[0]
                .energy;
        let fine = solve_constant_mass(
            |y| reference.potential(y),
            &DEFAULT_CONSTANT_GRID.refined(),
            1,
            1.0,
        )
        .unwrap()[0]
            .energy;
        let (e1, e2) = ((coarse - want).abs(), (fine - want).abs());
        let ok = e1 <= floor || e2 < e1 / min_ratio;
        println!(
            "criterion 6 ({name}): {}  err(N) {e1:.3e} -> err(2N) {e2:.3e}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures.push(format!("{name}: {e1:.3e} -> {e2:.3e}"));
        }
    }

    // PDM configurations of criterion 4 (records carry both resolutions).
    for config in isospectrality_configs() {
        for r in run_config(&config) {
            let ok = r.abs_error <= floor || r.abs_error_refined < r.abs_error / min_ratio;
            println!(
                "criterion 6 ({} n={}): {}  err(N) {:.3e} -> err(2N) {:.3e}",
                config.name,
                r.n,
                if ok { "PASS" } else { "FAIL" },
                r.abs_error,
                r.abs_error_refined,
            );
            if !ok {
                failures.push(format!(
                    "{} n={}: {:.3e} -> {:.3e}",
                    config.name, r.n, r.abs_error, r.abs_error_refined
                ));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "convergence-order failures (wall-limited errors do not shrink with \
         h; see the wall_equivalence test):\n  {}",
        failures.join("\n  ")
    );
}

#[test]
fn criterion_7_reduction_checks() {
    // alpha = -1/4 target potentials are n-independent.
    for profile in [
        MassProfile::rational_single(1.0, 1.0).unwrap(),
        MassProfile::rational_squared(1.0, 1.0).unwrap(),
    ] {
        let ctx = PctContext::new(profile, -0.25, 1.0).unwrap();
        let reference = rm(6.0, 0.0);
        let t0 = ctx.target_potential(&reference, 0).unwrap();
        let t1 = ctx.target_potential(&reference, 1).unwrap();
        let mut x = -12.0;
        while x <= 12.0 {
            let (a, b) = (t0.eval(x).unwrap(), t1.eval(x).unwrap());
            assert!(
                (a - b).abs() <= 1e-12 * a.abs().max(1.0),
                "{profile:?}: n-dependence at x={x}"
            );
            x += 0.125;
        }
    }
    println!("criterion 7 (alpha=-1/4 targets n-independent): PASS");

    // Constant-mass contexts reproduce the reference exactly.
    let reference = rm(6.0, 2.0);
    let ctx = PctContext::new(MassProfile::Constant, 0.7, 1.0).unwrap();
    let target = ctx.target_potential(&reference, 0).unwrap();
    let phi = reference.wavefunction(0).unwrap();
    let psi = ctx.transform_wavefunction(reference.wavefunction(0).unwrap());
    let mut x = -12.0;
    while x <= 12.0 {
        assert_eq!(target.eval(x).unwrap(), reference.potential(x).unwrap());
        assert_eq!(psi.eval(x).unwrap(), phi.eval(x).unwrap());
        x += 0.125;
    }
    println!("criterion 7 (constant-mass identity reduction): PASS");

    // q = 1 deformed functions equal the standard hyperbolics to 1e-14.
    let mut y = -10.0f64;
    while y <= 10.0 {
        let scale = y.cosh();
        assert!((deformed_sinh(y, 1.0).unwrap() - y.sinh()).abs() <= 1e-14 * scale);
        assert!((deformed_cosh(y, 1.0).unwrap() - y.cosh()).abs() <= 1e-14 * scale);
        assert!((deformed_tanh(y, 1.0).unwrap() - y.tanh()).abs() <= 1e-14);
        assert!((deformed_sech(y, 1.0).unwrap() - 1.0 / y.cosh()).abs() <= 1e-14);
        y += 0.25;
    }
    println!("criterion 7 (q=1 reduction to standard hyperbolics): PASS");
}

#[test]
fn runtime_sanity_cos_power_vs_quadrature() {
    // Supporting check kept with the suite: the closed-form antiderivatives
    // used by the arctan-type mappings agree with quadrature.
    use pdmsolve_core::specfun::cos_power_antiderivative;
    for p in 0..=8u32 {
        for theta in [0.3, 1.0, FRAC_PI_2] {
            let direct = cos_power_antiderivative(p, theta);
            let quad = integrate_adaptive(|t| t.cos().powi(p as i32), 0.0, theta, 1e-12).unwrap();
            assert!((direct - quad).abs() < 1e-10);
        }
    }
    assert!((cos_power_antiderivative(6, FRAC_PI_2) - 5.0 * PI / 32.0).abs() < 1e-14);
    println!("cosine-power antiderivative vs quadrature: PASS");
}
