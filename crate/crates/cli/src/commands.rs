//! The five CLI commands and their artifact construction.

use pdmsolve_core::oracle::{verify_isospectrality, VerificationReport, VerifyOptions};
use pdmsolve_core::{Error as CoreError, PctContext, ReferencePotential};

use crate::config::{OutputFormat, RunConfig};
use crate::output::{csv_num, CsvTable, Json};

/// Exit status contract: 0 success, 1 verification failure, 2 invalid
/// configuration, 3 state index out of range, 4 quadrature failure, 5 phase
/// removal failure.
#[derive(Debug)]
pub struct CommandError {
    pub exit: i32,
    pub message: String,
}

impl CommandError {
    fn new(exit: i32, message: impl Into<String>) -> Self {
        Self {
            exit,
            message: message.into(),
        }
    }

    pub fn from_core(e: &CoreError) -> Self {
        let exit = match e {
            CoreError::StateIndex { .. } => 3,
            CoreError::QuadratureNonConvergence { .. } => 4,
            CoreError::PhaseRemoval { .. } => 5,
            _ => 2,
        };
        Self::new(exit, e.to_string())
    }
}

/// Rendered artifact plus the exit status to report.
pub struct CommandOutput {
    pub text: String,
    pub exit: i32,
}

fn ok(text: String) -> Result<CommandOutput, CommandError> {
    Ok(CommandOutput { text, exit: 0 })
}

/// Metadata comment lines shared by every CSV artifact.
fn metadata(cfg: &RunConfig, command: &str) -> Vec<String> {
    let r = &cfg.reference;
    let mut reference = format!(
        "reference: {} v1={} v2={} beta={} q={}",
        r.kind, r.v1, r.v2, r.beta, r.q
    );
    if r.kind == "scarf" {
        reference.push_str(&format!(
            " sigma={:+} tau={:+}",
            r.sigma.unwrap_or(1),
            r.tau.unwrap_or(1)
        ));
    }
    let p = &cfg.profile;
    let mut profile = format!("profile: {}", p.kind);
    for (name, v) in [("a", p.a), ("q", p.q), ("b", p.b)] {
        if let Some(v) = v {
            profile.push_str(&format!(" {name}={v}"));
        }
    }
    vec![
        format!("pdmsolve {command}"),
        reference,
        profile,
        format!("alpha: {}", cfg.alpha),
        format!("kappa: {}", cfg.kappa),
        format!(
            "grid: x_min={} x_max={} n_points={}",
            cfg.grid.x_min, cfg.grid.x_max, cfg.grid.n_points
        ),
    ]
}

/// JSON mirror of the metadata block.
fn metadata_json(cfg: &RunConfig, command: &str) -> Vec<(&'static str, Json)> {
    let r = &cfg.reference;
    let mut reference = vec![
        ("kind", Json::Str(r.kind.clone())),
        ("v1", Json::Num(r.v1)),
        ("v2", Json::Num(r.v2)),
        ("beta", Json::Num(r.beta)),
        ("q", Json::Num(r.q)),
    ];
    if r.kind == "scarf" {
        reference.push(("sigma", Json::Int(i64::from(r.sigma.unwrap_or(1)))));
        reference.push(("tau", Json::Int(i64::from(r.tau.unwrap_or(1)))));
    }
    let p = &cfg.profile;
    let mut profile = vec![("kind", Json::Str(p.kind.clone()))];
    for (name, v) in [("a", p.a), ("q", p.q), ("b", p.b)] {
        if let Some(v) = v {
            profile.push(match name {
                "a" => ("a", Json::Num(v)),
                "q" => ("q", Json::Num(v)),
                _ => ("b", Json::Num(v)),
            });
        }
    }
    vec![
        ("command", Json::Str(command.to_string())),
        ("reference", Json::Obj(reference)),
        ("profile", Json::Obj(profile)),
        ("alpha", Json::Num(cfg.alpha)),
        ("kappa", Json::Num(cfg.kappa)),
        (
            "grid",
            Json::Obj(vec![
                ("x_min", Json::Num(cfg.grid.x_min)),
                ("x_max", Json::Num(cfg.grid.x_max)),
                ("n_points", Json::Int(cfg.grid.n_points as i64)),
            ]),
        ),
    ]
}

/// Resolve the requested state list; `None` means every bound state.
fn resolve_states(
    requested: Option<&[usize]>,
    reference: &ReferencePotential,
) -> Result<Vec<usize>, CommandError> {
    let count = reference.num_bound_states();
    match requested {
        None => Ok((0..count).collect()),
        Some(list) => {
            for &n in list {
                if n >= count {
                    return Err(CommandError::new(
                        3,
                        format!(
                            "state index n = {n} out of range: this potential \
                             supports {count} bound state(s), so n < {count}"
                        ),
                    ));
                }
            }
            Ok(list.to_vec())
        }
    }
}

fn build_context(cfg: &RunConfig) -> Result<PctContext, CommandError> {
    let profile = cfg
        .profile()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let grid = cfg
        .grid()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    PctContext::with_window(profile, cfg.alpha, cfg.kappa, (grid.x_min, grid.x_max))
        .map_err(|e| CommandError::from_core(&e))
}

/// `spectrum`: one row per requested state with the analytic energy.
pub fn cmd_spectrum(
    cfg: &RunConfig,
    states: Option<&[usize]>,
    format: OutputFormat,
) -> Result<CommandOutput, CommandError> {
    let reference = cfg
        .reference()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let states = resolve_states(states, &reference)?;
    let count = reference.num_bound_states();

    let energies: Vec<f64> = states
        .iter()
        .map(|&n| reference.energy(n).map_err(|e| CommandError::from_core(&e)))
        .collect::<Result<_, _>>()?;

    match format {
        OutputFormat::Csv => {
            let table = CsvTable {
                comments: metadata(cfg, "spectrum"),
                header: vec!["n", "energy_analytic", "num_bound_states"],
                rows: states
                    .iter()
                    .zip(&energies)
                    .map(|(&n, &e)| vec![n.to_string(), csv_num(e), count.to_string()])
                    .collect(),
            };
            ok(table.render())
        }
        OutputFormat::Json => {
            let mut doc = metadata_json(cfg, "spectrum");
            doc.push(("num_bound_states", Json::Int(count as i64)));
            doc.push((
                "rows",
                Json::Arr(
                    states
                        .iter()
                        .zip(&energies)
                        .map(|(&n, &e)| {
                            Json::Obj(vec![
                                ("n", Json::Int(n as i64)),
                                ("energy_analytic", Json::Num(e)),
                            ])
                        })
                        .collect(),
                ),
            ));
            ok(Json::Obj(doc).render())
        }
    }
}

/// `map`: sample (x, y = f(x), m(x)) on the grid.
pub fn cmd_map(cfg: &RunConfig, format: OutputFormat) -> Result<CommandOutput, CommandError> {
    let ctx = build_context(cfg)?;
    let grid = cfg
        .grid()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let path = if ctx.mapping.is_closed_form() {
        "closed-form"
    } else {
        "quadrature"
    };
    let mut rows = Vec::with_capacity(grid.n_points);
    for i in 0..grid.n_points {
        let x = grid.point(i);
        let y = ctx
            .mapping
            .eval(x)
            .map_err(|e| CommandError::from_core(&e))?;
        rows.push((x, y, ctx.profile.mass(x)));
    }
    match format {
        OutputFormat::Csv => {
            let mut comments = metadata(cfg, "map");
            comments.push(format!("mapping: {path}"));
            let table = CsvTable {
                comments,
                header: vec!["x", "y", "mass"],
                rows: rows
                    .iter()
                    .map(|&(x, y, m)| vec![csv_num(x), csv_num(y), csv_num(m)])
                    .collect(),
            };
            ok(table.render())
        }
        OutputFormat::Json => {
            let mut doc = metadata_json(cfg, "map");
            doc.push(("mapping", Json::Str(path.to_string())));
            doc.push((
                "rows",
                Json::Arr(
                    rows.iter()
                        .map(|&(x, y, m)| {
                            Json::Obj(vec![
                                ("x", Json::Num(x)),
                                ("y", Json::Num(y)),
                                ("mass", Json::Num(m)),
                            ])
                        })
                        .collect(),
                ),
            ));
            ok(Json::Obj(doc).render())
        }
    }
}

/// `potential`: sample the state-indexed target potential on the grid.
pub fn cmd_potential(
    cfg: &RunConfig,
    n: usize,
    format: OutputFormat,
) -> Result<CommandOutput, CommandError> {
    let reference = cfg
        .reference()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    resolve_states(Some(&[n]), &reference)?;
    let ctx = build_context(cfg)?;
    let grid = cfg
        .grid()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let target = ctx
        .target_potential(&reference, n)
        .map_err(|e| CommandError::from_core(&e))?;

    let mut rows = Vec::with_capacity(grid.n_points);
    for i in 0..grid.n_points {
        let x = grid.point(i);
        let v = target.eval(x).map_err(|e| CommandError::from_core(&e))?;
        rows.push((x, v));
    }
    match format {
        OutputFormat::Csv => {
            let mut comments = metadata(cfg, "potential");
            comments.push(format!("state: n={n} energy={}", csv_num(target.energy)));
            let table = CsvTable {
                comments,
                header: vec!["x", "v_target"],
                rows: rows
                    .iter()
                    .map(|&(x, v)| vec![csv_num(x), csv_num(v)])
                    .collect(),
            };
            ok(table.render())
        }
        OutputFormat::Json => {
            let mut doc = metadata_json(cfg, "potential");
            doc.push(("n", Json::Int(n as i64)));
            doc.push(("energy", Json::Num(target.energy)));
            doc.push((
                "rows",
                Json::Arr(
                    rows.iter()
                        .map(|&(x, v)| {
                            Json::Obj(vec![("x", Json::Num(x)), ("v_target", Json::Num(v))])
                        })
                        .collect(),
                ),
            ));
            ok(Json::Obj(doc).render())
        }
    }
}

/// `wavefunction`: transformed analytic state, normalized to sum psi^2 h = 1,
/// sign fixed so the first sample of largest magnitude is positive.
pub fn cmd_wavefunction(
    cfg: &RunConfig,
    n: usize,
    format: OutputFormat,
) -> Result<CommandOutput, CommandError> {
    let reference = cfg
        .reference()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    resolve_states(Some(&[n]), &reference)?;
    let ctx = build_context(cfg)?;
    let grid = cfg
        .grid()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let phi = reference
        .wavefunction(n)
        .map_err(|e| CommandError::from_core(&e))?;
    let psi = ctx.transform_wavefunction(phi);

    let mut values = Vec::with_capacity(grid.n_points);
    for i in 0..grid.n_points {
        values.push(
            psi.eval(grid.point(i))
                .map_err(|e| CommandError::from_core(&e))?,
        );
    }
    let h = grid.spacing();
    let norm = values.iter().map(|v| v * v * h).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(CommandError::new(2, "wavefunction norm is not finite"));
    }
    let mut max_idx = 0;
    for (i, v) in values.iter().enumerate() {
        if v.abs() > values[max_idx].abs() {
            max_idx = i;
        }
    }
    let sign = if values[max_idx] < 0.0 { -1.0 } else { 1.0 };
    for v in &mut values {
        *v *= sign / norm;
    }

    match format {
        OutputFormat::Csv => {
            let mut comments = metadata(cfg, "wavefunction");
            comments.push(format!("state: n={n}"));
            let table = CsvTable {
                comments,
                header: vec!["x", "psi"],
                rows: (0..grid.n_points)
                    .map(|i| vec![csv_num(grid.point(i)), csv_num(values[i])])
                    .collect(),
            };
            ok(table.render())
        }
        OutputFormat::Json => {
            let mut doc = metadata_json(cfg, "wavefunction");
            doc.push(("n", Json::Int(n as i64)));
            doc.push((
                "rows",
                Json::Arr(
                    (0..grid.n_points)
                        .map(|i| {
                            Json::Obj(vec![
                                ("x", Json::Num(grid.point(i))),
                                ("psi", Json::Num(values[i])),
                            ])
                        })
                        .collect(),
                ),
            ));
            ok(Json::Obj(doc).render())
        }
    }
}

/// `verify`: isospectrality report; exit 0 iff every state passes the
/// tolerance with matching node counts (the report is written either way).
pub fn cmd_verify(
    cfg: &RunConfig,
    states: Option<&[usize]>,
    tolerance: Option<f64>,
    format: OutputFormat,
) -> Result<CommandOutput, CommandError> {
    let reference = cfg
        .reference()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let states = resolve_states(states, &reference)?;
    let profile = cfg
        .profile()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let grid = cfg
        .grid()
        .map_err(|e| CommandError::new(2, e.to_string()))?;
    let tolerance = tolerance
        .or(cfg.tolerance)
        .unwrap_or(pdmsolve_core::oracle::DEFAULT_VERIFY_TOLERANCE);
    let options = VerifyOptions {
        tolerance,
        allow_experimental: cfg.allow_experimental,
    };

    let report = verify_isospectrality(
        profile, cfg.alpha, &reference, &states, &grid, cfg.kappa, &options,
    )
    .map_err(|e| CommandError::from_core(&e))?;

    let passed = report.passed(tolerance);
    let text = render_report(cfg, &report, tolerance, format);
    Ok(CommandOutput {
        text,
        exit: if passed { 0 } else { 1 },
    })
}

fn render_report(
    cfg: &RunConfig,
    report: &VerificationReport,
    tolerance: f64,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Csv => {
            let mut comments = metadata(cfg, "verify");
            comments.push(format!("tolerance: {tolerance}"));
            comments.push(format!(
                "result: {}",
                if report.passed(tolerance) {
                    "pass"
                } else {
                    "fail"
                }
            ));
            for (n, msg) in &report.failures {
                comments.push(format!("failure: n={n} {msg}"));
            }
            let table = CsvTable {
                comments,
                header: vec![
                    "n",
                    "energy_analytic",
                    "energy_numeric",
                    "abs_error",
                    "abs_error_refined",
                    "residual_norm",
                    "nodes_expected",
                    "nodes_observed",
                    "status",
                ],
                rows: report
                    .records
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            csv_num(r.energy_analytic),
                            csv_num(r.energy_numeric),
                            csv_num(r.abs_error),
                            csv_num(r.abs_error_refined),
                            csv_num(r.residual_norm),
                            r.nodes_expected.to_string(),
                            r.nodes_observed.to_string(),
                            if r.passes(tolerance) { "pass" } else { "fail" }.to_string(),
                        ]
                    })
                    .collect(),
            };
            table.render()
        }
        OutputFormat::Json => {
            let mut doc = metadata_json(cfg, "verify");
            doc.push(("tolerance", Json::Num(tolerance)));
            doc.push(("passed", Json::Bool(report.passed(tolerance))));
            doc.push((
                "records",
                Json::Arr(
                    report
                        .records
                        .iter()
                        .map(|r| {
                            Json::Obj(vec![
                                ("n", Json::Int(r.n as i64)),
                                ("energy_analytic", Json::Num(r.energy_analytic)),
                                ("energy_numeric", Json::Num(r.energy_numeric)),
                                ("abs_error", Json::Num(r.abs_error)),
                                ("abs_error_refined", Json::Num(r.abs_error_refined)),
                                ("residual_norm", Json::Num(r.residual_norm)),
                                ("nodes_expected", Json::Int(r.nodes_expected as i64)),
                                ("nodes_observed", Json::Int(r.nodes_observed as i64)),
                                ("passed", Json::Bool(r.passes(tolerance))),
                            ])
                        })
                        .collect(),
                ),
            ));
            doc.push((
                "failures",
                Json::Arr(
                    report
                        .failures
                        .iter()
                        .map(|(n, msg)| {
                            Json::Obj(vec![
                                ("n", Json::Int(*n as i64)),
                                ("error", Json::Str(msg.clone())),
                            ])
                        })
                        .collect(),
                ),
            ));
            Json::Obj(doc).render()
        }
    }
}
