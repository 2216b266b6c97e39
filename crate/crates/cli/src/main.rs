//! pdmsolve: spectra, mappings, target potentials, wavefunctions, and
//! isospectrality verification for position-dependent-mass Schrödinger
//! problems built by point canonical transformation.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CommandError, CommandOutput};
use config::{OutputFormat, RunConfig};

/// Shipped example configurations (name, path relative to the repository
/// root, what it demonstrates).
const EXAMPLES: &[(&str, &str, &str)] = &[
    (
        "rm_constant",
        "crates/cli/configs/rm_constant.toml",
        "constant mass, alpha = 0, Rosen-Morse(6,0,1,1): identity transformation",
    ),
    (
        "rm_constant_alpha_m025",
        "crates/cli/configs/rm_constant_alpha_m025.toml",
        "constant mass, alpha = -1/4, Rosen-Morse(6,0,1,1)",
    ),
    (
        "rm_alpha_m025",
        "crates/cli/configs/rm_alpha_m025.toml",
        "m = 1/(1+x^2), alpha = -1/4 (arcsinh mapping), Rosen-Morse(6,0,1,1)",
    ),
    (
        "rm_rational_single_alpha0",
        "crates/cli/configs/rm_rational_single_alpha0.toml",
        "m = 1/(1+x^2), alpha = 0 (arctan mapping, finite y-image), Rosen-Morse(6,0,1,1)",
    ),
    (
        "rm_rational_squared_alpha_m025",
        "crates/cli/configs/rm_rational_squared_alpha_m025.toml",
        "m = 1/(1+x^2)^2, alpha = -1/4 (arctan mapping, finite y-image), Rosen-Morse(6,0,1,1)",
    ),
    (
        "scarf_rational_single_alpha0",
        "crates/cli/configs/scarf_rational_single_alpha0.toml",
        "m = 1/(1+x^2), alpha = 0, Scarf(6,0,1,1,+,+)",
    ),
    (
        "scarf_tilted",
        "crates/cli/configs/scarf_tilted.toml",
        "constant mass, Scarf(2,2,1,1,+,+): complex-radical spectrum",
    ),
    (
        "rm_kappa_mismatch",
        "crates/cli/configs/rm_kappa_mismatch.toml",
        "kappa = 1/2 against kappa = 1 analytic energies: verify exits 1",
    ),
    (
        "rm_no_bound_states",
        "crates/cli/configs/rm_no_bound_states.toml",
        "V1 = 0: empty spectrum, empty table, exit 0",
    ),
];

#[derive(Parser)]
#[command(
    name = "pdmsolve",
    version,
    about = "Position-dependent-mass Schrödinger solver via point canonical transformation"
)]
struct Cli {
    /// Path to the TOML run configuration
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Write the artifact here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Artifact format: csv or json (overrides the config)
    #[arg(long, global = true, value_name = "FMT")]
    format: Option<String>,

    /// Verification tolerance on |E_analytic - E_numeric|
    #[arg(long, global = true, value_name = "FLOAT")]
    tolerance: Option<f64>,

    /// Comma-separated quantum numbers, or "all" (overrides the config)
    #[arg(long, global = true, value_name = "LIST")]
    states: Option<String>,

    /// List the shipped example configurations and exit
    #[arg(long)]
    list_examples: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Analytic bound-state energies of the reference potential
    Spectrum,
    /// Sample the mapping y = f(x) and the mass profile on the grid
    Map,
    /// Sample the state-indexed target potential on the grid
    Potential {
        /// Quantum number of the target potential
        #[arg(short = 'n', long)]
        state: usize,
    },
    /// Sample the transformed wavefunction (normalized) on the grid
    Wavefunction {
        /// Quantum number
        #[arg(short = 'n', long)]
        state: usize,
    },
    /// Compare finite-difference PDM eigenvalues with the analytic spectrum
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.list_examples {
        println!("shipped example configurations (paths relative to the repository root):");
        for (name, path, what) in EXAMPLES {
            println!("  {name:32} {path}");
            println!("  {:32}   {what}", "");
        }
        return ExitCode::SUCCESS;
    }

    match run(&cli) {
        Ok((out, path)) => {
            if let Err(e) = write_artifact(path, &out) {
                eprintln!("pdmsolve: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("pdmsolve: {}", e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<(CommandOutput, Option<PathBuf>), CommandError> {
    let command = cli.command.as_ref().ok_or_else(|| CommandError {
        exit: 2,
        message: "a subcommand is required (spectrum, map, potential, wavefunction, verify)"
            .to_string(),
    })?;

    let config_path = cli.config.as_ref().ok_or_else(|| CommandError {
        exit: 2,
        message: "--config <PATH> is required".to_string(),
    })?;
    let text = std::fs::read_to_string(config_path).map_err(|e| CommandError {
        exit: 2,
        message: format!("cannot read {}: {e}", config_path.display()),
    })?;
    let cfg = RunConfig::parse_toml(&text).map_err(|e| CommandError {
        exit: 2,
        message: e.to_string(),
    })?;

    let format = resolve_format(cli, &cfg)?;
    let states = parse_states(cli.states.as_deref())?;
    let states_ref: Option<&[usize]> = match &states {
        StateSelection::FromConfig => cfg.states.as_deref(),
        StateSelection::All => None,
        StateSelection::List(v) => Some(v),
    };

    let out = match command {
        Command::Spectrum => commands::cmd_spectrum(&cfg, states_ref, format),
        Command::Map => commands::cmd_map(&cfg, format),
        Command::Potential { state } => commands::cmd_potential(&cfg, *state, format),
        Command::Wavefunction { state } => commands::cmd_wavefunction(&cfg, *state, format),
        Command::Verify => commands::cmd_verify(&cfg, states_ref, cli.tolerance, format),
    }?;
    let path = cli.output.clone().or_else(|| {
        cfg.output
            .as_ref()
            .and_then(|o| o.path.as_ref().map(PathBuf::from))
    });
    Ok((out, path))
}

enum StateSelection {
    FromConfig,
    All,
    List(Vec<usize>),
}

fn parse_states(arg: Option<&str>) -> Result<StateSelection, CommandError> {
    match arg {
        None => Ok(StateSelection::FromConfig),
        Some("all") => Ok(StateSelection::All),
        Some(list) => {
            let mut out = Vec::new();
            for piece in list.split(',') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                out.push(piece.parse::<usize>().map_err(|_| CommandError {
                    exit: 2,
                    message: format!("--states: `{piece}` is not a quantum number"),
                })?);
            }
            Ok(StateSelection::List(out))
        }
    }
}

fn resolve_format(cli: &Cli, cfg: &RunConfig) -> Result<OutputFormat, CommandError> {
    let source = cli
        .format
        .as_deref()
        .or_else(|| cfg.output.as_ref().and_then(|o| o.format.as_deref()));
    match source {
        None => Ok(OutputFormat::Csv),
        Some(s) => OutputFormat::parse(s).map_err(|m| CommandError {
            exit: 2,
            message: format!("--format: {m}"),
        }),
    }
}

fn write_artifact(path: Option<PathBuf>, out: &CommandOutput) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, &out.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(out.text.as_bytes())
        }
    }
}
