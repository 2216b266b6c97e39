//! Isospectrality verification: for each requested state, build the
//! state-indexed target potential, diagonalize the PDM Hamiltonian, and
//! compare its n-th eigenvalue with the analytic reference energy, together
//! with the stencil residual of the transformed analytic wavefunction, node
//! counts, and a doubled-resolution convergence row.

use crate::error::{Error, Result};
use crate::massprofile::MassProfile;
use crate::oracle::grid::Grid;
use crate::oracle::solve::{count_nodes, pdm_stencil_residual, solve_pdm, DEFAULT_NODE_THRESHOLD};
use crate::parallel::map_indexed;
use crate::pct::PctContext;
use crate::refpot::ReferencePotential;

/// Default acceptance tolerance on |E_analytic - E_numeric|.
pub const DEFAULT_VERIFY_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub tolerance: f64,
    /// Scarf sigma != tau branches are refused unless this is set.
    pub allow_experimental: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_VERIFY_TOLERANCE,
            allow_experimental: false,
        }
    }
}

/// Per-state verification outcome.
#[derive(Debug, Clone)]
pub struct StateRecord {
    pub n: usize,
    pub energy_analytic: f64,
    pub energy_numeric: f64,
    pub abs_error: f64,
    /// Same comparison at doubled resolution (the convergence row).
    pub abs_error_refined: f64,
    /// Ghost-point stencil residual of the transformed analytic state.
    pub residual_norm: f64,
    pub nodes_expected: usize,
    pub nodes_observed: usize,
}

impl StateRecord {
    pub fn passes(&self, tolerance: f64) -> bool {
        self.abs_error < tolerance && self.nodes_expected == self.nodes_observed
    }
}

/// Full report of one verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub grid: Grid,
    pub kappa: f64,
    pub alpha: f64,
    pub records: Vec<StateRecord>,
    /// Sub-operation errors, attached per state instead of swallowed.
    pub failures: Vec<(usize, String)>,
}

impl VerificationReport {
    pub fn passed(&self, tolerance: f64) -> bool {
        self.failures.is_empty() && self.records.iter().all(|r| r.passes(tolerance))
    }
}

/// Run the isospectrality check for `states` of `reference` transformed by
/// (profile, alpha) at kinetic coefficient kappa.
pub fn verify_isospectrality(
    profile: MassProfile,
    alpha: f64,
    reference: &ReferencePotential,
    states: &[usize],
    grid: &Grid,
    kappa: f64,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    if reference.is_experimental() && !options.allow_experimental {
        return Err(Error::ExperimentalBranch);
    }
    let ctx = PctContext::with_window(profile, alpha, kappa, (grid.x_min, grid.x_max))?;

    let outcomes = map_indexed(states.len(), |i| {
        let n = states[i];
        (n, verify_state(&ctx, reference, n, grid, kappa))
    });

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for (n, outcome) in outcomes {
        match outcome {
            Ok(record) => records.push(record),
            Err(err) => failures.push((n, err.to_string())),
        }
    }
    Ok(VerificationReport {
        grid: *grid,
        kappa,
        alpha,
        records,
        failures,
    })
}

fn verify_state(
    ctx: &PctContext,
    reference: &ReferencePotential,
    n: usize,
    grid: &Grid,
    kappa: f64,
) -> Result<StateRecord> {
    let energy_analytic = reference.energy(n)?;
    let target = ctx.target_potential(reference, n)?;
    let potential = |x: f64| target.eval(x);

    let pairs = solve_pdm(potential, &ctx.profile, grid, n + 1, kappa)?;
    let energy_numeric = pairs[n].energy;
    let abs_error = (energy_numeric - energy_analytic).abs();

    let refined = grid.refined();
    let refined_pairs = solve_pdm(potential, &ctx.profile, &refined, n + 1, kappa)?;
    let abs_error_refined = (refined_pairs[n].energy - energy_analytic).abs();

    let psi = ctx.transform_wavefunction(reference.wavefunction(n)?);
    let residual = pdm_stencil_residual(
        potential,
        &ctx.profile,
        grid,
        kappa,
        |x| psi.eval(x),
        energy_analytic,
    )?;

    Ok(StateRecord {
        n,
        energy_analytic,
        energy_numeric,
        abs_error,
        abs_error_refined,
        residual_norm: residual,
        nodes_expected: n,
        nodes_observed: count_nodes(&pairs[n].vector, DEFAULT_NODE_THRESHOLD),
    })
}
