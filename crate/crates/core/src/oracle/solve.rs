//! Finite-difference Schrödinger solvers and diagnostics.
//!
//! Constant mass: diagonal 2 kappa/h^2 + V(x_i), off-diagonal -kappa/h^2.
//! Position-dependent mass (BenDaniel-Duke ordering with half-point mass
//! sampling): row i carries off-diagonals -kappa/(h^2 m(x_{i+-1/2})) and
//! diagonal kappa/h^2 (1/m(x_{i-1/2}) + 1/m(x_{i+1/2})) + V(x_i). Both are
//! symmetric by construction, with Dirichlet walls at the window ends; the
//! caller picks a window on which the states of interest have decayed.

use crate::error::{Error, Result};
use crate::massprofile::MassProfile;
use crate::oracle::grid::Grid;
use crate::oracle::tridiag::SymTridiag;
use crate::parallel::try_map_indexed;

/// Node-count threshold: samples below this fraction of max|psi| are treated
/// as boundary noise.
pub const DEFAULT_NODE_THRESHOLD: f64 = 1e-8;

/// One solved eigenpair; the eigenvector is normalized to sum psi_i^2 h = 1.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub energy: f64,
    pub vector: Vec<f64>,
}

/// Assemble the constant-mass Hamiltonian matrix over the interior points
/// (Dirichlet zeros sit exactly at x_min and x_max).
pub fn assemble_constant_mass<V>(potential: V, grid: &Grid, kappa: f64) -> Result<SymTridiag>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
{
    let h = grid.spacing();
    let h2 = h * h;
    let diag = try_map_indexed(grid.interior_len(), |i| {
        Ok(2.0 * kappa / h2 + potential(grid.interior_point(i))?)
    })?;
    let off = vec![-kappa / h2; grid.interior_len() - 1];
    SymTridiag::new(diag, off)
}

/// Assemble the PDM Hamiltonian matrix with half-point mass sampling, over
/// the interior points.
pub fn assemble_pdm<V>(
    potential: V,
    profile: &MassProfile,
    grid: &Grid,
    kappa: f64,
) -> Result<SymTridiag>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
{
    let h = grid.spacing();
    let h2 = h * h;
    let inv_mass = |x: f64| -> Result<f64> {
        let m = profile.mass(x);
        if m <= 0.0 || !m.is_finite() {
            return Err(Error::Domain(format!(
                "non-positive mass sample at x = {x}"
            )));
        }
        Ok(1.0 / m)
    };
    let diag = try_map_indexed(grid.interior_len(), |i| {
        let x = grid.interior_point(i);
        let im = inv_mass(x - 0.5 * h)?;
        let ip = inv_mass(x + 0.5 * h)?;
        Ok(kappa / h2 * (im + ip) + potential(x)?)
    })?;
    let off = try_map_indexed(grid.interior_len() - 1, |i| {
        Ok(-kappa / h2 * inv_mass(grid.interior_point(i) + 0.5 * h)?)
    })?;
    SymTridiag::new(diag, off)
}

fn lowest_pairs(matrix: &SymTridiag, k: usize, h: f64) -> Result<Vec<EigenPair>> {
    if k == 0 || k > matrix.size() {
        return Err(Error::Eigensolver(format!(
            "requested {k} states from a {}-point discretization",
            matrix.size()
        )));
    }
    let energies = matrix.lowest_eigenvalues(k)?;
    energies
        .into_iter()
        .map(|energy| {
            let mut vector = matrix.eigenvector(energy)?;
            // Rescale from unit 2-norm to sum psi^2 h = 1.
            let s = 1.0 / h.sqrt();
            for v in &mut vector {
                *v *= s;
            }
            Ok(EigenPair { energy, vector })
        })
        .collect()
}

/// Lowest k eigenpairs of -kappa d^2/dx^2 + V with Dirichlet walls.
pub fn solve_constant_mass<V>(
    potential: V,
    grid: &Grid,
    k: usize,
    kappa: f64,
) -> Result<Vec<EigenPair>>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
{
    let matrix = assemble_constant_mass(potential, grid, kappa)?;
    lowest_pairs(&matrix, k, grid.spacing())
}

/// Lowest k eigenpairs of -kappa d/dx[(1/m) d/dx] + V with Dirichlet walls.
pub fn solve_pdm<V>(
    potential: V,
    profile: &MassProfile,
    grid: &Grid,
    k: usize,
    kappa: f64,
) -> Result<Vec<EigenPair>>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
{
    let matrix = assemble_pdm(potential, profile, grid, kappa)?;
    lowest_pairs(&matrix, k, grid.spacing())
}

/// ||H psi - E psi||_2 / ||psi||_2 for any operator application.
pub fn residual_norm<F>(apply: F, psi: &[f64], energy: f64) -> f64
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let h_psi = apply(psi);
    let mut num = 0.0;
    let mut den = 0.0;
    for (hp, p) in h_psi.iter().zip(psi) {
        num += (hp - energy * p) * (hp - energy * p);
        den += p * p;
    }
    (num / den).sqrt()
}

/// Stencil residual of an analytically known function against the PDM
/// discretization, sampling ghost points beyond the window so every row uses
/// the full stencil (the sampled state need not satisfy the Dirichlet
/// truncation to be judged on the interior physics).
pub fn pdm_stencil_residual<V, P>(
    potential: V,
    profile: &MassProfile,
    grid: &Grid,
    kappa: f64,
    psi: P,
    energy: f64,
) -> Result<f64>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
    P: Fn(f64) -> Result<f64> + Sync + Send,
{
    let h = grid.spacing();
    let h2 = h * h;
    let rows = try_map_indexed(grid.n_points, |i| {
        let x = grid.point(i);
        let p = psi(x)?;
        let pl = psi(x - h)?;
        let pr = psi(x + h)?;
        let im = 1.0 / profile.mass(x - 0.5 * h);
        let ip = 1.0 / profile.mass(x + 0.5 * h);
        let hp = kappa / h2 * ((im + ip) * p - im * pl - ip * pr) + potential(x)? * p;
        Ok((hp - energy * p, p))
    })?;
    let mut num = 0.0;
    let mut den = 0.0;
    for (r, p) in rows {
        num += r * r;
        den += p * p;
    }
    Ok((num / den).sqrt())
}

/// Constant-mass variant of the ghost-point stencil residual.
pub fn constant_mass_stencil_residual<V, P>(
    potential: V,
    grid: &Grid,
    kappa: f64,
    psi: P,
    energy: f64,
) -> Result<f64>
where
    V: Fn(f64) -> Result<f64> + Sync + Send,
    P: Fn(f64) -> Result<f64> + Sync + Send,
{
    pdm_stencil_residual(potential, &MassProfile::Constant, grid, kappa, psi, energy)
}

/// Count strict sign changes between consecutive samples whose magnitudes
/// both exceed threshold * max|psi|.
pub fn count_nodes(psi: &[f64], threshold: f64) -> usize {
    let max = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 {
        return 0;
    }
    let cut = threshold * max;
    let mut nodes = 0;
    let mut prev: Option<f64> = None;
    for &v in psi {
        if v.abs() <= cut {
            continue;
        }
        if let Some(p) = prev {
            if p.signum() != v.signum() {
                nodes += 1;
            }
        }
        prev = Some(v);
    }
    nodes
}
