//! Run configuration: TOML schema, validation with field-precise messages,
//! and conversion into the core types.

use pdmsolve_core::oracle::Grid;
use pdmsolve_core::refpot::{BranchSign, RosenMorseParams, ScarfParams};
use pdmsolve_core::{MassProfile, ReferencePotential};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub reference: ReferenceConfig,
    pub profile: ProfileConfig,
    pub alpha: f64,
    #[serde(default = "default_kappa")]
    pub kappa: f64,
    pub grid: GridConfig,
    /// Requested quantum numbers; absent means every bound state.
    #[serde(default)]
    pub states: Option<Vec<usize>>,
    #[serde(default)]
    pub tolerance: Option<f64>,
    /// Opt-in for the Scarf sigma != tau branches.
    #[serde(default)]
    pub allow_experimental: bool,
    #[serde(default)]
    pub output: Option<OutputConfig>,
}

fn default_kappa() -> f64 {
    1.0
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceConfig {
    /// "rosen-morse" or "scarf".
    pub kind: String,
    pub v1: f64,
    pub v2: f64,
    pub beta: f64,
    pub q: f64,
    /// +1 or -1; Scarf only.
    #[serde(default)]
    pub sigma: Option<i8>,
    #[serde(default)]
    pub tau: Option<i8>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileConfig {
    /// "rational-single", "rational-squared", "exponential", or "constant".
    pub kind: String,
    #[serde(default)]
    pub a: Option<f64>,
    #[serde(default)]
    pub q: Option<f64>,
    #[serde(default)]
    pub b: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// "csv" or "json".
    #[serde(default)]
    pub format: Option<String>,
    #[serde(default)]
    pub path: Option<String>,
}

/// A config-validation failure, tagged with the offending field path.
#[derive(Debug)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error at `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError {
        field: field.to_string(),
        message: message.into(),
    }
}

impl RunConfig {
    pub fn parse_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| err("<config>", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        self.reference()?;
        self.profile()?;
        self.grid()?;
        if !self.alpha.is_finite() {
            return Err(err("alpha", format!("must be finite, got {}", self.alpha)));
        }
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return Err(err("kappa", format!("must be > 0, got {}", self.kappa)));
        }
        if let Some(tol) = self.tolerance {
            if tol <= 0.0 || !tol.is_finite() {
                return Err(err("tolerance", format!("must be > 0, got {tol}")));
            }
        }
        if let Some(out) = &self.output {
            if let Some(fmt) = &out.format {
                OutputFormat::parse(fmt).map_err(|m| err("output.format", m))?;
            }
        }
        Ok(())
    }

    pub fn reference(&self) -> Result<ReferencePotential, ConfigError> {
        let r = &self.reference;
        match r.kind.as_str() {
            "rosen-morse" => {
                if r.sigma.is_some() || r.tau.is_some() {
                    return Err(err(
                        "reference.sigma",
                        "sigma/tau apply to the scarf reference only",
                    ));
                }
                let p = RosenMorseParams::new(r.v1, r.v2, r.beta, r.q)
                    .map_err(|e| err("reference", e.to_string()))?;
                Ok(ReferencePotential::RosenMorse(p))
            }
            "scarf" => {
                let sigma = branch_sign(r.sigma.unwrap_or(1), "reference.sigma")?;
                let tau = branch_sign(r.tau.unwrap_or(1), "reference.tau")?;
                let p = ScarfParams::new(r.v1, r.v2, r.beta, r.q, sigma, tau)
                    .map_err(|e| err("reference", e.to_string()))?;
                Ok(ReferencePotential::Scarf(p))
            }
            other => Err(err(
                "reference.kind",
                format!("expected \"rosen-morse\" or \"scarf\", got \"{other}\""),
            )),
        }
    }

    pub fn profile(&self) -> Result<MassProfile, ConfigError> {
        let p = &self.profile;
        let need = |v: Option<f64>, field: &str| {
            v.ok_or_else(|| err(field, format!("required for profile kind \"{}\"", p.kind)))
        };
        match p.kind.as_str() {
            "rational-single" => {
                let a = need(p.a, "profile.a")?;
                let q = need(p.q, "profile.q")?;
                MassProfile::rational_single(a, q).map_err(|e| err("profile", e.to_string()))
            }
            "rational-squared" => {
                let a = need(p.a, "profile.a")?;
                let b = need(p.b, "profile.b")?;
                MassProfile::rational_squared(a, b).map_err(|e| err("profile", e.to_string()))
            }
            "exponential" => {
                let a = need(p.a, "profile.a")?;
                MassProfile::exponential(a).map_err(|e| err("profile", e.to_string()))
            }
            "constant" => Ok(MassProfile::Constant),
            other => Err(err(
                "profile.kind",
                format!(
                    "expected \"rational-single\", \"rational-squared\", \
                     \"exponential\", or \"constant\", got \"{other}\""
                ),
            )),
        }
    }

    pub fn grid(&self) -> Result<Grid, ConfigError> {
        Grid::new(self.grid.x_min, self.grid.x_max, self.grid.n_points)
            .map_err(|e| err("grid", e.to_string()))
    }
}

fn branch_sign(v: i8, field: &str) -> Result<BranchSign, ConfigError> {
    match v {
        1 => Ok(BranchSign::Plus),
        -1 => Ok(BranchSign::Minus),
        other => Err(err(field, format!("expected +1 or -1, got {other}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("expected \"csv\" or \"json\", got \"{other}\"")),
        }
    }
}
