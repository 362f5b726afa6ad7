//! Run configuration shared by command-line flags and JSON config files.
//!
//! Every flag has a JSON key of the same (kebab-case) name. A config file is
//! loaded first and explicit flags override it key by key.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use fracfield_core::fracops::FracScheme;
use fracfield_core::grid::Grid;
use fracfield_core::AXES;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Deriv,
    Check,
    Wave,
    Dispersion,
    Gateaux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Gauge,
    Bianchi,
    VectorIdentities,
    Continuity,
    El,
    Asymmetric,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Gauge => "gauge",
            Suite::Bianchi => "bianchi",
            Suite::VectorIdentities => "vector-identities",
            Suite::Continuity => "continuity",
            Suite::El => "el",
            Suite::Asymmetric => "asymmetric",
        }
    }
}

/// Which one-dimensional operator `deriv` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum DerivOp {
    Left,
    Right,
    Lr,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize, Args)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct RunConfig {
    /// Subcommand; only meaningful in a config file.
    #[arg(skip)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    /// JSON config file; flags given alongside override its keys.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Points per axis: one value or four.
    #[arg(long, value_delimiter = ',')]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<usize>>,
    /// Left orders: one value or four.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<f64>>,
    /// Right orders: one value or four. Defaults to alpha.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<f64>>,
    /// Lower terminals: one value or four [default: -1].
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<f64>>,
    /// Upper terminals: one value or four [default: 1].
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<f64>>,
    /// Speed of light [default: 1].
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    /// Seed of the random fields [default: 0].
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Pass threshold, relative to max|F| + 1 [default: 1e-12, gateaux 1e-10].
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,

    /// Check suite to run.
    #[arg(long, value_enum)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    /// Number of seeded trials for `check` [default: 1].
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,

    /// Operator for `deriv` [default: lr].
    #[arg(long, value_enum)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op: Option<DerivOp>,
    /// Input `x,value` CSV for `deriv`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    /// Output file [default: standard output].
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,

    /// Retained non-negative mode indices for `wave`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<usize>,
    /// Spatial period for `wave` [default: 2π].
    #[arg(long = "L")]
    #[serde(default, rename = "L", skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
    /// Last output time for `wave`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_end: Option<f64>,
    /// Output interval for `wave`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt_out: Option<f64>,
    /// Initial displacement and velocity CSVs for `wave`: `u0.csv,v0.csv`.
    #[arg(long, value_delimiter = ',')]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub init: Option<Vec<PathBuf>>,

    /// Largest integer wavenumber for `dispersion`.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kmax: Option<u32>,

    /// Step sizes for `gateaux`, descending [default: 1e-2,1e-3,1e-4].
    #[arg(long, value_delimiter = ',')]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilons: Option<Vec<f64>>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($field:ident),*) => {
        RunConfig { $($field: $top.$field.or($base.$field)),* }
    };
}

impl RunConfig {
    /// Keys set in `self` win over those in `base`.
    pub fn over(self, base: RunConfig) -> RunConfig {
        let top = self;
        overlay!(base, top; command, config, grid, alpha, beta, lower, upper, c, seed, tolerance,
            suite, trials, op, input, output, modes, length, t_end, dt_out, init, kmax, epsilons)
    }

    pub fn from_json(text: &str, path: &Path) -> Result<RunConfig> {
        serde_json::from_str(text).map_err(|e| CliError::format(path, e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    /// Loads the `--config` file, if any, and applies `self` over it. A
    /// `command` key in the file must agree with the subcommand.
    pub fn resolve(self, command: Command) -> Result<RunConfig> {
        let merged = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                let file = RunConfig::from_json(&text, path)?;
                if file.command.is_some_and(|c| c != command) {
                    return Err(CliError::format(
                        path,
                        format!("config is for a different command than `{command:?}`"),
                    ));
                }
                self.over(file)
            }
            None => self,
        };
        Ok(RunConfig {
            command: Some(command),
            config: None,
            ..merged
        })
    }

    pub fn c(&self) -> Result<f64> {
        let c = self.c.unwrap_or(1.0);
        if c > 0.0 && c.is_finite() {
            Ok(c)
        } else {
            Err(CliError::usage(format!("--c must be positive, got {c}")))
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn tolerance(&self, default: f64) -> Result<f64> {
        let t = self.tolerance.unwrap_or(default);
        if t > 0.0 && t.is_finite() {
            Ok(t)
        } else {
            Err(CliError::usage(format!("--tolerance must be positive, got {t}")))
        }
    }

    pub fn grid(&self, default_count: usize) -> Result<Grid> {
        let counts = per_axis("grid", self.grid.as_deref(), default_count)?;
        let lower = per_axis("lower", self.lower.as_deref(), -1.0)?;
        let upper = per_axis("upper", self.upper.as_deref(), 1.0)?;
        Ok(Grid::new(counts, lower, upper)?)
    }

    /// Scheme on `grid`; `alpha` defaults to `default_alpha`, `beta` to `alpha`.
    pub fn scheme(&self, grid: &Grid, default_alpha: [f64; AXES]) -> Result<FracScheme> {
        let alpha = match self.alpha.as_deref() {
            Some(v) => per_axis("alpha", Some(v), 0.0)?,
            None => default_alpha,
        };
        let beta = match self.beta.as_deref() {
            Some(v) => per_axis("beta", Some(v), 0.0)?,
            None => alpha,
        };
        Ok(FracScheme::on_grid(grid, alpha, beta)?)
    }

    /// A single order for the one-dimensional commands.
    pub fn single_alpha(&self, default: Option<f64>) -> Result<f64> {
        match self.alpha.as_deref() {
            Some([a]) => Ok(*a),
            Some(v) => Err(CliError::usage(format!(
                "--alpha takes one value here, got {}",
                v.len()
            ))),
            None => default.ok_or_else(|| CliError::usage("--alpha is required")),
        }
    }

    pub fn single_beta(&self, alpha: f64) -> Result<f64> {
        match self.beta.as_deref() {
            Some([b]) => Ok(*b),
            Some(v) => Err(CliError::usage(format!("--beta takes one value here, got {}", v.len()))),
            None => Ok(alpha),
        }
    }

    pub fn require<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T> {
        value
            .as_ref()
            .ok_or_else(|| CliError::usage(format!("--{flag} is required")))
    }
}

fn per_axis<T: Copy>(flag: &str, values: Option<&[T]>, default: T) -> Result<[T; AXES]> {
    match values {
        None => Ok([default; AXES]),
        Some([v]) => Ok([*v; AXES]),
        Some(v) if v.len() == AXES => Ok(std::array::from_fn(|i| v[i])),
        Some(v) => Err(CliError::usage(format!(
            "--{flag} takes 1 or {AXES} values, got {}",
            v.len()
        ))),
    }
}
