//! `fracfield` command line.
//!
//! Exit status: 0 on success, 1 when a check fails its tolerance, 2 on usage,
//! configuration or IO errors.

use std::f64::consts::TAU;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::{Parser, Subcommand};
use fracfield_core::fracops::AxisOp;
use fracfield_core::specwave::{dispersion, solve_wave, WaveConfig};
use fracfield_core::variational::{DEFAULT_EPSILONS, GATEAUX_TOLERANCE};
use fracfield_core::AXES;
use serde::Serialize;

use crate::config::{Command, DerivOp, RunConfig, Suite};
use crate::error::{CliError, Result};
use crate::io;
use crate::suites::{run_check, run_gateaux, CheckSettings};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "FRACFIELD_THREADS";

const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(
    name = "fracfield",
    version,
    about = "Fractional electromagnetism: operators, identity checks and a spectral wave solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Apply a fractional derivative to an `x,value` CSV.
    Deriv(RunConfig),
    /// Run a randomised identity suite and print a JSON report.
    Check(RunConfig),
    /// Solve the periodic fractional wave equation; prints `t,x,u` CSV.
    Wave(RunConfig),
    /// Tabulate the plane-wave dispersion relation as `k,alpha,omega` CSV.
    Dispersion(RunConfig),
    /// Compare the differenced action with the Euler-Lagrange residual.
    Gateaux(RunConfig),
}

impl Sub {
    fn split(self) -> (Command, RunConfig) {
        match self {
            Sub::Deriv(c) => (Command::Deriv, c),
            Sub::Check(c) => (Command::Check, c),
            Sub::Wave(c) => (Command::Wave, c),
            Sub::Dispersion(c) => (Command::Dispersion, c),
            Sub::Gateaux(c) => (Command::Gateaux, c),
        }
    }
}

/// Parses `argv` (including the program name) into the merged configuration.
pub fn parse_config<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (command, cfg) = Cli::try_parse_from(argv)?.command.split();
    Ok(RunConfig {
        command: Some(command),
        ..cfg
    })
}

/// Worker threads allowed by [`THREADS_VAR`], else the available parallelism.
pub fn thread_limit(var: Option<&str>) -> Result<usize> {
    match var {
        Some(text) => match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::usage(format!(
                "{THREADS_VAR} must be a positive integer, got `{text}`"
            ))),
        },
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Entry point: runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let (command, flags) = parsed.command.split();
    let threads = std::env::var(THREADS_VAR).ok();
    let outcome = flags
        .resolve(command)
        .and_then(|cfg| thread_limit(threads.as_deref()).and_then(|t| execute(command, &cfg, t, stdout)));
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a resolved configuration; `Ok(false)` means a check failed.
pub fn execute(command: Command, cfg: &RunConfig, threads: usize, stdout: &mut dyn Write) -> Result<bool> {
    match &cfg.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::io(path, e))?;
            let mut out = BufWriter::new(file);
            let pass = dispatch(command, cfg, threads, &mut out)?;
            out.flush().map_err(|e| CliError::io(path, e))?;
            Ok(pass)
        }
        None => dispatch(command, cfg, threads, stdout),
    }
}

fn dispatch(command: Command, cfg: &RunConfig, threads: usize, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Deriv => deriv(cfg, out),
        Command::Check => check(cfg, threads, out),
        Command::Wave => wave(cfg, out),
        Command::Dispersion => dispersion_sweep(cfg, out),
        Command::Gateaux => gateaux(cfg, out),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn deriv(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let input = RunConfig::require(&cfg.input, "input")?;
    let line = io::read_line_csv(input)?;
    let alpha = cfg.single_alpha(None)?;
    let op = match cfg.op.unwrap_or(DerivOp::Lr) {
        DerivOp::Left => AxisOp::Left(alpha),
        DerivOp::Right => AxisOp::Right(cfg.single_beta(alpha)?),
        DerivOp::Lr => AxisOp::LeftRight {
            alpha,
            beta: cfg.single_beta(alpha)?,
        },
    };
    io::write_line(out, &op.apply_line(&line)?)?;
    Ok(true)
}

fn check(cfg: &RunConfig, threads: usize, out: &mut dyn Write) -> Result<bool> {
    let suite = *RunConfig::require(&cfg.suite, "suite")?;
    let grid = cfg.grid(8)?;
    let default_alpha = match suite {
        Suite::Continuity => [1.0, 0.5, 0.5, 0.5],
        _ => [0.5; AXES],
    };
    let scheme = cfg.scheme(&grid, default_alpha)?;
    let trials = cfg.trials.unwrap_or(1);
    if trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let settings = CheckSettings {
        suite,
        grid,
        scheme,
        c: cfg.c()?,
        seed: cfg.seed(),
        trials,
        tolerance: cfg.tolerance(IDENTITY_TOLERANCE)?,
        threads,
    };
    let report = run_check(&settings)?;
    write_json(out, &report)?;
    Ok(report.pass)
}

fn wave(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let init = RunConfig::require(&cfg.init, "init")?;
    let [u0_path, v0_path] = init.as_slice() else {
        return Err(CliError::usage("--init takes two files: u0.csv,v0.csv"));
    };
    let u0 = io::read_line_csv(u0_path)?;
    let v0 = io::read_line_csv(v0_path)?;
    let t_end = *RunConfig::require(&cfg.t_end, "t-end")?;
    let dt = *RunConfig::require(&cfg.dt_out, "dt-out")?;
    let wave_cfg = WaveConfig {
        alpha: cfg.single_alpha(None)?,
        c: cfg.c()?,
        length: cfg.length.unwrap_or(TAU),
        n_modes: *RunConfig::require(&cfg.modes, "modes")?,
        times: WaveConfig::uniform_times(t_end, dt)?,
    };
    let solution = solve_wave(&u0, &v0, &wave_cfg).map_err(|e| match e {
        fracfield_core::Error::TooFewSamples { got, min } => CliError::format(
            u0_path,
            format!(
                "{got} samples cannot resolve {} modes; need at least {min}",
                wave_cfg.n_modes
            ),
        ),
        other => other.into(),
    })?;
    io::write_wave(out, &solution)?;
    Ok(true)
}

fn dispersion_sweep(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let alphas = RunConfig::require(&cfg.alpha, "alpha")?;
    let kmax = *RunConfig::require(&cfg.kmax, "kmax")?;
    let c = cfg.c()?;
    let mut rows = Vec::new();
    for &alpha in alphas {
        for k in 0..=kmax {
            rows.push((f64::from(k), alpha, dispersion(f64::from(k), alpha, c)?));
        }
    }
    io::write_dispersion(out, &rows)?;
    Ok(true)
}

fn gateaux(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let grid = cfg.grid(6)?;
    let scheme = cfg.scheme(&grid, [0.5; AXES])?;
    let epsilons = cfg.epsilons.clone().unwrap_or_else(|| DEFAULT_EPSILONS.to_vec());
    let report = run_gateaux(
        grid,
        scheme,
        cfg.c()?,
        cfg.seed(),
        epsilons,
        cfg.tolerance(GATEAUX_TOLERANCE)?,
    )?;
    write_json(out, &report)?;
    Ok(report.pass)
}
