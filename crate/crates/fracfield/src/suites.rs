//! Randomised identity checks behind `fracfield check` and `fracfield gateaux`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use fracfield_core::fields::{field_strength_lr, field_strength_right, gauge_transform, CurrentDensity};
use fracfield_core::fracops::{partial, AxisOp, FracScheme, LeftDerivative};
use fracfield_core::grid::{Grid, ScalarField};
use fracfield_core::maxwell::{
    bianchi_residual, bianchi_residual_with, continuity_residual, curl, curl_lr, div, div_lr, first_pair_residual,
    grad_lr, sources_from_field, MaxwellResidual, VectorField3,
};
use fracfield_core::variational::{el_factor, el_residual, gateaux_check, ActionConfig, Quadrature, VariationProbe};
use fracfield_core::{fields::FieldTensor, AXES};
use serde::Serialize;

use crate::config::Suite;
use crate::error::{CliError, Result};
use crate::random;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchemeReport {
    pub alpha: [f64; AXES],
    pub beta: [f64; AXES],
    pub lower: [f64; AXES],
    pub upper: [f64; AXES],
}

impl From<&FracScheme> for SchemeReport {
    fn from(s: &FracScheme) -> Self {
        SchemeReport {
            alpha: s.alpha(),
            beta: s.beta(),
            lower: s.lower(),
            upper: s.upper(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridReport {
    pub counts: [usize; AXES],
    pub lower: [f64; AXES],
    pub upper: [f64; AXES],
}

impl From<&Grid> for GridReport {
    fn from(g: &Grid) -> Self {
        GridReport {
            counts: g.counts(),
            lower: g.lower(),
            upper: g.upper(),
        }
    }
}

/// Max-abs residuals; `None` for quantities a suite does not evaluate.
/// Suite-specific quantities go into `extra`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct NormsReport {
    pub gauss: Option<f64>,
    pub ampere: Option<f64>,
    pub no_monopole: Option<f64>,
    pub faraday: Option<f64>,
    pub bianchi: Option<f64>,
    pub continuity: Option<f64>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, f64>,
}

impl NormsReport {
    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        [
            self.gauss,
            self.ampere,
            self.no_monopole,
            self.faraday,
            self.bianchi,
            self.continuity,
        ]
        .into_iter()
        .flatten()
        .chain(self.extra.values().copied())
    }

    pub fn max(&self) -> f64 {
        self.values().fold(0.0, f64::max)
    }

    fn merge_max(&mut self, other: &NormsReport) {
        let pick = |a: Option<f64>, b: Option<f64>| match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        self.gauss = pick(self.gauss, other.gauss);
        self.ampere = pick(self.ampere, other.ampere);
        self.no_monopole = pick(self.no_monopole, other.no_monopole);
        self.faraday = pick(self.faraday, other.faraday);
        self.bianchi = pick(self.bianchi, other.bianchi);
        self.continuity = pick(self.continuity, other.continuity);
        for (k, v) in &other.extra {
            let slot = self.extra.entry(k.clone()).or_insert(*v);
            *slot = slot.max(*v);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub scheme: SchemeReport,
    pub grid: GridReport,
    pub residual_norms: NormsReport,
    pub pass: bool,
    pub tolerance: f64,
    /// Largest `max|F| + 1` over the trials; residuals pass when below
    /// `tolerance * scale` of their own trial.
    pub scale: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Inputs to [`run_check`].
#[derive(Clone, Debug)]
pub struct CheckSettings {
    pub suite: Suite,
    pub grid: Grid,
    pub scheme: FracScheme,
    pub c: f64,
    pub seed: u64,
    pub trials: u64,
    pub tolerance: f64,
    pub threads: usize,
}

struct Trial {
    norms: NormsReport,
    scale: f64,
}

fn diff_max(a: &ScalarField, b: &ScalarField) -> f64 {
    a.data()
        .iter()
        .zip(b.data())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn run_trial(s: &CheckSettings, trial: u64) -> Result<Trial> {
    let mut rng = random::trial_rng(s.seed, trial);
    let grid = s.grid;
    let scheme = &s.scheme;
    let mut norms = NormsReport::default();
    let scale = match s.suite {
        Suite::Gauge => {
            let a = random::potential(grid, &mut rng);
            let phi = random::scalar(grid, &mut rng);
            let f = field_strength_lr(&a, scheme)?;
            let shifted = field_strength_lr(&gauge_transform(&a, &phi, scheme)?, scheme)?;
            norms.extra.insert("field_tensor".into(), f.sub(&shifted)?.max_abs());
            f.max_abs() + 1.0
        }
        Suite::Bianchi => {
            let f = field_strength_lr(&random::potential(grid, &mut rng), scheme)?;
            let (no_monopole, faraday) = first_pair_residual(&f, scheme)?;
            norms.no_monopole = Some(no_monopole.max_abs());
            norms.faraday = Some(faraday.max_abs());
            norms.bianchi = Some(bianchi_residual(&f, scheme)?);
            f.max_abs() + 1.0
        }
        Suite::VectorIdentities => {
            let v = random::vector(grid, &mut rng);
            let phi = random::scalar(grid, &mut rng);
            let curl_v = curl_lr(&v, scheme)?;
            let grad_phi = grad_lr(&phi, scheme)?;
            norms
                .extra
                .insert("div_curl".into(), div_lr(&curl_v, scheme)?.max_abs());
            norms
                .extra
                .insert("curl_grad".into(), curl_lr(&grad_phi, scheme)?.max_abs());
            curl_v.max_abs().max(grad_phi.max_abs()) + 1.0
        }
        Suite::Continuity => {
            if !scheme.is_symmetric_causal() {
                return Err(CliError::usage(
                    "continuity needs alpha_0 = beta_0 = 1 and symmetric spatial axes (alpha_i = beta_i, lower_i = -upper_i)",
                ));
            }
            let f = field_strength_lr(&random::potential(grid, &mut rng), scheme)?;
            let j = sources_from_field(&f, scheme, s.c)?;
            let residual = MaxwellResidual::evaluate(&f, &j, scheme, s.c)?.norms();
            norms.gauss = Some(residual.gauss);
            norms.ampere = Some(residual.ampere);
            let current = VectorField3::new(j.current().clone())?;
            norms.continuity = Some(continuity_residual(j.rho(), &current, scheme, s.c)?.max_abs());
            f.max_abs() + 1.0
        }
        Suite::El => {
            let a = random::potential(grid, &mut rng);
            let j = random::current(grid, &mut rng);
            let cfg = ActionConfig::new(grid, *scheme, s.c, Quadrature::Uniform)?;
            let r = el_residual(&a, &j, &cfg)?;
            let f = field_strength_lr(&a, scheme)?;
            let maxwell = MaxwellResidual::evaluate(&f, &j, scheme, s.c)?;
            let k = el_factor(s.c);
            let mut gap = diff_max(r.component(0), &maxwell.gauss.scaled(k));
            for (i, comp) in maxwell.ampere.components().iter().enumerate() {
                gap = gap.max(diff_max(r.component(i + 1), &comp.scaled(k)));
            }
            norms.extra.insert("el_vs_second_pair".into(), gap);
            f.max_abs() + 1.0
        }
        Suite::Asymmetric => {
            let alpha = scheme.alpha()[0];
            if scheme.alpha().iter().chain(scheme.beta().iter()).any(|&a| a != alpha) {
                return Err(CliError::usage(
                    "asymmetric suite takes one order: give a single --alpha and no --beta",
                ));
            }
            let a = random::potential(grid, &mut rng);
            let f = field_strength_right(&a, alpha)?;
            let j = asymmetric_sources(&f, alpha, s.c)?;
            let residual = MaxwellResidual::evaluate_asymmetric(&f, &j, alpha, s.c)?.norms();
            norms.gauss = Some(residual.gauss);
            norms.ampere = Some(residual.ampere);
            norms.no_monopole = Some(residual.no_monopole);
            norms.faraday = Some(residual.faraday);
            norms.bianchi = Some(bianchi_residual_with(
                &f,
                &fracfield_core::fracops::RightDerivative(alpha),
            )?);
            f.max_abs() + 1.0
        }
    };
    Ok(Trial { norms, scale })
}

/// Sources that satisfy the left-sided second pair exactly for `f`.
fn asymmetric_sources(f: &FieldTensor, alpha: f64, c: f64) -> Result<CurrentDensity> {
    let d = LeftDerivative(alpha);
    let e = VectorField3::new(f.electric().clone())?;
    let b = VectorField3::new(f.magnetic().clone())?;
    let rho = div(&e, &d)?.scaled(1.0 / (4.0 * PI));
    let curl_b = curl(&b, &d)?.into_components();
    let mut current = curl_b;
    for (k, comp) in current.iter_mut().enumerate() {
        let dt_e = partial(&e.components()[k], 0, AxisOp::Left(alpha))?;
        *comp = (&*comp - &dt_e).scaled(c / (4.0 * PI));
    }
    Ok(CurrentDensity::new(rho, current)?)
}

/// Runs `settings.trials` seeded trials on up to `settings.threads` threads.
/// Results are combined in trial order, so the report does not depend on the
/// thread count.
pub fn run_check(settings: &CheckSettings) -> Result<CheckReport> {
    let trials = settings.trials.max(1);
    let threads = settings.threads.clamp(1, trials as usize);
    let mut results: Vec<Option<Result<Trial>>> = (0..trials).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (worker, chunk) in results.chunks_mut(trials.div_ceil(threads as u64) as usize).enumerate() {
            let first = worker as u64 * trials.div_ceil(threads as u64);
            scope.spawn(move || {
                for (offset, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(run_trial(settings, first + offset as u64));
                }
            });
        }
    });
    let mut norms = NormsReport::default();
    let mut scale: f64 = 0.0;
    let mut pass = true;
    for result in results {
        let trial = result.expect("every trial ran")?;
        pass &= trial.norms.max() <= settings.tolerance * trial.scale;
        norms.merge_max(&trial.norms);
        scale = scale.max(trial.scale);
    }
    Ok(CheckReport {
        suite: settings.suite.name(),
        scheme: (&settings.scheme).into(),
        grid: (&settings.grid).into(),
        residual_norms: norms,
        pass,
        tolerance: settings.tolerance,
        scale,
        trials,
        seed: settings.seed,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GateauxJson {
    pub epsilons: Vec<f64>,
    pub gaps: Vec<f64>,
    pub inner_product: f64,
    pub pass: bool,
}

/// Gâteaux check with random `A`, `j` and a random compactly supported `η`,
/// all drawn from stream 0 of `seed`.
pub fn run_gateaux(
    grid: Grid,
    scheme: FracScheme,
    c: f64,
    seed: u64,
    epsilons: Vec<f64>,
    tolerance: f64,
) -> Result<GateauxJson> {
    let mut rng = random::trial_rng(seed, 0);
    let a = random::potential(grid, &mut rng);
    let j = random::current(grid, &mut rng);
    let eta = random::compact_potential(grid, &mut rng);
    let cfg = ActionConfig::new(grid, scheme, c, Quadrature::Uniform)?;
    let report = gateaux_check(&a, &j, &cfg, &VariationProbe::new(eta, epsilons)?, tolerance)?;
    Ok(GateauxJson {
        epsilons: report.epsilons,
        gaps: report.gaps,
        inner_product: report.inner_product,
        pass: report.pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings(suite: Suite, alpha: [f64; AXES], trials: u64, threads: usize) -> CheckSettings {
        let grid = Grid::cube(5, -1.0, 1.0).unwrap();
        CheckSettings {
            suite,
            grid,
            scheme: FracScheme::on_grid(&grid, alpha, alpha).unwrap(),
            c: 1.0,
            seed: 3,
            trials,
            tolerance: 1e-12,
            threads,
        }
    }

    #[test]
    fn every_suite_passes_on_a_small_grid() {
        for suite in [
            Suite::Gauge,
            Suite::Bianchi,
            Suite::VectorIdentities,
            Suite::El,
            Suite::Asymmetric,
        ] {
            let report = run_check(&settings(suite, [0.5; AXES], 2, 2)).unwrap();
            assert!(report.pass, "{suite:?}: {report:?}");
        }
        let report = run_check(&settings(Suite::Continuity, [1.0, 0.5, 0.5, 0.5], 2, 1)).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn reports_do_not_depend_on_thread_count() {
        let one = run_check(&settings(Suite::Gauge, [0.5; AXES], 5, 1)).unwrap();
        let three = run_check(&settings(Suite::Gauge, [0.5; AXES], 5, 3)).unwrap();
        assert_eq!(one, three);
    }

    #[test]
    fn continuity_refuses_a_fractional_time_axis() {
        assert!(matches!(
            run_check(&settings(Suite::Continuity, [0.5; AXES], 1, 1)),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn json_key_order() {
        let report = run_check(&settings(Suite::Bianchi, [0.5; AXES], 1, 1)).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let keys = [
            "\"suite\"",
            "\"scheme\"",
            "\"grid\"",
            "\"residual_norms\"",
            "\"pass\"",
            "\"tolerance\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
        let norms = [
            "\"gauss\":null",
            "\"ampere\":null",
            "\"no_monopole\":",
            "\"faraday\":",
            "\"bianchi\":",
            "\"continuity\":null",
        ];
        let positions: Vec<usize> = norms.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    }
}
