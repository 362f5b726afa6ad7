//! Discrete fractional action of the electromagnetic field and a numerical
//! check of its Euler-Lagrange equation.
//!
//! The action is
//!
//! ```text
//! S = -1/(16πc) Σ w F_{μν} F^{μν}  -  1/c² Σ w j^μ A_μ
//! ```
//!
//! with `F` the left-right tensor. Varying `A_ν` along `η_ν` and moving the
//! derivative onto `F` with the summation-reorder identity
//! `⟨∂^{αβ} f, g⟩ = -⟨f, ∂^{βα} g⟩` gives `δS = ⟨R, η⟩` with
//!
//! ```text
//! R^ν = 1/(4πc) ∂^{βα}_μ F^{μν} - 1/c² j^ν  =  (gauss, ampere) / (4πc)
//! ```
//!
//! The reorder identity is exact only when every lattice point carries the
//! same quadrature weight, which is why [`Quadrature::Uniform`] is the default.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::fields::{field_strength_lr, CurrentDensity, FourPotential};
use crate::fracops::{AxisDerivative, FracScheme};
use crate::grid::{Grid, ScalarField};
use crate::{Error, Result, AXES};

/// Default ladder of variation step sizes.
pub const DEFAULT_EPSILONS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Relative gap allowed between the differenced action and `⟨R, η⟩`.
pub const GATEAUX_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Quadrature {
    /// `volume / point_count` on every point.
    #[default]
    Uniform,
    /// Product trapezoid rule, half weights on each boundary layer.
    Trapezoid,
}

impl Quadrature {
    pub fn weights(self, grid: &Grid) -> Vec<f64> {
        match self {
            Quadrature::Uniform => vec![grid.volume() / grid.len() as f64; grid.len()],
            Quadrature::Trapezoid => (0..grid.len())
                .map(|k| {
                    let idx = grid.multi_index(k);
                    (0..AXES)
                        .map(|a| {
                            let h = grid.spacing(a);
                            if idx[a] == 0 || idx[a] + 1 == grid.count(a) {
                                0.5 * h
                            } else {
                                h
                            }
                        })
                        .product()
                })
                .collect(),
        }
    }
}

/// Scheme, wave speed and quadrature weights for the discrete action.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionConfig {
    scheme: FracScheme,
    c: f64,
    quadrature: Quadrature,
    grid: Grid,
    weights: Vec<f64>,
}

impl ActionConfig {
    pub fn new(grid: Grid, scheme: FracScheme, c: f64, quadrature: Quadrature) -> Result<Self> {
        scheme.check_grid(&grid)?;
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain(alloc::format!("wave speed must be positive, got {c}")));
        }
        let weights = quadrature.weights(&grid);
        Ok(ActionConfig {
            scheme,
            c,
            quadrature,
            grid,
            weights,
        })
    }

    pub fn scheme(&self) -> &FracScheme {
        &self.scheme
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn quadrature(&self) -> Quadrature {
        self.quadrature
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    fn check(&self, potential: &FourPotential, j: &CurrentDensity) -> Result<()> {
        if *potential.grid() != self.grid || *j.grid() != self.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }
}

/// Quadrature-weighted `Σ_μ ⟨a_μ, b_μ⟩`.
pub fn inner_product(a: &FourPotential, b: &FourPotential, cfg: &ActionConfig) -> Result<f64> {
    if *a.grid() != cfg.grid || *b.grid() != cfg.grid {
        return Err(Error::GridMismatch);
    }
    Ok((0..AXES)
        .map(|mu| a.component(mu).weighted_dot(b.component(mu), &cfg.weights))
        .sum())
}

/// Discrete action `S[A]`.
pub fn action_value(potential: &FourPotential, j: &CurrentDensity, cfg: &ActionConfig) -> Result<f64> {
    cfg.check(potential, j)?;
    let c = cfg.c;
    let f = field_strength_lr(potential, &cfg.scheme)?;
    let field_part: f64 = f
        .contraction()
        .data()
        .iter()
        .zip(&cfg.weights)
        .map(|(v, w)| w * v)
        .sum();
    let mut interaction = 0.0;
    for mu in 0..AXES {
        interaction += j.upper(mu, c).weighted_dot(potential.component(mu), &cfg.weights);
    }
    Ok(-field_part / (16.0 * PI * c) - interaction / (c * c))
}

/// Euler-Lagrange residual `R^ν = 1/(4πc) ∂^{βα}_μ F^{μν} - j^ν / c²`, one
/// field per contravariant index. Zero everywhere iff `A` extremises `S`.
pub fn el_residual(potential: &FourPotential, j: &CurrentDensity, cfg: &ActionConfig) -> Result<FourPotential> {
    cfg.check(potential, j)?;
    let c = cfg.c;
    let f = field_strength_lr(potential, &cfg.scheme)?;
    let swapped = cfg.scheme.swapped();
    let mut out: [ScalarField; AXES] = core::array::from_fn(|_| ScalarField::zeros(cfg.grid));
    for (nu, slot) in out.iter_mut().enumerate() {
        let mut acc = ScalarField::zeros(cfg.grid);
        for mu in 0..AXES {
            if mu != nu {
                acc = &acc + &swapped.partial(&f.raised(mu, nu), mu)?;
            }
        }
        *slot = &acc.scaled(1.0 / (4.0 * PI * c)) - &j.upper(nu, c).scaled(1.0 / (c * c));
    }
    FourPotential::new(out)
}

/// Conversion factor between [`el_residual`] and the Maxwell residuals:
/// `R = (gauss, ampere) * EL_FACTOR(c)`.
pub fn el_factor(c: f64) -> f64 {
    1.0 / (4.0 * PI * c)
}

/// A test variation `η` and the step sizes used to difference the action.
#[derive(Clone, Debug, PartialEq)]
pub struct VariationProbe {
    eta: FourPotential,
    epsilons: Vec<f64>,
}

impl VariationProbe {
    /// `eta` must vanish on every boundary point; `epsilons` must be positive
    /// and strictly descending.
    pub fn new(eta: FourPotential, epsilons: Vec<f64>) -> Result<Self> {
        let grid = *eta.grid();
        for k in 0..grid.len() {
            if grid.on_boundary(grid.multi_index(k)) && eta.components().iter().any(|c| c.data()[k] != 0.0) {
                return Err(Error::ProbeNotCompact);
            }
        }
        if epsilons.is_empty()
            || epsilons.iter().any(|&e| !(e > 0.0 && e.is_finite()))
            || epsilons.windows(2).any(|w| w[1] >= w[0])
        {
            return Err(Error::Domain(
                "epsilons must be positive and strictly descending".into(),
            ));
        }
        Ok(VariationProbe { eta, epsilons })
    }

    pub fn with_default_epsilons(eta: FourPotential) -> Result<Self> {
        VariationProbe::new(eta, DEFAULT_EPSILONS.to_vec())
    }

    pub fn eta(&self) -> &FourPotential {
        &self.eta
    }

    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }
}

/// Outcome of [`gateaux_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct GateauxReport {
    pub epsilons: Vec<f64>,
    /// Central-difference estimates `(S[A+εη] - S[A-εη]) / 2ε`.
    pub variations: Vec<f64>,
    /// `|variation - inner_product|` per ε.
    pub gaps: Vec<f64>,
    pub inner_product: f64,
    pub pass: bool,
}

impl GateauxReport {
    /// Empirical order `log(gap_i / gap_{i+1}) / log(ε_i / ε_{i+1})` between
    /// neighbouring steps; `None` where a gap is exactly zero.
    pub fn observed_orders(&self) -> Vec<Option<f64>> {
        self.gaps
            .windows(2)
            .zip(self.epsilons.windows(2))
            .map(|(g, e)| {
                if g[0] > 0.0 && g[1] > 0.0 {
                    Some(libm::log(g[0] / g[1]) / libm::log(e[0] / e[1]))
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Compares the differenced action against `⟨el_residual(A), η⟩` for every ε
/// of the probe. Passes when each gap is within `tolerance * max(1, |⟨R, η⟩|)`.
pub fn gateaux_check(
    potential: &FourPotential,
    j: &CurrentDensity,
    cfg: &ActionConfig,
    probe: &VariationProbe,
    tolerance: f64,
) -> Result<GateauxReport> {
    let residual = el_residual(potential, j, cfg)?;
    let inner = inner_product(&residual, probe.eta(), cfg)?;
    let mut variations = Vec::with_capacity(probe.epsilons.len());
    let mut gaps = Vec::with_capacity(probe.epsilons.len());
    for &eps in &probe.epsilons {
        let plus = action_value(&potential.add_scaled(eps, probe.eta())?, j, cfg)?;
        let minus = action_value(&potential.add_scaled(-eps, probe.eta())?, j, cfg)?;
        let variation = (plus - minus) / (2.0 * eps);
        variations.push(variation);
        gaps.push((variation - inner).abs());
    }
    let bound = tolerance * inner.abs().max(1.0);
    let pass = gaps.iter().all(|&g| g <= bound);
    Ok(GateauxReport {
        epsilons: probe.epsilons.clone(),
        variations,
        gaps,
        inner_product: inner,
        pass,
    })
}
