//! Fractional vector calculus and Maxwell-equation residuals.
//!
//! Vector fields carry their three spatial components in axis order, so the
//! component `k` of a [`VectorField3`] is differentiated along axis `k + 1`.
//!
//! Two theories are covered. The symmetric one uses the left-right operators:
//! its equations of motion use `∂^{βα}` (the order slots exchanged), while the
//! identities (Bianchi, no-monopole, Faraday) use `∂^{αβ}`. The asymmetric one
//! builds its tensor from right derivatives; its second pair then uses left
//! operators and its first pair right operators.

use core::f64::consts::PI;

use crate::fields::{CurrentDensity, FieldTensor};
use crate::fracops::{AxisDerivative, FracScheme, LeftDerivative, RightDerivative};
use crate::grid::{ensure_same_grid, Grid, ScalarField};
use crate::{Error, Result, AXES};

/// Three spatial components on a shared grid.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField3 {
    components: [ScalarField; 3],
}

impl VectorField3 {
    pub fn new(components: [ScalarField; 3]) -> Result<Self> {
        ensure_same_grid(components.iter())?;
        Ok(VectorField3 { components })
    }

    pub fn zeros(grid: Grid) -> Self {
        VectorField3 {
            components: core::array::from_fn(|_| ScalarField::zeros(grid)),
        }
    }

    pub fn grid(&self) -> &Grid {
        self.components[0].grid()
    }

    pub fn components(&self) -> &[ScalarField; 3] {
        &self.components
    }

    pub fn into_components(self) -> [ScalarField; 3] {
        self.components
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    pub fn map(&self, f: impl Fn(usize, &ScalarField) -> ScalarField) -> VectorField3 {
        VectorField3 {
            components: core::array::from_fn(|k| f(k, &self.components[k])),
        }
    }
}

pub fn grad<D: AxisDerivative>(phi: &ScalarField, d: &D) -> Result<VectorField3> {
    Ok(VectorField3 {
        components: [d.partial(phi, 1)?, d.partial(phi, 2)?, d.partial(phi, 3)?],
    })
}

pub fn div<D: AxisDerivative>(f: &VectorField3, d: &D) -> Result<ScalarField> {
    let mut acc = d.partial(&f.components[0], 1)?;
    for k in 1..3 {
        acc = &acc + &d.partial(&f.components[k], k + 1)?;
    }
    Ok(acc)
}

/// `e_i ε_ijk D_j F_k`.
pub fn curl<D: AxisDerivative>(f: &VectorField3, d: &D) -> Result<VectorField3> {
    let c = &f.components;
    let x = &d.partial(&c[2], 2)? - &d.partial(&c[1], 3)?;
    let y = &d.partial(&c[0], 3)? - &d.partial(&c[2], 1)?;
    let z = &d.partial(&c[1], 1)? - &d.partial(&c[0], 2)?;
    Ok(VectorField3 { components: [x, y, z] })
}

pub fn grad_lr(phi: &ScalarField, scheme: &FracScheme) -> Result<VectorField3> {
    scheme.check_grid(phi.grid())?;
    grad(phi, scheme)
}

pub fn div_lr(f: &VectorField3, scheme: &FracScheme) -> Result<ScalarField> {
    scheme.check_grid(f.grid())?;
    div(f, scheme)
}

pub fn curl_lr(f: &VectorField3, scheme: &FracScheme) -> Result<VectorField3> {
    scheme.check_grid(f.grid())?;
    curl(f, scheme)
}

pub fn div_left(f: &VectorField3, alpha: f64) -> Result<ScalarField> {
    div(f, &LeftDerivative(alpha))
}

pub fn curl_left(f: &VectorField3, alpha: f64) -> Result<VectorField3> {
    curl(f, &LeftDerivative(alpha))
}

pub fn div_right(f: &VectorField3, alpha: f64) -> Result<ScalarField> {
    div(f, &RightDerivative(alpha))
}

pub fn curl_right(f: &VectorField3, alpha: f64) -> Result<VectorField3> {
    curl(f, &RightDerivative(alpha))
}

fn electric(f: &FieldTensor) -> VectorField3 {
    VectorField3 {
        components: f.electric().clone(),
    }
}

fn magnetic(f: &FieldTensor) -> VectorField3 {
    VectorField3 {
        components: f.magnetic().clone(),
    }
}

fn current(j: &CurrentDensity) -> VectorField3 {
    VectorField3 {
        components: j.current().clone(),
    }
}

fn check_sources(f: &FieldTensor, j: &CurrentDensity) -> Result<()> {
    if f.grid() == j.grid() {
        Ok(())
    } else {
        Err(Error::GridMismatch)
    }
}

fn second_pair_with<D: AxisDerivative>(
    f: &FieldTensor,
    j: &CurrentDensity,
    d: &D,
    c: f64,
) -> Result<(ScalarField, VectorField3)> {
    check_sources(f, j)?;
    let e = electric(f);
    let gauss = &div(&e, d)? - &j.rho().scaled(4.0 * PI);
    let curl_b = curl(&magnetic(f), d)?;
    let jv = current(j);
    let mut ampere = [
        ScalarField::zeros(*f.grid()),
        ScalarField::zeros(*f.grid()),
        ScalarField::zeros(*f.grid()),
    ];
    for (k, slot) in ampere.iter_mut().enumerate() {
        let dt_e = d.partial(&e.components[k], 0)?;
        *slot = &(&curl_b.components[k] - &jv.components[k].scaled(4.0 * PI / c)) - &dt_e;
    }
    Ok((gauss, VectorField3 { components: ampere }))
}

fn first_pair_with<D: AxisDerivative>(f: &FieldTensor, d: &D) -> Result<(ScalarField, VectorField3)> {
    let b = magnetic(f);
    let no_monopole = div(&b, d)?;
    let curl_e = curl(&electric(f), d)?;
    let mut faraday = curl_e.components;
    for (k, comp) in faraday.iter_mut().enumerate() {
        *comp = &*comp + &d.partial(&b.components[k], 0)?;
    }
    Ok((no_monopole, VectorField3 { components: faraday }))
}

fn check_speed(c: f64) -> Result<()> {
    if c > 0.0 && c.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(alloc::format!("wave speed must be positive, got {c}")))
    }
}

/// Gauss and Ampère residuals of the symmetric theory:
/// `div^{βα} E - 4πρ` and `curl^{βα} B - (4π/c) j - ∂^{βα}_0 E`.
pub fn second_pair_residual(
    f: &FieldTensor,
    j: &CurrentDensity,
    scheme: &FracScheme,
    c: f64,
) -> Result<(ScalarField, VectorField3)> {
    check_speed(c)?;
    scheme.check_grid(f.grid())?;
    second_pair_with(f, j, &scheme.swapped(), c)
}

/// No-monopole and Faraday residuals: `div^{αβ} B` and `curl^{αβ} E + ∂^{αβ}_0 B`.
pub fn first_pair_residual(f: &FieldTensor, scheme: &FracScheme) -> Result<(ScalarField, VectorField3)> {
    scheme.check_grid(f.grid())?;
    first_pair_with(f, scheme)
}

/// Second pair of the asymmetric theory, all derivatives left-sided of order
/// `alpha`. Axis 0 is `x0 = c t`, so the `c^-α ∂_t^α` time term is `∂_0^α`.
pub fn second_pair_residual_asymmetric(
    f: &FieldTensor,
    j: &CurrentDensity,
    alpha: f64,
    c: f64,
) -> Result<(ScalarField, VectorField3)> {
    check_speed(c)?;
    second_pair_with(f, j, &LeftDerivative(alpha), c)
}

/// First pair of the asymmetric theory, all derivatives right-sided.
pub fn first_pair_residual_asymmetric(f: &FieldTensor, alpha: f64) -> Result<(ScalarField, VectorField3)> {
    first_pair_with(f, &RightDerivative(alpha))
}

/// Max-abs norms of a [`MaxwellResidual`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ResidualNorms {
    pub gauss: f64,
    pub ampere: f64,
    pub no_monopole: f64,
    pub faraday: f64,
}

impl ResidualNorms {
    pub fn max(&self) -> f64 {
        self.gauss.max(self.ampere).max(self.no_monopole).max(self.faraday)
    }
}

/// The four residual fields of a Maxwell system and their max-abs norms.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxwellResidual {
    pub gauss: ScalarField,
    pub ampere: VectorField3,
    pub no_monopole: ScalarField,
    pub faraday: VectorField3,
    norms: ResidualNorms,
    scale: f64,
}

impl MaxwellResidual {
    /// Evaluates both pairs of the symmetric theory.
    pub fn evaluate(f: &FieldTensor, j: &CurrentDensity, scheme: &FracScheme, c: f64) -> Result<Self> {
        let (gauss, ampere) = second_pair_residual(f, j, scheme, c)?;
        let (no_monopole, faraday) = first_pair_residual(f, scheme)?;
        Ok(MaxwellResidual::assemble(
            gauss,
            ampere,
            no_monopole,
            faraday,
            f.max_abs(),
        ))
    }

    /// Evaluates both pairs of the asymmetric theory.
    pub fn evaluate_asymmetric(f: &FieldTensor, j: &CurrentDensity, alpha: f64, c: f64) -> Result<Self> {
        let (gauss, ampere) = second_pair_residual_asymmetric(f, j, alpha, c)?;
        let (no_monopole, faraday) = first_pair_residual_asymmetric(f, alpha)?;
        Ok(MaxwellResidual::assemble(
            gauss,
            ampere,
            no_monopole,
            faraday,
            f.max_abs(),
        ))
    }

    fn assemble(
        gauss: ScalarField,
        ampere: VectorField3,
        no_monopole: ScalarField,
        faraday: VectorField3,
        field_max: f64,
    ) -> Self {
        let norms = ResidualNorms {
            gauss: gauss.max_abs(),
            ampere: ampere.max_abs(),
            no_monopole: no_monopole.max_abs(),
            faraday: faraday.max_abs(),
        };
        MaxwellResidual {
            gauss,
            ampere,
            no_monopole,
            faraday,
            norms,
            scale: field_max + 1.0,
        }
    }

    pub fn norms(&self) -> ResidualNorms {
        self.norms
    }

    /// Norms divided by `max|F| + 1`.
    pub fn relative_norms(&self) -> ResidualNorms {
        let s = self.scale;
        ResidualNorms {
            gauss: self.norms.gauss / s,
            ampere: self.norms.ampere / s,
            no_monopole: self.norms.no_monopole / s,
            faraday: self.norms.faraday / s,
        }
    }
}

/// Max-abs of the cyclic sum `D_ρ F_{μν} + D_μ F_{νρ} + D_ν F_{ρμ}` for any
/// derivative family. Triples with a repeated index cancel identically through
/// antisymmetry, and permutations of a triple only flip the sign, so the four
/// increasing triples cover every case.
pub fn bianchi_residual_with<D: AxisDerivative>(f: &FieldTensor, d: &D) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for rho in 0..AXES {
        for mu in rho + 1..AXES {
            for nu in mu + 1..AXES {
                let a = d.partial(&f.component(mu, nu), rho)?;
                let b = d.partial(&f.component(nu, rho), mu)?;
                let c = d.partial(&f.component(rho, mu), nu)?;
                worst = worst.max((&(&a + &b) + &c).max_abs());
            }
        }
    }
    Ok(worst)
}

/// Cyclic identity with `∂^{αβ}`.
pub fn bianchi_residual(f: &FieldTensor, scheme: &FracScheme) -> Result<f64> {
    scheme.check_grid(f.grid())?;
    bianchi_residual_with(f, scheme)
}

/// Fractional continuity residual `div^α j + ∂_t ρ` of the symmetric causal
/// scheme, with `∂_t = c ∂_0` on the `x0 = c t` axis.
pub fn continuity_residual(rho: &ScalarField, j: &VectorField3, scheme: &FracScheme, c: f64) -> Result<ScalarField> {
    check_speed(c)?;
    if !scheme.is_symmetric_causal() {
        return Err(Error::NotSymmetricCausal);
    }
    ensure_same_grid(core::iter::once(rho).chain(j.components.iter()))?;
    scheme.check_grid(rho.grid())?;
    let dt_rho = scheme.partial(rho, 0)?.scaled(c);
    Ok(&div(j, scheme)? + &dt_rho)
}

/// Sources that make the second pair hold exactly for `f`:
/// `ρ = div^{βα} E / 4π` and `j = (c/4π)(curl^{βα} B - ∂^{βα}_0 E)`.
pub fn sources_from_field(f: &FieldTensor, scheme: &FracScheme, c: f64) -> Result<CurrentDensity> {
    check_speed(c)?;
    scheme.check_grid(f.grid())?;
    let d = scheme.swapped();
    let e = electric(f);
    let rho = div(&e, &d)?.scaled(1.0 / (4.0 * PI));
    let curl_b = curl(&magnetic(f), &d)?;
    let mut current = curl_b.components;
    for (k, comp) in current.iter_mut().enumerate() {
        let dt_e = d.partial(&e.components[k], 0)?;
        *comp = (&*comp - &dt_e).scaled(c / (4.0 * PI));
    }
    CurrentDensity::new(rho, current)
}
