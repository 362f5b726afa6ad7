//! Potentials, field-strength tensors and gauge transformations.
//!
//! Sign conventions: the metric is `η = diag(+1, -1, -1, -1)`, axis 0 is
//! `x0 = c t`, and the covariant potential is stored as `A_mu = (ψ, -A)`.
//! The tensor keeps only its six independent components, identified as
//!
//! ```text
//!          |  0    E_x   E_y   E_z |
//! F_mu,nu = | -E_x  0    -B_z   B_y |
//!          | -E_y  B_z   0    -B_x |
//!          | -E_z -B_y   B_x   0   |
//! ```

use crate::fracops::{AxisDerivative, FracScheme, RightDerivative};
use crate::grid::{ensure_same_grid, Grid, ScalarField};
use crate::{Result, AXES};

/// `+1` for the time axis, `-1` for space.
pub fn metric(axis: usize) -> f64 {
    if axis == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Covariant four-potential `A_mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourPotential {
    components: [ScalarField; AXES],
}

impl FourPotential {
    /// Covariant components `A_0 .. A_3` as stored.
    pub fn new(components: [ScalarField; AXES]) -> Result<Self> {
        ensure_same_grid(components.iter())?;
        Ok(FourPotential { components })
    }

    /// From the scalar potential `ψ` and the vector potential `A`; stores `(ψ, -A)`.
    pub fn from_scalar_vector(psi: ScalarField, vector: [ScalarField; 3]) -> Result<Self> {
        let [ax, ay, az] = vector;
        FourPotential::new([psi, -&ax, -&ay, -&az])
    }

    pub fn zeros(grid: Grid) -> Self {
        FourPotential {
            components: core::array::from_fn(|_| ScalarField::zeros(grid)),
        }
    }

    pub fn grid(&self) -> &Grid {
        self.components[0].grid()
    }

    pub fn component(&self, mu: usize) -> &ScalarField {
        &self.components[mu]
    }

    pub fn components(&self) -> &[ScalarField; AXES] {
        &self.components
    }

    /// Contravariant component `A^mu = η^{mu mu} A_mu`.
    pub fn raised(&self, mu: usize) -> ScalarField {
        self.components[mu].scaled(metric(mu))
    }

    pub fn scalar_potential(&self) -> &ScalarField {
        &self.components[0]
    }

    /// The vector potential `A`, i.e. `-A_i`.
    pub fn vector_potential(&self) -> [ScalarField; 3] {
        core::array::from_fn(|i| -&self.components[i + 1])
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    pub fn map_components(&self, f: impl Fn(usize, &ScalarField) -> ScalarField) -> FourPotential {
        FourPotential {
            components: core::array::from_fn(|mu| f(mu, &self.components[mu])),
        }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: f64, other: &FourPotential) -> Result<FourPotential> {
        ensure_same_grid([self.component(0), other.component(0)].into_iter())?;
        Ok(self.map_components(|mu, c| c.zip_with(other.component(mu), |a, b| a + s * b)))
    }
}

/// Electric charge density and current, `j^mu = (c ρ, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurrentDensity {
    rho: ScalarField,
    current: [ScalarField; 3],
}

impl CurrentDensity {
    pub fn new(rho: ScalarField, current: [ScalarField; 3]) -> Result<Self> {
        ensure_same_grid(core::iter::once(&rho).chain(current.iter()))?;
        Ok(CurrentDensity { rho, current })
    }

    pub fn zeros(grid: Grid) -> Self {
        CurrentDensity {
            rho: ScalarField::zeros(grid),
            current: core::array::from_fn(|_| ScalarField::zeros(grid)),
        }
    }

    pub fn grid(&self) -> &Grid {
        self.rho.grid()
    }

    pub fn rho(&self) -> &ScalarField {
        &self.rho
    }

    pub fn current(&self) -> &[ScalarField; 3] {
        &self.current
    }

    /// Contravariant component: `c ρ` for `mu = 0`, `j_i` otherwise.
    pub fn upper(&self, mu: usize, c: f64) -> ScalarField {
        if mu == 0 {
            self.rho.scaled(c)
        } else {
            self.current[mu - 1].clone()
        }
    }
}

/// Antisymmetric field-strength tensor stored as `(E, B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldTensor {
    e: [ScalarField; 3],
    b: [ScalarField; 3],
}

/// Which stored component backs `F_{mu nu}` and with what sign.
fn slot(mu: usize, nu: usize) -> Option<(bool, usize, f64)> {
    if mu == nu {
        return None;
    }
    match (mu, nu) {
        (0, i) => Some((true, i - 1, 1.0)),
        (i, 0) => Some((true, i - 1, -1.0)),
        (i, j) => {
            // F_ij = -ε_ijk B_k
            let k = 6 - i - j;
            let even = matches!((i, j), (1, 2) | (2, 3) | (3, 1));
            Some((false, k - 1, if even { -1.0 } else { 1.0 }))
        }
    }
}

impl FieldTensor {
    /// Packs electric and magnetic components; inverse of [`extract_eb`].
    pub fn from_eb(e: [ScalarField; 3], b: [ScalarField; 3]) -> Result<Self> {
        ensure_same_grid(e.iter().chain(b.iter()))?;
        Ok(FieldTensor { e, b })
    }

    pub fn zeros(grid: Grid) -> Self {
        FieldTensor {
            e: core::array::from_fn(|_| ScalarField::zeros(grid)),
            b: core::array::from_fn(|_| ScalarField::zeros(grid)),
        }
    }

    /// Builds the tensor from a closure giving `F_{mu nu}` for `mu < nu`.
    pub fn from_upper_triangle(mut f: impl FnMut(usize, usize) -> Result<ScalarField>) -> Result<Self> {
        let e = [f(0, 1)?, f(0, 2)?, f(0, 3)?];
        let f12 = f(1, 2)?;
        let f13 = f(1, 3)?;
        let f23 = f(2, 3)?;
        FieldTensor::from_eb(e, [-&f23, f13, -&f12])
    }

    pub fn grid(&self) -> &Grid {
        self.e[0].grid()
    }

    pub fn electric(&self) -> &[ScalarField; 3] {
        &self.e
    }

    pub fn magnetic(&self) -> &[ScalarField; 3] {
        &self.b
    }

    /// Covariant component `F_{mu nu}`.
    pub fn component(&self, mu: usize, nu: usize) -> ScalarField {
        match slot(mu, nu) {
            None => ScalarField::zeros(*self.grid()),
            Some((electric, k, sign)) => {
                let src = if electric { &self.e[k] } else { &self.b[k] };
                src.scaled(sign)
            }
        }
    }

    /// Contravariant component `F^{mu nu} = η^{mu mu} η^{nu nu} F_{mu nu}`.
    pub fn raised(&self, mu: usize, nu: usize) -> ScalarField {
        self.component(mu, nu).scaled(metric(mu) * metric(nu))
    }

    /// Pointwise `F_{mu nu} F^{mu nu}` summed over both indices.
    pub fn contraction(&self) -> ScalarField {
        let mut acc = ScalarField::zeros(*self.grid());
        for mu in 0..AXES {
            for nu in 0..AXES {
                let lower = self.component(mu, nu);
                let upper = self.raised(mu, nu);
                acc = acc.zip_with(&lower.zip_with(&upper, |a, b| a * b), |s, v| s + v);
            }
        }
        acc
    }

    /// `2(|B|^2 - |E|^2)`, equal to [`FieldTensor::contraction`].
    pub fn eb_invariant(&self) -> ScalarField {
        let mut acc = ScalarField::zeros(*self.grid());
        for k in 0..3 {
            acc = acc.zip_with(&self.b[k], |s, b| s + 2.0 * b * b);
            acc = acc.zip_with(&self.e[k], |s, e| s - 2.0 * e * e);
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.e.iter().chain(self.b.iter()).fold(0.0, |m, c| m.max(c.max_abs()))
    }

    /// Component-wise difference.
    pub fn sub(&self, other: &FieldTensor) -> Result<FieldTensor> {
        ensure_same_grid([&self.e[0], &other.e[0]].into_iter())?;
        Ok(FieldTensor {
            e: core::array::from_fn(|k| &self.e[k] - &other.e[k]),
            b: core::array::from_fn(|k| &self.b[k] - &other.b[k]),
        })
    }

    /// Max-abs of `F_{mu nu} + F_{nu mu}` over all index pairs.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..AXES {
            for nu in 0..AXES {
                let sum = &self.component(mu, nu) + &self.component(nu, mu);
                worst = worst.max(sum.max_abs());
            }
        }
        worst
    }
}

/// Unpacks the six stored components as `(E, B)`.
pub fn extract_eb(f: &FieldTensor) -> ([ScalarField; 3], [ScalarField; 3]) {
    (f.e.clone(), f.b.clone())
}

/// `F_{mu nu} = D_mu A_nu - D_nu A_mu` for any derivative family.
pub fn field_strength<D: AxisDerivative>(potential: &FourPotential, d: &D) -> Result<FieldTensor> {
    FieldTensor::from_upper_triangle(|mu, nu| {
        let lhs = d.partial(potential.component(nu), mu)?;
        let rhs = d.partial(potential.component(mu), nu)?;
        Ok(&lhs - &rhs)
    })
}

/// Left-right tensor `F^{αβ}_{mu nu} = ∂^{αβ}_mu A_nu - ∂^{αβ}_nu A_mu`.
pub fn field_strength_lr(potential: &FourPotential, scheme: &FracScheme) -> Result<FieldTensor> {
    scheme.check_grid(potential.grid())?;
    field_strength(potential, scheme)
}

/// Right-sided tensor of the asymmetric theory, one order `alpha` on every
/// axis with terminals at the upper grid ends.
pub fn field_strength_right(potential: &FourPotential, alpha: f64) -> Result<FieldTensor> {
    field_strength(potential, &RightDerivative(alpha))
}

/// `A_mu -> A_mu + D_mu φ` for any derivative family.
pub fn gauge_transform_with<D: AxisDerivative>(
    potential: &FourPotential,
    phi: &ScalarField,
    d: &D,
) -> Result<FourPotential> {
    ensure_same_grid([potential.component(0), phi].into_iter())?;
    let mut shifted = potential.components.clone();
    for (mu, component) in shifted.iter_mut().enumerate() {
        *component = &*component + &d.partial(phi, mu)?;
    }
    Ok(FourPotential { components: shifted })
}

/// `A_mu -> A_mu + ∂^{αβ}_mu φ`.
pub fn gauge_transform(potential: &FourPotential, phi: &ScalarField, scheme: &FracScheme) -> Result<FourPotential> {
    scheme.check_grid(potential.grid())?;
    gauge_transform_with(potential, phi, scheme)
}

/// `A_mu -> A_mu + D^α_{b,mu} φ`, the gauge freedom of the right-sided tensor.
pub fn gauge_transform_right(potential: &FourPotential, phi: &ScalarField, alpha: f64) -> Result<FourPotential> {
    gauge_transform_with(potential, phi, &RightDerivative(alpha))
}

/// Fractional Lorenz condition `∂^{αβ}_mu A^mu = ∂^{αβ}_0 ψ + ∂^{αβ}_i A_i`,
/// with `A_i` the vector potential (the raised spatial components).
pub fn lorenz_residual(potential: &FourPotential, scheme: &FracScheme) -> Result<ScalarField> {
    scheme.check_grid(potential.grid())?;
    let mut acc = ScalarField::zeros(*potential.grid());
    for mu in 0..AXES {
        acc = &acc + &scheme.partial(&potential.raised(mu), mu)?;
    }
    Ok(acc)
}
