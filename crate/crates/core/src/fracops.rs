//! Left and right Riemann-Liouville derivatives on uniform samples.
//!
//! Derivatives are discretised with the unshifted Grünwald-Letnikov sum
//!
//! ```text
//! (D_a^α f)(x_i) ≈ h^-α Σ_{j=0..i}       w_j f(x_i - j h)
//! (D_b^β f)(x_i) ≈ h^-β Σ_{j=0..N-1-i}   w_j f(x_i + j h)
//! ```
//!
//! with `w_j = (-1)^j binom(order, j)`. Samples outside `[a, b]` are treated as
//! zero. At order 1 the left sum is the backward difference and the right sum
//! is minus the forward difference, so the left-right operator
//! `½(D_a^α - D_b^β)` collapses to the central difference.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::grid::{Grid, ScalarField};
use crate::special::gamma;
use crate::{Error, Result, AXES};

pub(crate) fn check_order(order: f64) -> Result<f64> {
    if order > 0.0 && order <= 1.0 {
        Ok(order)
    } else {
        Err(Error::InvalidOrder(order))
    }
}

/// Grünwald-Letnikov weights `w_j = (-1)^j binom(alpha, j)` for `j = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlWeights {
    alpha: f64,
    w: Vec<f64>,
}

impl GlWeights {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

/// Computes `w[0..=n]` with the recurrence `w_j = w_{j-1} (j - 1 - alpha) / j`.
pub fn gl_weights(alpha: f64, n: usize) -> Result<GlWeights> {
    check_order(alpha)?;
    let mut w = Vec::with_capacity(n + 1);
    w.push(1.0);
    for j in 1..=n {
        let prev = w[j - 1];
        w.push(prev * ((j - 1) as f64 - alpha) / j as f64);
    }
    Ok(GlWeights { alpha, w })
}

/// Samples of a function of one variable on a uniform grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledLine {
    values: Vec<f64>,
    h: f64,
    origin: f64,
}

impl SampledLine {
    pub fn new(values: Vec<f64>, h: f64, origin: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewSamples {
                got: values.len(),
                min: 2,
            });
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Domain(alloc::format!("spacing must be positive, got {h}")));
        }
        Ok(SampledLine { values, h, origin })
    }

    /// `n` samples of `f` spread over `[a, b]`, both ends included.
    pub fn from_fn(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewSamples { got: n, min: 2 });
        }
        let h = (b - a) / (n - 1) as f64;
        let values = (0..n).map(|i| f(a + i as f64 * h)).collect();
        SampledLine::new(values, h, a)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.h
    }

    /// Coordinate of the last sample.
    pub fn end(&self) -> f64 {
        self.x(self.values.len() - 1)
    }

    /// Same grid, new values.
    pub fn with_values(&self, values: Vec<f64>) -> SampledLine {
        assert_eq!(values.len(), self.values.len());
        SampledLine {
            values,
            h: self.h,
            origin: self.origin,
        }
    }

    /// Samples in reverse order over the same grid, i.e. `x -> a + b - x`.
    pub fn reflected(&self) -> SampledLine {
        let mut values = self.values.clone();
        values.reverse();
        self.with_values(values)
    }
}

fn left_sum(src: &[f64], w: &[f64], scale: f64, dst: &mut [f64]) {
    for i in 0..src.len() {
        let acc: f64 = w[..=i].iter().zip(src[..=i].iter().rev()).map(|(w, f)| w * f).sum();
        dst[i] = scale * acc;
    }
}

fn right_sum(src: &[f64], w: &[f64], scale: f64, dst: &mut [f64]) {
    let n = src.len();
    for i in 0..n {
        let acc: f64 = w[..n - i].iter().zip(&src[i..]).map(|(w, f)| w * f).sum();
        dst[i] = scale * acc;
    }
}

/// A one-dimensional derivative rule applied along a single axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AxisOp {
    /// Left Riemann-Liouville derivative, lower terminal at the first sample.
    Left(f64),
    /// Right Riemann-Liouville derivative, upper terminal at the last sample.
    Right(f64),
    /// `½(D_a^alpha - D_b^beta)`.
    LeftRight { alpha: f64, beta: f64 },
}

impl AxisOp {
    fn validate(self) -> Result<Self> {
        match self {
            AxisOp::Left(a) | AxisOp::Right(a) => {
                check_order(a)?;
            }
            AxisOp::LeftRight { alpha, beta } => {
                check_order(alpha)?;
                check_order(beta)?;
            }
        }
        Ok(self)
    }

    /// Applies the rule to `src` with spacing `h`. `src.len()` must be at least 2.
    fn apply(self, src: &[f64], h: f64, dst: &mut [f64]) {
        let n = src.len();
        // orders were validated on entry, the weights cannot fail
        let weights = |order: f64| gl_weights(order, n - 1).map(|w| w.w).unwrap_or_default();
        match self {
            AxisOp::Left(a) => left_sum(src, &weights(a), libm::pow(h, -a), dst),
            AxisOp::Right(b) => right_sum(src, &weights(b), libm::pow(h, -b), dst),
            AxisOp::LeftRight { alpha, beta } => {
                let mut right = vec![0.0; n];
                left_sum(src, &weights(alpha), libm::pow(h, -alpha), dst);
                right_sum(src, &weights(beta), libm::pow(h, -beta), &mut right);
                for (d, r) in dst.iter_mut().zip(&right) {
                    *d = 0.5 * (*d - r);
                }
            }
        }
    }

    pub fn apply_line(self, f: &SampledLine) -> Result<SampledLine> {
        self.validate()?;
        let mut out = vec![0.0; f.len()];
        self.apply(&f.values, f.h, &mut out);
        Ok(f.with_values(out))
    }
}

/// Left Riemann-Liouville derivative of order `alpha`, lower terminal at the
/// first sample.
pub fn left_rl_deriv(f: &SampledLine, alpha: f64) -> Result<SampledLine> {
    AxisOp::Left(alpha).apply_line(f)
}

/// Right Riemann-Liouville derivative of order `beta`, upper terminal at the
/// last sample. Carries the `(-1)^n` sign, so at order 1 it is `-d/dx`.
pub fn right_rl_deriv(f: &SampledLine, beta: f64) -> Result<SampledLine> {
    AxisOp::Right(beta).apply_line(f)
}

/// Left-right operator `½(D_a^alpha f - D_b^beta f)`; the Riesz-type derivative
/// when `alpha == beta`.
pub fn lr_op(f: &SampledLine, alpha: f64, beta: f64) -> Result<SampledLine> {
    AxisOp::LeftRight { alpha, beta }.apply_line(f)
}

/// Per-axis fractional orders and terminals of the whole theory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FracScheme {
    alpha: [f64; AXES],
    beta: [f64; AXES],
    lower: [f64; AXES],
    upper: [f64; AXES],
}

impl FracScheme {
    pub fn new(alpha: [f64; AXES], beta: [f64; AXES], lower: [f64; AXES], upper: [f64; AXES]) -> Result<Self> {
        for axis in 0..AXES {
            check_order(alpha[axis])?;
            check_order(beta[axis])?;
            if !(lower[axis] < upper[axis]) {
                return Err(Error::Domain(alloc::format!(
                    "axis {axis}: terminal a = {} is not below b = {}",
                    lower[axis],
                    upper[axis]
                )));
            }
        }
        Ok(FracScheme {
            alpha,
            beta,
            lower,
            upper,
        })
    }

    /// Scheme whose terminals are the endpoints of `grid`.
    pub fn on_grid(grid: &Grid, alpha: [f64; AXES], beta: [f64; AXES]) -> Result<Self> {
        FracScheme::new(alpha, beta, grid.lower(), grid.upper())
    }

    /// The same `alpha`, `beta` on every axis.
    pub fn uniform_on(grid: &Grid, alpha: f64, beta: f64) -> Result<Self> {
        FracScheme::on_grid(grid, [alpha; AXES], [beta; AXES])
    }

    pub fn alpha(&self) -> [f64; AXES] {
        self.alpha
    }

    pub fn beta(&self) -> [f64; AXES] {
        self.beta
    }

    pub fn lower(&self) -> [f64; AXES] {
        self.lower
    }

    pub fn upper(&self) -> [f64; AXES] {
        self.upper
    }

    /// `alpha_mu = beta_mu` and `b_mu = -a_mu` on `axis`.
    pub fn is_symmetric_axis(&self, axis: usize) -> bool {
        self.alpha[axis] == self.beta[axis] && self.upper[axis] == -self.lower[axis]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..AXES).all(|a| self.is_symmetric_axis(a))
    }

    /// Symmetric in space with first-order time derivatives.
    pub fn is_symmetric_causal(&self) -> bool {
        self.alpha[0] == 1.0 && self.beta[0] == 1.0 && (1..AXES).all(|a| self.is_symmetric_axis(a))
    }

    /// The scheme with the order slots exchanged, i.e. `∂^{βα}` instead of `∂^{αβ}`.
    pub fn swapped(&self) -> FracScheme {
        FracScheme {
            alpha: self.beta,
            beta: self.alpha,
            ..*self
        }
    }

    pub fn axis_op(&self, axis: usize) -> AxisOp {
        AxisOp::LeftRight {
            alpha: self.alpha[axis],
            beta: self.beta[axis],
        }
    }

    pub fn check_grid(&self, grid: &Grid) -> Result<()> {
        for axis in 0..AXES {
            let scale = self.upper[axis].abs().max(self.lower[axis].abs()).max(1.0);
            let tol = 1e-12 * scale;
            if (grid.lower()[axis] - self.lower[axis]).abs() > tol
                || (grid.upper()[axis] - self.upper[axis]).abs() > tol
            {
                return Err(Error::SchemeMismatch { axis });
            }
        }
        Ok(())
    }
}

/// Applies `op` along `axis` to every 1-D line of `field`.
pub fn partial(field: &ScalarField, axis: usize, op: AxisOp) -> Result<ScalarField> {
    if axis >= AXES {
        return Err(Error::AxisOutOfRange(axis));
    }
    let op = op.validate()?;
    let grid = *field.grid();
    let n = grid.count(axis);
    let stride = grid.stride(axis);
    let h = grid.spacing(axis);
    let src = field.data();
    let mut out = ScalarField::zeros(grid);
    let mut line = vec![0.0; n];
    let mut result = vec![0.0; n];
    for start in grid.line_starts(axis) {
        for (i, v) in line.iter_mut().enumerate() {
            *v = src[start + i * stride];
        }
        op.apply(&line, h, &mut result);
        let dst = out.data_mut();
        for (i, v) in result.iter().enumerate() {
            dst[start + i * stride] = *v;
        }
    }
    Ok(out)
}

/// Partial left-right derivative `∂^{αβ}_axis` with the scheme's orders.
pub fn partial_lr(field: &ScalarField, axis: usize, scheme: &FracScheme) -> Result<ScalarField> {
    if axis >= AXES {
        return Err(Error::AxisOutOfRange(axis));
    }
    scheme.check_grid(field.grid())?;
    partial(field, axis, scheme.axis_op(axis))
}

/// A family of partial derivatives, one rule per axis.
pub trait AxisDerivative {
    fn partial(&self, field: &ScalarField, axis: usize) -> Result<ScalarField>;
}

/// `∂^{αβ}_mu` with the scheme's per-axis orders and terminals.
impl AxisDerivative for FracScheme {
    fn partial(&self, field: &ScalarField, axis: usize) -> Result<ScalarField> {
        partial_lr(field, axis, self)
    }
}

/// Left derivative of one order on every axis, terminals at the grid ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LeftDerivative(pub f64);

/// Right derivative of one order on every axis, terminals at the grid ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RightDerivative(pub f64);

impl AxisDerivative for LeftDerivative {
    fn partial(&self, field: &ScalarField, axis: usize) -> Result<ScalarField> {
        partial(field, axis, AxisOp::Left(self.0))
    }
}

impl AxisDerivative for RightDerivative {
    fn partial(&self, field: &ScalarField, axis: usize) -> Result<ScalarField> {
        partial(field, axis, AxisOp::Right(self.0))
    }
}

/// Closed form `Γ(p+1)/Γ(p+1-alpha) (x-a)^(p-alpha)` of the left derivative of
/// `(x-a)^p`.
pub fn rl_power_analytic(p: f64, alpha: f64, x: f64, a: f64) -> Result<f64> {
    check_order(alpha)?;
    if !(p > -1.0) {
        return Err(Error::Domain(alloc::format!("power {p} must exceed -1")));
    }
    if !(x > a) {
        return Err(Error::Domain(alloc::format!(
            "point {x} must lie above the terminal {a}"
        )));
    }
    let exponent = p - alpha;
    // 1/Γ vanishes at non-positive integers: the derivative of a constant at order 1
    let denom_arg = p + 1.0 - alpha;
    if denom_arg <= 0.0 && denom_arg == libm::floor(denom_arg) {
        return Ok(0.0);
    }
    Ok(gamma(p + 1.0) / gamma(denom_arg) * libm::pow(x - a, exponent))
}

/// Eigenvalue `i sgn(k) |k|^alpha sin(alpha π/2)` of the whole-line symmetric
/// operator on `e^{ikx}`.
pub fn riesz_symbol(k: f64, alpha: f64) -> Result<Complex64> {
    check_order(alpha)?;
    if k == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let magnitude = libm::pow(k.abs(), alpha) * libm::sin(alpha * FRAC_PI_2);
    Ok(Complex64::new(0.0, k.signum() * magnitude))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    #[test]
    fn weights_examples() {
        assert_eq!(gl_weights(1.0, 3).unwrap().as_slice(), &[1.0, -1.0, 0.0, 0.0]);
        assert_eq!(gl_weights(0.5, 3).unwrap().as_slice(), &[1.0, -0.5, -0.125, -0.0625]);
        assert_eq!(gl_weights(0.25, 1).unwrap().as_slice(), &[1.0, -0.25]);
        assert_eq!(gl_weights(0.7, 0).unwrap().as_slice(), &[1.0]);
    }

    #[test]
    fn weights_reject_bad_orders() {
        for bad in [0.0, -0.3, 1.5, f64::NAN] {
            assert!(matches!(gl_weights(bad, 4), Err(Error::InvalidOrder(_))));
        }
    }

    #[test]
    fn long_weight_tables_stay_finite() {
        let w = gl_weights(0.3, 100_000).unwrap();
        assert!(w.as_slice().iter().all(|v| v.is_finite()));
        assert!(w.as_slice()[100_000] < 0.0);
    }

    proptest! {
        #[test]
        fn weights_sign_and_partial_sums(alpha in 0.01f64..0.99, n in 1usize..400) {
            let w = gl_weights(alpha, n).unwrap();
            let w = w.as_slice();
            prop_assert_eq!(w[0], 1.0);
            let mut partial = 1.0;
            for j in 1..=n {
                prop_assert!(w[j] < 0.0);
                let expected = w[j - 1] * ((j - 1) as f64 - alpha) / j as f64;
                prop_assert!((w[j] - expected).abs() <= 1e-16 * expected.abs());
                let next = partial + w[j];
                prop_assert!(next > 0.0 && next < partial);
                partial = next;
            }
        }

        #[test]
        fn operators_are_linear(
            a in -3.0f64..3.0,
            b in -3.0f64..3.0,
            alpha in 0.05f64..1.0,
            beta in 0.05f64..1.0,
            f in prop::collection::vec(-1.0f64..1.0, 12),
            g in prop::collection::vec(-1.0f64..1.0, 12),
        ) {
            let fl = SampledLine::new(f.clone(), 0.1, 0.0).unwrap();
            let gl = SampledLine::new(g.clone(), 0.1, 0.0).unwrap();
            let mix = fl.with_values(f.iter().zip(&g).map(|(x, y)| a * x + b * y).collect());
            for op in [AxisOp::Left(alpha), AxisOp::Right(beta), AxisOp::LeftRight { alpha, beta }] {
                let lhs = op.apply_line(&mix).unwrap();
                let of = op.apply_line(&fl).unwrap();
                let og = op.apply_line(&gl).unwrap();
                let rhs: Vec<f64> = of.values().iter().zip(og.values()).map(|(x, y)| a * x + b * y).collect();
                prop_assert!(max_diff(lhs.values(), &rhs) < 1e-12);
            }
        }

        #[test]
        fn right_is_mirrored_left(order in 0.05f64..1.0, f in prop::collection::vec(-1.0f64..1.0, 2..40)) {
            let line = SampledLine::new(f, 0.05, -1.0).unwrap();
            let right = right_rl_deriv(&line, order).unwrap();
            let mirrored = left_rl_deriv(&line.reflected(), order).unwrap().reflected();
            prop_assert_eq!(right.values(), mirrored.values());
        }
    }

    #[test]
    fn order_one_is_backward_difference() {
        let f = SampledLine::from_fn(0.0, 1.0, 11, |x| x * x).unwrap();
        let d = left_rl_deriv(&f, 1.0).unwrap();
        for i in 1..f.len() {
            let x = f.x(i);
            assert!((d.values()[i] - (2.0 * x - f.h())).abs() < 1e-12, "i = {i}");
        }
    }

    #[test]
    fn order_one_right_is_negated_forward_difference() {
        let f = SampledLine::from_fn(0.0, 1.0, 11, |x| x).unwrap();
        let d = right_rl_deriv(&f, 1.0).unwrap();
        for i in 0..f.len() - 1 {
            assert!((d.values()[i] + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn order_one_left_right_is_central_difference() {
        let f = SampledLine::from_fn(0.0, 1.0, 21, |x| x * x).unwrap();
        let d = lr_op(&f, 1.0, 1.0).unwrap();
        for i in 1..f.len() - 1 {
            let central = (f.values()[i + 1] - f.values()[i - 1]) / (2.0 * f.h());
            assert!((d.values()[i] - central).abs() <= 1e-14 * central.abs().max(1.0));
            assert!((d.values()[i] - 2.0 * f.x(i)).abs() < 1e-12);
        }
    }

    #[test]
    fn even_input_gives_odd_output_under_symmetric_orders() {
        let f = SampledLine::from_fn(-2.0, 2.0, 41, |x| libm::exp(-x * x) + x * x).unwrap();
        for order in [0.3, 0.5, 0.8, 1.0] {
            let d = lr_op(&f, order, order).unwrap();
            let v = d.values();
            let n = v.len();
            for i in 0..n {
                assert!((v[i] + v[n - 1 - i]).abs() < 1e-12, "order {order}, i {i}");
            }
        }
    }

    #[test]
    fn line_errors() {
        assert!(matches!(
            SampledLine::new(alloc::vec![1.0], 0.1, 0.0),
            Err(Error::TooFewSamples { got: 1, min: 2 })
        ));
        assert!(SampledLine::new(alloc::vec![1.0, 2.0], 0.0, 0.0).is_err());
        let f = SampledLine::from_fn(0.0, 1.0, 5, |x| x).unwrap();
        assert!(matches!(left_rl_deriv(&f, 1.2), Err(Error::InvalidOrder(_))));
        assert!(matches!(right_rl_deriv(&f, 0.0), Err(Error::InvalidOrder(_))));
        assert!(matches!(lr_op(&f, 0.5, -1.0), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn power_oracle_examples() {
        assert!((rl_power_analytic(1.0, 1.0, 2.0, 0.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((rl_power_analytic(0.0, 0.5, 1.0, 0.0).unwrap() - 0.564_189_583_547_756).abs() < 1e-12);
        assert!((rl_power_analytic(1.0, 0.5, 1.0, 0.0).unwrap() - core::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-12);
        assert_eq!(rl_power_analytic(0.0, 1.0, 1.0, 0.0).unwrap(), 0.0);
        assert!(rl_power_analytic(-1.0, 0.5, 1.0, 0.0).is_err());
        assert!(rl_power_analytic(1.0, 0.5, 0.0, 0.0).is_err());
    }

    #[test]
    fn riesz_symbol_examples() {
        assert!((riesz_symbol(1.0, 1.0).unwrap() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert_eq!(riesz_symbol(0.0, 0.4).unwrap(), Complex64::new(0.0, 0.0));
        assert!((riesz_symbol(2.0, 0.5).unwrap() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((riesz_symbol(-2.0, 0.5).unwrap() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert!(riesz_symbol(1.0, 2.0).is_err());
    }

    fn test_grid() -> Grid {
        Grid::new([3, 5, 6, 4], [-1.0, -1.0, 0.0, -2.0], [1.0, 1.0, 2.0, 2.0]).unwrap()
    }

    #[test]
    fn partial_of_zero_is_zero() {
        let g = test_grid();
        let s = FracScheme::uniform_on(&g, 0.4, 0.7).unwrap();
        for axis in 0..AXES {
            assert_eq!(partial_lr(&ScalarField::zeros(g), axis, &s).unwrap().max_abs(), 0.0);
        }
    }

    #[test]
    fn partial_on_separable_field_factors() {
        let g = test_grid();
        let s = FracScheme::uniform_on(&g, 0.6, 0.3).unwrap();
        let gx = |x: f64| libm::sin(2.0 * x) + 0.5;
        let py = |y: f64| 1.0 + y * y;
        let field = ScalarField::from_fn(g, |p| gx(p[1]) * py(p[2]));
        let d = partial_lr(&field, 1, &s).unwrap();
        let line = SampledLine::from_fn(-1.0, 1.0, 5, gx).unwrap();
        let dl = lr_op(&line, 0.6, 0.3).unwrap();
        for k in 0..g.len() {
            let idx = g.multi_index(k);
            let expected = py(g.coord(2, idx[2])) * dl.values()[idx[1]];
            assert!((d.data()[k] - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn partials_on_distinct_axes_commute() {
        let g = test_grid();
        let s = FracScheme::on_grid(&g, [1.0, 0.3, 0.5, 0.9], [0.6, 0.3, 0.8, 1.0]).unwrap();
        let f = ScalarField::from_fn(g, |p| libm::cos(p[0] + 2.0 * p[1]) * libm::exp(p[2] - p[3]));
        for a in 0..AXES {
            for b in 0..AXES {
                if a == b {
                    continue;
                }
                let ab = partial_lr(&partial_lr(&f, a, &s).unwrap(), b, &s).unwrap();
                let ba = partial_lr(&partial_lr(&f, b, &s).unwrap(), a, &s).unwrap();
                let scale = ab.max_abs().max(1.0);
                assert!((&ab - &ba).max_abs() <= 1e-13 * scale, "axes {a},{b}");
            }
        }
    }

    #[test]
    fn partial_errors() {
        let g = test_grid();
        let s = FracScheme::uniform_on(&g, 0.5, 0.5).unwrap();
        let f = ScalarField::zeros(g);
        assert_eq!(partial_lr(&f, 4, &s), Err(Error::AxisOutOfRange(4)));
        let other = FracScheme::uniform_on(&Grid::cube(3, 0.0, 1.0).unwrap(), 0.5, 0.5).unwrap();
        assert_eq!(partial_lr(&f, 0, &other), Err(Error::SchemeMismatch { axis: 0 }));
    }

    #[test]
    fn scheme_predicates() {
        let g = Grid::cube(4, -1.0, 1.0).unwrap();
        assert!(FracScheme::uniform_on(&g, 0.5, 0.5).unwrap().is_symmetric());
        assert!(!FracScheme::uniform_on(&g, 0.5, 0.6).unwrap().is_symmetric());
        let shifted = Grid::cube(4, 0.0, 1.0).unwrap();
        assert!(!FracScheme::uniform_on(&shifted, 0.5, 0.5).unwrap().is_symmetric());
        let causal = FracScheme::on_grid(&g, [1.0, 0.5, 0.5, 0.5], [1.0, 0.5, 0.5, 0.5]).unwrap();
        assert!(causal.is_symmetric_causal());
        assert!(!FracScheme::uniform_on(&g, 0.5, 0.5).unwrap().is_symmetric_causal());
        let s = FracScheme::uniform_on(&g, 0.2, 0.7).unwrap().swapped();
        assert_eq!(s.alpha(), [0.7; 4]);
        assert!(FracScheme::uniform_on(&g, 1.1, 0.5).is_err());
    }
}
