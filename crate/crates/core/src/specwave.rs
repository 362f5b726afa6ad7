//! Spectral solver for the 1+1-D fractional wave equation
//! `(1/c²) ∂_t² u - (∂_x^α)² u = 0` on a periodic domain of length `L`.
//!
//! With `u = Σ f_n(t) e^{i k_n x}` and `k_n = 2π n / L`, the symmetric
//! operator acts on each mode through its symbol, so every mode obeys
//! `f'' = -ω² f` with `ω = |k|^α c sin(απ/2)` and is evolved in closed form.
//! The `k = 0` mode has `ω = 0` and drifts linearly.
//!
//! `n_modes` counts the retained non-negative mode indices, `0..n_modes`; the
//! negative ones mirror them. The sampled initial data must therefore have at
//! least `2 n_modes` points so that no retained mode aliases another.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::fracops::{check_order, riesz_symbol, SampledLine};
use crate::{Error, Result};

fn check_speed(c: f64) -> Result<()> {
    if c > 0.0 && c.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(alloc::format!("wave speed must be positive, got {c}")))
    }
}

/// Plane-wave frequency `ω = |k|^α c sin(απ/2)`.
pub fn dispersion(k: f64, alpha: f64, c: f64) -> Result<f64> {
    check_order(alpha)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    if alpha == 1.0 {
        return Ok(k.abs() * c);
    }
    Ok(libm::pow(k.abs(), alpha) * c * libm::sin(alpha * FRAC_PI_2))
}

/// Closed-form evolution of one mode from `(f0, g0)` at time 0 to time `t`.
/// Returns the amplitude and its time derivative.
pub fn mode_evolve(f0: Complex64, g0: Complex64, k: f64, alpha: f64, c: f64, t: f64) -> Result<(Complex64, Complex64)> {
    check_speed(c)?;
    let omega = dispersion(k, alpha, c)?;
    Ok(evolve_with(f0, g0, omega, t))
}

fn evolve_with(f0: Complex64, g0: Complex64, omega: f64, t: f64) -> (Complex64, Complex64) {
    if omega == 0.0 {
        return (f0 + g0 * t, g0);
    }
    let (s, co) = (libm::sin(omega * t), libm::cos(omega * t));
    (f0 * co + g0 * (s / omega), g0 * co - f0 * (omega * s))
}

/// Classical RK4 on `f' = g, g' = -ω² f`, taking `round(t/dt)` equal steps.
pub fn mode_ode_rk4(
    f0: Complex64,
    g0: Complex64,
    k: f64,
    alpha: f64,
    c: f64,
    t: f64,
    dt: f64,
) -> Result<(Complex64, Complex64)> {
    check_speed(c)?;
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::Domain(alloc::format!("time step must be positive, got {dt}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(alloc::format!("end time must be non-negative, got {t}")));
    }
    let w2 = {
        let w = dispersion(k, alpha, c)?;
        w * w
    };
    let steps = libm::round(t / dt).max(1.0) as usize;
    let h = t / steps as f64;
    let rhs = |f: Complex64, g: Complex64| (g, -f * w2);
    let (mut f, mut g) = (f0, g0);
    for _ in 0..steps {
        let (k1f, k1g) = rhs(f, g);
        let (k2f, k2g) = rhs(f + k1f * (h / 2.0), g + k1g * (h / 2.0));
        let (k3f, k3g) = rhs(f + k2f * (h / 2.0), g + k2g * (h / 2.0));
        let (k4f, k4g) = rhs(f + k3f * h, g + k3g * h);
        f += (k1f + k2f * 2.0 + k3f * 2.0 + k4f) * (h / 6.0);
        g += (k1g + k2g * 2.0 + k3g * 2.0 + k4g) * (h / 6.0);
    }
    Ok((f, g))
}

/// First integral `ω²|f|² + |g|²` of the mode equation.
pub fn mode_energy(f: Complex64, g: Complex64, omega: f64) -> f64 {
    omega * omega * f.norm_sqr() + g.norm_sqr()
}

/// Solver parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveConfig {
    pub alpha: f64,
    pub c: f64,
    /// Spatial period `L`.
    pub length: f64,
    pub n_modes: usize,
    /// Output times, each `>= 0`.
    pub times: Vec<f64>,
}

impl WaveConfig {
    pub fn validate(&self) -> Result<()> {
        check_order(self.alpha)?;
        check_speed(self.c)?;
        if !(self.length > 0.0 && self.length.is_finite()) {
            return Err(Error::Domain(alloc::format!(
                "period must be positive, got {}",
                self.length
            )));
        }
        if self.n_modes < 1 {
            return Err(Error::Domain("n_modes must be at least 1".into()));
        }
        if self.times.iter().any(|&t| !(t >= 0.0 && t.is_finite())) {
            return Err(Error::Domain("output times must be finite and non-negative".into()));
        }
        Ok(())
    }

    /// `0, dt, 2 dt, ...` up to and including `t_end` (within rounding).
    pub fn uniform_times(t_end: f64, dt: f64) -> Result<Vec<f64>> {
        if !(dt > 0.0 && t_end >= 0.0 && t_end.is_finite()) {
            return Err(Error::Domain(alloc::format!(
                "need dt > 0 and t_end >= 0, got dt = {dt}, t_end = {t_end}"
            )));
        }
        let n = libm::floor(t_end / dt + 1e-9) as usize;
        Ok((0..=n).map(|i| i as f64 * dt).collect())
    }
}

/// One Fourier mode: index `n`, amplitude `f_n` and its time derivative `g_n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mode {
    pub index: i64,
    pub f: Complex64,
    pub g: Complex64,
}

/// Truncated Fourier representation of `u(·, t)` and `∂_t u(·, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralState {
    modes: Vec<Mode>,
    length: f64,
    c: f64,
    alpha: f64,
    time: f64,
}

fn mode_indices(n_modes: usize) -> impl Iterator<Item = i64> {
    let m = n_modes as i64;
    -(m - 1)..m
}

/// Forward transform `(1/N) Σ_j v_j e^{-i k_n x_j}` for the retained indices.
/// Negative indices are set to the conjugate of their mirror, so real input
/// gives exactly conjugate-symmetric coefficients.
fn forward(line: &SampledLine, length: f64, n_modes: usize) -> Vec<Complex64> {
    let n = line.len() as f64;
    let positive: Vec<Complex64> = (0..n_modes as i64)
        .map(|idx| {
            let k = 2.0 * PI * idx as f64 / length;
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &v) in line.values().iter().enumerate() {
                let phase = -k * line.x(j);
                acc += Complex64::new(libm::cos(phase), libm::sin(phase)) * v;
            }
            acc / n
        })
        .collect();
    mode_indices(n_modes)
        .map(|idx| {
            if idx >= 0 {
                positive[idx as usize]
            } else {
                positive[(-idx) as usize].conj()
            }
        })
        .collect()
}

impl SpectralState {
    /// Projects initial displacement and velocity onto the retained modes.
    pub fn from_samples(u0: &SampledLine, v0: &SampledLine, cfg: &WaveConfig) -> Result<Self> {
        cfg.validate()?;
        if u0.len() != v0.len()
            || (u0.h() - v0.h()).abs() > 1e-12 * u0.h()
            || (u0.origin() - v0.origin()).abs() > 1e-12 * u0.h()
        {
            return Err(Error::Domain(
                "displacement and velocity must share one sampling grid".into(),
            ));
        }
        let min = 2 * cfg.n_modes;
        if u0.len() < min {
            return Err(Error::TooFewSamples { got: u0.len(), min });
        }
        let period = u0.h() * u0.len() as f64;
        if (period - cfg.length).abs() > 1e-6 * cfg.length {
            return Err(Error::Domain(alloc::format!(
                "samples span a period of {period}, expected L = {}",
                cfg.length
            )));
        }
        let fs = forward(u0, cfg.length, cfg.n_modes);
        let gs = forward(v0, cfg.length, cfg.n_modes);
        let modes = mode_indices(cfg.n_modes)
            .zip(fs.into_iter().zip(gs))
            .map(|(index, (f, g))| Mode { index, f, g })
            .collect();
        Ok(SpectralState {
            modes,
            length: cfg.length,
            c: cfg.c,
            alpha: cfg.alpha,
            time: 0.0,
        })
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn wavenumber(&self, index: i64) -> f64 {
        2.0 * PI * index as f64 / self.length
    }

    pub fn frequency(&self, index: i64) -> f64 {
        // order and speed were validated on construction
        dispersion(self.wavenumber(index), self.alpha, self.c).unwrap_or(0.0)
    }

    /// Exact state after a further time `dt`.
    pub fn advance(&self, dt: f64) -> SpectralState {
        let modes = self
            .modes
            .iter()
            .map(|m| {
                let (f, g) = evolve_with(m.f, m.g, self.frequency(m.index), dt);
                Mode { index: m.index, f, g }
            })
            .collect();
        SpectralState {
            modes,
            time: self.time + dt,
            ..*self
        }
    }

    /// `Σ_n |f_n|²`, equal to the mean square of the synthesised samples.
    pub fn power(&self) -> f64 {
        self.modes.iter().map(|m| m.f.norm_sqr()).sum()
    }

    fn synthesize(&self, coeffs: impl Fn(&Mode) -> Complex64, template: &SampledLine) -> Vec<Complex64> {
        (0..template.len())
            .map(|j| {
                let x = template.x(j);
                self.modes
                    .iter()
                    .map(|m| {
                        let phase = self.wavenumber(m.index) * x;
                        coeffs(m) * Complex64::new(libm::cos(phase), libm::sin(phase))
                    })
                    .sum()
            })
            .collect()
    }

    /// Evaluates `u` on the sample points of `template`; returns the real part
    /// and the largest imaginary magnitude discarded.
    pub fn to_samples(&self, template: &SampledLine) -> (SampledLine, f64) {
        split_real(self.synthesize(|m| m.f, template), template)
    }
}

fn split_real(values: Vec<Complex64>, template: &SampledLine) -> (SampledLine, f64) {
    let residue = values.iter().fold(0.0f64, |m, v| m.max(v.im.abs()));
    (template.with_values(values.iter().map(|v| v.re).collect()), residue)
}

/// Output of [`solve_wave`]: one sampled line and one spectral state per time.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveSolution {
    pub times: Vec<f64>,
    pub lines: Vec<SampledLine>,
    pub states: Vec<SpectralState>,
    /// Largest imaginary part dropped when synthesising real samples.
    pub imaginary_residue: f64,
}

/// Transforms the initial data, evolves every mode exactly and synthesises `u`
/// at each requested time on the input sample points.
pub fn solve_wave(u0: &SampledLine, v0: &SampledLine, cfg: &WaveConfig) -> Result<WaveSolution> {
    let initial = SpectralState::from_samples(u0, v0, cfg)?;
    let mut lines = Vec::with_capacity(cfg.times.len());
    let mut states = Vec::with_capacity(cfg.times.len());
    let mut residue: f64 = 0.0;
    for &t in &cfg.times {
        let state = initial.advance(t);
        let (line, r) = state.to_samples(u0);
        residue = residue.max(r);
        lines.push(line);
        states.push(state);
    }
    Ok(WaveSolution {
        times: cfg.times.clone(),
        lines,
        states,
        imaginary_residue: residue,
    })
}

/// How the time derivative in [`wave_residual`] is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TimeDerivative {
    /// From the closed-form mode evolution carried in the solution.
    Analytic,
    /// Three-point second difference of the sampled series.
    CentralDifference,
}

/// Max-abs of `(1/c²) ∂_t² u - (∂_x^α)² u` over the series, with the spatial
/// operator applied spectrally as the squared symbol.
pub fn wave_residual(solution: &WaveSolution, cfg: &WaveConfig, method: TimeDerivative) -> Result<f64> {
    cfg.validate()?;
    let n = solution.lines.len();
    if n < 3 {
        return Err(Error::TooFewSamples { got: n, min: 3 });
    }
    let c2 = cfg.c * cfg.c;
    let symbol_sq = |state: &SpectralState, index: i64| -> Complex64 {
        let s = riesz_symbol(state.wavenumber(index), cfg.alpha).unwrap_or_default();
        s * s
    };
    let mut worst: f64 = 0.0;
    match method {
        TimeDerivative::Analytic => {
            for (state, line) in solution.states.iter().zip(&solution.lines) {
                let values = state.synthesize(
                    |m| {
                        let w = state.frequency(m.index);
                        m.f * (-w * w / c2) - symbol_sq(state, m.index) * m.f
                    },
                    line,
                );
                worst = worst.max(values.iter().fold(0.0, |acc, v| acc.max(v.norm())));
            }
        }
        TimeDerivative::CentralDifference => {
            for s in 1..n - 1 {
                let (t0, t1, t2) = (solution.times[s - 1], solution.times[s], solution.times[s + 1]);
                let (hm, hp) = (t1 - t0, t2 - t1);
                if !(hm > 0.0 && hp > 0.0) {
                    return Err(Error::Domain("output times must be strictly increasing".into()));
                }
                let (um, u, up) = (&solution.lines[s - 1], &solution.lines[s], &solution.lines[s + 1]);
                let state = &solution.states[s];
                let coeffs = forward(u, cfg.length, cfg.n_modes);
                let spatial = state.synthesize(
                    |m| {
                        let pos = (m.index + cfg.n_modes as i64 - 1) as usize;
                        symbol_sq(state, m.index) * coeffs[pos]
                    },
                    u,
                );
                for (j, lap) in spatial.iter().enumerate() {
                    let utt = 2.0 * ((up.values()[j] - u.values()[j]) / hp - (u.values()[j] - um.values()[j]) / hm)
                        / (hm + hp);
                    worst = worst.max((utt / c2 - lap.re).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Roots of `f` on `[t0, t1]`, located by a sign-change scan over `steps`
/// sub-intervals and refined by bisection.
pub fn zero_crossings(f: impl Fn(f64) -> f64, t0: f64, t1: f64, steps: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let dt = (t1 - t0) / steps.max(1) as f64;
    let mut a = t0;
    let mut fa = f(a);
    for i in 1..=steps.max(1) {
        let b = t0 + i as f64 * dt;
        let fb = f(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa * fb < 0.0 {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo * fm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    roots
}

/// Period of an oscillation from its zero crossings: twice the mean spacing.
pub fn crossing_period(roots: &[f64]) -> Option<f64> {
    if roots.len() < 2 {
        return None;
    }
    Some(2.0 * (roots[roots.len() - 1] - roots[0]) / (roots.len() - 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const C0: Complex64 = Complex64::new(0.0, 0.0);

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn dispersion_examples() {
        assert_eq!(dispersion(3.0, 1.0, 1.0).unwrap(), 3.0);
        assert_eq!(dispersion(-3.0, 1.0, 2.0).unwrap(), 6.0);
        assert_eq!(dispersion(0.0, 0.3, 1.0).unwrap(), 0.0);
        assert!((dispersion(1.0, 0.5, 1.0).unwrap() - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8);
        assert!(dispersion(1.0, 1.5, 1.0).is_err());
    }

    #[test]
    fn dispersion_monotonicity_in_order() {
        let alphas: Vec<f64> = (1..=100).map(|i| i as f64 / 100.0).collect();
        let omegas = |k: f64| -> Vec<f64> { alphas.iter().map(|&a| dispersion(k, a, 1.0).unwrap()).collect() };
        for k in [1.5, 2.0, 5.0] {
            assert!(omegas(k).windows(2).all(|w| w[1] > w[0]), "k = {k}");
        }
        // for |k| < 1 the two factors compete; |k|^α falls and sin rises, so
        // the product is not monotone over the whole range but must stay below |k|^0
        for k in [0.2, 0.5] {
            assert!(omegas(k).iter().all(|&w| w < 1.0));
        }
    }

    #[test]
    fn squared_symbol_is_the_mode_equation_coefficient() {
        for k in [-3.0, -1.0, 0.5, 2.0, 7.0] {
            for alpha in [0.25, 0.5, 0.75, 1.0] {
                let s = riesz_symbol(k, alpha).unwrap();
                let w = dispersion(k, alpha, 1.0).unwrap();
                assert!(((s * s).re + w * w).abs() < 1e-12 * w * w);
                assert_eq!((s * s).im, 0.0);
            }
        }
    }

    #[test]
    fn mode_evolve_basics() {
        let f0 = Complex64::new(0.3, -0.2);
        let g0 = Complex64::new(-1.0, 0.5);
        assert_eq!(mode_evolve(f0, g0, 2.0, 0.5, 1.0, 0.0).unwrap(), (f0, g0));
        let w = dispersion(2.0, 0.5, 1.0).unwrap();
        let (f, _) = mode_evolve(f0, C0, 2.0, 0.5, 1.0, 2.0 * PI / w).unwrap();
        assert!((f - f0).norm() < 1e-14);
        let (f, _) = mode_evolve(Complex64::new(1.0, 0.0), C0, 1.0, 1.0, 1.0, FRAC_PI_2).unwrap();
        assert!(f.norm() < 1e-15);
        let (f, g) = mode_evolve(f0, g0, 0.0, 0.5, 1.0, 2.0).unwrap();
        assert_eq!((f, g), (f0 + g0 * 2.0, g0));
    }

    #[test]
    fn rk4_tracks_closed_form() {
        let f0 = Complex64::new(1.0, 0.5);
        let g0 = Complex64::new(-0.25, 1.0);
        let (k, alpha) = (2.0, 0.75);
        let exact = mode_evolve(f0, g0, k, alpha, 1.0, 10.0).unwrap();
        let rk = mode_ode_rk4(f0, g0, k, alpha, 1.0, 10.0, 1e-3).unwrap();
        let w = dispersion(k, alpha, 1.0).unwrap();
        let scale = mode_energy(f0, g0, w).sqrt();
        assert!((exact.0 - rk.0).norm() * w <= 1e-8 * scale);
        assert!((exact.1 - rk.1).norm() <= 1e-8 * scale);
        let e0 = mode_energy(f0, g0, w);
        assert!(rel(mode_energy(rk.0, rk.1, w), e0) < 1e-8);
        assert_eq!(mode_ode_rk4(C0, C0, k, alpha, 1.0, 10.0, 1e-3).unwrap(), (C0, C0));
    }

    fn periodic_line(n: usize, length: f64, f: impl Fn(f64) -> f64) -> SampledLine {
        let h = length / n as f64;
        SampledLine::new((0..n).map(|j| f(j as f64 * h)).collect(), h, 0.0).unwrap()
    }

    fn config(alpha: f64, n_modes: usize, times: Vec<f64>) -> WaveConfig {
        WaveConfig {
            alpha,
            c: 1.0,
            length: 2.0 * PI,
            n_modes,
            times,
        }
    }

    #[test]
    fn classical_standing_wave() {
        let l = 2.0 * PI;
        let u0 = periodic_line(16, l, libm::cos);
        let v0 = periodic_line(16, l, |_| 0.0);
        let cfg = config(1.0, 4, WaveConfig::uniform_times(3.0, 0.25).unwrap());
        let sol = solve_wave(&u0, &v0, &cfg).unwrap();
        assert!(sol.imaginary_residue < 1e-12);
        for (t, line) in sol.times.iter().zip(&sol.lines) {
            for j in 0..line.len() {
                let expected = libm::cos(line.x(j)) * libm::cos(*t);
                assert!((line.values()[j] - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_data_stays_zero() {
        let z = periodic_line(8, 2.0 * PI, |_| 0.0);
        let sol = solve_wave(&z, &z, &config(0.5, 3, vec![0.0, 1.0, 5.0])).unwrap();
        assert!(sol.lines.iter().all(|l| l.values().iter().all(|&v| v == 0.0)));
    }

    #[test]
    fn single_mode_period_matches_dispersion() {
        let k = 2.0;
        let u0 = periodic_line(16, 2.0 * PI, |x| libm::cos(k * x));
        let v0 = periodic_line(16, 2.0 * PI, |_| 0.0);
        let cfg = config(0.5, 4, vec![0.0]);
        let state = SpectralState::from_samples(&u0, &v0, &cfg).unwrap();
        let at_origin = |t: f64| state.advance(t).to_samples(&u0).0.values()[0];
        let roots = zero_crossings(at_origin, 0.0, 20.0, 400);
        let period = crossing_period(&roots).unwrap();
        let w = dispersion(k, 0.5, 1.0).unwrap();
        assert!(rel(period, 2.0 * PI / w) < 1e-6);
    }

    #[test]
    fn parseval_and_reality() {
        let l = 3.0;
        let u0 = periodic_line(24, l, |x| {
            libm::sin(2.0 * PI * x / l) + 0.3 * libm::cos(6.0 * PI * x / l) + 0.1
        });
        let v0 = periodic_line(24, l, |x| libm::cos(4.0 * PI * x / l));
        let cfg = WaveConfig {
            alpha: 0.6,
            c: 1.3,
            length: l,
            n_modes: 5,
            times: vec![0.0, 0.7, 2.1, 9.4],
        };
        let sol = solve_wave(&u0, &v0, &cfg).unwrap();
        assert!(sol.imaginary_residue < 1e-12);
        for (state, line) in sol.states.iter().zip(&sol.lines) {
            let mean_sq: f64 = line.values().iter().map(|v| v * v).sum::<f64>() / line.len() as f64;
            assert!(rel(mean_sq, state.power()) < 1e-12);
            for m in state.modes() {
                let mirror = state.modes().iter().find(|o| o.index == -m.index).unwrap();
                assert!((m.f - mirror.f.conj()).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn residual_analytic_and_difference() {
        let l = 2.0 * PI;
        let u0 = periodic_line(16, l, |x| libm::cos(x) + 0.5 * libm::sin(2.0 * x));
        let v0 = periodic_line(16, l, |x| 0.2 * libm::cos(3.0 * x));
        let coarse = config(0.5, 5, WaveConfig::uniform_times(2.0, 0.02).unwrap());
        let sol = solve_wave(&u0, &v0, &coarse).unwrap();
        assert!(wave_residual(&sol, &coarse, TimeDerivative::Analytic).unwrap() < 1e-12);
        let r1 = wave_residual(&sol, &coarse, TimeDerivative::CentralDifference).unwrap();
        let fine = config(0.5, 5, WaveConfig::uniform_times(2.0, 0.01).unwrap());
        let r2 = wave_residual(
            &solve_wave(&u0, &v0, &fine).unwrap(),
            &fine,
            TimeDerivative::CentralDifference,
        )
        .unwrap();
        let ratio = r1 / r2;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
        let z = periodic_line(16, l, |_| 0.0);
        let zsol = solve_wave(&z, &z, &coarse).unwrap();
        assert_eq!(
            wave_residual(&zsol, &coarse, TimeDerivative::CentralDifference).unwrap(),
            0.0
        );
    }

    #[test]
    fn solver_errors() {
        let u0 = periodic_line(5, 2.0 * PI, libm::cos);
        assert!(matches!(
            solve_wave(&u0, &u0, &config(0.5, 3, vec![0.0])),
            Err(Error::TooFewSamples { got: 5, min: 6 })
        ));
        let off = periodic_line(8, 6.0, |x| x);
        assert!(solve_wave(&off, &off, &config(0.5, 2, vec![0.0])).is_err());
        let u = periodic_line(8, 2.0 * PI, |x| x);
        let sol = solve_wave(&u, &u, &config(0.5, 2, vec![0.0, 1.0])).unwrap();
        assert!(matches!(
            wave_residual(&sol, &config(0.5, 2, vec![0.0, 1.0]), TimeDerivative::Analytic),
            Err(Error::TooFewSamples { got: 2, min: 3 })
        ));
    }
}
