//! Operators checked against values that do not come from the GL sums:
//! high-precision reference values, an independent quadrature of the
//! Riemann-Liouville integral, and the whole-line Fourier symbol.

// reference tables are written out digit by digit as computed
#![allow(clippy::approx_constant, clippy::excessive_precision)]

use fracfield_core::fracops::{
    gl_weights, left_rl_deriv, lr_op, riesz_symbol, right_rl_deriv, rl_power_analytic, SampledLine,
};
use fracfield_core::special::gamma;

/// `∫_a^x f(u) (x-u)^-α du` after substituting `s = (x-u)^(1-α)`, which
/// removes the endpoint singularity; composite Simpson in `s`.
fn rl_integral(f: &dyn Fn(f64) -> f64, alpha: f64, a: f64, x: f64) -> f64 {
    let q = 1.0 - alpha;
    let top = (x - a).powf(q);
    let n = 4000;
    let h = top / n as f64;
    let g = |s: f64| f(x - s.powf(1.0 / q));
    let mut acc = g(0.0) + g(top);
    for i in 1..n {
        acc += g(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0 / q
}

/// Left derivative by a fourth-order central difference of the integral.
fn left_oracle(f: &dyn Fn(f64) -> f64, alpha: f64, a: f64, x: f64) -> f64 {
    let d = 1e-3;
    let i = |y: f64| rl_integral(f, alpha, a, y);
    let deriv = (i(x - 2.0 * d) - 8.0 * i(x - d) + 8.0 * i(x + d) - i(x + 2.0 * d)) / (12.0 * d);
    deriv / gamma(1.0 - alpha)
}

/// Right derivative through the reflection `u -> a + b - u`.
fn right_oracle(f: &dyn Fn(f64) -> f64, beta: f64, a: f64, b: f64, x: f64) -> f64 {
    left_oracle(&|u| f(a + b - u), beta, a, a + b - x)
}

// Reference values computed with 30-digit arithmetic.
const LEFT_HALF: [(f64, [f64; 3]); 3] = [
    (
        0.25,
        [1.128_379_167_095_51, 0.564_189_583_547_756, 0.188_063_194_515_919],
    ),
    (
        0.5,
        [0.797_884_560_802_865, 0.797_884_560_802_865, 0.531_923_040_535_244],
    ),
    (1.0, [0.564_189_583_547_756, 1.128_379_167_095_51, 1.504_505_556_127_35]),
];
const RIGHT_HALF: [(f64, f64, f64); 3] = [
    (0.25, 0.651_470_01, 0.977_205_02),
    (0.5, 0.797_884_56, 0.797_884_56),
    (0.75, 1.128_379_17, 0.564_189_58),
];

#[test]
fn power_closed_form_matches_reference() {
    for (x, refs) in LEFT_HALF {
        for (p, expected) in refs.into_iter().enumerate() {
            let got = rl_power_analytic(p as f64, 0.5, x, 0.0).unwrap();
            assert!((got - expected).abs() < 1e-13 * expected, "p={p} x={x}");
        }
    }
}

#[test]
fn quadrature_oracle_matches_reference() {
    let powers: [&dyn Fn(f64) -> f64; 3] = [&|_| 1.0, &|u| u, &|u| u * u];
    for (x, refs) in LEFT_HALF {
        for (f, expected) in powers.iter().zip(refs) {
            let got = left_oracle(*f, 0.5, 0.0, x);
            assert!((got - expected).abs() < 1e-7, "x={x}: {got} vs {expected}");
        }
    }
    for (x, one, ramp) in RIGHT_HALF {
        assert!((right_oracle(&|_| 1.0, 0.5, 0.0, 1.0, x) - one).abs() < 1e-7);
        assert!((right_oracle(&|u| 1.0 - u, 0.5, 0.0, 1.0, x) - ramp).abs() < 1e-7);
    }
}

#[test]
fn quadrature_oracle_handles_non_polynomial_input() {
    // D^α of e^u on [0, x] has no elementary closed form; compare the oracle with
    // the GL sum on a fine grid instead, so both sides are independent.
    let f = |u: f64| u.exp() * u;
    let line = SampledLine::from_fn(0.0, 1.0, 4001, f).unwrap();
    for alpha in [0.3, 0.5, 0.8] {
        let d = left_rl_deriv(&line, alpha).unwrap();
        for i in [1000, 2000, 4000] {
            let x = line.x(i);
            let oracle = left_oracle(&f, alpha, 0.0, x);
            assert!(
                (d.values()[i] - oracle).abs() < 2e-3 * oracle.abs().max(1.0),
                "α={alpha} x={x}"
            );
        }
    }
}

#[test]
fn gamma_reference_values() {
    for (x, expected) in [
        (0.1, 9.513_507_698_668_732),
        (7.3, 1_271.423_633_663_908_8),
        (20.0, 1.216_451_004_088_32e17),
    ] {
        assert!((gamma(x) - expected).abs() < 1e-13 * expected, "Γ({x})");
    }
}

#[test]
fn weights_reference_values() {
    assert_eq!(gl_weights(0.5, 3).unwrap().as_slice(), &[1.0, -0.5, -0.125, -0.0625]);
}

fn max_interior_error(n: usize) -> f64 {
    let line = SampledLine::from_fn(0.0, 1.0, n + 1, |x| x * x).unwrap();
    let d = left_rl_deriv(&line, 0.5).unwrap();
    (1..n)
        .map(|i| (d.values()[i] - rl_power_analytic(2.0, 0.5, line.x(i), 0.0).unwrap()).abs())
        .fold(0.0, f64::max)
}

#[test]
fn left_sum_converges_at_first_order() {
    for n in [256, 1024, 4096] {
        let ratio = max_interior_error(n) / max_interior_error(2 * n);
        assert!((1.6..=2.4).contains(&ratio), "n={n}: ratio {ratio}");
    }
}

#[test]
fn right_sum_tracks_reference_values() {
    let ones = SampledLine::from_fn(0.0, 1.0, 4001, |_| 1.0).unwrap();
    let ramp = SampledLine::from_fn(0.0, 1.0, 4001, |x| 1.0 - x).unwrap();
    let r1 = right_rl_deriv(&ones, 0.5).unwrap();
    let r2 = right_rl_deriv(&ramp, 0.5).unwrap();
    for (i, (_, one, lin)) in [1000, 2000, 3000].into_iter().zip(RIGHT_HALF) {
        assert!((r1.values()[i] - one).abs() < 5e-3);
        assert!((r2.values()[i] - lin).abs() < 5e-3);
    }
}

/// `lr_op` on `sin(kx)` far from the terminals, against `Im(σ(k) e^{ikx})`.
fn symbol_error(alpha: f64, k: f64) -> f64 {
    let n = 8001;
    let line = SampledLine::from_fn(-40.0, 40.0, n, |x| (k * x).sin()).unwrap();
    let d = lr_op(&line, alpha, alpha).unwrap();
    let sigma = riesz_symbol(k, alpha).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let x = line.x(i);
        if x.abs() <= 1.0 {
            let expected = sigma.im * (k * x).cos();
            worst = worst.max((d.values()[i] - expected).abs() / sigma.norm());
        }
    }
    worst
}

#[test]
fn grid_operator_reproduces_the_symbol() {
    for alpha in [0.5, 0.75, 1.0] {
        let err = symbol_error(alpha, 2.0);
        assert!(err <= 1e-2, "α={alpha}: {err}");
    }
}

#[test]
fn symbol_error_shrinks_with_spacing() {
    let coarse = {
        let line = SampledLine::from_fn(-40.0, 40.0, 4001, |x| (2.0 * x).sin()).unwrap();
        let d = lr_op(&line, 0.5, 0.5).unwrap();
        (d.values()[2000] - riesz_symbol(2.0, 0.5).unwrap().im).abs()
    };
    let fine = {
        let line = SampledLine::from_fn(-40.0, 40.0, 8001, |x| (2.0 * x).sin()).unwrap();
        let d = lr_op(&line, 0.5, 0.5).unwrap();
        (d.values()[4000] - riesz_symbol(2.0, 0.5).unwrap().im).abs()
    };
    assert!(fine < coarse);
}
