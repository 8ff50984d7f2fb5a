use std::f64::consts::PI;

use spectra_core::special::{bessel_k_imag, complex_gamma, integrate, Envelope, Interval, QuadratureSpec};
use spectra_core::Complex64;

/// Trapezoid rule on [a, b]; exponentially accurate for the smooth, fast
/// decaying integrands below.
fn trapezoid(f: impl Fn(f64) -> Complex64, a: f64, b: f64, steps: usize) -> Complex64 {
    let h = (b - a) / steps as f64;
    let mut acc = (f(a) + f(b)) * 0.5;
    for j in 1..steps {
        acc += f(a + j as f64 * h);
    }
    acc * h
}

#[test]
fn gamma_on_the_critical_line_against_its_integral() {
    // Γ(s) = ∫ t^{s−1} e^{−t} dt with t = e^v
    let s = Complex64::new(0.5, 1.0);
    let oracle = trapezoid(|v| (s * v).exp() * (-v.exp()).exp(), -60.0, 5.0, 200_000);
    let g = complex_gamma(s).unwrap();
    assert!((g - oracle).norm() < 1e-12, "{g} vs {oracle}");
    // |Γ(1/2+it)|² = π / cosh(πt)
    assert!((g.norm_sqr() - PI / PI.cosh()).abs() < 1e-14);
}

#[test]
fn bessel_k_against_cosh_integral() {
    for (r, x) in [(0.0, 1.0), (1.0, 1.0), (5.0, 10.0), (9.5336952613536, 3.0)] {
        let oracle = trapezoid(|t| Complex64::new((-x * t.cosh()).exp() * (r * t).cos(), 0.0), 0.0, 12.0, 120_000);
        let k = bessel_k_imag(r, x).unwrap();
        assert!((k - oracle.re).abs() < 1e-12 * oracle.re.abs().max(1e-3), "r={r} x={x}: {k} vs {}", oracle.re);
    }
}

#[test]
fn bessel_k_large_argument() {
    let (r, x) = (1.0, 50.0);
    let ratio = bessel_k_imag(r, x).unwrap() / ((PI / (2.0 * x)).sqrt() * (-x).exp());
    assert!((ratio - 1.0).abs() < 0.02);
    for (r, x) in [(1.0, 1.0), (1.0, 10.0), (5.0, 10.0)] {
        assert!(bessel_k_imag(r, x).unwrap() > 0.0);
    }
}

#[test]
fn gaussian_normalization() {
    let env = Envelope::Gaussian {
        amplitude: 1.0,
        center: 0.0,
        width: 1.0 / PI.sqrt(),
    };
    let q = integrate(|x| Complex64::new((-PI * x * x).exp(), 0.0), Interval::Line { envelope: env }, &QuadratureSpec::default())
        .unwrap();
    assert!((q.value.re - 1.0).abs() < 1e-10);
}
