//! The seed ω(u) = u^{α+1/2} e^{−2πu} pulled back through the Kirillov map,
//!
//!   F(x + iy) = y^{α+1/2} Σ_{n>0} ρ(n) n^α e(n(x + iy)),
//!
//! and the shifted sums its square generates. By orthogonality of the
//! characters e(nx) on [0, 1], the m-th Fourier coefficient of |F|² in x is
//!
//!   S_m(y) = y^{2α+1} Σ_n ρ(n) ρ(n+m) (n(n+m))^α e^{−2π(2n+m)y},
//!
//! and integrating S_m over y > 0 gives m^{−2} Σ ρ(n) ρ(n+m) W(n/m) for the
//! seed-induced window W of [`WindowSpec::SeedInduced`]. Coefficients are
//! real, so every conjugate in these formulas drops out.
//!
//! Tail bounds assume |ρ(n)| ≤ 2n beyond the stored table. With ρ(1) = 1
//! this holds for Hecke eigenforms, whose normalized coefficients satisfy
//! |ρ(n)| ≤ d(n) n^{7/64}.

use alloc::vec::Vec;
use core::f64::consts::{E, PI};

use super::expansion::n_times_x;
use super::form::MaassForm;
use crate::special::quadrature::{integrate, integrate_with_breaks, Envelope, Interval, QuadratureSpec};
use crate::special::additive_character;
use crate::sum::{ComplexSum, NeumaierSum};
use crate::window::WindowSpec;
use crate::{Complex64, Error, Result};

/// Largest seed exponent accepted; (n(n+m))^α overflows soon after.
pub const MAX_ALPHA: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedSpec {
    pub alpha: f64,
}

impl SeedSpec {
    pub fn new(alpha: f64) -> Result<Self> {
        let s = SeedSpec { alpha };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha.is_finite() && (1.0..=MAX_ALPHA).contains(&self.alpha) {
            Ok(())
        } else {
            Err(Error::domain("seed exponent α must lie in [1, 40]"))
        }
    }

    /// ω(u) = u^{α+1/2} e^{−2πu} for u > 0, else 0.
    pub fn omega(&self, u: f64) -> f64 {
        if u > 0.0 {
            libm::pow(u, self.alpha + 0.5) * libm::exp(-2.0 * PI * u)
        } else {
            0.0
        }
    }
}

/// Σ_{n≥start} h(n) for a majorant h whose successive ratios decrease in n.
/// Sums explicitly until the ratio drops below 1/2, then closes with the
/// geometric series.
fn majorant_tail(start: f64, h: impl Fn(f64) -> f64) -> f64 {
    let mut acc = NeumaierSum::new();
    let mut n = start;
    let mut term = h(n);
    for _ in 0..10_000_000 {
        let next = h(n + 1.0);
        let q = if term > 0.0 { next / term } else { 0.0 };
        if q <= 0.5 {
            acc.add(term + term * q / (1.0 - q));
            return acc.value();
        }
        acc.add(term);
        term = next;
        n += 1.0;
    }
    f64::INFINITY
}

fn check_truncation(form: &MaassForm, n_trunc: usize, extra: usize) -> Result<()> {
    if n_trunc == 0 || n_trunc + extra > form.n_coeff() {
        return Err(Error::domain(if extra == 0 {
            "N_trunc must lie in 1..=N_coeff"
        } else {
            "need m + N_trunc <= N_coeff"
        }));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KirillovValue {
    pub value: Complex64,
    /// Bound on the omitted terms n > N_trunc.
    pub tail_bound: f64,
}

/// y^{α+1/2} Σ_{n>N} |ρ(n)| n^α e^{−2πny}
pub fn seed_expansion_tail(form: &MaassForm, alpha: f64, y: f64, n_trunc: usize) -> f64 {
    let mut acc = NeumaierSum::new();
    for (j, c) in form.coefficients().iter().enumerate().skip(n_trunc) {
        let n = (j + 1) as f64;
        acc.add(libm::fabs(*c) * libm::exp(alpha * libm::log(n) - 2.0 * PI * n * y));
    }
    let beyond = majorant_tail((form.n_coeff() + 1) as f64, |n| {
        2.0 * libm::exp((alpha + 1.0) * libm::log(n) - 2.0 * PI * n * y)
    });
    (acc.value() + beyond) * libm::pow(y, alpha + 0.5)
}

/// F(x + iy) truncated to n ≤ N_trunc.
pub fn kirillov_seed_expansion(
    form: &MaassForm,
    seed: &SeedSpec,
    x: f64,
    y: f64,
    n_trunc: usize,
    tolerance: Option<f64>,
) -> Result<KirillovValue> {
    seed.validate()?;
    if !x.is_finite() || !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("need finite x and y > 0"));
    }
    check_truncation(form, n_trunc, 0)?;
    let tail_bound = seed_expansion_tail(form, seed.alpha, y, n_trunc);
    if let Some(tol) = tolerance {
        if !(tail_bound <= tol) {
            return Err(Error::TruncationInsufficient {
                what: "kirillov_seed_expansion",
                tail: tail_bound,
                tolerance: tol,
            });
        }
    }
    let value = seed_sum(form, seed.alpha, x, y, n_trunc);
    Ok(KirillovValue { value, tail_bound })
}

fn seed_sum(form: &MaassForm, alpha: f64, x: f64, y: f64, terms: usize) -> Complex64 {
    let mut acc = ComplexSum::new();
    for (j, c) in form.coefficients()[..terms].iter().enumerate() {
        let n = j + 1;
        let nf = n as f64;
        let radial = *c * libm::exp(alpha * libm::log(nf) - 2.0 * PI * nf * y);
        acc.add(additive_character(n_times_x(n, x)) * radial);
    }
    acc.value() * libm::pow(y, alpha + 0.5)
}

/// ∫₀¹ e(nx) conj(e((n+m)x)) dx by quadrature, which should be δ_{m,0}.
pub fn fourier_orthogonality(n: i64, m: i64, spec: &QuadratureSpec) -> Result<Complex64> {
    spec.validate()?;
    let k = n.checked_add(m).ok_or(Error::Overflow("n + m"))?;
    let (nf, kf) = (n as f64, k as f64);
    // one panel per half period of the slowest-cancelling product
    let panels = (2 * (n.unsigned_abs() + k.unsigned_abs())).clamp(1, 1 << 16) as usize;
    let breaks: Vec<f64> = (0..=panels).map(|j| j as f64 / panels as f64).collect();
    let q = integrate_with_breaks(
        |x| additive_character(nf * x) * additive_character(kf * x).conj(),
        &breaks,
        spec,
    )?;
    Ok(q.value)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedCoefficient {
    /// S_m(y) from the closed-form shifted sum over n ≤ N_trunc.
    pub closed_form: f64,
    /// ∫₀¹ |F(x+iy)|² e(−mx) dx with F cut at N_trunc + m terms.
    pub quadrature: Complex64,
    pub quadrature_error: f64,
    /// Bound on the omitted n > N_trunc part of the closed form.
    pub tail_bound: f64,
}

impl ShiftedCoefficient {
    pub fn disagreement(&self) -> f64 {
        (self.quadrature - Complex64::new(self.closed_form, 0.0)).norm()
    }
}

fn shifted_closed_form(form: &MaassForm, alpha: f64, m: usize, y: f64, n_trunc: usize) -> f64 {
    let rho = form.coefficients();
    let mf = m as f64;
    let mut acc = NeumaierSum::new();
    for n in 1..=n_trunc {
        let nf = n as f64;
        let log_weight = alpha * libm::log(nf * (nf + mf)) - 2.0 * PI * (2.0 * nf + mf) * y;
        acc.add(rho[n - 1] * rho[n + m - 1] * libm::exp(log_weight));
    }
    acc.value() * libm::pow(y, 2.0 * alpha + 1.0)
}

/// y^{2α+1} Σ_{n>N} |ρ(n) ρ(n+m)| (n(n+m))^α e^{−2π(2n+m)y}
fn shifted_tail(form: &MaassForm, alpha: f64, m: usize, y: f64, n_trunc: usize) -> f64 {
    let rho = form.coefficients();
    let mf = m as f64;
    let weight = |n: f64| libm::exp(alpha * libm::log(n * (n + mf)) - 2.0 * PI * (2.0 * n + mf) * y);
    let mut acc = NeumaierSum::new();
    let stored_end = form.n_coeff() - m;
    for n in (n_trunc + 1)..=stored_end {
        acc.add(libm::fabs(rho[n - 1] * rho[n + m - 1]) * weight(n as f64));
    }
    let beyond = majorant_tail((stored_end + 1) as f64, |n| 4.0 * n * (n + mf) * weight(n));
    (acc.value() + beyond) * libm::pow(y, 2.0 * alpha + 1.0)
}

/// The m-th Fourier coefficient of |F|² at height y, by both routes.
pub fn shifted_fourier_coefficient(
    form: &MaassForm,
    seed: &SeedSpec,
    m: usize,
    y: f64,
    n_trunc: usize,
    spec: &QuadratureSpec,
) -> Result<ShiftedCoefficient> {
    seed.validate()?;
    spec.validate()?;
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("need y > 0"));
    }
    check_truncation(form, n_trunc, m)?;
    let alpha = seed.alpha;
    let closed_form = shifted_closed_form(form, alpha, m, y, n_trunc);
    let tail_bound = shifted_tail(form, alpha, m, y, n_trunc);

    let terms = n_trunc + m;
    let panels = 2 * terms;
    let breaks: Vec<f64> = (0..=panels).map(|j| j as f64 / panels as f64).collect();
    let mf = m as f64;
    let q = integrate_with_breaks(
        |x| {
            let f = seed_sum(form, alpha, x, y, terms);
            additive_character(-mf * x) * f.norm_sqr()
        },
        &breaks,
        spec,
    )?;
    Ok(ShiftedCoefficient {
        closed_form,
        quadrature: q.value,
        quadrature_error: q.error,
        tail_bound,
    })
}

/// Σ_{n≤N} ρ(n) ρ(n+m) W(n/m).
pub fn shifted_convolution(form: &MaassForm, m: usize, window: &WindowSpec, n_trunc: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("shift m must be at least 1"));
    }
    window.validate()?;
    check_truncation(form, n_trunc, m)?;
    if window.is_zero() {
        return Ok(0.0);
    }
    let rho = form.coefficients();
    let mf = m as f64;
    Ok((1..=n_trunc)
        .map(|n| rho[n - 1] * rho[n + m - 1] * window.eval(n as f64 / mf))
        .collect::<NeumaierSum>()
        .value())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedConvolution {
    /// ∫₀^∞ S_m(y) dy by quadrature, times m².
    pub integrated: f64,
    pub quadrature_error: f64,
    /// Σ_{n≤N} ρ(n) ρ(n+m) W_α(n/m) with the seed-induced window.
    pub direct: f64,
}

/// The shifted convolution with the seed-induced window, generated both by
/// integrating the Fourier coefficient S_m(y) over y and by direct summation.
pub fn seed_shifted_convolution(
    form: &MaassForm,
    seed: &SeedSpec,
    m: usize,
    n_trunc: usize,
    spec: &QuadratureSpec,
) -> Result<SeedConvolution> {
    seed.validate()?;
    spec.validate()?;
    if m < 1 {
        return Err(Error::domain("shift m must be at least 1"));
    }
    check_truncation(form, n_trunc, m)?;
    let alpha = seed.alpha;
    let p = 2.0 * alpha + 1.0;
    let mf = m as f64;
    let rho = form.coefficients();

    // y^p e^{−2π(2n+m)y} ≤ (p/(eπ(2+m)))^p e^{−π(2+m)y} for every n ≥ 1
    let rate = PI * (2.0 + mf);
    let coeff_mass: f64 = (1..=n_trunc)
        .map(|n| {
            let nf = n as f64;
            libm::fabs(rho[n - 1] * rho[n + m - 1]) * libm::pow(nf * (nf + mf), alpha)
        })
        .sum();
    let amplitude = coeff_mass * libm::exp(p * libm::log(p / (E * rate)));
    let scale = mf * mf;
    let envelope = Envelope::Exponential {
        amplitude: amplitude * scale,
        rate,
        origin: 0.0,
    };
    let q = integrate(
        |y| Complex64::new(scale * shifted_closed_form(form, alpha, m, y, n_trunc), 0.0),
        Interval::Above { a: 0.0, envelope },
        spec,
    )?;
    let direct = shifted_convolution(form, m, &WindowSpec::SeedInduced { alpha }, n_trunc)?;
    Ok(SeedConvolution {
        integrated: q.value.re,
        quadrature_error: q.error,
        direct,
    })
}

/// ∫₀^∞ y^{2α+1} e^{−2πby} dy = Γ(2α+2) (2πb)^{−2α−2}, used by the tests and
/// exposed for callers building their own windows.
pub fn seed_height_integral(alpha: f64, b: f64) -> f64 {
    libm::exp(libm::lgamma(2.0 * alpha + 2.0) - (2.0 * alpha + 2.0) * libm::log(2.0 * PI * b))
}
