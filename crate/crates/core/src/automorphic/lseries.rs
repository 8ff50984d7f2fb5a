//! L(s) = Σ ρ(n) n^{−s} from a finite coefficient table.
//!
//! On Re s > 1 the Dirichlet series converges and is summed directly. On
//! the critical line there is no approximate functional equation to lean
//! on here, so values there come from the Gaussian-damped partial sum
//! Σ ρ(n) n^{−s} e^{−(n/X)²}, which is a heuristic: its deviation from L(s)
//! is of order X^{−2} times a polynomial in |s| and r. Results computed this
//! way carry `heuristic = true`.

use super::form::MaassForm;
use crate::special::quadrature::{integrate, Envelope, Interval, QuadratureSpec};
use crate::sum::{ComplexSum, NeumaierSum};
use crate::zeta::WeightSpec;
use crate::{Complex64, Error, Result};

/// Default cap on the weighted tail beyond N_coeff for the smoothed scheme.
pub const SMOOTHING_TAIL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LScheme {
    /// Plain partial sum over all stored coefficients; needs Re s > 1.
    Direct,
    /// Σ ρ(n) n^{−s} e^{−(n/X)²}.
    Smoothed { x: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LValue {
    pub value: Complex64,
    /// |contribution of the last tenth of the terms used|.
    pub last_block: f64,
    /// Bound on what the terms beyond N_coeff could add, taking |ρ(n)| ≤ 2n
    /// for the unknown coefficients (Direct: only when Re s > 2).
    pub beyond_table: f64,
    pub terms: usize,
    pub heuristic: bool,
}

#[inline]
fn n_pow_minus_s(n: f64, s: Complex64) -> Complex64 {
    let ln = libm::log(n);
    let (sin, cos) = libm::sincos(-s.im * ln);
    Complex64::new(cos, sin) * libm::exp(-s.re * ln)
}

/// Σ_{n>N} 2n · n^{−σ} · w(n), summed until negligible, with w ≤ 1 decreasing.
fn unknown_tail(n_coeff: usize, sigma: f64, weight: impl Fn(f64) -> f64) -> f64 {
    let mut acc = NeumaierSum::new();
    let mut n = n_coeff as f64 + 1.0;
    loop {
        let t = 2.0 * libm::pow(n, 1.0 - sigma) * weight(n);
        acc.add(t);
        if t < 1e-20 * acc.value().max(1e-300) || n > 1e8 {
            break;
        }
        n += 1.0;
    }
    if n > 1e8 {
        f64::INFINITY
    } else {
        acc.value()
    }
}

pub fn l_function_eval(form: &MaassForm, s: Complex64, scheme: LScheme) -> Result<LValue> {
    l_function_eval_with(form, s, scheme, SMOOTHING_TAIL_TOLERANCE)
}

/// As [`l_function_eval`] with an explicit cap on the smoothed scheme's
/// weight beyond the table.
pub fn l_function_eval_with(form: &MaassForm, s: Complex64, scheme: LScheme, tail_tol: f64) -> Result<LValue> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("s must be finite"));
    }
    let n_coeff = form.n_coeff();
    let block_start = n_coeff - n_coeff / 10;
    match scheme {
        LScheme::Direct => {
            if !(s.re > 1.0) {
                return Err(Error::domain("direct summation needs Re s > 1"));
            }
            let mut acc = ComplexSum::new();
            let mut block = ComplexSum::new();
            for (j, rho) in form.coefficients().iter().enumerate() {
                let term = n_pow_minus_s((j + 1) as f64, s) * *rho;
                acc.add(term);
                if j + 1 > block_start {
                    block.add(term);
                }
            }
            let beyond = if s.re > 2.0 {
                unknown_tail(n_coeff, s.re, |_| 1.0)
            } else {
                f64::INFINITY
            };
            Ok(LValue {
                value: acc.value(),
                last_block: block.value().norm(),
                beyond_table: beyond,
                terms: n_coeff,
                heuristic: false,
            })
        }
        LScheme::Smoothed { x } => {
            if !(x > 0.0) || !x.is_finite() {
                return Err(Error::domain("smoothing cutoff X must be positive"));
            }
            let weight = |n: f64| {
                let u = n / x;
                libm::exp(-u * u)
            };
            let beyond = unknown_tail(n_coeff, s.re, weight);
            if !(beyond <= tail_tol) {
                return Err(Error::TruncationInsufficient {
                    what: "l_function_eval (too few coefficients for this X)",
                    tail: beyond,
                    tolerance: tail_tol,
                });
            }
            let mut acc = ComplexSum::new();
            let mut block = ComplexSum::new();
            for (j, rho) in form.coefficients().iter().enumerate() {
                let n = (j + 1) as f64;
                let term = n_pow_minus_s(n, s) * (*rho * weight(n));
                acc.add(term);
                if j + 1 > block_start {
                    block.add(term);
                }
            }
            Ok(LValue {
                value: acc.value(),
                last_block: block.value().norm(),
                beyond_table: beyond,
                terms: n_coeff,
                heuristic: s.re <= 1.0,
            })
        }
    }
}

/// Σ_{n>from} |ρ(n)| n^{−σ} over the stored coefficients.
pub fn stored_tail_bound(form: &MaassForm, from: usize, sigma: f64) -> f64 {
    form.coefficients()
        .iter()
        .enumerate()
        .skip(from)
        .map(|(j, c)| libm::fabs(*c) * libm::pow((j + 1) as f64, -sigma))
        .collect::<NeumaierSum>()
        .value()
}

/// Σ_{n≤terms} ρ(n) n^{−s}.
pub fn l_partial_sum(form: &MaassForm, s: Complex64, terms: usize) -> Result<Complex64> {
    if terms == 0 || terms > form.n_coeff() {
        return Err(Error::domain("partial sum length must lie in 1..=N_coeff"));
    }
    Ok(form.coefficients()[..terms]
        .iter()
        .enumerate()
        .map(|(j, c)| n_pow_minus_s((j + 1) as f64, s) * *c)
        .collect::<ComplexSum>()
        .value())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LMomentResult {
    pub value: f64,
    pub error: f64,
    pub truncation: f64,
    pub x: f64,
    /// Always true: critical-line values are smoothed partial sums.
    pub heuristic: bool,
}

/// ∫ |L(1/2+it)|² g(t) dt with L replaced by its smoothed partial sum at
/// cutoff X.
pub fn l_moment(form: &MaassForm, g: &WeightSpec, x: f64, spec: &QuadratureSpec) -> Result<LMomentResult> {
    g.validate()?;
    spec.validate()?;
    // the probe also validates X against the table
    l_function_eval(form, Complex64::new(0.5, g.center), LScheme::Smoothed { x })?;
    if g.scale == 0.0 {
        return Ok(LMomentResult {
            value: 0.0,
            error: 0.0,
            truncation: 0.0,
            x,
            heuristic: true,
        });
    }
    // |smoothed L| ≤ B for every t, so B² g is a Gaussian envelope
    let b: f64 = form
        .coefficients()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let n = (j + 1) as f64;
            libm::fabs(*c) / libm::sqrt(n) * libm::exp(-(n / x) * (n / x))
        })
        .sum();
    let envelope = Envelope::Gaussian {
        amplitude: b * b * g.scale,
        center: g.center,
        width: g.width,
    };
    let mut failure = None;
    let q = integrate(
        |t| match l_function_eval(form, Complex64::new(0.5, t), LScheme::Smoothed { x }) {
            Ok(v) => Complex64::new(v.value.norm_sqr() * g.value(t), 0.0),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        Interval::Line { envelope },
        spec,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(LMomentResult {
        value: q.value.re,
        error: q.error,
        truncation: q.truncation,
        x,
        heuristic: true,
    })
}
