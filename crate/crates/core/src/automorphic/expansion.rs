//! Evaluation of a Maass form through its Fourier expansion in Iwasawa
//! coordinates, and the Casimir operator by finite differences.
//!
//! The expansion is
//!
//! ```text
//! λ^{(ℓ)}(g) = c_ℓ(ν) Σ_{n≠0} ρ(n)/√|n| · 𝒜^{sgn n} φ_ℓ(a[|n|] g, ν)
//! ```
//!
//! with c_ℓ(ν) = |π^{−2ν} Γ(|ℓ|+ν+1/2) / Γ(|ℓ|−ν+1/2)|^{1/2}, which is 1 for
//! ν = ir. Coefficients at negative n are ρ(−n) = ±ρ(n) according to the
//! parity of the form. Since a[n]·n[x]a[y]k[θ] = n[nx]a[ny]k[θ], each term
//! is a Jacquet transform at (nx, ny, θ).

use core::f64::consts::PI;

use super::form::MaassForm;
use super::whittaker::{jacquet_closed_form_prefactor, jacquet_transform, Sign};
use crate::group::GroupPoint;
use crate::special::quadrature::QuadratureSpec;
use crate::special::{additive_character, bessel_k_imag, complex_gamma};
use crate::sum::ComplexSum;
use crate::{Complex64, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Backend {
    /// K-Bessel closed form; ℓ = 0 only.
    BesselClosedForm,
    /// Numerical Jacquet transform of every term.
    JacquetQuadrature(QuadratureSpec),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaassValue {
    pub value: Complex64,
    /// Bound on the omitted terms |n| > N_trunc.
    pub tail_bound: f64,
    /// Accumulated quadrature error estimates (zero for the closed form).
    pub quadrature_error: f64,
}

/// c_ℓ(ν)², checked to be a unit complex number for ν = ir.
fn gamma_ratio(nu: Complex64, ell: i32) -> Result<Complex64> {
    let a = Complex64::new(f64::from(ell.unsigned_abs()) + 0.5, 0.0);
    let pi_pow = (-2.0 * nu * libm::log(PI)).exp();
    Ok(pi_pow * complex_gamma(a + nu)? / complex_gamma(a - nu)?)
}

/// Bound on Σ_{n>N} |ρ(n)/√n · 2𝒜φ₀(a[n]g)| for ℓ = 0, from |ρ(n)| ≤ 2n,
/// |K_{ir}(u)| ≤ K₀(u) ≤ √(π/(2u)) e^{−u} and |2π^{1/2+ir}/Γ(1/2+ir)| =
/// 2√(cosh πr).
pub fn expansion_tail_bound(r: f64, y: f64, n_trunc: usize) -> f64 {
    let c = 2.0 * libm::sqrt(libm::cosh(PI * r));
    // term(n) = 2 · 2n/√n · c · √(ny) · √(π/(4πny)) e^{−2πny} = 2c√n e^{−2πny}
    let mut sum = 0.0;
    let q = libm::exp(-2.0 * PI * y);
    let mut n = n_trunc as f64 + 1.0;
    let mut term = 2.0 * c * libm::sqrt(n) * libm::exp(-2.0 * PI * y * n);
    while term > 1e-300 && term > sum * 1e-17 {
        sum += term;
        n += 1.0;
        term = 2.0 * c * libm::sqrt(n) * libm::exp(-2.0 * PI * y * n);
    }
    // what is left is dominated by a geometric series with ratio √2·q < 1
    // once n ≥ 1, as long as q < 1/√2
    if q * core::f64::consts::SQRT_2 < 1.0 {
        sum += term / (1.0 - q * core::f64::consts::SQRT_2);
    } else {
        sum = f64::INFINITY;
    }
    sum
}

/// The truncated expansion Σ_{0<|n|≤N_trunc} at g, for weight ℓ. If
/// `tolerance` is given and the tail bound (ℓ = 0) exceeds it, evaluation
/// fails with a truncation error.
pub fn maass_eval(
    form: &MaassForm,
    g: &GroupPoint,
    ell: i32,
    n_trunc: usize,
    backend: Backend,
    tolerance: Option<f64>,
) -> Result<MaassValue> {
    if n_trunc == 0 || n_trunc > form.n_coeff() {
        return Err(Error::domain("N_trunc must lie in 1..=N_coeff"));
    }
    let nu = Complex64::new(0.0, form.r());
    let ratio = gamma_ratio(nu, ell)?;
    if (ratio.norm() - 1.0).abs() > 1e-10 {
        return Err(Error::NonFinite("Gamma-ratio prefactor lost unit modulus"));
    }
    let prefactor = libm::sqrt(ratio.norm());

    let tail_bound = if ell == 0 {
        expansion_tail_bound(form.r(), g.y, n_trunc)
    } else {
        f64::NAN
    };
    if let Some(tol) = tolerance {
        if !(tail_bound <= tol) {
            return Err(Error::TruncationInsufficient {
                what: "maass_eval",
                tail: tail_bound,
                tolerance: tol,
            });
        }
    }

    let eps = form.parity().sign();
    let mut acc = ComplexSum::new();
    let mut quad_err = 0.0;
    match backend {
        Backend::BesselClosedForm => {
            if ell != 0 {
                return Err(Error::domain("the K-Bessel backend covers weight 0 only"));
            }
            let c = jacquet_closed_form_prefactor(nu)?;
            for n in 1..=n_trunc {
                let rho = form.coefficients()[n - 1];
                if rho == 0.0 {
                    continue;
                }
                let nf = n as f64;
                // ρ(n)/√n · √(ny) K(2πny) · (e(nx) + ε e(−nx))
                let k = bessel_k_imag(form.r(), 2.0 * PI * nf * g.y)?;
                let xr = n_times_x(n, g.x);
                let chars = additive_character(xr) + additive_character(-xr) * eps;
                acc.add(c * chars * (rho * libm::sqrt(g.y) * k));
            }
        }
        Backend::JacquetQuadrature(spec) => {
            let per_term = spec.with_tolerance(spec.abs_tol / n_trunc as f64);
            for n in 1..=n_trunc {
                let rho = form.coefficients()[n - 1];
                if rho == 0.0 {
                    continue;
                }
                let nf = n as f64;
                let gn = GroupPoint::new(n_times_x(n, g.x), nf * g.y, g.theta)?;
                let plus = jacquet_transform(nu, ell, Sign::Plus, &gn, &per_term)?;
                let minus = jacquet_transform(nu, ell, Sign::Minus, &gn, &per_term)?;
                let w = rho / libm::sqrt(nf);
                acc.add((plus.value + minus.value * eps) * w);
                quad_err += (plus.error + minus.error) * libm::fabs(w);
            }
        }
    }
    Ok(MaassValue {
        value: acc.value() * prefactor,
        tail_bound,
        quadrature_error: quad_err,
    })
}

/// n·x reduced mod 1 after reducing x, so that x and x + 1 give identical
/// arguments whenever x + 1 is exact.
pub(crate) fn n_times_x(n: usize, x: f64) -> f64 {
    let xr = x - libm::floor(x);
    let v = n as f64 * xr;
    v - libm::floor(v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirResult {
    /// Richardson-extrapolated Ω f(g).
    pub value: Complex64,
    /// Central differences at step h and h/2.
    pub coarse: Complex64,
    pub fine: Complex64,
    /// |value − fine|
    pub disagreement: f64,
    pub step: f64,
}

/// Default finite-difference step y/200.
pub fn default_casimir_step(g: &GroupPoint) -> f64 {
    g.y / 200.0
}

fn casimir_at_step<F>(f: &mut F, g: &GroupPoint, h: f64) -> Result<Complex64>
where
    F: FnMut(&GroupPoint) -> Result<Complex64>,
{
    let (x, y, t) = (g.x, g.y, g.theta);
    let at = |f: &mut F, dx: f64, dy: f64, dt: f64| f(&GroupPoint::new(x + dx, y + dy, t + dt)?);
    let f0 = at(f, 0.0, 0.0, 0.0)?;
    let fxx = (at(f, h, 0.0, 0.0)? - f0 * 2.0 + at(f, -h, 0.0, 0.0)?) / (h * h);
    let fyy = (at(f, 0.0, h, 0.0)? - f0 * 2.0 + at(f, 0.0, -h, 0.0)?) / (h * h);
    let fxt = (at(f, h, 0.0, h)? - at(f, h, 0.0, -h)? - at(f, -h, 0.0, h)? + at(f, -h, 0.0, -h)?) / (4.0 * h * h);
    Ok(-(fxx + fyy) * (y * y) + fxt * y)
}

/// Ω = −y²(∂²_x + ∂²_y) + y ∂_x∂_θ applied to `f` at g by central
/// differences at steps h and h/2, combined by Richardson extrapolation.
/// Fails with a step diagnostic when the extrapolated and fine values
/// disagree by more than `rel_tol` relative to max(|Ωf|, |f(g)|).
pub fn casimir_apply_fd<F>(mut f: F, g: &GroupPoint, h: f64, rel_tol: f64) -> Result<CasimirResult>
where
    F: FnMut(&GroupPoint) -> Result<Complex64>,
{
    if !(h > 0.0) || !(h < g.y) {
        return Err(Error::domain("finite-difference step must satisfy 0 < h < y"));
    }
    let coarse = casimir_at_step(&mut f, g, h)?;
    let fine = casimir_at_step(&mut f, g, 0.5 * h)?;
    let value = (fine * 4.0 - coarse) / 3.0;
    let disagreement = (value - fine).norm();
    let scale = value.norm().max(f(g)?.norm());
    if disagreement > rel_tol * scale {
        return Err(Error::StepTooLarge {
            disagreement,
            tolerance: rel_tol * scale,
        });
    }
    Ok(CasimirResult {
        value,
        coarse,
        fine,
        disagreement,
        step: h,
    })
}
