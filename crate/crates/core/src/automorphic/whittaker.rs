//! φ_ℓ(g, ν) = y^{1/2+ν} e^{2iℓθ} and its Jacquet transform
//! 𝒜^δφ(g) = ∫ e(−δξ) φ(w n[ξ] g) dξ, w = k[π/2].

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::group::GroupPoint;
use crate::special::quadrature::{integrate, integrate_with_breaks, Envelope, Interval, QuadratureSpec};
use crate::special::{additive_character, bessel_k_imag, complex_gamma, unit_phase};
use crate::{Complex64, Error, Result};

/// Sign δ = ±1 of the additive character in the Jacquet integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

pub fn phi_ell(g: &GroupPoint, nu: Complex64, ell: i32) -> Complex64 {
    let y_pow = (Complex64::new(0.5, 0.0) + nu) * libm::log(g.y);
    y_pow.exp() * unit_phase(2.0 * f64::from(ell) * g.theta)
}

/// φ_ℓ(w n[X] a[y] k[θ]) continued to complex X:
/// (y/(X² + y²))^{1/2+ν} ((X − iy)/(X + iy))^ℓ e^{2iℓθ}.
///
/// With X = ξ + x this is the Jacquet integrand without its character.
/// The principal power of X² + y² is continuous on the real line and on
/// the deformed tails used below, neither of which meets the branch points
/// X = ±iy.
fn phi_after_inversion(x_big: Complex64, y: f64, nu: Complex64, ell: i32, theta_phase: Complex64) -> Complex64 {
    let iy = Complex64::new(0.0, y);
    let w = x_big * x_big + y * y;
    let power = ((Complex64::new(0.5, 0.0) + nu) * (Complex64::new(y, 0.0) / w).ln()).exp();
    let ratio = (x_big - iy) / (x_big + iy);
    power * ratio.powi(ell) * theta_phase
}

/// Half-length L of the real segment. Past it the integral leaves the real
/// axis along X = ±L − iδs, where e(−δX) decays like e^{−2πs}.
fn real_half_length(y: f64, nu: Complex64) -> f64 {
    (2.0 * y + 2.0).max(0.5 * libm::fabs(nu.im) + 6.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacquetValue {
    pub value: Complex64,
    /// Sum of the quadrature error estimates of the three pieces.
    pub error: f64,
}

/// The Jacquet transform by quadrature: the real segment [−L, L] plus the
/// two tails, each rotated onto a ray into the half-plane where e(−δX)
/// decays. Requires Re ν > −1/2.
pub fn jacquet_transform(nu: Complex64, ell: i32, delta: Sign, g: &GroupPoint, spec: &QuadratureSpec) -> Result<JacquetValue> {
    spec.validate()?;
    if !nu.re.is_finite() || !nu.im.is_finite() || !(nu.re > -0.5) {
        return Err(Error::domain("Jacquet transform needs finite ν with Re ν > −1/2"));
    }
    let (x, y) = (g.x, g.y);
    let d = delta.value();
    let l = real_half_length(y, nu);
    let theta_phase = unit_phase(2.0 * f64::from(ell) * g.theta);

    let piece_tol = spec.with_tolerance(spec.abs_tol / 3.0);
    let mut breaks: Vec<f64> = Vec::new();
    let steps = libm::ceil(2.0 * l) as i32;
    for j in 0..=steps {
        breaks.push(-l + 2.0 * l * f64::from(j) / f64::from(steps));
    }
    let real = integrate_with_breaks(
        |xi| additive_character(-d * xi) * phi_after_inversion(Complex64::new(xi, 0.0), y, nu, ell, theta_phase),
        &breaks,
        &piece_tol,
    )?;

    // |φ| on the rays: |X| ≥ L ≥ 2y gives |X² + y²| ≥ L²/4, |arg| ≤ π and a
    // ratio of modulus at most 3
    let amplitude = libm::pow(4.0 * y / (l * l), 0.5 + nu.re)
        * libm::exp(PI * libm::fabs(nu.im))
        * libm::pow(3.0, f64::from(ell.unsigned_abs()));
    let envelope = Envelope::Exponential {
        amplitude,
        rate: 2.0 * PI,
        origin: 0.0,
    };
    let down = Complex64::new(0.0, -d);
    let ray = |start: f64| {
        integrate(
            |s| {
                let xb = Complex64::new(start, 0.0) + down * s;
                let phase = additive_character(-d * start) * libm::exp(-2.0 * PI * s);
                phase * phi_after_inversion(xb, y, nu, ell, theta_phase)
            },
            Interval::Above { a: 0.0, envelope },
            &piece_tol,
        )
    };
    // ∫_L^∞ = ∫_ray(L) dX and ∫_{−∞}^{−L} = −∫_ray(−L) dX, with dX = −iδ ds
    let right = ray(l)?;
    let left = ray(-l)?;
    let tails = (right.value - left.value) * down;

    let value = (real.value + tails) * additive_character(d * x);
    Ok(JacquetValue {
        value,
        error: real.error + right.error + left.error,
    })
}

/// 𝒜^δφ₀(g) = e(δx) · 2π^{1/2+ν} √y K_ν(2πy) / Γ(1/2+ν), for ν = ir.
pub fn jacquet_closed_form(nu: Complex64, delta: Sign, g: &GroupPoint) -> Result<Complex64> {
    if nu.re != 0.0 {
        return Err(Error::domain("closed form implemented for purely imaginary ν only"));
    }
    Ok(jacquet_closed_form_prefactor(nu)?
        * libm::sqrt(g.y)
        * bessel_k_imag(nu.im, 2.0 * PI * g.y)?
        * additive_character(delta.value() * g.x))
}

/// 2π^{1/2+ν} / Γ(1/2+ν)
pub(crate) fn jacquet_closed_form_prefactor(nu: Complex64) -> Result<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let pi_pow = ((half + nu) * libm::log(PI)).exp();
    Ok(pi_pow * 2.0 / complex_gamma(half + nu)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn phi_at_zero_angle() {
        let g = GroupPoint::new(0.7, 2.0, 0.0).unwrap();
        let v = phi_ell(&g, c(0.25, 0.0), 3);
        assert!((v - c(libm::pow(2.0, 0.75), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn phi_modulus_for_imaginary_nu() {
        let g = GroupPoint::new(0.0, 2.0, 0.3).unwrap();
        assert!((phi_ell(&g, c(0.0, 1.0), 1).norm() - libm::sqrt(2.0)).abs() < 1e-15);
    }

    #[test]
    fn phi_direct_formula() {
        let g = GroupPoint::new(0.5, 2.0, 0.1).unwrap();
        let want = c(libm::pow(2.0, 0.75), 0.0) * c(libm::cos(0.4), libm::sin(0.4));
        assert!((phi_ell(&g, c(0.25, 0.0), 2) - want).norm() < 1e-15);
    }

    #[test]
    fn inversion_formula_matches_group_action() {
        // w n[X] a[y] k[θ] computed with matrices
        let (xb, y, th) = (0.37, 0.8, 0.2);
        let g = GroupPoint::new(xb, y, th).unwrap();
        let h = g.left_mul(&[[0.0, 1.0], [-1.0, 0.0]]).unwrap();
        let nu = c(0.1, 2.0);
        let direct = phi_ell(&h, nu, 2);
        let formula = phi_after_inversion(c(xb, 0.0), y, nu, 2, unit_phase(4.0 * th));
        assert!((direct - formula).norm() < 1e-13);
    }

    #[test]
    fn closed_form_identity_at_unit_height() {
        let g = GroupPoint::upper(0.0, 1.0).unwrap();
        let nu = c(0.0, 1.0);
        let q = jacquet_transform(nu, 0, Sign::Plus, &g, &QuadratureSpec::default()).unwrap();
        let k = jacquet_closed_form(nu, Sign::Plus, &g).unwrap();
        assert!((q.value - k).norm() < 1e-8, "{} vs {}", q.value, k);
    }

    #[test]
    fn closed_form_needs_imaginary_nu() {
        assert!(jacquet_closed_form(c(0.25, 0.0), Sign::Plus, &GroupPoint::upper(0.0, 1.0).unwrap()).is_err());
        let g = GroupPoint::upper(0.0, 1.0).unwrap();
        assert!(jacquet_transform(c(-0.6, 0.0), 0, Sign::Plus, &g, &QuadratureSpec::default()).is_err());
    }
}
