use core::f64::consts::PI;

use crate::{Complex64, Error, Result};

/// B_{2k} / (2k(2k−1)), k = 1..8: Stirling series coefficients.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// ln(2π)/2
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Principal-continuous log-gamma on the right half-plane `Re z > 0`.
///
/// The imaginary part is the continuous branch (not reduced to (−π, π]),
/// which is what the Riemann–Siegel θ function needs.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() || !z.re.is_finite() {
        return Err(Error::domain("ln_gamma requires finite z with Re z > 0"));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < 10.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + series - shift)
}

/// Γ(s) for complex `s`; reflection is used on `Re s < 1/2`.
pub fn complex_gamma(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("complex_gamma requires a finite argument"));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == libm::floor(s.re) {
        return Err(Error::GammaPole(s.re as i64));
    }
    let value = if s.re < 0.5 {
        let reflected = ln_gamma(Complex64::new(1.0, 0.0) - s)?.exp();
        Complex64::new(PI, 0.0) / ((s * PI).sin() * reflected)
    } else {
        ln_gamma(s)?.exp()
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("complex_gamma"))
    }
}
