//! ζ on (and near) the critical line.
//!
//! Two independent evaluators are provided so that each can check the other:
//!
//! * Euler–Maclaurin summation, valid for every `s ≠ 1` and used as the
//!   reference. Its truncation order is adjustable.
//! * Riemann–Siegel. For `t ≥ 500` the classical asymptotic series with the
//!   corrections C0..C4 is used. Below that the series cannot reach 1e-8
//!   (at `t = 10` its smallest term is around 1e-5), so the remainder is
//!   instead computed exactly as a contour integral through the saddle
//!   point, which converges like a Gaussian.

use core::f64::consts::PI;

use crate::special::ln_gamma;
use crate::sum::ComplexSum;
use crate::{Complex64, Error, Result};

/// B_{2k} / (2k)! for k = 1..30.
const BERNOULLI_OVER_FACTORIAL: [f64; 30] = [
    0.083_333_333_333_333_33,
    -0.001_388_888_888_888_889,
    3.306_878_306_878_307e-05,
    -8.267_195_767_195_768e-07,
    2.087_675_698_786_81e-08,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_2e-19,
    3.534_707_039_629_467e-21,
    -8.953_517_427_037_546e-23,
    2.267_952_452_337_683e-24,
    -5.744_790_668_872_202e-26,
    1.455_172_475_614_865e-27,
    -3.685_994_940_665_310_3e-29,
    9.336_734_257_095_045e-31,
    -2.365_022_415_700_63e-32,
    5.990_671_762_482_134e-34,
    -1.517_454_884_468_290_3e-35,
    3.843_758_125_454_189e-37,
    -9.736_353_072_646_691e-39,
    2.466_247_044_200_681e-40,
    -6.247_076_741_820_743e-42,
    1.582_403_024_464_491_4e-43,
    -4.008_273_685_948_936e-45,
    1.015_307_585_556_955_7e-46,
    -2.571_804_158_241_871_7e-48,
];

/// Largest supported Euler–Maclaurin order.
pub const MAX_EM_ORDER: usize = BERNOULLI_OVER_FACTORIAL.len();

/// Default Euler–Maclaurin order. Doubling it stays within the table, so the
/// doubled-order run is always available as an oracle.
pub const DEFAULT_EM_ORDER: usize = 15;

/// Results for `|t|` above this are computed but fall outside the range over
/// which the evaluators were cross-validated.
pub const VALIDATED_RANGE: f64 = 1.0e6;

/// Below this height the Riemann–Siegel evaluator switches from the
/// asymptotic series to the saddle-point integral.
pub const RS_ASYMPTOTIC_FROM: f64 = 500.0;

/// Smallest height accepted by the Riemann–Siegel method.
pub const RS_MIN_T: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaMethod {
    EulerMaclaurin,
    RiemannSiegel,
    /// Riemann–Siegel for `|t| ≥ 10`, Euler–Maclaurin below.
    Auto,
}

pub fn in_validated_range(t: f64) -> bool {
    libm::fabs(t) <= VALIDATED_RANGE
}

/// ζ(1/2 + it).
pub fn zeta_critical(t: f64, method: ZetaMethod) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::domain("t must be finite"));
    }
    match method {
        ZetaMethod::EulerMaclaurin => zeta_euler_maclaurin(Complex64::new(0.5, t), DEFAULT_EM_ORDER),
        ZetaMethod::RiemannSiegel => zeta_riemann_siegel(t),
        ZetaMethod::Auto => {
            if libm::fabs(t) >= RS_MIN_T {
                zeta_riemann_siegel(t)
            } else {
                zeta_euler_maclaurin(Complex64::new(0.5, t), DEFAULT_EM_ORDER)
            }
        }
    }
}

/// Riemann–Siegel θ(t) = arg Γ(1/4 + it/2) − (t/2) ln π, on the continuous
/// branch with θ(0) = 0.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    let lg = ln_gamma(Complex64::new(0.25, 0.5 * t))?;
    Ok(lg.im - 0.5 * t * libm::log(PI))
}

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t.
pub fn hardy_z(t: f64, method: ZetaMethod) -> Result<f64> {
    let z = zeta_critical(t, method)?;
    let theta = riemann_siegel_theta(t)?;
    Ok((z * Complex64::from_polar(1.0, theta)).re)
}

fn n_pow_minus_s(n: f64, s: Complex64) -> Complex64 {
    let ln = libm::log(n);
    let (sin, cos) = libm::sincos(-s.im * ln);
    Complex64::new(cos, sin) * libm::exp(-s.re * ln)
}

/// Euler–Maclaurin summation for ζ(s) with `order` Bernoulli correction
/// terms. The cut-off N grows with |s| and the order so that successive
/// correction terms shrink by roughly a factor 10.
pub fn zeta_euler_maclaurin(s: Complex64, order: usize) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("s must be finite"));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("pole of zeta at s = 1"));
    }
    if order == 0 || order > MAX_EM_ORDER {
        return Err(Error::domain("Euler–Maclaurin order must lie in 1..=30"));
    }
    if s.re < 1.0 - 2.0 * order as f64 {
        return Err(Error::domain("Euler–Maclaurin order too low for this Re s"));
    }
    let k = order as f64;
    let n = libm::ceil((s.norm() + 2.0 * k) / (2.0 * PI * 0.3)).max(10.0);
    if n > 1.0e8 {
        return Err(Error::domain("|s| too large for Euler–Maclaurin"));
    }
    let big_n = n as u64;

    let mut acc = ComplexSum::new();
    for j in 1..big_n {
        acc.add(n_pow_minus_s(j as f64, s));
    }
    let n_s = n_pow_minus_s(n, s);
    acc.add(n_s * n / (s - 1.0));
    acc.add(n_s * 0.5);

    // term_k = b_k · s(s+1)···(s+2k−2) · N^{−s−2k+1}
    let inv_n = 1.0 / n;
    let mut rising = s;
    let mut power = n_s * inv_n;
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().take(order).enumerate() {
        acc.add(rising * power * *b);
        let m = 2.0 * j as f64;
        rising *= (s + m + 1.0) * (s + m + 2.0);
        power *= inv_n * inv_n;
    }
    let z = acc.value();
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite("zeta_euler_maclaurin"))
    }
}

/// Riemann–Siegel evaluation of ζ(1/2 + it) for |t| ≥ 10.
pub fn zeta_riemann_siegel(t: f64) -> Result<Complex64> {
    if !t.is_finite() || libm::fabs(t) < RS_MIN_T {
        return Err(Error::domain("Riemann–Siegel requires finite |t| >= 10"));
    }
    if t < 0.0 {
        return zeta_riemann_siegel(-t).map(|z| z.conj());
    }
    if t >= RS_ASYMPTOTIC_FROM {
        let z = rs_asymptotic_z(t)?;
        let theta = riemann_siegel_theta(t)?;
        Ok(Complex64::from_polar(z, -theta))
    } else {
        rs_saddle(t)
    }
}

/// Z(t) from the main sum and the first five asymptotic corrections.
fn rs_asymptotic_z(t: f64) -> Result<f64> {
    let theta = riemann_siegel_theta(t)?;
    let a = libm::sqrt(t / (2.0 * PI));
    let n = libm::floor(a);
    let p = a - n;
    let big_n = n as u64;

    let mut main = crate::sum::NeumaierSum::new();
    for j in 1..=big_n {
        let x = j as f64;
        main.add(libm::cos(theta - t * libm::log(x)) / libm::sqrt(x));
    }

    let d = psi_derivatives(p);
    let pi2 = PI * PI;
    let pi4 = pi2 * pi2;
    let pi6 = pi4 * pi2;
    let pi8 = pi4 * pi4;
    let c = [
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18_432.0 * pi4),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5_308_416.0 * pi6),
        d[0] / (128.0 * pi2) + 19.0 * d[4] / (24_576.0 * pi4) + 11.0 * d[8] / (5_898_240.0 * pi6)
            + d[12] / (2_038_431_744.0 * pi8),
    ];
    let inv_a = 1.0 / a;
    let mut corr = 0.0;
    let mut pow = 1.0;
    for ck in c {
        corr += ck * pow;
        pow *= inv_a;
    }
    let sign = if big_n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(2.0 * main.value() + sign * corr / libm::sqrt(a))
}

/// Ψ(z) = cos(2π(z² − z − 1/16)) / cos(2πz), an entire function.
fn psi(z: Complex64) -> Complex64 {
    let num = ((z * z - z - 1.0 / 16.0) * (2.0 * PI)).cos();
    let den = (z * (2.0 * PI)).cos();
    num / den
}

/// Ψ and its first twelve derivatives at real p, via the Cauchy integral
/// over the unit circle around p. The nodes are offset by half a step so
/// that none lands on the real axis, where the removable singularities of
/// the quotient sit.
fn psi_derivatives(p: f64) -> [f64; 13] {
    const M: usize = 64;
    let mut coeff = [Complex64::new(0.0, 0.0); 13];
    for j in 0..M {
        let phi = 2.0 * PI * (j as f64 + 0.5) / M as f64;
        let w = Complex64::from_polar(1.0, phi);
        let f = psi(Complex64::new(p, 0.0) + w);
        let mut wk = Complex64::new(1.0, 0.0);
        let w_conj = w.conj();
        for c in coeff.iter_mut() {
            *c += f * wk;
            wk *= w_conj;
        }
    }
    let mut out = [0.0; 13];
    let mut factorial = 1.0;
    for (k, c) in coeff.iter().enumerate() {
        if k > 0 {
            factorial *= k as f64;
        }
        out[k] = factorial * c.re / M as f64;
    }
    out
}

/// ζ(1/2+it) = R + e^{−2iθ} conj(R), where R is the sum over n ≤ N plus the
/// saddle integral ∫ x^{−s} e^{πix²} / (e^{πix} − e^{−πix}) dx along the line
/// through N + 1/2 at angle π/4.
fn rs_saddle(t: f64) -> Result<Complex64> {
    let s = Complex64::new(0.5, t);
    let a = libm::sqrt(t / (2.0 * PI));
    let n = libm::floor(a);
    let big_n = n as u64;

    let mut r = ComplexSum::new();
    for j in 1..=big_n {
        r.add(n_pow_minus_s(j as f64, s));
    }

    let dir = Complex64::from_polar(1.0, PI / 4.0);
    let center = n + 0.5;
    const H: f64 = 0.02;
    const HALF_WIDTH: f64 = 6.0;
    let steps = libm::round(HALF_WIDTH / H) as i64;
    let mut integral = ComplexSum::new();
    for j in -steps..=steps {
        let x = Complex64::new(center, 0.0) + dir * (j as f64 * H);
        let ipx = Complex64::i() * PI * x;
        let f = (-s * x.ln() + ipx * x).exp() / (ipx.exp() - (-ipx).exp());
        integral.add(f);
    }
    r.add(-integral.value() * dir * H);

    let r = r.value();
    let theta = riemann_siegel_theta(t)?;
    let z = r + Complex64::from_polar(1.0, -2.0 * theta) * r.conj();
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite("zeta_riemann_siegel"))
    }
}
