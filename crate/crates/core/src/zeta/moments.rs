//! Weighted moments ∫ |ζ(1/2+it)|^{2k} g(t) dt and the sup-norm scan of
//! |ζ(1/2+it)| against t^{1/6} log t.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::critical::{zeta_critical, ZetaMethod};
use crate::special::quadrature::{integrate_with_breaks, QuadratureSpec};
use crate::{Complex64, Error, Result};

/// g(t) = scale · exp(−((t − center)/width)²)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    pub center: f64,
    pub width: f64,
    pub scale: f64,
}

impl WeightSpec {
    pub fn gaussian(center: f64, width: f64) -> Result<Self> {
        let w = WeightSpec {
            center,
            width,
            scale: 1.0,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.scale *= factor;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.center.is_finite() {
            return Err(Error::domain("weight center must be finite"));
        }
        if !(self.width > 0.0) || !self.width.is_finite() {
            return Err(Error::domain("weight width must be positive and finite"));
        }
        if !(self.scale >= 0.0) || !self.scale.is_finite() {
            return Err(Error::domain("weight scale must be non-negative and finite"));
        }
        Ok(())
    }

    pub fn value(&self, t: f64) -> f64 {
        let u = (t - self.center) / self.width;
        self.scale * libm::exp(-u * u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub value: f64,
    /// Quadrature error estimate plus the truncated tail bound.
    pub error: f64,
    /// Bound on the weighted integrand outside the integrated range.
    pub truncation: f64,
    /// The integrated range.
    pub support: (f64, f64),
    pub panels: usize,
    /// Set for k ≥ 3, where nothing is known to check the result against.
    pub experimental: bool,
}

/// Crude pointwise bound |ζ(1/2+it)| ≤ 3 (|t| + 3)^{1/4}, of convexity
/// type. `weighted_support` sizes the truncation of Gaussian weights with
/// it; the tests sample it.
#[cfg(test)]
fn zeta_envelope(t: f64) -> f64 {
    3.0 * libm::pow(libm::fabs(t) + 3.0, 0.25)
}

/// Half-width c·Δ such that ∫_{|t−T₀|>cΔ} envelope(t)^{2k} g(t) dt ≤ target,
/// together with that tail bound.
fn weighted_support(k: u32, g: &WeightSpec, target: f64) -> (f64, f64) {
    // On u = |t − T₀| ≥ cΔ write (A+u)^p e^{−u²/Δ²} ≤ M(c) e^{−u²/(2Δ²)} with
    // A = |T₀| + 3, p = k/2; M(c) is attained at u = cΔ once the bracket is
    // decreasing there.
    let a = libm::fabs(g.center) + 3.0;
    let p = 0.5 * k as f64;
    let delta = g.width;
    let amp = g.scale * libm::pow(3.0, 2.0 * k as f64);
    let mut c: f64 = 3.0;
    loop {
        let u = c * delta;
        let decreasing = u * (a + u) >= 2.0 * p * delta * delta;
        let peak = libm::pow(a + u, p) * libm::exp(-0.5 * c * c);
        let tail = 2.0 * amp * peak * delta * libm::sqrt(PI / 2.0) * libm::erfc(c / core::f64::consts::SQRT_2);
        if (decreasing && tail <= target) || c > 60.0 {
            return (u, tail);
        }
        c += 0.25;
    }
}

/// Break points on [a, b] spaced at half the local oscillation scale
/// 2π / log(|t|/2π) of ζ on the critical line.
pub(crate) fn oscillation_breaks(a: f64, b: f64) -> Vec<f64> {
    let mut out = alloc::vec![a];
    let mut x = a;
    loop {
        let scale = 2.0 * PI / libm::log(libm::fabs(x) / (2.0 * PI)).max(1.0);
        x += 0.5 * scale;
        if x >= b {
            break;
        }
        out.push(x);
    }
    out.push(b);
    out
}

fn zeta_power(t: f64, k: u32) -> Result<f64> {
    let z = zeta_critical(t, ZetaMethod::Auto)?;
    Ok(libm::pow(z.norm_sqr(), k as f64))
}

/// ∫ |ζ(1/2+it)|^{2k} g(t) dt over the line.
pub fn moment_integral(k: u32, g: &WeightSpec, spec: &QuadratureSpec) -> Result<MomentResult> {
    if k < 1 {
        return Err(Error::domain("moment power k must be at least 1"));
    }
    g.validate()?;
    spec.validate()?;
    if g.scale == 0.0 {
        return Ok(MomentResult {
            value: 0.0,
            error: 0.0,
            truncation: 0.0,
            support: (g.center, g.center),
            panels: 0,
            experimental: k >= 3,
        });
    }
    let (half, truncation) = weighted_support(k, g, spec.abs_tol / 10.0);
    if truncation > spec.abs_tol / 10.0 {
        return Err(Error::TruncationInsufficient {
            what: "moment_integral",
            tail: truncation,
            tolerance: spec.abs_tol / 10.0,
        });
    }
    let (a, b) = (g.center - half, g.center + half);
    let breaks = oscillation_breaks(a, b);
    let mut failure = None;
    let inner = spec.with_tolerance(spec.abs_tol - truncation);
    let q = integrate_with_breaks(
        |t| match zeta_power(t, k) {
            Ok(v) => Complex64::new(v * g.value(t), 0.0),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        &breaks,
        &inner,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(MomentResult {
        value: q.value.re,
        error: q.error + truncation,
        truncation,
        support: (a, b),
        panels: q.panels,
        experimental: k >= 3,
    })
}

/// ∫_{−T}^{T} |ζ(1/2+it)|⁴ dt, computed as 2∫₀^T using ζ(1/2−it) = conj ζ(1/2+it).
pub fn plain_fourth_moment(t_max: f64, spec: &QuadratureSpec) -> Result<MomentResult> {
    if !(t_max >= 0.0) || !t_max.is_finite() {
        return Err(Error::domain("T must be finite and non-negative"));
    }
    spec.validate()?;
    if t_max == 0.0 {
        return Ok(MomentResult {
            value: 0.0,
            error: 0.0,
            truncation: 0.0,
            support: (0.0, 0.0),
            panels: 0,
            experimental: false,
        });
    }
    let breaks = oscillation_breaks(0.0, t_max);
    let mut failure = None;
    let q = integrate_with_breaks(
        |t| match zeta_power(t, 2) {
            Ok(v) => Complex64::new(v, 0.0),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        &breaks,
        &spec.with_tolerance(spec.abs_tol / 2.0),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(MomentResult {
        value: 2.0 * q.value.re,
        error: 2.0 * q.error,
        truncation: 0.0,
        support: (-t_max, t_max),
        panels: q.panels,
        experimental: false,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    /// (t, |ζ(1/2+it)| / (t^{1/6} log t)) at every sample.
    pub points: Vec<(f64, f64)>,
    pub max_ratio: f64,
    pub argmax: f64,
    pub min_ratio: f64,
}

/// Samples |ζ(1/2+it)| / (t^{1/6} log t) on an even grid over [t_lo, t_hi]
/// (both ends included; a single sample sits at t_lo).
pub fn subconvexity_ratio_scan(t_lo: f64, t_hi: f64, samples: usize) -> Result<ScanReport> {
    if !(t_lo >= 2.0) || !(t_hi > t_lo) || !t_hi.is_finite() {
        return Err(Error::domain("scan needs 2 <= t_lo < t_hi"));
    }
    if samples < 1 {
        return Err(Error::domain("scan needs at least one sample"));
    }
    let mut points = Vec::with_capacity(samples);
    for j in 0..samples {
        let t = if samples == 1 {
            t_lo
        } else {
            t_lo + (t_hi - t_lo) * j as f64 / (samples - 1) as f64
        };
        points.push((t, subconvexity_ratio(t)?));
    }
    let (mut argmax, mut max_ratio) = points[0];
    let mut min_ratio = points[0].1;
    for &(t, r) in &points[1..] {
        if r > max_ratio {
            max_ratio = r;
            argmax = t;
        }
        min_ratio = min_ratio.min(r);
    }
    Ok(ScanReport {
        points,
        max_ratio,
        argmax,
        min_ratio,
    })
}

/// |ζ(1/2+it)| / (t^{1/6} log t)
pub fn subconvexity_ratio(t: f64) -> Result<f64> {
    if !(t >= 2.0) || !t.is_finite() {
        return Err(Error::domain("ratio needs finite t >= 2"));
    }
    let z = zeta_critical(t, ZetaMethod::Auto)?;
    Ok(z.norm() / (libm::pow(t, 1.0 / 6.0) * libm::log(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_validation() {
        assert!(WeightSpec::gaussian(0.0, 0.0).is_err());
        assert!(WeightSpec::gaussian(f64::NAN, 1.0).is_err());
        let g = WeightSpec::gaussian(5.0, 2.0).unwrap();
        assert_eq!(g.value(5.0), 1.0);
        assert!((g.value(7.0) - libm::exp(-1.0)).abs() < 1e-16);
    }

    #[test]
    fn envelope_dominates_sampled_values() {
        for j in 0..400 {
            let t = j as f64 * 2.5;
            let z = zeta_critical(t, ZetaMethod::Auto).unwrap();
            assert!(z.norm() <= zeta_envelope(t));
        }
    }

    #[test]
    fn support_tail_meets_target() {
        let g = WeightSpec::gaussian(50.0, 10.0).unwrap();
        let (half, tail) = weighted_support(2, &g, 1e-11);
        assert!(tail <= 1e-11);
        assert!(half > 30.0 && half < 100.0);
    }

    #[test]
    fn breaks_cover_interval() {
        let b = oscillation_breaks(-10.0, 110.0);
        assert_eq!(b[0], -10.0);
        assert_eq!(*b.last().unwrap(), 110.0);
        assert!(b.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn fourth_moment_at_zero_length() {
        let r = plain_fourth_moment(0.0, &QuadratureSpec::default()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn scan_rejects_bad_ranges() {
        assert!(subconvexity_ratio_scan(1.0, 10.0, 5).is_err());
        assert!(subconvexity_ratio_scan(10.0, 10.0, 5).is_err());
        assert!(subconvexity_ratio_scan(2.0, 10.0, 0).is_err());
    }

    #[test]
    fn single_sample_scan() {
        let r = subconvexity_ratio_scan(100.0, 200.0, 1).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.argmax, 100.0);
        assert_eq!(r.max_ratio, subconvexity_ratio(100.0).unwrap());
    }
}
