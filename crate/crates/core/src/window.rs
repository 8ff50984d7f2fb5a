//! Test functions W(u) for weighted convolution sums Σ a(n) b(n+m) W(n/m).
//!
//! The argument is n/m, not n/N: an indicator window on [lo, hi] picks out
//! lo·m ≤ n ≤ hi·m.

use core::f64::consts::PI;

use crate::special::complex_gamma;
use crate::{Complex64, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowSpec {
    /// W ≡ value
    Constant { value: f64 },
    /// 1 on [lo, hi], 0 elsewhere
    Indicator { lo: f64, hi: f64 },
    /// exp(−((u − center)/width)²)
    Gaussian { center: f64, width: f64 },
    /// (1 + u/scale)^{−power}
    RationalDecay { scale: f64, power: f64 },
    /// The weight Γ(2α+2) (2π)^{−2α−2} (u(u+1))^α / (2u+1)^{2α+2}, which is
    /// what integrating the m-th Fourier coefficient of the squared seed
    /// expansion over y ∈ (0, ∞) produces (times m^{−2}).
    SeedInduced { alpha: f64 },
}

impl Default for WindowSpec {
    fn default() -> Self {
        WindowSpec::Constant { value: 1.0 }
    }
}

fn finite(xs: &[f64]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

impl WindowSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            WindowSpec::Constant { value } => finite(&[value]) && value >= 0.0,
            WindowSpec::Indicator { lo, hi } => finite(&[lo, hi]) && lo <= hi,
            WindowSpec::Gaussian { center, width } => finite(&[center, width]) && width > 0.0,
            WindowSpec::RationalDecay { scale, power } => finite(&[scale, power]) && scale > 0.0 && power > 0.0,
            WindowSpec::SeedInduced { alpha } => finite(&[alpha]) && (0.0..=80.0).contains(&alpha),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain("invalid window parameters"))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, WindowSpec::Constant { value } if *value == 0.0)
    }

    /// W(u) for u ≥ 0.
    pub fn eval(&self, u: f64) -> f64 {
        match *self {
            WindowSpec::Constant { value } => value,
            WindowSpec::Indicator { lo, hi } => {
                if lo <= u && u <= hi {
                    1.0
                } else {
                    0.0
                }
            }
            WindowSpec::Gaussian { center, width } => {
                let v = (u - center) / width;
                libm::exp(-v * v)
            }
            WindowSpec::RationalDecay { scale, power } => libm::pow(1.0 + u / scale, -power),
            WindowSpec::SeedInduced { alpha } => seed_window(alpha, u),
        }
    }

    /// An interval outside which W(u) ≤ tol for u ≥ 0 (`hi` may be infinite).
    pub fn support(&self, tol: f64) -> (f64, f64) {
        match *self {
            WindowSpec::Constant { value } => {
                if value <= tol {
                    (0.0, 0.0)
                } else {
                    (0.0, f64::INFINITY)
                }
            }
            WindowSpec::Indicator { lo, hi } => (lo.max(0.0), hi.max(0.0)),
            WindowSpec::Gaussian { center, width } => {
                if tol >= 1.0 {
                    return (center, center);
                }
                let r = width * libm::sqrt(-libm::log(tol));
                ((center - r).max(0.0), (center + r).max(0.0))
            }
            WindowSpec::RationalDecay { scale, power } => {
                if tol >= 1.0 {
                    return (0.0, 0.0);
                }
                (0.0, scale * (libm::pow(tol, -1.0 / power) - 1.0))
            }
            // decays like u^{−2} at infinity and vanishes at 0 for α > 0
            WindowSpec::SeedInduced { alpha } => {
                let c = seed_constant(alpha);
                (0.0, libm::sqrt(c / (4.0 * tol)).max(1.0))
            }
        }
    }
}

fn seed_constant(alpha: f64) -> f64 {
    let g = complex_gamma(Complex64::new(2.0 * alpha + 2.0, 0.0)).map_or(f64::INFINITY, |z| z.re);
    g * libm::pow(2.0 * PI, -2.0 * alpha - 2.0)
}

fn seed_window(alpha: f64, u: f64) -> f64 {
    if u <= 0.0 {
        return if alpha == 0.0 && u == 0.0 { seed_constant(alpha) } else { 0.0 };
    }
    // (u(u+1))^α / (2u+1)^{2α+2}, in logs to stay finite for large α
    let log = alpha * (libm::log(u) + libm::log1p(u)) - (2.0 * alpha + 2.0) * libm::log1p(2.0 * u);
    seed_constant(alpha) * libm::exp(log)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        assert_eq!(WindowSpec::default().eval(123.0), 1.0);
        let ind = WindowSpec::Indicator { lo: 0.5, hi: 2.0 };
        assert_eq!((ind.eval(0.4), ind.eval(0.5), ind.eval(2.0), ind.eval(2.1)), (0.0, 1.0, 1.0, 0.0));
        let g = WindowSpec::Gaussian { center: 1.0, width: 0.5 };
        assert!((g.eval(1.5) - libm::exp(-1.0)).abs() < 1e-16);
        let r = WindowSpec::RationalDecay { scale: 2.0, power: 3.0 };
        assert!((r.eval(2.0) - 0.125).abs() < 1e-16);
    }

    #[test]
    fn supports_bound_the_window() {
        let tol = 1e-9;
        for w in [
            WindowSpec::Gaussian { center: 3.0, width: 0.7 },
            WindowSpec::RationalDecay { scale: 1.5, power: 2.0 },
            WindowSpec::SeedInduced { alpha: 2.0 },
        ] {
            let (lo, hi) = w.support(tol);
            for u in [lo * 0.5, hi * 1.01, hi * 3.0] {
                if u < lo || u > hi {
                    assert!(w.eval(u) <= tol * 1.0001, "{w:?} at {u}");
                }
            }
        }
    }

    #[test]
    fn seed_window_matches_its_integral() {
        // ∫₀^∞ y^{2α+1} (n(n+m))^α e^{−2π(2n+m)y} dy = m^{−2} W(n/m)
        let (alpha, n, m) = (2.0, 3.0, 2.0);
        let direct = libm::pow(n * (n + m), alpha) * 120.0 / libm::pow(2.0 * PI * (2.0 * n + m), 6.0);
        let w = WindowSpec::SeedInduced { alpha }.eval(n / m) / (m * m);
        assert!((direct - w).abs() < 1e-15 * direct.abs().max(1e-300) * 10.0);
    }

    #[test]
    fn invalid_windows() {
        assert!(WindowSpec::Indicator { lo: 2.0, hi: 1.0 }.validate().is_err());
        assert!(WindowSpec::Gaussian { center: 0.0, width: 0.0 }.validate().is_err());
        assert!(WindowSpec::Constant { value: -1.0 }.validate().is_err());
        assert!(WindowSpec::Constant { value: 0.0 }.is_zero());
    }
}
