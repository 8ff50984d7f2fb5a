//! Truncated Poincaré series F(g) = Σ_{M ∈ SL(2,ℤ)} f(Mg) for the Gaussian
//! family f(h) = A·exp(−‖h‖²/σ²), ‖·‖ the Frobenius norm.
//!
//! Writing g = n[x]a[y]k[θ], the norm ‖Mg‖² = (a²+c²)y + ((ax+b)² + (cx+d)²)/y
//! does not see θ. Since ‖M‖² ≤ κ²‖Mg‖² with κ² = ‖g⁻¹‖² = (x²+y²+1)/y, every
//! term with ‖Mg‖² ≤ R has entries bounded by √(κ²R). Those matrices are
//! generated from coprime bottom rows (Stern–Brocot) lifted by the extended
//! Euclidean algorithm, without scanning an integer box.

use alloc::vec::Vec;

use num_integer::Integer;

use super::matrix::IntMatrix2;
use crate::group::GroupPoint;
use crate::sum::NeumaierSum;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincareKernel {
    pub amplitude: f64,
    pub sigma: f64,
}

impl PoincareKernel {
    pub fn gaussian(amplitude: f64, sigma: f64) -> Result<Self> {
        let k = PoincareKernel { amplitude, sigma };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.amplitude.is_finite() {
            return Err(Error::domain("kernel amplitude must be finite"));
        }
        if !(self.sigma > 0.0) || !self.sigma.is_finite() {
            return Err(Error::domain("kernel width must be positive and finite"));
        }
        Ok(())
    }

    pub fn eval_norm_sq(&self, r: f64) -> f64 {
        self.amplitude * libm::exp(-r / (self.sigma * self.sigma))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoincareValue {
    pub value: f64,
    /// Bound on the sum of |terms| with ‖Mg‖² > cutoff.
    pub tail_bound: f64,
    pub terms: usize,
    pub cutoff: f64,
}

/// ‖Mg‖_F² for M = (a b; c d).
pub fn frobenius_sq(mat: &IntMatrix2, g: &GroupPoint) -> f64 {
    let (a, b, c, d) = (mat.k as f64, mat.l as f64, mat.n as f64, mat.m as f64);
    let (x, y) = (g.x, g.y);
    let p = a * x + b;
    let q = c * x + d;
    (a * a + c * c) * y + (p * p + q * q) / y
}

/// κ² = ‖g⁻¹‖_F²
pub fn kappa_sq(g: &GroupPoint) -> f64 {
    (g.x * g.x + g.y * g.y + 1.0) / g.y
}

/// Upper bound for #{M ∈ SL(2,ℤ) : ‖Mg‖² ≤ r}, of the form a·r + b·√r + c.
pub fn count_bound(g: &GroupPoint, r: f64) -> f64 {
    let k2 = kappa_sq(g);
    let (a, b, c) = tail_constants(k2);
    a * r + b * libm::sqrt(r) + c
}

fn tail_constants(k2: f64) -> (f64, f64, f64) {
    (5.0 * core::f64::consts::PI * k2, 26.0 * libm::sqrt(k2), 2.0)
}

/// Σ_{‖Mg‖² > R} A e^{−‖Mg‖²/σ²}, bounded by integrating the count bound
/// against the kernel: A[a(R+σ²) + b(√R + σ²/(2√R)) + c] e^{−R/σ²}.
pub fn tail_bound(kernel: &PoincareKernel, g: &GroupPoint, cutoff: f64) -> f64 {
    let (a, b, c) = tail_constants(kappa_sq(g));
    let s2 = kernel.sigma * kernel.sigma;
    let rt = libm::sqrt(cutoff);
    libm::fabs(kernel.amplitude) * (a * (cutoff + s2) + b * (rt + s2 / (2.0 * rt)) + c) * libm::exp(-cutoff / s2)
}

/// Coprime pairs (p, q) with p, q ≥ 1 and max(p, q) ≤ e, by depth-first
/// descent of the Stern–Brocot tree.
fn coprime_positive_pairs(e: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if e < 1 {
        return out;
    }
    // each stack entry is an interval (a/b, c/d) of neighbours; its mediant
    // (a+c)/(b+d) is the next fraction
    let mut stack = alloc::vec![(0i64, 1i64, 1i64, 0i64)];
    while let Some((a, b, c, d)) = stack.pop() {
        let (p, q) = (a + c, b + d);
        if p > e || q > e {
            // both children have larger numerator and denominator than at
            // least one of the parents, so only one side can still fit
            if p > e && q > e {
                continue;
            }
            if p > e {
                // go left (smaller fractions) while the numerator overflows
                stack.push((a, b, p, q));
            } else {
                stack.push((p, q, c, d));
            }
            continue;
        }
        out.push((p, q));
        stack.push((p, q, c, d));
        stack.push((a, b, p, q));
    }
    out
}

fn bottom_rows(e: i64) -> Vec<(i64, i64)> {
    let mut rows = alloc::vec![(0, 1), (0, -1), (1, 0), (-1, 0)];
    for (p, q) in coprime_positive_pairs(e) {
        rows.extend([(p, q), (-p, -q), (p, -q), (-p, q)]);
    }
    rows
}

/// Integer j-range with |x0 + j·step| ≤ e, intersected into (lo, hi).
fn clamp_range(lo: &mut i64, hi: &mut i64, x0: i64, step: i64, e: i64) {
    if step == 0 {
        if x0.abs() > e {
            *lo = 1;
            *hi = 0;
        }
        return;
    }
    let (a, b) = ((-e - x0), (e - x0));
    let (j1, j2) = if step > 0 {
        (Integer::div_ceil(&a, &step), Integer::div_floor(&b, &step))
    } else {
        (Integer::div_ceil(&b, &step), Integer::div_floor(&a, &step))
    };
    *lo = (*lo).max(j1);
    *hi = (*hi).min(j2);
}

/// Every M ∈ SL(2,ℤ) with entries of absolute value ≤ e.
pub fn sl2z_in_box(e: i64) -> Vec<IntMatrix2> {
    let mut out = Vec::new();
    for (c, d) in bottom_rows(e) {
        // a·d − b·c = 1: from x·d + y·c = 1 take a = x, b = −y
        let eg = d.extended_gcd(&c);
        let (x, y) = if eg.gcd < 0 { (-eg.x, -eg.y) } else { (eg.x, eg.y) };
        let (a0, b0) = (x, -y);
        let (mut lo, mut hi) = (i64::MIN / 4, i64::MAX / 4);
        clamp_range(&mut lo, &mut hi, a0, c, e);
        clamp_range(&mut lo, &mut hi, b0, d, e);
        for j in lo..=hi {
            out.push(IntMatrix2::new(a0 + j * c, b0 + j * d, c, d));
        }
    }
    out
}

/// Truncated Poincaré series over ‖Mg‖² ≤ cutoff. If `tolerance` is given
/// and the tail bound exceeds it, the cutoff is reported as too small.
pub fn poincare_series(
    kernel: &PoincareKernel,
    g: &GroupPoint,
    cutoff: f64,
    tolerance: Option<f64>,
) -> Result<PoincareValue> {
    kernel.validate()?;
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(Error::domain("Poincaré cutoff must be positive and finite"));
    }
    let tail = tail_bound(kernel, g, cutoff);
    if let Some(tol) = tolerance {
        if tail > tol {
            return Err(Error::TruncationInsufficient {
                what: "poincare_series",
                tail,
                tolerance: tol,
            });
        }
    }
    let e_f = libm::floor(libm::sqrt(kappa_sq(g) * cutoff));
    if e_f > 1.0e5 {
        return Err(Error::MemoryGuard {
            requested: e_f as u64,
            cap: 100_000,
        });
    }
    let mut sum = NeumaierSum::new();
    let mut terms = 0;
    if kernel.amplitude != 0.0 {
        for mat in sl2z_in_box(e_f as i64) {
            let r = frobenius_sq(&mat, g);
            if r <= cutoff {
                sum.add(kernel.eval_norm_sq(r));
                terms += 1;
            }
        }
    }
    Ok(PoincareValue {
        value: sum.value(),
        tail_bound: tail,
        terms,
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn stern_brocot_lists_all_coprime_pairs_once() {
        for e in 1..=12 {
            let v = coprime_positive_pairs(e);
            let s: BTreeSet<_> = v.iter().copied().collect();
            let brute: BTreeSet<_> = (1..=e)
                .flat_map(|p| (1..=e).map(move |q| (p, q)))
                .filter(|&(p, q)| p.gcd(&q) == 1)
                .collect();
            assert_eq!(v.len(), s.len());
            assert_eq!(s, brute);
        }
    }

    #[test]
    fn sl2z_box_matches_scan() {
        for e in 1..=4i64 {
            let gen: BTreeSet<_> = sl2z_in_box(e).into_iter().collect();
            let mut brute = BTreeSet::new();
            for a in -e..=e {
                for b in -e..=e {
                    for c in -e..=e {
                        for d in -e..=e {
                            if a * d - b * c == 1 {
                                brute.insert(IntMatrix2::new(a, b, c, d));
                            }
                        }
                    }
                }
            }
            assert_eq!(gen, brute);
            assert_eq!(sl2z_in_box(e).len(), brute.len());
        }
    }

    #[test]
    fn count_bound_holds() {
        for (x, y) in [(0.0, 1.0), (0.3, 0.7), (-0.5, 2.5)] {
            let g = GroupPoint::upper(x, y).unwrap();
            let e = libm::floor(libm::sqrt(kappa_sq(&g) * 400.0)) as i64;
            let all = sl2z_in_box(e);
            for r in [1.0, 5.0, 20.0, 100.0, 400.0] {
                let count = all.iter().filter(|m| frobenius_sq(m, &g) <= r).count();
                assert!((count as f64) <= count_bound(&g, r), "({x},{y}) r={r}: {count}");
            }
        }
    }

    #[test]
    fn zero_kernel() {
        let k = PoincareKernel::gaussian(0.0, 1.0).unwrap();
        let v = poincare_series(&k, &GroupPoint::upper(0.1, 1.3).unwrap(), 30.0, None).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn small_cutoff_is_reported() {
        let k = PoincareKernel::gaussian(1.0, 2.0).unwrap();
        let g = GroupPoint::upper(0.1, 1.3).unwrap();
        let err = poincare_series(&k, &g, 4.0, Some(1e-8)).unwrap_err();
        assert!(matches!(err, Error::TruncationInsufficient { .. }));
    }

    #[test]
    fn tail_bounds_decrease_with_cutoff() {
        let k = PoincareKernel::gaussian(1.0, 1.5).unwrap();
        let g = GroupPoint::upper(0.2, 1.1).unwrap();
        let tails: Vec<f64> = [5.0, 10.0, 20.0, 40.0, 80.0].iter().map(|&r| tail_bound(&k, &g, r)).collect();
        assert!(tails.windows(2).all(|w| w[1] < w[0]));
    }
}
