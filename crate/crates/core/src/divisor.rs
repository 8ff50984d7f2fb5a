//! The divisor function d(n), the additive divisor sum Σ d(n) d(n+m) W(n/m),
//! and the classical leading term it is compared against.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::sum::NeumaierSum;
use crate::window::WindowSpec;
use crate::{Error, Result};

/// Largest table the sieve will build.
pub const SIEVE_CAP: u64 = 100_000_000;

/// d(n) for 1 ≤ n ≤ N. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    // counts[0] is unused so that counts[n] = d(n)
    counts: Vec<u16>,
}

impl DivisorTable {
    pub fn n_max(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    /// d(n), or `None` outside 1..=N.
    pub fn get(&self, n: u64) -> Option<u32> {
        if n == 0 || n > self.n_max() {
            None
        } else {
            Some(u32::from(self.counts[n as usize]))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.counts.iter().enumerate().skip(1).map(|(n, d)| (n as u64, u32::from(*d)))
    }
}

/// Builds d(n) for n ≤ N by marking the multiples of every d ≤ N.
pub fn divisor_sieve(n: u64) -> Result<DivisorTable> {
    if n < 1 {
        return Err(Error::domain("divisor sieve needs N >= 1"));
    }
    if n > SIEVE_CAP {
        return Err(Error::MemoryGuard {
            requested: n,
            cap: SIEVE_CAP,
        });
    }
    let len = n as usize + 1;
    let mut counts = alloc::vec![0u16; len];
    for d in 1..len {
        for j in (d..len).step_by(d) {
            counts[j] += 1;
        }
    }
    Ok(DivisorTable { counts })
}

/// d(n) by trial division up to √n.
pub fn divisor_count_trial(n: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut count = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorBackend {
    Sieve,
    TrialDivision,
}

/// Σ_{n≤N} d(n) d(n+m) W(n/m).
pub fn additive_divisor_sum(n_max: u64, m: i64, window: &WindowSpec, backend: DivisorBackend) -> Result<f64> {
    if m <= 0 {
        return Err(Error::domain("shift m must be positive (m = 0 is the excluded diagonal)"));
    }
    if n_max < 1 {
        return Err(Error::domain("N must be at least 1"));
    }
    window.validate()?;
    if window.is_zero() {
        return Ok(0.0);
    }
    let m = m as u64;
    let mf = m as f64;
    let mut acc = NeumaierSum::new();
    match backend {
        DivisorBackend::Sieve => {
            let table = divisor_sieve(n_max.checked_add(m).ok_or(Error::Overflow("N + m"))?)?;
            for n in 1..=n_max {
                let w = window.eval(n as f64 / mf);
                if w != 0.0 {
                    let prod = table.counts[n as usize] as u64 * table.counts[(n + m) as usize] as u64;
                    acc.add(prod as f64 * w);
                }
            }
        }
        DivisorBackend::TrialDivision => {
            for n in 1..=n_max {
                let w = window.eval(n as f64 / mf);
                if w != 0.0 {
                    let prod = u64::from(divisor_count_trial(n)) * u64::from(divisor_count_trial(n + m));
                    acc.add(prod as f64 * w);
                }
            }
        }
    }
    Ok(acc.value())
}

/// σ_{−1}(m) = Σ_{d|m} 1/d
pub fn sigma_minus_one(m: u64) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("sigma_{-1} needs m >= 1"));
    }
    let mut acc = NeumaierSum::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            acc.add(1.0 / d as f64);
            if d * d != m {
                acc.add(d as f64 / m as f64);
            }
        }
        d += 1;
    }
    Ok(acc.value())
}

/// Ingham's leading term (6/π²) σ_{−1}(m) N log²N.
pub fn ingham_main_term(n_max: u64, m: u64) -> Result<f64> {
    if n_max < 2 {
        return Err(Error::domain("main term needs N >= 2"));
    }
    let n = n_max as f64;
    let l = libm::log(n);
    Ok(6.0 / (PI * PI) * sigma_minus_one(m)? * n * l * l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let t = divisor_sieve(100).unwrap();
        assert_eq!(t.get(1), Some(1));
        assert_eq!(t.get(12), Some(6));
        assert_eq!(t.get(97), Some(2));
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(101), None);
    }

    #[test]
    fn summatory_function_matches_floor_sum() {
        let t = divisor_sieve(100).unwrap();
        let total: u32 = t.iter().map(|(_, d)| d).sum();
        let floor_sum: u64 = (1..=100u64).map(|k| 100 / k).sum();
        assert_eq!(u64::from(total), floor_sum);
        assert_eq!(total, 482);
    }

    #[test]
    fn sieve_guard() {
        assert!(divisor_sieve(0).is_err());
        assert!(matches!(divisor_sieve(SIEVE_CAP + 1), Err(Error::MemoryGuard { .. })));
    }

    #[test]
    fn additive_sum_small_case() {
        for backend in [DivisorBackend::Sieve, DivisorBackend::TrialDivision] {
            assert_eq!(additive_divisor_sum(10, 1, &WindowSpec::default(), backend).unwrap(), 74.0);
        }
        let zero = WindowSpec::Constant { value: 0.0 };
        assert_eq!(additive_divisor_sum(10, 1, &zero, DivisorBackend::Sieve).unwrap(), 0.0);
        assert!(additive_divisor_sum(10, 0, &WindowSpec::default(), DivisorBackend::Sieve).is_err());
    }

    #[test]
    fn window_argument_is_n_over_m() {
        // indicator of [1, 2] with m = 5 keeps n = 5..=10 only
        let w = WindowSpec::Indicator { lo: 1.0, hi: 2.0 };
        let got = additive_divisor_sum(100, 5, &w, DivisorBackend::Sieve).unwrap();
        let want: u32 = (5..=10).map(|n| divisor_count_trial(n) * divisor_count_trial(n + 5)).sum();
        assert_eq!(got, f64::from(want));
    }

    #[test]
    fn sigma_minus_one_values() {
        assert_eq!(sigma_minus_one(1).unwrap(), 1.0);
        assert_eq!(sigma_minus_one(2).unwrap(), 1.5);
        assert!((sigma_minus_one(6).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn main_term_formula() {
        let l = libm::log(1.0e6);
        let want = 6.0 / (PI * PI) * 1.0e6 * l * l;
        assert!((ingham_main_term(1_000_000, 1).unwrap() - want).abs() <= 1e-15 * want);
    }
}
