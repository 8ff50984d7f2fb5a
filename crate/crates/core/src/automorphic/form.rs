use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_integer::Integer;

use crate::{Error, Result};

/// Default tolerance for the Hecke relations checked on ingestion.
pub const HECKE_TOLERANCE: f64 = 1e-6;

/// Fewest coefficients a form may carry.
pub const MIN_COEFFICIENTS: usize = 16;

/// Behaviour under x → −x: the coefficient of e(−nx) is `parity · ρ(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// A level-one Maass cusp form: spectral parameter r (ν = ir, eigenvalue
/// 1/4 + r²) and real coefficients ρ(n) normalized to ρ(1) = 1.
///
/// Coefficients are real for level one, so every conjugation ρ̄(n) in the
/// sums of this module is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct MaassForm {
    r: f64,
    parity: Parity,
    coeffs: Vec<f64>,
    source: String,
}

impl MaassForm {
    /// Validates the shape and finiteness of the data and rescales so that
    /// ρ(1) = 1. No Hecke relations are checked here.
    pub fn new(r: f64, parity: Parity, coeffs: Vec<f64>, source: impl Into<String>) -> Result<Self> {
        let mut problems = Vec::new();
        if !(r > 0.0) || !r.is_finite() {
            problems.push(format!("spectral parameter r = {r} must be positive and finite"));
        }
        if coeffs.len() < MIN_COEFFICIENTS {
            problems.push(format!("{} coefficients given, at least {MIN_COEFFICIENTS} required", coeffs.len()));
        }
        if let Some(n) = coeffs.iter().position(|c| !c.is_finite()) {
            problems.push(format!("coefficient rho({}) is not finite", n + 1));
        }
        if coeffs.first() == Some(&0.0) {
            problems.push("rho(1) = 0 cannot anchor the normalization".to_string());
        }
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        let c1 = coeffs[0];
        let coeffs = coeffs.into_iter().map(|c| c / c1).collect();
        Ok(MaassForm {
            r,
            parity,
            coeffs,
            source: source.into(),
        })
    }

    /// ρ(n) = δ_{n,1}.
    pub fn delta(r: f64, n_coeff: usize) -> Result<Self> {
        let mut c = alloc::vec![0.0; n_coeff];
        if let Some(first) = c.first_mut() {
            *first = 1.0;
        }
        Self::new(r, Parity::Even, c, "synthetic:delta")
    }

    /// ρ(n) = 1/n².
    pub fn inverse_square(r: f64, n_coeff: usize) -> Result<Self> {
        let c = (1..=n_coeff).map(|n| 1.0 / (n as f64 * n as f64)).collect();
        Self::new(r, Parity::Even, c, "synthetic:inverse-square")
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn eigenvalue(&self) -> f64 {
        0.25 + self.r * self.r
    }

    pub fn n_coeff(&self) -> usize {
        self.coeffs.len()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// ρ(n) for 1 ≤ n ≤ N_coeff.
    pub fn rho(&self, n: usize) -> Option<f64> {
        n.checked_sub(1).and_then(|j| self.coeffs.get(j).copied())
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Checks ρ(p)ρ(q) = ρ(pq) for coprime p, q ≥ 2 and ρ(p)² − 1 = ρ(p²) for
    /// primes p, over the stored range, returning one message per failure.
    pub fn hecke_violations(&self, tol: f64) -> Vec<String> {
        let n = self.coeffs.len();
        let rho = |k: usize| self.coeffs[k - 1];
        let mut out = Vec::new();
        for p in 2..=n {
            for q in p + 1..=n / p {
                if p.gcd(&q) == 1 {
                    let err = (rho(p) * rho(q) - rho(p * q)).abs();
                    if !(err <= tol) {
                        out.push(format!("rho({p})*rho({q}) != rho({}) (off by {err:.3e})", p * q));
                    }
                }
            }
        }
        for p in (2..=n).filter(|&p| p * p <= n && is_prime(p)) {
            let err = (rho(p) * rho(p) - 1.0 - rho(p * p)).abs();
            if !(err <= tol) {
                out.push(format!("rho({p})^2 - 1 != rho({}) (off by {err:.3e})", p * p));
            }
        }
        out
    }

    /// Parses the text coefficient format and checks the Hecke relations.
    ///
    /// Lines starting with `#` are comments. The first other line is
    /// `r=<decimal>`, optionally followed by `parity=+1` or `parity=-1`, then
    /// one `n,rho` pair per line with n = 1, 2, 3, ...
    pub fn parse(text: &str, source: &str, hecke_tol: f64) -> Result<Self> {
        let mut r = None;
        let mut parity = None;
        let mut coeffs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::Parse { line: line_no, reason };
            if r.is_none() {
                let v = line
                    .strip_prefix("r=")
                    .ok_or_else(|| bad("expected `r=<decimal>` before any data".to_string()))?;
                r = Some(parse_decimal(v).ok_or_else(|| bad(format!("invalid spectral parameter `{v}`")))?);
                continue;
            }
            if let Some(v) = line.strip_prefix("parity=") {
                if parity.is_some() || !coeffs.is_empty() {
                    return Err(bad("`parity=` must come once, right after `r=`".to_string()));
                }
                parity = Some(match v.trim() {
                    "+1" | "1" => Parity::Even,
                    "-1" => Parity::Odd,
                    other => return Err(bad(format!("parity must be +1 or -1, got `{other}`"))),
                });
                continue;
            }
            let (n_txt, c_txt) = line
                .split_once(',')
                .ok_or_else(|| bad(format!("expected `n,rho`, got `{line}`")))?;
            let n: usize = n_txt
                .trim()
                .parse()
                .map_err(|_| bad(format!("invalid index `{}`", n_txt.trim())))?;
            if n != coeffs.len() + 1 {
                return Err(bad(format!("expected index {}, got {n}", coeffs.len() + 1)));
            }
            let c = parse_decimal(c_txt.trim()).ok_or_else(|| bad(format!("invalid coefficient `{}`", c_txt.trim())))?;
            coeffs.push(c);
        }
        let r = r.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            reason: "no `r=` line found".to_string(),
        })?;
        let form = Self::new(r, parity.unwrap_or(Parity::Even), coeffs, source)?;
        let violations = form.hecke_violations(hecke_tol);
        if violations.is_empty() {
            Ok(form)
        } else {
            Err(Error::Validation(violations))
        }
    }
}

/// Locale-independent decimal: optional sign, digits with `.` radix point,
/// optional exponent. Rejects `inf`, `nan` and hex forms that Rust's float
/// parser would otherwise accept.
fn parse_decimal(s: &str) -> Option<f64> {
    let ok = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'))
        && s.bytes().any(|b| b.is_ascii_digit());
    if !ok {
        return None;
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(rho6: f64) -> String {
        // a genuinely multiplicative toy table: ρ(p) = a_p with ρ(p²) = a_p² − 1
        let mut a = [0.0f64; 17];
        a[1] = 1.0;
        a[2] = 0.5;
        a[3] = -0.25;
        a[5] = 0.75;
        a[7] = 0.1;
        a[11] = -0.3;
        a[13] = 0.2;
        a[4] = a[2] * a[2] - 1.0;
        a[6] = a[2] * a[3];
        a[8] = a[2] * a[4] - a[2];
        a[9] = a[3] * a[3] - 1.0;
        a[10] = a[2] * a[5];
        a[12] = a[4] * a[3];
        a[14] = a[2] * a[7];
        a[15] = a[3] * a[5];
        a[16] = a[2] * a[8] - a[4];
        a[6] = rho6;
        let mut s = String::from("# toy\nr=9.5336952613536\nparity=+1\n");
        for (n, c) in a.iter().enumerate().skip(1) {
            s.push_str(&format!("{n},{c:.17e}\n"));
        }
        s
    }

    #[test]
    fn accepts_multiplicative_table() {
        let f = MaassForm::parse(&sample(-0.125), "toy", HECKE_TOLERANCE).unwrap();
        assert_eq!(f.n_coeff(), 16);
        assert_eq!(f.rho(1), Some(1.0));
        assert!((f.rho(2).unwrap() * f.rho(3).unwrap() - f.rho(6).unwrap()).abs() < 1e-6);
        assert_eq!(f.parity(), Parity::Even);
    }

    #[test]
    fn corrupted_coefficient_is_named() {
        match MaassForm::parse(&sample(0.9), "toy", HECKE_TOLERANCE) {
            Err(Error::Validation(v)) => assert!(v.iter().any(|m| m.contains("rho(2)*rho(3) != rho(6)"))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_input() {
        assert!(matches!(MaassForm::parse("", "x", HECKE_TOLERANCE), Err(Error::Parse { .. })));
        assert!(matches!(MaassForm::parse("# only\n", "x", HECKE_TOLERANCE), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = MaassForm::parse("r=1.0\n1,1.0\n3,0.5\n", "x", HECKE_TOLERANCE).unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, reason: "expected index 2, got 3".into() });
        let e = MaassForm::parse("r=1,5\n", "x", HECKE_TOLERANCE).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = MaassForm::parse("1,1.0\n", "x", HECKE_TOLERANCE).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn decimal_parsing_is_strict() {
        assert_eq!(parse_decimal("1.5e-3"), Some(1.5e-3));
        assert_eq!(parse_decimal("-2"), Some(-2.0));
        assert_eq!(parse_decimal("inf"), None);
        assert_eq!(parse_decimal("NaN"), None);
        assert_eq!(parse_decimal("1,5"), None);
    }

    #[test]
    fn normalizes_first_coefficient() {
        let c: Vec<f64> = (1..=16).map(|n| 2.0 * n as f64).collect();
        let f = MaassForm::new(1.0, Parity::Even, c, "t").unwrap();
        assert_eq!(f.rho(1), Some(1.0));
        assert_eq!(f.rho(5), Some(5.0));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(MaassForm::new(1.0, Parity::Even, alloc::vec![1.0; 8], "t").is_err());
        assert!(MaassForm::new(-1.0, Parity::Even, alloc::vec![1.0; 16], "t").is_err());
        let mut c = alloc::vec![1.0; 16];
        c[0] = 0.0;
        assert!(MaassForm::new(1.0, Parity::Even, c, "t").is_err());
    }

    #[test]
    fn synthetic_forms() {
        let d = MaassForm::delta(2.0, 20).unwrap();
        assert_eq!(d.rho(1), Some(1.0));
        assert_eq!(d.rho(2), Some(0.0));
        let s = MaassForm::inverse_square(2.0, 20).unwrap();
        assert_eq!(s.rho(4), Some(1.0 / 16.0));
        assert_eq!(s.rho(21), None);
    }
}
