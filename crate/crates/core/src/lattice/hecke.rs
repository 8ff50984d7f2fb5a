use alloc::vec::Vec;

use num_integer::Integer;

use super::matrix::IntMatrix2;
use crate::{Error, Result};

/// Representatives of SL(2, ℤ)\{det = n}: the matrices (a b; 0 d) with
/// ad = n and 0 ≤ b < d, ordered by a and then b.
pub fn hecke_coset_reps(n: i64) -> Result<Vec<IntMatrix2>> {
    if n < 1 {
        return Err(Error::domain("Hecke cosets need n >= 1"));
    }
    let mut out = Vec::new();
    for a in 1..=n {
        if n % a == 0 {
            let d = n / a;
            out.extend((0..d).map(|b| IntMatrix2::new(a, b, 0, d)));
        }
    }
    Ok(out)
}

/// Whether `m` is in the upper-triangular normal form used by
/// [`hecke_coset_reps`].
pub fn is_coset_rep(m: &IntMatrix2) -> bool {
    m.n == 0 && m.k > 0 && m.m > 0 && 0 <= m.l && m.l < m.m
}

/// The unique factorization M = γ·rep with γ ∈ SL(2, ℤ) and rep a coset
/// representative, for det M ≥ 1.
pub fn factor_det_n(mat: &IntMatrix2) -> Result<(IntMatrix2, IntMatrix2)> {
    let det = mat.det()?;
    if det < 1 {
        return Err(Error::domain("factorization needs det M >= 1"));
    }
    // U = (x y; −n/g k/g) has det 1 and clears the lower-left entry of U·M.
    let (k, n) = (i128::from(mat.k), i128::from(mat.n));
    let e = k.extended_gcd(&n);
    let (g, x, y) = if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
    let (l, m) = (i128::from(mat.l), i128::from(mat.m));
    let a = g;
    let d = i128::from(det) / g;
    let b_raw = x * l + y * m;
    let q = Integer::div_floor(&b_raw, &d);
    let b = b_raw - q * d;
    // U' = (1 −q; 0 1)·U, and γ = U'^{-1}
    let u = [[x - q * (-n / g), y - q * (k / g)], [-n / g, k / g]];
    let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("factor_det_n"));
    let gamma = IntMatrix2::new(narrow(u[1][1])?, narrow(-u[0][1])?, narrow(-u[1][0])?, narrow(u[0][0])?);
    let rep = IntMatrix2::new(narrow(a)?, narrow(b)?, 0, narrow(d)?);
    debug_assert!(is_coset_rep(&rep));
    if gamma.det()? != 1 || gamma.checked_mul(&rep)? != *mat {
        return Err(Error::domain("internal factorization check failed"));
    }
    Ok((gamma, rep))
}
