use core::f64::consts::FRAC_PI_2;

use crate::Complex64;

/// The additive character e(ξ) = exp(2πiξ).
///
/// The argument is reduced modulo 1 and then to an eighth of a turn before
/// any trigonometric call, so quarter-turn values (e(1/2) = −1, e(1/4) = i)
/// come out exact. Non-finite input yields NaN components.
pub fn additive_character(xi: f64) -> Complex64 {
    if !xi.is_finite() {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    let frac = xi - libm::floor(xi);
    let quarters = 4.0 * frac;
    let q = libm::round(quarters);
    let (s, c) = libm::sincos((quarters - q) * FRAC_PI_2);
    match (q as i64).rem_euclid(4) {
        0 => Complex64::new(c, s),
        1 => Complex64::new(-s, c),
        2 => Complex64::new(-c, -s),
        _ => Complex64::new(s, -c),
    }
}

/// exp(iφ) for a phase given in radians.
#[inline]
pub fn unit_phase(phi: f64) -> Complex64 {
    let (s, c) = libm::sincos(phi);
    Complex64::new(c, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(additive_character(0.0), Complex64::new(1.0, 0.0));
        assert_eq!(additive_character(0.5), Complex64::new(-1.0, 0.0));
        assert_eq!(additive_character(0.25), Complex64::new(0.0, 1.0));
        assert!((additive_character(0.123).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn periodic_and_matches_exp() {
        for &xi in &[0.123, -3.7, 12.3456, 1e6 + 0.3] {
            let direct = unit_phase(2.0 * core::f64::consts::PI * (xi - libm::floor(xi)));
            let e = additive_character(xi);
            assert!((e - direct).norm() < 1e-14);
            assert!((additive_character(xi + 1.0) - e).norm() < 1e-9);
        }
        assert_eq!(additive_character(-0.25), additive_character(0.75));
    }
}
