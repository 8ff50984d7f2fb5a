use std::sync::OnceLock;

use proptest::prelude::*;
use spectra_core::automorphic::{kirillov_seed_expansion, maass_eval, Backend, GroupPoint, MaassForm, SeedSpec};
use spectra_core::divisor::{additive_divisor_sum, divisor_count_trial, divisor_sieve, DivisorBackend, DivisorTable};
use spectra_core::lattice::{partition_by_det, poincare_series, tail_bound, BoxSpec, PoincareKernel};
use spectra_core::special::{bessel_k_imag, complex_gamma, integrate, Interval, QuadratureSpec};
use spectra_core::window::WindowSpec;
use spectra_core::zeta::{
    atkinson_reindex, moment_integral, weyl_square, zeta_critical, Table2, WeightSpec, WeightTable, ZetaMethod,
};
use spectra_core::Complex64;

fn sieve() -> &'static DivisorTable {
    static TABLE: OnceLock<DivisorTable> = OnceLock::new();
    TABLE.get_or_init(|| divisor_sieve(1_000_000).unwrap())
}

proptest! {
    #[test]
    fn gamma_recurrence(re in 0.1f64..5.0, im in -20.0f64..20.0) {
        let s = Complex64::new(re, im);
        let lhs = complex_gamma(s + 1.0).unwrap();
        let rhs = s * complex_gamma(s).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm());
    }

    #[test]
    fn bessel_k_is_even_in_order(r in 0.0f64..20.0, x in 0.05f64..30.0) {
        prop_assert_eq!(bessel_k_imag(r, x).unwrap(), bessel_k_imag(-r, x).unwrap());
    }

    #[test]
    fn halving_tolerance_never_worsens_the_bound(freq in 1.0f64..40.0, b in 0.5f64..5.0, tol in 1e-12f64..1e-4) {
        let f = |x: f64| Complex64::new(libm::cos(freq * x) * libm::exp(-x), 0.0);
        let coarse = integrate(f, Interval::Finite { a: 0.0, b }, &QuadratureSpec::default().with_tolerance(tol)).unwrap();
        let fine = integrate(f, Interval::Finite { a: 0.0, b }, &QuadratureSpec::default().with_tolerance(tol / 2.0)).unwrap();
        prop_assert!(fine.error <= coarse.error);
    }

    #[test]
    fn zeta_reflection(t in -2000.0f64..2000.0) {
        let a = zeta_critical(t, ZetaMethod::Auto).unwrap();
        let b = zeta_critical(-t, ZetaMethod::Auto).unwrap().conj();
        prop_assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn weyl_square_singleton(m in 1u64..50, n0 in 1u64..1000, t in -500.0f64..500.0) {
        let w = WeightTable::indicator(n0, n0).unwrap();
        let sq = weyl_square(m, t, &w).unwrap();
        let mut inner = Complex64::new(0.0, 0.0);
        for j in 1..=m {
            let phase = t * ((j + n0) as f64).ln();
            inner += Complex64::new(phase.cos(), phase.sin());
        }
        prop_assert!((sq.total - inner.norm_sqr()).abs() < 1e-12 * (m * m) as f64);
        prop_assert!((sq.diagonal + sq.off_diagonal - sq.total).abs() < 1e-10);
    }

    #[test]
    fn reindexing_is_exact(rows in 1usize..12, cols in 1usize..12, m0 in -6i64..6, n0 in -6i64..6, seed in any::<u64>()) {
        let mut state = seed | 1;
        let table = Table2::from_fn(m0, n0, rows, cols, |_, _| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2001) as i64 - 1000
        });
        prop_assert!(atkinson_reindex(&table).unwrap().routes_agree());
    }

    #[test]
    fn partition_is_exact(bound in 1i64..=6, c in prop::array::uniform4(-50i64..50), k in 0i64..4) {
        let p = partition_by_det(&BoxSpec::new(bound).unwrap(), |mat| {
            c[0] * mat.k + c[1] * mat.l * mat.l + c[2] * mat.n * mat.m + c[3] * (mat.k + mat.m).pow(k as u32)
        }).unwrap();
        prop_assert!(p.is_exact());
        let side = (2 * bound + 1) as u64;
        prop_assert_eq!(p.count_zero + p.count_pos + p.count_neg, side.pow(4));
    }

    #[test]
    fn poincare_tail_bounds_decrease(x in -1.0f64..1.0, y in 0.3f64..3.0, r1 in 1.0f64..60.0, step in 0.5f64..30.0) {
        let g = GroupPoint::upper(x, y).unwrap();
        let k = PoincareKernel::gaussian(1.0, 1.5).unwrap();
        prop_assert!(tail_bound(&k, &g, r1 + step) <= tail_bound(&k, &g, r1));
    }

    #[test]
    fn sieve_matches_trial_division(n in 1u64..=1_000_000) {
        prop_assert_eq!(sieve().get(n).unwrap(), divisor_count_trial(n));
    }

    #[test]
    fn additive_sum_grows_with_n(n in 1u64..3000, extra in 1u64..500, m in 1i64..20) {
        let w = WindowSpec::default();
        let a = additive_divisor_sum(n, m, &w, DivisorBackend::Sieve).unwrap();
        let b = additive_divisor_sum(n + extra, m, &w, DivisorBackend::Sieve).unwrap();
        prop_assert!(a <= b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moment_is_monotone_in_the_weight(center in 0.0f64..40.0, w1 in 1.0f64..6.0, widen in 0.0f64..3.0) {
        let spec = QuadratureSpec::default().with_tolerance(1e-8);
        let narrow = moment_integral(2, &WeightSpec::gaussian(center, w1).unwrap(), &spec).unwrap();
        let wide = moment_integral(2, &WeightSpec::gaussian(center, w1 + widen).unwrap(), &spec).unwrap();
        prop_assert!(narrow.value <= wide.value + narrow.error + wide.error);
    }

    #[test]
    fn poincare_series_grows_with_cutoff(x in -0.5f64..0.5, y in 0.5f64..2.0, r in 2.0f64..20.0) {
        let g = GroupPoint::upper(x, y).unwrap();
        let k = PoincareKernel::gaussian(1.0, 2.0).unwrap();
        let a = poincare_series(&k, &g, r, None).unwrap();
        let b = poincare_series(&k, &g, 2.0 * r, None).unwrap();
        prop_assert!(a.value <= b.value);
        prop_assert!(b.value - a.value <= a.tail_bound);
    }

    #[test]
    fn expansions_are_periodic(k in -64i32..64, j in 1i32..8, y in 0.5f64..2.0) {
        // dyadic x, so that x + 1 is exact
        let x = f64::from(k) / 64.0;
        let f = MaassForm::inverse_square(9.5, 32).unwrap();
        let a = maass_eval(&f, &GroupPoint::upper(x, y).unwrap(), 0, 32, Backend::BesselClosedForm, None).unwrap();
        let b = maass_eval(&f, &GroupPoint::upper(x + f64::from(j), y).unwrap(), 0, 32, Backend::BesselClosedForm, None).unwrap();
        prop_assert_eq!(a.value, b.value);
        let seed = SeedSpec::new(2.0).unwrap();
        let c = kirillov_seed_expansion(&f, &seed, x, y, 32, None).unwrap();
        let d = kirillov_seed_expansion(&f, &seed, x + f64::from(j), y, 32, None).unwrap();
        prop_assert_eq!(c.value, d.value);
    }
}
