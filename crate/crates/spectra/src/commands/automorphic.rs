use spectra_core::automorphic::{
    self as am, Backend, GroupPoint, LScheme, MaassForm, Parity, SeedSpec, Sign,
};
use spectra_core::special::QuadratureSpec;
use spectra_core::zeta::WeightSpec;
use spectra_core::Complex64;

use super::{group_point, quad_spec, record, window_name, window_spec};
use crate::cli::{
    CasimirArgs, JacquetArgs, KirillovArgs, LSchemeArg, LfunEvalArgs, LfunMomentArgs, MaassBackendArg, MaassEvalArgs,
    MaassIngestArgs, OrthogonalityArgs, ShiftedCoefficientArgs, ShiftedConvolutionArgs, SignArg,
};
use crate::ingest::load_form;
use crate::record::Record;
use crate::CliError;

/// Five points clear of the lines x ∈ {0, 1/2} where odd forms vanish.
const CASIMIR_POINTS: [(f64, f64); 5] = [(0.2, 1.1), (0.13, 0.9), (0.37, 1.4), (0.41, 0.8), (0.29, 1.25)];

fn parity_label(f: &MaassForm) -> i64 {
    match f.parity() {
        Parity::Even => 1,
        Parity::Odd => -1,
    }
}

fn form_record(r: Record, f: &MaassForm) -> Record {
    r.with("source", f.source()).with("r", f.r())
}

pub(super) fn maass_ingest(name: &str, a: &MaassIngestArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let mut out = vec![form_record(record(name, 0), &f)
        .with("parity", parity_label(&f))
        .with("eigenvalue", f.eigenvalue())
        .with("n_coeff", f.n_coeff())
        .with("hecke_violations", f.hecke_violations(a.form.hecke_tol).len())];
    if a.coefficients {
        for (i, c) in f.coefficients().iter().enumerate() {
            out.push(record(name, out.len()).with("n", i + 1).with("rho", *c));
        }
    }
    Ok(out)
}

pub(super) fn maass_eval(name: &str, a: &MaassEvalArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let g = group_point(&a.point)?;
    let (backend, label) = match a.backend {
        MaassBackendArg::Bessel => (Backend::BesselClosedForm, "bessel"),
        MaassBackendArg::Jacquet => (Backend::JacquetQuadrature(quad_spec(&a.quad)?), "jacquet"),
    };
    let v = am::maass_eval(&f, &g, a.ell, a.n_trunc, backend, a.tolerance)?;
    Ok(vec![form_record(record(name, 0), &f)
        .with("x", g.x)
        .with("y", g.y)
        .with("theta", g.theta)
        .with("ell", a.ell)
        .with("N_trunc", a.n_trunc)
        .with("backend", label)
        .complex("value", v.value)
        .with("tail_bound", v.tail_bound)
        .with("quadrature_error", v.quadrature_error)])
}

pub(super) fn jacquet(name: &str, a: &JacquetArgs) -> Result<Vec<Record>, CliError> {
    let g = group_point(&a.point)?;
    let nu = Complex64::new(a.nu_re, a.nu_im);
    let (delta, label) = match a.delta {
        SignArg::Plus => (Sign::Plus, "+"),
        SignArg::Minus => (Sign::Minus, "-"),
    };
    let q = am::jacquet_transform(nu, a.ell, delta, &g, &quad_spec(&a.quad)?)?;
    let mut r = record(name, 0)
        .complex("nu", nu)
        .with("ell", a.ell)
        .with("delta", label)
        .with("x", g.x)
        .with("y", g.y)
        .with("theta", g.theta)
        .complex("value", q.value)
        .with("error", q.error);
    // the closed form covers ℓ = 0 at imaginary ν, for g with θ = 0
    if a.ell == 0 && a.nu_re == 0.0 && g.theta == 0.0 {
        let k = am::jacquet_closed_form(nu, delta, &g)?;
        r = r.complex("closed_form", k).with("difference", (q.value - k).norm());
    }
    Ok(vec![r])
}

fn parse_point(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Validation(format!("point {s:?} is not of the form x:y"));
    let (x, y) = s.split_once(':').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

pub(super) fn casimir_check(name: &str, a: &CasimirArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let points: Vec<(f64, f64)> = match &a.points {
        Some(ps) => ps.iter().map(|s| parse_point(s)).collect::<Result<_, _>>()?,
        None => CASIMIR_POINTS.to_vec(),
    };
    let expected = f.eigenvalue();
    let eval = |p: &GroupPoint| am::maass_eval(&f, p, 0, a.n_trunc, Backend::BesselClosedForm, None).map(|v| v.value);
    let mut out = Vec::with_capacity(points.len());
    for (i, (x, y)) in points.into_iter().enumerate() {
        let g = GroupPoint::upper(x, y)?;
        let h = a.h.unwrap_or_else(|| am::default_casimir_step(&g));
        let c = am::casimir_apply_fd(eval, &g, h, a.rel_tol)?;
        let fg = eval(&g)?;
        let estimate = c.value / fg;
        let rel = (estimate - expected).norm() / expected;
        out.push(
            form_record(record(name, i), &f)
                .with("x", x)
                .with("y", y)
                .with("step", h)
                .complex("f", fg)
                .complex("eigenvalue", estimate)
                .with("expected", expected)
                .with("rel_error", rel)
                .with("richardson_disagreement", c.disagreement)
                .with("pass", rel <= a.rel_tol),
        );
    }
    Ok(out)
}

pub(super) fn lfun_eval(name: &str, a: &LfunEvalArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let s = Complex64::new(a.s_re, a.s_im);
    let (scheme, label) = match a.scheme {
        LSchemeArg::Direct => (LScheme::Direct, "direct"),
        LSchemeArg::Smoothed => (LScheme::Smoothed { x: a.x }, "smoothed"),
    };
    let v = am::l_function_eval(&f, s, scheme)?;
    let mut r = form_record(record(name, 0), &f).complex("s", s).with("scheme", label);
    if a.scheme == LSchemeArg::Smoothed {
        r = r.with("X", a.x);
    }
    Ok(vec![r
        .complex("value", v.value)
        .with("last_block", v.last_block)
        .with("beyond_table", v.beyond_table)
        .with("terms", v.terms)
        .with("heuristic", v.heuristic)])
}

pub(super) fn lfun_moment(name: &str, a: &LfunMomentArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let g = WeightSpec::gaussian(a.t0, a.delta)?.scaled(a.scale);
    let m = am::l_moment(&f, &g, a.x, &quad_spec(&a.quad)?)?;
    Ok(vec![form_record(record(name, 0), &f)
        .with("T0", a.t0)
        .with("delta", a.delta)
        .with("scale", a.scale)
        .with("X", a.x)
        .with("value", m.value)
        .with("error", m.error)
        .with("heuristic", m.heuristic)])
}

pub(super) fn kirillov_expand(name: &str, a: &KirillovArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let seed = SeedSpec::new(a.alpha)?;
    let v = am::kirillov_seed_expansion(&f, &seed, a.x, a.y, a.n_trunc, a.tolerance)?;
    Ok(vec![form_record(record(name, 0), &f)
        .with("alpha", a.alpha)
        .with("x", a.x)
        .with("y", a.y)
        .with("N_trunc", a.n_trunc)
        .complex("value", v.value)
        .with("tail_bound", v.tail_bound)])
}

pub(super) fn shifted_coefficient(name: &str, a: &ShiftedCoefficientArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let seed = SeedSpec::new(a.alpha)?;
    let spec = quad_spec(&a.quad)?;
    let mut out = Vec::new();
    for &y in &a.y {
        for &m in &a.m {
            let c = am::shifted_fourier_coefficient(&f, &seed, m, y, a.n_trunc, &spec)?;
            out.push(
                form_record(record(name, out.len()), &f)
                    .with("alpha", a.alpha)
                    .with("m", m)
                    .with("y", y)
                    .with("N_trunc", a.n_trunc)
                    .with("closed_form", c.closed_form)
                    .complex("quadrature", c.quadrature)
                    .with("disagreement", c.disagreement())
                    .with("quadrature_error", c.quadrature_error)
                    .with("tail_bound", c.tail_bound),
            );
        }
    }
    Ok(out)
}

pub(super) fn shifted_convolution(name: &str, a: &ShiftedConvolutionArgs) -> Result<Vec<Record>, CliError> {
    let f = load_form(&a.form)?;
    let w = window_spec(&a.window)?;
    let v = am::shifted_convolution(&f, a.m, &w, a.n_trunc)?;
    let mut r = form_record(record(name, 0), &f)
        .with("m", a.m)
        .with("N_trunc", a.n_trunc)
        .with("window", window_name(&a.window))
        .with("value", v);
    if a.seed_route {
        let seed = SeedSpec::new(a.window.w_alpha)?;
        let s = am::seed_shifted_convolution(&f, &seed, a.m, a.n_trunc, &quad_spec(&a.quad)?)?;
        r = r
            .with("seed_alpha", a.window.w_alpha)
            .with("seed_direct", s.direct)
            .with("seed_integrated", s.integrated)
            .with("seed_quadrature_error", s.quadrature_error);
    }
    Ok(vec![r])
}

pub(super) fn orthogonality(name: &str, a: &OrthogonalityArgs) -> Result<Vec<Record>, CliError> {
    let spec: QuadratureSpec = quad_spec(&a.quad)?;
    let mut out = Vec::new();
    for &n in &a.n {
        for &m in &a.m {
            let v = am::fourier_orthogonality(n, m, &spec)?;
            let want = if m == 0 { 1.0 } else { 0.0 };
            out.push(
                record(name, out.len())
                    .with("n", n)
                    .with("m", m)
                    .complex("value", v)
                    .with("deviation", (v - Complex64::new(want, 0.0)).norm()),
            );
        }
    }
    Ok(out)
}
