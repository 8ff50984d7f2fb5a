use spectra_core::zeta::{self as z, WeightSpec, WeightTable, ZetaMethod, ZetaSumSpec};
use spectra_core::Complex64;

use super::{quad_spec, record};
use crate::cli::{FourthMomentArgs, MethodArg, MomentArgs, ScanArgs, WeylSquareArgs, ZetaEvalArgs, ZetaSumArgs};
use crate::record::Record;
use crate::CliError;

pub(super) fn zeta_eval(name: &str, a: &ZetaEvalArgs) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::with_capacity(a.t.len());
    for (i, &t) in a.t.iter().enumerate() {
        let (value, method) = match a.method {
            MethodArg::Em => (z::zeta_euler_maclaurin(Complex64::new(0.5, t), a.order)?, "euler-maclaurin"),
            MethodArg::Rs => (z::zeta_critical(t, ZetaMethod::RiemannSiegel)?, "riemann-siegel"),
            MethodArg::Auto => {
                let m = if t.abs() >= z::RS_MIN_T { "riemann-siegel" } else { "euler-maclaurin" };
                (z::zeta_critical(t, ZetaMethod::Auto)?, m)
            }
        };
        out.push(
            record(name, i)
                .with("t", t)
                .with("method", method)
                .complex("zeta", value)
                .with("abs", value.norm())
                .with("validated_range", z::in_validated_range(t)),
        );
    }
    Ok(out)
}

pub(super) fn zeta_sum(name: &str, a: &ZetaSumArgs) -> Result<Vec<Record>, CliError> {
    let spec = ZetaSumSpec {
        n: a.n,
        t: a.t,
        weights: a.weights.clone(),
    };
    let v = z::zeta_sum(&spec)?;
    Ok(vec![record(name, 0)
        .with("N", a.n)
        .with("t", a.t)
        .with("weighted", a.weights.is_some())
        .complex("sum", v)
        .with("abs", v.norm())])
}

pub(super) fn weyl_square(name: &str, a: &WeylSquareArgs) -> Result<Vec<Record>, CliError> {
    let w = WeightTable::indicator(a.w_from, a.w_to)?;
    let sq = z::weyl_square(a.m, a.t, &w)?;
    let mut out = vec![record(name, 0)
        .with("M", a.m)
        .with("t", a.t)
        .with("w_from", a.w_from)
        .with("w_to", a.w_to)
        .with("total", sq.total)
        .with("diagonal", sq.diagonal)
        .with("off_diagonal", sq.off_diagonal)
        .with("residual", sq.diagonal + sq.off_diagonal - sq.total)];
    if a.shifts {
        for (h, v) in sq.shifts.iter().enumerate() {
            out.push(record(name, out.len()).with("h", h + 1).with("shift_sum", *v));
        }
    }
    Ok(out)
}

pub(super) fn moment(name: &str, a: &MomentArgs) -> Result<Vec<Record>, CliError> {
    let g = WeightSpec::gaussian(a.t0, a.delta)?.scaled(a.scale);
    let r = z::moment_integral(a.k, &g, &quad_spec(&a.quad)?)?;
    Ok(vec![record(name, 0)
        .with("k", a.k)
        .with("T0", a.t0)
        .with("delta", a.delta)
        .with("scale", a.scale)
        .with("value", r.value)
        .with("error", r.error)
        .with("truncation", r.truncation)
        .with("support_lo", r.support.0)
        .with("support_hi", r.support.1)
        .with("panels", r.panels)
        .with("experimental", r.experimental)])
}

pub(super) fn fourth_moment(name: &str, a: &FourthMomentArgs) -> Result<Vec<Record>, CliError> {
    let r = z::plain_fourth_moment(a.t, &quad_spec(&a.quad)?)?;
    Ok(vec![record(name, 0)
        .with("T", a.t)
        .with("value", r.value)
        .with("error", r.error)
        .with("panels", r.panels)])
}

pub(super) fn subconvexity_scan(name: &str, a: &ScanArgs) -> Result<Vec<Record>, CliError> {
    let rep = z::subconvexity_ratio_scan(a.t_lo, a.t_hi, a.samples)?;
    let mut out = vec![record(name, 0)
        .with("t_lo", a.t_lo)
        .with("t_hi", a.t_hi)
        .with("samples", a.samples)
        .with("max_ratio", rep.max_ratio)
        .with("argmax", rep.argmax)
        .with("min_ratio", rep.min_ratio)];
    if a.points {
        for (t, ratio) in &rep.points {
            out.push(record(name, out.len()).with("t", *t).with("ratio", *ratio));
        }
    }
    Ok(out)
}
