use spectra_core::lattice::{self as l, BoxSpec, IntMatrix2, PoincareKernel};

use super::{group_point, record};
use crate::cli::{HeckeCosetsArgs, HeckeFactorArgs, LatticePartitionArgs, MatrixFunction, PoincareArgs};
use crate::record::Record;
use crate::CliError;

pub(super) fn partition(name: &str, a: &LatticePartitionArgs) -> Result<Vec<Record>, CliError> {
    let bx = BoxSpec::new(a.b)?;
    let f = |m: &IntMatrix2| -> i128 {
        let (k, ll, n, mm) = (i128::from(m.k), i128::from(m.l), i128::from(m.n), i128::from(m.m));
        match a.f {
            MatrixFunction::One => 1,
            MatrixFunction::Det => k * mm - ll * n,
            MatrixFunction::Trace => k + mm,
            MatrixFunction::Frobenius => k * k + ll * ll + n * n + mm * mm,
        }
    };
    let p = l::partition_by_det(&bx, f)?;
    let f_name = match a.f {
        MatrixFunction::One => "one",
        MatrixFunction::Det => "det",
        MatrixFunction::Trace => "trace",
        MatrixFunction::Frobenius => "frobenius",
    };
    // i128 sums are written as text so that no digits are lost
    Ok(vec![record(name, 0)
        .with("B", a.b)
        .with("f", f_name)
        .with("sum_zero", p.sum_zero.to_string())
        .with("sum_pos", p.sum_pos.to_string())
        .with("sum_neg", p.sum_neg.to_string())
        .with("total", p.total.to_string())
        .with("count_zero", p.count_zero)
        .with("count_pos", p.count_pos)
        .with("count_neg", p.count_neg)
        .with("exact", p.is_exact())])
}

pub(super) fn hecke_cosets(name: &str, a: &HeckeCosetsArgs) -> Result<Vec<Record>, CliError> {
    let reps = l::hecke_coset_reps(a.n)?;
    let count = reps.len();
    Ok(reps
        .iter()
        .enumerate()
        .map(|(i, r)| {
            record(name, i)
                .with("n", a.n)
                .with("count", count)
                .with("a", r.k)
                .with("b", r.l)
                .with("d", r.m)
        })
        .collect())
}

pub(super) fn hecke_factor(name: &str, a: &HeckeFactorArgs) -> Result<Vec<Record>, CliError> {
    let [k, ll, n, m] = a.matrix[..] else {
        return Err(CliError::Validation("--matrix takes exactly four integers k,l,n,m".into()));
    };
    let mat = IntMatrix2::new(k, ll, n, m);
    let (g, rep) = l::factor_det_n(&mat)?;
    Ok(vec![record(name, 0)
        .with("matrix", mat.to_string())
        .with("det", mat.det()?)
        .with("gamma", g.to_string())
        .with("rep", rep.to_string())
        .with("rep_a", rep.k)
        .with("rep_b", rep.l)
        .with("rep_d", rep.m)
        .with("verified", g.checked_mul(&rep)? == mat)])
}

pub(super) fn poincare(name: &str, a: &PoincareArgs) -> Result<Vec<Record>, CliError> {
    let g = group_point(&a.point)?;
    let kernel = PoincareKernel::gaussian(a.amplitude, a.sigma)?;
    let v = l::poincare_series(&kernel, &g, a.cutoff, a.tolerance)?;
    Ok(vec![record(name, 0)
        .with("x", g.x)
        .with("y", g.y)
        .with("theta", g.theta)
        .with("amplitude", a.amplitude)
        .with("sigma", a.sigma)
        .with("cutoff", v.cutoff)
        .with("value", v.value)
        .with("tail_bound", v.tail_bound)
        .with("terms", v.terms)])
}
