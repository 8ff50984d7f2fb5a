//! One function per subcommand, each returning its records.

use spectra_core::automorphic::GroupPoint;
use spectra_core::special::QuadratureSpec;
use spectra_core::window::WindowSpec;

use crate::cli::{Command, PointArgs, QuadArgs, WindowArgs, WindowKind};
use crate::record::Record;
use crate::CliError;

mod automorphic;
mod divisor;
mod lattice;
mod zeta;

pub(crate) fn execute(cmd: &Command) -> Result<Vec<Record>, CliError> {
    let name = cmd.name();
    match cmd {
        Command::ZetaEval(a) => zeta::zeta_eval(name, a),
        Command::ZetaSum(a) => zeta::zeta_sum(name, a),
        Command::WeylSquare(a) => zeta::weyl_square(name, a),
        Command::Moment(a) => zeta::moment(name, a),
        Command::FourthMoment(a) => zeta::fourth_moment(name, a),
        Command::SubconvexityScan(a) => zeta::subconvexity_scan(name, a),
        Command::LatticePartition(a) => lattice::partition(name, a),
        Command::HeckeCosets(a) => lattice::hecke_cosets(name, a),
        Command::HeckeFactor(a) => lattice::hecke_factor(name, a),
        Command::Poincare(a) => lattice::poincare(name, a),
        Command::DivisorSum(a) => divisor::divisor_sum(name, a),
        Command::DivisorSieve(a) => divisor::divisor_sieve(name, a),
        Command::MaassIngest(a) => automorphic::maass_ingest(name, a),
        Command::MaassEval(a) => automorphic::maass_eval(name, a),
        Command::Jacquet(a) => automorphic::jacquet(name, a),
        Command::CasimirCheck(a) => automorphic::casimir_check(name, a),
        Command::LfunEval(a) => automorphic::lfun_eval(name, a),
        Command::LfunMoment(a) => automorphic::lfun_moment(name, a),
        Command::KirillovExpand(a) => automorphic::kirillov_expand(name, a),
        Command::ShiftedCoefficient(a) => automorphic::shifted_coefficient(name, a),
        Command::ShiftedConvolution(a) => automorphic::shifted_convolution(name, a),
        Command::Orthogonality(a) => automorphic::orthogonality(name, a),
    }
}

fn quad_spec(q: &QuadArgs) -> Result<QuadratureSpec, CliError> {
    Ok(match q.panels {
        Some(p) => QuadratureSpec::fixed_panel(p, q.abs_tol)?,
        None => QuadratureSpec::adaptive(q.abs_tol, q.max_depth)?,
    })
}

fn window_spec(w: &WindowArgs) -> Result<WindowSpec, CliError> {
    let spec = match w.window {
        WindowKind::Constant => WindowSpec::Constant { value: w.w_value },
        WindowKind::Indicator => WindowSpec::Indicator { lo: w.w_lo, hi: w.w_hi },
        WindowKind::Gaussian => WindowSpec::Gaussian {
            center: w.w_center,
            width: w.w_width,
        },
        WindowKind::Rational => WindowSpec::RationalDecay {
            scale: w.w_scale,
            power: w.w_power,
        },
        WindowKind::Seed => WindowSpec::SeedInduced { alpha: w.w_alpha },
    };
    spec.validate()?;
    Ok(spec)
}

fn window_name(w: &WindowArgs) -> &'static str {
    match w.window {
        WindowKind::Constant => "constant",
        WindowKind::Indicator => "indicator",
        WindowKind::Gaussian => "gaussian",
        WindowKind::Rational => "rational",
        WindowKind::Seed => "seed",
    }
}

fn group_point(p: &PointArgs) -> Result<GroupPoint, CliError> {
    Ok(GroupPoint::new(p.x, p.y, p.theta)?)
}

/// `<command>-<index>`
fn record(name: &str, index: usize) -> Record {
    Record::new(format!("{name}-{index}"))
}
