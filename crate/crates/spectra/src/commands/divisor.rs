use spectra_core::divisor::{self as d, DivisorBackend};

use super::{record, window_name, window_spec};
use crate::cli::{DivisorBackendArg, DivisorSieveArgs, DivisorSumArgs};
use crate::record::Record;
use crate::CliError;

pub(super) fn divisor_sum(name: &str, a: &DivisorSumArgs) -> Result<Vec<Record>, CliError> {
    let w = window_spec(&a.window)?;
    let (backend, label) = match a.backend {
        DivisorBackendArg::Sieve => (DivisorBackend::Sieve, "sieve"),
        DivisorBackendArg::Trial => (DivisorBackend::TrialDivision, "trial"),
    };
    let value = d::additive_divisor_sum(a.n, a.m, &w, backend)?;
    let mut r = record(name, 0)
        .with("N", a.n)
        .with("m", a.m)
        .with("window", window_name(&a.window))
        .with("backend", label)
        .with("value", value);
    if a.n >= 2 {
        let main = d::ingham_main_term(a.n, a.m as u64)?;
        r = r.with("main_term", main).with("ratio", value / main);
    }
    Ok(vec![r])
}

pub(super) fn divisor_sieve(name: &str, a: &DivisorSieveArgs) -> Result<Vec<Record>, CliError> {
    let table = d::divisor_sieve(a.n)?;
    Ok(table.iter().map(|(n, dn)| record(name, (n - 1) as usize).with("n", n).with("d", dn)).collect())
}
