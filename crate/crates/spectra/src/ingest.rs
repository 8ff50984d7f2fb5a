//! Loading Maass forms from coefficient files or synthetic constructors.

use std::path::Path;

use spectra_core::automorphic::MaassForm;

use crate::cli::{FormArgs, SyntheticForm};
use crate::CliError;

pub fn ingest_maass_csv(path: &Path, hecke_tol: f64) -> Result<MaassForm, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    MaassForm::parse(&text, &path.display().to_string(), hecke_tol).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

pub fn load_form(args: &FormArgs) -> Result<MaassForm, CliError> {
    match (&args.file, args.synthetic) {
        (Some(p), _) => ingest_maass_csv(p, args.hecke_tol),
        (None, Some(SyntheticForm::Delta)) => Ok(MaassForm::delta(args.r, args.n_coeff)?),
        (None, Some(SyntheticForm::InverseSquare)) => Ok(MaassForm::inverse_square(args.r, args.n_coeff)?),
        (None, None) => Err(CliError::Validation("give a coefficient file with --file or choose --synthetic".into())),
    }
}
