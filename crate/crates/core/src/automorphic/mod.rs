//! Maass cusp forms and the machinery around them.

mod expansion;
mod form;
mod kirillov;
mod lseries;
mod whittaker;

pub use crate::group::GroupPoint;
pub use expansion::{
    casimir_apply_fd, default_casimir_step, expansion_tail_bound, maass_eval, Backend, CasimirResult, MaassValue,
};
pub use form::{MaassForm, Parity, HECKE_TOLERANCE, MIN_COEFFICIENTS};
pub use kirillov::{
    fourier_orthogonality, kirillov_seed_expansion, seed_expansion_tail, seed_height_integral, seed_shifted_convolution,
    shifted_convolution, shifted_fourier_coefficient, KirillovValue, SeedConvolution, SeedSpec, ShiftedCoefficient,
    MAX_ALPHA,
};
pub use lseries::{
    l_function_eval, l_function_eval_with, l_moment, l_partial_sum, stored_tail_bound, LMomentResult, LScheme, LValue,
    SMOOTHING_TAIL_TOLERANCE,
};
pub use whittaker::{jacquet_closed_form, jacquet_transform, phi_ell, JacquetValue, Sign};
