//! Exact combinatorics of 2×2 integer matrices: determinant strata, the
//! rank ≤ 1 stratum, Hecke cosets with their factorization, and truncated
//! Poincaré series over SL(2, ℤ).

mod hecke;
mod matrix;
mod poincare;

pub use hecke::{factor_det_n, hecke_coset_reps, is_coset_rep};
pub use matrix::{enumerate_det_zero, partition_by_det, BoxSpec, DetPartition, DetZeroIter, IntMatrix2};
pub use poincare::{
    count_bound, frobenius_sq, kappa_sq, poincare_series, sl2z_in_box, tail_bound, PoincareKernel, PoincareValue,
};
