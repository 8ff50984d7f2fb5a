//! Numerical core of the spectra workbench.
//!
//! Everything here is pure computation: critical-line zeta values and
//! zeta-sums, exact 2×2 integer-matrix combinatorics (determinant strata,
//! Hecke cosets, Poincaré series), divisor correlations, and the Maass-form
//! side (Iwasawa coordinates, Jacquet/Whittaker transforms, Fourier
//! expansions, L-series and the Kirillov seed generator of shifted
//! convolutions). The crate is `no_std` with `alloc`; file IO, the CLI and
//! output formats live in the `spectra` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod automorphic;
pub mod divisor;
mod error;
pub mod group;
pub mod lattice;
pub mod special;
pub mod sum;
pub mod window;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// A point of the complex plane, used for `s = σ + it`, spectral parameters
/// and every complex-valued output.
pub type ComplexValue = Complex64;
