//! Special functions and quadrature shared by every other module.

mod bessel;
mod character;
mod gamma;
pub mod quadrature;

pub use bessel::{bessel_k_imag, bessel_k_imag_scaled};
pub use character::{additive_character, unit_phase};
pub use gamma::{complex_gamma, ln_gamma};
pub use quadrature::{integrate, integrate_with_breaks, Envelope, Interval, Quadrature, QuadratureSpec, Scheme};
