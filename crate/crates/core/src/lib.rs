//! Certified max-modulus growth bounds for complex polynomials.
//!
//! The crate evaluates classical and lacunary growth multipliers, computes
//! certified extrema of `|p|` on circles, generates seeded instances of the
//! hypothesis classes, and checks bounds against them.
#![no_std]

extern crate alloc;

pub mod error;
pub mod poly;
pub mod circle;
pub mod bounds;
pub mod exact;
pub mod generators;
pub mod quadrature;
pub mod verify;
pub mod campaign;

pub use error::{Error, Result};
pub use poly::Polynomial;
