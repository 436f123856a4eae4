//! Exact apolarity, Gröbner-basis, Hilbert-function and tangent-space computations over
//! prime fields, and the secant/cactus membership tests built from them.
#![no_std]

extern crate alloc;

pub mod error;
pub mod apolar;
pub mod bounds;
pub mod exactla;
pub mod field;
pub mod groebner;
pub mod poly;
pub mod tangent;

pub use error::{Error, Result};
pub use field::{PrimeField, Scalar};
pub mod membership;
