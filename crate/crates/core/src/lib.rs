//! Quasi-exact and numerical eigensolvers for the generalized isotonic
//! oscillator `l(l+1)/x^2 + (wa2)^2 x^2 + 2g(x^2-1)/(x^2+1)^2`.

pub mod aim;
pub mod error;
pub mod exactmath;
pub mod model;
pub mod quasipoly;
pub mod repro;

pub use error::{Error, Result};
