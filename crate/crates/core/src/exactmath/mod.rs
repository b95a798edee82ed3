//! Exact rational and polynomial arithmetic, real-root isolation,
//! configurable-precision reals and the terminating special functions used by
//! the closed-form solutions.

mod linalg;
mod poly;
mod rational;
mod real;
mod realpoly;
mod ring;
mod roots;
mod special;

use std::fmt;

pub use linalg::{dense_determinant, null_space};
pub use poly::{poly_arith, PolyOp, RatPoly};
pub use rational::{int, is_integer, parse_rational, pow, rat, to_string as rational_to_string, Rational};
pub use real::{abs_diff, rational_close, within, BigReal, Precision, DEFAULT_DIGITS};
pub use realpoly::RealPoly;
pub use ring::{eval_rational_coeffs, Field, Ring};
pub use roots::{poly_real_roots, RealRoot, RootInterval};
pub use special::{gamma_half_integer, hyp1f1_terminating, laguerre_assoc, pochhammer, pochhammer_in, HalfGamma};

/// Names the indeterminate of a polynomial. Purely informational: arithmetic
/// between polynomials never checks it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Var {
    /// Scaled radial coordinate.
    X,
    /// `x^2 + 1`.
    Z,
    /// `z / (z + 1)`, maps the half-line onto `(0, 1)`.
    T,
    /// Indicial exponent on `(1 + x^2)`.
    Mu,
    G,
    /// The dimensionless product `w a^2`.
    Wa2,
    /// Scaled eigenvalue `E a^2`.
    Ea2,
    L,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
            Var::T => "t",
            Var::Mu => "mu",
            Var::G => "g",
            Var::Wa2 => "wa2",
            Var::Ea2 => "Ea2",
            Var::L => "l",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
