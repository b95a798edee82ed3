//! The minimal commutative-ring interface shared by exact and numeric scalars.
//!
//! Determinants, special-function series and polynomial evaluation are written
//! once against [`Ring`] and then run over rationals, polynomials in unknown
//! parameters, or [`BigReal`](super::BigReal) values.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rational::Rational;
use super::real::BigReal;

pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Additive identity in the same ring (and precision) as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the same ring as `self`.
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    /// Embeds a rational constant next to `self`.
    fn lift(&self, r: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::from_integer(1.into())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn lift(&self, r: &Rational) -> Self {
        r.clone()
    }
}

impl Ring for BigReal {
    fn zero_like(&self) -> Self {
        BigReal::zero(self.precision())
    }
    fn one_like(&self) -> Self {
        BigReal::one(self.precision())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn lift(&self, r: &Rational) -> Self {
        BigReal::from_rational(r, self.precision())
    }
}

/// Horner evaluation of `sum coeffs[i] * z^i` in the ring of `z`.
pub fn eval_rational_coeffs<T: Ring>(coeffs: &[Rational], z: &T) -> T {
    let mut acc = z.zero_like();
    for c in coeffs.iter().rev() {
        acc = acc * z.clone() + z.lift(c);
    }
    acc
}

/// A [`Ring`] with exact or rounded division.
pub trait Field: Ring + std::ops::Div<Output = Self> {}

impl Field for Rational {}
impl Field for BigReal {}
