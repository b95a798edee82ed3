//! Terminating hypergeometric series, associated Laguerre polynomials and
//! Gamma values at half-integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::rational::{int, rat, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut out = Rational::one();
    let mut f = a.clone();
    for _ in 0..k {
        out *= &f;
        f += Rational::one();
    }
    out
}

/// Rising factorial of a ring element, e.g. a polynomial in `l`.
pub fn pochhammer_in<T: Ring>(a: &T, k: u32) -> T {
    let mut out = a.one_like();
    let mut f = a.clone();
    for _ in 0..k {
        out = out * f.clone();
        f = f + a.one_like();
    }
    out
}

/// `1F1(-n; a; z) = sum_k (-n)_k z^k / ((a)_k k!)`, evaluated in the ring of `z`.
pub fn hyp1f1_terminating<T: Ring>(n: u32, a: &Rational, z: &T) -> Result<T> {
    // (a)_k vanishes for some k <= n exactly when a is an integer in [1-n, 0].
    if a.is_integer() && !a.is_positive() && a.to_integer() > BigInt::from(-(n as i64)) {
        return Err(Error::HypergeometricPole { a: a.to_string(), n });
    }
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 0..n {
        let k_r = int(k as i64);
        term = term * (int(-(n as i64)) + &k_r) / ((a + &k_r) * (&k_r + Rational::one()));
        coeffs.push(term.clone());
    }
    Ok(super::ring::eval_rational_coeffs(&coeffs, z))
}

/// Associated Laguerre polynomial `L_n^alpha(x)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`.
pub fn laguerre_assoc<T: Ring>(n: u32, alpha: &Rational, x: &T) -> T {
    let mut prev = x.one_like();
    if n == 0 {
        return prev;
    }
    let mut cur = x.lift(&(alpha + Rational::one())) - x.clone();
    for k in 1..n {
        let kr = int(k as i64);
        let a = x.lift(&(int(2 * k as i64 + 1) + alpha)) - x.clone();
        let b = x.lift(&(&kr + alpha));
        let inv = x.lift(&(Rational::one() / (&kr + Rational::one())));
        let next = (a * cur.clone() - b * prev) * inv;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Gamma(h) = coeff * sqrt(pi)^sqrt_pi_power` for integer or half-integer `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfGamma {
    pub coeff: Rational,
    pub sqrt_pi_power: u32,
}

impl HalfGamma {
    /// `self / other`, valid when both carry the same power of `sqrt(pi)` or
    /// the caller tracks the leftover power.
    pub fn ratio(&self, other: &HalfGamma) -> (Rational, i64) {
        (
            &self.coeff / &other.coeff,
            self.sqrt_pi_power as i64 - other.sqrt_pi_power as i64,
        )
    }
}

/// Gamma at a positive integer or half-integer, exactly.
pub fn gamma_half_integer(h: &Rational) -> Result<HalfGamma> {
    if !h.is_positive() {
        return Err(Error::Domain(format!("Gamma({h}) is not tabulated here")));
    }
    let twice = h * int(2);
    if !twice.is_integer() {
        return Err(Error::Domain(format!("Gamma({h}) needs a half-integer argument")));
    }
    let twice = twice.to_integer();
    if twice.is_even() {
        // Gamma(m) = (m-1)!
        let m: u32 = (twice / 2u32).try_into().map_err(|_| Error::Domain("argument too large".into()))?;
        Ok(HalfGamma { coeff: pochhammer(&Rational::one(), m - 1), sqrt_pi_power: 0 })
    } else {
        // Gamma(m + 1/2) = sqrt(pi) (1/2)_m
        let m: u32 = ((twice - 1u32) / 2u32).try_into().map_err(|_| Error::Domain("argument too large".into()))?;
        Ok(HalfGamma { coeff: pochhammer(&rat(1, 2), m), sqrt_pi_power: 1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{RatPoly, Var};
    use proptest::prelude::*;

    fn z() -> RatPoly {
        RatPoly::identity(Var::Z)
    }

    #[test]
    fn pochhammer_small_values() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&rat(3, 2), 2), rat(15, 4));
        assert_eq!(pochhammer(&int(-3), 2), int(6));
    }

    #[test]
    fn hyp1f1_zero_order_is_one() {
        assert_eq!(hyp1f1_terminating(0, &rat(5, 2), &z()).unwrap(), RatPoly::one(Var::Z));
    }

    #[test]
    fn hyp1f1_second_order() {
        let f = hyp1f1_terminating(2, &rat(3, 2), &z()).unwrap();
        assert_eq!(f, RatPoly::new(vec![int(1), rat(-4, 3), rat(4, 15)], Var::Z));
    }

    #[test]
    fn hyp1f1_pole_is_reported() {
        let e = hyp1f1_terminating(3, &int(-1), &rat(1, 2)).unwrap_err();
        assert!(e.to_string().starts_with("parameter a hits nonpositive integer"));
        // a = -3 with n = 3 only meets (a)_k for k >= 4.
        assert!(hyp1f1_terminating(3, &int(-3), &rat(1, 2)).is_ok());
    }

    #[test]
    fn hyp1f1_first_order_in_scaled_square() {
        // l = 1, wa2 = 3/4: -(2l+3) 1F1(-1; l+3/2; wa2 x^2) = 2 wa2 x^2 - (2l+3).
        let (l, wa2) = (int(1), rat(3, 4));
        let x2 = RatPoly::monomial(wa2.clone(), 2, Var::X);
        let f = hyp1f1_terminating(1, &(&l + rat(3, 2)), &x2).unwrap();
        let scaled = f.scale(&-(int(2) * &l + int(3)));
        assert_eq!(scaled, RatPoly::new(vec![int(-5), int(0), int(2) * wa2], Var::X));
    }

    #[test]
    fn laguerre_low_orders() {
        let x = RatPoly::identity(Var::X);
        assert_eq!(laguerre_assoc(0, &rat(3, 7), &x), RatPoly::one(Var::X));
        assert_eq!(laguerre_assoc(1, &rat(1, 2), &x), RatPoly::new(vec![rat(3, 2), int(-1)], Var::X));
        assert_eq!(
            laguerre_assoc(2, &rat(3, 2), &x),
            RatPoly::new(vec![rat(35, 8), rat(-7, 2), rat(1, 2)], Var::X)
        );
    }

    #[test]
    fn half_integer_gamma() {
        assert_eq!(gamma_half_integer(&int(1)).unwrap(), HalfGamma { coeff: int(1), sqrt_pi_power: 0 });
        assert_eq!(gamma_half_integer(&int(5)).unwrap().coeff, int(24));
        let g = gamma_half_integer(&rat(5, 2)).unwrap();
        assert_eq!(g, HalfGamma { coeff: rat(3, 4), sqrt_pi_power: 1 });
        assert!(gamma_half_integer(&rat(1, 3)).is_err());
    }

    fn kummer_residual(n: u32, a: &Rational) -> RatPoly {
        let y = hyp1f1_terminating(n, a, &z()).unwrap();
        let y1 = y.derivative();
        let y2 = y1.derivative();
        let a_minus_z = RatPoly::new(vec![a.clone(), int(-1)], Var::Z);
        &(&(&z() * &y2) + &(&a_minus_z * &y1)) + &y.scale(&int(n as i64))
    }

    proptest! {
        #[test]
        fn kummer_ode_is_satisfied_exactly(n in 0u32..=6, p in 1i64..40, q in 1i64..9) {
            let a = rat(p, q);
            prop_assert!(kummer_residual(n, &a).is_zero());
        }

        #[test]
        fn pochhammer_splits(p in -30i64..30, q in 1i64..8, j in 0u32..=6, k in 0u32..=6) {
            let a = rat(p, q);
            let lhs = pochhammer(&a, j + k);
            let rhs = pochhammer(&a, j) * pochhammer(&(&a + int(j as i64)), k);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
