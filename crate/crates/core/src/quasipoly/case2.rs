//! The coupling `g = 2(1+l+t)(3+2l+2t)` with `mu = -2(1+l+t)`, where
//! `t = a^2 w`. In `z = x^2 + 1` the factor `f` solves
//!
//! ```text
//! 4z(z-1) f'' - (4t z^2 + 2(6l+5+6t) z - 16(l+1+t)) f' + (2Ea2 + t(6l+5+8t)) z f = 0
//! ```
//!
//! and the determinant condition becomes a polynomial in `t` alone.

use super::{band_null_vector, banded_determinant, bands_from_ode, LinearOde, OdeCoefficients, PolySolution};
use crate::error::{Error, Result};
use crate::exactmath::{
    gamma_half_integer, hyp1f1_terminating, int, laguerre_assoc, rat, BigReal, Precision, RatPoly, Rational, RealPoly,
    RealRoot, Var,
};

/// Coefficients for index `n`, polynomial in `t`; `tau10` already carries
/// the degree-`n` value `-4nt`, which fixes `Ea2` through [`case2_energy`].
pub fn ode_case2(l: i64, n: usize) -> OdeCoefficients {
    let v = Var::Wa2;
    let c = |x: i64| RatPoly::constant(int(x), v);
    OdeCoefficients {
        a30: c(0),
        a31: c(4),
        a32: c(-4),
        a33: c(0),
        a20: RatPoly::from_ints(&[0, -4], v),
        a21: RatPoly::from_ints(&[-2 * (6 * l + 5), -12], v),
        a22: RatPoly::from_ints(&[16 * (l + 1), 16], v),
        tau10: RatPoly::from_ints(&[0, -4 * n as i64], v),
        tau11: c(0),
    }
}

/// `2Ea2 = t(4n - 6l - 5 - 8t)`.
pub fn case2_two_ea2(l: i64, n: usize, t: &Rational) -> Rational {
    t * (int(4 * n as i64 - 6 * l - 5) - int(8) * t)
}

/// The full determinant `Delta_{n+1}` as a polynomial in `t`.
pub fn case2_delta(l: i64, n: usize) -> RatPoly {
    banded_determinant(&bands_from_ode(&ode_case2(l, n), n))
}

/// `t (l+1+t)(1+2l+2t)`, the factor common to every `Delta_{n+1}`, `n >= 2`.
pub fn case2_common_factor(l: i64) -> RatPoly {
    let v = Var::Wa2;
    let t = RatPoly::identity(v);
    let a = RatPoly::from_ints(&[l + 1, 1], v);
    let b = RatPoly::from_ints(&[1 + 2 * l, 2], v);
    &(&t * &a) * &b
}

/// `Q_{n-1}^l(t)`: the determinant with the common factor divided out,
/// normalized to coprime integer coefficients.
pub fn case2_q(l: i64, n: usize) -> Result<RatPoly> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n}: the factorization needs n >= 2")));
    }
    let delta = case2_delta(l, n);
    let (q, r) = delta.div_rem(&case2_common_factor(l));
    if !r.is_zero() {
        return Err(Error::FactorizationViolated { l, n: n as u32, remainder: r.to_string() });
    }
    Ok(q.normalized())
}

/// The numeric operator in `z` at a rational `t`.
pub fn case2_operator(l: i64, n: usize, t: &Rational) -> LinearOde {
    LinearOde::from_coefficients(&ode_case2(l, n).map(|p| p.eval(t)), Var::Z)
}

/// Exact data of a quasi-exact state at a rational root.
#[derive(Clone, Debug)]
pub struct Case2Exact {
    pub wa2: Rational,
    pub g: Rational,
    pub mu: Rational,
    pub two_ea2: Rational,
    /// `(wa2)^2`, the coefficient of `x^2` in the potential.
    pub potential_x2: Rational,
    /// `2g`, the coefficient of `(x^2-1)/(x^2+1)^2`.
    pub potential_coupling: Rational,
    pub factor_z: PolySolution,
    pub factor_x: RatPoly,
}

#[derive(Clone, Debug)]
pub struct Case2Solution {
    pub l: i64,
    pub n: usize,
    pub wa2: BigReal,
    pub g: BigReal,
    pub mu: BigReal,
    pub two_ea2: BigReal,
    /// Polynomial factor in `z` with unit leading coefficient.
    pub factor_z: RealPoly,
    pub factor_x: RealPoly,
    /// Residual of the one equation not used to build `factor_z`.
    pub factor_residual: BigReal,
    pub exact: Option<Case2Exact>,
}

impl Case2Solution {
    pub fn ea2(&self) -> BigReal {
        self.two_ea2.div_i64(2)
    }
}

fn z_of_x(prec: Precision) -> RealPoly {
    RealPoly::new(vec![BigReal::one(prec), BigReal::zero(prec), BigReal::one(prec)], Var::X)
}

/// Full solution package at a root `t` of `Q_{n-1}^l`.
pub fn case2_solution_at_root(l: i64, n: usize, root: &RealRoot, digits: u32) -> Result<Case2Solution> {
    let prec = Precision::digits(digits);
    let t = root.value.with_precision(prec);
    if !t.is_positive() {
        return Err(Error::Unphysical(t.to_sci(12)));
    }
    let one = BigReal::one(prec);
    let lp1 = BigReal::from_i64(l + 1, prec);
    let g = (&lp1 + &t).mul_i64(2) * (BigReal::from_i64(3 + 2 * l, prec) + t.mul_i64(2));
    let mu = -(&lp1 + &t).mul_i64(2);
    let two_ea2 = &t * &(BigReal::from_i64(4 * n as i64 - 6 * l - 5, prec) - t.mul_i64(8));
    let bands = bands_from_ode(&ode_case2(l, n).map(|p| p.eval_real(&t)), n);
    let (coeffs, row0) = band_null_vector(&bands).ok_or_else(|| Error::Domain("vanishing sub-diagonal".into()))?;
    let factor_z = RealPoly::new(coeffs, Var::Z);
    let factor_x = factor_z.compose(&z_of_x(prec));
    let factor_residual = row0.abs() / factor_z.max_abs_coeff().max(&one).clone();
    let exact = match &root.exact {
        Some(tr) => Some(exact_package(l, n, tr)?),
        None => None,
    };
    Ok(Case2Solution { l, n, wa2: t, g, mu, two_ea2, factor_z, factor_x, factor_residual, exact })
}

fn exact_package(l: i64, n: usize, t: &Rational) -> Result<Case2Exact> {
    let g = int(2) * (int(l + 1) + t) * (int(3 + 2 * l) + int(2) * t);
    let mu = int(-2) * (int(l + 1) + t);
    let ode = case2_operator(l, n, t);
    let sols = ode.polynomial_solutions(n);
    let f = sols
        .into_iter()
        .find(|p| p.degree() == Some(n))
        .ok_or_else(|| Error::Domain(format!("no degree-{n} solution at t = {t}")))?;
    let factor_z = PolySolution::checked(f, &ode, n as i64);
    let x2p1 = RatPoly::from_ints(&[1, 0, 1], Var::X);
    let factor_x = factor_z.polynomial.compose(&x2p1).normalized();
    Ok(Case2Exact {
        wa2: t.clone(),
        potential_x2: t * t,
        potential_coupling: &g * int(2),
        g,
        mu,
        two_ea2: case2_two_ea2(l, n, t),
        factor_z,
        factor_x,
    })
}

/// One index of the exactly solvable family `l = -1`, `wa2 = 1/2`, `g = 2`.
#[derive(Clone, Debug)]
pub struct FamilyEntry {
    pub index: usize,
    /// `2Ea2 = 2n - 3/2`.
    pub two_ea2: Rational,
    /// `None` when no degree-`index` polynomial solves the ODE.
    pub solution: Option<PolySolution>,
}

/// The operator `4z(z-1) f'' - (2z^2 + 4z - 8) f' + 2nz f`.
pub fn exact_family_operator(n: usize) -> LinearOde {
    case2_operator(-1, n, &rat(1, 2))
}

/// Attempts a degree-`n` solution for every index `0..=max_index`.
pub fn exact_family(max_index: usize) -> Vec<FamilyEntry> {
    (0..=max_index)
        .map(|n| {
            let ode = exact_family_operator(n);
            let solution = ode
                .polynomial_solutions(n)
                .into_iter()
                .find(|p| p.degree() == Some(n))
                .map(|p| PolySolution::checked(p, &ode, n as i64));
            FamilyEntry { index: n, two_ea2: int(2 * n as i64) - rat(3, 2), solution }
        })
        .collect()
}

/// The hypergeometric and Laguerre generators of the family, evaluated for
/// generator index `m >= 1` (both produce the degree `m + 1` member).
#[derive(Clone, Debug)]
pub struct FamilyClosedForms {
    pub index: usize,
    pub hypergeometric: RatPoly,
    pub laguerre: RatPoly,
    /// `3 (-1)^m sqrt(pi) Gamma(m) / (2 Gamma(m + 3/2))`, rational after the
    /// `sqrt(pi)` cancels.
    pub laguerre_prefactor: Rational,
    pub family_member: PolySolution,
}

pub fn exact_family_closed_forms(m: usize) -> Result<FamilyClosedForms> {
    if m == 0 {
        return Err(Error::InvalidInput("generator index starts at 1; index 0 is the constant 1".into()));
    }
    let v = Var::Z;
    let mi = m as i64;
    let z = RatPoly::identity(v);
    let u = RatPoly::new(vec![rat(-1, 2), rat(1, 2)], v);
    let h0 = hyp1f1_terminating(m as u32, &rat(3, 2), &u)?;
    let h1 = hyp1f1_terminating(m as u32 - 1, &rat(3, 2), &u)?;
    let hyp = &(&z * &h0).scale(&int(-3 * (2 * mi + 1))) + &(&RatPoly::from_ints(&[-1, mi + 1], v) * &h1).scale(&int(6));

    let (ratio, sqrt_pi) = gamma_half_integer(&int(mi))?.ratio(&gamma_half_integer(&(int(mi) + rat(3, 2)))?);
    debug_assert_eq!(sqrt_pi, -1);
    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
    let pref = int(3) * sign * ratio / int(2);
    let zm1 = RatPoly::from_ints(&[-1, 1], v);
    let zm1sq = &zm1 * &zm1;
    let a = &zm1sq.scale(&int(mi + 1)) + &RatPoly::constant(int(mi), v);
    let b = &zm1 * &RatPoly::from_ints(&[-1, mi + 1], v);
    let lag = (&(&a * &laguerre_assoc(m as u32, &rat(1, 2), &u)) - &(&b * &laguerre_assoc(m as u32, &rat(3, 2), &u)))
        .scale(&pref);

    let member = exact_family(m + 1)
        .pop()
        .and_then(|e| e.solution)
        .ok_or_else(|| Error::Domain(format!("no family member of degree {}", m + 1)))?;
    for candidate in [&hyp, &lag] {
        if !candidate.is_scalar_multiple_of(&member.polynomial) {
            return Err(Error::NotProportional { left: candidate.to_string(), right: member.polynomial.to_string() });
        }
    }
    Ok(FamilyClosedForms { index: m, hypergeometric: hyp, laguerre: lag, laguerre_prefactor: pref, family_member: member })
}
