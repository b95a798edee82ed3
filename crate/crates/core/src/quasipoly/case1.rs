//! The pure isotonic limit `g = 0`, where `f` solves
//! `x f'' + (2(l+1) - 2 wa2 x^2) f' + (2Ea2 - wa2(2l+3)) x f = 0`.

use super::{banded_determinant, bands_from_ode, LinearOde, OdeCoefficients, PolySolution};
use crate::exactmath::{hyp1f1_terminating, int, rat, RatPoly, Rational, Var};

/// The ODE with `Ea2` kept symbolic.
pub fn ode_case1(l: i64, wa2: &Rational) -> OdeCoefficients {
    let c = |v: Rational| RatPoly::constant(v, Var::Ea2);
    let zero = RatPoly::zero(Var::Ea2);
    OdeCoefficients {
        a30: zero.clone(),
        a31: zero.clone(),
        a32: c(int(1)),
        a33: zero.clone(),
        a20: c(int(-2) * wa2),
        a21: zero.clone(),
        a22: c(int(2 * (l + 1))),
        tau10: RatPoly::new(vec![wa2 * int(2 * l + 3), int(-2)], Var::Ea2),
        tau11: zero,
    }
}

/// `Ea2` forced by the degree condition for degree `n'`:
/// `2Ea2 = wa2 (2n' + 2l + 3)`.
pub fn case1_energy(l: i64, wa2: &Rational, n_prime: usize) -> Rational {
    let cond = ode_case1(l, wa2).necessary_condition(n_prime);
    // cond = c0 + c1 Ea2
    -cond.coeff(0) / cond.coeff(1)
}

/// The determinant condition for degree `n'`; constant in every parameter.
pub fn case1_determinant(l: i64, wa2: &Rational, n_prime: usize) -> Rational {
    let b = bands_from_ode(&ode_case1(l, wa2), n_prime);
    super::constant_value(&banded_determinant(&b)).expect("case 1 bands are constants")
}

/// The numeric operator at the eigenvalue for degree `n'`, in `x`.
pub fn case1_operator(l: i64, wa2: &Rational, n_prime: usize) -> LinearOde {
    let e = case1_energy(l, wa2, n_prime);
    let c = ode_case1(l, wa2).map(|p| p.eval(&e));
    LinearOde::from_coefficients(&c, Var::X)
}

/// `f_n(x) = 1F1(-n; l + 3/2; wa2 x^2)`, normalized, for the state with
/// `2Ea2 = wa2 (4n + 2l + 3)`.
pub fn case1_eigenfunctions(l: i64, wa2: &Rational, n: u32) -> PolySolution {
    let arg = RatPoly::monomial(wa2.clone(), 2, Var::X);
    let f = hyp1f1_terminating(n, &(int(l) + rat(3, 2)), &arg).expect("l + 3/2 is never a nonpositive integer");
    let ode = case1_operator(l, wa2, 2 * n as usize);
    PolySolution::checked(f.normalized(), &ode, 2 * n as i64)
}
