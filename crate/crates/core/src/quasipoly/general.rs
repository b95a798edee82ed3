//! Quasi-polynomial solutions `x^{l+1} (1+x^2)^mu e^{-wa2 x^2/2} f(t)` with
//! `t = x^2/(1+x^2)` and unknown exponent `mu`. A degree-`k` factor needs
//! `g = (mu-k)(mu-k-1)` together with `Delta_{k+1}(mu) = 0`, and then
//! `E/w = l + 3/2 + 2mu`.

use super::{band_null_vector, banded_determinant, bands_from_ode, bands_with_tau, OdeCoefficients};
use crate::error::{Error, Result};
use crate::exactmath::{
    int, poly_real_roots, rat, BigReal, Precision, RatPoly, Rational, RealPoly, Ring, RootInterval, Var,
};

/// Coefficients of the `f(t)` equation over any ring holding `mu` and `g`.
pub fn ode_general_in<R: Ring>(l: &Rational, wa2: &Rational, mu: &R, g: &R) -> OdeCoefficients<R> {
    let c = |r: Rational| mu.lift(&r);
    let one = int(1);
    let lh = l + rat(3, 2);
    OdeCoefficients {
        a30: c(one.clone()),
        a31: c(int(-2)),
        a32: c(one.clone()),
        a33: c(int(0)),
        a20: -(mu.clone() - c(one.clone())) * c(int(2)),
        a21: mu.clone() * c(int(2)) - c(wa2 + l + rat(7, 2)),
        a22: c(lh.clone()),
        tau10: g.clone() - mu.clone() * (mu.clone() - c(one)),
        tau11: -(g.clone() * c(rat(1, 2))) - mu.clone() * c(&lh + wa2),
    }
}

/// The equation for degree `k`, polynomial in `mu` after `g = (mu-k)(mu-k-1)`.
pub fn ode_general(k: usize, l: &Rational, wa2: &Rational) -> OdeCoefficients {
    let mu = RatPoly::identity(Var::Mu);
    let g = coupling_poly(k);
    ode_general_in(l, wa2, &mu, &g)
}

/// `(mu-k)(mu-k-1)` as a polynomial in `mu`.
pub fn coupling_poly(k: usize) -> RatPoly {
    let k = k as i64;
    &RatPoly::from_ints(&[-k, 1], Var::Mu) * &RatPoly::from_ints(&[-k - 1, 1], Var::Mu)
}

/// `Delta_{k+1}` as a polynomial in `mu`.
pub fn quasi_condition(k: usize, l: &Rational, wa2: &Rational) -> RatPoly {
    banded_determinant(&bands_from_ode(&ode_general(k, l, wa2), k))
}

#[derive(Clone, Debug)]
pub struct QuasiSolution {
    pub k: usize,
    pub l: Rational,
    pub wa2: Rational,
    pub mu: BigReal,
    pub mu_exact: Option<Rational>,
    pub g: BigReal,
    pub g_exact: Option<Rational>,
    /// `Ea2 = (2l + 3 + 4mu) wa2 / 2`.
    pub energy_scaled: BigReal,
    /// `E/w = l + 3/2 + 2mu`.
    pub e_over_w: BigReal,
    /// `Delta_{k+1}` rebuilt from the numeric `mu` and `g`.
    pub residual_det: BigReal,
    /// `g - (mu-k)(mu-k-1)`, read off the equation coefficients.
    pub residual_g: BigReal,
    /// `g > 0`.
    pub physical: bool,
    pub multiplicity: u32,
    /// Factor `f(t)` with unit leading coefficient.
    pub factor_t: RealPoly,
}

impl QuasiSolution {
    /// `Ea2 / (2 wa2) = (2l + 3 + 4mu)/4`.
    pub fn reduced_energy(&self) -> BigReal {
        let p = self.mu.precision();
        self.mu.clone() + BigReal::from_rational(&((&self.l * int(2) + int(3)) / int(4)), p)
    }

    pub fn energy_exact(&self) -> Option<Rational> {
        self.mu_exact.as_ref().map(|m| (&self.l * int(2) + int(3) + m * int(4)) * &self.wa2 / int(2))
    }
}

/// All real roots of the degree-`k` condition with their physical data.
pub fn general_quasi_solve(k: usize, l: &Rational, wa2: &Rational, digits: u32) -> Result<Vec<QuasiSolution>> {
    let p = quasi_condition(k, l, wa2);
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let prec = Precision::digits(digits);
    let roots = poly_real_roots(&p, &RootInterval::default(), digits + 10)?;
    let ki = k as i64;
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let mu = r.value.with_precision(prec);
        let g = (&mu - &BigReal::from_i64(ki, prec)) * (&mu - &BigReal::from_i64(ki + 1, prec));
        let g_exact = r.exact.as_ref().map(|m| (m - int(ki)) * (m - int(ki + 1)));
        let lh = BigReal::from_rational(&(l + rat(3, 2)), prec);
        let e_over_w = &lh + &mu.mul_i64(2);
        let energy_scaled = &e_over_w * &BigReal::from_rational(wa2, prec);
        let c = ode_general_in(l, wa2, &mu, &g);
        let residual_det = banded_determinant(&bands_with_tau(&c, k));
        let residual_g = c.necessary_condition(k);
        let factor_t = match band_null_vector(&bands_with_tau(&c, k)) {
            Some((coeffs, _)) => RealPoly::new(coeffs, Var::T),
            None => RealPoly::new(vec![BigReal::one(prec)], Var::T),
        };
        out.push(QuasiSolution {
            k,
            l: l.clone(),
            wa2: wa2.clone(),
            physical: g.is_positive(),
            mu,
            mu_exact: r.exact,
            g,
            g_exact,
            energy_scaled,
            e_over_w,
            residual_det,
            residual_g,
            multiplicity: r.multiplicity,
            factor_t,
        });
    }
    Ok(out)
}

/// One branch `l(mu)` of the degree-one condition.
#[derive(Clone, Debug)]
pub struct LBranch {
    /// Sign in front of the square root.
    pub sign: i8,
    pub l: BigReal,
    /// `Ea2 = (2l + 3 + 4mu) wa2 / 2` on this branch.
    pub energy_scaled: BigReal,
    /// Coefficient `c` of the factor `1 + c x^2`.
    pub x2_coefficient: BigReal,
}

#[derive(Clone, Debug)]
pub struct N1ClosedForms {
    pub mu: BigReal,
    pub wa2: Rational,
    /// `g = (mu-1)(mu-2)`.
    pub g: BigReal,
    pub discriminant: BigReal,
    /// Branches with `l >= -1`.
    pub branches: Vec<LBranch>,
    /// For `wa2 = (j+1)/2`: the two `a^2 E` values, `+` root first.
    pub half_integer: Option<(usize, [BigReal; 2])>,
}

/// `l(mu)`, energies and wavefunction coefficients for the degree-one
/// family at fixed `mu` and `wa2`.
pub fn n1_closed_forms(mu: &BigReal, wa2: &Rational) -> Result<N1ClosedForms> {
    if mu.is_zero() {
        return Err(Error::InvalidInput("mu = 0 makes the l branches singular".into()));
    }
    let prec = mu.precision();
    let n = |v: i64| BigReal::from_i64(v, prec);
    let t = BigReal::from_rational(wa2, prec);
    let mu2 = mu * mu;
    let disc = n(4) - (n(3) + t.mul_i64(8)).mul_i64(4) * mu.clone() + mu2.mul_i64(9);
    if disc.is_negative() {
        return Err(Error::NoRealBranch(format!("discriminant {} < 0", disc.to_sci(12))));
    }
    let root = disc.sqrt();
    let base = n(2) - (n(5) + t.mul_i64(4)) * mu.clone() - mu2.mul_i64(2);
    let tol = prec.epsilon(10);
    let mut branches = Vec::new();
    for sign in [1i8, -1] {
        let s = if sign > 0 { root.clone() } else { -root.clone() };
        let l = (&base + &s) / mu.mul_i64(4);
        if (&l + &n(1)) < -tol.clone() {
            continue;
        }
        let energy_scaled = (l.mul_i64(2) + n(3) + mu.mul_i64(4)) * t.clone() / n(2);
        let shift = l.mul_i64(2) + mu.clone() + t.mul_i64(2);
        let x2_coefficient = (&shift + &n(1)) / (&shift + &n(5));
        branches.push(LBranch { sign, l, energy_scaled, x2_coefficient });
    }
    if branches.is_empty() {
        return Err(Error::NoRealBranch(format!("both branches fall below l = -1 at mu = {}", mu.to_sci(12))));
    }
    let twice = wa2 * int(2) - int(1);
    let half_integer = if twice.is_integer() && twice >= int(0) {
        let j = twice.to_integer().to_string().parse::<i64>().unwrap_or(0);
        let r = (n(4) - n(4 * j + 7).mul_i64(4) * mu.clone() + mu2.mul_i64(9)).sqrt();
        let core = n(-2) + n(2 * j + 1) * mu.clone() - mu2.mul_i64(6);
        let pre = -n(j + 1) / mu.mul_i64(8);
        Some((j as usize, [&pre * &(&core + &r), &pre * &(&core - &r)]))
    } else {
        None
    };
    Ok(N1ClosedForms { mu: mu.clone(), wa2: wa2.clone(), g: (mu - &n(1)) * (mu - &n(2)), discriminant: disc, branches, half_integer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::within;
    use proptest::prelude::*;

    fn p() -> Precision {
        Precision::digits(50)
    }

    fn r(v: &Rational) -> BigReal {
        BigReal::from_rational(v, p())
    }

    // g^2 + g(-1 + 10mu + 2l(2mu+1) + 2t(2mu-1)) + mu(mu-1)(15 + 4l^2 + 8l(2+t) + 4t(5+t))
    fn degree_one_expanded(l: &Rational, t: &Rational, mu: &Rational, g: &Rational) -> Rational {
        let one = int(1);
        let two = int(2);
        g * g
            + g * (int(-1) + int(10) * mu + &two * l * (&two * mu + &one) + &two * t * (&two * mu - &one))
            + mu * (mu - &one) * (int(15) + int(4) * l * l + int(8) * l * (&two + t) + int(4) * t * (int(5) + t))
    }

    fn degree_two_expanded(l: &Rational, t: &Rational, mu: &Rational, g: &Rational) -> Rational {
        let i = int;
        let a = i(3) * g * g * (i(7) * mu - i(1) + i(2) * l * (i(1) + mu) + i(2) * t * (mu - i(1)));
        let b = i(18) + i(56) * l + i(8) * l * l + i(18) * (i(7) + i(2) * l) * mu
            - i(3) * (i(5) + i(2) * l) * (i(7) + i(2) * l) * mu * mu
            - i(12) * t * (mu - i(1)) * ((i(7) + i(2) * l) * mu - i(4))
            - i(4) * t * t * (i(2) + i(3) * (mu - i(2)) * mu);
        let c = mu * (mu - i(2)) * (mu - i(1))
            * (i(105) + i(142) * l + i(60) * l * l + i(8) * l * l * l + i(6) * t * (i(5) + i(2) * l) * (i(7) + i(2) * l)
                + i(12) * t * t * (i(7) + i(2) * l)
                + i(8) * t * t * t);
        g * g * g + a - g * b + c
    }

    fn delta(k: usize, l: &Rational, t: &Rational, mu: &Rational, g: &Rational) -> Rational {
        banded_determinant(&bands_with_tau(&ode_general_in(l, t, mu, g), k))
    }

    proptest! {
        #[test]
        fn degree_one_determinant_matches(l in -1i64..4, tn in 1i64..9, mn in -30i64..30, gn in -40i64..40) {
            let (l, t, mu, g) = (int(l), rat(tn, 2), rat(mn, 3), rat(gn, 5));
            prop_assert_eq!(delta(1, &l, &t, &mu, &g) * int(4), degree_one_expanded(&l, &t, &mu, &g));
        }

        #[test]
        fn degree_two_determinant_matches(l in -1i64..4, tn in 1i64..9, mn in -30i64..30, gn in -40i64..40) {
            let (l, t, mu, g) = (int(l), rat(tn, 2), rat(mn, 3), rat(gn, 5));
            prop_assert_eq!(delta(2, &l, &t, &mu, &g) * int(-8), degree_two_expanded(&l, &t, &mu, &g));
        }

        #[test]
        fn necessary_condition_is_coupling(k in 0usize..5, mn in -30i64..30, gn in -40i64..40) {
            let (l, t, mu, g) = (int(0), rat(1, 2), rat(mn, 7), rat(gn, 3));
            let c = ode_general_in(&l, &t, &mu, &g);
            let ki = int(k as i64);
            prop_assert_eq!(c.necessary_condition(k), &g - (&mu - &ki) * (&mu - &ki - int(1)));
        }
    }

    #[test]
    fn band_closed_forms() {
        let (l, t) = (rat(1, 1), rat(3, 2));
        let (mu, g) = (rat(-7, 3), rat(11, 5));
        let b = bands_with_tau(&ode_general_in(&l, &t, &mu, &g), 3);
        for n in 0..=3i64 {
            let nn = int(n);
            let beta = -(&g + (&mu - &nn) * (int(3) + &l * int(2) + int(4) * &nn + &t * int(2))) / int(2);
            let alpha = -&nn * (&nn + &l + rat(1, 2));
            let gamma = &g - (&mu - &nn + int(1)) * (&mu - &nn);
            assert_eq!(b.beta[n as usize], beta);
            assert_eq!(b.alpha[n as usize], alpha);
            assert_eq!(b.gamma[n as usize], gamma);
        }
    }

    #[test]
    fn ground_state_branch() {
        for (l, t) in [(int(-1), rat(1, 2)), (int(0), int(1)), (int(2), rat(3, 2))] {
            let sols = general_quasi_solve(0, &l, &t, 40).unwrap();
            let mu = int(-2) * (&l + int(1) + &t);
            let g = int(2) * (&l + int(1) + &t) * (int(3) + &l * int(2) + &t * int(2));
            let s = sols.iter().find(|s| s.mu_exact.as_ref() == Some(&mu)).unwrap();
            assert_eq!(s.g_exact.as_ref(), Some(&g));
            assert_eq!(s.energy_exact().unwrap(), -&t * (int(5) + int(6) * &l + int(8) * &t) / int(2));
            assert!(sols.iter().any(|s| s.mu_exact == Some(int(0))));
        }
    }

    #[test]
    fn rational_row_degree_one() {
        let sols = general_quasi_solve(1, &int(0), &rat(1, 2), 40).unwrap();
        let s = sols.iter().find(|s| s.mu_exact == Some(int(0))).unwrap();
        assert_eq!(s.g_exact, Some(int(2)));
        assert!(within(&s.e_over_w, &BigReal::from_rational(&rat(3, 2), Precision::digits(40)), &Precision::digits(40).epsilon(3)));
        // The surd pair -(7 +- sqrt 17)/2.
        let pr = Precision::digits(40);
        let s17 = BigReal::from_i64(17, pr).sqrt();
        for sg in [1i64, -1] {
            let mu = -(BigReal::from_i64(7, pr) + s17.mul_i64(sg)) / BigReal::from_i64(2, pr);
            assert!(sols.iter().any(|s| within(&s.mu, &mu, &pr.epsilon(5))));
        }
    }

    #[test]
    fn degree_two_rows() {
        let want = [-7.398182984326876, -3.3550579014968194, 0.9498105417574756];
        let sols = general_quasi_solve(2, &int(-1), &int(1), 50).unwrap();
        for w in want {
            let s = sols.iter().find(|s| (s.mu.to_f64() - w).abs() < 1e-12).unwrap();
            assert!(s.residual_det.abs() < p().epsilon(12));
            assert!(s.residual_g.abs() < p().epsilon(12));
            assert!(s.physical);
            assert!((s.reduced_energy().to_f64() - (w + 0.25)).abs() < 1e-12);
        }
    }

    #[test]
    fn degree_one_factor_coefficient() {
        let (l, t) = (int(0), int(1));
        for s in general_quasi_solve(1, &l, &t, 50).unwrap() {
            if !s.physical {
                continue;
            }
            // (1+x^2) (c0 + t) = c0 (1 + (1 + 1/c0) x^2)
            let c0 = s.factor_t.coeffs[0].clone();
            let c = (&c0 + &BigReal::one(p())) / c0;
            let mu = &s.mu;
            let shift = mu + &r(&(&l * int(2) + &t * int(2)));
            let want = (&shift + &BigReal::from_i64(1, p())) / (&shift + &BigReal::from_i64(5, p()));
            assert!(within(&c, &want, &p().epsilon(10)));
        }
    }

    #[test]
    fn degree_one_l_branches() {
        let pr = p();
        for (l, t) in [(int(0), int(1)), (int(-1), rat(1, 2)), (int(1), rat(3, 2))] {
            for s in general_quasi_solve(1, &l, &t, 50).unwrap() {
                if s.mu.is_zero() || !s.physical {
                    continue;
                }
                let Ok(cf) = n1_closed_forms(&s.mu, &t) else { continue };
                let lr = r(&l);
                assert!(cf.branches.iter().any(|b| within(&b.l, &lr, &pr.epsilon(10))));
                if let Some((j, pair)) = &cf.half_integer {
                    assert_eq!(rat(*j as i64 + 1, 2), t);
                    let b = cf.branches.iter().find(|b| within(&b.l, &lr, &pr.epsilon(10))).unwrap();
                    let which = if b.sign < 0 { &pair[0] } else { &pair[1] };
                    assert!(within(which, &b.energy_scaled, &pr.epsilon(10)));
                    assert!(within(&b.energy_scaled, &s.energy_scaled, &pr.epsilon(10)));
                }
            }
        }
    }

    #[test]
    fn no_real_branch_reported() {
        // 4 - 4(3+8t)mu + 9mu^2 < 0 near mu = 1 for t = 1.
        let e = n1_closed_forms(&BigReal::one(p()), &int(1)).unwrap_err();
        assert!(e.to_string().starts_with("no real l branch"));
    }
}
