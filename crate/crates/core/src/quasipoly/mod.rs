//! Polynomial solutions of
//!
//! ```text
//! (a30 x^3 + a31 x^2 + a32 x + a33) y'' + (a20 x^2 + a21 x + a22) y' - (tau10 x + tau11) y = 0
//! ```
//!
//! A degree-`n` solution exists iff `tau10 = n(n-1) a30 + n a20` and the
//! `(n+1) x (n+1)` banded determinant built from the coefficient recurrence
//! vanishes. The specialisations in [`case1`], [`case2`] and [`general`] turn
//! this into closed-form parameter conditions for the oscillator.

pub mod case1;
pub mod case2;
pub mod general;

use num_traits::Zero;

use crate::exactmath::{int, null_space, Field, RatPoly, Rational, Ring, Var};

/// Coefficients of the ODE class above, each a polynomial in whatever
/// unknown parameter the caller keeps symbolic (or a plain number).
#[derive(Clone, Debug, PartialEq)]
pub struct OdeCoefficients<R = RatPoly> {
    pub a30: R,
    pub a31: R,
    pub a32: R,
    pub a33: R,
    pub a20: R,
    pub a21: R,
    pub a22: R,
    pub tau10: R,
    pub tau11: R,
}

impl<R: Ring> OdeCoefficients<R> {
    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> OdeCoefficients<S> {
        OdeCoefficients {
            a30: f(&self.a30),
            a31: f(&self.a31),
            a32: f(&self.a32),
            a33: f(&self.a33),
            a20: f(&self.a20),
            a21: f(&self.a21),
            a22: f(&self.a22),
            tau10: f(&self.tau10),
            tau11: f(&self.tau11),
        }
    }

    /// The value `tau10` must take for a degree-`n` solution.
    pub fn required_tau10(&self, n: usize) -> R {
        let u = &self.a30;
        let nn = u.lift(&int((n * n.saturating_sub(1)) as i64));
        let n1 = u.lift(&int(n as i64));
        nn * self.a30.clone() + n1 * self.a20.clone()
    }

    /// `tau10 - n(n-1) a30 - n a20`; its vanishing is the degree condition.
    pub fn necessary_condition(&self, n: usize) -> R {
        self.tau10.clone() - self.required_tau10(n)
    }

    /// Same coefficients with `tau10` replaced by the degree-`n` value.
    pub fn with_degree(&self, n: usize) -> Self {
        let mut c = self.clone();
        c.tau10 = self.required_tau10(n);
        c
    }
}

/// Entries of the banded determinant. Row `m` holds `gamma[m]` in column
/// `m-1`, `beta[m]` on the diagonal, `alpha[m+1]` in column `m+1` and
/// `eta[m+1]` in column `m+2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandSequence<R = RatPoly> {
    pub n: usize,
    pub beta: Vec<R>,
    pub alpha: Vec<R>,
    pub gamma: Vec<R>,
    pub eta: Vec<R>,
}

impl<R: Ring> BandSequence<R> {
    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> BandSequence<S> {
        BandSequence {
            n: self.n,
            beta: self.beta.iter().map(&f).collect(),
            alpha: self.alpha.iter().map(&f).collect(),
            gamma: self.gamma.iter().map(&f).collect(),
            eta: self.eta.iter().map(&f).collect(),
        }
    }

    /// Dense `(n+1) x (n+1)` matrix.
    pub fn to_matrix(&self) -> Vec<Vec<R>> {
        let size = self.n + 1;
        let zero = self.beta[0].zero_like();
        let mut m = vec![vec![zero; size]; size];
        for r in 0..size {
            if r >= 1 {
                m[r][r - 1] = self.gamma[r].clone();
            }
            m[r][r] = self.beta[r].clone();
            if r + 1 < size {
                m[r][r + 1] = self.alpha[r + 1].clone();
            }
            if r + 2 < size {
                m[r][r + 2] = self.eta[r + 1].clone();
            }
        }
        m
    }
}

/// Band entries for a degree-`n` solution, with `tau10` fixed by the degree
/// condition.
pub fn bands_from_ode<R: Ring>(c: &OdeCoefficients<R>, n: usize) -> BandSequence<R> {
    bands_with_tau(&c.with_degree(n), n)
}

/// Band entries using `tau10` exactly as given.
pub fn bands_with_tau<R: Ring>(c: &OdeCoefficients<R>, n: usize) -> BandSequence<R> {
    let k = |v: i64| c.a30.lift(&int(v));
    let mut beta = Vec::with_capacity(n + 1);
    let mut alpha = Vec::with_capacity(n + 1);
    let mut gamma = Vec::with_capacity(n + 1);
    let mut eta = Vec::with_capacity(n + 1);
    for i in 0..=n as i64 {
        beta.push(c.tau11.clone() - k(i) * (k(i - 1) * c.a31.clone() + c.a21.clone()));
        alpha.push(-(k(i) * (k(i - 1) * c.a32.clone() + c.a22.clone())));
        gamma.push(c.tau10.clone() - k(i - 1) * (k(i - 2) * c.a30.clone() + c.a20.clone()));
        eta.push(-(k(i * (i + 1)) * c.a33.clone()));
    }
    BandSequence { n, beta, alpha, gamma, eta }
}

/// Determinant of the banded matrix by the four-term recurrence
/// `D_{k+1} = beta_k D_k - alpha_k gamma_k D_{k-1} + eta_{k-1} gamma_k gamma_{k-1} D_{k-2}`.
pub fn banded_determinant<R: Ring>(b: &BandSequence<R>) -> R {
    let one = b.beta[0].one_like();
    let mut d: Vec<R> = Vec::with_capacity(b.n + 2);
    d.push(one);
    for k in 0..=b.n {
        let mut next = b.beta[k].clone() * d[k].clone();
        if k >= 1 {
            next = next - b.alpha[k].clone() * b.gamma[k].clone() * d[k - 1].clone();
        }
        if k >= 2 && !b.eta[k - 1].is_zero_elem() {
            next = next + b.eta[k - 1].clone() * b.gamma[k].clone() * b.gamma[k - 1].clone() * d[k - 2].clone();
        }
        d.push(next);
    }
    d.pop().unwrap()
}

/// Coefficients `c_0..c_n` of the polynomial solution with `c_n = 1`, found
/// by solving rows `n..1` upwards, plus the residual of row 0 (zero exactly
/// when the determinant vanishes). `None` if some `gamma_m` vanishes.
pub fn band_null_vector<F: Field>(b: &BandSequence<F>) -> Option<(Vec<F>, F)> {
    let n = b.n;
    let zero = b.beta[0].zero_like();
    let mut c = vec![zero.clone(); n + 3];
    c[n] = b.beta[0].one_like();
    let at = |v: &Vec<F>, i: usize| -> F { v.get(i).cloned().unwrap_or_else(|| zero.clone()) };
    for m in (1..=n).rev() {
        if b.gamma[m].is_zero_elem() {
            return None;
        }
        let mut rhs = b.beta[m].clone() * c[m].clone();
        if m + 1 <= n {
            rhs = rhs + at(&b.alpha, m + 1) * c[m + 1].clone();
        }
        if m + 2 <= n {
            rhs = rhs + at(&b.eta, m + 1) * c[m + 2].clone();
        }
        c[m - 1] = -(rhs / b.gamma[m].clone());
    }
    let mut row0 = b.beta[0].clone() * c[0].clone();
    if n >= 1 {
        row0 = row0 + at(&b.alpha, 1) * c[1].clone();
    }
    if n >= 2 {
        row0 = row0 + at(&b.eta, 1) * c[2].clone();
    }
    c.truncate(n + 1);
    Some((c, row0))
}

/// `p2 y'' + p1 y' + p0 y` with polynomial coefficients in one variable.
#[derive(Clone, Debug)]
pub struct LinearOde {
    pub p2: RatPoly,
    pub p1: RatPoly,
    pub p0: RatPoly,
}

impl LinearOde {
    /// The operator of a fully numeric [`OdeCoefficients`] in variable `var`.
    pub fn from_coefficients(c: &OdeCoefficients<Rational>, var: Var) -> Self {
        let p = |v: Vec<Rational>| RatPoly::new(v, var);
        LinearOde {
            p2: p(vec![c.a33.clone(), c.a32.clone(), c.a31.clone(), c.a30.clone()]),
            p1: p(vec![c.a22.clone(), c.a21.clone(), c.a20.clone()]),
            p0: p(vec![-c.tau11.clone(), -c.tau10.clone()]),
        }
    }

    pub fn var(&self) -> Var {
        self.p2.var()
    }

    pub fn apply(&self, y: &RatPoly) -> RatPoly {
        let y = y.clone().with_var(self.var());
        let y1 = y.derivative();
        let y2 = y1.derivative();
        &(&(&self.p2 * &y2) + &(&self.p1 * &y1)) + &(&self.p0 * &y)
    }

    /// Basis of the polynomial solutions of degree at most `d`, from the
    /// exact null space of the operator on coefficient vectors.
    pub fn polynomial_solutions(&self, d: usize) -> Vec<RatPoly> {
        let var = self.var();
        let images: Vec<RatPoly> = (0..=d)
            .map(|j| self.apply(&RatPoly::monomial(Rational::from_integer(1.into()), j, var)))
            .collect();
        let rows = images.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let matrix: Vec<Vec<Rational>> = (0..rows)
            .map(|r| images.iter().map(|p| p.coeff(r)).collect())
            .collect();
        null_space(&matrix, d + 1)
            .into_iter()
            .map(|v| RatPoly::new(v, var).normalized())
            .collect()
    }
}

/// A polynomial factor together with the ODE it solves.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySolution {
    pub polynomial: RatPoly,
    pub variable: Var,
    /// The index `n` of the ODE family member it satisfies.
    pub ode_index: i64,
    /// The operator applied to `polynomial`; the zero polynomial when valid.
    pub substitution_residual: RatPoly,
}

impl PolySolution {
    pub fn checked(polynomial: RatPoly, ode: &LinearOde, ode_index: i64) -> Self {
        let variable = ode.var();
        let polynomial = polynomial.with_var(variable);
        let substitution_residual = ode.apply(&polynomial);
        PolySolution { polynomial, variable, ode_index, substitution_residual }
    }

    pub fn is_exact(&self) -> bool {
        self.substitution_residual.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.polynomial.degree().unwrap_or(0)
    }
}

/// True if every coefficient is a rational constant.
pub(crate) fn constant_value(p: &RatPoly) -> Option<Rational> {
    match p.degree() {
        None => Some(Rational::zero()),
        Some(0) => Some(p.coeff(0)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{dense_determinant, rat};
    use proptest::prelude::*;

    fn synthetic(vals: &[i64]) -> OdeCoefficients<Rational> {
        let r: Vec<Rational> = vals.iter().map(|&v| int(v)).collect();
        OdeCoefficients {
            a30: r[0].clone(),
            a31: r[1].clone(),
            a32: r[2].clone(),
            a33: r[3].clone(),
            a20: r[4].clone(),
            a21: r[5].clone(),
            a22: r[6].clone(),
            tau10: r[7].clone(),
            tau11: r[8].clone(),
        }
    }

    #[test]
    fn one_by_one_determinant_is_beta0() {
        let c = synthetic(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let b = bands_from_ode(&c, 0);
        assert_eq!(banded_determinant(&b), b.beta[0]);
    }

    #[test]
    fn bands_follow_the_coefficient_recurrence() {
        let c = synthetic(&[1, -2, 1, 0, 4, -3, 5, 0, 7]);
        let b = bands_from_ode(&c, 4);
        for n in 0..=4i64 {
            let i = n as usize;
            assert_eq!(b.beta[i], int(7) - int(n) * (int(n - 1) * int(-2) + int(-3)));
            assert_eq!(b.alpha[i], -int(n) * (int(n - 1) + int(5)));
            assert_eq!(b.gamma[i], int(4 * 4 + 4 * 3) - int(n - 1) * (int(n - 2) + int(4)));
            assert!(b.eta[i].is_zero());
        }
    }

    #[test]
    fn vanishing_determinant_gives_the_polynomial() {
        // y'' - 2x y' + 2n y = 0 (Hermite): a32 = 0... use a33 = 1, a20 = 0,
        // a21 = -2, tau11 = -2n.
        let n = 4;
        let c = synthetic(&[0, 0, 0, 1, 0, -2, 0, 0, -2 * n]);
        let b = bands_from_ode(&c, n as usize);
        assert!(banded_determinant(&b).is_zero());
        let ode = LinearOde::from_coefficients(&c, Var::X);
        let sols = ode.polynomial_solutions(n as usize);
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0], RatPoly::from_ints(&[3, 0, -12, 0, 4], Var::X));
    }

    fn small_ode() -> impl Strategy<Value = OdeCoefficients<Rational>> {
        prop::collection::vec((-6i64..6, 1i64..4), 9).prop_map(|v| {
            let r: Vec<Rational> = v.into_iter().map(|(a, b)| rat(a, b)).collect();
            OdeCoefficients {
                a30: r[0].clone(),
                a31: r[1].clone(),
                a32: r[2].clone(),
                a33: r[3].clone(),
                a20: r[4].clone(),
                a21: r[5].clone(),
                a22: r[6].clone(),
                tau10: r[7].clone(),
                tau11: r[8].clone(),
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn continuant_matches_dense_determinant(c in small_ode(), n in 0usize..6) {
            let b = bands_with_tau(&c, n);
            let dense = dense_determinant(&b.to_matrix(), &int(1));
            prop_assert_eq!(banded_determinant(&b), dense);
        }

        #[test]
        fn matrix_is_the_operator_on_coefficients(c in small_ode(), n in 1usize..6) {
            let c = c.with_degree(n);
            let b = bands_with_tau(&c, n);
            let ode = LinearOde::from_coefficients(&c, Var::X);
            let m = b.to_matrix();
            let coeffs: Vec<Rational> = (0..=n as i64).map(|i| rat(i * i - 3, i + 1)).collect();
            let y = RatPoly::new(coeffs.clone(), Var::X);
            let image = ode.apply(&y);
            for (row, entries) in m.iter().enumerate() {
                let dot: Rational = entries.iter().zip(&coeffs).map(|(a, b)| a * b).sum();
                prop_assert_eq!(-image.coeff(row), dot);
            }
            prop_assert!(image.degree().map_or(true, |d| d <= n));
        }

        #[test]
        fn continuant_over_polynomials(p in -5i64..5, q in -5i64..5, n in 0usize..5) {
            let mu = RatPoly::identity(Var::Mu);
            let konst = |v: i64| RatPoly::constant(int(v), Var::Mu);
            let c = OdeCoefficients {
                a30: konst(1), a31: konst(-2), a32: konst(1), a33: konst(p),
                a20: &mu * &konst(q), a21: &mu + &konst(1), a22: konst(3),
                tau10: &mu * &mu, tau11: mu.clone(),
            };
            let b = bands_with_tau(&c, n);
            let dense = dense_determinant(&b.to_matrix(), &konst(1));
            prop_assert_eq!(banded_determinant(&b), dense);
        }
    }
}
