//! Asymptotic iteration method on the compactified coordinate `t in (0, 1)`.
//!
//! The radial problem is rewritten as `y'' = lambda0 y' + s0 y` with
//! rational coefficient functions of `t`. Both are carried as truncated
//! Taylor series about a point `t0`; iterating
//!
//! ```text
//! lambda_n = lambda_{n-1}' + s_{n-1} + lambda0 lambda_{n-1}
//! s_n      = s_{n-1}'      + s0 lambda_{n-1}
//! ```
//!
//! and evaluating `delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n` at `t0`
//! gives a function of the energy whose stable roots are the eigenvalues.

mod search;
mod series;

pub use search::{find_eigenvalues, quasi_exact_crosscheck, AimConfig, EigenResult, EigenSearch, T0_SCHEDULE};
pub use series::TaylorSeries;

use crate::error::{Error, Result};
use crate::exactmath::{BigReal, Precision};

/// Parameters of one trial: `epsilon = Ea2 / (2 wa2) - (2l+3)/4` is the only
/// place the energy enters.
#[derive(Clone, Debug)]
pub struct AimProblem {
    pub l: i64,
    pub wa2: BigReal,
    pub g: BigReal,
    pub epsilon: BigReal,
}

impl AimProblem {
    pub fn from_energy(l: i64, wa2: &BigReal, g: &BigReal, ea2: &BigReal) -> Self {
        let prec = wa2.precision();
        let epsilon = ea2 / &(wa2.mul_i64(2)) - BigReal::from_i64(2 * l + 3, prec).div_i64(4);
        AimProblem { l, wa2: wa2.clone(), g: g.clone(), epsilon }
    }

    /// `Ea2 = (2l+3+4 epsilon) wa2 / 2`.
    pub fn energy(&self) -> BigReal {
        let prec = self.wa2.precision();
        (BigReal::from_i64(2 * self.l + 3, prec) + self.epsilon.mul_i64(4)) * &self.wa2 / BigReal::from_i64(2, prec)
    }

    fn precision(&self) -> Precision {
        self.wa2.precision()
    }
}

/// `lambda0` and `s0` written over the basis `u = 1/t`, `v = 1/(1-t)`,
/// `w = 1/(1-t)^2`:
///
/// ```text
/// lambda0 = cu u + cv v + cw w
/// s0      = du (u + v) + dw w
/// ```
///
/// Multiplying a series by `u` or `v` is a first-order recurrence on its
/// coefficients, so one iteration step costs O(degree) instead of a full
/// convolution.
#[derive(Clone, Debug)]
pub(crate) struct Kernel {
    inv_t0: BigReal,
    inv_1mt0: BigReal,
    cu: BigReal,
    cv: BigReal,
    cw: BigReal,
    du: BigReal,
    dw: BigReal,
}

impl Kernel {
    pub(crate) fn new(p: &AimProblem, t0: &BigReal) -> Result<Self> {
        let prec = p.precision();
        let one = BigReal::one(prec);
        if !(t0.is_positive() && t0 < &one) {
            return Err(Error::Domain(format!("t0 = {} must lie in (0, 1)", t0.to_sci(6))));
        }
        let a = BigReal::from_i64(2 * p.l + 3, prec).div_i64(2);
        let eps = &p.epsilon;
        let b = eps * &(BigReal::from_i64(2 * p.l + 3, prec) + p.wa2.mul_i64(2)) / BigReal::from_i64(2, prec);
        let half_g = p.g.div_i64(2);
        let cu = -a.clone();
        let cv = -(&a + &eps.mul_i64(2)) + BigReal::from_i64(2, prec);
        let cw = p.wa2.clone();
        let du = -(&b + &half_g);
        let dw = -(&b - &half_g + eps * &(eps - &one));
        Ok(Kernel { inv_t0: &one / t0, inv_1mt0: &one / &(&one - t0), cu, cv, cw, du, dw })
    }

    /// Returns `(u c, v c, w c)` truncated to `len` coefficients.
    fn basis_products(&self, c: &[BigReal], len: usize) -> (Vec<BigReal>, Vec<BigReal>, Vec<BigReal>) {
        let mut u = Vec::with_capacity(len);
        let mut v = Vec::with_capacity(len);
        let mut w = Vec::with_capacity(len);
        for i in 0..len {
            let ui = if i == 0 { &c[0] * &self.inv_t0 } else { (&c[i] - &u[i - 1]) * &self.inv_t0 };
            let vi = if i == 0 { &c[0] * &self.inv_1mt0 } else { (&c[i] + &v[i - 1]) * &self.inv_1mt0 };
            let wi = if i == 0 { &vi * &self.inv_1mt0 } else { (&vi + &w[i - 1]) * &self.inv_1mt0 };
            u.push(ui);
            v.push(vi);
            w.push(wi);
        }
        (u, v, w)
    }

    /// `(lambda0 c, s0 c)` truncated to `len` coefficients.
    fn apply(&self, c: &[BigReal], len: usize) -> (Vec<BigReal>, Vec<BigReal>) {
        let (u, v, w) = self.basis_products(c, len);
        let lam = (0..len).map(|i| &self.cu * &u[i] + &self.cv * &v[i] + &self.cw * &w[i]).collect();
        let s = (0..len).map(|i| &self.du * &(&u[i] + &v[i]) + &self.dw * &w[i]).collect();
        (lam, s)
    }

    /// Series of `lambda0` and `s0` to degree `d`.
    pub(crate) fn seeds(&self, d: usize, prec: Precision) -> (Vec<BigReal>, Vec<BigReal>) {
        let mut one = vec![BigReal::zero(prec); d + 1];
        one[0] = BigReal::one(prec);
        self.apply(&one, d + 1)
    }

    /// One iteration step on coefficient vectors; output is one shorter.
    fn step(&self, lam: &[BigReal], s: &[BigReal]) -> (Vec<BigReal>, Vec<BigReal>) {
        let len = lam.len() - 1;
        let (l0l, s0l) = self.apply(lam, len);
        let mut ln = Vec::with_capacity(len);
        let mut sn = Vec::with_capacity(len);
        for i in 0..len {
            let k = (i + 1) as i64;
            ln.push(lam[i + 1].mul_i64(k) + &s[i] + &l0l[i]);
            sn.push(s[i + 1].mul_i64(k) + &s0l[i]);
        }
        (ln, sn)
    }

    /// `delta_n(t0)` for `n = 1..=n_max`, plus the normalising magnitude
    /// `|lambda_n s_{n-1}| + |lambda_{n-1} s_n|` of the last one.
    pub(crate) fn deltas(&self, n_max: usize, extra_depth: usize, prec: Precision) -> (Vec<BigReal>, BigReal) {
        let (mut lam, mut s) = self.seeds(n_max + extra_depth, prec);
        let mut out = Vec::with_capacity(n_max);
        let mut scale = BigReal::zero(prec);
        for _ in 0..n_max {
            let (ln, sn) = self.step(&lam, &s);
            let a = &ln[0] * &s[0];
            let b = &lam[0] * &sn[0];
            scale = a.abs() + b.abs();
            out.push(a - b);
            lam = ln;
            s = sn;
        }
        (out, scale)
    }
}

/// Taylor expansions of `lambda0` and `s0` about `t0` to degree `d`.
pub fn build_lambda_s0(p: &AimProblem, t0: &BigReal, d: usize) -> Result<(TaylorSeries, TaylorSeries)> {
    if d < 1 {
        return Err(Error::InsufficientDepth { degree: d });
    }
    let k = Kernel::new(p, t0)?;
    let (lam, s) = k.seeds(d, p.precision());
    Ok((TaylorSeries::new(t0.clone(), lam), TaylorSeries::new(t0.clone(), s)))
}

/// One iteration step with generic series products.
pub fn aim_iterate(
    lam_prev: &TaylorSeries,
    s_prev: &TaylorSeries,
    lam0: &TaylorSeries,
    s0: &TaylorSeries,
) -> Result<(TaylorSeries, TaylorSeries)> {
    let d = lam_prev.degree().min(s_prev.degree());
    if d < 2 {
        return Err(Error::InsufficientDepth { degree: d });
    }
    let lam_prev = lam_prev.truncate(d);
    let s_prev = s_prev.truncate(d);
    let lam = &(&lam_prev.derivative() + &s_prev) + &lam0.mul(&lam_prev);
    let s = &s_prev.derivative() + &s0.mul(&lam_prev);
    Ok((lam.truncate(d - 1), s.truncate(d - 1)))
}

/// Termination function `lambda_n s_{n-1} - lambda_{n-1} s_n` at the center.
pub fn delta(lam_n: &TaylorSeries, s_prev: &TaylorSeries, lam_prev: &TaylorSeries, s_n: &TaylorSeries) -> BigReal {
    lam_n.at_center() * s_prev.at_center() - lam_prev.at_center() * s_n.at_center()
}
