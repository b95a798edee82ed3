//! `psi(x) = x^{l+1} (1+x^2)^mu e^{-wa2 x^2/2} F(x)`, with the polynomial
//! factor stored in `x` or in `z = x^2 + 1`.

use super::potential::{potential_scaled, PotentialSpec};
use crate::error::{Error, Result};
use crate::exactmath::{BigReal, RatPoly, RealPoly, Var};
use crate::quasipoly::PolySolution;

#[derive(Clone, Debug)]
pub struct WaveFunction {
    pub l: i64,
    pub mu: BigReal,
    pub wa2: BigReal,
    /// Coefficients in [`Var::X`] or [`Var::Z`].
    pub factor: RealPoly,
    /// The same factor when it is known exactly.
    pub exact_factor: Option<RatPoly>,
}

/// `psi` with its first two derivatives.
#[derive(Clone, Debug)]
pub struct Jet {
    pub value: BigReal,
    pub d1: BigReal,
    pub d2: BigReal,
}

pub fn assemble_wavefunction(p: &PotentialSpec, mu: BigReal, f: &PolySolution) -> Result<WaveFunction> {
    WaveFunction::from_rat(p, mu, &f.polynomial)
}

impl WaveFunction {
    pub fn from_rat(p: &PotentialSpec, mu: BigReal, f: &RatPoly) -> Result<Self> {
        let mut w = WaveFunction::from_real(p, mu, RealPoly::from_rat(f, p.precision()))?;
        w.exact_factor = Some(f.clone());
        Ok(w)
    }

    pub fn from_real(p: &PotentialSpec, mu: BigReal, factor: RealPoly) -> Result<Self> {
        if !matches!(factor.var, Var::X | Var::Z) {
            return Err(Error::InvalidInput(format!("factor variable must be x or z (got {})", factor.var)));
        }
        Ok(WaveFunction { l: p.l, mu, wa2: p.wa2.clone(), factor, exact_factor: None })
    }

    /// From a factor `f(t)` in `t = x^2/(1+x^2)` of degree `k`, rewritten as
    /// `(1+x^2)^{mu-k} sum c_i x^{2i} (1+x^2)^{k-i}`.
    pub fn from_t_factor(p: &PotentialSpec, mu: BigReal, f: &RealPoly) -> Result<Self> {
        let prec = p.precision();
        let k = f.degree();
        let one = BigReal::one(prec);
        let zero = BigReal::zero(prec);
        let onep = RealPoly::new(vec![one.clone(), zero.clone(), one.clone()], Var::X);
        let mut acc = RealPoly::new(vec![zero.clone()], Var::X);
        for (i, c) in f.coeffs.iter().enumerate() {
            let mut term = RealPoly::new(vec![c.clone()], Var::X);
            for _ in 0..i {
                term = term.mul(&RealPoly::new(vec![zero.clone(), zero.clone(), one.clone()], Var::X));
            }
            for _ in i..k {
                term = term.mul(&onep);
            }
            acc = acc.add(&term);
        }
        let shifted = &mu - &BigReal::from_i64(k as i64, prec);
        WaveFunction::from_real(p, shifted, acc)
    }

    pub fn variable(&self) -> Var {
        self.factor.var
    }

    fn phi_parts(&self, x: &BigReal) -> (BigReal, BigReal, BigReal) {
        let prec = x.precision();
        let one = BigReal::one(prec);
        let x2 = x * x;
        let d = &x2 + &one;
        let lp1 = BigReal::from_i64(self.l + 1, prec);
        let mut phi = &self.mu * &d.ln() - &(&self.wa2 * &x2).div_i64(2);
        let mut d1 = &self.mu.mul_i64(2) * &(x / &d) - &(&self.wa2 * x);
        let mut d2 = &self.mu.mul_i64(2) * &((&one - &x2) / &(&d * &d)) - self.wa2.clone();
        if self.l != -1 {
            phi = phi + &lp1 * &x.ln();
            d1 = d1 + &lp1 / x;
            d2 = d2 - &lp1 / &x2;
        }
        (phi, d1, d2)
    }

    fn factor_jet(&self, x: &BigReal) -> (BigReal, BigReal, BigReal) {
        let f1 = self.factor.derivative();
        let f2 = f1.derivative();
        match self.factor.var {
            Var::Z => {
                let z = x * x + BigReal::one(x.precision());
                let (a, b, c) = (self.factor.eval(&z), f1.eval(&z), f2.eval(&z));
                let d1 = x.mul_i64(2) * &b;
                let d2 = b.mul_i64(2) + &(x * x).mul_i64(4) * &c;
                (a, d1, d2)
            }
            _ => (self.factor.eval(x), f1.eval(x), f2.eval(x)),
        }
    }

    fn check_domain(&self, x: &BigReal) -> Result<()> {
        if x.is_negative() {
            return Err(Error::Domain(format!("x = {} < 0", x.to_sci(6))));
        }
        Ok(())
    }

    pub fn eval(&self, x: &BigReal) -> Result<BigReal> {
        self.check_domain(x)?;
        if x.is_zero() && self.l >= 0 {
            return Ok(BigReal::zero(x.precision()));
        }
        let (phi, _, _) = self.phi_parts(x);
        Ok(phi.exp() * self.factor_jet(x).0)
    }

    /// Analytic `psi, psi', psi''` for `x > 0` (`x = 0` allowed when `l = -1`).
    pub fn jet(&self, x: &BigReal) -> Result<Jet> {
        self.check_domain(x)?;
        if x.is_zero() && self.l != -1 {
            return Err(Error::Domain("derivatives at the origin need l = -1".into()));
        }
        let (phi, p1, p2) = self.phi_parts(x);
        let (f, f1, f2) = self.factor_jet(x);
        let e = phi.exp();
        let d1 = &e * &(&p1 * &f + f1.clone());
        let d2 = &e * &((&p2 + &(&p1 * &p1)) * f.clone() + &p1.mul_i64(2) * &f1 + f2);
        Ok(Jet { value: e * f, d1, d2 })
    }

    /// `|(-psi'' + V psi - 2Ea2 psi)| / max(1, |psi|)` at `x`.
    pub fn residual(&self, p: &PotentialSpec, ea2: &BigReal, x: &BigReal) -> Result<BigReal> {
        let j = self.jet(x)?;
        let v = potential_scaled(p, x)?;
        let r = -j.d2 + &(v - ea2.mul_i64(2)) * &j.value;
        let one = BigReal::one(x.precision());
        let scale = j.value.abs().max(&one).clone();
        Ok(r.abs() / scale)
    }

    /// Largest [`residual`](Self::residual) on `n` equispaced points in `[lo, hi]`.
    pub fn max_residual(&self, p: &PotentialSpec, ea2: &BigReal, lo: f64, hi: f64, n: usize) -> Result<BigReal> {
        let prec = p.precision();
        let mut worst = BigReal::zero(prec);
        for i in 0..n {
            let x = BigReal::from_f64(lo + (hi - lo) * i as f64 / (n.max(2) - 1) as f64, prec);
            if x.is_zero() && self.l != -1 {
                continue;
            }
            let r = self.residual(p, ea2, &x)?;
            if r > worst {
                worst = r;
            }
        }
        Ok(worst)
    }

    /// Sign changes of `psi` on `(0, inf)`: positive real roots in `x^2` of
    /// the factor, counted by isolation when the factor is exact.
    pub fn sign_changes(&self) -> Result<usize> {
        use crate::exactmath::{poly_real_roots, RootInterval};
        let f = self
            .exact_factor
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("sign changes need an exact factor".into()))?;
        let lo = match self.factor.var {
            Var::Z => crate::exactmath::int(1),
            _ => crate::exactmath::int(0),
        };
        let roots = poly_real_roots(f, &RootInterval { lo: Some(lo.clone()), hi: None }, 20)?;
        Ok(roots
            .iter()
            .filter(|r| r.exact.as_ref() != Some(&lo) && r.multiplicity % 2 == 1)
            .count())
    }
}
