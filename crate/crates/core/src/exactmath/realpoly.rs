//! Polynomials with configurable-precision real coefficients, for factors
//! whose coefficients are irrational.

use super::poly::RatPoly;
use super::real::{BigReal, Precision};
use super::Var;

#[derive(Clone, Debug)]
pub struct RealPoly {
    pub coeffs: Vec<BigReal>,
    pub var: Var,
}

impl RealPoly {
    pub fn new(coeffs: Vec<BigReal>, var: Var) -> Self {
        RealPoly { coeffs, var }
    }

    pub fn from_rat(p: &RatPoly, prec: Precision) -> Self {
        let coeffs = if p.is_zero() {
            vec![BigReal::zero(prec)]
        } else {
            p.coeffs().iter().map(|c| BigReal::from_rational(c, prec)).collect()
        };
        RealPoly { coeffs, var: p.var() }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigReal) -> BigReal {
        let mut acc = BigReal::zero(x.precision());
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let prec = self.coeffs.first().map_or_else(Precision::default, BigReal::precision);
        let coeffs: Vec<BigReal> = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_i64(i as i64)).collect();
        if coeffs.is_empty() {
            return RealPoly { coeffs: vec![BigReal::zero(prec)], var: self.var };
        }
        RealPoly { coeffs, var: self.var }
    }

    pub fn mul(&self, other: &RealPoly) -> RealPoly {
        let prec = self.coeffs[0].precision();
        let mut out = vec![BigReal::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RealPoly { coeffs: out, var: self.var }
    }

    pub fn add(&self, other: &RealPoly) -> RealPoly {
        let prec = self.coeffs[0].precision();
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigReal::zero(prec);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        RealPoly { coeffs, var: self.var }
    }

    /// `self(inner)`, carrying `inner`'s variable.
    pub fn compose(&self, inner: &RealPoly) -> RealPoly {
        let mut rev = self.coeffs.iter().rev();
        let lead = rev.next().cloned().unwrap_or_else(|| BigReal::zero(inner.coeffs[0].precision()));
        let mut acc = RealPoly { coeffs: vec![lead], var: inner.var };
        for c in rev {
            acc = acc.mul(inner).add(&RealPoly { coeffs: vec![c.clone()], var: inner.var });
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> RealPoly {
        let lc = self.coeffs.last().unwrap().clone();
        RealPoly { coeffs: self.coeffs.iter().map(|c| c / &lc).collect(), var: self.var }
    }

    pub fn max_abs_coeff(&self) -> BigReal {
        let mut m = BigReal::zero(self.coeffs[0].precision());
        for c in &self.coeffs {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, RatPoly};

    #[test]
    fn compose_matches_exact() {
        let p = Precision::digits(40);
        let f = RatPoly::from_ints(&[5, 0, -3, -1, 1], Var::Z);
        let inner = RatPoly::from_ints(&[1, 0, 1], Var::X);
        let want = RealPoly::from_rat(&f.compose(&inner), p);
        let got = RealPoly::from_rat(&f, p).compose(&RealPoly::from_rat(&inner, p));
        assert_eq!(got.coeffs.len(), want.coeffs.len());
        for (a, b) in got.coeffs.iter().zip(&want.coeffs) {
            assert!((a - b).abs() < p.epsilon(2), "{} {}", a.to_sci(5), b.to_sci(5));
        }
        let x = BigReal::from_rational(&int(3), p);
        assert!((got.eval(&x) - want.eval(&x)).abs() < p.epsilon(4));
    }
}
