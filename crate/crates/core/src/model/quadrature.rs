//! Exp-sinh quadrature on `(0, inf)`: `x = exp(pi/2 sinh s)`, refined by
//! step halving.

use super::wavefunction::WaveFunction;
use crate::error::{Error, Result};
use crate::exactmath::{BigReal, Precision};

const MAX_LEVELS: usize = 11;
const S_MAX: f64 = 6.0;

/// `int_0^inf f(x) dx` to relative accuracy `10^-digits`. Returns the value
/// and the change produced by the last halving.
pub fn exp_sinh<F>(f: F, digits: u32, prec: Precision) -> Result<(BigReal, BigReal)>
where
    F: Fn(&BigReal) -> Result<BigReal>,
{
    let half_pi = BigReal::pi(prec).div_i64(2);
    let tol = BigReal::pow10(-(digits as i64), prec);
    let node = |s: &BigReal| -> Result<BigReal> {
        let x = (&half_pi * &s.sinh()).exp();
        let w = &(&half_pi * &s.cosh()) * &x;
        Ok(f(&x)? * w)
    };
    // Sum of nodes s = offset + j*h for j in Z, walking outwards until the
    // terms are negligible.
    let sweep = |h: &BigReal, offset: &BigReal, scale: &BigReal| -> Result<BigReal> {
        let mut acc = BigReal::zero(prec);
        for dir in [1i64, -1] {
            let mut small = 0;
            let mut j = if dir > 0 { 0 } else { -1 };
            loop {
                let s = offset + &h.mul_i64(j);
                if s.abs().to_f64() > S_MAX {
                    break;
                }
                let t = node(&s)?;
                let negligible = t.abs() < &tol * &(acc.abs() + scale.clone()) * BigReal::pow10(-3, prec);
                acc = acc + t;
                small = if negligible { small + 1 } else { 0 };
                if small >= 3 {
                    break;
                }
                j += dir;
            }
        }
        Ok(acc)
    };
    let mut h = BigReal::one(prec).div_i64(2);
    let zero = BigReal::zero(prec);
    let mut sum = sweep(&h, &zero, &zero)?;
    let mut estimate = &sum * &h;
    let mut last_change = estimate.abs();
    for _ in 0..MAX_LEVELS {
        // Odd nodes of the halved grid.
        let hn = h.div_i64(2);
        let odd = sweep(&h, &hn, &sum.abs())?;
        sum = sum + odd;
        h = hn;
        let next = &sum * &h;
        last_change = (&next - &estimate).abs();
        estimate = next;
        if last_change <= &tol * &estimate.abs() {
            return Ok((estimate, last_change));
        }
    }
    Err(Error::Quadrature(format!(
        "exp-sinh did not reach 1e-{digits}: estimate {}, last change {}",
        estimate.to_sci(12),
        last_change.to_sci(3)
    )))
}

#[derive(Clone, Debug)]
pub struct Normalization {
    /// `int_0^inf psi^2 dx`.
    pub norm_sq: BigReal,
    /// `1 / sqrt(norm_sq)`.
    pub scale: BigReal,
    /// Change of `norm_sq` under the final step halving.
    pub depth_change: BigReal,
}

impl Normalization {
    pub fn eval(&self, w: &WaveFunction, x: &BigReal) -> Result<BigReal> {
        Ok(w.eval(x)? * &self.scale)
    }
}

pub fn normalize(w: &WaveFunction, digits: u32) -> Result<Normalization> {
    let prec = w.mu.precision().max(Precision::digits(digits + 10));
    let (norm_sq, depth_change) = exp_sinh(
        |x| {
            let v = w.eval(&x.with_precision(prec))?;
            Ok(&v * &v)
        },
        digits,
        prec,
    )?;
    if !norm_sq.is_positive() {
        return Err(Error::Quadrature(format!("non-positive norm {}", norm_sq.to_sci(6))));
    }
    let scale = BigReal::one(prec) / norm_sq.sqrt();
    Ok(Normalization { norm_sq, scale, depth_change })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{within, RatPoly, Var};
    use crate::model::PotentialSpec;

    #[test]
    fn gaussian_norm() {
        let p = Precision::digits(40);
        let spec = PotentialSpec::new(-1, BigReal::one(p), BigReal::zero(p)).unwrap();
        let w = WaveFunction::from_rat(&spec, BigReal::zero(p), &RatPoly::one(Var::X)).unwrap();
        let n = normalize(&w, 30).unwrap();
        let want = BigReal::pi(n.norm_sq.precision()).sqrt().div_i64(2);
        assert!(within(&n.norm_sq, &want, &BigReal::pow10(-29, p)));
        assert!(n.depth_change < BigReal::pow10(-15, p));
        // Normalized integral is one.
        let (one, _) = exp_sinh(
            |x| {
                let v = n.eval(&w, x)?;
                Ok(&v * &v)
            },
            30,
            n.norm_sq.precision(),
        )
        .unwrap();
        assert!(within(&one, &BigReal::one(p), &BigReal::pow10(-28, p)));
    }

    #[test]
    fn moments_with_algebraic_weight() {
        // int_0^inf x^2 e^{-x^2} dx = sqrt(pi)/4
        let p = Precision::digits(40);
        let (v, _) = exp_sinh(|x| Ok(x * x * (-(x * x)).exp()), 30, p).unwrap();
        assert!(within(&v, &BigReal::pi(p).sqrt().div_i64(4), &BigReal::pow10(-29, p)));
        // int_0^inf dx/(1+x^2)^2 = pi/4
        let (v, _) = exp_sinh(
            |x| {
                let d = x * x + BigReal::one(p);
                Ok(BigReal::one(p) / (&d * &d))
            },
            30,
            p,
        )
        .unwrap();
        assert!(within(&v, &BigReal::pi(p).div_i64(4), &BigReal::pow10(-29, p)));
    }
}
