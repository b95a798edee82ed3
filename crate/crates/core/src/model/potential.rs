use crate::error::{Error, Result};
use crate::exactmath::{BigReal, Precision};

/// Scaled problem data. `unscaled` keeps the original `(w, a)` when known.
#[derive(Clone, Debug)]
pub struct PotentialSpec {
    pub l: i64,
    pub wa2: BigReal,
    pub g: BigReal,
    pub unscaled: Option<(BigReal, BigReal)>,
}

impl PotentialSpec {
    pub fn new(l: i64, wa2: BigReal, g: BigReal) -> Result<Self> {
        if l < -1 {
            return Err(Error::InvalidInput(format!("l = {l} must be >= -1")));
        }
        if !wa2.is_positive() {
            return Err(Error::InvalidInput(format!("wa2 must be positive (got {})", wa2.to_sci(6))));
        }
        Ok(PotentialSpec { l, wa2, g, unscaled: None })
    }

    /// From `w, a` of the potential `l(l+1)/r^2 + w^2 r^2 + 2g(r^2-a^2)/(r^2+a^2)^2`.
    pub fn from_unscaled(l: i64, w: BigReal, a: BigReal, g: BigReal) -> Result<Self> {
        if !w.is_positive() || !a.is_positive() {
            return Err(Error::InvalidInput("w and a must be positive".into()));
        }
        let mut p = PotentialSpec::new(l, &w * &(&a * &a), g)?;
        p.unscaled = Some((w, a));
        Ok(p)
    }

    pub fn with_f64(l: i64, wa2: f64, g: f64, prec: Precision) -> Result<Self> {
        PotentialSpec::new(l, BigReal::from_f64(wa2, prec), BigReal::from_f64(g, prec))
    }

    pub fn precision(&self) -> Precision {
        self.wa2.precision()
    }

    pub fn centrifugal(&self) -> i64 {
        self.l * (self.l + 1)
    }

    /// `V(x)` in f64, for the oracle.
    pub fn to_f64(&self) -> impl Fn(f64) -> f64 {
        let (w, g) = (self.wa2.to_f64(), self.g.to_f64());
        let c = self.centrifugal() as f64;
        move |x: f64| {
            let x2 = x * x;
            let cent = if c == 0.0 { 0.0 } else { c / x2 };
            cent + w * w * x2 + 2.0 * g * (x2 - 1.0) / ((x2 + 1.0) * (x2 + 1.0))
        }
    }
}

/// `l(l+1)/x^2 + (wa2)^2 x^2 + 2g(x^2-1)/(x^2+1)^2`.
pub fn potential_scaled(p: &PotentialSpec, x: &BigReal) -> Result<BigReal> {
    let c = p.centrifugal();
    if x.is_negative() || (x.is_zero() && c != 0) {
        return Err(Error::Domain(format!("potential undefined at x = {}", x.to_sci(6))));
    }
    let prec = p.precision();
    let x2 = x * x;
    let one = BigReal::one(prec);
    let d = &x2 + &one;
    let mut v = &(&p.wa2 * &p.wa2) * &x2 + &(p.g.mul_i64(2) * (&x2 - &one)) / &(&d * &d);
    if c != 0 {
        v = v + BigReal::from_i64(c, prec) / x2;
    }
    Ok(v)
}

/// The unscaled potential at radius `r`.
pub fn potential_original(l: i64, w: &BigReal, a: &BigReal, g: &BigReal, r: &BigReal) -> Result<BigReal> {
    let c = l * (l + 1);
    if r.is_negative() || (r.is_zero() && c != 0) {
        return Err(Error::Domain(format!("potential undefined at r = {}", r.to_sci(6))));
    }
    let prec = r.precision();
    let r2 = r * r;
    let a2 = a * a;
    let d = &r2 + &a2;
    let mut v = &(w * w) * &r2 + &(g.mul_i64(2) * (&r2 - &a2)) / &(&d * &d);
    if c != 0 {
        v = v + BigReal::from_i64(c, prec) / r2;
    }
    Ok(v)
}

/// Checks `a^2 V(a x) = V_scaled(x)` at `samples` pseudo-random points in
/// `(0, 10)`, and that the scaled data maps back to `(w, a)`.
pub fn scale_roundtrip(p: &PotentialSpec, samples: usize) -> Result<()> {
    use rand::{Rng, SeedableRng};
    let (w, a) = p
        .unscaled
        .clone()
        .ok_or_else(|| Error::InvalidInput("scale_roundtrip needs the unscaled (w, a) pair".into()))?;
    let prec = p.precision();
    let tol = prec.epsilon(8);
    let back = &p.wa2 / &(&a * &a);
    if (&back - &w).abs() > &tol * &(w.abs() + BigReal::one(prec)) {
        return Err(Error::ScalingMismatch { r: "-".into(), lhs: back.to_sci(20), rhs: w.to_sci(20) });
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..samples {
        let x = BigReal::from_f64(rng.gen_range(0.05..10.0), prec);
        let r = &a * &x;
        let lhs = &(&a * &a) * &potential_original(p.l, &w, &a, &p.g, &r)?;
        let rhs = potential_scaled(p, &x)?;
        if (&lhs - &rhs).abs() > &tol * &(rhs.abs() + BigReal::one(prec)) {
            return Err(Error::ScalingMismatch { r: r.to_sci(12), lhs: lhs.to_sci(20), rhs: rhs.to_sci(20) });
        }
    }
    Ok(())
}
