//! Numeric evaluation of the degree-one closed forms.

use super::fixtures::ClosedFormRow;
use crate::error::{Error, Result};
use crate::exactmath::{BigReal, Precision, Rational};

/// `(mu, g, E/w)` of one closed-form row.
#[derive(Clone, Debug)]
pub struct ClosedValues {
    pub mu: BigReal,
    pub g: BigReal,
    pub e_over_w: BigReal,
    /// Set for rows given in rational form.
    pub exact: Option<(Rational, Rational, Rational)>,
}

#[derive(Clone, Debug)]
struct Complex {
    re: BigReal,
    im: BigReal,
}

impl Complex {
    fn mul(&self, o: &Complex) -> Complex {
        Complex { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn scale(&self, k: &BigReal) -> Complex {
        Complex { re: &self.re * k, im: &self.im * k }
    }

    fn add(&self, o: &Complex) -> Complex {
        Complex { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    /// Principal `z^e` for real `e`.
    fn powr(&self, e: &BigReal) -> Complex {
        let r = (&self.re * &self.re + &self.im * &self.im).sqrt();
        let mut theta = (&self.re / &r).acos();
        if self.im.is_negative() {
            theta = -theta;
        }
        let m = r.powf(e);
        let a = &theta * e;
        Complex { re: &m * &a.cos(), im: &m * &a.sin() }
    }
}

pub fn evaluate(row: &ClosedFormRow, prec: Precision) -> Result<ClosedValues> {
    let b = |k: &str| -> Result<BigReal> { Ok(BigReal::from_rational(&row.rat(k)?, prec)) };
    let third = BigReal::one(prec).div_i64(3);
    match row.kind.as_str() {
        "rational" => {
            let (mu, g, e) = (row.rat("mu")?, row.rat("g")?, row.rat("e")?);
            Ok(ClosedValues {
                mu: BigReal::from_rational(&mu, prec),
                g: BigReal::from_rational(&g, prec),
                e_over_w: BigReal::from_rational(&e, prec),
                exact: Some((mu, g, e)),
            })
        }
        "surd" => {
            let s = b("s")?.sqrt();
            Ok(ClosedValues {
                mu: b("mu0")? + b("mu1")? * &s,
                g: b("g0")? + b("g1")? * &s,
                e_over_w: b("e0")? + b("e1")? * &s,
                exact: None,
            })
        }
        "real_cubic" => {
            let a = b("p")? + b("q")? * b("r")?.sqrt();
            let a13 = a.cbrt();
            let am13 = BigReal::one(prec) / &a13;
            let a23 = &a13 * &a13;
            let ca = b("cA")?;
            let mu = -(b("c0")? + &ca * &am13 + a13.clone()) * &third;
            let g = &am13 * &am13 * (&ca + &(b("g1")? * &a13) + a23.clone()) * (&ca + &(b("g2")? * &a13) + a23)
                / BigReal::from_i64(9, prec);
            let e = -(b("e0")? + a13.mul_i64(2) * &third + b("e1")? * &am13);
            Ok(ClosedValues { mu, g, e_over_w: e, exact: None })
        }
        "complex_cubic" => {
            let a = Complex { re: b("p")?, im: b("q")? * b("r")?.sqrt() };
            let a13 = a.powr(&third);
            let am13 = a.powr(&-third.clone());
            let c = b("c")?;
            let s3 = BigReal::from_i64(3, prec).sqrt();
            let one = BigReal::one(prec);
            let bval = match row.text("branch") {
                Some("a") => (&a13.re + &(&c * &am13.re)) * &third,
                Some(br @ ("b" | "c")) => {
                    let sg = if br == "b" { one.clone() } else { -one.clone() };
                    let w1 = Complex { re: one.clone(), im: &sg * &s3 };
                    let w2 = Complex { re: one.clone(), im: -(&sg * &s3) };
                    let sum = w1.mul(&am13).scale(&c).add(&w2.mul(&a13));
                    sum.re.div_i64(6)
                }
                other => return Err(Error::InvalidInput(format!("fixture: unknown branch {other:?}"))),
            };
            let mu = b("m0")? + b("ms")? * &bval;
            let g = (b("ga")? + b("gb")? * &bval) * (b("gc")? + b("gd")? * &bval) / b("gden")?;
            let e = -(b("e0")? + b("e1")? * &bval) / b("eden")?;
            Ok(ClosedValues { mu, g, e_over_w: e, exact: None })
        }
        k => Err(Error::InvalidInput(format!("fixture: unknown closed-form kind {k:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repro::fixtures::closed_form_rows;

    #[test]
    fn cube_roots_are_principal() {
        let p = Precision::digits(30);
        let z = Complex { re: BigReal::from_i64(-8, p), im: BigReal::zero(p) };
        let r = z.powr(&(BigReal::one(p).div_i64(3)));
        // (-8)^(1/3) = 1 + i sqrt 3
        assert!((r.re.to_f64() - 1.0).abs() < 1e-20);
        assert!((r.im.to_f64() - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rows_satisfy_the_coupling_relation() {
        // g = (mu-1)(mu-2) and E/w = l + 3/2 + 2mu hold by construction of
        // every printed form, whatever the value of A.
        let p = Precision::digits(40);
        for row in closed_form_rows().unwrap() {
            let v = evaluate(&row, p).unwrap();
            let one = BigReal::one(p);
            let g = (&v.mu - &one) * (&v.mu - &one.mul_i64(2));
            let e = BigReal::from_i64(row.l, p) + BigReal::parse("1.5", p).unwrap() + v.mu.mul_i64(2);
            let ok = (&g - &v.g).abs() < p.epsilon(8) && (&e - &v.e_over_w).abs() < p.epsilon(8);
            assert!(ok, "row {}.{}: g {} vs {}", row.table, row.row, v.g.to_sci(10), g.to_sci(10));
        }
    }
}
