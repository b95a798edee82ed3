//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::real::BigReal;
use super::ring::{eval_rational_coeffs, Ring};
use super::Var;

/// `coeffs[i]` multiplies `var^i`. The zero polynomial has no coefficients and
/// the last stored coefficient is never zero.
#[derive(Clone)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl PartialEq for RatPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for RatPoly {}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>, var: Var) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs, var }
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        RatPoly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// The monomial `var`.
    pub fn identity(var: Var) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], var)
    }

    /// `c * var^k`.
    pub fn monomial(c: Rational, k: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        eval_rational_coeffs(&self.coeffs, x)
    }

    pub fn eval_real(&self, x: &BigReal) -> BigReal {
        eval_rational_coeffs(&self.coeffs, x)
    }

    /// Evaluates at an element of any ring, e.g. another polynomial.
    pub fn eval_in<T: Ring>(&self, x: &T) -> T {
        eval_rational_coeffs(&self.coeffs, x)
    }

    /// `self(inner)`; the result carries `inner`'s variable.
    pub fn compose(&self, inner: &RatPoly) -> RatPoly {
        eval_rational_coeffs(&self.coeffs, inner)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    /// Euclidean division, `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is the zero polynomial.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(self.var), self.clone());
        }
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(q, self.var), RatPoly::new(rem, self.var))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive().1;
        }
        a.monic()
    }

    /// Splits off the rational content: returns `(c, p)` with `self = c * p`,
    /// `p` having coprime integer coefficients and positive leading coefficient.
    pub fn primitive(&self) -> (Rational, RatPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_negative() {
            g = -g;
        }
        let content = Rational::new(g.clone(), lcm_den);
        let coeffs = ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect();
        (content, RatPoly::new(coeffs, self.var))
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn normalized(&self) -> RatPoly {
        self.primitive().1
    }

    /// True if `self = c * other` for some nonzero rational `c`.
    pub fn is_scalar_multiple_of(&self, other: &RatPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.normalized() == other.normalized(),
            _ => false,
        }
    }

    /// Yun's square-free factorisation: `self = c * prod f_i^i`, returned as
    /// `(f_i, i)` pairs with every `f_i` monic, square-free and nonconstant.
    pub fn square_free_decomposition(&self) -> Vec<(RatPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c - b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c - b.derivative();
            i += 1;
        }
        out
    }

    /// The square-free part (product of the distinct irreducible factors).
    pub fn square_free_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        &self + &rhs
    }
}

impl<'a> Add<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &'a RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly::new(coeffs, self.var)
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &'a RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RatPoly::new(coeffs, self.var)
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &'a RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs, self.var)
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.into_iter().map(|c| -c).collect(), self.var)
    }
}

impl Ring for RatPoly {
    fn zero_like(&self) -> Self {
        RatPoly::zero(self.var)
    }
    fn one_like(&self) -> Self {
        RatPoly::one(self.var)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn lift(&self, r: &Rational) -> Self {
        RatPoly::constant(r.clone(), self.var)
    }
}

/// Exact `p + q`, `p - q` or `p * q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &RatPoly, q: &RatPoly, op: PolyOp) -> RatPoly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use proptest::prelude::*;

    fn x() -> RatPoly {
        RatPoly::identity(Var::X)
    }

    #[test]
    fn difference_of_squares() {
        let p = RatPoly::from_ints(&[-1, 1], Var::X);
        let q = RatPoly::from_ints(&[1, 1], Var::X);
        assert_eq!(poly_arith(&p, &q, PolyOp::Mul), RatPoly::from_ints(&[-1, 0, 1], Var::X));
    }

    #[test]
    fn additive_identity() {
        let p = RatPoly::from_ints(&[-15, 14], Var::Wa2);
        assert_eq!(poly_arith(&p, &RatPoly::zero(Var::Wa2), PolyOp::Add), p);
    }

    #[test]
    fn g_substitution_product() {
        let mu = RatPoly::identity(Var::Mu);
        let one = RatPoly::one(Var::Mu);
        let two = RatPoly::constant(int(2), Var::Mu);
        let prod = poly_arith(&(&mu - &one), &(&mu - &two), PolyOp::Mul);
        assert_eq!(prod, RatPoly::from_ints(&[2, -3, 1], Var::Mu));
    }

    #[test]
    fn subtraction_cancels_to_zero() {
        let p = RatPoly::from_ints(&[3, 0, 5], Var::X);
        let d = poly_arith(&p, &p, PolyOp::Sub);
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn euclidean_division() {
        let p = RatPoly::from_ints(&[-1, 0, 0, 1], Var::X);
        let d = RatPoly::from_ints(&[-1, 1], Var::X);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, RatPoly::from_ints(&[1, 1, 1], Var::X));
        assert!(r.is_zero());
    }

    #[test]
    fn primitive_part_has_unit_content() {
        let p = RatPoly::new(vec![rat(-3, 2), rat(9, 4)], Var::X);
        let (c, q) = p.primitive();
        assert_eq!(q, RatPoly::from_ints(&[-2, 3], Var::X));
        assert_eq!(c, rat(3, 4));
        let p = RatPoly::from_ints(&[49, 0, -315], Var::X);
        assert_eq!(p.normalized(), RatPoly::from_ints(&[-7, 0, 45], Var::X));
    }

    #[test]
    fn square_free_decomposition_recovers_multiplicities() {
        let a = RatPoly::from_ints(&[-1, 1], Var::X);
        let b = RatPoly::from_ints(&[2, 1], Var::X);
        let c = RatPoly::from_ints(&[1, 0, 1], Var::X);
        let p = &(&(&a * &a) * &(&(&b * &b) * &b)) * &c;
        let dec = p.square_free_decomposition();
        assert_eq!(dec.len(), 3);
        let find = |m: u32| dec.iter().find(|(_, k)| *k == m).map(|(f, _)| f.clone()).unwrap();
        assert_eq!(find(1), c);
        assert_eq!(find(2), a);
        assert_eq!(find(3), b);
    }

    #[test]
    fn compose_and_display() {
        let p = RatPoly::from_ints(&[0, 0, 1], Var::Z);
        let z = RatPoly::from_ints(&[1, 0, 1], Var::X);
        let q = p.compose(&z);
        assert_eq!(q, RatPoly::from_ints(&[1, 0, 2, 0, 1], Var::X));
        assert_eq!(q.to_string(), "x^4 + 2x^2 + 1");
        assert_eq!(RatPoly::new(vec![rat(-1, 2), int(0), int(-3)], Var::X).to_string(), "-3x^2 - (1/2)");
        assert_eq!(x().to_string(), "x");
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6).prop_map(|cs| {
            RatPoly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect(), Var::X)
        })
    }

    proptest! {
        #[test]
        fn division_identity(p in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.div_rem(&d);
            prop_assert_eq!(&(&q * &d) + &r, p);
            prop_assert!(r.degree().map_or(true, |rd| rd < d.degree().unwrap()) || d.is_constant() && r.is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(p in small_poly(), q in small_poly(), n in -5i64..5, d in 1i64..5) {
            let x0 = rat(n, d);
            prop_assert_eq!((&p * &q).eval(&x0), p.eval(&x0) * q.eval(&x0));
            prop_assert_eq!((&p + &q).eval(&x0), p.eval(&x0) + q.eval(&x0));
        }
    }
}
