//! Configurable-precision real numbers.
//!
//! [`BigReal`] wraps a binary floating-point value together with the number of
//! significant decimal digits it was created for. Binary operations run at the
//! larger of the two operand precisions, so a precision chosen at the edge of a
//! computation propagates through it without any ambient global state.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::Zero;

use super::rational::Rational;

/// Default working precision in significant decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 8;

/// Working precision, in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub fn digits(digits: u32) -> Self {
        Precision(digits.max(1))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn bits(self) -> usize {
        (self.0 as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
    }

    /// `10^-(digits - slack)`, the scale at which two values computed at this
    /// precision are considered indistinguishable.
    pub fn epsilon(self, slack: u32) -> BigReal {
        BigReal::pow10(-(self.0.saturating_sub(slack) as i64), self)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_DIGITS)
    }
}

/// A real number carried at a fixed working precision.
#[derive(Clone)]
pub struct BigReal {
    v: BigFloat,
    prec: Precision,
}

impl BigReal {
    fn wrap(v: BigFloat, prec: Precision) -> Self {
        BigReal { v, prec }
    }

    fn consts() -> Consts {
        Consts::new().expect("allocating constant cache")
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Returns the same value re-rounded to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut v = self.v.clone();
        let _ = v.set_precision(prec.bits(), RM);
        Self::wrap(v, prec)
    }

    pub fn zero(prec: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(0, prec.bits()), prec)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec.bits()), prec)
    }

    pub fn from_f64(v: f64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_f64(v, prec.bits()), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: Precision) -> Self {
        let (sign, words) = v.to_u64_digits();
        if words.is_empty() {
            return Self::zero(prec);
        }
        let words: Vec<Word> = words.into_iter().map(|w| w as Word).collect();
        let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
        let e = (words.len() * Word::BITS as usize) as astro_float::Exponent;
        let mut f = BigFloat::from_words(&words, s, e);
        let _ = f.set_precision(prec.bits(), RM);
        Self::wrap(f, prec)
    }

    pub fn from_rational(r: &Rational, prec: Precision) -> Self {
        let n = Self::from_bigint(r.numer(), prec);
        if r.denom() == &BigInt::from(1) {
            return n;
        }
        let d = Self::from_bigint(r.denom(), prec);
        n / d
    }

    /// Parses a decimal literal such as `-41.876959736225` or `1e-5`.
    pub fn parse(s: &str, prec: Precision) -> Option<Self> {
        let r = super::rational::parse_rational(s)?;
        Some(Self::from_rational(&r, prec))
    }

    /// `10^k` at the given precision.
    pub fn pow10(k: i64, prec: Precision) -> Self {
        let ten = BigInt::from(10).pow(k.unsigned_abs() as u32);
        let t = Self::from_bigint(&ten, prec);
        if k >= 0 {
            t
        } else {
            Self::one(prec) / t
        }
    }

    pub fn pi(prec: Precision) -> Self {
        Self::wrap(Self::consts().pi(prec.bits(), RM), prec)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.prec.bits(), RM), self.prec)
    }

    /// Real cube root (negative for negative input).
    pub fn cbrt(&self) -> Self {
        Self::wrap(self.v.cbrt(self.prec.bits(), RM), self.prec)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(self.v.exp(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(self.v.ln(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(self.v.cos(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(self.v.sin(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn acos(&self) -> Self {
        Self::wrap(self.v.acos(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn cosh(&self) -> Self {
        Self::wrap(self.v.cosh(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn sinh(&self) -> Self {
        Self::wrap(self.v.sinh(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    pub fn tanh(&self) -> Self {
        Self::wrap(self.v.tanh(self.prec.bits(), RM, &mut Self::consts()), self.prec)
    }

    /// `self^e` for `self > 0`.
    pub fn powf(&self, e: &BigReal) -> Self {
        (e * &self.ln()).exp()
    }

    pub fn powi(&self, n: i32) -> Self {
        let p = self.prec;
        let base = Self::wrap(self.v.powi(n.unsigned_abs() as usize, p.bits(), RM), p);
        if n >= 0 {
            base
        } else {
            Self::one(p) / base
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &Self::from_i64(k, self.prec)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self / &Self::from_i64(k, self.prec)
    }

    pub fn max<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Scientific decimal digits of `|self|`: `(digits, exponent)` with the value
    /// equal to `0.d1d2d3... * 10^exponent`, rounded half-even to `sig` digits.
    fn decimal_digits(&self, sig: usize) -> (Vec<u8>, i64) {
        let s = self
            .v
            .abs()
            .format(Radix::Dec, RM, &mut Self::consts())
            .expect("formatting finite value");
        // astro formats as `d.ddddde[+-]x`.
        let (mant, exp) = match s.find('e') {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().unwrap_or(0)),
            None => (s.as_str(), 0),
        };
        let mut digits: Vec<u8> = Vec::new();
        let mut point = None;
        for c in mant.chars() {
            match c {
                '0'..='9' => digits.push(c as u8 - b'0'),
                '.' => point = Some(digits.len()),
                _ => {}
            }
        }
        let int_len = point.unwrap_or(digits.len()) as i64;
        let mut exp10 = exp + int_len;
        while digits.first() == Some(&0) && digits.len() > 1 {
            digits.remove(0);
            exp10 -= 1;
        }
        if digits.len() > sig {
            let tail = digits.split_off(sig);
            let first = tail[0];
            let rest_nonzero = tail[1..].iter().any(|&d| d != 0);
            let last_odd = digits.last().map_or(false, |d| d % 2 == 1);
            let round_up = first > 5 || (first == 5 && (rest_nonzero || last_odd));
            if round_up {
                let mut i = digits.len();
                loop {
                    if i == 0 {
                        digits.insert(0, 1);
                        digits.pop();
                        exp10 += 1;
                        break;
                    }
                    i -= 1;
                    if digits[i] == 9 {
                        digits[i] = 0;
                    } else {
                        digits[i] += 1;
                        break;
                    }
                }
            }
        }
        while digits.len() < sig {
            digits.push(0);
        }
        (digits, exp10)
    }

    /// Lower-case scientific notation with `decimals` digits after the point,
    /// e.g. `-8.182546155166e0`. Deterministic and locale-free.
    pub fn to_sci(&self, decimals: usize) -> String {
        if self.is_zero() {
            return format!("{:.*}e0", decimals, 0.0);
        }
        let (digits, exp10) = self.decimal_digits(decimals + 1);
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        out.push((b'0' + digits[0]) as char);
        if decimals > 0 {
            out.push('.');
            out.extend(digits[1..].iter().map(|&d| (b'0' + d) as char));
        }
        out.push('e');
        out.push_str(&(exp10 - 1).to_string());
        out
    }

    /// Plain fixed-point notation with `decimals` digits after the point.
    pub fn to_fixed(&self, decimals: usize) -> String {
        if self.is_zero() {
            return format!("{:.*}", decimals, 0.0);
        }
        let (_, exp10) = self.decimal_digits(1);
        let sig = (exp10 + decimals as i64).max(1) as usize;
        let (digits, exp10) = self.decimal_digits(sig);
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        let bytes: Vec<char> = digits.iter().map(|&d| (b'0' + d) as char).collect();
        if exp10 <= 0 {
            out.push('0');
            if decimals > 0 {
                out.push('.');
                let zeros = (-exp10) as usize;
                let mut frac: String = std::iter::repeat('0').take(zeros).collect();
                frac.extend(bytes.iter());
                frac.truncate(decimals);
                while frac.len() < decimals {
                    frac.push('0');
                }
                out.push_str(&frac);
            }
        } else {
            let int_len = exp10 as usize;
            let mut int_part: String = bytes.iter().take(int_len).collect();
            while int_part.len() < int_len {
                int_part.push('0');
            }
            out.push_str(&int_part);
            if decimals > 0 {
                out.push('.');
                let mut frac: String = bytes.iter().skip(int_len).collect();
                while frac.len() < decimals {
                    frac.push('0');
                }
                frac.truncate(decimals);
                out.push_str(&frac);
            }
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.to_sci(20).parse().unwrap_or(f64::NAN)
    }

    /// Converts to an exact rational (the binary value is dyadic).
    pub fn to_rational(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let (m, _n, s, e, _) = self
            .v
            .as_raw_parts()
            .expect("finite value has raw parts");
        let mut int = BigInt::zero();
        for w in m.iter().rev() {
            int = (int << Word::BITS) + BigInt::from(*w);
        }
        let total = (m.len() * Word::BITS as usize) as i64;
        let shift = e as i64 - total;
        let mut r = Rational::from_integer(int);
        if shift >= 0 {
            r *= Rational::from_integer(BigInt::from(1) << shift as usize);
        } else {
            r /= Rational::from_integer(BigInt::from(1) << (-shift) as usize);
        }
        if s == Sign::Neg {
            -r
        } else {
            r
        }
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(self.prec.get().saturating_sub(1) as usize))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decimals = f.precision().unwrap_or(15);
        f.write_str(&self.to_sci(decimals))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl<'a> $trait<&'a BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                let prec = self.prec.max(rhs.prec);
                BigReal::wrap(self.v.$op(&rhs.v, prec.bits(), RM), prec)
            }
        }
        impl<'a> $trait<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.v.neg(), self.prec)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.v.clone().neg(), self.prec)
    }
}

/// Absolute difference, `|a - b|`.
pub fn abs_diff(a: &BigReal, b: &BigReal) -> BigReal {
    (a - b).abs()
}

/// True when `|a - b| <= tol`.
pub fn within(a: &BigReal, b: &BigReal, tol: &BigReal) -> bool {
    abs_diff(a, b) <= *tol
}

/// Convenience for tests and fixtures: exact rational to real, then compare.
pub fn rational_close(r: &Rational, x: &BigReal, tol: &BigReal) -> bool {
    within(&BigReal::from_rational(r, x.precision()), x, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use proptest::prelude::*;

    fn p60() -> Precision {
        Precision::default()
    }

    #[test]
    fn formats_scientific_and_fixed() {
        let x = BigReal::parse("-8.182546155166", p60()).unwrap();
        assert_eq!(x.to_sci(12), "-8.182546155166e0");
        assert_eq!(x.to_fixed(3), "-8.183");
        let y = BigReal::from_rational(&rat(465, 98), p60());
        assert_eq!(y.to_sci(20), "4.74489795918367346939e0");
        assert_eq!(BigReal::from_rational(&rat(1, 100_000), p60()).to_sci(2), "1.00e-5");
        assert_eq!(BigReal::from_i64(0, p60()).to_sci(3), "0.000e0");
        assert_eq!(BigReal::from_rational(&rat(3, 400), p60()).to_fixed(4), "0.0075");
        assert_eq!(BigReal::from_i64(1234, p60()).to_fixed(1), "1234.0");
    }

    #[test]
    fn large_integers_convert_exactly() {
        let big: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let x = BigReal::from_bigint(&big, Precision::digits(50));
        assert_eq!(x.to_sci(38), "1.23456789012345678901234567890123456789e38");
        assert_eq!(BigReal::from_bigint(&BigInt::from(-7), p60()).to_f64(), -7.0);
    }

    #[test]
    fn transcendental_values() {
        let pi = BigReal::pi(p60());
        assert_eq!(pi.to_sci(30), "3.141592653589793238462643383280e0");
        let two = BigReal::from_i64(2, p60());
        let s = two.sqrt();
        assert!(within(&(&s * &s), &two, &p60().epsilon(2)));
        let e = BigReal::one(p60()).exp();
        assert_eq!(e.to_sci(20), "2.71828182845904523536e0");
        assert!(within(&BigReal::from_i64(27, p60()).cbrt(), &BigReal::from_i64(3, p60()), &p60().epsilon(2)));
    }

    #[test]
    fn rational_roundtrip_is_exact_for_dyadics() {
        let x = BigReal::from_rational(&rat(-13, 64), p60());
        assert_eq!(x.to_rational(), rat(-13, 64));
        let y = BigReal::from_i64(3, p60()) / BigReal::from_i64(7, p60());
        assert!(rational_close(&rat(3, 7), &y, &p60().epsilon(1)));
    }

    proptest! {
        #[test]
        fn mixed_pipeline_keeps_fifty_five_digits(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let (ra, rc) = (rat(a, b), rat(c, d));
            let exact = (&ra * &rc + &ra - &rc) / (&rc * &rc + int(1));
            let p = p60();
            let (xa, xc) = (BigReal::from_rational(&ra, p), BigReal::from_rational(&rc, p));
            let one = BigReal::one(p);
            let got = (&xa * &xc + &xa - &xc) / (&xc * &xc + one);
            let scale = BigReal::from_rational(&exact, p).abs().max(&BigReal::one(p)).clone();
            let tol = scale * BigReal::pow10(-55, p);
            prop_assert!(rational_close(&exact, &got, &tol));
        }
    }
}
