//! Real-root isolation for rational polynomials.
//!
//! Roots are isolated with Sturm sequences on each square-free factor and
//! then refined by exact bisection on dyadic rationals. A root is reported as
//! exact when a rational candidate allowed by the integer coefficients
//! evaluates to zero.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::RatPoly;
use super::rational::{int, Rational};
use super::real::{BigReal, Precision};
use crate::error::{Error, Result};

/// Optional closed bounds for the root search.
#[derive(Clone, Debug, Default)]
pub struct RootInterval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl RootInterval {
    pub fn between(lo: Rational, hi: Rational) -> Self {
        RootInterval { lo: Some(lo), hi: Some(hi) }
    }

    pub fn positive() -> Self {
        RootInterval { lo: Some(Rational::zero()), hi: None }
    }
}

#[derive(Clone, Debug)]
pub struct RealRoot {
    /// Isolating interval `[lo, hi]`; for exact roots `lo == hi`.
    pub lo: Rational,
    pub hi: Rational,
    pub value: BigReal,
    pub multiplicity: u32,
    pub exact: Option<Rational>,
}

struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(f: &RatPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(positive_rescale(&-r));
        }
        Sturm { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0;
        let mut v = 0;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Divides out the content by a positive factor, keeping the sign pattern.
fn positive_rescale(p: &RatPoly) -> RatPoly {
    let (c, q) = p.primitive();
    if c.is_negative() {
        -q
    } else {
        q
    }
}

/// Strict bound on the magnitude of every root (Cauchy).
fn cauchy_bound(f: &RatPoly) -> Rational {
    let lc = f.leading().abs();
    let m = f.coeffs().iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    Rational::one() + m
}

/// All real roots of `p` in the optional closed interval, ascending.
///
/// Each root value is refined to `digits` significant digits.
pub fn poly_real_roots(p: &RatPoly, interval: &RootInterval, digits: u32) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let prec = Precision::digits(digits);
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let bound = cauchy_bound(p);
    let lo = interval.lo.clone().unwrap_or_else(|| -bound.clone());
    let hi = interval.hi.clone().unwrap_or_else(|| bound.clone());
    if lo > hi {
        return Ok(out);
    }
    for (factor, mult) in p.square_free_decomposition() {
        let f = factor.normalized();
        let sturm = Sturm::new(&f);
        if f.eval(&lo).is_zero() {
            out.push(exact_root(lo.clone(), mult, prec));
        }
        let mut leaves = Vec::new();
        isolate(&f, &sturm, lo.clone(), hi.clone(), &mut leaves);
        for (a, b) in leaves {
            out.push(refine(&f, a, b, mult, digits, prec));
        }
    }
    out.sort_by(|x, y| x.value.partial_cmp(&y.value).unwrap_or(std::cmp::Ordering::Equal));
    Ok(out)
}

fn exact_root(r: Rational, multiplicity: u32, prec: Precision) -> RealRoot {
    RealRoot {
        lo: r.clone(),
        hi: r.clone(),
        value: BigReal::from_rational(&r, prec),
        multiplicity,
        exact: Some(r),
    }
}

/// Splits `(a, b]` until each piece holds exactly one root.
fn isolate(f: &RatPoly, sturm: &Sturm, a: Rational, b: Rational, out: &mut Vec<(Rational, Rational)>) {
    let n = sturm.count(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((a, b));
        return;
    }
    let mid = split_point(f, &a, &b);
    isolate(f, sturm, a, mid.clone(), out);
    isolate(f, sturm, mid, b, out);
}

/// A point strictly inside `(a, b)` where `f` does not vanish.
fn split_point(f: &RatPoly, a: &Rational, b: &Rational) -> Rational {
    let w = b - a;
    let mut k = 2i64;
    loop {
        for j in 1..k {
            let m = a + &w * Rational::new(BigInt::from(j), BigInt::from(k));
            if !f.eval(&m).is_zero() {
                return m;
            }
        }
        k += 1;
    }
}

/// Bisects a single-root interval `(a, b]` of the square-free `f`.
fn refine(f: &RatPoly, mut a: Rational, mut b: Rational, mult: u32, digits: u32, prec: Precision) -> RealRoot {
    let iso = (a.clone(), b.clone());
    if f.eval(&b).is_zero() {
        let mut r = exact_root(b, mult, prec);
        r.lo = iso.0;
        return r;
    }
    if f.eval(&a).is_zero() {
        // The left end is a root excluded from the half-open interval; step
        // inside until the sign change belongs to this interval's own root.
        let sturm = Sturm::new(f);
        loop {
            let m = split_point(f, &a, &b);
            if sturm.count(&m, &b) == 1 {
                a = m;
                break;
            }
            b = m;
        }
    }
    let sb = sign(&f.eval(&b));
    let scale = {
        let m = if a.abs() > b.abs() { a.abs() } else { b.abs() };
        if m > Rational::one() { m } else { Rational::one() }
    };
    let tol = scale * Rational::new(BigInt::one(), BigInt::from(10).pow(digits + 3));
    let lead = f.normalized().leading().to_integer();
    let mut exact = None;
    // Rational roots of a primitive integer polynomial have denominators
    // dividing the leading coefficient, so testing the nearest multiples of
    // 1/lead catches them once the interval is narrow.
    let cand_checked = |a: &Rational, b: &Rational| -> Option<Rational> {
        let l = Rational::from_integer(lead.clone());
        let lo = (a * &l).ceil();
        let hi = (b * &l).floor();
        if hi < lo || &hi - &lo > int(2) {
            return None;
        }
        let mut c = lo;
        while c <= hi {
            let r = &c / &l;
            if &r > a && &r <= b && f.eval(&r).is_zero() {
                return Some(r);
            }
            c += Rational::one();
        }
        None
    };
    while &b - &a > tol {
        if let Some(r) = cand_checked(&a, &b) {
            exact = Some(r);
            break;
        }
        let m = (&a + &b) / int(2);
        let sm = sign(&f.eval(&m));
        if sm == 0 {
            exact = Some(m);
            break;
        }
        if sm == sb {
            b = m;
        } else {
            a = m;
        }
    }
    if exact.is_none() {
        exact = cand_checked(&a, &b);
    }
    match exact {
        Some(r) => RealRoot { lo: iso.0, hi: iso.1, value: BigReal::from_rational(&r, prec), multiplicity: mult, exact: Some(r) },
        None => {
            let m = (&a + &b) / int(2);
            RealRoot { lo: iso.0, hi: iso.1, value: BigReal::from_rational(&m, prec), multiplicity: mult, exact: None }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, Var};
    use proptest::prelude::*;

    #[test]
    fn linear_root_is_exact() {
        let p = RatPoly::from_ints(&[-15, 14], Var::Wa2);
        let r = poly_real_roots(&p, &RootInterval::default(), 60).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].exact, Some(rat(15, 14)));
    }

    #[test]
    fn quadratic_roots_match_surds() {
        let p = RatPoly::from_ints(&[105, -148, 44], Var::Wa2);
        let r = poly_real_roots(&p, &RootInterval::default(), 50).unwrap();
        assert_eq!(r.len(), 2);
        let prec = Precision::digits(60);
        let s = BigReal::from_i64(214, prec).sqrt();
        let lo = (BigReal::from_i64(37, prec) - s.clone()) / BigReal::from_i64(22, prec);
        let hi = (BigReal::from_i64(37, prec) + s) / BigReal::from_i64(22, prec);
        let tol = BigReal::pow10(-48, prec);
        assert!(crate::exactmath::within(&r[0].value, &lo, &tol));
        assert!(crate::exactmath::within(&r[1].value, &hi, &tol));
    }

    #[test]
    fn no_real_roots() {
        let p = RatPoly::from_ints(&[1, 0, 1], Var::T);
        assert!(poly_real_roots(&p, &RootInterval::default(), 30).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_is_an_outcome() {
        let e = poly_real_roots(&RatPoly::zero(Var::T), &RootInterval::default(), 30).unwrap_err();
        assert_eq!(e.to_string(), "identically zero: condition holds for all parameter values");
    }

    #[test]
    fn multiplicities_and_bounds() {
        let a = RatPoly::from_ints(&[-1, 1], Var::X);
        let b = RatPoly::from_ints(&[3, 2], Var::X);
        let p = &(&a * &a) * &b;
        let r = poly_real_roots(&p, &RootInterval::default(), 30).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].exact, Some(rat(-3, 2)));
        assert_eq!(r[1].multiplicity, 2);
        let r = poly_real_roots(&p, &RootInterval::positive(), 30).unwrap();
        assert_eq!(r.len(), 1);
        let r = poly_real_roots(&p, &RootInterval::between(rat(-3, 2), int(0)), 30).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].exact, Some(rat(-3, 2)));
    }

    fn planted() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-12i64..12, 1i64..5), 1..=8)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn planted_rational_roots_are_recovered(roots in planted()) {
            let mut p = RatPoly::one(Var::X);
            for (n, d) in &roots {
                p = &p * &RatPoly::new(vec![-rat(*n, *d), int(1)], Var::X);
            }
            let found = poly_real_roots(&p, &RootInterval::default(), 30).unwrap();
            let mut want: Vec<Rational> = roots.iter().map(|(n, d)| rat(*n, *d)).collect();
            want.sort();
            want.dedup();
            prop_assert_eq!(found.len(), want.len());
            for (r, w) in found.iter().zip(&want) {
                prop_assert_eq!(r.exact.as_ref(), Some(w));
                prop_assert!(&r.lo <= w && w <= &r.hi);
            }
        }

        #[test]
        fn refinement_stays_in_isolating_interval(c in 2i64..60, digits in 20u32..40) {
            // x^3 - c has a single irrational root for non-cubes.
            let p = RatPoly::from_ints(&[-c, 0, 0, 1], Var::X);
            let coarse = poly_real_roots(&p, &RootInterval::default(), digits).unwrap();
            let fine = poly_real_roots(&p, &RootInterval::default(), digits + 20).unwrap();
            prop_assert_eq!(coarse.len(), 1);
            let lo = BigReal::from_rational(&coarse[0].lo, Precision::digits(80));
            let hi = BigReal::from_rational(&coarse[0].hi, Precision::digits(80));
            prop_assert!(lo <= fine[0].value && fine[0].value <= hi);
        }
    }
}
