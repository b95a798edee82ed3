//! Truncated Taylor series about a fixed center.

use std::ops::{Add, Sub};

use crate::exactmath::BigReal;

/// `sum_i coeffs[i] (t - t0)^i`, truncated at degree `coeffs.len() - 1`.
#[derive(Clone, Debug)]
pub struct TaylorSeries {
    pub t0: BigReal,
    pub coeffs: Vec<BigReal>,
}

impl TaylorSeries {
    pub fn new(t0: BigReal, coeffs: Vec<BigReal>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        TaylorSeries { t0, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Value at the center.
    pub fn at_center(&self) -> &BigReal {
        &self.coeffs[0]
    }

    /// Value at `t0 + h` by Horner's rule on the truncated series.
    pub fn eval_offset(&self, h: &BigReal) -> BigReal {
        let mut acc = self.coeffs[self.degree()].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &acc * h + c;
        }
        acc
    }

    /// Termwise derivative; loses one degree.
    pub fn derivative(&self) -> Self {
        let coeffs = if self.degree() == 0 {
            vec![BigReal::zero(self.coeffs[0].precision())]
        } else {
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_i64(i as i64)).collect()
        };
        TaylorSeries::new(self.t0.clone(), coeffs)
    }

    /// Cauchy product truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        let coeffs = (0..=d)
            .map(|i| {
                let mut acc = &self.coeffs[0] * &other.coeffs[i];
                for k in 1..=i {
                    acc = acc + &self.coeffs[k] * &other.coeffs[i - k];
                }
                acc
            })
            .collect();
        TaylorSeries::new(self.t0.clone(), coeffs)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(degree + 1);
        TaylorSeries::new(self.t0.clone(), coeffs)
    }

    pub fn scale(&self, c: &BigReal) -> Self {
        TaylorSeries::new(self.t0.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }
}

fn zip_with(a: &TaylorSeries, b: &TaylorSeries, f: impl Fn(&BigReal, &BigReal) -> BigReal) -> TaylorSeries {
    let d = a.degree().min(b.degree());
    TaylorSeries::new(a.t0.clone(), (0..=d).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect())
}

impl Add for &TaylorSeries {
    type Output = TaylorSeries;
    fn add(self, rhs: &TaylorSeries) -> TaylorSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &TaylorSeries {
    type Output = TaylorSeries;
    fn sub(self, rhs: &TaylorSeries) -> TaylorSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}
