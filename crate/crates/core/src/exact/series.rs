use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QPolynomial;

/// Power series truncated after `z^order`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigRational>,
}

impl QSeries {
    /// Builds a series of the given order, padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        QSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        QSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_poly(p: &QPolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&QPolynomial::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^power`.
    ///
    /// Panics if `power` is beyond the truncation order.
    pub fn coeff(&self, power: usize) -> &BigRational {
        &self.coeffs[power]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    /// All retained coefficients as a polynomial.
    pub fn to_poly(&self) -> QPolynomial {
        QPolynomial::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z^k`, keeping the same order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        Self::from_fn(order, |i| {
            if i < k {
                BigRational::zero()
            } else {
                self.coeffs[i - k].clone()
            }
        })
    }

    /// Formal derivative; the order drops by one (not below zero).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::from_fn(order, |i| {
            self.coeffs
                .get(i + 1)
                .map(|c| c * BigInt::from(i + 1))
                .unwrap_or_else(BigRational::zero)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        QSeries { coeffs }
    }
}

/// Expansion of `(1 - 4z)^alpha` to `z^order`, for any rational `alpha`.
pub fn binomial_series(alpha: &BigRational, order: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut a = BigRational::one();
    for k in 0..=order {
        coeffs.push(a.clone());
        let k = BigRational::from_integer(BigInt::from(k));
        a = a * BigRational::from_integer(BigInt::from(4)) * (&k - alpha)
            / (k + BigRational::one());
    }
    QSeries { coeffs }
}
