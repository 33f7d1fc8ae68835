use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QPolynomial;
use crate::{Error, Result};

/// Polynomial in the formal variable `N` with integer coefficients, as used
/// for the genus-graded counts `P(n,N)`, `U(n,N)`, `V(n,N)`, `Q(n,N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NPolynomial {
    coeffs: Vec<BigInt>,
}

impl NPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        NPolynomial { coeffs: Vec::new() }
    }

    /// `c * N^power`.
    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// Builds `sum_k counts[k] N^k` from a histogram.
    pub fn from_histogram(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_q(p: &QPolynomial) -> Result<Self> {
        p.to_integer_coeffs()
            .map(Self::new)
            .ok_or_else(|| Error::NotIntegral(p.render("N")))
    }

    pub fn to_q(&self) -> QPolynomial {
        QPolynomial::from_big_ints(&self.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Powers with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }

    pub fn evaluate(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn evaluate_rational(&self, n: &BigRational) -> BigRational {
        self.to_q().evaluate(n)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for NPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("N")?,
                _ => write!(f, "N^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &NPolynomial {
    type Output = NPolynomial;

    fn add(self, rhs: &NPolynomial) -> NPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &NPolynomial {
    type Output = NPolynomial;

    fn sub(self, rhs: &NPolynomial) -> NPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &NPolynomial {
    type Output = NPolynomial;

    fn mul(self, rhs: &NPolynomial) -> NPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return NPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        NPolynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn display_and_arithmetic() {
        let p = NPolynomial::new(vec![0.into(), 1.into(), 0.into(), 2.into()]);
        assert_eq!(p.to_string(), "2N^3 + N");
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "4N^6 + 4N^4 + N^2");
        assert_eq!((&sq - &sq).to_string(), "0");
        assert_eq!(p.evaluate(&BigInt::from(2)), BigInt::from(18));
        assert_eq!(p.support().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn rejects_fractional_coefficients() {
        let q = QPolynomial::new(vec![rational(1, 2)]);
        assert!(matches!(
            NPolynomial::from_q(&q),
            Err(Error::NotIntegral(_))
        ));
        let q = QPolynomial::from_ints(&[0, 0, 8]);
        assert_eq!(NPolynomial::from_q(&q).unwrap().to_string(), "8N^2");
    }
}
