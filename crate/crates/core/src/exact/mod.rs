//! Exact arithmetic: big integers and rationals, dense polynomials over the
//! rationals, truncated power series, and the `u = 1 - 4z` basis used by the
//! partial-fraction pipeline.

mod basis;
mod npoly;
mod poly;
mod series;

pub use basis::{from_u_basis, partial_fractions, partial_fractions_series, to_u_basis};
pub use npoly::NPolynomial;
pub use poly::QPolynomial;
pub use series::{binomial_series, QSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// Default truncation order for verification runs.
pub const DEFAULT_SERIES_ORDER: usize = 64;

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(2n-1)!! = 1 * 3 * ... * (2n-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * (2 * k - 1))
}

/// Binomial coefficient with the convention `binom(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn pow4(exp: u64) -> BigInt {
    BigInt::one() << (2 * exp as usize)
}

/// Returns the integer value of `r`, or `None` when `r` has a denominator.
pub fn to_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
