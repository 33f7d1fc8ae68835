//! Two backbones: `C_g^[2](z) = P_g^[2](z) / (1-4z)^{3g+2}` with
//! `P_g^[2] = z^{-1} P_{g+1} - sum_{g1=1}^{g} P_{g1} P_{g+1-g1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exact::{
    binomial, factorial, pow4, rational, to_integer, NPolynomial, QPolynomial, QSeries,
};
use crate::one_backbone::{genus_poly_p, hz_count, p_poly, r_poly};
use crate::oracle::{Backbones, GenusTable};
use crate::young::charsum_u;
use crate::{Error, Result};

/// `P_g^[2](z)`.
pub fn p2_poly(g: usize) -> Result<QPolynomial> {
    let head = p_poly(g + 1)?
        .div_z_power(1)
        .ok_or_else(|| Error::DivisionRemainder(format!("P_{} has a constant term", g + 1)))?;
    (1..=g).try_fold(head, |acc, g1| {
        Ok(&acc - &(&p_poly(g1)? * &p_poly(g + 1 - g1)?))
    })
}

/// `[z^n] p(z) / (1-4z)^k = sum_i p_i binom(n-i+k-1, k-1) 4^{n-i}`.
pub fn coefficient_over_power(p: &QPolynomial, k: usize, n: usize) -> BigRational {
    if k == 0 {
        return p.coeff(n);
    }
    p.coeffs()
        .iter()
        .enumerate()
        .take(n + 1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let weight = binomial((n - i + k - 1) as u64, (k - 1) as u64) * pow4((n - i) as u64);
            c * BigRational::from_integer(weight)
        })
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// `c_g^[2](n)`, the number of connected two-backbone diagrams with `n`
/// chords and genus `g`.
pub fn c2_count(g: usize, n: usize) -> Result<BigInt> {
    if n < 2 * g + 1 {
        return Ok(BigInt::zero());
    }
    let value = coefficient_over_power(&p2_poly(g)?, 3 * g + 2, n);
    to_integer(&value).ok_or_else(|| Error::NotIntegral(format!("c2({g}, {n}) = {value}")))
}

/// All `c_g^[2](n)` for fixed `n`.
pub fn genus_table(n: usize) -> Result<GenusTable> {
    let mut counts = Vec::new();
    for g in Backbones::Two.genus_range(n) {
        counts.push(c2_count(g, n)?);
    }
    Ok(GenusTable::from_fn(Backbones::Two, n, |g| {
        counts[g].clone()
    }))
}

/// `Q(n,N) = sum_g c_g^[2](n) N^{n-2g}`.
pub fn q_poly(n: usize) -> Result<NPolynomial> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for g in Backbones::Two.genus_range(n) {
        coeffs[n - 2 * g] = c2_count(g, n)?;
    }
    Ok(NPolynomial::new(coeffs))
}

/// `u_g(n) = c_{g+1}(n+1) - 2 c_{g+1}(n)`, the coefficient of `N^{n-2g}` in `U(n,N)`.
pub fn u_count(g: usize, n: usize) -> BigInt {
    hz_count(g + 1, n + 1) - hz_count(g + 1, n) * 2
}

/// `U_g(z) = sum_n u_g(n) z^n`.
pub fn u_series(g: usize, order: usize) -> QSeries {
    QSeries::from_fn(order, |n| BigRational::from_integer(u_count(g, n)))
}

/// `U(n,N)` assembled from one-backbone counts. The top power `N^{n+2}`
/// comes from disconnected pairs and has coefficient `c_0(n+1) - 2c_0(n)`.
pub fn u_poly(n: usize) -> NPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 3];
    for h in 0..=(n + 2) / 2 {
        coeffs[n + 2 - 2 * h] = hz_count(h, n + 1) - hz_count(h, n) * 2;
    }
    NPolynomial::new(coeffs)
}

/// `V(n,N) = sum_{d=1}^{n-1} P(d,N) P(n-d,N)`.
pub fn v_poly(n: usize) -> NPolynomial {
    (1..n).fold(NPolynomial::zero(), |acc, d| {
        &acc + &(&genus_poly_p(d) * &genus_poly_p(n - d))
    })
}

/// Whether `Q(n,N) = U(n,N) - V(n,N)` with `U` taken from the character sum.
pub fn q_decomposition_check(n: usize) -> Result<bool> {
    Ok(q_poly(n)? == &charsum_u(n) - &v_poly(n))
}

/// The explicit formulas
/// `c_0^[2](n) = n 4^{n-1}`,
/// `c_1^[2](n) = (13n+3) n(n-1)(n-2) 4^{n-3} / 12`,
/// `c_2^[2](n) = (445n^2-401n-210) n(n-1)(n-2)(n-3)(n-4) 4^{n-6} / 180`.
pub fn closed_form_c2(g: usize, n: usize) -> Result<BigInt> {
    let m = n as i64;
    let (poly, den, shift) = match g {
        0 => (1, 1, 1),
        1 => (13 * m + 3, 12, 3),
        2 => (445 * m * m - 401 * m - 210, 180, 6),
        other => return Err(Error::UnsupportedGenus(other)),
    };
    if n < 2 * g + 1 {
        return Ok(BigInt::zero());
    }
    let falling: BigInt = (0..=2 * g as i64).map(|i| BigInt::from(m - i)).product();
    let mut value = BigRational::new(falling * poly, BigInt::from(den));
    let exp = m - shift;
    if exp >= 0 {
        value *= BigRational::from_integer(pow4(exp as u64));
    } else {
        value /= BigRational::from_integer(pow4((-exp) as u64));
    }
    to_integer(&value)
        .ok_or_else(|| Error::NotIntegral(format!("closed form c2({g}, {n}) = {value}")))
}

/// Numerator and denominator of the ratio `c_g^[2](n+1) / c_g^[2](n)`:
/// `(52n^2+116n+64) / (13n^2-23n-6)` for `g = 1`,
/// `(1780n^3+3736n^2+1292n-664) / (445n^3-2181n^2+1394n+840)` for `g = 2`.
fn recursion_factors(g: usize, n: i64) -> Result<(i64, i64)> {
    match g {
        1 => Ok((52 * n * n + 116 * n + 64, 13 * n * n - 23 * n - 6)),
        2 => Ok((
            1780 * n * n * n + 3736 * n * n + 1292 * n - 664,
            445 * n * n * n - 2181 * n * n + 1394 * n + 840,
        )),
        other => Err(Error::UnsupportedGenus(other)),
    }
}

/// Whether `c_g^[2]` obeys its first-order rational recursion for every
/// `1 <= n < max_n` with a nonzero denominator.
pub fn ratio_recursion_check(g: usize, max_n: usize) -> Result<bool> {
    recursion_factors(g, 1)?;
    for n in 1..max_n {
        let (num, den) = recursion_factors(g, n as i64)?;
        if den == 0 {
            continue;
        }
        if c2_count(g, n + 1)? * den != c2_count(g, n)? * num {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P_g^[2](1/4) / (3g+1)! * n^{3g+1} * 4^n`.
pub fn asymptotic_estimate(g: usize, n: usize) -> Result<BigRational> {
    let at_quarter = p2_poly(g)?.evaluate(&rational(1, 4));
    let growth = BigInt::from(n).pow(3 * g as u32 + 1) * pow4(n as u64);
    Ok(at_quarter * BigRational::from_integer(growth)
        / BigRational::from_integer(factorial(3 * g as u64 + 1)))
}

/// `c_g^[2](n)` divided by [`asymptotic_estimate`].
pub fn asymptotic_ratio(g: usize, n: usize) -> Result<BigRational> {
    Ok(BigRational::from_integer(c2_count(g, n)?) / asymptotic_estimate(g, n)?)
}

/// `R_g^[2](z) = P_g^[2](z) / z^{2g+1}`.
pub fn r2_poly(g: usize) -> Result<QPolynomial> {
    p2_poly(g)?.div_z_power(2 * g + 1).ok_or_else(|| {
        Error::DivisionRemainder(format!("P2_{g} is not divisible by z^{}", 2 * g + 1))
    })
}

/// `R_g^[2] = R_{g+1} - z sum_{g1=1}^{g} R_{g1} R_{g+1-g1}`, computed from the
/// one-backbone `R_g = P_g / z^{2g}` without going through `P_g^[2]`.
pub fn r2_from_r(g: usize) -> Result<QPolynomial> {
    let mut sum = QPolynomial::zero();
    for g1 in 1..=g {
        sum = &sum + &(&r_poly(g1)? * &r_poly(g + 1 - g1)?);
    }
    Ok(&r_poly(g + 1)? - &sum.shift(1))
}

/// `(4g+4)! / (4^{g+1} (2g+3)!)`, the lowest coefficient of `P_g^[2]`.
pub fn lowest_coefficient(g: usize) -> BigInt {
    factorial(4 * g as u64 + 4) / (pow4(g as u64 + 1) * factorial(2 * g as u64 + 3))
}

/// Structural properties of `P_g^[2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub genus: usize,
    pub integral: bool,
    /// `deg <= 3g+1`.
    pub degree_bound: bool,
    /// `z^{2g+1}` divides the polynomial.
    pub divisible: bool,
    /// `[z^{2g+1}] = (4g+4)! / (4^{g+1} (2g+3)!)`.
    pub lowest_coefficient: bool,
    pub positive_at_quarter: bool,
    /// `deg R_g^[2] <= g`.
    pub reduced_degree_bound: bool,
    /// Every coefficient from `z^{2g+1}` to the top is positive. Observed,
    /// not proven, so it does not count towards [`Structure::holds`].
    pub positive_coefficients: bool,
}

impl Structure {
    pub fn holds(&self) -> bool {
        self.integral
            && self.degree_bound
            && self.divisible
            && self.lowest_coefficient
            && self.positive_at_quarter
            && self.reduced_degree_bound
    }
}

pub fn structure(g: usize) -> Result<Structure> {
    let p = p2_poly(g)?;
    let reduced = p.div_z_power(2 * g + 1);
    let top = p.degree().unwrap_or(0);
    Ok(Structure {
        genus: g,
        integral: p.is_integral(),
        degree_bound: top <= 3 * g + 1,
        divisible: reduced.is_some(),
        lowest_coefficient: p.coeff(2 * g + 1) == BigRational::from_integer(lowest_coefficient(g)),
        positive_at_quarter: p.evaluate(&rational(1, 4)).is_positive(),
        reduced_degree_bound: reduced
            .as_ref()
            .and_then(QPolynomial::degree)
            .is_some_and(|d| d <= g),
        positive_coefficients: (2 * g + 1..=top).all(|k| p.coeff(k).is_positive()),
    })
}
