//! One backbone: the Harer–Zagier recursion
//! `(n+1) c_g(n) = 2(2n-1) c_g(n-1) + (2n-1)(n-1)(2n-3) c_{g-1}(n-2)`,
//! the genus polynomials `P(n,N)`, and two independent routes to the
//! numerators `P_g(z)` of `C_g(z) = P_g(z) (1-4z)^{1/2-3g}`.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{
    binomial_series, double_factorial_odd, factorial, int, partial_fractions, rational,
    NPolynomial, QPolynomial, QSeries,
};
use crate::oracle::{Backbones, GenusTable};
use crate::{Error, Result};

fn count_table() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Row `n` of the count table: `c_g(n)` for `0 <= g <= n/2`.
pub fn hz_row(n: usize) -> Vec<BigInt> {
    if let Some(row) = count_table().read().expect("table poisoned").get(n) {
        return row.clone();
    }
    let mut table = count_table().write().expect("table poisoned");
    while table.len() <= n {
        let m = table.len();
        let get = |table: &Vec<Vec<BigInt>>, g: usize, k: usize| -> BigInt {
            table[k].get(g).cloned().unwrap_or_else(BigInt::zero)
        };
        let row: Vec<BigInt> = (0..=m / 2)
            .map(|g| {
                let mut rhs = get(&table, g, m - 1) * (2 * (2 * m - 1));
                if g >= 1 && m >= 2 {
                    rhs += get(&table, g - 1, m - 2) * ((2 * m - 1) * (m - 1) * (2 * m - 3));
                }
                rhs / (m + 1)
            })
            .collect();
        table.push(row);
    }
    table[n].clone()
}

/// `c_g(n)`, the number of one-backbone diagrams with `n` chords and genus `g`.
pub fn hz_count(g: usize, n: usize) -> BigInt {
    if 2 * g > n {
        return BigInt::zero();
    }
    hz_row(n).swap_remove(g)
}

/// All `c_g(n)` for fixed `n`.
pub fn genus_table(n: usize) -> GenusTable {
    let row = hz_row(n);
    GenusTable::from_fn(Backbones::One, n, |g| row[g].clone())
}

/// `P(n,N) = sum_g c_g(n) N^{n+1-2g}`.
pub fn genus_poly_p(n: usize) -> NPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 2];
    for (g, c) in hz_row(n).into_iter().enumerate() {
        coeffs[n + 1 - 2 * g] = c;
    }
    NPolynomial::new(coeffs)
}

/// `((1+z)/(1-z))^N` to `z^order`, each coefficient a polynomial in `N`,
/// expanded as `exp(N log((1+z)/(1-z)))`.
pub fn hz_generating_function(order: usize) -> Vec<QPolynomial> {
    // log((1+z)/(1-z)) = 2 (z + z^3/3 + z^5/5 + ...)
    let log = QSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            rational(2, k as i64)
        } else {
            BigRational::zero()
        }
    });
    let mut out = vec![QPolynomial::zero(); order + 1];
    let mut power = QSeries::one(order);
    let mut inv_fact = BigRational::one();
    for j in 0..=order {
        for (m, slot) in out.iter_mut().enumerate() {
            let c = power.coeff(m) * &inv_fact;
            if !c.is_zero() {
                *slot = &*slot + &QPolynomial::monomial(c, j);
            }
        }
        power = &power * &log;
        inv_fact /= int(j as i64 + 1);
    }
    out
}

/// Both sides of `1 + 2 sum_n P(n,N)/(2n-1)!! z^{n+1} = ((1+z)/(1-z))^N`,
/// coefficient by coefficient in `z` up to `z^order`.
pub fn hz_identity_sides(order: usize) -> (Vec<QPolynomial>, Vec<QPolynomial>) {
    let left = (0..=order)
        .map(|m| {
            if m == 0 {
                return QPolynomial::one();
            }
            let n = m - 1;
            let scale = BigRational::new(BigInt::from(2), double_factorial_odd(n as u64));
            genus_poly_p(n).to_q().scale(&scale)
        })
        .collect();
    (left, hz_generating_function(order))
}

/// Whether the Harer–Zagier generating-function identity holds to `z^order`
/// as an identity of polynomials in `N`.
pub fn hz_identity_check(order: usize) -> bool {
    let (left, right) = hz_identity_sides(order);
    left == right
}

/// `C_g(z) = sum_n c_g(n) z^n` to `z^order`.
pub fn c_series(g: usize, order: usize) -> QSeries {
    QSeries::from_fn(order, |n| BigRational::from_integer(hz_count(g, n)))
}

fn check_genus(g: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::UnsupportedGenus(0));
    }
    Ok(())
}

/// `P_g(z) = C_g(z) (1-4z)^{3g-1/2}`, read off a truncated series.
///
/// The product is computed to `z^{3g+8}`; every coefficient past the degree
/// bound `3g-1` must vanish.
pub fn pg_via_series(g: usize) -> Result<QPolynomial> {
    check_genus(g)?;
    let order = 3 * g + 8;
    let alpha = rational(6 * g as i64 - 1, 2);
    let product = &c_series(g, order) * &binomial_series(&alpha, order);
    if let Some(power) = (3 * g..=order).find(|&k| !product.coeff(k).is_zero()) {
        return Err(Error::NotPolynomial { genus: g, power });
    }
    Ok(product.to_poly())
}

/// Intermediate values of one ODE integration step `P_g -> P_{g+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeStep {
    pub genus: usize,
    /// `P_{1g} = (1-4z) P_g' + (12g-2) P_g`, the numerator of `C_g'`.
    pub p1: QPolynomial,
    /// `P_{2g} = (1-4z) P_{1g}' + (12g+2) P_{1g}`.
    pub p2: QPolynomial,
    /// `P_{3g} = (1-4z) P_{2g}' + (12g+6) P_{2g}`.
    pub p3: QPolynomial,
    /// `Q_g = 4z^5 P_{3g} + 24z^4 (1-4z) P_{2g} + 27z^3 (1-4z)^2 P_{1g} + 3z^2 (1-4z)^3 P_g`.
    pub q: QPolynomial,
    /// `A_j` with `Q_g / (1-4z)^{3g+4} = sum_{j=2}^{3g+4} A_j / (1-4z)^j`.
    pub partial_fractions: BTreeMap<usize, BigRational>,
    /// `P_{g+1}`.
    pub next: QPolynomial,
}

/// Integrates the ODE once: from `P_g` to `P_{g+1}`.
///
/// `C_{g+1}(z) = (sqrt(1-4z)/z) * integral_0^z Q_g(y) / (1-4y)^{3g+4} dy`,
/// which after partial fractions gives
/// `P_{g+1} = -1/(4z) * sum_j A_j/(j-1) ((1-4z)^{3g+3} - (1-4z)^{3g+4-j})`.
/// The integration constant is fixed by `C_{g+1}(0) = 0`.
pub fn ode_step(p_g: &QPolynomial, g: usize) -> Result<OdeStep> {
    check_genus(g)?;
    let u = QPolynomial::from_ints(&[1, -4]);
    let lift =
        |p: &QPolynomial, k: i64| -> QPolynomial { &(&u * &p.derivative()) + &p.scale(&int(k)) };
    let gi = g as i64;
    let p1 = lift(p_g, 12 * gi - 2);
    let p2 = lift(&p1, 12 * gi + 2);
    let p3 = lift(&p2, 12 * gi + 6);

    let z_pow = |k: usize| QPolynomial::monomial(BigRational::one(), k);
    let q = [
        (&z_pow(5) * &p3).scale(&int(4)),
        (&(&z_pow(4) * &u) * &p2).scale(&int(24)),
        (&(&z_pow(3) * &u.pow(2)) * &p1).scale(&int(27)),
        (&(&z_pow(2) * &u.pow(3)) * p_g).scale(&int(3)),
    ]
    .iter()
    .fold(QPolynomial::zero(), |acc, t| &acc + t);

    let order = 3 * g + 4;
    let a = partial_fractions(&q, order)?;
    let top = u.pow(order as u32 - 1);
    let bracket = a.iter().fold(QPolynomial::zero(), |acc, (&j, a_j)| {
        let w = a_j / int(j as i64 - 1);
        let term = &top - &u.pow((order - j) as u32);
        &acc + &term.scale(&w)
    });
    let next = bracket
        .div_z_power(1)
        .ok_or_else(|| {
            Error::DivisionRemainder(format!("bracket for genus {} has a constant term", g + 1))
        })?
        .scale(&rational(-1, 4));
    Ok(OdeStep {
        genus: g,
        p1,
        p2,
        p3,
        q,
        partial_fractions: a,
        next,
    })
}

/// `P_g` from `P_1 = z^2` by repeated ODE integration.
pub fn pg_via_ode(g: usize) -> Result<QPolynomial> {
    check_genus(g)?;
    let mut p = QPolynomial::monomial(BigRational::one(), 2);
    for h in 1..g {
        p = ode_step(&p, h)?.next;
    }
    Ok(p)
}

fn p_cache() -> &'static RwLock<Vec<QPolynomial>> {
    static CACHE: OnceLock<RwLock<Vec<QPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// `P_g(z)` for `g >= 1`, cached.
pub fn p_poly(g: usize) -> Result<QPolynomial> {
    check_genus(g)?;
    if let Some(p) = p_cache().read().expect("cache poisoned").get(g - 1) {
        return Ok(p.clone());
    }
    let mut cache = p_cache().write().expect("cache poisoned");
    while cache.len() < g {
        let next = pg_via_series(cache.len() + 1)?;
        cache.push(next);
    }
    Ok(cache[g - 1].clone())
}

/// `R_g(z) = P_g(z) / z^{2g}`.
pub fn r_poly(g: usize) -> Result<QPolynomial> {
    let p = p_poly(g)?;
    p.div_z_power(2 * g)
        .ok_or_else(|| Error::DivisionRemainder(format!("P_{g} is not divisible by z^{}", 2 * g)))
}

/// `P_g(1/4)` from `P_{g+1}(1/4) = 9(g+1/2)(g+1/6)(g-1/6) / (4(g+1)) P_g(1/4)`,
/// `P_1(1/4) = 1/16`.
pub fn pg_at_quarter(g: usize) -> Result<BigRational> {
    check_genus(g)?;
    let mut value = rational(1, 16);
    for h in 1..g as i64 {
        let factor =
            int(9) * rational(2 * h + 1, 2) * rational(6 * h + 1, 6) * rational(6 * h - 1, 6)
                / int(4 * (h + 1));
        value *= factor;
    }
    Ok(value)
}

/// The Gamma-function closed form
/// `(9/4)^g Gamma(g-1/6) Gamma(g+1/2) Gamma(g+1/6) / (6 pi^{3/2} Gamma(g+1))`,
/// evaluated exactly: shifting each Gamma down to its `g = 1` value leaves
/// `(1/16) (9/4)^{g-1} prod_{i=1}^{g-1} (i-1/6)(i+1/2)(i+1/6) / g!`.
pub fn pg_at_quarter_gamma(g: usize) -> Result<BigRational> {
    check_genus(g)?;
    let mut value = rational(1, 16);
    for i in 1..g as i64 {
        value *= rational(9, 4)
            * rational(6 * i - 1, 6)
            * rational(2 * i + 1, 2)
            * rational(6 * i + 1, 6);
    }
    Ok(value / BigRational::from_integer(factorial(g as u64)))
}

/// The explicit one-backbone formulas for `g = 1, 2, 3`:
/// `c_1(n) = 2^{n-2} (2n-1)!! / (3 (n-2)!)`,
/// `c_2(n) = 2^{n-4} (5n-2) (2n-1)!! / (90 (n-4)!)`,
/// `c_3(n) = 2^{n-6} (35n^2-77n+12) (2n-1)!! / (5670 (n-6)!)`,
/// all zero for `n < 2g`.
pub fn closed_form_c(g: usize, n: usize) -> Result<BigInt> {
    let (poly, den): (BigInt, u64) = match g {
        1 => (BigInt::one(), 3),
        2 => (BigInt::from(5 * n as i64 - 2), 90),
        3 => {
            let n = n as i64;
            (BigInt::from(35 * n * n - 77 * n + 12), 5670)
        }
        other => return Err(Error::UnsupportedGenus(other)),
    };
    if n < 2 * g {
        return Ok(BigInt::zero());
    }
    let shift = n - 2 * g;
    let num = (BigInt::one() << shift) * poly * double_factorial_odd(n as u64);
    Ok(num / (factorial(shift as u64) * den))
}

/// `z(1-4z) C_g' + (1-2z) C_g - Phi_{g-1}` as a truncated series, where
/// `Phi_{g-1} = z^2 (4z^3 C''' + 24z^2 C'' + 27z C' + 3C)` of `C_{g-1}`.
/// Vanishes identically when the counts obey the recursion.
pub fn ode_residual(g: usize, order: usize) -> Result<QSeries> {
    check_genus(g)?;
    let work = order + 3;
    let c = c_series(g, work);
    let prev = c_series(g - 1, work);
    let poly = |coeffs: &[i64]| QSeries::from_poly(&QPolynomial::from_ints(coeffs), work);

    let lhs = &(&poly(&[0, 1, -4]) * &c.derivative()) + &(&poly(&[1, -2]) * &c);
    let d1 = prev.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let inner = [
        &poly(&[0, 0, 0, 4]) * &d3,
        &poly(&[0, 0, 24]) * &d2,
        &poly(&[0, 27]) * &d1,
        prev.scale(&int(3)),
    ]
    .iter()
    .fold(QSeries::new(Vec::new(), order), |acc, t| &acc + t);
    let phi = inner.shift(2);
    Ok((&lhs - &phi).truncate(order))
}
