use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{mn_character, YoungDiagram};
use crate::exact::{binomial, factorial, QPolynomial};
use crate::perm::CycleType;

/// `binom(N + shift, k)` as a polynomial in `N`.
pub(crate) fn binomial_in_n(shift: i64, k: usize) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for i in 0..k as i64 {
        acc = &acc * &QPolynomial::from_ints(&[shift - i, 1]);
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(k as u64)))
}

/// `s_Y(1, ..., 1)` with `N` ones, as a polynomial in `N`, from the
/// hook-content formula `prod (N + j - i) / hook(i, j)`.
pub fn schur_all_ones_poly(shape: &YoungDiagram) -> QPolynomial {
    shape.squares().fold(QPolynomial::one(), |acc, (i, j)| {
        let content = j as i64 - i as i64;
        let factor = QPolynomial::from_ints(&[content, 1]).scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(shape.hook_length((i, j))),
        ));
        &acc * &factor
    })
}

/// `s_Y(1, ..., 1)` with `n_vars` ones: the number of semistandard tableaux
/// of shape `Y` with entries at most `n_vars`.
pub fn schur_all_ones(shape: &YoungDiagram, n_vars: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in shape.squares() {
        num *= BigInt::from(n_vars) + BigInt::from(j) - BigInt::from(i);
        den *= BigInt::from(shape.hook_length((i, j)));
    }
    num / den
}

/// `binom(N + q, 2n) binom(2n - 1, q)`: the Schur value of the `(p, q)`-hook.
pub fn hook_schur_closed_form(p: usize, q: usize, n_vars: u64) -> BigInt {
    let size = (p + q + 1) as u64;
    binomial(n_vars + q as u64, size) * binomial(size - 1, q as u64)
}

/// `(1/m!) sum_{pi in S_m} N^{cycles(pi)} chi^Y(pi)`, summed class by class.
pub fn schur_via_power_sums(shape: &YoungDiagram) -> QPolynomial {
    let m = shape.size();
    let total = CycleType::all(m)
        .iter()
        .fold(QPolynomial::zero(), |acc, class| {
            let chi = mn_character(shape, class).expect("sizes agree");
            let weight = BigRational::from_integer(class.class_size() * chi);
            &acc + &QPolynomial::monomial(weight, class.cycle_count())
        });
    total.scale(&BigRational::new(BigInt::one(), factorial(m as u64)))
}
