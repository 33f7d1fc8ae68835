//! Character-sum evaluation of `U(n,N)`, the sum of `N^{cycles(tau_c ∘ iota)}`
//! over every split point `c` and matching `iota`, connected or not.
//!
//! Three forms are provided, each reducing the previous one:
//!
//! 1. [`charsum_u_orthogonality`]: the full sum over Young diagrams
//!    `(2n-1)!! sum_Y chi^Y([2^n]) (sum_c chi^Y(tau_c)) s_Y(1^N) / chi^Y([1^{2n}])`;
//! 2. [`charsum_u_hooks`]: only hooks survive the `tau_c` sum;
//! 3. [`charsum_u`]: the closed binomial form of the hook sum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::schur::binomial_in_n;
use super::{
    hook_char_identity, hook_char_matching, mn_character, schur_all_ones_poly, tau_sum,
    tau_sum_expected, HookShape, YoungDiagram,
};
use crate::exact::{binomial, double_factorial_odd, NPolynomial, QPolynomial};
use crate::perm::{CycleType, Matchings, Permutation};
use crate::{Error, Result};

/// Largest `n` accepted by [`charsum_u_orthogonality`].
pub const ORTHOGONALITY_LIMIT: usize = 5;

/// `U(n,N) = (2n-1)!! sum_{j=0}^{n-1} (-1)^j binom(n-1, j)
///   [(2n-4j-1) binom(N+2n-2j-1, 2n) + (2n-4j-3) binom(N+2n-2j-2, 2n)]`.
pub fn charsum_u(n: usize) -> NPolynomial {
    let two_n = 2 * n as i64;
    let mut acc = QPolynomial::zero();
    for j in 0..n {
        let jj = j as i64;
        let bracket = &binomial_in_n(two_n - 2 * jj - 1, 2 * n)
            .scale(&BigRational::from_integer((two_n - 4 * jj - 1).into()))
            + &binomial_in_n(two_n - 2 * jj - 2, 2 * n)
                .scale(&BigRational::from_integer((two_n - 4 * jj - 3).into()));
        let mut weight = binomial(n as u64 - 1, j as u64);
        if j % 2 == 1 {
            weight = -weight;
        }
        acc = &acc + &bracket.scale(&BigRational::from_integer(weight));
    }
    let scaled = acc.scale(&BigRational::from_integer(double_factorial_odd(n as u64)));
    NPolynomial::from_q(&scaled).expect("U(n,N) has integer coefficients")
}

/// The hook-only sum, using the closed forms for the hook characters and
/// `s_{p,q}(1^N) = binom(N+q, 2n) binom(2n-1, q)`.
pub fn charsum_u_hooks(n: usize) -> NPolynomial {
    let mut acc = QPolynomial::zero();
    for h in HookShape::all(2 * n) {
        let sign_weight = tau_sum_expected(&h.diagram());
        if sign_weight.is_zero() {
            continue;
        }
        let chi_matching = hook_char_matching(h.p, h.q, n).expect("hook has 2n squares");
        let dim = hook_char_identity(h.p, h.q);
        let schur = binomial_in_n(h.q as i64, 2 * n).scale(&BigRational::from_integer(binomial(
            2 * n as u64 - 1,
            h.q as u64,
        )));
        let coeff = BigRational::new(chi_matching * sign_weight, dim);
        acc = &acc + &schur.scale(&coeff);
    }
    let scaled = acc.scale(&BigRational::from_integer(double_factorial_odd(n as u64)));
    NPolynomial::from_q(&scaled).expect("U(n,N) has integer coefficients")
}

/// Per-diagram terms of the unreduced sum, before the `(2n-1)!!` factor:
/// `chi^Y([2^n]) tau_sum(Y) s_Y(1^N) / chi^Y([1^{2n}])` for every `Y` with
/// `2n` squares.
pub fn orthogonality_terms(n: usize) -> Result<Vec<(YoungDiagram, QPolynomial)>> {
    if n > ORTHOGONALITY_LIMIT {
        return Err(Error::LimitExceeded {
            n,
            limit: ORTHOGONALITY_LIMIT,
        });
    }
    YoungDiagram::all(2 * n)
        .into_iter()
        .map(|y| {
            let chi_matching = mn_character(&y, &CycleType::matching(n))?;
            let dim = mn_character(&y, &CycleType::identity(2 * n))?;
            let tau = tau_sum(&y, n)?;
            let coeff = BigRational::new(chi_matching * tau, dim);
            let term = schur_all_ones_poly(&y).scale(&coeff);
            Ok((y, term))
        })
        .collect()
}

/// `U(n,N)` from the full sum over Young diagrams, every character computed
/// by the Murnaghan–Nakayama rule and every Schur value by hook-content.
pub fn charsum_u_orthogonality(n: usize) -> Result<NPolynomial> {
    let sum = orthogonality_terms(n)?
        .iter()
        .fold(QPolynomial::zero(), |acc, (_, term)| &acc + term);
    let scaled = sum.scale(&BigRational::from_integer(double_factorial_odd(n as u64)));
    NPolynomial::from_q(&scaled)
}

/// `#{sigma in [2^n] : tau ∘ sigma in class}` by enumerating all matchings.
pub fn kronecker_count_bruteforce(tau: &Permutation, class: &CycleType) -> Result<BigInt> {
    let n = tau.size() / 2;
    let mut count = 0u64;
    let mut stream = Matchings::new(n);
    while let Some(sigma) = stream.advance() {
        if tau.compose(sigma.as_permutation())?.cycle_type() == *class {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// The same count from characters:
/// `(2n-1)!! / z_pi * sum_Y chi^Y([2^n]) chi^Y(pi) chi^Y(tau) / chi^Y([1^{2n}])`,
/// where `z_pi` is the centralizer order of `class`.
pub fn kronecker_count_characters(tau: &CycleType, class: &CycleType) -> Result<BigInt> {
    let size = tau.size();
    if size != class.size() || size % 2 == 1 {
        return Err(Error::SizeMismatch {
            left: size,
            right: class.size(),
        });
    }
    let n = size / 2;
    let mut sum = BigRational::zero();
    for y in YoungDiagram::all(size) {
        let num = mn_character(&y, &CycleType::matching(n))?
            * mn_character(&y, class)?
            * mn_character(&y, tau)?;
        sum += BigRational::new(num, mn_character(&y, &CycleType::identity(size))?);
    }
    let total = sum * BigRational::new(double_factorial_odd(n as u64), class.centralizer_order());
    crate::exact::to_integer(&total).ok_or_else(|| Error::NotIntegral(total.to_string()))
}
