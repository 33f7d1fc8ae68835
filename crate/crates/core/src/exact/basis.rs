use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{binomial_series, rational, QPolynomial, QSeries};
use crate::{Error, Result};

/// Rewrites `p(z)` as a polynomial in `u = 1 - 4z`, i.e. returns `p((1 - u)/4)`.
pub fn to_u_basis(p: &QPolynomial) -> QPolynomial {
    p.compose(&QPolynomial::new(vec![rational(1, 4), rational(-1, 4)]))
}

/// Inverse of [`to_u_basis`]: substitutes `u = 1 - 4z`.
pub fn from_u_basis(b: &QPolynomial) -> QPolynomial {
    b.compose(&QPolynomial::from_ints(&[1, -4]))
}

/// Expands `q(z) / (1-4z)^order` as `sum_{j=2}^{order} A_j / (1-4z)^j`.
///
/// Returns every `A_j` for `2 <= j <= order`, zeros included. Requires
/// `deg q <= order - 2`.
pub fn partial_fractions(q: &QPolynomial, order: usize) -> Result<BTreeMap<usize, BigRational>> {
    let degree = q.degree().unwrap_or(0);
    if order < 2 || degree > order - 2 {
        return Err(Error::DegreeTooHigh { degree, order });
    }
    let b = to_u_basis(q);
    Ok((2..=order).map(|j| (j, b.coeff(order - j))).collect())
}

/// Series of `sum_j A_j (1-4z)^(-j)` to the given order.
pub fn partial_fractions_series(terms: &BTreeMap<usize, BigRational>, order: usize) -> QSeries {
    terms.iter().filter(|(_, a)| !a.is_zero()).fold(
        QSeries::new(Vec::new(), order),
        |acc, (&j, a)| {
            let minus_j = BigRational::from_integer(-BigInt::from(j));
            &acc + &binomial_series(&minus_j, order).scale(a)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    #[test]
    fn u_basis_small_cases() {
        assert_eq!(to_u_basis(&QPolynomial::one()), QPolynomial::one());
        assert_eq!(
            to_u_basis(&QPolynomial::z()),
            QPolynomial::new(vec![rational(1, 4), rational(-1, 4)])
        );
        let z2 = QPolynomial::from_ints(&[0, 0, 1]);
        let expected = QPolynomial::new(vec![rational(1, 16), rational(-1, 8), rational(1, 16)]);
        assert_eq!(to_u_basis(&z2), expected);
        assert_eq!(from_u_basis(&expected), z2);
    }

    fn target_series(q: &QPolynomial, k: usize, order: usize) -> QSeries {
        let minus_k = BigRational::from_integer(-BigInt::from(k));
        &QSeries::from_poly(q, order) * &binomial_series(&minus_k, order)
    }

    #[test]
    fn single_term_expansions() {
        let a = partial_fractions(&QPolynomial::one(), 2).unwrap();
        assert_eq!(a, BTreeMap::from([(2, int(1))]));

        let a = partial_fractions(&QPolynomial::z(), 3).unwrap();
        assert_eq!(
            a,
            BTreeMap::from([(2, rational(-1, 4)), (3, rational(1, 4))])
        );
        assert_eq!(
            partial_fractions_series(&a, 10),
            target_series(&QPolynomial::z(), 3, 10)
        );
    }

    #[test]
    fn degree_bound_is_enforced() {
        let err = partial_fractions(&QPolynomial::from_ints(&[0, 0, 1]), 3).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeTooHigh {
                degree: 2,
                order: 3
            }
        );
        assert!(partial_fractions(&QPolynomial::one(), 1).is_err());
    }

    fn small_poly() -> impl Strategy<Value = QPolynomial> {
        prop::collection::vec((-50i64..50, 1i64..9), 0..7)
            .prop_map(|v| QPolynomial::new(v.into_iter().map(|(n, d)| rational(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn reconstruction_matches_series(q in small_poly(), slack in 0usize..4) {
            let k = q.degree().unwrap_or(0) + 2 + slack;
            let a = partial_fractions(&q, k).unwrap();
            prop_assert_eq!(partial_fractions_series(&a, 50), target_series(&q, k, 50));
        }

        #[test]
        fn u_basis_round_trip(q in small_poly()) {
            let b = to_u_basis(&q);
            prop_assert_eq!(b.degree(), q.degree());
            prop_assert_eq!(from_u_basis(&b), q);
        }
    }
}
