use chordgenus::exact::{binomial_series, int, rational, to_integer};
use chordgenus::one_backbone::{closed_form_c, hz_count, p_poly};
use chordgenus::two_backbone::{
    c2_count, closed_form_c2, coefficient_over_power, p2_poly, u_count,
};
use chordgenus::{BigInt, BigRational, QPolynomial, QSeries};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|c| QPolynomial::from_ints(&c))
}

proptest! {
    #[test]
    fn extraction_matches_series_product(p in poly(), k in 0usize..6, n in 0usize..20) {
        let order = n;
        let inverse = binomial_series(&int(-(k as i64)), order);
        let series = &QSeries::from_poly(&p, order) * &inverse;
        prop_assert_eq!(coefficient_over_power(&p, k, n), series.coeff(n).clone());
    }

    #[test]
    fn recursion_obeys_closed_forms(g in 1usize..=3, n in 0usize..120) {
        prop_assert_eq!(closed_form_c(g, n).unwrap(), hz_count(g, n));
    }

    #[test]
    fn extraction_obeys_closed_forms(g in 0usize..=2, n in 0usize..150) {
        prop_assert_eq!(closed_form_c2(g, n).unwrap(), c2_count(g, n).unwrap());
    }

    #[test]
    fn counts_are_positive_exactly_in_range(g in 0usize..5, n in 0usize..40) {
        let c = hz_count(g, n);
        prop_assert_eq!(c > BigInt::from(0), 2 * g <= n);
        let c2 = c2_count(g, n).unwrap();
        prop_assert_eq!(c2 > BigInt::from(0), 2 * g < n);
    }

    #[test]
    fn u_counts_are_nonnegative(g in 0usize..4, n in 0usize..40) {
        prop_assert!(u_count(g, n) >= BigInt::from(0));
    }

    #[test]
    fn quarter_value_scales_like_the_numerator(g in 1usize..6, num in 1i64..8) {
        // P_g(x) at x = num/32 is an exact rational with denominator dividing 32^{3g}.
        let x = rational(num, 32);
        let value = p_poly(g).unwrap().evaluate(&x);
        let scaled = value * BigRational::from_integer(BigInt::from(32).pow(3 * g as u32));
        prop_assert!(to_integer(&scaled).is_some());
    }
}

#[test]
fn two_backbone_numerators_have_integer_coefficients() {
    for g in 0..=8 {
        assert!(p2_poly(g).unwrap().is_integral(), "g = {g}");
    }
}
