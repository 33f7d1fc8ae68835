use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::YoungDiagram;
use crate::exact::binomial;
use crate::perm::CycleType;
use crate::{Error, Result};

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character `chi^shape` on the class `class`, by the
/// Murnaghan–Nakayama rule.
///
/// Cycles are removed largest first; intermediate values are cached on
/// `(shape, remaining cycle lengths)` in a process-wide table that any
/// number of threads may read concurrently.
pub fn mn_character(shape: &YoungDiagram, class: &CycleType) -> Result<BigInt> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: class.size(),
        });
    }
    Ok(memoized(shape, &class.parts()))
}

fn memoized(shape: &YoungDiagram, cycles: &[usize]) -> BigInt {
    let Some((&first, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (shape.rows().to_vec(), cycles.to_vec());
    if let Some(v) = memo().read().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let value = shape
        .rim_hooks(first)
        .iter()
        .fold(BigInt::zero(), |acc, hook| {
            let sub = memoized(&hook.remaining, rest);
            if hook.sign() > 0 {
                acc + sub
            } else {
                acc - sub
            }
        });
    memo()
        .write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}

/// Murnaghan–Nakayama with cycles removed in exactly the given order and no
/// caching. The result must not depend on the order.
pub fn mn_character_in_order(shape: &YoungDiagram, cycles: &[usize]) -> Result<BigInt> {
    let total: usize = cycles.iter().sum();
    if shape.size() != total {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: total,
        });
    }
    fn go(shape: &YoungDiagram, cycles: &[usize]) -> BigInt {
        let Some((&first, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        shape
            .rim_hooks(first)
            .iter()
            .fold(BigInt::zero(), |acc, hook| {
                let sub = go(&hook.remaining, rest);
                if hook.sign() > 0 {
                    acc + sub
                } else {
                    acc - sub
                }
            })
    }
    Ok(go(shape, cycles))
}

/// `chi^{p,q}([1^{2n}]) = binom(2n-1, q)`, the dimension of the hook.
pub fn hook_char_identity(p: usize, q: usize) -> BigInt {
    binomial((p + q) as u64, q as u64)
}

/// `chi^{p,q}([2^n])`: `(-1)^{p/2} binom(n-1, p/2)` for even `p` and
/// `(-1)^{(p+1)/2} binom(n-1, (p-1)/2)` for odd `p`.
pub fn hook_char_matching(p: usize, q: usize, n: usize) -> Result<BigInt> {
    if p + q + 1 != 2 * n {
        return Err(Error::SizeMismatch {
            left: p + q + 1,
            right: 2 * n,
        });
    }
    let (exp, k) = if p.is_multiple_of(2) {
        (p / 2, p / 2)
    } else {
        (p.div_ceil(2), p / 2)
    };
    let magnitude = binomial(n as u64 - 1, k as u64);
    Ok(if exp % 2 == 0 { magnitude } else { -magnitude })
}

/// `sum_{c=1}^{2n-1} chi^shape(tau_c)` with `tau_c` of cycle type `[c, 2n-c]`.
pub fn tau_sum(shape: &YoungDiagram, n: usize) -> Result<BigInt> {
    (1..2 * n).try_fold(BigInt::zero(), |acc, c| {
        Ok(acc + mn_character(shape, &CycleType::from_parts(&[c, 2 * n - c]))?)
    })
}

/// `(-1)^p (q - p)` on a `(p, q)`-hook, zero on every other shape.
pub fn tau_sum_expected(shape: &YoungDiagram) -> BigInt {
    match shape.as_hook() {
        Some(h) => {
            let v = BigInt::from(h.q) - BigInt::from(h.p);
            if h.p % 2 == 0 {
                v
            } else {
                -v
            }
        }
        None => BigInt::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use crate::young::HookShape;
    use proptest::prelude::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_parts(parts)
    }

    #[test]
    fn trivial_representation() {
        for t in CycleType::all(6) {
            assert_eq!(mn_character(&yd(&[6]), &t).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn hook_values() {
        let y12 = HookShape::new(1, 2).diagram();
        assert_eq!(
            mn_character(&y12, &ct(&[1, 1, 1, 1])).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(mn_character(&y12, &ct(&[2, 2])).unwrap(), BigInt::from(-1));
        assert_eq!(hook_char_identity(0, 5), BigInt::one());
        assert_eq!(hook_char_identity(1, 2), BigInt::from(3));
        assert_eq!(hook_char_matching(2, 1, 2).unwrap(), BigInt::from(-1));
        assert_eq!(
            mn_character(&HookShape::new(2, 1).diagram(), &ct(&[2, 2])).unwrap(),
            BigInt::from(-1)
        );
        assert!(hook_char_matching(2, 2, 2).is_err());
    }

    #[test]
    fn size_mismatch() {
        assert!(mn_character(&yd(&[2, 1]), &ct(&[2, 2])).is_err());
        assert!(mn_character_in_order(&yd(&[2, 1]), &[2]).is_err());
    }

    #[test]
    fn hook_closed_forms_match_the_rule() {
        for n in 1..=6 {
            for h in HookShape::all(2 * n) {
                let y = h.diagram();
                assert_eq!(
                    mn_character(&y, &CycleType::identity(2 * n)).unwrap(),
                    hook_char_identity(h.p, h.q)
                );
                assert_eq!(
                    mn_character(&y, &CycleType::matching(n)).unwrap(),
                    hook_char_matching(h.p, h.q, n).unwrap(),
                    "hook {h:?}"
                );
            }
        }
    }

    #[test]
    fn tau_sums() {
        assert_eq!(
            tau_sum(&HookShape::new(1, 2).diagram(), 2).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(tau_sum(&yd(&[2, 2]), 2).unwrap(), BigInt::zero());
        for n in 1..=5 {
            assert_eq!(tau_sum(&yd(&[2 * n]), n).unwrap(), BigInt::from(2 * n - 1));
            for y in YoungDiagram::all(2 * n) {
                assert_eq!(tau_sum(&y, n).unwrap(), tau_sum_expected(&y), "{y}");
            }
        }
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        for m in 1..=8 {
            let mut total = BigInt::zero();
            for y in YoungDiagram::all(m) {
                let dim = mn_character(&y, &CycleType::identity(m)).unwrap();
                assert!(dim > BigInt::zero());
                total += &dim * &dim;
            }
            assert_eq!(total, factorial(m as u64), "S_{m}");
        }
    }

    #[test]
    fn second_orthogonality_on_all_class_pairs() {
        for m in 1..=8 {
            let shapes = YoungDiagram::all(m);
            let classes = CycleType::all(m);
            for a in &classes {
                for b in &classes {
                    let sum: BigInt = shapes
                        .iter()
                        .map(|y| mn_character(y, a).unwrap() * mn_character(y, b).unwrap())
                        .sum();
                    let expected = if a == b {
                        factorial(m as u64) / a.class_size()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(sum, expected, "{a} vs {b}");
                }
            }
        }
    }

    fn shape_and_cycles() -> impl Strategy<Value = (YoungDiagram, Vec<usize>)> {
        (1usize..=9).prop_flat_map(|m| {
            let shapes = YoungDiagram::all(m);
            let classes = crate::young::partitions(m);
            (prop::sample::select(shapes), prop::sample::select(classes))
                .prop_flat_map(|(y, c)| (Just(y), Just(c).prop_shuffle()))
        })
    }

    proptest! {
        #[test]
        fn removal_order_does_not_matter((y, cycles) in shape_and_cycles()) {
            let memoized = mn_character(&y, &CycleType::from_parts(&cycles)).unwrap();
            prop_assert_eq!(mn_character_in_order(&y, &cycles).unwrap(), memoized);
        }
    }
}
