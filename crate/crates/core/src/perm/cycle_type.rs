use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::exact::factorial;

/// Conjugacy class of a permutation, `[1^{m_1} 2^{m_2} ...]`, stored as a
/// map from cycle length to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn from_parts(lengths: &[usize]) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &k in lengths.iter().filter(|&&k| k > 0) {
            *multiplicities.entry(k).or_insert(0) += 1;
        }
        CycleType { multiplicities }
    }

    /// `[1^size]`.
    pub fn identity(size: usize) -> Self {
        Self::from_parts(&vec![1; size])
    }

    /// `[2^n]`, the class of fixed-point-free involutions.
    pub fn matching(n: usize) -> Self {
        Self::from_parts(&vec![2; n])
    }

    /// All cycle types of `S_size`, in the order of [`crate::young::partitions`].
    pub fn all(size: usize) -> Vec<CycleType> {
        crate::young::partitions(size)
            .iter()
            .map(|p| Self::from_parts(p))
            .collect()
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, length: usize) -> usize {
        self.multiplicities.get(&length).copied().unwrap_or(0)
    }

    /// Cycle lengths, largest first.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (&k, &m) in self.multiplicities.iter().rev() {
            out.extend(std::iter::repeat_n(k, m));
        }
        out
    }

    /// `sum k * m_k`, the number of points permuted.
    pub fn size(&self) -> usize {
        self.multiplicities.iter().map(|(k, m)| k * m).sum()
    }

    pub fn cycle_count(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// `prod_k k^{m_k} m_k!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|(&k, &m)| BigInt::from(k).pow(m as u32) * factorial(m as u64))
            .product()
    }

    /// Number of permutations in the class: `size! / prod_k (k^{m_k} m_k!)`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size() as u64) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(k, m)| {
                if *m == 1 {
                    k.to_string()
                } else {
                    format!("{k}^{m}")
                }
            })
            .collect();
        write!(f, "[{}]", body.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::double_factorial_odd;
    use crate::perm::Permutation;
    use std::collections::HashMap;

    /// Every permutation of `{0..size}` in lexicographic order.
    fn all_permutations(size: usize) -> Vec<Vec<usize>> {
        let mut current: Vec<usize> = (0..size).collect();
        let mut out = vec![current.clone()];
        loop {
            let Some(i) = (1..size).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..size)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(current.clone());
        }
    }

    #[test]
    fn class_sizes_match_enumeration_of_s4() {
        let mut tally: HashMap<CycleType, u64> = HashMap::new();
        for images in all_permutations(4) {
            let p = Permutation::from_zero_based_unchecked(images);
            *tally.entry(p.cycle_type()).or_default() += 1;
        }
        assert_eq!(tally.len(), 5);
        for (t, count) in tally {
            assert_eq!(t.class_size(), BigInt::from(count), "class {t}");
        }
        assert_eq!(CycleType::from_parts(&[2, 2]).class_size(), BigInt::from(3));
    }

    #[test]
    fn special_classes() {
        assert_eq!(CycleType::identity(6).class_size(), BigInt::from(1));
        for n in 0..8 {
            assert_eq!(
                CycleType::matching(n).class_size(),
                double_factorial_odd(n as u64)
            );
        }
        assert_eq!(CycleType::from_parts(&[3, 5]).to_string(), "[3 5]");
        assert_eq!(CycleType::matching(3).to_string(), "[2^3]");
        assert_eq!(CycleType::from_parts(&[1, 3, 1]).parts(), vec![3, 1, 1]);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for size in 0..=8 {
            let total: BigInt = CycleType::all(size).iter().map(CycleType::class_size).sum();
            assert_eq!(total, factorial(size as u64), "S_{size}");
        }
    }
}
