use super::Permutation;
use crate::{Error, Result};

/// A fixed-point-free involution: the chords of a diagram as a permutation of
/// half-edge labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching(Permutation);

impl Matching {
    pub fn new(p: Permutation) -> Result<Self> {
        let images = p.zero_based();
        for (i, &j) in images.iter().enumerate() {
            if i == j || images[j] != i {
                return Err(Error::InvalidPermutation(format!(
                    "{p} is not a fixed-point-free involution"
                )));
            }
        }
        Ok(Matching(p))
    }

    /// Builds a matching from 1-based chord endpoints.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let cycles: Vec<[usize; 2]> = pairs.iter().map(|&(a, b)| [a, b]).collect();
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::new(Permutation::from_cycles(size, &refs)?)
    }

    pub fn chords(&self) -> usize {
        self.0.size() / 2
    }

    /// Chords as 1-based `(left, right)` endpoints, ordered by left endpoint.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0
            .zero_based()
            .iter()
            .enumerate()
            .filter(|(i, j)| i < j)
            .map(|(i, &j)| (i + 1, j + 1))
            .collect()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Streams every perfect matching of `{1..2n}` exactly once.
///
/// The order is deterministic: the smallest unmatched point is paired with
/// each larger unmatched point in increasing order, recursively. Memory is
/// `O(n^2)` regardless of how many matchings are produced.
#[derive(Clone, Debug)]
pub struct Matchings {
    n: usize,
    // choice[l]: partner index of the smallest point still free at level l
    choice: Vec<usize>,
    // free[l]: points still unmatched before level l pairs its smallest one
    free: Vec<Vec<usize>>,
    current: Matching,
    first_level: usize,
    state: State,
}

impl Matchings {
    pub fn new(n: usize) -> Self {
        let mut free = vec![Vec::new(); n + 1];
        free[0] = (0..2 * n).collect();
        Matchings {
            n,
            choice: vec![0; n],
            free,
            current: Matching(Permutation::from_zero_based_unchecked(vec![0; 2 * n])),
            first_level: 0,
            state: State::Fresh,
        }
    }

    /// Only the matchings in which point 1 is paired with point `partner`
    /// (1-based, `2 <= partner <= 2n`). Streams for distinct partners
    /// partition the full stream, which is how enumeration is split across
    /// threads.
    pub fn with_first_partner(n: usize, partner: usize) -> Self {
        assert!(n >= 1 && (2..=2 * n).contains(&partner));
        let mut stream = Self::new(n);
        stream.choice[0] = partner - 2;
        stream.first_level = 1;
        stream
    }

    /// Advances the stream and borrows the next matching.
    pub fn advance(&mut self) -> Option<&Matching> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.fill_from(0);
            }
            State::Running => {
                let level = (self.first_level..self.n)
                    .rev()
                    .find(|&l| self.choice[l] + 2 < 2 * (self.n - l));
                let Some(level) = level else {
                    self.state = State::Done;
                    return None;
                };
                self.choice[level] += 1;
                self.choice[level + 1..].fill(0);
                self.fill_from(level);
            }
        }
        Some(&self.current)
    }

    fn fill_from(&mut self, level: usize) {
        let images = self.current.0.zero_based_mut();
        for l in level..self.n {
            let (head, tail) = self.free.split_at_mut(l + 1);
            let here = &head[l];
            let partner_idx = 1 + self.choice[l];
            let (a, b) = (here[0], here[partner_idx]);
            images[a] = b;
            images[b] = a;
            let next = &mut tail[0];
            next.clear();
            next.extend(
                here.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != 0 && k != partner_idx)
                    .map(|(_, &p)| p),
            );
        }
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.advance().cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::double_factorial_odd;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    #[test]
    fn one_chord() {
        let all: Vec<_> = Matchings::new(1).map(|m| m.pairs()).collect();
        assert_eq!(all, vec![vec![(1, 2)]]);
    }

    #[test]
    fn two_chords_in_order() {
        let all: Vec<_> = Matchings::new(2).map(|m| m.pairs()).collect();
        assert_eq!(
            all,
            vec![
                vec![(1, 2), (3, 4)],
                vec![(1, 3), (2, 4)],
                vec![(1, 4), (2, 3)],
            ]
        );
    }

    #[test]
    fn empty_diagram_is_one_matching() {
        assert_eq!(Matchings::new(0).count(), 1);
    }

    #[test]
    fn counts_are_double_factorials() {
        assert_eq!(Matchings::new(5).count(), 945);
        for n in 0..=7 {
            let count = Matchings::new(n).count();
            assert_eq!(
                BigInt::from(count),
                double_factorial_odd(n as u64),
                "n = {n}"
            );
        }
    }

    #[test]
    fn matchings_are_distinct_involutions() {
        let all: Vec<_> = Matchings::new(5).collect();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for m in &all {
            assert!(Matching::new(m.as_permutation().clone()).is_ok());
        }
    }

    #[test]
    fn partner_streams_partition_the_stream() {
        let n = 4;
        let full: Vec<_> = Matchings::new(n).collect();
        let split: Vec<_> = (2..=2 * n)
            .flat_map(|p| Matchings::with_first_partner(n, p))
            .collect();
        assert_eq!(full, split);
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::from_pairs(4, &[(1, 3), (2, 4)]).is_ok());
        assert!(Matching::new(Permutation::identity(2)).is_err());
        let three_cycle = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert!(Matching::new(three_cycle).is_err());
    }
}
