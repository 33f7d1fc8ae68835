use std::fmt;

use crate::{Error, Result};

/// Partitions of `m` as weakly decreasing part lists, in decreasing
/// lexicographic order: `[m], [m-1, 1], [m-2, 2], [m-2, 1, 1], ...`.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// A Young diagram given by its row lengths, longest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Trailing zero rows are dropped; anything else out of order is rejected.
    pub fn new(rows: &[usize]) -> Result<Self> {
        let mut rows = rows.to_vec();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?}")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Every diagram with `m` squares, in [`partitions`] order.
    pub fn all(m: usize) -> Vec<YoungDiagram> {
        partitions(m)
            .into_iter()
            .map(|rows| YoungDiagram { rows })
            .collect()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column lengths, i.e. the rows of the transposed diagram.
    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.rows.first().copied().unwrap_or(0);
        YoungDiagram {
            rows: (0..width)
                .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
                .collect(),
        }
    }

    /// Squares as 0-based `(row, column)`, row by row.
    pub fn squares(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        self.rows.get(i).is_some_and(|&len| j < len)
    }

    /// Arm plus leg plus one for the square `(i, j)`.
    pub fn hook_length(&self, (i, j): (usize, usize)) -> usize {
        let arm = self.rows[i] - j - 1;
        let leg = self.rows[i + 1..].iter().take_while(|&&r| r > j).count();
        arm + leg + 1
    }

    /// `Some` when the diagram is a `(p, q)`-hook.
    pub fn as_hook(&self) -> Option<HookShape> {
        let (&first, rest) = self.rows.split_first()?;
        rest.iter().all(|&r| r == 1).then(|| HookShape {
            p: rest.len(),
            q: first - 1,
        })
    }

    /// Beta-numbers `rows[i] + (len - 1 - i)`, strictly decreasing.
    fn beta_set(&self) -> Vec<usize> {
        let len = self.rows.len();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r + len - 1 - i)
            .collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> YoungDiagram {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = beta.len();
        let rows: Vec<usize> = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .filter(|&r| r > 0)
            .collect();
        YoungDiagram { rows }
    }

    /// Every rim hook of the given length.
    ///
    /// A rim hook of length `m` corresponds to sliding one beta-number down
    /// by `m` onto a free position; the number of beta-numbers jumped over
    /// is its height minus one.
    pub fn rim_hooks(&self, length: usize) -> Vec<RimHook> {
        if length == 0 {
            return Vec::new();
        }
        let beta = self.beta_set();
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            if b < length || beta.contains(&(b - length)) {
                continue;
            }
            let target = b - length;
            let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            let remaining = Self::from_beta_set(moved);
            let squares: Vec<(usize, usize)> = self
                .squares()
                .filter(|&sq| !remaining.contains(sq))
                .collect();
            out.push(RimHook {
                squares,
                length,
                height: jumped + 1,
                remaining,
            });
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.rows.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// The `(p, q)`-hook: one row of length `q + 1` above `p` rows of length one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookShape {
    pub p: usize,
    pub q: usize,
}

impl HookShape {
    pub fn new(p: usize, q: usize) -> Self {
        HookShape { p, q }
    }

    /// All hooks with `size` squares, `p = 0` first.
    pub fn all(size: usize) -> Vec<HookShape> {
        (0..size)
            .map(|p| HookShape { p, q: size - 1 - p })
            .collect()
    }

    pub fn size(&self) -> usize {
        self.p + self.q + 1
    }

    pub fn diagram(&self) -> YoungDiagram {
        let mut rows = vec![self.q + 1];
        rows.extend(std::iter::repeat_n(1, self.p));
        YoungDiagram { rows }
    }
}

/// A connected border strip whose removal leaves a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    /// Removed squares, 0-based `(row, column)`.
    pub squares: Vec<(usize, usize)>,
    pub length: usize,
    /// Number of rows the strip touches.
    pub height: usize,
    pub remaining: YoungDiagram,
}

impl RimHook {
    /// `(-1)^(height - 1)`.
    pub fn sign(&self) -> i32 {
        if self.height % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows).unwrap()
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            partitions(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn validation() {
        assert!(YoungDiagram::new(&[1, 2]).is_err());
        assert!(YoungDiagram::new(&[2, 0, 1]).is_err());
        assert_eq!(yd(&[3, 1, 0]).rows(), &[3, 1]);
    }

    #[test]
    fn hooks_and_conjugates() {
        assert_eq!(yd(&[3, 1]).as_hook(), Some(HookShape::new(1, 2)));
        assert_eq!(yd(&[2, 2]).as_hook(), None);
        assert_eq!(HookShape::new(2, 1).diagram(), yd(&[2, 1, 1]));
        assert_eq!(yd(&[3, 1]).conjugate(), yd(&[2, 1, 1]));
        assert_eq!(yd(&[3, 1]).hook_length((0, 0)), 4);
        assert_eq!(yd(&[2, 2]).hook_length((0, 0)), 3);
    }

    #[test]
    fn rim_hooks_of_a_square() {
        let hooks = yd(&[2, 2]).rim_hooks(2);
        let remaining: BTreeSet<_> = hooks.iter().map(|h| h.remaining.clone()).collect();
        assert_eq!(remaining, BTreeSet::from([yd(&[1, 1]), yd(&[2])]));
        for h in &hooks {
            assert_eq!(h.squares.len(), 2);
        }
        let three = yd(&[2, 2]).rim_hooks(3);
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].remaining, yd(&[1]));
        assert_eq!(three[0].height, 2);
        assert_eq!(three[0].sign(), -1);
        let whole = yd(&[2, 2]).rim_hooks(4);
        assert!(whole.is_empty());
    }

    fn is_border_strip(h: &RimHook) -> bool {
        let set: BTreeSet<_> = h.squares.iter().copied().collect();
        let no_square_block = set.iter().all(|&(i, j)| {
            !(set.contains(&(i + 1, j))
                && set.contains(&(i, j + 1))
                && set.contains(&(i + 1, j + 1)))
        });
        // connectivity by flood fill through edge-adjacent squares
        let mut seen = BTreeSet::new();
        let mut stack = vec![*set.iter().next().unwrap()];
        while let Some((i, j)) = stack.pop() {
            if !seen.insert((i, j)) {
                continue;
            }
            let mut nbrs = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if j > 0 {
                nbrs.push((i, j - 1));
            }
            stack.extend(nbrs.into_iter().filter(|sq| set.contains(sq)));
        }
        let rows: BTreeSet<_> = set.iter().map(|&(i, _)| i).collect();
        no_square_block && seen.len() == set.len() && rows.len() == h.height
    }

    #[test]
    fn rim_hooks_are_border_strips() {
        for m in 1..=9 {
            for y in YoungDiagram::all(m) {
                for len in 1..=m {
                    for h in y.rim_hooks(len) {
                        assert_eq!(h.squares.len(), len);
                        assert_eq!(h.remaining.size(), m - len);
                        assert!(is_border_strip(&h), "{y} minus {:?}", h.squares);
                    }
                }
            }
        }
    }
}
