use std::fmt;

use super::CycleType;
use crate::{Error, Result};

/// A bijection of `{1..size}`.
///
/// Points are 1-based in every public method; storage is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    /// `images[i - 1]` is the image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        let mut zero_based = Vec::with_capacity(size);
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > size || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "point {} maps to {img}",
                    i + 1
                )));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Product of disjoint cycles given in 1-based cycle notation.
    pub fn from_cycles(size: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=size).collect();
        let mut touched = vec![false; size];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > size || b == 0 || b > size || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b;
            }
        }
        Self::from_images(&images)
    }

    /// The cycle `(1, 2, ..., size)`.
    pub fn long_cycle(size: usize) -> Self {
        Permutation {
            images: (0..size).map(|i| (i + 1) % size).collect(),
        }
    }

    /// `tau_c = (1, ..., c)(c+1, ..., 2n)`: the two backbones with the split
    /// after half-edge `c`.
    pub fn two_backbone(split: usize, chords: usize) -> Self {
        let size = 2 * chords;
        assert!(split <= size, "split point {split} outside 0..={size}");
        let images = (0..size)
            .map(|i| {
                if i < split {
                    (i + 1) % split
                } else {
                    split + (i + 1 - split) % (size - split)
                }
            })
            .collect();
        Permutation { images }
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub(crate) fn zero_based_mut(&mut self) -> &mut [usize] {
        &mut self.images
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Right-to-left composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_size(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `other ∘ self ∘ other^{-1}`.
    pub fn conjugate_by(&self, other: &Permutation) -> Result<Permutation> {
        other.compose(self)?.compose(&other.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Orbits in 1-based cycle notation, each starting at its least point,
    /// ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        cycle_count_of(self.size(), |i| self.images[i])
    }

    pub fn cycle_type(&self) -> CycleType {
        let lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_parts(&lengths)
    }

    /// Number of cycles of `self ∘ other` without materializing the product.
    pub fn product_cycle_count(&self, other: &Permutation) -> Result<usize> {
        self.check_size(other)?;
        Ok(cycle_count_of(self.size(), |i| {
            self.images[other.images[i]]
        }))
    }

    fn check_size(&self, other: &Permutation) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(())
    }
}

fn cycle_count_of(size: usize, next: impl Fn(usize) -> usize) -> usize {
    if size <= 128 {
        let mut seen: u128 = 0;
        let mut count = 0;
        for start in 0..size {
            if seen & (1 << start) != 0 {
                continue;
            }
            count += 1;
            let mut i = start;
            while seen & (1 << i) == 0 {
                seen |= 1 << i;
                i = next(i);
            }
        }
        count
    } else {
        let mut seen = vec![false; size];
        let mut count = 0;
        for start in 0..size {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = next(i);
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}
