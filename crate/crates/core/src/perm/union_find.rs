use super::Permutation;
use crate::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
            classes: len,
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns `true` if `i` and `j` were in different classes.
    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (mut a, mut b) = (self.find(i), self.find(j));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.classes -= 1;
        true
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }
}

/// Whether the orbits of `gens` on `{1..size}` join into a single class.
///
/// Only orbit connectivity is computed; the generated group is never built.
/// An empty point set counts as transitive.
pub fn is_transitive(gens: &[&Permutation], size: usize) -> Result<bool> {
    let mut uf = UnionFind::new(size);
    for g in gens {
        if g.size() != size {
            return Err(Error::SizeMismatch {
                left: g.size(),
                right: size,
            });
        }
        for (i, &j) in g.zero_based().iter().enumerate() {
            uf.union(i, j);
            if uf.class_count() <= 1 {
                return Ok(true);
            }
        }
    }
    Ok(uf.class_count() <= 1)
}
