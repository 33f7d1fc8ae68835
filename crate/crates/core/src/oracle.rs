//! Brute-force ground truth.
//!
//! A diagram with `n` chords is a pair `(tau, iota)`: `tau` walks the
//! half-edges `1..2n` along the backbones (one cycle per backbone) and
//! `iota` is the perfect matching given by the chords. The boundary
//! components of the fattened diagram are the cycles of `tau ∘ iota`, so with
//! `r` cycles the genus is `(n + 1 - r) / 2` on one backbone and
//! `(n - r) / 2` for a connected diagram on two.
//!
//! Labeled configurations are counted as they are: half-edges labeled left
//! to right, the two-backbone split after label `c`, no quotient by
//! isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::exact::NPolynomial;
use crate::perm::{is_transitive, Matchings, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backbones {
    One,
    Two,
}

impl Backbones {
    pub fn count(self) -> usize {
        match self {
            Backbones::One => 1,
            Backbones::Two => 2,
        }
    }

    /// Genera that can occur with `n` chords: `2g <= n` on one backbone,
    /// `2g + 1 <= n` on two.
    pub fn genus_range(self, n: usize) -> std::ops::Range<usize> {
        match self {
            Backbones::One => 0..n / 2 + 1,
            Backbones::Two if n == 0 => 0..0,
            Backbones::Two => 0..(n - 1) / 2 + 1,
        }
    }
}

impl TryFrom<usize> for Backbones {
    type Error = usize;

    fn try_from(b: usize) -> std::result::Result<Self, usize> {
        match b {
            1 => Ok(Backbones::One),
            2 => Ok(Backbones::Two),
            other => Err(other),
        }
    }
}

/// Exact diagram counts for fixed backbone and chord numbers, keyed by genus.
///
/// Every genus in [`Backbones::genus_range`] has an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTable {
    pub backbones: Backbones,
    pub n: usize,
    counts: BTreeMap<usize, BigInt>,
}

impl GenusTable {
    pub fn from_fn(backbones: Backbones, n: usize, mut count: impl FnMut(usize) -> BigInt) -> Self {
        GenusTable {
            backbones,
            n,
            counts: backbones.genus_range(n).map(|g| (g, count(g))).collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<usize, BigInt> {
        &self.counts
    }

    pub fn get(&self, genus: usize) -> BigInt {
        self.counts
            .get(&genus)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

impl fmt::Display for GenusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .counts
            .iter()
            .map(|(g, c)| format!("g{g}: {c}"))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Size limits for brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest chord count for genus tables.
    pub limit: usize,
    /// Largest chord count for the `N`-polynomials `P`, `U`, `V`, `Q`.
    pub symbolic_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: 8,
            symbolic_limit: 6,
        }
    }
}

impl OracleConfig {
    /// A config that allows everything up to `n`.
    pub fn up_to(n: usize) -> Self {
        OracleConfig {
            limit: n,
            symbolic_limit: n,
        }
    }

    fn check(limit: usize, n: usize) -> Result<()> {
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        Ok(())
    }
}

/// Histogram of `tau ∘ iota` cycle counts for one backbone: entry `r` counts
/// the matchings with `r` boundary cycles.
pub fn one_backbone_histogram(n: usize) -> Vec<u64> {
    if n == 0 {
        // the bare backbone is a disk: one boundary component
        return vec![0, 1];
    }
    let tau = Permutation::long_cycle(2 * n);
    let partial: Vec<Vec<u64>> = (2..=2 * n)
        .into_par_iter()
        .map(|partner| {
            let mut hist = vec![0u64; n + 2];
            let mut stream = Matchings::with_first_partner(n, partner);
            while let Some(iota) = stream.advance() {
                let r = tau
                    .product_cycle_count(iota.as_permutation())
                    .expect("sizes agree");
                hist[r] += 1;
            }
            hist
        })
        .collect();
    sum_histograms(partial, n + 2)
}

/// Boundary-cycle histograms over all two-backbone pairs `(c, iota)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBackboneCensus {
    pub n: usize,
    /// `connected[r]`: connected pairs with `r` boundary cycles.
    pub connected: Vec<u64>,
    /// `all[r]`: all pairs, connected or not, with `r` boundary cycles.
    pub all: Vec<u64>,
}

impl TwoBackboneCensus {
    pub fn run(n: usize) -> Result<Self> {
        let len = n + 3;
        let per_split: Vec<(Vec<u64>, Vec<u64>)> = (1..2 * n)
            .into_par_iter()
            .map(|split| {
                let tau = Permutation::two_backbone(split, n);
                let mut connected = vec![0u64; len];
                let mut all = vec![0u64; len];
                let mut stream = Matchings::new(n);
                while let Some(iota) = stream.advance() {
                    let iota = iota.as_permutation();
                    let r = tau.product_cycle_count(iota)?;
                    all[r] += 1;
                    if is_transitive(&[&tau, iota], 2 * n)? {
                        if (n + r) % 2 == 1 || r > n {
                            return Err(Error::ParityViolation {
                                chords: n,
                                split,
                                cycles: r,
                            });
                        }
                        connected[r] += 1;
                    }
                }
                Ok((connected, all))
            })
            .collect::<Result<_>>()?;
        let (connected, all): (Vec<_>, Vec<_>) = per_split.into_iter().unzip();
        Ok(TwoBackboneCensus {
            n,
            connected: sum_histograms(connected, len),
            all: sum_histograms(all, len),
        })
    }

    pub fn genus_table(&self) -> GenusTable {
        GenusTable::from_fn(Backbones::Two, self.n, |g| {
            BigInt::from(self.connected[self.n - 2 * g])
        })
    }

    pub fn total_pairs(&self) -> u64 {
        self.all.iter().sum()
    }
}

fn sum_histograms(parts: Vec<Vec<u64>>, len: usize) -> Vec<u64> {
    parts.into_iter().fold(vec![0; len], |mut acc, h| {
        for (a, b) in acc.iter_mut().zip(h) {
            *a += b;
        }
        acc
    })
}

/// Counts `c_g(n)` by enumerating all `(2n-1)!!` matchings.
pub fn oracle_one_backbone(n: usize, config: &OracleConfig) -> Result<GenusTable> {
    OracleConfig::check(config.limit, n)?;
    let hist = one_backbone_histogram(n);
    for (r, &count) in hist.iter().enumerate() {
        if count > 0 && (n + 1 < r || (n + 1 - r) % 2 == 1) {
            return Err(Error::ParityViolation {
                chords: n,
                split: 0,
                cycles: r,
            });
        }
    }
    Ok(GenusTable::from_fn(Backbones::One, n, |g| {
        BigInt::from(hist[n + 1 - 2 * g])
    }))
}

/// Counts `c_g^[2](n)` over all split points and matchings, keeping only
/// connected diagrams.
pub fn oracle_two_backbone(n: usize, config: &OracleConfig) -> Result<GenusTable> {
    OracleConfig::check(config.limit, n)?;
    Ok(TwoBackboneCensus::run(n)?.genus_table())
}

/// `P(n,N) = sum over matchings of N^{cycles(tau ∘ iota)}`.
pub fn oracle_p(n: usize, config: &OracleConfig) -> Result<NPolynomial> {
    OracleConfig::check(config.symbolic_limit, n)?;
    Ok(NPolynomial::from_histogram(&one_backbone_histogram(n)))
}

/// `U(n,N)`: like [`oracle_q`] but over every pair, connected or not.
pub fn oracle_u(n: usize, config: &OracleConfig) -> Result<NPolynomial> {
    OracleConfig::check(config.symbolic_limit, n)?;
    Ok(NPolynomial::from_histogram(&TwoBackboneCensus::run(n)?.all))
}

/// `Q(n,N) = sum_g c_g^[2](n) N^{n-2g}` from connected pairs.
pub fn oracle_q(n: usize, config: &OracleConfig) -> Result<NPolynomial> {
    OracleConfig::check(config.symbolic_limit, n)?;
    Ok(NPolynomial::from_histogram(
        &TwoBackboneCensus::run(n)?.connected,
    ))
}

/// `V(n,N) = sum_{d=1}^{n-1} P(d,N) P(n-d,N)`, the disconnected part of `U`.
pub fn oracle_v(n: usize, config: &OracleConfig) -> Result<NPolynomial> {
    OracleConfig::check(config.symbolic_limit, n)?;
    let p: Vec<NPolynomial> = (0..n).map(|d| oracle_p(d, config)).collect::<Result<_>>()?;
    Ok((1..n).fold(NPolynomial::zero(), |acc, d| &acc + &(&p[d] * &p[n - d])))
}
