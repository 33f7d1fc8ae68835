//! Exact enumeration of linear chord diagrams on one and two backbones,
//! stratified by the genus of the associated fatgraph.
//!
//! Three independent routes produce the same numbers:
//!
//! * [`oracle`] enumerates every labeled diagram as a pair of permutations
//!   and reads the genus off the cycle count of their product;
//! * [`one_backbone`] and [`two_backbone`] run the Harer–Zagier recursion,
//!   the ODE/partial-fraction pipeline for `P_g(z)`, and the rational
//!   generating functions `C_g^[2](z) = P_g^[2](z) / (1-4z)^(3g+2)`;
//! * [`young`] evaluates the same polynomials through symmetric-group
//!   characters (Murnaghan–Nakayama) and Schur values.
//!
//! [`verify`] wires the three together into named check suites.

pub mod error;
pub mod exact;
pub mod one_backbone;
pub mod oracle;
pub mod perm;
pub mod two_backbone;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, NPolynomial, QPolynomial, QSeries};
pub use oracle::{Backbones, GenusTable, OracleConfig};
pub use perm::{CycleType, Matching, Permutation};
pub use young::{HookShape, RimHook, YoungDiagram};
