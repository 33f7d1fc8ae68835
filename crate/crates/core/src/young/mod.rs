//! Symmetric-group characters: Young diagrams, rim hooks, the
//! Murnaghan–Nakayama rule, Schur values at `(1, ..., 1)`, and the
//! character-sum evaluation of the two-backbone polynomial `U(n,N)`.

mod character;
mod charsum;
mod diagram;
mod schur;

pub use character::{
    hook_char_identity, hook_char_matching, mn_character, mn_character_in_order, tau_sum,
    tau_sum_expected,
};
pub use charsum::{
    charsum_u, charsum_u_hooks, charsum_u_orthogonality, kronecker_count_bruteforce,
    kronecker_count_characters, orthogonality_terms, ORTHOGONALITY_LIMIT,
};
pub use diagram::{partitions, HookShape, RimHook, YoungDiagram};
pub use schur::{
    hook_schur_closed_form, schur_all_ones, schur_all_ones_poly, schur_via_power_sums,
};
