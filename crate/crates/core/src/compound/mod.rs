//! Conjunction and disjunction of conditional events as conditional random
//! quantities.
//!
//! `(A|H) ∧ (B|K)` is 1 where both are true, 0 where either is false, the
//! prevision of the other operand where exactly one is void, and its own
//! prevision where both are void. Values are kept symbolic ([`Affine`]) so
//! that identities can be checked world by world before any number is
//! chosen; numeric previsions are bound through [`Env`] and coherence is
//! decided by the hull machinery of [`crate::coherence`].

mod affine;
mod crq;
mod entail;
mod frechet;
mod gs;
mod identities;
#[cfg(test)]
mod tests;

pub use affine::{Affine, Env};
pub use crq::{prevision_from_distribution, Crq, Distribution};
pub use entail::{
    conjunction_absorbs, conjunction_below, p_consistent, p_entails, quasi_conjunction_entails, Entailment,
};
pub use frechet::{chain_rule_prevision, frechet_bounds, frechet_bounds_or, inclusion_exclusion};
pub use gs::{
    gs_and, gs_and_crq, gs_and_n, gs_and_n_crq, gs_or, gs_or_crq, gs_or_n, gs_or_n_crq, joint_symbol, Compound,
};
pub use identities::{
    compare, compound_identity_check, forced_value, gs_inclusion_directions, gs_monotone, sign_off_void, Combination,
    CompoundIdentity, IdentityCheck,
};
