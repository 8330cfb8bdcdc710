//! Exact coherence checking for probability assessments on conditional
//! events, with compound conditionals, extension intervals and a CLI.
//!
//! All arithmetic is over arbitrary-precision rationals; an LP verdict comes
//! with a certificate that is checked before it is returned.
//!
//! ## Modules
//!
//! - [`event`]: atoms, formulas, logical constraints, constituents
//! - [`trivalent`]: conditional events and the four three-valued
//!   conjunctions and disjunctions
//! - [`lp`]: exact simplex and convex hull membership
//! - [`coherence`]: coherence checks, Dutch books, Brier dominators,
//!   extension intervals
//! - [`compound`]: conjunction and disjunction as conditional random
//!   quantities, n-ary bounds, p-entailment
//! - [`tables`]: interval and property tables for all operator pairs
//! - [`cli`]: the `cohkit` command line
//!
//! ## Examples
//!
//! One per capability, under `crates/core/examples/`:
//!
//! ```text
//! coherence_check        verdicts and hull weights on an inclusion structure
//! dutch_book             stakes with a sure gain
//! brier_dominance        an assessment with lower Brier loss everywhere
//! trivalent_properties   truth tables and logical properties
//! extension_intervals    coherent range of a further event
//! gs_conjunction         conjunction as a random quantity, interval, product rule
//! frechet_bounds         n-ary bounds and their LP cross-check
//! p_entailment           conclusions forced by unit premises
//! exact_lp               the simplex solver and its certificates
//! tables                 interval table and property matrix
//! ```
//!
//! ```bash
//! cargo run --example dutch_book
//! ```

pub mod cli;
pub mod coherence;
pub mod compound;
pub mod error;
pub mod event;
pub mod lp;
pub mod rational;
pub mod tables;
pub mod trivalent;

pub use error::{Error, Result};
pub use rational::Rational;
