//! Boolean event algebra over a finite set of atoms, possible worlds, and
//! the constituents generated by a family of conditional quantities.

mod constituents;
mod formula;
mod parse;
mod universe;

pub use constituents::{constituent_table, enumerate_constituents, Constituent, ConstituentTable};
pub use formula::{Assignment, Formula};
pub use parse::{parse_conditional, parse_formula};
pub use universe::{Constraint, Universe, WorldSet};

/// Worlds are enumerated exhaustively, so the atom count is capped.
pub const MAX_ATOMS: usize = 16;

/// Evaluates `f` under an explicit truth assignment.
pub fn eval_formula(f: &Formula, world: &Assignment) -> crate::error::Result<bool> {
    f.eval(world)
}

/// `f` holds in at least one possible world of `u`.
pub fn is_satisfiable(f: &Formula, u: &Universe) -> crate::error::Result<bool> {
    u.is_satisfiable(f)
}
