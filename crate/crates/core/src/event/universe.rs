use fixedbitset::FixedBitSet;

use super::formula::{Assignment, Formula};
use super::parse::parse_formula;
use super::MAX_ATOMS;
use crate::error::{Error, Result};

/// Set of possible worlds, indexed by position in [`Universe::worlds`].
pub type WorldSet = FixedBitSet;

/// Formula asserted to have a fixed truth value in every possible world.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub formula: Formula,
    pub value: bool,
}

/// Finite set of atoms together with the worlds left possible by the
/// constraints. A world is a bitmask: bit `i` is the value of atom `i`.
#[derive(Clone, Debug)]
pub struct Universe {
    atoms: Vec<String>,
    constraints: Vec<Constraint>,
    worlds: Vec<u32>,
}

impl Universe {
    /// Free universe over `atoms`: all `2^n` worlds are possible.
    pub fn new<S: AsRef<str>>(atoms: &[S]) -> Result<Self> {
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atoms.len()));
        }
        let mut names: Vec<String> = Vec::with_capacity(atoms.len());
        for a in atoms {
            let a = a.as_ref();
            let valid = a.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && !matches!(a, "TRUE" | "FALSE" | "given");
            if !valid {
                return Err(Error::Input(format!("invalid atom name `{a}`")));
            }
            if names.iter().any(|n| n == a) {
                return Err(Error::DuplicateAtom(a.to_string()));
            }
            names.push(a.to_string());
        }
        let worlds = (0..1u32 << names.len()).collect();
        Ok(Universe { atoms: names, constraints: Vec::new(), worlds })
    }

    /// Restricts the universe to worlds where `formula` has truth `value`.
    pub fn constrain(mut self, formula: Formula, value: bool) -> Result<Self> {
        let set = self.truth_set(&formula)?;
        let kept: Vec<u32> =
            self.worlds.iter().enumerate().filter(|(i, _)| set.contains(*i) == value).map(|(_, w)| *w).collect();
        if kept.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        self.worlds = kept;
        self.constraints.push(Constraint { formula, value });
        Ok(self)
    }

    /// Declares `formula` impossible.
    pub fn impossible(self, formula: &str) -> Result<Self> {
        self.constrain(parse_formula(formula)?, false)
    }

    /// Keeps only the given world masks; used for exhaustive sweeps over
    /// sub-universes.
    pub fn restrict_to(&self, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let keep: Vec<u32> = masks.into_iter().filter(|m| self.worlds.binary_search(m).is_ok()).collect();
        if keep.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(Universe { atoms: self.atoms.clone(), constraints: self.constraints.clone(), worlds: keep })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Possible worlds as masks, ascending.
    pub fn worlds(&self) -> &[u32] {
        &self.worlds
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.atoms.iter().position(|a| a == name).ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    /// Every atom of `f` is declared.
    pub fn check(&self, f: &Formula) -> Result<()> {
        for a in f.atoms() {
            self.atom_index(&a)?;
        }
        Ok(())
    }

    pub fn empty_set(&self) -> WorldSet {
        FixedBitSet::with_capacity(self.worlds.len())
    }

    pub fn full_set(&self) -> WorldSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Worlds where `f` holds.
    pub fn truth_set(&self, f: &Formula) -> Result<WorldSet> {
        Ok(match f {
            Formula::True => self.full_set(),
            Formula::False => self.empty_set(),
            Formula::Atom(a) => {
                let bit = 1u32 << self.atom_index(a)?;
                let mut s = self.empty_set();
                for (i, w) in self.worlds.iter().enumerate() {
                    if w & bit != 0 {
                        s.insert(i);
                    }
                }
                s
            }
            Formula::Not(g) => {
                let mut s = self.truth_set(g)?;
                s.toggle_range(..);
                s
            }
            Formula::And(g, h) => {
                let mut s = self.truth_set(g)?;
                s.intersect_with(&self.truth_set(h)?);
                s
            }
            Formula::Or(g, h) => {
                let mut s = self.truth_set(g)?;
                s.union_with(&self.truth_set(h)?);
                s
            }
        })
    }

    pub fn is_satisfiable(&self, f: &Formula) -> Result<bool> {
        Ok(!self.truth_set(f)?.is_clear())
    }

    /// `f` implies `g` in every possible world.
    pub fn entails(&self, f: &Formula, g: &Formula) -> Result<bool> {
        Ok(self.truth_set(f)?.is_subset(&self.truth_set(g)?))
    }

    pub fn equivalent(&self, f: &Formula, g: &Formula) -> Result<bool> {
        Ok(self.truth_set(f)? == self.truth_set(g)?)
    }

    pub fn assignment(&self, index: usize) -> Assignment {
        let w = self.worlds[index];
        self.atoms.iter().enumerate().map(|(i, a)| (a.clone(), w >> i & 1 == 1)).collect()
    }

    /// World as a conjunction of literals, e.g. `A & ~H & B & K`.
    pub fn describe(&self, index: usize) -> String {
        let w = self.worlds[index];
        self.atoms
            .iter()
            .enumerate()
            .map(|(i, a)| if w >> i & 1 == 1 { a.clone() } else { format!("~{a}") })
            .collect::<Vec<_>>()
            .join(" & ")
    }
}
