//! Coherence of probability and prevision assessments on finite families of
//! conditional events and conditional random quantities.
//!
//! Every check reduces to exact convex-hull tests: an assessment `P` on a
//! family is coherent iff, for every nonempty subfamily `S`, the restriction
//! `P_S` lies in the convex hull of the points `Q_h` attached to the
//! constituents of `S` other than the all-void one. A coordinate of `Q_h` is
//! the member's value on that constituent, or its own assessed value where
//! the member is void.

mod brier;
mod check;
mod compile;
mod dutch;
mod extension;
mod projection;
#[cfg(test)]
mod tests;

use std::fmt;

use crate::error::{Error, Result};
use crate::event::{Formula, Universe};
use crate::rational::{one, zero, Rational};
use crate::trivalent::ConditionalEvent;

pub use brier::{brier_dominator, penalty_loss, Dominator};
pub use check::{build_points, check_coherence, check_hull, CoherenceVerdict, Failure, PointTable};
pub use dutch::{dutch_book, random_gain, DutchBook};
pub use extension::{extension_bounds, Endpoint, ExtensionInterval, TOLERANCE_BITS};

/// Default cap on the family size for subfamily enumeration.
pub const DEFAULT_MAX_FAMILY: usize = 12;

/// Environment variable overriding [`DEFAULT_MAX_FAMILY`].
pub const MAX_FAMILY_VAR: &str = "COHKIT_MAX_FAMILY";

/// Conditional random quantity `X|H` with finitely many values: `X` takes
/// `regions[k].1` on `regions[k].0 ∧ H` and the quantity is void on `¬H`.
/// The regions must partition `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantity {
    pub label: String,
    pub conditioning: Formula,
    pub regions: Vec<(Formula, Rational)>,
}

impl Quantity {
    pub fn new(label: impl Into<String>, conditioning: Formula, regions: Vec<(Formula, Rational)>) -> Self {
        Quantity { label: label.into(), conditioning, regions }
    }

    /// Indicator of `E|H`: 1 on `EH`, 0 on `ĒH`.
    pub fn event(ce: &ConditionalEvent) -> Self {
        Quantity::labelled_event(ce.to_string(), ce)
    }

    pub fn labelled_event(label: impl Into<String>, ce: &ConditionalEvent) -> Self {
        Quantity::new(
            label,
            ce.antecedent.clone(),
            vec![(ce.consequent.clone(), one()), (!ce.consequent.clone(), zero())],
        )
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Values assessed on a family of quantities, member `i` getting `values[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assessment {
    pub members: Vec<Quantity>,
    pub values: Vec<Rational>,
}

impl Assessment {
    pub fn new(members: Vec<Quantity>, values: Vec<Rational>) -> Result<Self> {
        if members.len() != values.len() {
            return Err(Error::DimensionMismatch { expected: members.len(), got: values.len() });
        }
        if members.is_empty() {
            return Err(Error::Input("empty family".into()));
        }
        Ok(Assessment { members, values })
    }

    /// Probability assessment on conditional events.
    pub fn on_events(items: Vec<(ConditionalEvent, Rational)>) -> Result<Self> {
        let (events, values): (Vec<_>, Vec<_>) = items.into_iter().unzip();
        Assessment::new(events.iter().map(Quantity::event).collect(), values)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Same family with `value` assessed on one more member.
    pub fn extended(&self, member: Quantity, value: Rational) -> Self {
        let mut a = self.clone();
        a.members.push(member);
        a.values.push(value);
        a
    }

    pub fn with_values(&self, values: Vec<Rational>) -> Result<Self> {
        Assessment::new(self.members.clone(), values)
    }
}

/// Subfamily enumeration cap. Reads [`MAX_FAMILY_VAR`] in
/// [`Engine::from_env`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    pub max_family: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine { max_family: DEFAULT_MAX_FAMILY }
    }
}

impl Engine {
    pub fn from_env() -> Self {
        let max_family = std::env::var(MAX_FAMILY_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&n: &usize| n > 0)
            .unwrap_or(DEFAULT_MAX_FAMILY);
        Engine { max_family }
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n > self.max_family {
            return Err(Error::FamilyTooLarge { size: n, cap: self.max_family });
        }
        Ok(())
    }

    pub fn check_coherence(&self, a: &Assessment, u: &Universe) -> Result<CoherenceVerdict> {
        check::check_coherence_with(self, a, u)
    }

    pub fn dutch_book(&self, a: &Assessment, u: &Universe) -> Result<Option<DutchBook>> {
        dutch::dutch_book_with(self, a, u)
    }

    pub fn brier_dominator(&self, a: &Assessment, u: &Universe) -> Result<Option<Dominator>> {
        brier::brier_dominator_with(self, a, u)
    }

    pub fn extension_bounds(&self, a: &Assessment, target: &Quantity, u: &Universe) -> Result<ExtensionInterval> {
        extension::extension_bounds_with(self, a, target, u)
    }
}
