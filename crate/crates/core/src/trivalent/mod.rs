//! Conditional events as three-valued objects and the four trivalent
//! conjunctions and disjunctions (Kleene, Łukasiewicz, Bochvar, Sobociński).

mod properties;

use std::fmt;

use crate::error::{Error, Result};
use crate::event::{parse_conditional, Assignment, Formula, Universe, WorldSet};

pub use properties::{check_logical_property, Direction, Property, PropertyReport, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriValue {
    True,
    False,
    Void,
}

impl TriValue {
    pub fn negate(self) -> Self {
        match self {
            TriValue::True => TriValue::False,
            TriValue::False => TriValue::True,
            TriValue::Void => TriValue::Void,
        }
    }
}

/// Trivalent conjunction families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Kleene–Łukasiewicz–Heyting, de Finetti.
    K,
    /// Łukasiewicz.
    L,
    /// Bochvar internal, Kleene weak.
    B,
    /// Sobociński, quasi conjunction.
    S,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::K, Kind::L, Kind::B, Kind::S];

    /// Truth table of the conjunction.
    pub fn and_values(self, a: TriValue, b: TriValue) -> TriValue {
        use TriValue::*;
        match self {
            Kind::K => match (a, b) {
                (False, _) | (_, False) => False,
                (True, True) => True,
                _ => Void,
            },
            Kind::L => match (a, b) {
                (False, _) | (_, False) | (Void, Void) => False,
                (True, True) => True,
                _ => Void,
            },
            Kind::B => match (a, b) {
                (Void, _) | (_, Void) => Void,
                (True, True) => True,
                _ => False,
            },
            Kind::S => match (a, b) {
                (False, _) | (_, False) => False,
                (Void, Void) => Void,
                _ => True,
            },
        }
    }

    /// Truth table of the disjunction, dual of [`Kind::and_values`].
    pub fn or_values(self, a: TriValue, b: TriValue) -> TriValue {
        self.and_values(a.negate(), b.negate()).negate()
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::K => "K",
            Kind::L => "L",
            Kind::B => "B",
            Kind::S => "S",
        };
        f.write_str(s)
    }
}

/// `E|H`: true when `E∧H`, false when `¬E∧H`, void when `¬H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConditionalEvent {
    pub consequent: Formula,
    pub antecedent: Formula,
}

impl ConditionalEvent {
    pub fn new(consequent: Formula, antecedent: Formula) -> Self {
        ConditionalEvent { consequent, antecedent }
    }

    /// Parses `E given H` or `E | H`.
    pub fn parse(text: &str) -> Result<Self> {
        let (e, h) = parse_conditional(text)?;
        Ok(ConditionalEvent::new(e, h))
    }

    /// The unconditional event `E|Ω`.
    pub fn event(e: Formula) -> Self {
        ConditionalEvent::new(e, Formula::True)
    }

    /// `E∧H`.
    pub fn true_part(&self) -> Formula {
        self.consequent.clone() & self.antecedent.clone()
    }

    /// `¬E∧H`.
    pub fn false_part(&self) -> Formula {
        !self.consequent.clone() & self.antecedent.clone()
    }

    /// `¬H`.
    pub fn void_part(&self) -> Formula {
        !self.antecedent.clone()
    }

    /// `¬E|H`.
    pub fn negate(&self) -> Self {
        ConditionalEvent::new(!self.consequent.clone(), self.antecedent.clone())
    }

    /// The antecedent is possible in `u`.
    pub fn validate(&self, u: &Universe) -> Result<()> {
        u.check(&self.consequent)?;
        if !u.is_satisfiable(&self.antecedent)? {
            return Err(Error::EmptyConditioning(self.to_string()));
        }
        Ok(())
    }

    /// Truth sets of the true and false parts.
    pub fn truth_sets(&self, u: &Universe) -> Result<(WorldSet, WorldSet)> {
        Ok((u.truth_set(&self.true_part())?, u.truth_set(&self.false_part())?))
    }

    /// Value in each world of `u`, in world order.
    pub fn values(&self, u: &Universe) -> Result<Vec<TriValue>> {
        let (t, f) = self.truth_sets(u)?;
        Ok((0..u.len())
            .map(|i| {
                if t.contains(i) {
                    TriValue::True
                } else if f.contains(i) {
                    TriValue::False
                } else {
                    TriValue::Void
                }
            })
            .collect())
    }
}

impl fmt::Display for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.antecedent == Formula::True {
            write!(f, "{}", self.consequent)
        } else {
            write!(f, "({}) given ({})", self.consequent, self.antecedent)
        }
    }
}

pub fn eval_conditional(ce: &ConditionalEvent, world: &Assignment) -> Result<TriValue> {
    Ok(if !ce.antecedent.eval(world)? {
        TriValue::Void
    } else if ce.consequent.eval(world)? {
        TriValue::True
    } else {
        TriValue::False
    })
}

fn build(consequent: Formula, antecedent: Formula, u: &Universe) -> Result<ConditionalEvent> {
    if !u.is_satisfiable(&antecedent)? {
        return Err(Error::DegenerateConjunction);
    }
    Ok(ConditionalEvent::new(consequent, antecedent))
}

/// Conjunction of `a = A|H` and `b = B|K` under `kind`:
///
/// | kind | consequent | antecedent |
/// |---|---|---|
/// | K | AHBK | AHBK ∨ ĀH ∨ B̄K |
/// | L | AHBK | AHBK ∨ ĀH ∨ B̄K ∨ H̄K̄ |
/// | B | AB | HK |
/// | S | (A ∨ H̄)(B ∨ K̄) | H ∨ K |
pub fn trivalent_and(kind: Kind, a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<ConditionalEvent> {
    let (h, k) = (a.antecedent.clone(), b.antecedent.clone());
    let both_true = a.true_part() & b.true_part();
    let either_false = a.false_part() | b.false_part();
    match kind {
        Kind::K => build(both_true.clone(), both_true | either_false, u),
        Kind::L => build(both_true.clone(), both_true | either_false | (!h & !k), u),
        Kind::B => build(a.consequent.clone() & b.consequent.clone(), h & k, u),
        Kind::S => build((a.consequent.clone() | !h.clone()) & (b.consequent.clone() | !k.clone()), h | k, u),
    }
}

/// Disjunction of `a = A|H` and `b = B|K` under `kind`, the De Morgan dual of
/// [`trivalent_and`]:
///
/// | kind | consequent | antecedent |
/// |---|---|---|
/// | K | AH ∨ BK | ĀHB̄K ∨ AH ∨ BK |
/// | L | AH ∨ BK ∨ H̄K̄ | ĀHB̄K ∨ AH ∨ BK ∨ H̄K̄ |
/// | B | A ∨ B | HK |
/// | S | AH ∨ BK | H ∨ K |
pub fn trivalent_or(kind: Kind, a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<ConditionalEvent> {
    let (h, k) = (a.antecedent.clone(), b.antecedent.clone());
    let either_true = a.true_part() | b.true_part();
    let both_false = a.false_part() & b.false_part();
    match kind {
        Kind::K => build(either_true.clone(), both_false | either_true, u),
        Kind::L => {
            let neither = !h & !k;
            build(either_true.clone() | neither.clone(), both_false | either_true | neither, u)
        }
        Kind::B => build(a.consequent.clone() | b.consequent.clone(), h & k, u),
        Kind::S => build(either_true, h | k, u),
    }
}

/// First world of `u` where the two conditional events take different values.
pub fn ce_difference(a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<Option<usize>> {
    let (at, af) = a.truth_sets(u)?;
    let (bt, bf) = b.truth_sets(u)?;
    let mut diff = at;
    diff.symmetric_difference_with(&bt);
    let mut diff_false = af;
    diff_false.symmetric_difference_with(&bf);
    diff.union_with(&diff_false);
    Ok(diff.ones().next())
}

/// Same truth value in every possible world.
pub fn ce_equal(a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<bool> {
    Ok(ce_difference(a, b, u)?.is_none())
}

/// Goodman–Nguyen inclusion `A|H ⊆ B|K`: `AH ⊆ BK` and `B̄K ⊆ ĀH`.
pub fn gn_inclusion(a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<bool> {
    Ok(u.entails(&a.true_part(), &b.true_part())? && u.entails(&b.false_part(), &a.false_part())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ahbk() -> Universe {
        Universe::new(&["A", "H", "B", "K"]).unwrap()
    }

    fn ce(s: &str) -> ConditionalEvent {
        ConditionalEvent::parse(s).unwrap()
    }

    #[test]
    fn operator_formulas_match_truth_tables() {
        let u = ahbk();
        let (a, b) = (ce("A | H"), ce("B | K"));
        let (va, vb) = (a.values(&u).unwrap(), b.values(&u).unwrap());
        for kind in Kind::ALL {
            let and = trivalent_and(kind, &a, &b, &u).unwrap().values(&u).unwrap();
            let or = trivalent_or(kind, &a, &b, &u).unwrap().values(&u).unwrap();
            for w in 0..u.len() {
                assert_eq!(and[w], kind.and_values(va[w], vb[w]), "{kind} and at {}", u.describe(w));
                assert_eq!(or[w], kind.or_values(va[w], vb[w]), "{kind} or at {}", u.describe(w));
            }
        }
    }

    #[test]
    fn de_morgan_for_every_kind() {
        let u = ahbk();
        let (a, b) = (ce("A | H"), ce("B | K"));
        for kind in Kind::ALL {
            let lhs = trivalent_and(kind, &a, &b, &u).unwrap().negate();
            let rhs = trivalent_or(kind, &a.negate(), &b.negate(), &u).unwrap();
            assert!(ce_equal(&lhs, &rhs, &u).unwrap(), "{kind}");
        }
    }

    #[test]
    fn conjunction_is_commutative_and_associative() {
        let u = Universe::new(&["A", "H", "B", "K", "C", "M"]).unwrap();
        let (a, b, c) = (ce("A | H"), ce("B | K"), ce("C | M"));
        for kind in Kind::ALL {
            let ab = trivalent_and(kind, &a, &b, &u).unwrap();
            let ba = trivalent_and(kind, &b, &a, &u).unwrap();
            assert!(ce_equal(&ab, &ba, &u).unwrap());
            let left = trivalent_and(kind, &ab, &c, &u).unwrap();
            let bc = trivalent_and(kind, &b, &c, &u).unwrap();
            let right = trivalent_and(kind, &a, &bc, &u).unwrap();
            assert!(ce_equal(&left, &right, &u).unwrap(), "{kind}");
        }
    }

    #[test]
    fn bochvar_with_disjoint_antecedents_is_degenerate() {
        let u = ahbk().impossible("H & K").unwrap();
        assert!(matches!(trivalent_and(Kind::B, &ce("A | H"), &ce("B | K"), &u), Err(Error::DegenerateConjunction)));
    }

    #[test]
    fn evaluation_and_negation() {
        let w: Assignment = [("A", false), ("H", true)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let a = ce("A | H");
        assert_eq!(eval_conditional(&a, &w).unwrap(), TriValue::False);
        assert_eq!(eval_conditional(&a.negate(), &w).unwrap(), TriValue::True);
        assert_eq!(eval_conditional(&ce("A | ~H"), &w).unwrap(), TriValue::Void);
    }

    #[test]
    fn inclusion_under_the_four_constraints() {
        let u = ahbk()
            .impossible("A & H & ~K")
            .unwrap()
            .impossible("A & H & ~B & K")
            .unwrap()
            .impossible("~H & ~B & K")
            .unwrap()
            .impossible("~A & H & B & K")
            .unwrap();
        assert!(gn_inclusion(&ce("A | H"), &ce("B | K"), &u).unwrap());
        assert!(!gn_inclusion(&ce("A | H"), &ce("B | K"), &ahbk()).unwrap());
        assert!(gn_inclusion(&ce("A & B | H"), &ce("A | H"), &ahbk()).unwrap());
    }
}
