use std::fmt;

use super::{ce_difference, gn_inclusion, trivalent_and, trivalent_or, ConditionalEvent, Kind};
use crate::error::Result;
use crate::event::{Formula, Universe};

/// Logical properties checked on `A|H` and `B|K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// `A|H ⊆ B|K` iff `(A|H)∧(B|K) = A|H`.
    P1,
    /// `A|H = [(A|H)∧(B|K)] ∨ [(A|H)∧(B̄|K)]`.
    P2a,
    /// `A|H = (A|H)∧(K|K)`.
    P2b,
    /// `(A|H)∧[(B|K)∨(B̄|K)] = [(A|H)∧(B|K)] ∨ [(A|H)∧(B̄|K)]`.
    P2c,
    /// `(A|H)∨(B|K) = (A|H)∨[(Ā|H)∧(B|K)] = (B|K)∨[(A|H)∧(B̄|K)]`.
    P3,
}

impl Property {
    pub const ALL: [Property; 5] = [Property::P1, Property::P2a, Property::P2b, Property::P2c, Property::P3];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::P1 => "P1",
            Property::P2a => "P2a",
            Property::P2b => "P2b",
            Property::P2c => "P2c",
            Property::P3 => "P3",
        };
        f.write_str(s)
    }
}

/// World where the two sides differ, and for sweeps over sub-universes the
/// possible worlds of the offending universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub world: String,
    pub universe: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Inclusion implies absorption.
    Forward,
    /// Absorption implies inclusion.
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub kind: Kind,
    pub verdict: Verdict,
    /// P1 only: each direction of the biconditional.
    pub directions: Option<(Verdict, Verdict)>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

fn compare(lhs: &ConditionalEvent, rhs: &ConditionalEvent, u: &Universe) -> Result<Verdict> {
    Ok(match ce_difference(lhs, rhs, u)? {
        None => Verdict::Holds,
        Some(w) => Verdict::Fails(Witness { world: u.describe(w), universe: None }),
    })
}

fn operands(u: &Universe) -> Result<(ConditionalEvent, ConditionalEvent)> {
    for a in ["A", "H", "B", "K"] {
        u.atom_index(a)?;
    }
    let at = |s: &str| Formula::atom(s);
    Ok((ConditionalEvent::new(at("A"), at("H")), ConditionalEvent::new(at("B"), at("K"))))
}

/// Checks a logical property of `kind` for `A|H` and `B|K` on `u`, whose
/// atoms must include `A`, `H`, `B`, `K`.
///
/// P2 and P3 are decided on `u` itself. P1 is a biconditional: the forward
/// direction is decided on `u`, which should carry the inclusion
/// constraints, and on every sub-universe of the free universe satisfying
/// them; the reverse direction on every sub-universe where the conjunction
/// is defined and equals `A|H`.
pub fn check_logical_property(property: Property, kind: Kind, u: &Universe) -> Result<PropertyReport> {
    let (a, b) = operands(u)?;
    let and = |x: &ConditionalEvent, y: &ConditionalEvent| trivalent_and(kind, x, y, u);
    let or = |x: &ConditionalEvent, y: &ConditionalEvent| trivalent_or(kind, x, y, u);
    let verdict = match property {
        Property::P1 => {
            let (forward, reverse) = p1_directions(kind, &a, &b, u)?;
            let verdict = if forward.holds() { reverse.clone() } else { forward.clone() };
            return Ok(PropertyReport { property, kind, verdict, directions: Some((forward, reverse)) });
        }
        Property::P2a => compare(&a, &or(&and(&a, &b)?, &and(&a, &b.negate())?)?, u)?,
        Property::P2b => {
            let kk = ConditionalEvent::new(b.antecedent.clone(), b.antecedent.clone());
            compare(&a, &and(&a, &kk)?, u)?
        }
        Property::P2c => {
            let lhs = and(&a, &or(&b, &b.negate())?)?;
            let rhs = or(&and(&a, &b)?, &and(&a, &b.negate())?)?;
            compare(&lhs, &rhs, u)?
        }
        Property::P3 => {
            let lhs = or(&a, &b)?;
            match compare(&lhs, &or(&a, &and(&a.negate(), &b)?)?, u)? {
                Verdict::Holds => compare(&lhs, &or(&b, &and(&a, &b.negate())?)?, u)?,
                fails => fails,
            }
        }
    };
    Ok(PropertyReport { property, kind, verdict, directions: None })
}

fn p1_directions(kind: Kind, a: &ConditionalEvent, b: &ConditionalEvent, u: &Universe) -> Result<(Verdict, Verdict)> {
    let mut forward = Verdict::Holds;
    if gn_inclusion(a, b, u)? {
        forward = compare(&trivalent_and(kind, a, b, u)?, a, u)?;
    }

    // Exhaustive sweep over sub-universes; world `w` of the free universe is
    // the mask `w` over A, H, B, K.
    let free = Universe::new(&["A", "H", "B", "K"])?;
    let conj = trivalent_and(kind, a, b, &free)?;
    let va = a.values(&free)?;
    let vc = conj.values(&free)?;
    let mask = |f: &Formula| -> Result<u32> { Ok(free.truth_set(f)?.ones().fold(0u32, |m, i| m | 1 << i)) };
    let differ = (0..16).filter(|&w| va[w] != vc[w]).fold(0u32, |m, w| m | 1 << w);
    let at = |s: &str| Formula::atom(s);
    let (fa, fh, fb, fk) = (at("A"), at("H"), at("B"), at("K"));
    let outside = mask(&Formula::any([
        fa.clone() & fh.clone() & !fk.clone(),
        fa.clone() & fh.clone() & !fb.clone() & fk.clone(),
        !fh.clone() & !fb.clone() & fk.clone(),
    ]))?;
    let h = mask(&fh)?;
    let k = mask(&fk)?;
    let defined = mask(&conj.antecedent)?;
    let mut reverse = Verdict::Holds;
    let show = |set: u32| -> Vec<String> { (0..16).filter(|w| set >> w & 1 == 1).map(|w| free.describe(w)).collect() };
    for set in 1u32..1 << 16 {
        if set & h == 0 || set & k == 0 || set & defined == 0 {
            continue;
        }
        let equal = set & differ == 0;
        let included = set & outside == 0;
        if included && !equal && forward.holds() {
            let w = (set & differ).trailing_zeros() as usize;
            forward = Verdict::Fails(Witness { world: free.describe(w), universe: Some(show(set)) });
        }
        if equal && !included && reverse.holds() {
            let w = (set & outside).trailing_zeros() as usize;
            reverse = Verdict::Fails(Witness { world: free.describe(w), universe: Some(show(set)) });
        }
    }
    Ok((forward, reverse))
}
