use std::collections::HashMap;

use crate::coherence::{Assessment, Engine, ExtensionInterval, Quantity};
use crate::error::{Error, Result};
use crate::event::{Universe, WorldSet};
use crate::rational::one;
use crate::trivalent::{gn_inclusion, trivalent_and, ConditionalEvent, Kind};

fn all_ones(family: &[ConditionalEvent]) -> Result<Assessment> {
    Assessment::on_events(family.iter().map(|c| (c.clone(), one())).collect())
}

/// The assessment giving every member probability 1 is coherent.
pub fn p_consistent(engine: &Engine, family: &[ConditionalEvent], u: &Universe) -> Result<bool> {
    Ok(engine.check_coherence(&all_ones(family)?, u)?.coherent)
}

#[derive(Clone, Debug)]
pub struct Entailment {
    pub entailed: bool,
    /// Coherent values of the target when every member has probability 1.
    pub interval: ExtensionInterval,
}

/// A p-consistent family p-entails `target` when probability 1 on every
/// member forces probability 1 on the target.
pub fn p_entails(
    engine: &Engine,
    family: &[ConditionalEvent],
    target: &ConditionalEvent,
    u: &Universe,
) -> Result<Entailment> {
    target.validate(u)?;
    if !p_consistent(engine, family, u)? {
        return Err(Error::NotPConsistent);
    }
    let interval = engine.extension_bounds(&all_ones(family)?, &Quantity::event(target), u)?;
    let entailed = interval.exact().is_some_and(|(lo, hi)| lo == &one() && hi == &one());
    Ok(Entailment { entailed, interval })
}

/// Value of a member in a world, from the family's truth sets.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    True,
    False,
    Void,
}

/// Value of the conjunction of the members in a subset at one world: a
/// constant or the joint prevision of the void members.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Value {
    Zero,
    One,
    Joint(u32),
}

/// Symbolic conjunctions of subfamilies, for the structural p-entailment
/// characterizations. Bit `i` of a mask selects member `i`.
struct Symbolic {
    slots: Vec<Vec<Slot>>,
    /// Members whose true part, resp. false part, is empty.
    never_true: u32,
    never_false: u32,
    memo_absorbs: HashMap<(u32, usize), bool>,
    memo_below: HashMap<(u32, usize), bool>,
}

impl Symbolic {
    fn new(members: &[ConditionalEvent], u: &Universe) -> Result<Self> {
        let mut slots = vec![Vec::with_capacity(members.len()); u.len()];
        let (mut never_true, mut never_false) = (0, 0);
        for (i, ce) in members.iter().enumerate() {
            let (t, f): (WorldSet, WorldSet) = ce.truth_sets(u)?;
            if t.is_clear() {
                never_true |= 1 << i;
            }
            if f.is_clear() {
                never_false |= 1 << i;
            }
            for (w, row) in slots.iter_mut().enumerate() {
                row.push(if t.contains(w) {
                    Slot::True
                } else if f.contains(w) {
                    Slot::False
                } else {
                    Slot::Void
                });
            }
        }
        Ok(Symbolic { slots, never_true, never_false, memo_absorbs: HashMap::new(), memo_below: HashMap::new() })
    }

    fn members(mask: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }

    /// `None` where every member of `mask` is void.
    fn value(&self, w: usize, mask: u32) -> Option<Value> {
        let mut void = 0;
        for i in Self::members(mask) {
            match self.slots[w][i] {
                Slot::False => return Some(Value::Zero),
                Slot::Void => void |= 1 << i,
                Slot::True => {}
            }
        }
        match void {
            0 => Some(Value::One),
            v if v == mask => None,
            v => Some(Value::Joint(v)),
        }
    }

    /// Pinned value of the joint prevision of `mask`, if coherence pins it.
    fn forced(&self, mask: u32) -> Option<Value> {
        if mask & self.never_true != 0 {
            Some(Value::Zero)
        } else if mask & !self.never_false == 0 {
            Some(Value::One)
        } else {
            None
        }
    }

    fn pinned(&self, v: Value) -> Value {
        match v {
            Value::Joint(m) => self.forced(m).unwrap_or(v),
            c => c,
        }
    }

    /// Conjunction of `mask` with member `t` equals the conjunction of `mask`.
    fn absorbs(&mut self, mask: u32, t: usize) -> bool {
        if let Some(&r) = self.memo_absorbs.get(&(mask, t)) {
            return r;
        }
        let mut ok = true;
        for w in 0..self.slots.len() {
            let Some(with) = self.value(w, mask | 1 << t) else { continue };
            let without = self.value(w, mask).unwrap_or(Value::Joint(mask));
            let with = match with {
                Value::Joint(m) if m & 1 << t != 0 && m != 1 << t && self.absorbs(m & !(1 << t), t) => {
                    Value::Joint(m & !(1 << t))
                }
                v => v,
            };
            if with != without && self.pinned(with) != self.pinned(without) {
                ok = false;
                break;
            }
        }
        self.memo_absorbs.insert((mask, t), ok);
        ok
    }

    /// Conjunction of `mask` is at most member `t`, for every coherent
    /// prevision assessment.
    fn below(&mut self, mask: u32, t: usize) -> bool {
        if let Some(&r) = self.memo_below.get(&(mask, t)) {
            return r;
        }
        let t_one = self.never_false >> t & 1 == 1;
        let mut ok = true;
        for w in 0..self.slots.len() {
            let conj = match self.value(w, mask) {
                Some(v) => self.pinned(v),
                None if self.slots[w][t] == Slot::Void => continue,
                None => self.pinned(Value::Joint(mask)),
            };
            let fine = match (self.slots[w][t], conj) {
                (_, Value::Zero) | (Slot::True, _) => true,
                (Slot::False, _) => false,
                (Slot::Void, Value::One) => t_one,
                (Slot::Void, Value::Joint(m)) => t_one || (m != mask && self.below(m, t)),
            };
            if !fine {
                ok = false;
                break;
            }
        }
        self.memo_below.insert((mask, t), ok);
        ok
    }
}

fn with_target(family: &[ConditionalEvent], target: &ConditionalEvent) -> (Vec<ConditionalEvent>, u32, usize) {
    let mut members = family.to_vec();
    members.push(target.clone());
    let n = family.len();
    (members, (1u32 << n) - 1, n)
}

/// The conjunction of the family, conjoined with the target, equals the
/// conjunction of the family; decided symbolically, with joint previsions
/// of subfamilies identified recursively.
pub fn conjunction_absorbs(family: &[ConditionalEvent], target: &ConditionalEvent, u: &Universe) -> Result<bool> {
    let (members, mask, t) = with_target(family, target);
    Ok(Symbolic::new(&members, u)?.absorbs(mask, t))
}

/// The conjunction of the family is at most the target.
pub fn conjunction_below(family: &[ConditionalEvent], target: &ConditionalEvent, u: &Universe) -> Result<bool> {
    let (members, mask, t) = with_target(family, target);
    Ok(Symbolic::new(&members, u)?.below(mask, t))
}

/// Entailment through quasi-conjunctions: the target cannot be false, or
/// some nonempty subfamily's quasi-conjunction is included in it.
pub fn quasi_conjunction_entails(family: &[ConditionalEvent], target: &ConditionalEvent, u: &Universe) -> Result<bool> {
    if target.truth_sets(u)?.1.is_clear() {
        return Ok(true);
    }
    let n = family.len();
    for m in 1u32..1 << n {
        let mut members = (0..n).filter(|i| m >> i & 1 == 1).map(|i| &family[i]);
        let first = members.next().expect("nonempty").clone();
        let qc = members.try_fold(first, |acc, ce| trivalent_and(Kind::S, &acc, ce, u))?;
        if gn_inclusion(&qc, target, u)? {
            return Ok(true);
        }
    }
    Ok(false)
}
