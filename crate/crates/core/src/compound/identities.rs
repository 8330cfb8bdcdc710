use std::fmt;

use super::affine::{Affine, Env};
use super::crq::Crq;
use super::gs::{gs_and_crq, gs_or_crq};
use crate::error::Result;
use crate::event::{Formula, Universe};
use crate::rational::{one, Rational};
use crate::trivalent::{ConditionalEvent, Verdict, Witness};

/// Constant plus a linear combination of quantities.
#[derive(Clone, Debug)]
pub struct Combination {
    pub constant: Rational,
    pub terms: Vec<(Rational, Crq)>,
}

impl Combination {
    pub fn of(crq: Crq) -> Self {
        Combination { constant: Rational::from_integer(0.into()), terms: vec![(one(), crq)] }
    }

    pub fn plus(mut self, coeff: Rational, crq: Crq) -> Self {
        self.terms.push((coeff, crq));
        self
    }

    pub fn offset(mut self, c: Rational) -> Self {
        self.constant += c;
        self
    }

    fn values(&self, u: &Universe) -> Result<(Vec<Affine>, Vec<bool>)> {
        let mut vals = vec![Affine::constant(self.constant.clone()); u.len()];
        let mut live = vec![false; u.len()];
        for (c, crq) in &self.terms {
            let v = crq.values(u)?;
            let s = crq.support(u)?;
            for w in 0..u.len() {
                vals[w] = &vals[w] + &(c * &v[w]);
                live[w] |= s[w];
            }
        }
        Ok((vals, live))
    }
}

/// Outcome of a constituent-wise comparison of two combinations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    /// First world, outside the common void region, where the sides differ,
    /// with the difference `lhs - rhs` there.
    pub mismatch: Option<(String, Affine)>,
    /// `lhs - rhs` where every quantity is void: the identity holds exactly
    /// when this vanishes, which ties the own previsions together.
    pub void_difference: Option<Affine>,
}

impl IdentityCheck {
    /// Equal off the common void region.
    pub fn maps_agree(&self) -> bool {
        self.mismatch.is_none()
    }

    /// Equal everywhere once the own previsions satisfy `void_difference = 0`
    /// with `resolved` substituted.
    pub fn holds_with(&self, resolved: &Env) -> bool {
        self.maps_agree() && self.void_difference.as_ref().is_none_or(|d| d.substitute(resolved).is_zero())
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.mismatch, &self.void_difference) {
            (Some((w, d)), _) => write!(f, "differs by {d} at {w}"),
            (None, Some(d)) => write!(f, "agrees; previsions satisfy {d} = 0"),
            (None, None) => write!(f, "agrees"),
        }
    }
}

/// Compares `lhs` and `rhs` world by world after substituting `forced`.
pub fn compare(lhs: &Combination, rhs: &Combination, forced: &Env, u: &Universe) -> Result<IdentityCheck> {
    let (lv, ll) = lhs.values(u)?;
    let (rv, rl) = rhs.values(u)?;
    let mut mismatch = None;
    let mut void_difference = None;
    for w in 0..u.len() {
        let d = (&lv[w] - &rv[w]).substitute(forced);
        if ll[w] || rl[w] {
            if !d.is_zero() && mismatch.is_none() {
                mismatch = Some((u.describe(w), d));
            }
        } else if void_difference.is_none() {
            void_difference = Some(d);
        }
    }
    Ok(IdentityCheck { mismatch, void_difference })
}

/// Previsions that coherence pins down for an event alone: 0 when it cannot
/// be true, 1 when it cannot be false.
pub fn forced_value(ce: &ConditionalEvent, u: &Universe) -> Result<Option<Rational>> {
    let (t, f) = ce.truth_sets(u)?;
    Ok(if t.is_clear() {
        Some(Rational::from_integer(0.into()))
    } else if f.is_clear() {
        Some(one())
    } else {
        None
    })
}

fn operands() -> (ConditionalEvent, ConditionalEvent) {
    let at = Formula::atom;
    (ConditionalEvent::new(at("A"), at("H")), ConditionalEvent::new(at("B"), at("K")))
}

fn sym(s: &str) -> Affine {
    Affine::symbol(s)
}

fn one_minus(s: &str) -> Affine {
    &Affine::constant(one()) - &sym(s)
}

/// Both sides of `id` and the previsions coherence forces;
/// `x = P(A|H)`, `y = P(B|K)`.
fn identity(id: CompoundIdentity) -> (Combination, Combination, Env) {
    let (a, b) = operands();
    let (x, y) = (sym("x"), sym("y"));
    let ev = |ce: &ConditionalEvent, s: &str| Crq::event(ce, s);
    match id {
        CompoundIdentity::Idempotence => {
            (Combination::of(gs_and_crq(&a, &a, &x, &x, "z")), Combination::of(ev(&a, "x")), Env::new())
        }
        CompoundIdentity::UnitConditioning => {
            let kk = ConditionalEvent::new(b.antecedent.clone(), b.antecedent.clone());
            let t = Affine::constant(one());
            (Combination::of(gs_and_crq(&a, &kk, &x, &t, "z")), Combination::of(ev(&a, "x")), Env::new())
        }
        CompoundIdentity::ExcludedMiddle => {
            let kk = ConditionalEvent::new(b.antecedent.clone(), b.antecedent.clone());
            let lhs = gs_or_crq(&b, &b.negate(), &y, &one_minus("y"), "w");
            (Combination::of(lhs), Combination::of(ev(&kk, "t")), Env::from([("t".into(), one())]))
        }
        CompoundIdentity::Split => {
            let lhs = Combination::of(gs_and_crq(&a, &b, &x, &y, "z1"))
                .plus(one(), gs_and_crq(&a, &b.negate(), &x, &one_minus("y"), "z2"));
            (lhs, Combination::of(ev(&a, "x")), Env::new())
        }
        CompoundIdentity::Decomposition => {
            let rhs = Combination::of(ev(&a, "x")).plus(one(), gs_and_crq(&a.negate(), &b, &one_minus("x"), &y, "z'"));
            (Combination::of(gs_or_crq(&a, &b, &x, &y, "w")), rhs, Env::new())
        }
        CompoundIdentity::DecompositionRight => {
            let rhs = Combination::of(ev(&b, "y")).plus(one(), gs_and_crq(&a, &b.negate(), &x, &one_minus("y"), "z'"));
            (Combination::of(gs_or_crq(&a, &b, &x, &y, "w")), rhs, Env::new())
        }
        CompoundIdentity::SumRule => {
            let rhs =
                Combination::of(ev(&a, "x")).plus(one(), ev(&b, "y")).plus(-one(), gs_and_crq(&a, &b, &x, &y, "z"));
            (Combination::of(gs_or_crq(&a, &b, &x, &y, "w")), rhs, Env::new())
        }
        CompoundIdentity::DeMorgan => {
            let rhs = Combination::of(gs_and_crq(&a.negate(), &b.negate(), &one_minus("x"), &one_minus("y"), "z'"));
            let rhs = Combination { constant: one(), terms: vec![(-one(), rhs.terms[0].1.clone())] };
            (Combination::of(gs_or_crq(&a, &b, &x, &y, "w")), rhs, Env::new())
        }
        CompoundIdentity::Chain => {
            let at = Formula::atom;
            let e = ConditionalEvent::new(at("E"), at("H") & at("K"));
            let h = ConditionalEvent::new(at("H"), at("K"));
            let target = ConditionalEvent::new(at("E") & at("H"), at("K"));
            (Combination::of(gs_and_crq(&e, &h, &x, &y, "z")), Combination::of(ev(&target, "t")), Env::new())
        }
    }
}

/// Named identities of the gs operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompoundIdentity {
    /// `(A|H) ∧ (A|H) = A|H`.
    Idempotence,
    /// `(A|H) ∧ (K|K) = A|H`.
    UnitConditioning,
    /// `(B|K) ∨ (B̄|K) = K|K`.
    ExcludedMiddle,
    /// `(A|H) ∧ (B|K) + (A|H) ∧ (B̄|K) = A|H`.
    Split,
    /// `(A|H) ∨ (B|K) = A|H + (Ā|H) ∧ (B|K)`.
    Decomposition,
    /// `(A|H) ∨ (B|K) = B|K + (A|H) ∧ (B̄|K)`.
    DecompositionRight,
    /// `(A|H) ∨ (B|K) = A|H + B|K - (A|H) ∧ (B|K)`.
    SumRule,
    /// `(A|H) ∨ (B|K) = 1 - (Ā|H) ∧ (B̄|K)`.
    DeMorgan,
    /// `(E|HK) ∧ (H|K) = EH|K`.
    Chain,
}

impl CompoundIdentity {
    pub const ALL: [CompoundIdentity; 9] = [
        CompoundIdentity::Idempotence,
        CompoundIdentity::UnitConditioning,
        CompoundIdentity::ExcludedMiddle,
        CompoundIdentity::Split,
        CompoundIdentity::Decomposition,
        CompoundIdentity::DecompositionRight,
        CompoundIdentity::SumRule,
        CompoundIdentity::DeMorgan,
        CompoundIdentity::Chain,
    ];
}

/// Compares both sides of `id` over free atoms.
pub fn compound_identity_check(id: CompoundIdentity) -> Result<IdentityCheck> {
    let (lhs, rhs, forced) = identity(id);
    let atoms: &[&str] = if id == CompoundIdentity::Chain { &["E", "H", "K"] } else { &["A", "H", "B", "K"] };
    compare(&lhs, &rhs, &forced, &Universe::new(atoms)?)
}

/// Sign of `lhs - rhs` off the all-void region, for every value in `[0, 1]`
/// of the remaining symbols: `Some(true)` if `≤ 0`, `Some(false)` if `≥ 0`
/// and not `≤ 0`, `None` if neither.
pub fn sign_off_void(lhs: &Combination, rhs: &Combination, u: &Universe) -> Result<Option<bool>> {
    let (lv, ll) = lhs.values(u)?;
    let (rv, rl) = rhs.values(u)?;
    let (mut nonpos, mut nonneg) = (true, true);
    for w in 0..u.len() {
        if ll[w] || rl[w] {
            let d = &lv[w] - &rv[w];
            nonneg &= d.box_min() >= Rational::from_integer(0.into());
            nonpos &= (-&d).box_min() >= Rational::from_integer(0.into());
        }
    }
    Ok(if nonpos {
        Some(true)
    } else if nonneg {
        Some(false)
    } else {
        None
    })
}

/// Monotonicity of the gs operators: `(A|H)∧(B|K) ≤ A|H ≤ (A|H)∨(B|K)` off
/// the all-void constituent, for every `x, y` in `[0, 1]`.
pub fn gs_monotone() -> Result<bool> {
    let (a, b) = operands();
    let (x, y) = (sym("x"), sym("y"));
    let u = Universe::new(&["A", "H", "B", "K"])?;
    let base = Combination::of(Crq::event(&a, "x"));
    let and = sign_off_void(&Combination::of(gs_and_crq(&a, &b, &x, &y, "z")), &base, &u)?;
    let or = sign_off_void(&Combination::of(gs_or_crq(&a, &b, &x, &y, "w")), &base, &u)?;
    Ok(and == Some(true) && or == Some(false))
}

/// Both directions of `A|H ≤ B|K ⟺ (A|H) ∧ (B|K) = A|H`, swept over every
/// sub-universe of the free universe on `A, H, B, K` where both antecedents
/// are possible. Previsions that a sub-universe forces (see
/// [`forced_value`]) are substituted; the rest range over `[0, 1]`.
pub fn gs_inclusion_directions() -> Result<(Verdict, Verdict)> {
    let free = Universe::new(&["A", "H", "B", "K"])?;
    let (a, b) = operands();
    let (x, y) = (sym("x"), sym("y"));
    let conj = gs_and_crq(&a, &b, &x, &y, "z").values(&free)?;
    let va = Crq::event(&a, "x").values(&free)?;
    let vb = Crq::event(&b, "y").values(&free)?;
    let mask = |f: &Formula| -> Result<u32> { Ok(free.truth_set(f)?.ones().fold(0u32, |m, i| m | 1 << i)) };
    let h = mask(&a.antecedent)?;
    let k = mask(&b.antecedent)?;
    let (ah, nah) = (mask(&a.true_part())?, mask(&a.false_part())?);
    let (bk, nbk) = (mask(&b.true_part())?, mask(&b.false_part())?);
    let show = |set: u32| -> Vec<String> { (0..16).filter(|w| set >> w & 1 == 1).map(|w| free.describe(w)).collect() };
    let pin = |t: u32, f: u32, set: u32| -> Option<Rational> {
        if set & t == 0 {
            Some(Rational::from_integer(0.into()))
        } else if set & f == 0 {
            Some(one())
        } else {
            None
        }
    };

    let (mut forward, mut reverse) = (Verdict::Holds, Verdict::Holds);
    for set in 1u32..1 << 16 {
        if set & h == 0 || set & k == 0 {
            continue;
        }
        let mut forced = Env::new();
        if let Some(v) = pin(ah, nah, set) {
            forced.insert("x".into(), v);
        }
        if let Some(v) = pin(bk, nbk, set) {
            forced.insert("y".into(), v);
        }
        let live = (0..16).filter(|w| set >> w & 1 == 1 && (h | k) >> w & 1 == 1);
        let mut unequal = None;
        let mut above = None;
        for w in live {
            if unequal.is_none() && !(&conj[w] - &va[w]).substitute(&forced).is_zero() {
                unequal = Some(w);
            }
            if above.is_none() && (&vb[w] - &va[w]).substitute(&forced).box_min() < Rational::from_integer(0.into()) {
                above = Some(w);
            }
        }
        match (above, unequal) {
            (None, Some(w)) if forward.holds() => {
                forward = Verdict::Fails(Witness { world: free.describe(w), universe: Some(show(set)) });
            }
            (Some(w), None) if reverse.holds() => {
                reverse = Verdict::Fails(Witness { world: free.describe(w), universe: Some(show(set)) });
            }
            _ => {}
        }
    }
    Ok((forward, reverse))
}
