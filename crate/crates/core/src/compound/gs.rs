use super::affine::{Affine, Env};
use super::crq::Crq;
use crate::coherence::{Assessment, Engine, ExtensionInterval, Quantity};
use crate::error::{Error, Result};
use crate::event::{Formula, Universe};
use crate::rational::{one, zero, Rational};
use crate::trivalent::ConditionalEvent;

fn check_conditioning(c: &Formula, u: &Universe) -> Result<()> {
    if !u.is_satisfiable(c)? {
        return Err(Error::EmptyConditioning(c.to_string()));
    }
    Ok(())
}

/// `(A|H) ∧ (B|K)` as `(AHBK + x·H̄BK + y·AHK̄) | (H ∨ K)`.
pub fn gs_and_crq(a: &ConditionalEvent, b: &ConditionalEvent, x: &Affine, y: &Affine, own: &str) -> Crq {
    let (h, k) = (a.antecedent.clone(), b.antecedent.clone());
    Crq {
        conditioning: h.clone() | k.clone(),
        regions: vec![
            (a.true_part() & b.true_part(), Affine::constant(one())),
            (a.false_part() | b.false_part(), Affine::constant(zero())),
            (!h & b.true_part(), x.clone()),
            (a.true_part() & !k, y.clone()),
        ],
        own: own.to_string(),
    }
}

/// `(A|H) ∨ (B|K)` as `(AH ∨ BK + x·H̄B̄K + y·ĀHK̄) | (H ∨ K)`.
pub fn gs_or_crq(a: &ConditionalEvent, b: &ConditionalEvent, x: &Affine, y: &Affine, own: &str) -> Crq {
    let (h, k) = (a.antecedent.clone(), b.antecedent.clone());
    Crq {
        conditioning: h.clone() | k.clone(),
        regions: vec![
            (a.true_part() | b.true_part(), Affine::constant(one())),
            (a.false_part() & b.false_part(), Affine::constant(zero())),
            (!h & b.false_part(), x.clone()),
            (a.false_part() & !k, y.clone()),
        ],
        own: own.to_string(),
    }
}

/// Name of the joint prevision of the members in `subset` (0-based),
/// printed 1-based: `x[1,3]`.
pub fn joint_symbol(prefix: &str, subset: &[usize]) -> String {
    let idx: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{prefix}[{}]", idx.join(","))
}

fn proper_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n) - 1).map(move |m| (0..n).filter(|i| m & (1 << i) != 0).collect())
}

/// Shared shape of the n-ary operators: `hit` on the all-`hit_part` region,
/// `1 - hit` where some member takes `miss_part`, and the joint prevision
/// of `S` where exactly the members of `S` are void and the rest take `hit_part`.
fn nary(family: &[ConditionalEvent], prefix: &str, conjunction: bool) -> Result<Crq> {
    let n = family.len();
    if n == 0 {
        return Err(Error::Input("empty family".into()));
    }
    let part = |ce: &ConditionalEvent, hit: bool| if hit == conjunction { ce.true_part() } else { ce.false_part() };
    let (full, none) = if conjunction { (one(), zero()) } else { (zero(), one()) };
    let mut regions = vec![
        (Formula::all(family.iter().map(|c| part(c, true))), Affine::constant(full)),
        (Formula::any(family.iter().map(|c| part(c, false))), Affine::constant(none)),
    ];
    for s in proper_subsets(n) {
        let f = Formula::all((0..n).map(|i| {
            if s.contains(&i) {
                !family[i].antecedent.clone()
            } else {
                part(&family[i], true)
            }
        }));
        regions.push((f, Affine::symbol(joint_symbol(prefix, &s))));
    }
    Ok(Crq {
        conditioning: Formula::any(family.iter().map(|c| c.antecedent.clone())),
        regions,
        own: joint_symbol(prefix, &(0..n).collect::<Vec<_>>()),
    })
}

/// n-ary conjunction with joint-prevision symbols `prefix[S]`.
pub fn gs_and_n_crq(family: &[ConditionalEvent], prefix: &str) -> Result<Crq> {
    nary(family, prefix, true)
}

/// n-ary disjunction with joint-prevision symbols `prefix[S]`.
pub fn gs_or_n_crq(family: &[ConditionalEvent], prefix: &str) -> Result<Crq> {
    nary(family, prefix, false)
}

/// A compound built from operands with coherent numeric previsions.
#[derive(Clone, Debug)]
pub struct Compound {
    pub crq: Crq,
    pub env: Env,
    /// The operands (and, for n-ary compounds, their sub-compounds) with
    /// their previsions; the compound's own prevision extends this family.
    pub base: Assessment,
}

impl Compound {
    pub fn quantity(&self, label: &str) -> Result<Quantity> {
        self.crq.instantiate(label, &self.env)
    }

    /// Coherent values of the compound's own prevision.
    pub fn interval(&self, engine: &Engine, u: &Universe) -> Result<ExtensionInterval> {
        engine.extension_bounds(&self.base, &self.quantity(&self.crq.own)?, u)
    }
}

fn binary(
    a: &ConditionalEvent,
    b: &ConditionalEvent,
    x: &Rational,
    y: &Rational,
    u: &Universe,
    conjunction: bool,
) -> Result<Compound> {
    a.validate(u)?;
    b.validate(u)?;
    let base = Assessment::new(
        vec![Quantity::labelled_event("x", a), Quantity::labelled_event("y", b)],
        vec![x.clone(), y.clone()],
    )?;
    if !Engine::default().check_coherence(&base, u)?.coherent {
        return Err(Error::Incoherent);
    }
    let (sx, sy) = (Affine::symbol("x"), Affine::symbol("y"));
    let crq = if conjunction { gs_and_crq(a, b, &sx, &sy, "z") } else { gs_or_crq(a, b, &sx, &sy, "w") };
    check_conditioning(&crq.conditioning, u)?;
    let env = Env::from([("x".to_string(), x.clone()), ("y".to_string(), y.clone())]);
    Ok(Compound { crq, env, base })
}

/// `(A|H) ∧ (B|K)` with `P(A|H) = x`, `P(B|K) = y`; own prevision `z`.
pub fn gs_and(
    a: &ConditionalEvent,
    b: &ConditionalEvent,
    x: &Rational,
    y: &Rational,
    u: &Universe,
) -> Result<Compound> {
    binary(a, b, x, y, u, true)
}

/// `(A|H) ∨ (B|K)` with `P(A|H) = x`, `P(B|K) = y`; own prevision `w`.
pub fn gs_or(a: &ConditionalEvent, b: &ConditionalEvent, x: &Rational, y: &Rational, u: &Universe) -> Result<Compound> {
    binary(a, b, x, y, u, false)
}

fn nary_compound(
    family: &[ConditionalEvent],
    joint: &Env,
    prefix: &str,
    u: &Universe,
    conjunction: bool,
) -> Result<Compound> {
    for ce in family {
        ce.validate(u)?;
    }
    let n = family.len();
    let mut members = Vec::new();
    let mut values = Vec::new();
    for s in proper_subsets(n) {
        let sub: Vec<ConditionalEvent> = s.iter().map(|&i| family[i].clone()).collect();
        let name = joint_symbol(prefix, &s);
        let value = joint.get(&name).cloned().ok_or_else(|| Error::UnboundSymbol(name.clone()))?;
        let crq = if s.len() == 1 {
            Crq::event(&sub[0], name.clone())
        } else {
            relabel(nary(&sub, prefix, conjunction)?, &s, prefix)
        };
        members.push(crq.instantiate(name, joint)?);
        values.push(value);
    }
    // A single member has no proper subfamilies to assess.
    let base = Assessment { members, values };
    if n > 1 && !Engine::default().check_coherence(&base, u)?.coherent {
        return Err(Error::Incoherent);
    }
    let crq = nary(family, prefix, conjunction)?;
    check_conditioning(&crq.conditioning, u)?;
    Ok(Compound { crq, env: joint.clone(), base })
}

/// Renames the symbols of a compound built on `family[subset]` back to the
/// indices of the full family.
fn relabel(crq: Crq, subset: &[usize], prefix: &str) -> Crq {
    let k = subset.len();
    let map = (1u32..(1 << k))
        .map(|m| {
            let local: Vec<usize> = (0..k).filter(|i| m & (1 << i) != 0).collect();
            let global: Vec<usize> = local.iter().map(|&i| subset[i]).collect();
            (joint_symbol(prefix, &local), joint_symbol(prefix, &global))
        })
        .collect();
    crq.rename(&map)
}

/// n-ary conjunction given coherent joint previsions `x[S]` for every
/// nonempty proper subfamily `S`; own prevision `x[1,..,n]`.
pub fn gs_and_n(family: &[ConditionalEvent], joint: &Env, u: &Universe) -> Result<Compound> {
    nary_compound(family, joint, "x", u, true)
}

/// n-ary disjunction given coherent joint previsions `y[S]`.
pub fn gs_or_n(family: &[ConditionalEvent], joint: &Env, u: &Universe) -> Result<Compound> {
    nary_compound(family, joint, "y", u, false)
}
