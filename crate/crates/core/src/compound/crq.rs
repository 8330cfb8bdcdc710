use std::collections::BTreeMap;

use super::affine::{Affine, Env};
use crate::coherence::Quantity;
use crate::error::{Error, Result};
use crate::event::{Formula, Universe};
use crate::rational::{one, zero, Rational};
use crate::trivalent::ConditionalEvent;

/// Conditional random quantity with symbolic values: `regions[k].1` on
/// `regions[k].0 ∧ conditioning`, and the prevision symbol `own` where the
/// conditioning event is false. Region values may mention the previsions of
/// other quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crq {
    pub conditioning: Formula,
    pub regions: Vec<(Formula, Affine)>,
    pub own: String,
}

impl Crq {
    /// Indicator of `E|H`, with prevision symbol `own`.
    pub fn event(ce: &ConditionalEvent, own: impl Into<String>) -> Self {
        Crq {
            conditioning: ce.antecedent.clone(),
            regions: vec![
                (ce.consequent.clone(), Affine::constant(one())),
                (!ce.consequent.clone(), Affine::constant(zero())),
            ],
            own: own.into(),
        }
    }

    /// Value in each world of `u`; the own symbol where void.
    pub fn values(&self, u: &Universe) -> Result<Vec<Affine>> {
        let cond = u.truth_set(&self.conditioning)?;
        let mut out: Vec<Option<Affine>> = vec![None; u.len()];
        for (f, v) in &self.regions {
            for w in u.truth_set(f)?.ones() {
                if cond.contains(w) {
                    if out[w].is_some() {
                        return Err(Error::NotAPartition(self.own.clone()));
                    }
                    out[w] = Some(v.clone());
                }
            }
        }
        (0..u.len())
            .map(|w| match out[w].take() {
                Some(v) => Ok(v),
                None if cond.contains(w) => Err(Error::NotAPartition(self.own.clone())),
                None => Ok(Affine::symbol(self.own.clone())),
            })
            .collect()
    }

    /// Worlds of `u` where the quantity is not void.
    pub fn support(&self, u: &Universe) -> Result<Vec<bool>> {
        let cond = u.truth_set(&self.conditioning)?;
        Ok((0..u.len()).map(|w| cond.contains(w)).collect())
    }

    /// Binds the operand previsions in `env`; the own prevision stays free.
    pub fn instantiate(&self, label: impl Into<String>, env: &Env) -> Result<Quantity> {
        let regions = self
            .regions
            .iter()
            .map(|(f, v)| Ok((f.clone(), v.eval(env)?)))
            .collect::<Result<Vec<(Formula, Rational)>>>()?;
        Ok(Quantity::new(label, self.conditioning.clone(), regions))
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Crq {
        Crq {
            conditioning: self.conditioning.clone(),
            regions: self.regions.iter().map(|(f, v)| (f.clone(), v.rename(map))).collect(),
            own: map.get(&self.own).cloned().unwrap_or_else(|| self.own.clone()),
        }
    }

    pub fn substitute(&self, env: &Env) -> Crq {
        Crq {
            conditioning: self.conditioning.clone(),
            regions: self.regions.iter().map(|(f, v)| (f.clone(), v.substitute(env))).collect(),
            own: self.own.clone(),
        }
    }
}

/// Probability mass on each world of a universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub mass: Vec<Rational>,
}

impl Distribution {
    /// Atoms independent with the given marginals; constraints must be absent.
    pub fn independent(u: &Universe, marginals: &[(&str, Rational)]) -> Result<Self> {
        let mut p = vec![one(); u.len()];
        for (atom, m) in marginals {
            let bit = 1u32 << u.atom_index(atom)?;
            for (i, w) in u.worlds().iter().enumerate() {
                p[i] *= if w & bit != 0 { m.clone() } else { one() - m };
            }
        }
        Ok(Distribution { mass: p })
    }

    /// Spreads each mass evenly over the worlds of the matching set.
    pub fn spread(u: &Universe, parts: &[(crate::event::WorldSet, Rational)]) -> Self {
        let mut mass = vec![zero(); u.len()];
        for (set, m) in parts {
            let k = set.count_ones(..);
            for w in set.ones() {
                mass[w] += m / Rational::from_integer(k.into());
            }
        }
        Distribution { mass }
    }

    pub fn probability(&self, u: &Universe, f: &Formula) -> Result<Rational> {
        Ok(u.truth_set(f)?.ones().map(|w| self.mass[w].clone()).fold(zero(), |a, b| a + b))
    }

    /// `P(E|H)`.
    pub fn conditional(&self, u: &Universe, ce: &ConditionalEvent) -> Result<Rational> {
        let h = self.probability(u, &ce.antecedent)?;
        if h == zero() {
            return Err(Error::ZeroMass);
        }
        Ok(self.probability(u, &ce.true_part())? / h)
    }
}

/// Prevision of `crq` under `dist`: the conditional expectation of its
/// values given the conditioning event, with operand previsions from `env`.
pub fn prevision_from_distribution(crq: &Crq, env: &Env, dist: &Distribution, u: &Universe) -> Result<Rational> {
    let values = crq.values(u)?;
    let support = crq.support(u)?;
    let mut total = zero();
    let mut mass = zero();
    for w in 0..u.len() {
        if support[w] {
            total += &dist.mass[w] * values[w].eval(env)?;
            mass += &dist.mass[w];
        }
    }
    if mass == zero() {
        return Err(Error::ZeroMass);
    }
    Ok(total / mass)
}
