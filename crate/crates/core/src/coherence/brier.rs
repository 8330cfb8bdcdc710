use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::check::{check_coherence_with, restrict};
use super::compile::Compiled;
use super::projection::{exact_corral_weights, min_norm_point};
use super::{Assessment, Engine};
use crate::error::{Error, Result};
use crate::event::{Constituent, Universe};
use crate::rational::{approximate, to_f64, zero, Rational};

/// Assessment whose Brier loss is never larger, and somewhere smaller, than
/// the original's on every constituent of the whole family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominator {
    /// Subfamily whose values were moved.
    pub subfamily: Vec<usize>,
    pub values: Vec<Rational>,
    /// Losses before and after, one per constituent of the whole family in
    /// table order.
    pub losses: Vec<(Rational, Rational)>,
}

/// `Σ (q_i - p_i)²` over the members not void on `constituent`.
pub fn penalty_loss(a: &Assessment, constituent: &Constituent) -> Result<Rational> {
    if constituent.choice.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: constituent.choice.len() });
    }
    Ok(constituent
        .choice
        .iter()
        .enumerate()
        .filter_map(|(i, &r)| a.members[i].regions.get(r).map(|(_, q)| q - &a.values[i]))
        .fold(zero(), |acc, d| acc + &d * &d))
}

/// Dominating assessment obtained by projecting the first incoherent
/// subfamily's values onto its hull; `None` when coherent.
pub fn brier_dominator(a: &Assessment, u: &Universe) -> Result<Option<Dominator>> {
    brier_dominator_with(&Engine::default(), a, u)
}

fn losses(a: &Assessment, b: &Assessment, c: &Compiled) -> Result<Option<Vec<(Rational, Rational)>>> {
    let mut out = Vec::with_capacity(c.table.len());
    let mut strict = false;
    for k in &c.table.constituents {
        let before = penalty_loss(a, k)?;
        let after = penalty_loss(b, k)?;
        if after > before {
            return Ok(None);
        }
        strict |= after < before;
        out.push((before, after));
    }
    Ok(strict.then_some(out))
}

pub(crate) fn brier_dominator_with(engine: &Engine, a: &Assessment, u: &Universe) -> Result<Option<Dominator>> {
    let verdict = check_coherence_with(engine, a, u)?;
    let Some(failure) = verdict.failure else { return Ok(None) };
    let s = failure.subfamily;
    let c = Compiled::new(&a.members, u)?;
    let choices = c.choices(&s);
    let p = restrict(&a.values, &s);
    let shifted: Vec<Vec<Rational>> =
        c.points(&s, &choices, &a.values).into_iter().map(|q| q.iter().zip(&p).map(|(x, y)| x - y).collect()).collect();
    let float: Vec<Vec<f64>> = shifted.iter().map(|q| q.iter().map(to_f64).collect()).collect();
    let (corral, weights) = min_norm_point(&float);

    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    if let Some(w) = exact_corral_weights(&shifted, &corral) {
        let v = (0..p.len())
            .map(|d| &p[d] + corral.iter().zip(&w).map(|(&i, wi)| wi * &shifted[i][d]).fold(zero(), |acc, x| acc + x))
            .collect();
        candidates.push(v);
    }
    let target: Vec<f64> = (0..p.len())
        .map(|d| to_f64(&p[d]) + corral.iter().zip(&weights).map(|(&i, wi)| wi * float[i][d]).sum::<f64>())
        .collect();
    for bits in [8u32, 16, 24, 32, 48] {
        let cap = BigInt::one() << bits as usize;
        if let Some(v) = target.iter().map(|&x| approximate(x, &cap)).collect::<Option<Vec<_>>>() {
            candidates.push(v);
        }
    }
    for v in candidates {
        let mut values = a.values.clone();
        for (&i, x) in s.iter().zip(&v) {
            values[i] = x.clone();
        }
        if values == a.values {
            continue;
        }
        let b = a.with_values(values)?;
        if let Some(l) = losses(a, &b, &c)? {
            debug_assert!(l.iter().all(|(x, y)| y <= x) && l.iter().any(|(x, _)| !x.is_zero()));
            return Ok(Some(Dominator { subfamily: s, values: b.values, losses: l }));
        }
    }
    Err(Error::Projection)
}
