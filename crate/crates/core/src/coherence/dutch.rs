use super::check::{check_coherence_with, restrict};
use super::compile::Compiled;
use super::{Assessment, Engine};
use crate::error::{Error, Result};
use crate::event::{Constituent, Universe};
use crate::rational::{zero, Rational};

/// Stakes on a subfamily whose random gain is at least `margin > 0` on every
/// constituent where some staked member is not void.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DutchBook {
    pub subfamily: Vec<usize>,
    pub stakes: Vec<Rational>,
    pub margin: Rational,
    /// Gain on each proper constituent of the subfamily, keyed by choice vector.
    pub gains: Vec<(Vec<usize>, Rational)>,
}

fn value_at(a: &Assessment, member: usize, region: usize) -> Option<&Rational> {
    a.members[member].regions.get(region).map(|(_, v)| v)
}

/// `Σ_i s_i (q_i - p_i)` over the members not void on `constituent`, which
/// must come from a table of the whole family. Zero on the all-void one.
pub fn random_gain(a: &Assessment, stakes: &[Rational], constituent: &Constituent) -> Result<Rational> {
    if stakes.len() != a.len() || constituent.choice.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: stakes.len().min(constituent.choice.len()) });
    }
    Ok(constituent
        .choice
        .iter()
        .enumerate()
        .filter_map(|(i, &r)| value_at(a, i, r).map(|q| &stakes[i] * (q - &a.values[i])))
        .fold(zero(), |acc, g| acc + g))
}

/// Dutch book from the first incoherent subfamily, `None` when coherent.
pub fn dutch_book(a: &Assessment, u: &Universe) -> Result<Option<DutchBook>> {
    dutch_book_with(&Engine::default(), a, u)
}

pub(crate) fn dutch_book_with(engine: &Engine, a: &Assessment, u: &Universe) -> Result<Option<DutchBook>> {
    let verdict = check_coherence_with(engine, a, u)?;
    let Some(f) = verdict.failure else { return Ok(None) };
    let c = Compiled::new(&a.members, u)?;
    let choices = c.choices(&f.subfamily);
    let points = c.points(&f.subfamily, &choices, &a.values);
    let p = restrict(&a.values, &f.subfamily);
    let gains = choices
        .into_iter()
        .zip(points)
        .map(|(ch, q)| {
            let g = q.iter().zip(&p).zip(&f.stakes).map(|((qi, pi), si)| si * (qi - pi)).fold(zero(), |acc, x| acc + x);
            (ch, g)
        })
        .collect();
    Ok(Some(DutchBook { subfamily: f.subfamily, stakes: f.stakes, margin: f.margin, gains }))
}
