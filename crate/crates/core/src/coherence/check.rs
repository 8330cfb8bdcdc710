use super::compile::{subfamilies, Compiled};
use super::{Assessment, Engine};
use crate::error::Result;
use crate::event::{ConstituentTable, Universe};
use crate::lp::{hull_membership, max_margin_separator, HullOutcome};
use crate::rational::Rational;

/// Constituents of the whole family with the point `Q_h` of each proper
/// constituent. `choices[k]` is the region of each member on the
/// constituent of `points[k]`; region `regions.len()` is the void one.
#[derive(Clone, Debug)]
pub struct PointTable {
    pub table: ConstituentTable,
    pub choices: Vec<Vec<usize>>,
    pub points: Vec<Vec<Rational>>,
}

/// Subfamily whose restricted assessment lies outside its hull, with the
/// maximum-margin separating stakes (one per subfamily member, `max |s| = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub subfamily: Vec<usize>,
    pub stakes: Vec<Rational>,
    pub margin: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceVerdict {
    pub coherent: bool,
    /// Convex weights on the proper constituents of the whole family.
    pub weights: Option<Vec<Rational>>,
    pub failure: Option<Failure>,
}

pub fn build_points(a: &Assessment, u: &Universe) -> Result<PointTable> {
    let c = Compiled::new(&a.members, u)?;
    let all: Vec<usize> = (0..a.len()).collect();
    let choices = c.choices(&all);
    let points = c.points(&all, &choices, &a.values);
    Ok(PointTable { table: c.table, choices, points })
}

/// Hull test on the whole family only. Necessary for coherence, not
/// sufficient.
pub fn check_hull(a: &Assessment, u: &Universe) -> Result<HullOutcome> {
    let t = build_points(a, u)?;
    hull_membership(&t.points, &a.values)
}

/// Decides coherence by hull tests on every nonempty subfamily, smallest
/// first. The first failing subfamily is reported.
pub fn check_coherence(a: &Assessment, u: &Universe) -> Result<CoherenceVerdict> {
    check_coherence_with(&Engine::default(), a, u)
}

pub(crate) fn restrict(values: &[Rational], subset: &[usize]) -> Vec<Rational> {
    subset.iter().map(|&i| values[i].clone()).collect()
}

pub(crate) fn check_coherence_with(engine: &Engine, a: &Assessment, u: &Universe) -> Result<CoherenceVerdict> {
    engine.admit(a.len())?;
    let c = Compiled::new(&a.members, u)?;
    let mut weights = None;
    for subset in subfamilies(a.len()) {
        let choices = c.choices(&subset);
        let points = c.points(&subset, &choices, &a.values);
        let p = restrict(&a.values, &subset);
        match hull_membership(&points, &p)? {
            HullOutcome::Inside(w) => {
                if subset.len() == a.len() {
                    weights = Some(w);
                }
            }
            HullOutcome::Outside(_) => {
                let (stakes, margin) = max_margin_separator(&points, &p)?.expect("point outside the hull is separable");
                return Ok(CoherenceVerdict {
                    coherent: false,
                    weights: None,
                    failure: Some(Failure { subfamily: subset, stakes, margin }),
                });
            }
        }
    }
    Ok(CoherenceVerdict { coherent: true, weights, failure: None })
}
