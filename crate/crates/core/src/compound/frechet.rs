use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, one, Rational};

fn check(xs: &[Rational]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::Input("no previsions".into()));
    }
    if xs.iter().any(|x| x < &Rational::zero() || x > &one()) {
        return Err(Error::Input("prevision outside [0, 1]".into()));
    }
    Ok(())
}

/// Bounds on the prevision of the conjunction of members with previsions
/// `xs`: `max(Σx - n + 1, 0)` and `min x`.
pub fn frechet_bounds(xs: &[Rational]) -> Result<(Rational, Rational)> {
    check(xs)?;
    let n = int(xs.len() as i64);
    let sum: Rational = xs.iter().sum();
    let lower = (sum - n + one()).max(Rational::zero());
    Ok((lower, xs.iter().min().expect("nonempty").clone()))
}

/// Dual bounds for the disjunction: `max x` and `min(Σx, 1)`.
pub fn frechet_bounds_or(xs: &[Rational]) -> Result<(Rational, Rational)> {
    check(xs)?;
    let sum: Rational = xs.iter().sum();
    Ok((xs.iter().max().expect("nonempty").clone(), sum.min(one())))
}

/// Prevision of the disjunction from the previsions of all conjunctions of
/// nonempty subfamilies, keyed by sorted 0-based member indices.
pub fn inclusion_exclusion(n: usize, joint: &BTreeMap<Vec<usize>, Rational>) -> Result<Rational> {
    let mut total = Rational::zero();
    for m in 1u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
        let v = joint.get(&s).ok_or_else(|| Error::Input(format!("missing joint prevision for {s:?}")))?;
        if s.len() % 2 == 1 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// `P(E1) P(E2|E1) ⋯ P(En|E1⋯En-1)`.
pub fn chain_rule_prevision(factors: &[Rational]) -> Rational {
    factors.iter().fold(one(), |acc, f| acc * f)
}
