use num_traits::{One, Signed, Zero};

use super::check::{check_coherence_with, restrict};
use super::compile::{subfamilies, Compiled};
use super::{Assessment, Engine, Quantity};
use crate::error::{Error, Result};
use crate::event::Universe;
use crate::lp::{hull_membership, solve, HullOutcome, LinearProgram, LpOutcome, Relation};
use crate::rational::{dyadic, Rational};

/// Brackets are refined until narrower than `2^-TOLERANCE_BITS`.
pub const TOLERANCE_BITS: u32 = 40;

/// Closed bracket `[lo, hi]` containing an endpoint of the coherent
/// interval. When `exact`, `lo == hi` is the endpoint itself: it passed an
/// exact coherence test and every value beyond it is certified incoherent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: bool,
}

impl Endpoint {
    fn exact(v: Rational) -> Self {
        Endpoint { lo: v.clone(), hi: v, exact: true }
    }

    pub fn value(&self) -> Option<&Rational> {
        self.exact.then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Coherent values of a new member form the closed interval between the two
/// endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionInterval {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl ExtensionInterval {
    /// Both endpoints exact: `(lower, upper)`.
    pub fn exact(&self) -> Option<(&Rational, &Rational)> {
        Some((self.lower.value()?, self.upper.value()?))
    }
}

/// Outcome of a coherence test at one target value.
enum Test {
    Coherent,
    /// Every value below the bound is incoherent.
    Above(Rational),
    /// Every value above the bound is incoherent.
    Below(Rational),
}

struct Prober {
    compiled: Compiled,
    subsets: Vec<(Vec<usize>, Vec<Vec<usize>>)>,
    values: Vec<Rational>,
}

impl Prober {
    fn target(&self) -> usize {
        self.values.len() - 1
    }

    fn test(&mut self, t: &Rational) -> Result<Test> {
        let n = self.target();
        self.values[n] = t.clone();
        for (subset, choices) in &self.subsets {
            let points = self.compiled.points(subset, choices, &self.values);
            let p = restrict(&self.values, subset);
            if let HullOutcome::Outside(s) = hull_membership(&points, &p)? {
                return self.bound(subset, choices, &s);
            }
        }
        Ok(Test::Coherent)
    }

    /// The stakes `s` keep every gain positive on a half-line of target
    /// values: gains are affine in the target value with common slope `-s_t`
    /// wherever the target is not void, and constant elsewhere. The sign of
    /// `s_t` fixes the side; the other stakes are then re-chosen by an exact
    /// LP to push the half-line as far as this subfamily allows, so each
    /// subfamily yields at most one jump.
    fn bound(&self, subset: &[usize], choices: &[Vec<usize>], s: &[Rational]) -> Result<Test> {
        let n = self.target();
        let last = subset.len() - 1;
        let st = &s[last];
        if st.is_zero() {
            return Err(Error::Incoherent);
        }
        let above = st.is_positive();
        // With s_t = +1 the half-line is t < min_h (q_th + rest_h); with
        // s_t = -1 it is t > max_h (q_th - rest_h). rest_h >= 0 where the
        // target is void. Variables: the other stakes, then beta.
        let others = last;
        let mut lp = LinearProgram::new(others + 1);
        for v in 0..=others {
            lp.set_free(v);
        }
        let mut objective = vec![Rational::zero(); others + 1];
        objective[others] = Rational::one();
        if above {
            lp.maximize(objective);
        } else {
            lp.minimize(objective);
        }
        for ch in choices {
            let mut rest = vec![Rational::zero(); others + 1];
            for (k, (&i, &ri)) in subset[..last].iter().zip(&ch[..last]).enumerate() {
                if !self.compiled.is_void(i, ri) {
                    rest[k] = &self.compiled.values[i][ri] - &self.values[i];
                }
            }
            let r = ch[last];
            if self.compiled.is_void(n, r) {
                lp.constrain(rest, Relation::Ge, Rational::zero());
                continue;
            }
            let q = self.compiled.values[n][r].clone();
            if above {
                // beta - rest <= q
                let mut row: Vec<Rational> = rest.into_iter().map(|v| -v).collect();
                row[others] = Rational::one();
                lp.constrain(row, Relation::Le, q);
            } else {
                // beta + rest >= q
                rest[others] = Rational::one();
                lp.constrain(rest, Relation::Ge, q);
            }
        }
        match solve(&lp)? {
            LpOutcome::Optimal { value, .. } => Ok(if above { Test::Above(value) } else { Test::Below(value) }),
            // Every target value is incoherent.
            LpOutcome::Unbounded { .. } => Err(Error::Incoherent),
            LpOutcome::Infeasible { .. } => unreachable!("the separating stakes are feasible"),
        }
    }
}

/// Interval of coherent values for `target` given a coherent assessment.
pub fn extension_bounds(a: &Assessment, target: &Quantity, u: &Universe) -> Result<ExtensionInterval> {
    extension_bounds_with(&Engine::default(), a, target, u)
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

pub(crate) fn extension_bounds_with(
    engine: &Engine,
    a: &Assessment,
    target: &Quantity,
    u: &Universe,
) -> Result<ExtensionInterval> {
    engine.admit(a.len() + 1)?;
    if !check_coherence_with(engine, a, u)?.coherent {
        return Err(Error::Incoherent);
    }
    let n = a.len();
    let extended = a.extended(target.clone(), Rational::zero());
    let compiled = Compiled::new(&extended.members, u)?;
    // Subfamilies without the target are coherent already.
    let subsets: Vec<(Vec<usize>, Vec<Vec<usize>>)> = subfamilies(n + 1)
        .into_iter()
        .filter(|s| s.last() == Some(&n))
        .map(|s| {
            let c = compiled.choices(&s);
            (s, c)
        })
        .collect();

    // The target alone confines its value to the range of its values.
    let present: Vec<&Rational> = compiled
        .table
        .constituents
        .iter()
        .filter(|c| !compiled.is_void(n, c.choice[n]))
        .map(|c| &compiled.values[n][c.choice[n]])
        .collect();
    let mut lo = present.iter().copied().min().ok_or(Error::EmptyConditioning(target.label.clone()))?.clone();
    let mut hi = present.iter().copied().max().expect("nonempty").clone();

    let mut p = Prober { compiled, subsets, values: extended.values };
    let tol = dyadic(TOLERANCE_BITS);

    // Find one coherent value, probing the moved bound first and the
    // midpoint when that fails.
    let mut probe = half(&lo, &hi);
    let mut at_bound = false;
    let inside = loop {
        let moved = match p.test(&probe)? {
            Test::Coherent => break Some(probe),
            Test::Above(b) => {
                lo = lo.max(b);
                lo.clone()
            }
            Test::Below(b) => {
                hi = hi.min(b);
                hi.clone()
            }
        };
        if lo > hi {
            return Err(Error::Incoherent);
        }
        if &hi - &lo < tol {
            if matches!(p.test(&lo)?, Test::Coherent) {
                break Some(lo.clone());
            }
            if matches!(p.test(&hi)?, Test::Coherent) {
                break Some(hi.clone());
            }
            break None;
        }
        probe = if at_bound { half(&lo, &hi) } else { moved };
        at_bound = !at_bound;
    };
    let Some(inside) = inside else {
        let e = Endpoint { lo, hi, exact: false };
        return Ok(ExtensionInterval { lower: e.clone(), upper: e });
    };

    let lower = {
        let (mut lo, mut c) = (lo, inside.clone());
        loop {
            if lo == c {
                break Endpoint::exact(c);
            }
            match p.test(&lo)? {
                Test::Coherent => break Endpoint::exact(lo),
                Test::Above(b) if b <= c => lo = b,
                _ => return Err(Error::Incoherent),
            }
            if lo == c {
                break Endpoint::exact(c);
            }
            if &c - &lo < tol {
                break Endpoint { lo, hi: c, exact: false };
            }
            let m = half(&lo, &c);
            match p.test(&m)? {
                Test::Coherent => c = m,
                Test::Above(b) if b <= c => lo = b.max(m),
                _ => return Err(Error::Incoherent),
            }
            if lo == c {
                break Endpoint::exact(c);
            }
            if &c - &lo < tol {
                break Endpoint { lo, hi: c, exact: false };
            }
        }
    };
    let upper = {
        let (mut c, mut hi) = (inside, hi);
        loop {
            if hi == c {
                break Endpoint::exact(c);
            }
            match p.test(&hi)? {
                Test::Coherent => break Endpoint::exact(hi),
                Test::Below(b) if b >= c => hi = b,
                _ => return Err(Error::Incoherent),
            }
            if hi == c {
                break Endpoint::exact(c);
            }
            if &hi - &c < tol {
                break Endpoint { lo: c, hi, exact: false };
            }
            let m = half(&c, &hi);
            match p.test(&m)? {
                Test::Coherent => c = m,
                Test::Below(b) if b >= c => hi = b.min(m),
                _ => return Err(Error::Incoherent),
            }
            if hi == c {
                break Endpoint::exact(c);
            }
            if &hi - &c < tol {
                break Endpoint { lo: c, hi, exact: false };
            }
        }
    };
    Ok(ExtensionInterval { lower, upper })
}
