//! Interval and property tables for the five conjunction/disjunction pairs
//! on `A|H` and `B|K` over logically independent atoms.
//!
//! Interval rows are computed by extension bounds and compared with their
//! closed forms. Property cells for P1–P3 come from the symbolic checkers;
//! P4–P6 are searched on a grid of previsions, and every failing cell
//! carries a concrete counterexample.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::coherence::{Assessment, Endpoint, Engine, ExtensionInterval, Quantity};
use crate::compound::{
    compound_identity_check, gs_and, gs_and_crq, gs_inclusion_directions, gs_monotone, gs_or_crq, Affine,
    CompoundIdentity, Env,
};
use crate::error::Result;
use crate::event::Universe;
use crate::rational::{int, one, ratio, zero, Rational};
use crate::trivalent::{
    check_logical_property, trivalent_and, trivalent_or, ConditionalEvent, Kind, Property, Verdict,
};

/// A conjunction/disjunction pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    Trivalent(Kind),
    /// Conjunction and disjunction as conditional random quantities.
    Gs,
}

impl Pair {
    pub const ALL: [Pair; 5] = [
        Pair::Trivalent(Kind::K),
        Pair::Trivalent(Kind::L),
        Pair::Trivalent(Kind::B),
        Pair::Trivalent(Kind::S),
        Pair::Gs,
    ];
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::Trivalent(k) => write!(f, "{k}"),
            Pair::Gs => f.write_str("gs"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    Or,
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connective::And => "and",
            Connective::Or => "or",
        })
    }
}

/// Rows of the intervals table, conjunction before disjunction per pair.
pub fn rows() -> Vec<(Pair, Connective)> {
    Pair::ALL.iter().flat_map(|&p| [(p, Connective::And), (p, Connective::Or)]).collect()
}

/// Closed form of the coherent interval for the compound of `A|H`, `B|K`
/// with previsions `x`, `y` under logical independence.
pub fn closed_form(pair: Pair, conn: Connective, x: &Rational, y: &Rational) -> (Rational, Rational) {
    let min = x.min(y).clone();
    let max = x.max(y).clone();
    let frechet_lo = (x + y - one()).max(zero());
    let sum_hi = (x + y).min(one());
    match (pair, conn) {
        (Pair::Trivalent(Kind::K | Kind::L), Connective::And) => (zero(), min),
        (Pair::Trivalent(Kind::K | Kind::L), Connective::Or) => (max, one()),
        (Pair::Trivalent(Kind::B), _) => (zero(), one()),
        (Pair::Trivalent(Kind::S), Connective::And) => {
            let xy = x * y;
            let hi = if xy == one() { one() } else { (x + y - int(2) * &xy) / (one() - &xy) };
            (frechet_lo, hi)
        }
        (Pair::Trivalent(Kind::S), Connective::Or) => {
            let d = x + y - x * y;
            let lo = if d.is_zero() { zero() } else { x * y / d };
            (lo, sum_hi)
        }
        (Pair::Gs, Connective::And) => (frechet_lo, min),
        (Pair::Gs, Connective::Or) => (max, sum_hi),
    }
}

fn operands() -> (ConditionalEvent, ConditionalEvent) {
    (ConditionalEvent::parse("A | H").expect("fixed"), ConditionalEvent::parse("B | K").expect("fixed"))
}

fn free() -> Result<Universe> {
    Universe::new(&["A", "H", "B", "K"])
}

/// The compound as a quantity with `x`, `y` bound.
fn compound(pair: Pair, conn: Connective, x: &Rational, y: &Rational, u: &Universe) -> Result<Quantity> {
    let (a, b) = operands();
    let label = format!("{pair} {conn}");
    Ok(match pair {
        Pair::Trivalent(kind) => {
            let ce = match conn {
                Connective::And => trivalent_and(kind, &a, &b, u)?,
                Connective::Or => trivalent_or(kind, &a, &b, u)?,
            };
            Quantity::labelled_event(label, &ce)
        }
        Pair::Gs => {
            let (sx, sy) = (Affine::constant(x.clone()), Affine::constant(y.clone()));
            let crq = match conn {
                Connective::And => gs_and_crq(&a, &b, &sx, &sy, "z"),
                Connective::Or => gs_or_crq(&a, &b, &sx, &sy, "w"),
            };
            crq.instantiate(label, &Env::new())?
        }
    })
}

fn base(x: &Rational, y: &Rational) -> Result<Assessment> {
    let (a, b) = operands();
    Assessment::on_events(vec![(a, x.clone()), (b, y.clone())])
}

/// Coherent interval for the compound, by extension bounds.
pub fn lp_interval(
    engine: &Engine,
    pair: Pair,
    conn: Connective,
    x: &Rational,
    y: &Rational,
) -> Result<ExtensionInterval> {
    let u = free()?;
    engine.extension_bounds(&base(x, y)?, &compound(pair, conn, x, y, &u)?, &u)
}

/// Value of an endpoint, or its bracket's midpoint when not certified.
fn point(e: &Endpoint) -> Rational {
    e.value().cloned().unwrap_or_else(|| (&e.lo + &e.hi) / int(2))
}

/// The endpoint equals `v`, or brackets it within the tolerance.
fn matches(e: &Endpoint, v: &Rational) -> bool {
    match e.value() {
        Some(w) => w == v,
        None => &e.lo <= v && v <= &e.hi,
    }
}

#[derive(Clone, Debug)]
pub struct IntervalCell {
    pub pair: Pair,
    pub connective: Connective,
    pub x: Rational,
    pub y: Rational,
    pub closed: (Rational, Rational),
    pub computed: ExtensionInterval,
}

impl IntervalCell {
    pub fn agrees(&self) -> bool {
        matches(&self.computed.lower, &self.closed.0) && matches(&self.computed.upper, &self.closed.1)
    }

    /// Both endpoints certified exactly.
    pub fn exact(&self) -> bool {
        self.computed.exact().is_some()
    }
}

/// `0, step, 2 step, ..., 1`; `step` must divide 1.
pub fn grid(step: &Rational) -> Vec<Rational> {
    let n = (one() / step).to_integer();
    let n: i64 = n.try_into().unwrap_or(0);
    (0..=n).map(|i| ratio(i, n)).collect()
}

/// Memoized extension intervals over prevision pairs.
pub struct Sweep<'e> {
    engine: &'e Engine,
    cache: BTreeMap<(Pair, Connective, Rational, Rational), ExtensionInterval>,
}

impl<'e> Sweep<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        Sweep { engine, cache: BTreeMap::new() }
    }

    pub fn interval(&mut self, pair: Pair, conn: Connective, x: &Rational, y: &Rational) -> Result<ExtensionInterval> {
        let key = (pair, conn, x.clone(), y.clone());
        if let Some(i) = self.cache.get(&key) {
            return Ok(i.clone());
        }
        let i = lp_interval(self.engine, pair, conn, x, y)?;
        self.cache.insert(key, i.clone());
        Ok(i)
    }

    /// Every row of the intervals table at every point of `points × points`.
    pub fn interval_table(&mut self, points: &[Rational]) -> Result<Vec<IntervalCell>> {
        let mut out = Vec::new();
        for (pair, conn) in rows() {
            for x in points {
                for y in points {
                    out.push(IntervalCell {
                        pair,
                        connective: conn,
                        x: x.clone(),
                        y: y.clone(),
                        closed: closed_form(pair, conn, x, y),
                        computed: self.interval(pair, conn, x, y)?,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Rows of the property table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableProperty {
    P1,
    P2a,
    P2b,
    P2c,
    P3,
    /// `z ≤ x ≤ w` and `z ≤ y ≤ w`.
    P4,
    /// `w = x + y - z`.
    P5,
    /// Both Fréchet–Hoeffding bounds.
    P6,
}

impl TableProperty {
    pub const ALL: [TableProperty; 8] = [
        TableProperty::P1,
        TableProperty::P2a,
        TableProperty::P2b,
        TableProperty::P2c,
        TableProperty::P3,
        TableProperty::P4,
        TableProperty::P5,
        TableProperty::P6,
    ];
}

impl fmt::Display for TableProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// The two sides differ at `world`, in the given universe if not free.
    World { world: String, universe: Option<Vec<String>> },
    /// Coherent interval of the compound at `(x, y)` escaping `allowed`.
    Bounds {
        connective: Connective,
        x: Rational,
        y: Rational,
        interval: (Rational, Rational),
        allowed: (Rational, Rational),
    },
    /// `(x, y, z, w)` coherent with `w ≠ x + y - z`.
    SumRule { x: Rational, y: Rational, z: Rational, w: Rational },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::exact as e;
        match self {
            Counterexample::World { world, universe: None } => write!(f, "sides differ at {world}"),
            Counterexample::World { world, universe: Some(u) } => {
                write!(f, "sides differ at {world} when only {{{}}} are possible", u.join(", "))
            }
            Counterexample::Bounds { connective, x, y, interval, allowed } => write!(
                f,
                "at x = {}, y = {} the {connective} ranges over [{}, {}], not within [{}, {}]",
                e(x),
                e(y),
                e(&interval.0),
                e(&interval.1),
                e(&allowed.0),
                e(&allowed.1)
            ),
            Counterexample::SumRule { x, y, z, w } => write!(
                f,
                "(x, y, z, w) = ({}, {}, {}, {}) is coherent but x + y - z = {}",
                e(x),
                e(y),
                e(z),
                e(w),
                e(&(x + y - z))
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StarCell {
    pub property: TableProperty,
    pub pair: Pair,
    pub counterexample: Option<Counterexample>,
}

impl StarCell {
    pub fn star(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn from_verdict(v: Verdict) -> Option<Counterexample> {
    match v {
        Verdict::Holds => None,
        Verdict::Fails(w) => Some(Counterexample::World { world: w.world, universe: w.universe }),
    }
}

/// Identities of the gs pair hold off the all-void constituent; there they
/// only relate the previsions.
fn from_identities(ids: &[CompoundIdentity]) -> Result<Option<Counterexample>> {
    for &id in ids {
        if let Some((world, _)) = compound_identity_check(id)?.mismatch {
            return Ok(Some(Counterexample::World { world, universe: None }));
        }
    }
    Ok(None)
}

/// Universe where `A|H` is included in `B|K`.
pub fn inclusion_universe() -> Result<Universe> {
    free()?.impossible("A & H & ~K")?.impossible("A & H & ~B & K")?.impossible("~H & ~B & K")
}

fn symbolic(property: TableProperty, pair: Pair) -> Result<Option<Counterexample>> {
    let kind = match pair {
        Pair::Trivalent(kind) => kind,
        Pair::Gs => {
            use CompoundIdentity as I;
            return match property {
                TableProperty::P1 => {
                    let (f, r) = gs_inclusion_directions()?;
                    Ok(from_verdict(if f.holds() { r } else { f }))
                }
                TableProperty::P2a => from_identities(&[I::Split]),
                TableProperty::P2b => from_identities(&[I::UnitConditioning]),
                TableProperty::P2c => from_identities(&[I::ExcludedMiddle, I::UnitConditioning, I::Split]),
                TableProperty::P3 => from_identities(&[I::Decomposition, I::DecompositionRight]),
                _ => unreachable!("numeric properties are searched on the grid"),
            };
        }
    };
    let (p, u) = match property {
        TableProperty::P1 => (Property::P1, inclusion_universe()?),
        TableProperty::P2a => (Property::P2a, free()?),
        TableProperty::P2b => (Property::P2b, free()?),
        TableProperty::P2c => (Property::P2c, free()?),
        TableProperty::P3 => (Property::P3, free()?),
        _ => unreachable!("numeric properties are searched on the grid"),
    };
    Ok(from_verdict(check_logical_property(p, kind, &u)?.verdict))
}

fn interval_pair(i: &ExtensionInterval) -> (Rational, Rational) {
    (point(&i.lower), point(&i.upper))
}

/// Pairs of `points`, interior ones first: boundary counterexamples rest
/// on an operand with probability 0 or 1 and say less.
fn search_order(points: &[Rational]) -> Vec<(Rational, Rational)> {
    let edge = |v: &Rational| v.is_zero() || v == &one();
    let mut out: Vec<(Rational, Rational)> =
        points.iter().flat_map(|x| points.iter().map(move |y| (x.clone(), y.clone()))).collect();
    out.sort_by_key(|(x, y)| (edge(x) || edge(y), x.clone(), y.clone()));
    out
}

impl Sweep<'_> {
    fn bounds_violation(
        &mut self,
        pair: Pair,
        points: &[Rational],
        allowed: impl Fn(Connective, &Rational, &Rational) -> (Rational, Rational),
    ) -> Result<Option<Counterexample>> {
        for (x, y) in search_order(points) {
            for conn in [Connective::And, Connective::Or] {
                let i = self.interval(pair, conn, &x, &y)?;
                let (lo, hi) = allowed(conn, &x, &y);
                // Any coherent value outside [lo, hi] refutes the bound.
                let below = i.lower.value().map_or(i.lower.hi < lo, |v| v < &lo);
                let above = i.upper.value().map_or(i.upper.lo > hi, |v| v > &hi);
                if below || above {
                    return Ok(Some(Counterexample::Bounds {
                        connective: conn,
                        x,
                        y,
                        interval: interval_pair(&i),
                        allowed: (lo, hi),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// First `(x, y, z)` on the grid, with `z` an endpoint or the midpoint
    /// of its coherent interval, admitting a coherent `w ≠ x + y - z`.
    fn sum_rule_violation(&mut self, pair: Pair, points: &[Rational]) -> Result<Option<Counterexample>> {
        let u = free()?;
        for (x, y) in search_order(points) {
            let zi = self.interval(pair, Connective::And, &x, &y)?;
            let (lo, hi) = interval_pair(&zi);
            let mid = (&lo + &hi) / int(2);
            let mut zs = vec![lo, hi, mid];
            zs.dedup();
            for z in zs {
                let conj = compound(pair, Connective::And, &x, &y, &u)?;
                let family = base(&x, &y)?.extended(conj, z.clone());
                if !self.engine.check_coherence(&family, &u)?.coherent {
                    continue;
                }
                let wi = self.engine.extension_bounds(&family, &compound(pair, Connective::Or, &x, &y, &u)?, &u)?;
                let target = &x + &y - &z;
                let (wl, wh) = interval_pair(&wi);
                if !(matches(&wi.lower, &target) && matches(&wi.upper, &target)) {
                    let w = if wl != target { wl } else { wh };
                    return Ok(Some(Counterexample::SumRule { x, y, z, w }));
                }
            }
        }
        Ok(None)
    }

    /// One cell of the property table; numeric properties are searched on
    /// `points × points`.
    pub fn star(&mut self, property: TableProperty, pair: Pair, points: &[Rational]) -> Result<StarCell> {
        let counterexample = match property {
            TableProperty::P4 => {
                let found = self.bounds_violation(pair, points, |conn, x, y| match conn {
                    Connective::And => (zero(), x.min(y).clone()),
                    Connective::Or => (x.max(y).clone(), one()),
                })?;
                if found.is_none() && pair == Pair::Gs && !gs_monotone()? {
                    Some(Counterexample::World { world: "~H & ~K".into(), universe: None })
                } else {
                    found
                }
            }
            TableProperty::P5 => {
                let found = self.sum_rule_violation(pair, points)?;
                if found.is_none() && pair == Pair::Gs {
                    from_identities(&[CompoundIdentity::SumRule])?
                } else {
                    found
                }
            }
            TableProperty::P6 => self.bounds_violation(pair, points, |conn, x, y| match conn {
                Connective::And => ((x + y - one()).max(zero()), x.min(y).clone()),
                Connective::Or => (x.max(y).clone(), (x + y).min(one())),
            })?,
            _ => symbolic(property, pair)?,
        };
        Ok(StarCell { property, pair, counterexample })
    }

    /// The whole property table, row by row.
    pub fn star_table(&mut self, points: &[Rational]) -> Result<Vec<StarCell>> {
        let mut out = Vec::new();
        for property in TableProperty::ALL {
            for pair in Pair::ALL {
                out.push(self.star(property, pair, points)?);
            }
        }
        Ok(out)
    }
}

/// Search points for the property table: the grid of `step` together with
/// thirds, where several closed forms take simple non-dyadic values.
pub fn search_points(step: &Rational) -> Vec<Rational> {
    let mut p = grid(step);
    p.extend([ratio(1, 3), ratio(2, 3)]);
    p.sort();
    p.dedup();
    p
}

/// Coherent interval of the gs conjunction, for cross-checks.
pub fn gs_conjunction_interval(engine: &Engine, x: &Rational, y: &Rational) -> Result<ExtensionInterval> {
    let u = free()?;
    let (a, b) = operands();
    gs_and(&a, &b, x, y, &u)?.interval(engine, &u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spot_values() {
        let t = ratio(2, 3);
        assert_eq!(closed_form(Pair::Trivalent(Kind::S), Connective::And, &t, &t), (ratio(1, 3), ratio(4, 5)));
        assert_eq!(closed_form(Pair::Trivalent(Kind::S), Connective::Or, &t, &t), (ratio(1, 2), one()));
        assert_eq!(closed_form(Pair::Trivalent(Kind::S), Connective::And, &one(), &one()), (one(), one()));
        assert_eq!(closed_form(Pair::Trivalent(Kind::S), Connective::Or, &zero(), &zero()), (zero(), zero()));
        let (x, y) = (ratio(2, 5), ratio(7, 10));
        assert_eq!(closed_form(Pair::Gs, Connective::And, &x, &y), (ratio(1, 10), ratio(2, 5)));
        assert_eq!(closed_form(Pair::Trivalent(Kind::B), Connective::Or, &x, &y), (zero(), one()));
    }

    #[test]
    fn rows_match_closed_forms_on_a_coarse_grid() {
        let engine = Engine::default();
        let mut sweep = Sweep::new(&engine);
        let cells = sweep.interval_table(&grid(&ratio(1, 4))).unwrap();
        assert_eq!(cells.len(), 10 * 25);
        for c in &cells {
            assert!(
                c.agrees(),
                "{} {} at ({}, {}): {:?} vs {:?}",
                c.pair,
                c.connective,
                c.x,
                c.y,
                c.closed,
                c.computed
            );
            assert!(c.exact(), "{} {} at ({}, {}): {:?}", c.pair, c.connective, c.x, c.y, c.computed);
        }
    }

    #[test]
    fn grids() {
        assert_eq!(grid(&ratio(1, 4)), vec![zero(), ratio(1, 4), ratio(1, 2), ratio(3, 4), one()]);
        assert_eq!(search_points(&ratio(1, 2)), vec![zero(), ratio(1, 3), ratio(1, 2), ratio(2, 3), one()]);
    }
}
