//! Command-line front end: `check`, `dutchbook`, `bounds`, `tables` and
//! `entails` over assessment files, with TOML reports on stdout.
//!
//! Exit codes: 0 when the assessment is coherent or the property holds, 1
//! when it is not or does not, 2 for usage and input errors.

mod file;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use file::{AssessmentFile, Target};
pub use report::{
    Bound, BoundsSection, DominatorSection, DutchBookSection, EntailmentSection, Gain, Interval, IntervalRow, Loss,
    Number, Report, StarRow, TablesSection, Valued, Weight, DECIMAL_DIGITS,
};

use crate::coherence::{build_points, Assessment, Engine, Quantity};
use crate::compound::{
    conjunction_absorbs, conjunction_below, gs_and_crq, gs_or_crq, p_entails, quasi_conjunction_entails, Affine, Env,
};
use crate::error::{Error, Result};
use crate::rational::{exact, one, parse, Rational};
use crate::tables::{grid, search_points, Connective, Pair, Sweep};
use crate::trivalent::{trivalent_and, trivalent_or, Kind};

#[derive(Parser, Debug)]
#[command(name = "cohkit", version, about = "Coherence checks for conditional probability assessments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpArg {
    #[value(name = "K")]
    K,
    #[value(name = "L")]
    L,
    #[value(name = "B")]
    B,
    #[value(name = "S")]
    S,
    #[value(name = "gs")]
    Gs,
}

impl From<OpArg> for Pair {
    fn from(op: OpArg) -> Pair {
        match op {
            OpArg::K => Pair::Trivalent(Kind::K),
            OpArg::L => Pair::Trivalent(Kind::L),
            OpArg::B => Pair::Trivalent(Kind::B),
            OpArg::S => Pair::Trivalent(Kind::S),
            OpArg::Gs => Pair::Gs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    And,
    Or,
}

impl From<KindArg> for Connective {
    fn from(k: KindArg) -> Connective {
        match k {
            KindArg::And => Connective::And,
            KindArg::Or => Connective::Or,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide coherence; when incoherent, also give a Dutch book and a
    /// Brier-dominating assessment.
    Check { file: PathBuf },
    /// Stakes with a sure positive gain, if any.
    Dutchbook { file: PathBuf },
    /// Interval of coherent values for the file's target.
    Bounds {
        file: PathBuf,
        /// Operator pair for `target <a> and|or <b>`; the file's `option op` or gs by default.
        #[arg(long, value_enum)]
        op: Option<OpArg>,
        /// Overrides the target's connective.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Intervals table against closed forms, and the property table.
    Tables {
        /// Grid step: `1/N`, a decimal, or the integer `N` for `1/N`.
        #[arg(long, default_value = "1/10")]
        step: String,
    },
    /// p-entailment of a declared event by all other declared events.
    Entails {
        file: PathBuf,
        #[arg(long)]
        target: String,
    },
}

/// Report and exit code of one command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl Outcome {
    fn new(report: Report, ok: bool) -> Self {
        Outcome { report, code: if ok { 0 } else { 1 } }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let engine = Engine::from_env();
    let result = match cli.command {
        Command::Check { file } => load(&file).and_then(|f| cmd_check(&engine, &f)),
        Command::Dutchbook { file } => load(&file).and_then(|f| cmd_dutchbook(&engine, &f)),
        Command::Bounds { file, op, kind } => {
            load(&file).and_then(|f| cmd_bounds(&engine, &f, op.map(Pair::from), kind.map(Connective::from)))
        }
        Command::Tables { step } => parse_step(&step).and_then(|s| cmd_tables(&engine, &s)),
        Command::Entails { file, target } => load(&file).and_then(|f| cmd_entails(&engine, &f, &target)),
    };
    match result.and_then(|o| Ok((o.report.to_toml()?, o.code))) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<AssessmentFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    AssessmentFile::parse(&text)
}

/// `1/N`, a decimal, or an integer `N` meaning `1/N`.
pub fn parse_step(text: &str) -> Result<Rational> {
    let v = parse(text)?;
    let step = if v.is_integer() && v > one() { one() / v } else { v };
    let n = one() / &step;
    if step <= Rational::from_integer(0.into())
        || step > one()
        || !n.is_integer()
        || n > Rational::from_integer(100.into())
    {
        return Err(Error::Input(format!("step `{text}` must be 1/N with 1 <= N <= 100")));
    }
    Ok(step)
}

/// `name=value` for each member, `void` where it is void.
fn constituent_label(names: &[&str], a: &Assessment, members: &[usize], choice: &[usize]) -> String {
    members
        .iter()
        .zip(choice)
        .map(|(&i, &r)| {
            let v = a.members[i].regions.get(r).map_or("void".to_string(), |(_, v)| exact(v));
            format!("{}={v}", names[i])
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn names(a: &Assessment) -> Vec<&str> {
    a.members.iter().map(|q| q.label.as_str()).collect()
}

fn dutch_section(engine: &Engine, a: &Assessment, u: &crate::event::Universe) -> Result<Option<DutchBookSection>> {
    let names = names(a);
    Ok(engine.dutch_book(a, u)?.map(|book| DutchBookSection {
        margin: (&book.margin).into(),
        stakes: book
            .subfamily
            .iter()
            .zip(&book.stakes)
            .map(|(&i, s)| Valued { event: names[i].to_string(), value: s.into() })
            .collect(),
        gains: book
            .gains
            .iter()
            .map(|(ch, g)| Gain { constituent: constituent_label(&names, a, &book.subfamily, ch), gain: g.into() })
            .collect(),
    }))
}

fn cmd_check(engine: &Engine, f: &AssessmentFile) -> Result<Outcome> {
    let u = f.universe()?;
    let a = f.assessment()?;
    let names = names(&a);
    let all: Vec<usize> = (0..a.len()).collect();
    let verdict = engine.check_coherence(&a, &u)?;
    if verdict.coherent {
        let mut r = Report::new("check", "coherent");
        if let Some(w) = &verdict.weights {
            let t = build_points(&a, &u)?;
            r.weights = Some(
                t.choices
                    .iter()
                    .zip(w)
                    .map(|(ch, w)| Weight { constituent: constituent_label(&names, &a, &all, ch), weight: w.into() })
                    .collect(),
            );
        }
        return Ok(Outcome::new(r, true));
    }
    let mut r = Report::new("check", "incoherent");
    let failure = verdict.failure.expect("incoherent verdicts carry a failure");
    r.failing_subfamily = Some(failure.subfamily.iter().map(|&i| names[i].to_string()).collect());
    r.dutch_book = dutch_section(engine, &a, &u)?;
    if let Some(d) = engine.brier_dominator(&a, &u)? {
        let t = build_points(&a, &u)?;
        r.dominator = Some(DominatorSection {
            values: names
                .iter()
                .zip(&d.values)
                .map(|(n, v)| Valued { event: n.to_string(), value: v.into() })
                .collect(),
            losses: t
                .table
                .constituents
                .iter()
                .zip(&d.losses)
                .map(|(c, (b, af))| Loss {
                    constituent: constituent_label(&names, &a, &all, &c.choice),
                    before: b.into(),
                    after: af.into(),
                })
                .collect(),
        });
    }
    Ok(Outcome::new(r, false))
}

fn cmd_dutchbook(engine: &Engine, f: &AssessmentFile) -> Result<Outcome> {
    let u = f.universe()?;
    let a = f.assessment()?;
    let book = dutch_section(engine, &a, &u)?;
    let mut r = Report::new("dutchbook", if book.is_some() { "incoherent" } else { "coherent" });
    let ok = book.is_none();
    r.dutch_book = book;
    Ok(Outcome::new(r, ok))
}

fn option<T>(f: &AssessmentFile, key: &str, read: impl Fn(&str) -> Option<T>) -> Result<Option<T>> {
    match f.options.get(key) {
        None => Ok(None),
        Some(v) => read(v).map(Some).ok_or_else(|| Error::Input(format!("bad value `{v}` for option `{key}`"))),
    }
}

fn cmd_bounds(engine: &Engine, f: &AssessmentFile, op: Option<Pair>, kind: Option<Connective>) -> Result<Outcome> {
    let u = f.universe()?;
    let target = f.target.clone().ok_or_else(|| Error::Input("the file has no `target` line".into()))?;
    let op = match op {
        Some(op) => Some(op),
        None => option(f, "op", |v| OpArg::from_str(v, false).ok().map(Pair::from))?,
    };
    let kind = match kind {
        Some(k) => Some(k),
        None => option(f, "kind", |v| KindArg::from_str(v, true).ok().map(Connective::from))?,
    };
    let (label, quantity, exclude) = match &target {
        Target::Compound { left, connective, right } => {
            let conn = kind.unwrap_or(*connective);
            let op = op.unwrap_or(Pair::Gs);
            let (a, b) = (f.event(left)?, f.event(right)?);
            let label = format!("{left} {conn} {right} ({op})");
            let q = match op {
                Pair::Trivalent(k) => {
                    let ce = match conn {
                        Connective::And => trivalent_and(k, a, b, &u)?,
                        Connective::Or => trivalent_or(k, a, b, &u)?,
                    };
                    Quantity::labelled_event(label.clone(), &ce)
                }
                Pair::Gs => {
                    let value = |n: &str| {
                        f.values
                            .get(n)
                            .cloned()
                            .ok_or_else(|| Error::Input(format!("gs operands need values; `{n}` is not assessed")))
                    };
                    let (x, y) = (Affine::constant(value(left)?), Affine::constant(value(right)?));
                    let crq = match conn {
                        Connective::And => gs_and_crq(a, b, &x, &y, "z"),
                        Connective::Or => gs_or_crq(a, b, &x, &y, "w"),
                    };
                    crq.instantiate(label.clone(), &Env::new())?
                }
            };
            (label, q, None)
        }
        Target::Named(_) | Target::Expression(_) if op.is_some() || kind.is_some() => {
            return Err(Error::Input("--op and --kind apply to targets of the form `<a> and|or <b>`".into()));
        }
        Target::Named(n) => (n.clone(), Quantity::labelled_event(n.clone(), f.event(n)?), Some(n.clone())),
        Target::Expression(ce) => (ce.to_string(), Quantity::event(ce), None),
    };
    let mut base = f.assessment()?;
    if let Some(n) = exclude {
        let keep: Vec<usize> = (0..base.len()).filter(|&i| base.members[i].label != n).collect();
        base = Assessment::new(
            keep.iter().map(|&i| base.members[i].clone()).collect(),
            keep.iter().map(|&i| base.values[i].clone()).collect(),
        )?;
    }
    match engine.extension_bounds(&base, &quantity, &u) {
        Ok(i) => {
            let mut r = Report::new("bounds", "coherent");
            r.bounds = Some(BoundsSection { target: label, interval: (&i).into() });
            Ok(Outcome::new(r, true))
        }
        Err(Error::Incoherent) => Ok(Outcome::new(Report::new("bounds", "incoherent"), false)),
        Err(e) => Err(e),
    }
}

fn cmd_tables(engine: &Engine, step: &Rational) -> Result<Outcome> {
    let mut sweep = Sweep::new(engine);
    let cells = sweep.interval_table(&grid(step))?;
    let stars = sweep.star_table(&search_points(step))?;
    let agree = cells.iter().all(|c| c.agrees());
    let mut r = Report::new("tables", if agree { "consistent" } else { "mismatch" });
    r.tables = Some(TablesSection {
        step: step.into(),
        intervals: cells
            .iter()
            .map(|c| IntervalRow {
                op: c.pair.to_string(),
                kind: c.connective.to_string(),
                x: (&c.x).into(),
                y: (&c.y).into(),
                closed_lower: (&c.closed.0).into(),
                closed_upper: (&c.closed.1).into(),
                agrees: c.agrees(),
                interval: (&c.computed).into(),
            })
            .collect(),
        properties: stars
            .iter()
            .map(|s| StarRow {
                property: s.property.to_string(),
                op: s.pair.to_string(),
                star: s.star(),
                counterexample: s.counterexample.as_ref().map(|c| c.to_string()),
            })
            .collect(),
    });
    Ok(Outcome::new(r, agree))
}

fn cmd_entails(engine: &Engine, f: &AssessmentFile, target: &str) -> Result<Outcome> {
    let u = f.universe()?;
    let t = f.event(target)?;
    let (names, family): (Vec<String>, Vec<_>) =
        f.events.iter().filter(|(n, _)| n != target).map(|(n, ce)| (n.clone(), ce.clone())).unzip();
    if family.is_empty() {
        return Err(Error::Input("no events besides the target".into()));
    }
    match p_entails(engine, &family, t, &u) {
        Ok(e) => {
            let mut r = Report::new("entails", if e.entailed { "entailed" } else { "not entailed" });
            r.entailment = Some(EntailmentSection {
                target: target.to_string(),
                family: names,
                entailed: e.entailed,
                absorbs: conjunction_absorbs(&family, t, &u)?,
                below: conjunction_below(&family, t, &u)?,
                quasi_conjunction: quasi_conjunction_entails(&family, t, &u)?,
                interval: (&e.interval).into(),
            });
            Ok(Outcome::new(r, e.entailed))
        }
        Err(Error::NotPConsistent) => Ok(Outcome::new(Report::new("entails", "not p-consistent"), false)),
        Err(e) => Err(e),
    }
}
