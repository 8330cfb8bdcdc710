use std::collections::BTreeMap;

use crate::coherence::{Assessment, Quantity};
use crate::error::{Error, Result};
use crate::event::{parse_formula, Formula, Universe};
use crate::rational::{parse, Rational};
use crate::tables::Connective;
use crate::trivalent::ConditionalEvent;

/// What a `target` line asks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// A declared event.
    Named(String),
    /// Conjunction or disjunction of two declared events.
    Compound { left: String, connective: Connective, right: String },
    /// A conditional event written inline.
    Expression(ConditionalEvent),
}

/// Parsed assessment file.
///
/// ```text
/// # comment
/// atoms A B H K
/// constraint A & H & ~K = FALSE
/// event a = A given H
/// assess a = 0.4
/// target a and b
/// option op = S
/// ```
#[derive(Clone, Debug, Default)]
pub struct AssessmentFile {
    pub atoms: Vec<String>,
    pub constraints: Vec<(Formula, bool)>,
    /// Declared events in file order.
    pub events: Vec<(String, ConditionalEvent)>,
    pub values: BTreeMap<String, Rational>,
    pub target: Option<Target>,
    /// `option key = value` lines, for parameters the command line may omit.
    pub options: BTreeMap<String, String>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !matches!(s, "TRUE" | "FALSE" | "given" | "and" | "or")
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.number, column: column + 1, message: message.into() }
    }

    /// Column of `part`, a subslice of the line.
    fn column(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize
    }

    /// Re-anchors an error from parsing `part` at its place in the line.
    fn locate(&self, part: &str, e: Error) -> Error {
        match e {
            Error::Syntax { offset, message } => self.err(self.column(part) + offset, message),
            other => self.err(self.column(part), other.to_string()),
        }
    }

    /// `name = rest`, both trimmed.
    fn binding<'b>(&self, body: &'b str) -> Result<(&'b str, &'b str)> {
        let Some(eq) = body.find('=') else {
            return Err(self.err(self.column(body), "expected `=`"));
        };
        let name = body[..eq].trim();
        let rest = body[eq + 1..].trim();
        if !is_name(name) {
            return Err(self.err(self.column(body), format!("expected a name, found `{name}`")));
        }
        if rest.is_empty() {
            return Err(self.err(self.column(body) + eq + 1, "missing value after `=`"));
        }
        Ok((name, rest))
    }
}

impl AssessmentFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut f = AssessmentFile::default();
        let mut target_line = None;
        for (i, raw) in text.lines().enumerate() {
            let code = raw.split('#').next().unwrap_or("");
            let line = Line { number: i + 1, text: raw };
            let trimmed = code.trim();
            if trimmed.is_empty() {
                continue;
            }
            let keyword = trimmed.split_whitespace().next().expect("nonempty");
            let body = trimmed[keyword.len()..].trim();
            match keyword {
                "atoms" => {
                    if !f.atoms.is_empty() {
                        return Err(line.err(line.column(trimmed), "atoms declared twice"));
                    }
                    for a in body.split_whitespace() {
                        if !is_name(a) {
                            return Err(line.err(line.column(a), format!("bad atom name `{a}`")));
                        }
                        f.atoms.push(a.to_string());
                    }
                    if f.atoms.is_empty() {
                        return Err(line.err(line.column(trimmed), "no atoms listed"));
                    }
                }
                "constraint" => {
                    let Some(eq) = body.rfind('=') else {
                        return Err(line.err(line.column(body), "expected `<formula> = TRUE|FALSE`"));
                    };
                    let formula = body[..eq].trim();
                    let value = body[eq + 1..].trim();
                    let value = match value {
                        "TRUE" => true,
                        "FALSE" => false,
                        _ => return Err(line.err(line.column(value), "constraint value must be TRUE or FALSE")),
                    };
                    f.constraints.push((parse_formula(formula).map_err(|e| line.locate(formula, e))?, value));
                }
                "event" => {
                    let (name, rest) = line.binding(body)?;
                    if f.events.iter().any(|(n, _)| n == name) {
                        return Err(line.err(line.column(name), format!("event `{name}` declared twice")));
                    }
                    let ce = ConditionalEvent::parse(rest).map_err(|e| line.locate(rest, e))?;
                    f.events.push((name.to_string(), ce));
                }
                "assess" => {
                    let (name, rest) = line.binding(body)?;
                    if !f.events.iter().any(|(n, _)| n == name) {
                        return Err(line.err(line.column(name), format!("unknown event `{name}`")));
                    }
                    let v = parse(rest).map_err(|_| line.err(line.column(rest), format!("bad number `{rest}`")))?;
                    if f.values.insert(name.to_string(), v).is_some() {
                        return Err(line.err(line.column(name), format!("event `{name}` assessed twice")));
                    }
                }
                "target" => {
                    if f.target.is_some() {
                        return Err(line.err(line.column(trimmed), "target given twice"));
                    }
                    if body.is_empty() {
                        return Err(line.err(line.column(trimmed), "empty target"));
                    }
                    target_line = Some((i + 1, body.to_string(), line.column(body)));
                    f.target = Some(Target::Named(String::new()));
                }
                "option" => {
                    let (name, rest) = line.binding(body)?;
                    f.options.insert(name.to_string(), rest.to_string());
                }
                other => return Err(line.err(line.column(keyword), format!("unknown statement `{other}`"))),
            }
        }
        if f.atoms.is_empty() {
            return Err(Error::Parse { line: 1, column: 1, message: "missing `atoms` line".into() });
        }
        // Targets may name events declared after them.
        if let Some((number, body, column)) = target_line {
            f.target = Some(f.resolve_target(&body).map_err(|e| match e {
                Error::Syntax { offset, message } => {
                    Error::Parse { line: number, column: column + offset + 1, message }
                }
                Error::Parse { .. } => e,
                other => Error::Parse { line: number, column: column + 1, message: other.to_string() },
            })?);
        }
        Ok(f)
    }

    fn resolve_target(&self, body: &str) -> Result<Target> {
        let words: Vec<&str> = body.split_whitespace().collect();
        let known = |n: &str| self.events.iter().any(|(e, _)| e == n);
        match words.as_slice() {
            [name] if known(name) => Ok(Target::Named(name.to_string())),
            [l, c @ ("and" | "or"), r] => {
                for n in [l, r] {
                    if !known(n) {
                        return Err(Error::Input(format!("unknown event `{n}`")));
                    }
                }
                let connective = if *c == "and" { Connective::And } else { Connective::Or };
                Ok(Target::Compound { left: l.to_string(), connective, right: r.to_string() })
            }
            _ => Ok(Target::Expression(ConditionalEvent::parse(body)?)),
        }
    }

    pub fn universe(&self) -> Result<Universe> {
        let mut u = Universe::new(&self.atoms)?;
        for (f, v) in &self.constraints {
            u = u.constrain(f.clone(), *v)?;
        }
        for (name, ce) in &self.events {
            ce.validate(&u).map_err(|e| Error::Input(format!("event `{name}`: {e}")))?;
        }
        Ok(u)
    }

    pub fn event(&self, name: &str) -> Result<&ConditionalEvent> {
        self.events
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ce)| ce)
            .ok_or_else(|| Error::Input(format!("unknown event `{name}`")))
    }

    /// Assessed events, in declaration order.
    pub fn assessed(&self) -> Vec<(&str, &ConditionalEvent, &Rational)> {
        self.events.iter().filter_map(|(n, ce)| self.values.get(n).map(|v| (n.as_str(), ce, v))).collect()
    }

    pub fn assessment(&self) -> Result<Assessment> {
        let items = self.assessed();
        if items.is_empty() {
            return Err(Error::Input("no assessed events".into()));
        }
        let (members, values) =
            items.into_iter().map(|(n, ce, v)| (Quantity::labelled_event(n, ce), v.clone())).unzip();
        Assessment::new(members, values)
    }
}
