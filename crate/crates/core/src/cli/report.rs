use serde::{Deserialize, Serialize};

use crate::coherence::{Endpoint, ExtensionInterval};
use crate::error::{Error, Result};
use crate::rational::{decimal, exact, Rational};

/// Fractional digits of the decimal rendering.
pub const DECIMAL_DIGITS: usize = 12;

/// A rational as an exact string and a rounded decimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Number {
    pub exact: String,
    pub decimal: String,
}

impl From<&Rational> for Number {
    fn from(r: &Rational) -> Self {
        Number { exact: exact(r), decimal: decimal(r, DECIMAL_DIGITS) }
    }
}

impl Number {
    pub fn value(&self) -> Result<Rational> {
        crate::rational::parse(&self.exact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    /// Certified by a hull test; otherwise `lo` and `hi` bracket the bound.
    pub exact: bool,
    pub lo: Number,
    pub hi: Number,
}

impl From<&Endpoint> for Bound {
    fn from(e: &Endpoint) -> Self {
        Bound { exact: e.exact, lo: (&e.lo).into(), hi: (&e.hi).into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: Bound,
    pub upper: Bound,
}

impl From<&ExtensionInterval> for Interval {
    fn from(i: &ExtensionInterval) -> Self {
        Interval { lower: (&i.lower).into(), upper: (&i.upper).into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub constituent: String,
    pub weight: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Valued {
    pub event: String,
    pub value: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gain {
    pub constituent: String,
    pub gain: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DutchBookSection {
    pub margin: Number,
    pub stakes: Vec<Valued>,
    pub gains: Vec<Gain>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Loss {
    pub constituent: String,
    pub before: Number,
    pub after: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatorSection {
    pub values: Vec<Valued>,
    pub losses: Vec<Loss>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub target: String,
    pub interval: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntailmentSection {
    pub target: String,
    pub family: Vec<String>,
    pub entailed: bool,
    /// Independent characterizations, each of which must agree.
    pub absorbs: bool,
    pub below: bool,
    pub quasi_conjunction: bool,
    pub interval: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRow {
    pub op: String,
    pub kind: String,
    pub x: Number,
    pub y: Number,
    pub closed_lower: Number,
    pub closed_upper: Number,
    pub agrees: bool,
    pub interval: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarRow {
    pub property: String,
    pub op: String,
    pub star: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesSection {
    pub step: Number,
    pub intervals: Vec<IntervalRow>,
    pub properties: Vec<StarRow>,
}

/// Output of every command; absent sections are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_subfamily: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Weight>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dutch_book: Option<DutchBookSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dominator: Option<DominatorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entailment: Option<EntailmentSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<TablesSection>,
}

impl Report {
    pub fn new(command: &str, verdict: &str) -> Self {
        Report { command: command.into(), verdict: verdict.into(), ..Default::default() }
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Input(format!("cannot serialize report: {e}")))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Input(format!("cannot read report: {e}")))
    }
}
