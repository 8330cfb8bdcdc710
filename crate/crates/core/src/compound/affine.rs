use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{exact, Rational};

/// Values bound to prevision symbols.
pub type Env = BTreeMap<String, Rational>;

/// `constant + Σ coeff · symbol`, with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub constant: Rational,
    pub terms: BTreeMap<String, Rational>,
}

impl Affine {
    pub fn constant(c: Rational) -> Self {
        Affine { constant: c, terms: BTreeMap::new() }
    }

    pub fn symbol(name: impl Into<String>) -> Self {
        Affine { constant: Rational::zero(), terms: BTreeMap::from([(name.into(), Rational::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        self.terms.is_empty().then_some(&self.constant)
    }

    pub fn coefficient(&self, name: &str) -> Rational {
        self.terms.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &String> {
        self.terms.keys()
    }

    fn clean(mut self) -> Self {
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    /// Replaces bound symbols by their values; unbound ones stay symbolic.
    pub fn substitute(&self, env: &Env) -> Affine {
        let mut out = Affine::constant(self.constant.clone());
        for (s, c) in &self.terms {
            match env.get(s) {
                Some(v) => out.constant += c * v,
                None => {
                    out.terms.insert(s.clone(), c.clone());
                }
            }
        }
        out
    }

    pub fn eval(&self, env: &Env) -> Result<Rational> {
        let v = self.substitute(env);
        match v.terms.keys().next() {
            Some(s) => Err(Error::UnboundSymbol(s.clone())),
            None => Ok(v.constant),
        }
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Affine {
        let mut out = Affine::constant(self.constant.clone());
        for (s, c) in &self.terms {
            let name = map.get(s).cloned().unwrap_or_else(|| s.clone());
            *out.terms.entry(name).or_insert_with(Rational::zero) += c;
        }
        out.clean()
    }

    /// Minimum over the box where each free symbol ranges over `[0, 1]`.
    pub fn box_min(&self) -> Rational {
        self.terms.values().filter(|c| c.is_negative()).fold(self.constant.clone(), |acc, c| acc + c)
    }
}

impl From<Rational> for Affine {
    fn from(c: Rational) -> Self {
        Affine::constant(c)
    }
}

impl Add for &Affine {
    type Output = Affine;
    fn add(self, rhs: &Affine) -> Affine {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (s, c) in &rhs.terms {
            *out.terms.entry(s.clone()).or_insert_with(Rational::zero) += c;
        }
        out.clean()
    }
}

impl Sub for &Affine {
    type Output = Affine;
    fn sub(self, rhs: &Affine) -> Affine {
        self + &(-rhs)
    }
}

impl Neg for &Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        Affine { constant: -&self.constant, terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }
}

impl Mul<&Affine> for &Rational {
    type Output = Affine;
    fn mul(self, rhs: &Affine) -> Affine {
        Affine { constant: self * &rhs.constant, terms: rhs.terms.iter().map(|(s, c)| (s.clone(), self * c)).collect() }
            .clean()
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.terms.is_empty() {
            write!(f, "{}", exact(&self.constant))?;
            first = false;
        }
        for (s, c) in &self.terms {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{}*{s}", exact(&mag))?;
            }
            first = false;
        }
        Ok(())
    }
}
