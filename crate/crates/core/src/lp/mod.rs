//! Exact linear programming over arbitrary-precision rationals: a dense
//! two-phase tableau simplex with Bland's rule, and convex-hull membership
//! with separating certificates.

mod hull;
mod simplex;

pub use hull::{hull_membership, margin, max_margin_separator, HullOutcome};
pub use simplex::solve;

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// Linear program over variables that are nonnegative unless marked free.
/// Without an objective only feasibility is decided.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub free: Vec<bool>,
    pub objective: Option<(Sense, Vec<Rational>)>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram { free: vec![false; num_vars], objective: None, constraints: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.free.len()
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn maximize(&mut self, coeffs: Vec<Rational>) -> &mut Self {
        self.objective = Some((Sense::Maximize, coeffs));
        self
    }

    pub fn minimize(&mut self, coeffs: Vec<Rational>) -> &mut Self {
        self.objective = Some((Sense::Minimize, coeffs));
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    /// Row multipliers `y`, nonpositive on `≤` rows and nonnegative on `≥`
    /// rows, with `yᵀA ≤ 0` on nonnegative variables, `yᵀA = 0` on free ones
    /// and `yᵀb > 0`.
    Infeasible {
        certificate: Vec<Rational>,
    },
    /// A feasible `point` and a direction `ray` along which the objective
    /// improves without bound.
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
}

impl LinearProgram {
    fn dot(row: &[Rational], x: &[Rational]) -> Rational {
        row.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `x` satisfies every constraint and sign restriction.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        use num_traits::Signed;
        x.len() == self.num_vars()
            && x.iter().zip(&self.free).all(|(v, free)| *free || !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = Self::dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    /// `y` proves infeasibility in the sense of [`LpOutcome::Infeasible`].
    pub fn verify_infeasibility(&self, y: &[Rational]) -> bool {
        use num_traits::{Signed, Zero};
        if y.len() != self.constraints.len() {
            return false;
        }
        let signs_ok = self.constraints.iter().zip(y).all(|(c, yi)| match c.relation {
            Relation::Le => !yi.is_positive(),
            Relation::Ge => !yi.is_negative(),
            Relation::Eq => true,
        });
        let columns_ok = (0..self.num_vars()).all(|j| {
            let s: Rational = self.constraints.iter().zip(y).map(|(c, yi)| &c.coeffs[j] * yi).sum();
            if self.free[j] {
                s.is_zero()
            } else {
                !s.is_positive()
            }
        });
        let b: Rational = self.constraints.iter().zip(y).map(|(c, yi)| &c.rhs * yi).sum();
        signs_ok && columns_ok && b.is_positive()
    }

    /// `ray` is a recession direction that strictly improves the objective.
    pub fn verify_ray(&self, ray: &[Rational]) -> bool {
        use num_traits::{Signed, Zero};
        let Some((sense, c)) = &self.objective else { return false };
        let dirs_ok = ray.iter().zip(&self.free).all(|(v, free)| *free || !v.is_negative())
            && self.constraints.iter().all(|k| {
                let d = Self::dot(&k.coeffs, ray);
                match k.relation {
                    Relation::Le => !d.is_positive(),
                    Relation::Ge => !d.is_negative(),
                    Relation::Eq => d.is_zero(),
                }
            });
        let gain = Self::dot(c, ray);
        dirs_ok
            && match sense {
                Sense::Maximize => gain.is_positive(),
                Sense::Minimize => gain.is_negative(),
            }
    }
}
