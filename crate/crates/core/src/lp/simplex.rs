use num_traits::{One, Signed, Zero};

use super::{LinearProgram, LpOutcome, Relation, Sense};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense tableau in standard form `A x = b, x ≥ 0`, `b ≥ 0`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs of a minimization objective.
    cost: Vec<Rational>,
    /// Columns allowed to enter the basis.
    eligible: Vec<bool>,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let support: Vec<usize> = (0..self.rows[r].len()).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for &j in &support {
                let d = &f * &pivot_row[j];
                self.rows[i][j] -= d;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for &j in &support {
                let d = &f * &pivot_row[j];
                self.cost[j] -= d;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic index.
    fn run(&mut self) -> Step {
        loop {
            let Some(c) = (0..self.cost.len()).find(|&j| self.eligible[j] && self.cost[j].is_negative()) else {
                return Step::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return Step::Unbounded(c),
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn set_cost(&mut self, c: &[Rational]) {
        let mut cost = c.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if c[b].is_zero() {
                continue;
            }
            for (j, v) in self.rows[i].iter().enumerate() {
                if !v.is_zero() {
                    cost[j] -= &c[b] * v;
                }
            }
        }
        self.cost = cost;
    }

    fn values(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }
}

/// Solves `lp` exactly.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.num_vars();
    for c in &lp.constraints {
        if c.coeffs.len() != n {
            return Err(Error::MalformedProgram(format!(
                "row has {} coefficients for {} variables",
                c.coeffs.len(),
                n
            )));
        }
    }
    if let Some((_, c)) = &lp.objective {
        if c.len() != n {
            return Err(Error::MalformedProgram(format!("objective has {} coefficients for {} variables", c.len(), n)));
        }
    }

    // Column layout: structural (free variables split into a positive and a
    // negative part), one slack per inequality, one artificial per row.
    let mut col_of = Vec::with_capacity(n);
    let mut width = 0;
    for &free in &lp.free {
        col_of.push(width);
        width += if free { 2 } else { 1 };
    }
    let structural = width;
    let m = lp.constraints.len();
    let slacks = lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let artificial = structural + slacks;
    let total = artificial + m;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut flip = Vec::with_capacity(m);
    let mut slack = structural;
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); total];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[col_of[j]] = a.clone();
            if lp.free[j] {
                row[col_of[j] + 1] = -a;
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        let negative = c.rhs.is_negative();
        if negative {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[artificial + i] = Rational::one();
        rows.push(row);
        rhs.push(if negative { -&c.rhs } else { c.rhs.clone() });
        flip.push(negative);
    }

    let mut phase_one = vec![Rational::zero(); total];
    for v in &mut phase_one[artificial..] {
        *v = Rational::one();
    }
    let mut t =
        Tableau { rows, rhs, basis: (artificial..total).collect(), cost: Vec::new(), eligible: vec![true; total] };
    t.set_cost(&phase_one);
    t.run();

    let infeasibility: Rational =
        t.basis.iter().zip(&t.rhs).filter(|(b, _)| **b >= artificial).map(|(_, v)| v.clone()).sum();
    if infeasibility.is_positive() {
        // Duals of the phase-one optimum: y_i = 1 - reduced cost of artificial i.
        let certificate = (0..m)
            .map(|i| {
                let y = Rational::one() - &t.cost[artificial + i];
                if flip[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        return Ok(LpOutcome::Infeasible { certificate });
    }

    // Drive zero-level artificials out of the basis where possible.
    for r in 0..m {
        if t.basis[r] >= artificial {
            if let Some(c) = (0..artificial).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }
    for e in &mut t.eligible[artificial..] {
        *e = false;
    }

    let to_original = |v: &[Rational]| -> Vec<Rational> {
        (0..n).map(|j| if lp.free[j] { &v[col_of[j]] - &v[col_of[j] + 1] } else { v[col_of[j]].clone() }).collect()
    };

    let Some((sense, objective)) = &lp.objective else {
        let point = to_original(&t.values(total));
        return Ok(LpOutcome::Optimal { value: Rational::zero(), point });
    };
    let mut phase_two = vec![Rational::zero(); total];
    for j in 0..n {
        let c = match sense {
            Sense::Maximize => -&objective[j],
            Sense::Minimize => objective[j].clone(),
        };
        if lp.free[j] {
            phase_two[col_of[j] + 1] = -&c;
        }
        phase_two[col_of[j]] = c;
    }
    t.set_cost(&phase_two);
    match t.run() {
        Step::Optimal => {
            let point = to_original(&t.values(total));
            let value = LinearProgram::dot(objective, &point);
            Ok(LpOutcome::Optimal { value, point })
        }
        Step::Unbounded(c) => {
            let point = to_original(&t.values(total));
            let mut dir = vec![Rational::zero(); total];
            dir[c] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                dir[b] = -&t.rows[i][c];
            }
            Ok(LpOutcome::Unbounded { point, ray: to_original(&dir) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn bounded_maximum() {
        let mut lp = LinearProgram::new(1);
        lp.maximize(row(&[1])).constrain(row(&[1]), Relation::Le, int(1)).constrain(row(&[1]), Relation::Ge, int(0));
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Optimal { value: int(1), point: row(&[1]) });
    }

    #[test]
    fn unbounded_with_ray() {
        let mut lp = LinearProgram::new(1);
        lp.maximize(row(&[1])).constrain(row(&[1]), Relation::Ge, int(0));
        match solve(&lp).unwrap() {
            LpOutcome::Unbounded { point, ray } => {
                assert!(lp.is_feasible(&point));
                assert!(lp.verify_ray(&ray));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_with_certificate() {
        let mut lp = LinearProgram::new(2);
        lp.set_free(1).constrain(row(&[1, 1]), Relation::Le, int(1)).constrain(row(&[1, 1]), Relation::Ge, int(2));
        match solve(&lp).unwrap() {
            LpOutcome::Infeasible { certificate } => assert!(lp.verify_infeasibility(&certificate)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn free_variables_and_negative_rhs() {
        let mut lp = LinearProgram::new(2);
        lp.set_free(0)
            .set_free(1)
            .minimize(row(&[1, 1]))
            .constrain(row(&[1, 0]), Relation::Ge, int(-3))
            .constrain(row(&[0, 2]), Relation::Ge, int(-1))
            .constrain(row(&[1, -1]), Relation::Eq, int(-2));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(-3));
                assert_eq!(point, vec![ratio(-5, 2), ratio(-1, 2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.maximize(row(&[1, 0])).constrain(row(&[1, 1]), Relation::Eq, int(1)).constrain(
            row(&[2, 2]),
            Relation::Eq,
            int(2),
        );
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Optimal { value: int(1), point: row(&[1, 0]) });
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut lp = LinearProgram::new(2);
        lp.constrain(row(&[1]), Relation::Le, int(1));
        assert!(matches!(solve(&lp), Err(Error::MalformedProgram(_))));
    }
}
