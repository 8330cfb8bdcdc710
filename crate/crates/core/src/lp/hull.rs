use num_traits::{One, Signed, Zero};

use super::{solve, LinearProgram, LpOutcome, Relation};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullOutcome {
    /// Convex weights reproducing the point.
    Inside(Vec<Rational>),
    /// `s` with `s·q > s·p` for every point `q`, scaled so `max |s_i| = 1`.
    Outside(Vec<Rational>),
}

fn check_dims(points: &[Vec<Rational>], p: &[Rational]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for q in points {
        if q.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), got: q.len() });
        }
    }
    Ok(())
}

/// Smallest margin `min_h s·(q_h - p)`.
pub fn margin(points: &[Vec<Rational>], p: &[Rational], s: &[Rational]) -> Rational {
    points
        .iter()
        .map(|q| q.iter().zip(p).zip(s).map(|((qi, pi), si)| si * (qi - pi)).sum::<Rational>())
        .min()
        .expect("nonempty point set")
}

fn normalize(s: Vec<Rational>) -> Vec<Rational> {
    let scale = s.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero);
    if scale.is_zero() {
        return s;
    }
    s.into_iter().map(|v| v / &scale).collect()
}

/// Decides whether `p` lies in the convex hull of `points`.
pub fn hull_membership(points: &[Vec<Rational>], p: &[Rational]) -> Result<HullOutcome> {
    check_dims(points, p)?;
    let m = points.len();
    let mut lp = LinearProgram::new(m);
    lp.constrain(vec![Rational::one(); m], Relation::Eq, Rational::one());
    for i in 0..p.len() {
        lp.constrain(points.iter().map(|q| q[i].clone()).collect(), Relation::Eq, p[i].clone());
    }
    match solve(&lp)? {
        LpOutcome::Optimal { point, .. } => Ok(HullOutcome::Inside(point)),
        LpOutcome::Infeasible { certificate } => {
            // Multipliers (y0, y) give y0 + y·q <= 0 < y0 + y·p, so s = -y separates.
            let s: Vec<Rational> = certificate[1..].iter().map(|v| -v).collect();
            let s = normalize(s);
            debug_assert!(margin(points, p, &s).is_positive());
            Ok(HullOutcome::Outside(s))
        }
        LpOutcome::Unbounded { .. } => unreachable!("feasibility program has no objective"),
    }
}

/// Separator maximizing `min_h s·(q_h - p)` over `max |s_i| <= 1`, with that
/// margin. `None` when `p` is in the hull.
pub fn max_margin_separator(points: &[Vec<Rational>], p: &[Rational]) -> Result<Option<(Vec<Rational>, Rational)>> {
    check_dims(points, p)?;
    let n = p.len();
    // Variables s_1..s_n and the margin, all free.
    let mut lp = LinearProgram::new(n + 1);
    for j in 0..=n {
        lp.set_free(j);
    }
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = Rational::one();
    lp.maximize(objective);
    for q in points {
        let mut row: Vec<Rational> = q.iter().zip(p).map(|(qi, pi)| qi - pi).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    for j in 0..n {
        let mut row = vec![Rational::zero(); n + 1];
        row[j] = Rational::one();
        lp.constrain(row.clone(), Relation::Le, Rational::one());
        lp.constrain(row, Relation::Ge, -Rational::one());
    }
    match solve(&lp)? {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(n);
            let s = normalize(point);
            let eps = margin(points, p, &s);
            Ok(Some((s, eps)))
        }
        LpOutcome::Optimal { .. } => Ok(None),
        other => Err(Error::MalformedProgram(format!("separator program ended with {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|q| q.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inside_the_unit_square() {
        let points = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        match hull_membership(&points, &[ratio(1, 2), ratio(1, 2)]).unwrap() {
            HullOutcome::Inside(w) => {
                assert_eq!(w.iter().sum::<Rational>(), int(1));
                assert!(w.iter().all(|x| !x.is_negative()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn outside_a_segment() {
        let points = pts(&[&[0, 0], &[1, 1]]);
        let p = [int(2), int(2)];
        match hull_membership(&points, &p).unwrap() {
            HullOutcome::Outside(s) => assert!(margin(&points, &p, &s).is_positive()),
            other => panic!("{other:?}"),
        }
        let (s, eps) = max_margin_separator(&points, &p).unwrap().unwrap();
        assert_eq!(s, vec![int(-1), int(-1)]);
        assert_eq!(eps, int(2));
        assert!(max_margin_separator(&points, &[ratio(1, 3), ratio(1, 3)]).unwrap().is_none());
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(hull_membership(&[], &[int(0)]), Err(Error::EmptyPointSet)));
        assert!(matches!(hull_membership(&pts(&[&[0]]), &[int(0), int(0)]), Err(Error::DimensionMismatch { .. })));
    }
}
