//! Euclidean projection onto a convex hull: Wolfe's minimum-norm-point
//! algorithm in floating point, then an exact solve on the final corral.

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

const EPS: f64 = 1e-12;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weights minimizing `|Σ w_i p_i|` subject to `Σ w_i = 1` over `corral`.
fn affine_minimizer(points: &[Vec<f64>], corral: &[usize]) -> Option<Vec<f64>> {
    let k = corral.len();
    let mut m = DMatrix::<f64>::zeros(k + 1, k + 1);
    let mut rhs = DVector::<f64>::zeros(k + 1);
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] = dot(&points[corral[i]], &points[corral[j]]);
        }
        m[(i, k)] = 1.0;
        m[(k, i)] = 1.0;
    }
    rhs[k] = 1.0;
    let sol = m.clone().lu().solve(&rhs).or_else(|| m.pseudo_inverse(1e-14).ok().map(|p| p * &rhs))?;
    Some(sol.iter().take(k).copied().collect())
}

/// Corral and convex weights of the point of `conv(points)` nearest the origin.
pub(crate) fn min_norm_point(points: &[Vec<f64>]) -> (Vec<usize>, Vec<f64>) {
    let norm2: Vec<f64> = points.iter().map(|p| dot(p, p)).collect();
    let scale = norm2.iter().cloned().fold(1.0, f64::max);
    let start = (0..points.len()).min_by(|&a, &b| norm2[a].total_cmp(&norm2[b])).expect("nonempty");
    let mut corral = vec![start];
    let mut w = vec![1.0];
    let dim = points[0].len();
    for _ in 0..10 * (points.len() + dim + 10) {
        let x: Vec<f64> = (0..dim).map(|d| corral.iter().zip(&w).map(|(&i, wi)| wi * points[i][d]).sum()).collect();
        let xx = dot(&x, &x);
        let (j, xj) =
            (0..points.len()).map(|j| (j, dot(&x, &points[j]))).min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty");
        if xx - xj <= EPS * scale || corral.contains(&j) {
            break;
        }
        corral.push(j);
        w.push(0.0);
        while let Some(alpha) = affine_minimizer(points, &corral) {
            if alpha.iter().all(|&a| a > EPS) {
                w = alpha;
                break;
            }
            let theta =
                w.iter().zip(&alpha).filter(|(_, &a)| a <= EPS).map(|(&wi, &a)| wi / (wi - a)).fold(1.0, f64::min);
            for (wi, a) in w.iter_mut().zip(&alpha) {
                *wi = theta * a + (1.0 - theta) * *wi;
            }
            let keep: Vec<usize> = (0..corral.len()).filter(|&i| w[i] > EPS).collect();
            corral = keep.iter().map(|&i| corral[i]).collect();
            w = keep.iter().map(|&i| w[i]).collect();
            if corral.len() <= 1 {
                w = vec![1.0; corral.len()];
                break;
            }
        }
    }
    (corral, w)
}

/// Exact weights of the affine minimizer over `corral`, if the system is
/// nonsingular and the weights are nonnegative.
pub(crate) fn exact_corral_weights(points: &[Vec<Rational>], corral: &[usize]) -> Option<Vec<Rational>> {
    let k = corral.len();
    let n = k + 1;
    let mut m = vec![vec![Rational::zero(); n + 1]; n];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = points[corral[i]].iter().zip(&points[corral[j]]).map(|(a, b)| a * b).sum();
        }
        m[i][k] = Rational::one();
        m[k][i] = Rational::one();
    }
    m[k][n] = Rational::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
            }
        }
    }
    let w: Vec<Rational> = (0..k).map(|i| m[i][n].clone()).collect();
    if w.iter().any(|x| x.is_negative()) {
        return None;
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn nearest_point_of_a_segment() {
        let pts = vec![vec![1.0, -1.0], vec![1.0, 1.0]];
        let (corral, w) = min_norm_point(&pts);
        assert_eq!(corral.len(), 2);
        assert!((w[0] - 0.5).abs() < 1e-9);
        let exact: Vec<Vec<Rational>> = vec![vec![ratio(1, 1), ratio(-1, 1)], vec![ratio(1, 1), ratio(1, 1)]];
        assert_eq!(exact_corral_weights(&exact, &corral).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn vertex_is_nearest() {
        let pts = vec![vec![2.0, 0.0], vec![3.0, 1.0], vec![1.0, 0.5]];
        let (corral, _) = min_norm_point(&pts);
        assert_eq!(corral, vec![2]);
    }
}
