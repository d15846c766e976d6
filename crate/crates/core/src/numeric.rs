//! Small numerical helpers: compensated sums, residual measures, dense
//! least squares and the polar factor of a square matrix.

use nalgebra::{DMatrix, DVector};

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<CompensatedSum>().value()
}

/// Component-wise compensated sum of `weight * vector` terms.
pub fn compensated_weighted_sum<'a, I>(dim: usize, terms: I) -> DVector<f64>
where
    I: IntoIterator<Item = (f64, &'a DVector<f64>)>,
{
    let mut acc = vec![CompensatedSum::new(); dim];
    for (w, v) in terms {
        for (a, x) in acc.iter_mut().zip(v.iter()) {
            a.add(w * x);
        }
    }
    DVector::from_iterator(dim, acc.iter().map(CompensatedSum::value))
}

/// `‖a − b‖ / max(scale, ‖a‖, ‖b‖)`; non-finite inputs give `+∞`.
pub fn relative_residual(a: &DVector<f64>, b: &DVector<f64>, scale: f64) -> f64 {
    let denom = scale.max(a.norm()).max(b.norm());
    let r = (a - b).norm();
    if r == 0.0 {
        0.0
    } else if !r.is_finite() || denom == 0.0 {
        f64::INFINITY
    } else {
        r / denom
    }
}

/// `|a − b| / max(scale, |a|, |b|)`.
pub fn relative_scalar_residual(a: f64, b: f64, scale: f64) -> f64 {
    let r = (a - b).abs();
    if r == 0.0 {
        0.0
    } else if !r.is_finite() {
        f64::INFINITY
    } else {
        r / scale.max(a.abs()).max(b.abs())
    }
}

/// Largest absolute entry of `a − b`.
pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let d = (a - b).amax();
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

/// Least-squares slope of `ln(err)` against `ln(h)`: the observed order of
/// convergence as `h → 0`.
pub fn convergence_order(h: &[f64], err: &[f64]) -> f64 {
    assert_eq!(h.len(), err.len());
    assert!(h.len() >= 2, "need at least two points to fit an order");
    let xs: Vec<f64> = h.iter().map(|x| x.ln()).collect();
    let ys: Vec<f64> = err.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Numerical rank: singular values above `rel_tol * σ_max`.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.ncols() == 0 || m.nrows() == 0 {
        return 0;
    }
    let sv = m.singular_values();
    let max = sv.max();
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&x| x > rel_tol * max).count()
}

/// Ratio of smallest to largest singular value (0 for rank-deficient).
pub fn inverse_condition(m: &DMatrix<f64>) -> f64 {
    if m.ncols() == 0 {
        return 1.0;
    }
    let sv = m.singular_values();
    let max = sv.max();
    if max == 0.0 {
        0.0
    } else {
        sv.min() / max
    }
}

/// Least-squares solution of `m x = b`.
pub fn least_squares(m: &DMatrix<f64>, b: &DVector<f64>) -> Option<DVector<f64>> {
    if m.ncols() == 0 {
        return Some(DVector::zeros(0));
    }
    let svd = m.clone().svd(true, true);
    svd.solve(b, 1e-14 * svd.singular_values.max()).ok()
}

/// Nearest orthogonal matrix `U Vᵗ` from the SVD `m = U Σ Vᵗ`.
pub fn polar_factor(m: &DMatrix<f64>) -> DMatrix<f64> {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("svd computed with u");
    let v_t = svd.v_t.expect("svd computed with v_t");
    u * v_t
}

/// `max |RᵗR − I|`.
pub fn orthogonality_error(m: &DMatrix<f64>) -> f64 {
    let n = m.ncols();
    max_abs_diff(&(m.transpose() * m), &DMatrix::identity(n, n))
}
