//! Barycentric coordinates `P = Σm_k A_k / Σm_k` and gyrobarycentric
//! coordinates `P = Σm_k γ_{A_k} A_k / Σm_k γ_{A_k}` with the representation
//! constant
//!
//! ```text
//! m_P² = (Σm_k)² + 2 Σ_{j<k} m_j m_k (γ_jk − 1)
//! ```
//!
//! whose sign places `P` inside, on or outside the ball.

use nalgebra::{DMatrix, DVector};

use crate::ball::{
    gamma, gamma_of_gyrodifference, gyrodifference, AmbientVector, BallPoint, Region,
};
use crate::context::{SpaceContext, DENOMINATOR_CUTOFF};
use crate::error::{GyroError, Result};
use crate::motions::GyroMotion;
use crate::numeric::{
    compensated_sum, compensated_weighted_sum, least_squares, numerical_rank, CompensatedSum,
};
use crate::relativity::pair_gamma_minus_one;

/// Relative singular-value cutoff for anchor independence.
pub const INDEPENDENCE_TOL: f64 = 1e-10;
/// Least-squares residual accepted for flat membership, relative to the
/// anchor spread.
pub const FLAT_TOL: f64 = 1e-8;

fn independent(columns: &[DVector<f64>], dim: usize) -> bool {
    if columns.is_empty() {
        return true;
    }
    if columns.len() > dim {
        return false;
    }
    numerical_rank(&DMatrix::from_columns(columns), INDEPENDENCE_TOL) == columns.len()
}

fn check_count(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GyroError::WeightCountMismatch { expected, found })
    }
}

/// Least-squares `Σ c_k x_k ≈ target`, rejecting a residual above
/// `FLAT_TOL` times the larger of the column spread and the target norm.
/// `floor` stands in for the spread when there are no columns.
fn solve_span(
    columns: &[DVector<f64>],
    target: &DVector<f64>,
    floor: f64,
) -> std::result::Result<DVector<f64>, f64> {
    let spread = if columns.is_empty() {
        floor
    } else {
        columns.iter().map(|c| c.norm()).fold(0.0, f64::max)
    };
    let spread = spread.max(target.norm());
    let (x, fitted) = if columns.is_empty() {
        (DVector::zeros(0), DVector::zeros(target.len()))
    } else {
        let m = DMatrix::from_columns(columns);
        let x = least_squares(&m, target).ok_or(f64::INFINITY)?;
        let fitted = &m * &x;
        (x, fitted)
    };
    let residual = (fitted - target).norm() / spread;
    if residual <= FLAT_TOL {
        Ok(x)
    } else {
        Err(residual)
    }
}

/// Divides by the largest-magnitude weight and makes the first nonzero
/// weight positive.
pub fn canonical_weights(weights: &[f64]) -> Vec<f64> {
    let Some(&big) = weights.iter().max_by(|a, b| a.abs().total_cmp(&b.abs())) else {
        return Vec::new();
    };
    if big == 0.0 {
        return weights.to_vec();
    }
    let first = weights.iter().copied().find(|w| *w != 0.0).unwrap_or(1.0);
    let k = big.abs().recip() * first.signum();
    weights.iter().map(|w| w * k).collect()
}

/// Barycentrically independent anchors of ℝⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanAnchors {
    points: Vec<AmbientVector>,
}

impl EuclideanAnchors {
    pub fn new(points: Vec<AmbientVector>) -> Result<Self> {
        let first = points.first().ok_or(GyroError::EmptyInput("anchor set"))?;
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(GyroError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let cols: Vec<_> = points[1..]
            .iter()
            .map(|p| p.coords() - first.coords())
            .collect();
        if !independent(&cols, dim) {
            return Err(GyroError::DependentAnchors);
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[AmbientVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `Σm_k A_k / Σm_k`.
pub fn eval_euclidean(anchors: &EuclideanAnchors, weights: &[f64]) -> Result<AmbientVector> {
    check_count(anchors.len(), weights.len())?;
    let total = compensated_sum(weights.iter().copied());
    let scale: f64 = weights.iter().map(|w| w.abs()).sum();
    if total.abs() <= f64::EPSILON * scale || scale == 0.0 {
        return Err(GyroError::ZeroWeightSum);
    }
    let dim = anchors.points[0].dim();
    let sum = compensated_weighted_sum(
        dim,
        weights
            .iter()
            .copied()
            .zip(anchors.points.iter().map(|p| p.coords())),
    );
    Ok(AmbientVector::from_dvector(sum / total))
}

/// Special barycentric coordinates (summing to one) of a point in the flat
/// of the anchors.
pub fn solve_euclidean(p: &AmbientVector, anchors: &EuclideanAnchors) -> Result<Vec<f64>> {
    let a1 = &anchors.points[0];
    if p.dim() != a1.dim() {
        return Err(GyroError::DimensionMismatch {
            expected: a1.dim(),
            found: p.dim(),
        });
    }
    let cols: Vec<_> = anchors.points[1..]
        .iter()
        .map(|a| a.coords() - a1.coords())
        .collect();
    let floor = anchors.points.iter().map(|a| a.norm()).fold(1.0, f64::max);
    let x = solve_span(&cols, &(p.coords() - a1.coords()), floor).map_err(GyroError::NotInFlat)?;
    let mut weights = Vec::with_capacity(anchors.len());
    weights.push(1.0 - compensated_sum(x.iter().copied()));
    weights.extend(x.iter());
    Ok(weights)
}

/// Gyrobarycentrically independent anchors inside the ball.
#[derive(Debug, Clone, PartialEq)]
pub struct AnchorSet {
    points: Vec<BallPoint>,
}

impl AnchorSet {
    pub fn new(points: Vec<BallPoint>, ctx: &SpaceContext) -> Result<Self> {
        let first = points.first().ok_or(GyroError::EmptyInput("anchor set"))?;
        for p in &points {
            ctx.check_dim(p.dim())?;
        }
        let cols = points[1..]
            .iter()
            .map(|p| gyrodifference(first, p, ctx).map(|g| g.coords().clone()))
            .collect::<Result<Vec<_>>>()?;
        if !independent(&cols, ctx.dim()) {
            return Err(GyroError::DependentAnchors);
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[BallPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GyrobarycentricRep {
    pub anchors: AnchorSet,
    /// Canonical homogeneous weights.
    pub weights: Vec<f64>,
    /// Signed `m_P²` for the canonical weights.
    pub const_sq: f64,
}

impl GyrobarycentricRep {
    /// Canonicalizes `weights` and computes the representation constant.
    pub fn new(anchors: AnchorSet, weights: &[f64], ctx: &SpaceContext) -> Result<Self> {
        check_count(anchors.len(), weights.len())?;
        gamma_weight_sum(&anchors, weights, ctx)?;
        let weights = canonical_weights(weights);
        let const_sq = rep_constant_sq(&anchors, &weights, ctx)?;
        Ok(Self {
            anchors,
            weights,
            const_sq,
        })
    }

    pub fn point(&self, ctx: &SpaceContext) -> Result<AmbientVector> {
        gyro_point(&self.anchors, &self.weights, ctx)
    }

    pub fn classify(&self) -> Region {
        Region::from_signed_sq(self.const_sq, Region::band(self.weights.iter().copied()))
    }
}

fn gamma_weight_sum(anchors: &AnchorSet, weights: &[f64], ctx: &SpaceContext) -> Result<f64> {
    let terms: Vec<f64> = anchors
        .points
        .iter()
        .zip(weights)
        .map(|(a, m)| m * gamma(a, ctx))
        .collect();
    let total = compensated_sum(terms.iter().copied());
    let scale: f64 = terms.iter().map(|t| t.abs()).sum();
    if scale == 0.0 || total.abs() <= ctx.abs_tol() * scale {
        return Err(GyroError::ZeroGammaWeightSum);
    }
    Ok(total)
}

fn gyro_point(anchors: &AnchorSet, weights: &[f64], ctx: &SpaceContext) -> Result<AmbientVector> {
    check_count(anchors.len(), weights.len())?;
    let total = gamma_weight_sum(anchors, weights, ctx)?;
    let terms = anchors
        .points
        .iter()
        .zip(weights)
        .map(|(a, m)| (m * gamma(a, ctx), a.coords()));
    Ok(AmbientVector::from_dvector(
        compensated_weighted_sum(ctx.dim(), terms) / total,
    ))
}

/// `Σm_k γ_{A_k} A_k / Σm_k γ_{A_k}` together with its representation.
pub fn eval_gyro(
    anchors: &AnchorSet,
    weights: &[f64],
    ctx: &SpaceContext,
) -> Result<(AmbientVector, GyrobarycentricRep)> {
    let p = gyro_point(anchors, weights, ctx)?;
    let rep = GyrobarycentricRep::new(anchors.clone(), weights, ctx)?;
    Ok((p, rep))
}

/// Signed `m_P²`, evaluated as `(Σm)² + 2Σ_{j<k} m_j m_k (γ_jk − 1)` and
/// checked in debug builds against `Σm² + 2Σ_{j<k} m_j m_k γ_jk`.
pub fn rep_constant_sq(anchors: &AnchorSet, weights: &[f64], ctx: &SpaceContext) -> Result<f64> {
    check_count(anchors.len(), weights.len())?;
    let pts = &anchors.points;
    let gammas: Vec<f64> = pts.iter().map(|a| gamma(a, ctx)).collect();
    let total = compensated_sum(weights.iter().copied());
    let mut pairs = CompensatedSum::new();
    for j in 0..pts.len() {
        for k in j + 1..pts.len() {
            let g = pair_gamma_minus_one(&pts[j], gammas[j], &pts[k], gammas[k], ctx.s());
            pairs.add(weights[j] * weights[k] * g);
        }
    }
    let value = total * total + 2.0 * pairs.value();

    if cfg!(debug_assertions) {
        let mut alt = CompensatedSum::new();
        let mut scale = 0.0;
        for (j, mj) in weights.iter().enumerate() {
            alt.add(mj * mj);
            scale += mj * mj;
            for k in j + 1..pts.len() {
                let g = gamma_of_gyrodifference(&pts[j], &pts[k], ctx);
                alt.add(2.0 * mj * weights[k] * g);
                scale += 2.0 * (mj * weights[k]).abs() * g;
            }
        }
        debug_assert!(
            (alt.value() - value).abs() <= 1e-9 * scale.max(f64::MIN_POSITIVE),
            "representation constant forms disagree: {value} vs {}",
            alt.value()
        );
    }
    Ok(value)
}

pub fn classify(rep: &GyrobarycentricRep) -> Region {
    rep.classify()
}

/// Gyrobarycentric coordinates of `p` with respect to `anchors`, using the
/// first anchor as the gyrotranslation base. When `p` lies on the polar
/// hyperplane of that anchor the next usable anchor is taken instead.
pub fn solve_gyro(
    p: &AmbientVector,
    anchors: &AnchorSet,
    ctx: &SpaceContext,
) -> Result<GyrobarycentricRep> {
    let mut last = None;
    for base in 0..anchors.len() {
        match solve_gyro_with_base(p, anchors, base, ctx) {
            Err(e @ GyroError::DenominatorVanishes(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("anchor sets are nonempty"))
}

/// `⊖a ⊕ p` as a projective map: points of the flat beyond the ball may give
/// a negative denominator, which is kept. Only a vanishing one fails.
fn gyrotranslate_flat_point(
    a: &BallPoint,
    p: &AmbientVector,
    ctx: &SpaceContext,
) -> Result<DVector<f64>> {
    let u = -a;
    let g = gamma(a, ctx);
    let up = u.coords().dot(p.coords()) / ctx.s_sq();
    let denom = 1.0 + up;
    if denom.abs() <= DENOMINATOR_CUTOFF {
        return Err(GyroError::DenominatorVanishes(denom));
    }
    Ok((u.coords() * (1.0 + g / (1.0 + g) * up) + p.coords() / g) / denom)
}

/// Solves `⊖A_b ⊕ P = Σ_{k≠b} μ_k (⊖A_b ⊕ A_k)` and recovers
/// `m_k = μ_k/γ_{⊖A_b⊕A_k}`, `m_b = 1 − Σμ_k`.
pub fn solve_gyro_with_base(
    p: &AmbientVector,
    anchors: &AnchorSet,
    base: usize,
    ctx: &SpaceContext,
) -> Result<GyrobarycentricRep> {
    ctx.check_dim(p.dim())?;
    let n = anchors.len();
    assert!(base < n, "base anchor index out of range");
    let ab = &anchors.points[base];
    let target = gyrotranslate_flat_point(ab, p, ctx)?;
    let mut cols = Vec::with_capacity(n - 1);
    let mut gammas = Vec::with_capacity(n - 1);
    for (k, a) in anchors.points.iter().enumerate() {
        if k != base {
            let g = gyrodifference(ab, a, ctx)?;
            gammas.push(gamma(&g, ctx));
            cols.push(g.coords().clone());
        }
    }
    let mu = solve_span(&cols, &target, ctx.s()).map_err(GyroError::NotInGyroflat)?;
    let mut weights = Vec::with_capacity(n);
    let mut idx = 0;
    for k in 0..n {
        if k == base {
            weights.push(1.0 - compensated_sum(mu.iter().copied()));
        } else {
            weights.push(mu[idx] / gammas[idx]);
            idx += 1;
        }
    }
    GyrobarycentricRep::new(anchors.clone(), &weights, ctx)
}

/// Moves the anchors by a gyromotion; the weights are kept as they are.
pub fn transform_rep(
    m: &GyroMotion,
    rep: &GyrobarycentricRep,
    ctx: &SpaceContext,
) -> Result<GyrobarycentricRep> {
    let points = rep
        .anchors
        .points
        .iter()
        .map(|a| m.apply(a, ctx))
        .collect::<Result<Vec<_>>>()?;
    let anchors = AnchorSet { points };
    let const_sq = rep_constant_sq(&anchors, &rep.weights, ctx)?;
    debug_assert!(
        (const_sq - rep.const_sq).abs() <= 1e-8 * rep.const_sq.abs().max(1.0),
        "representation constant changed under a gyromotion"
    );
    Ok(GyrobarycentricRep {
        anchors,
        weights: rep.weights.clone(),
        const_sq,
    })
}
