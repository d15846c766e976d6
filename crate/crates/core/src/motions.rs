//! Euclidean motions `(X, R)A = X + RA` and gyromotions `(X, R)A = X ⊕ RA`,
//! their composition and inversion, gyroisometry decomposition and
//! gyrocovariance checking.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::ball::{einstein_add_points, gyrodifference, AmbientVector, BallPoint};
use crate::context::SpaceContext;
use crate::error::{GyroError, Result};
use crate::gyration::{gyr_matrix, RotationMatrix};
use crate::numeric::{orthogonality_error, polar_factor, relative_residual};
use crate::report::AxiomReport;

/// Probe scale for decomposition, as a fraction of `s`.
pub const PROBE_FRACTION: f64 = 0.1;
/// Largest relative residual accepted from a decomposed gyroisometry.
pub const DECOMPOSITION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanMotion {
    pub x: AmbientVector,
    pub r: RotationMatrix,
}

impl EuclideanMotion {
    pub fn new(x: AmbientVector, r: RotationMatrix) -> Result<Self> {
        if x.dim() != r.dim() {
            return Err(GyroError::DimensionMismatch {
                expected: r.dim(),
                found: x.dim(),
            });
        }
        Ok(Self { x, r })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            x: AmbientVector::zeros(dim),
            r: RotationMatrix::identity(dim),
        }
    }

    pub fn apply(&self, a: &AmbientVector) -> AmbientVector {
        &self.x + &self.r.apply(a)
    }

    /// `(X₁ + R₁X₂, R₁R₂)`, acting as `self` after `other`.
    pub fn compose(&self, other: &EuclideanMotion) -> EuclideanMotion {
        EuclideanMotion {
            x: &self.x + &self.r.apply(&other.x),
            r: self.r.compose(&other.r),
        }
    }

    /// `(−RᵗX, Rᵗ)`.
    pub fn inverse(&self) -> EuclideanMotion {
        let rt = self.r.transpose();
        EuclideanMotion {
            x: -&rt.apply(&self.x),
            r: rt,
        }
    }
}

pub fn apply_euclidean(m: &EuclideanMotion, a: &AmbientVector) -> AmbientVector {
    m.apply(a)
}

pub fn compose_euclidean(m1: &EuclideanMotion, m2: &EuclideanMotion) -> EuclideanMotion {
    m1.compose(m2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GyroMotion {
    pub x: BallPoint,
    pub r: RotationMatrix,
}

impl GyroMotion {
    pub fn new(x: BallPoint, r: RotationMatrix, ctx: &SpaceContext) -> Result<Self> {
        ctx.check_dim(x.dim())?;
        ctx.check_dim(r.dim())?;
        Ok(Self { x, r })
    }

    pub fn identity(ctx: &SpaceContext) -> Self {
        Self {
            x: ctx.origin(),
            r: RotationMatrix::identity(ctx.dim()),
        }
    }

    pub fn translation(x: BallPoint) -> Self {
        let n = x.dim();
        Self {
            x,
            r: RotationMatrix::identity(n),
        }
    }

    pub fn apply(&self, a: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
        einstein_add_points(&self.x, &self.r.apply_point(a, ctx)?, ctx)
    }

    /// `(X₁ ⊕ R₁X₂, gyr[X₁, R₁X₂]R₁R₂)`, acting as `self` after `other`.
    pub fn compose(&self, other: &GyroMotion, ctx: &SpaceContext) -> Result<GyroMotion> {
        let rx2 = self.r.apply_point(&other.x, ctx)?;
        let x = einstein_add_points(&self.x, &rx2, ctx)?;
        let g = gyr_matrix(&self.x, &rx2, ctx);
        Ok(GyroMotion {
            x,
            r: g.compose(&self.r.compose(&other.r)),
        })
    }

    /// `(⊖RᵗX, Rᵗ)`.
    pub fn inverse(&self, ctx: &SpaceContext) -> Result<GyroMotion> {
        let rt = self.r.transpose();
        let x = -rt.apply_point(&self.x, ctx)?;
        Ok(GyroMotion { x, r: rt })
    }
}

pub fn left_gyrotranslate(x: &BallPoint, a: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    einstein_add_points(x, a, ctx)
}

pub fn apply_gyromotion(m: &GyroMotion, a: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    m.apply(a, ctx)
}

pub fn compose_gyromotions(
    m1: &GyroMotion,
    m2: &GyroMotion,
    ctx: &SpaceContext,
) -> Result<GyroMotion> {
    m1.compose(m2, ctx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Direct,
    Opposite,
}

/// A map written as `X ↦ A ⊕ QX` with `Q` orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct GyroisometryDecomposition {
    pub translation: BallPoint,
    pub linear: DMatrix<f64>,
    pub orientation: Orientation,
    /// Worst relative residual over the probe set.
    pub residual: f64,
}

impl GyroisometryDecomposition {
    /// The gyromotion, for orientation-preserving maps.
    pub fn motion(&self) -> Option<GyroMotion> {
        (self.orientation == Orientation::Direct).then(|| GyroMotion {
            x: self.translation.clone(),
            r: RotationMatrix::from_raw(self.linear.clone()),
        })
    }
}

/// Recovers `A = φO` and `RX = ⊖φO ⊕ φX` from the images of the scaled
/// basis vectors `0.1·s·eᵢ`, then checks `φX ≈ A ⊕ RX` on `probe`.
pub fn decompose_gyroisometry<F>(
    phi: F,
    probe: &[BallPoint],
    ctx: &SpaceContext,
) -> Result<GyroisometryDecomposition>
where
    F: Fn(&BallPoint) -> Result<BallPoint>,
{
    let n = ctx.dim();
    let eps = PROBE_FRACTION * ctx.s();
    let a = phi(&ctx.origin())?;
    let mut raw = DMatrix::zeros(n, n);
    for i in 0..n {
        let e = AmbientVector::basis(n, i, eps).into_ball(ctx)?;
        let col = gyrodifference(&a, &phi(&e)?, ctx)?;
        raw.set_column(i, &(col.coords() / eps));
    }
    let linear = polar_factor(&raw);
    let mut residual = orthogonality_error(&raw);
    for x in probe {
        ctx.check_dim(x.dim())?;
        let qx = BallPoint::from_dvector(&linear * x.coords(), ctx)?;
        let predicted = einstein_add_points(&a, &qx, ctx)?;
        let actual = phi(x)?;
        residual = residual.max(relative_residual(
            actual.coords(),
            predicted.coords(),
            ctx.s(),
        ));
    }
    if residual.is_nan() || residual >= DECOMPOSITION_TOL {
        return Err(GyroError::NotAGyroisometry(residual));
    }
    let orientation = if linear.determinant() > 0.0 {
        Orientation::Direct
    } else {
        Orientation::Opposite
    };
    Ok(GyroisometryDecomposition {
        translation: a,
        linear,
        orientation,
        residual,
    })
}

pub const TRANSLATION_COVARIANCE: &str = "left gyrotranslation covariance";
pub const ROTATION_COVARIANCE: &str = "rotation covariance";

/// Worst residuals of `X ⊕ T(A…) = T(X ⊕ A…)` and `R T(A…) = T(RA…)` over
/// every pairing of a sample with a motion.
pub fn check_gyrocovariance<T>(
    t: T,
    samples: &[Vec<BallPoint>],
    motions: &[GyroMotion],
    ctx: &SpaceContext,
) -> AxiomReport
where
    T: Fn(&[BallPoint]) -> Result<BallPoint>,
{
    let mut report = AxiomReport::new();
    report.declare(TRANSLATION_COVARIANCE);
    report.declare(ROTATION_COVARIANCE);
    let s = ctx.s();
    for pts in samples {
        let base = t(pts);
        for m in motions {
            let translated = (|| {
                let lhs = einstein_add_points(&m.x, base.as_ref().map_err(Clone::clone)?, ctx)?;
                let moved = pts
                    .iter()
                    .map(|p| einstein_add_points(&m.x, p, ctx))
                    .collect::<Result<Vec<_>>>()?;
                Ok::<_, GyroError>(relative_residual(lhs.coords(), t(&moved)?.coords(), s))
            })();
            report.record(TRANSLATION_COVARIANCE, translated.unwrap_or(f64::INFINITY));

            let rotated = (|| {
                let lhs = m.r.apply_point(base.as_ref().map_err(Clone::clone)?, ctx)?;
                let moved = pts
                    .iter()
                    .map(|p| m.r.apply_point(p, ctx))
                    .collect::<Result<Vec<_>>>()?;
                Ok::<_, GyroError>(relative_residual(lhs.coords(), t(&moved)?.coords(), s))
            })();
            report.record(ROTATION_COVARIANCE, rotated.unwrap_or(f64::INFINITY));
        }
    }
    report
}
