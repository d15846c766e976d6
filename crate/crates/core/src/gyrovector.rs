//! Einstein scalar multiplication, gyrolines, gyrodistance, gyromidpoints
//! and gyroline boundary points, with the gyrovector space axiom checker.

use nalgebra::DMatrix;

use crate::ball::{
    add_raw, einstein_add, einstein_add_points, gamma, gyrodifference, scalar_norm_add,
    AmbientVector, BallPoint,
};
use crate::context::SpaceContext;
use crate::error::{GyroError, Result};
use crate::gyration::{ExplicitGyration, GyrationMap};
use crate::numeric::{max_abs_diff, relative_residual, relative_scalar_residual};
use crate::report::AxiomReport;

/// One-dimensional scalar multiplication `s·tanh(r·atanh(x/s))` for a signed
/// speed `x ∈ (−s, s)`.
pub fn scalar_mul_norm(r: f64, x: f64, ctx: &SpaceContext) -> f64 {
    ctx.s() * (r * (x / ctx.s()).atanh()).tanh()
}

/// Einstein scalar multiplication `r ⊗ v = s·tanh(r·atanh(‖v‖/s))·v/‖v‖`.
///
/// Fails with [`GyroError::OutsideBall`] when `|r|` is so large that the
/// hyperbolic tangent rounds to one.
pub fn scalar_mul(r: f64, v: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    let norm = v.norm();
    if norm == 0.0 || r == 0.0 {
        return Ok(ctx.origin());
    }
    let scaled = scalar_mul_norm(r, norm, ctx);
    ctx.rewrap(v.coords() * (scaled / norm))
}

/// `½ ⊗ v = γ_v/(1 + γ_v) · v`.
pub fn einstein_half(v: &BallPoint, ctx: &SpaceContext) -> BallPoint {
    let g = gamma(v, ctx);
    BallPoint::trusted(v.coords() * (g / (1.0 + g)))
}

/// `‖⊖a ⊕ b‖`.
pub fn gyrodistance(a: &BallPoint, b: &BallPoint, ctx: &SpaceContext) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let neg_a = -a;
    let diff = add_raw(neg_a.coords(), gamma(a, ctx), b.coords(), ctx.s())?;
    Ok(diff.norm())
}

/// The gyroline `a ⊕ (⊖a ⊕ b) ⊗ t` through two distinct points.
#[derive(Debug, Clone)]
pub struct Gyroline {
    a: BallPoint,
    b: BallPoint,
    direction: BallPoint,
}

impl Gyroline {
    pub fn new(a: BallPoint, b: BallPoint, ctx: &SpaceContext) -> Result<Self> {
        let direction = gyrodifference(&a, &b, ctx)?;
        if direction.norm() <= ctx.abs_tol() {
            return Err(GyroError::CoincidentPoints);
        }
        Ok(Self { a, b, direction })
    }

    pub fn a(&self) -> &BallPoint {
        &self.a
    }

    pub fn b(&self) -> &BallPoint {
        &self.b
    }

    /// `⊖a ⊕ b`.
    pub fn direction(&self) -> &BallPoint {
        &self.direction
    }

    pub fn point(&self, t: f64, ctx: &SpaceContext) -> Result<BallPoint> {
        if t == 0.0 {
            return Ok(self.a.clone());
        }
        einstein_add_points(&self.a, &scalar_mul(t, &self.direction, ctx)?, ctx)
    }
}

pub fn gyroline_point(line: &Gyroline, t: f64, ctx: &SpaceContext) -> Result<BallPoint> {
    line.point(t, ctx)
}

/// `(γ₁A₁ + γ₂A₂)/(γ₁ + γ₂)`.
pub fn gyromidpoint(a1: &BallPoint, a2: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    let (g1, g2) = (gamma(a1, ctx), gamma(a2, ctx));
    ctx.rewrap((a1.coords() * g1 + a2.coords() * g2) / (g1 + g2))
}

/// The two points where a gyroline meets the boundary sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPair {
    /// Endpoint on the `A₁` side (negative parameter).
    pub near_a1: AmbientVector,
    /// Endpoint on the `A₂` side (positive parameter).
    pub near_a2: AmbientVector,
}

/// Boundary points `A₁ ⊖ w` and `A₁ ⊕ w` of the gyroline through `A₁, A₂`,
/// where `w = γ₁₂a₁₂/√(γ₁₂² − 1)` and `a₁₂ = ⊖A₁ ⊕ A₂`.
///
/// `w` has norm exactly `s`; it is evaluated as `s·a₁₂/‖a₁₂‖`, the same
/// vector without the cancellation in `γ₁₂² − 1`.
pub fn boundary_points(a1: &BallPoint, a2: &BallPoint, ctx: &SpaceContext) -> Result<BoundaryPair> {
    let a12 = gyrodifference(a1, a2, ctx)?;
    let norm = a12.norm();
    if norm <= ctx.abs_tol() {
        return Err(GyroError::CoincidentPoints);
    }
    let w = AmbientVector::from_dvector(a12.coords() * (ctx.s() / norm));
    Ok(BoundaryPair {
        near_a1: einstein_add(a1, &-&w, ctx)?,
        near_a2: einstein_add(a1, &w, ctx)?,
    })
}

/// Inputs for one evaluation of the gyrovector space axioms.
#[derive(Debug, Clone)]
pub struct GyrovectorSample {
    pub a: BallPoint,
    pub b: BallPoint,
    pub u: BallPoint,
    pub v: BallPoint,
    pub r1: f64,
    pub r2: f64,
}

pub const GYROVECTOR_LAWS: [&str; 11] = [
    "V1 inner product gyroinvariance",
    "V2 identity scalar multiplication",
    "V3 scalar distributive",
    "V4 scalar associative",
    "V5 scaling property",
    "V6 gyroautomorphism property",
    "V7 identity gyroautomorphism",
    "V8 one-dimensional vector space",
    "V9 homogeneity",
    "V10 gyrotriangle inequality",
    "half doubling",
];

pub fn check_gyrovector_axioms(sample: &[GyrovectorSample], ctx: &SpaceContext) -> AxiomReport {
    check_gyrovector_axioms_with(&ExplicitGyration, sample, ctx)
}

pub fn check_gyrovector_axioms_with(
    map: &dyn GyrationMap,
    sample: &[GyrovectorSample],
    ctx: &SpaceContext,
) -> AxiomReport {
    let mut report = AxiomReport::new();
    for law in GYROVECTOR_LAWS {
        report.declare(law);
    }
    for item in sample {
        check_item(map, item, ctx, &mut report);
    }
    report
}

fn check_item(
    map: &dyn GyrationMap,
    x: &GyrovectorSample,
    ctx: &SpaceContext,
    report: &mut AxiomReport,
) {
    let s = ctx.s();
    let (a, b, u, v, r1, r2) = (&x.a, &x.b, &x.u, &x.v, x.r1, x.r2);
    let mul = |r: f64, p: &BallPoint| scalar_mul(r, p, ctx);
    let add = |p: &BallPoint, q: &BallPoint| einstein_add_points(p, q, ctx);
    let gyr = |w: &BallPoint| ctx.rewrap(map.gyrate(u, v, &w.to_ambient(), ctx).into_inner());
    let vec_residual = |lhs: Result<BallPoint>, rhs: Result<BallPoint>| match (lhs, rhs) {
        (Ok(l), Ok(r)) => relative_residual(l.coords(), r.coords(), s),
        _ => f64::INFINITY,
    };

    let ga = map.gyrate(u, v, &a.to_ambient(), ctx);
    let gb = map.gyrate(u, v, &b.to_ambient(), ctx);
    report.record(
        GYROVECTOR_LAWS[0],
        relative_scalar_residual(ga.dot(&gb), a.dot(b), ctx.s_sq()),
    );
    report.record(GYROVECTOR_LAWS[1], vec_residual(mul(1.0, a), Ok(a.clone())));
    report.record(
        GYROVECTOR_LAWS[2],
        vec_residual(
            mul(r1 + r2, a),
            mul(r1, a).and_then(|p| add(&p, &mul(r2, a)?)),
        ),
    );
    report.record(
        GYROVECTOR_LAWS[3],
        vec_residual(mul(r1 * r2, a), mul(r2, a).and_then(|p| mul(r1, &p))),
    );
    if a.norm() > 0.0 && r1 != 0.0 {
        let lhs = mul(r1.abs(), a).and_then(|p| Ok(p.coords() / mul(r1, a)?.norm()));
        let r = lhs.map_or(f64::INFINITY, |l| {
            relative_residual(&l, &(a.coords() / a.norm()), 1.0)
        });
        report.record(GYROVECTOR_LAWS[4], r);
    }
    report.record(
        GYROVECTOR_LAWS[5],
        vec_residual(
            mul(r1, a).and_then(|p| gyr(&p)),
            gyr(a).and_then(|p| mul(r1, &p)),
        ),
    );
    let identity_gyr = match (mul(r1, v), mul(r2, v)) {
        (Ok(p), Ok(q)) => {
            let n = ctx.dim();
            max_abs_diff(&map.matrix(&p, &q, ctx), &DMatrix::identity(n, n))
        }
        _ => f64::INFINITY,
    };
    report.record(GYROVECTOR_LAWS[6], identity_gyr);

    // (±‖a‖, ±‖b‖, ±‖u‖) under ⊕ and ⊗ form a genuine vector space
    let (p, q, w) = (a.norm(), -b.norm(), u.norm());
    let add1 = |x: f64, y: f64| scalar_norm_add(x, y, ctx);
    let mul1 = |r: f64, x: f64| scalar_mul_norm(r, x, ctx);
    let v8 = [
        relative_scalar_residual(add1(p, q), add1(q, p), s),
        relative_scalar_residual(add1(add1(p, q), w), add1(p, add1(q, w)), s),
        relative_scalar_residual(mul1(r1, add1(p, q)), add1(mul1(r1, p), mul1(r1, q)), s),
    ];
    report.record(GYROVECTOR_LAWS[7], v8.into_iter().fold(0.0, f64::max));

    let v9 = mul(r1, a).map_or(f64::INFINITY, |p| {
        relative_scalar_residual(p.norm(), scalar_mul_norm(r1.abs(), a.norm(), ctx), s)
    });
    report.record(GYROVECTOR_LAWS[8], v9);

    let v10 = add(a, b).map_or(f64::INFINITY, |sum| {
        let excess = sum.norm() - scalar_norm_add(a.norm(), b.norm(), ctx);
        excess.max(0.0) / s
    });
    report.record(GYROVECTOR_LAWS[9], v10);

    let half = einstein_half(a, ctx);
    report.record(
        GYROVECTOR_LAWS[10],
        vec_residual(add(&half, &half), Ok(a.clone())),
    );
}
