//! The open s-ball, Lorentz gamma factors and Einstein addition.
//!
//! Einstein addition of `u` in the ball and `v` anywhere in the ambient
//! space is
//!
//! ```text
//! u ⊕ v = { u + v/γ_u + (1/s²) γ_u/(1+γ_u) (u·v) u } / (1 + u·v/s²)
//! ```
//!
//! Only `γ_u` appears, so the second argument may leave the ball. The result
//! is a ball point whenever both arguments are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::context::{SpaceContext, DENOMINATOR_CUTOFF};
use crate::error::{GyroError, Result};

/// An unrestricted vector of the ambient space.
#[derive(Debug, Clone, PartialEq)]
pub struct AmbientVector(DVector<f64>);

impl AmbientVector {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(DVector::from_vec(coords))
    }

    pub fn from_dvector(coords: DVector<f64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DVector::zeros(dim))
    }

    /// The `i`-th standard basis vector scaled by `scale`.
    pub fn basis(dim: usize, i: usize, scale: f64) -> Self {
        let mut v = DVector::zeros(dim);
        v[i] = scale;
        Self(v)
    }

    #[inline]
    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn into_inner(self) -> DVector<f64> {
        self.0
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.0.iter().copied().collect()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    #[inline]
    pub fn norm_squared(&self) -> f64 {
        self.0.norm_squared()
    }

    #[inline]
    pub fn dot(&self, other: &AmbientVector) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self(&self.0 * factor)
    }

    /// Euclidean distance `‖self − other‖`.
    pub fn distance(&self, other: &AmbientVector) -> f64 {
        (&self.0 - &other.0).norm()
    }

    pub fn into_ball(self, ctx: &SpaceContext) -> Result<BallPoint> {
        BallPoint::from_dvector(self.0, ctx)
    }
}

impl Add for &AmbientVector {
    type Output = AmbientVector;
    fn add(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector(&self.0 + &rhs.0)
    }
}

impl Sub for &AmbientVector {
    type Output = AmbientVector;
    fn sub(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector(&self.0 - &rhs.0)
    }
}

impl Neg for &AmbientVector {
    type Output = AmbientVector;
    fn neg(self) -> AmbientVector {
        AmbientVector(-&self.0)
    }
}

impl Mul<f64> for &AmbientVector {
    type Output = AmbientVector;
    fn mul(self, rhs: f64) -> AmbientVector {
        AmbientVector(&self.0 * rhs)
    }
}

impl fmt::Display for AmbientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point strictly inside the open s-ball (an admissible velocity).
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint(DVector<f64>);

impl BallPoint {
    pub fn new(coords: Vec<f64>, ctx: &SpaceContext) -> Result<Self> {
        Self::from_dvector(DVector::from_vec(coords), ctx)
    }

    pub fn from_dvector(coords: DVector<f64>, ctx: &SpaceContext) -> Result<Self> {
        ctx.check_dim(coords.len())?;
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GyroError::NonFinite);
        }
        let norm = coords.norm();
        if norm < ctx.s() {
            Ok(Self(coords))
        } else {
            Err(GyroError::OutsideBall { norm, s: ctx.s() })
        }
    }

    pub fn origin(dim: usize) -> Self {
        Self(DVector::zeros(dim))
    }

    /// For results whose norm is provably no larger than an input's.
    pub(crate) fn trusted(coords: DVector<f64>) -> Self {
        Self(coords)
    }

    #[inline]
    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn to_ambient(&self) -> AmbientVector {
        AmbientVector(self.0.clone())
    }

    pub fn into_ambient(self) -> AmbientVector {
        AmbientVector(self.0)
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.0.iter().copied().collect()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    #[inline]
    pub fn dot(&self, other: &BallPoint) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }
}

/// `⊖v = −v`.
impl Neg for &BallPoint {
    type Output = BallPoint;
    fn neg(self) -> BallPoint {
        BallPoint(-&self.0)
    }
}

impl Neg for BallPoint {
    type Output = BallPoint;
    fn neg(self) -> BallPoint {
        BallPoint(-self.0)
    }
}

impl From<BallPoint> for AmbientVector {
    fn from(p: BallPoint) -> Self {
        p.into_ambient()
    }
}

/// Whether a gamma factor is real, infinite (boundary) or purely imaginary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaKind {
    Real,
    Infinite,
    Imaginary,
}

/// Where a point sits relative to the ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Inside,
    Boundary,
    Outside,
}

impl Region {
    /// Half-width of the boundary band, `1e-10·(Σ|m_k|)²`.
    pub fn band<I: IntoIterator<Item = f64>>(weights: I) -> f64 {
        let total: f64 = weights.into_iter().map(f64::abs).sum();
        1e-10 * total * total
    }

    /// Classifies by the sign of a signed square (`m₀²`, `m_P²`) with a
    /// symmetric band of half-width `tol` around zero.
    pub fn from_signed_sq(value: f64, tol: f64) -> Self {
        if value > tol {
            Region::Inside
        } else if value < -tol {
            Region::Outside
        } else {
            Region::Boundary
        }
    }
}

/// A gamma factor stored through its signed square, so vectors on or past
/// the boundary still carry a value without choosing a complex branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedGamma {
    gamma_sq: f64,
}

impl SignedGamma {
    pub const INFINITE: SignedGamma = SignedGamma {
        gamma_sq: f64::INFINITY,
    };

    pub fn from_sq(gamma_sq: f64) -> Self {
        Self { gamma_sq }
    }

    /// `γ²`; `+∞` on the boundary.
    #[inline]
    pub fn gamma_sq(&self) -> f64 {
        self.gamma_sq
    }

    pub fn kind(&self) -> GammaKind {
        if self.gamma_sq.is_infinite() {
            GammaKind::Infinite
        } else if self.gamma_sq < 0.0 {
            GammaKind::Imaginary
        } else {
            GammaKind::Real
        }
    }

    /// `+√γ²` when the gamma factor is real.
    pub fn real(&self) -> Option<f64> {
        (self.kind() == GammaKind::Real).then(|| self.gamma_sq.sqrt())
    }

    /// `|γ|` when the gamma factor is purely imaginary.
    pub fn imaginary(&self) -> Option<f64> {
        (self.kind() == GammaKind::Imaginary).then(|| (-self.gamma_sq).sqrt())
    }
}

/// `1 − ‖v‖²/s²` as `(1 − r)(1 + r)`, `r = ‖v‖/s`.
#[inline]
pub(crate) fn radicand(norm: f64, s: f64) -> f64 {
    let r = norm / s;
    (1.0 - r) * (1.0 + r)
}

#[inline]
pub(crate) fn gamma_of_norm(norm: f64, s: f64) -> f64 {
    1.0 / radicand(norm, s).sqrt()
}

/// `γ − 1` without cancellation for slow velocities: `γ²r²/(γ+1)`.
#[inline]
pub(crate) fn gamma_minus_one(gamma: f64, norm: f64, s: f64) -> f64 {
    let r = norm / s;
    gamma * gamma * r * r / (gamma + 1.0)
}

/// Einstein addition on raw coordinates with `γ_u` supplied.
pub(crate) fn add_raw(
    u: &DVector<f64>,
    gamma_u: f64,
    v: &DVector<f64>,
    s: f64,
) -> Result<DVector<f64>> {
    let s_sq = s * s;
    let uv = u.dot(v) / s_sq;
    let denom = 1.0 + uv;
    if denom <= DENOMINATOR_CUTOFF {
        return Err(GyroError::DenominatorVanishes(denom));
    }
    let coef = 1.0 + gamma_u / (1.0 + gamma_u) * uv;
    Ok((u * coef + v / gamma_u) / denom)
}

/// The Lorentz gamma factor `1/√(1 − ‖v‖²/s²)`.
pub fn gamma(v: &BallPoint, ctx: &SpaceContext) -> f64 {
    gamma_of_norm(v.norm(), ctx.s())
}

/// Gamma factor of an arbitrary vector, carried as a signed square.
///
/// Vectors whose radicand lies within `abs_tol` of zero are flagged as
/// boundary points with an infinite gamma factor.
pub fn gamma_signed(v: &AmbientVector, ctx: &SpaceContext) -> SignedGamma {
    let rad = radicand(v.norm(), ctx.s());
    if rad.abs() <= ctx.abs_tol() {
        SignedGamma::INFINITE
    } else {
        SignedGamma::from_sq(1.0 / rad)
    }
}

/// Einstein addition `u ⊕ v` with `v` in the extended domain.
pub fn einstein_add(u: &BallPoint, v: &AmbientVector, ctx: &SpaceContext) -> Result<AmbientVector> {
    ctx.check_dim(v.dim())?;
    add_raw(u.coords(), gamma(u, ctx), v.coords(), ctx.s()).map(AmbientVector)
}

/// Einstein addition of two ball points; the sum stays in the ball.
pub fn einstein_add_points(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    ctx.check_dim(v.dim())?;
    let sum = add_raw(u.coords(), gamma(u, ctx), v.coords(), ctx.s())?;
    ctx.rewrap(sum)
}

/// Einstein subtraction `u ⊖ v = u ⊕ (−v)`.
pub fn einstein_sub(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    einstein_add_points(u, &-v, ctx)
}

/// `⊖u ⊕ v`, the gyrovector from `u` to `v`.
pub fn gyrodifference(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
    einstein_add_points(&-u, v, ctx)
}

/// Gamma identity: `γ_{u⊕v} = γ_u γ_v (1 + u·v/s²)`.
pub fn gamma_of_sum(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> f64 {
    gamma(u, ctx) * gamma(v, ctx) * (1.0 + u.dot(v) / ctx.s_sq())
}

/// `γ_{⊖u⊕v} = γ_u γ_v (1 − u·v/s²)`, computed without forming `⊖u⊕v`.
pub fn gamma_of_gyrodifference(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> f64 {
    gamma(u, ctx) * gamma(v, ctx) * (1.0 - u.dot(v) / ctx.s_sq())
}

/// Einstein addition of parallel speeds, `(a + b)/(1 + ab/s²)`.
///
/// Intended for magnitudes in `[0, s)`; also valid for signed values in
/// `(−s, s)`, where it is the one-dimensional Einstein addition.
pub fn scalar_norm_add(a: f64, b: f64, ctx: &SpaceContext) -> f64 {
    (a + b) / (1.0 + a * b / ctx.s_sq())
}
