use nalgebra::DVector;

use crate::ball::{AmbientVector, BallPoint};
use crate::error::{GyroError, Result};

/// Default relative tolerance for equality assertions.
pub const DEFAULT_REL_TOL: f64 = 1e-9;
/// Default absolute tolerance for equality assertions.
pub const DEFAULT_ABS_TOL: f64 = 1e-12;
/// `1 + u.v/s^2` at or below this value leaves the Einstein sum undefined.
pub const DENOMINATOR_CUTOFF: f64 = 1e-13;

/// The ball radius, dimension and comparison tolerances shared by every
/// operation. The radius plays the role of the speed of light.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceContext {
    s: f64,
    dim: usize,
    rel_tol: f64,
    abs_tol: f64,
}

impl SpaceContext {
    pub fn new(s: f64, dim: usize) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(GyroError::InvalidContext(format!(
                "ball radius must be positive and finite, got {s}"
            )));
        }
        if dim == 0 {
            return Err(GyroError::InvalidContext(
                "dimension must be at least 1".into(),
            ));
        }
        Ok(Self {
            s,
            dim,
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
        })
    }

    /// Unit ball of the given dimension.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(1.0, dim)
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if !(rel_tol > 0.0 && abs_tol > 0.0 && rel_tol.is_finite() && abs_tol.is_finite()) {
            return Err(GyroError::InvalidContext(
                "tolerances must be positive and finite".into(),
            ));
        }
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        Ok(self)
    }

    #[inline]
    pub fn s(&self) -> f64 {
        self.s
    }

    #[inline]
    pub fn s_sq(&self) -> f64 {
        self.s * self.s
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    #[inline]
    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    /// `max(abs_tol, rel_tol * scale)`.
    #[inline]
    pub fn tolerance(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale.abs())
    }

    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.tolerance(a.abs().max(b.abs()))
    }

    pub fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(GyroError::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    /// Validates the dimension and finiteness of an ambient vector.
    pub fn ambient(&self, coords: Vec<f64>) -> Result<AmbientVector> {
        self.check_dim(coords.len())?;
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GyroError::NonFinite);
        }
        Ok(AmbientVector::new(coords))
    }

    pub fn ball_point(&self, coords: Vec<f64>) -> Result<BallPoint> {
        BallPoint::new(coords, self)
    }

    pub fn origin(&self) -> BallPoint {
        BallPoint::origin(self.dim)
    }

    /// Wraps a computed vector as a ball point, failing when rounding has
    /// pushed it onto or past the boundary.
    pub(crate) fn rewrap(&self, coords: DVector<f64>) -> Result<BallPoint> {
        BallPoint::from_dvector(coords, self)
    }
}

impl Default for SpaceContext {
    fn default() -> Self {
        Self {
            s: 1.0,
            dim: 3,
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
        }
    }
}
