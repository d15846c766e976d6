//! Lorentz and Galilei boosts, four-vectors in the `(t, x)` convention, and
//! the resultant invariant mass of a particle system.

use nalgebra::{DVector, Matrix4};

use crate::ball::{gamma, AmbientVector, BallPoint, Region, SignedGamma};
use crate::context::SpaceContext;
use crate::error::{GyroError, Result};
use crate::numeric::{compensated_sum, compensated_weighted_sum, CompensatedSum};

#[derive(Debug, Clone, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: AmbientVector,
}

impl FourVector {
    pub fn new(t: f64, x: AmbientVector) -> Self {
        Self { t, x }
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn scaled(&self, k: f64) -> FourVector {
        FourVector::new(self.t * k, self.x.scaled(k))
    }

    pub fn add(&self, other: &FourVector) -> FourVector {
        FourVector::new(self.t + other.t, &self.x + &other.x)
    }

    /// `(t, x₁, …, xₙ)` as one column.
    pub fn to_dvector(&self) -> DVector<f64> {
        DVector::from_iterator(
            self.dim() + 1,
            std::iter::once(self.t).chain(self.x.coords().iter().copied()),
        )
    }
}

/// `L(u)(t, x) = (γ(t + u·x/s²), γut + x + (1/s²)·γ²/(1+γ)·(u·x)u)`.
pub fn boost_apply(u: &BallPoint, fv: &FourVector, ctx: &SpaceContext) -> FourVector {
    let g = gamma(u, ctx);
    let ux = u.coords().dot(fv.x.coords());
    let s2 = ctx.s_sq();
    let t = g * (fv.t + ux / s2);
    let x = u.coords() * (g * fv.t) + fv.x.coords() + u.coords() * (g * g / (1.0 + g) * ux / s2);
    FourVector::new(t, AmbientVector::from_dvector(x))
}

/// The boost as a 4×4 matrix acting on `(t, x₁, x₂, x₃)`.
pub fn boost_matrix(u: &BallPoint, ctx: &SpaceContext) -> Result<Matrix4<f64>> {
    if u.dim() != 3 {
        return Err(GyroError::DimensionMismatch {
            expected: 3,
            found: u.dim(),
        });
    }
    let g = gamma(u, ctx);
    let s2 = ctx.s_sq();
    let k = g * g / (s2 * (1.0 + g));
    let v = u.coords();
    Ok(Matrix4::from_fn(|i, j| match (i, j) {
        (0, 0) => g,
        (0, j) => g * v[j - 1] / s2,
        (i, 0) => g * v[i - 1],
        (i, j) => f64::from(u8::from(i == j)) + k * v[i - 1] * v[j - 1],
    }))
}

/// `(t, x + vt)`.
pub fn galilei_boost(v: &AmbientVector, fv: &FourVector) -> FourVector {
    FourVector::new(fv.t, &fv.x + &v.scaled(fv.t))
}

/// `t² − ‖x‖²/s²`.
pub fn minkowski_norm_sq(fv: &FourVector, ctx: &SpaceContext) -> f64 {
    fv.t * fv.t - fv.x.norm_squared() / ctx.s_sq()
}

/// `(γ_v, γ_v v)`.
pub fn four_velocity(v: &BallPoint, ctx: &SpaceContext) -> FourVector {
    let g = gamma(v, ctx);
    FourVector::new(g, AmbientVector::from_dvector(v.coords() * g))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub m: f64,
    pub v: BallPoint,
}

impl Particle {
    pub fn new(m: f64, v: BallPoint) -> Self {
        Self { m, v }
    }
}

/// `m(γ_v, γ_v v)`.
pub fn four_momentum(p: &Particle, ctx: &SpaceContext) -> FourVector {
    four_velocity(&p.v, ctx).scaled(p.m)
}

pub fn total_four_momentum(system: &[Particle], ctx: &SpaceContext) -> FourVector {
    let t = compensated_sum(system.iter().map(|p| p.m * gamma(&p.v, ctx)));
    let weights: Vec<f64> = system.iter().map(|p| p.m * gamma(&p.v, ctx)).collect();
    let x = compensated_weighted_sum(
        ctx.dim(),
        weights
            .iter()
            .copied()
            .zip(system.iter().map(|p| p.v.coords())),
    );
    FourVector::new(t, AmbientVector::from_dvector(x))
}

/// `m₀` presented from its signed square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InvariantMass {
    /// Carries the sign of `Σ m_k γ_k`.
    Real(f64),
    Zero,
    /// `|m₀|` for `m₀² < 0`.
    Imaginary(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemResult {
    pub m0_sq: f64,
    pub m0: InvariantMass,
    /// `Σ m_k γ_k`, the relativistic mass of the system.
    pub gamma_mass: f64,
    pub v0: AmbientVector,
    pub gamma_v0: SignedGamma,
    pub classification: Region,
}

/// `γ_{⊖u⊕v} − 1` from the two velocities alone.
///
/// With `a = u/s`, `d = (v − u)/s`, the numerator
/// `‖d‖²(1 − ‖a‖²) + (a·d)²` has no cancellation for nearly equal
/// velocities.
pub(crate) fn pair_gamma_minus_one(u: &BallPoint, gu: f64, v: &BallPoint, gv: f64, s: f64) -> f64 {
    let a = u.coords() / s;
    let b = v.coords() / s;
    let d = &b - &a;
    let num = d.norm_squared() / (gu * gu) + a.dot(&d).powi(2);
    let den = (1.0 - a.dot(&b)) + 1.0 / (gu * gv);
    gu * gv * num / den
}

/// `(Σm_k)² + 2Σ_{j<k} m_j m_k (γ_{⊖v_j⊕v_k} − 1)`.
pub fn invariant_mass_sq(system: &[Particle], ctx: &SpaceContext) -> f64 {
    let gammas: Vec<f64> = system.iter().map(|p| gamma(&p.v, ctx)).collect();
    let total = compensated_sum(system.iter().map(|p| p.m));
    let mut pairs = CompensatedSum::new();
    for j in 0..system.len() {
        for k in j + 1..system.len() {
            let g = pair_gamma_minus_one(&system[j].v, gammas[j], &system[k].v, gammas[k], ctx.s());
            pairs.add(system[j].m * system[k].m * g);
        }
    }
    total * total + 2.0 * pairs.value()
}

pub fn resultant_invariant_mass(system: &[Particle], ctx: &SpaceContext) -> Result<SystemResult> {
    if system.is_empty() {
        return Err(GyroError::EmptyInput("particle system"));
    }
    for p in system {
        ctx.check_dim(p.v.dim())?;
    }
    let p = total_four_momentum(system, ctx);
    let gamma_mass = p.t;
    if gamma_mass.abs() <= ctx.abs_tol() {
        return Err(GyroError::DegenerateSystem(gamma_mass));
    }
    let m0_sq = invariant_mass_sq(system, ctx);
    let classification = Region::from_signed_sq(m0_sq, Region::band(system.iter().map(|p| p.m)));
    let v0 = p.x.scaled(1.0 / gamma_mass);
    let (m0, gamma_v0) = match classification {
        Region::Inside => (
            InvariantMass::Real(gamma_mass.signum() * m0_sq.sqrt()),
            SignedGamma::from_sq(gamma_mass * gamma_mass / m0_sq),
        ),
        Region::Boundary => (InvariantMass::Zero, SignedGamma::INFINITE),
        Region::Outside => (
            InvariantMass::Imaginary((-m0_sq).sqrt()),
            SignedGamma::from_sq(gamma_mass * gamma_mass / m0_sq),
        ),
    };
    Ok(SystemResult {
        m0_sq,
        m0,
        gamma_mass,
        v0,
        gamma_v0,
        classification,
    })
}

/// `m₀ = Σm_k`, `v₀ = Σm_k v_k / Σm_k`.
pub fn newtonian_resultant(system: &[(f64, AmbientVector)]) -> Result<(f64, AmbientVector)> {
    let first = system
        .first()
        .ok_or(GyroError::EmptyInput("particle system"))?;
    let dim = first.1.dim();
    for (_, v) in system {
        if v.dim() != dim {
            return Err(GyroError::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    let m0 = compensated_sum(system.iter().map(|(m, _)| *m));
    let scale: f64 = system.iter().map(|(m, _)| m.abs()).sum();
    if m0.abs() <= f64::EPSILON * scale {
        return Err(GyroError::DegenerateSystem(m0));
    }
    let v0 = compensated_weighted_sum(dim, system.iter().map(|(m, v)| (*m, v.coords()))) / m0;
    Ok((m0, AmbientVector::from_dvector(v0)))
}
