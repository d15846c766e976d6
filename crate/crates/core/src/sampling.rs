//! Seeded random generation of ball points, rotations and gyromotions for
//! the property suites.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::ball::BallPoint;
use crate::context::SpaceContext;
use crate::gyration::RotationMatrix;
use crate::motions::GyroMotion;

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_direction<R: Rng>(rng: &mut R, dim: usize) -> DVector<f64> {
    loop {
        let v = DVector::from_iterator(dim, (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)));
        let n = v.norm();
        if n > 1e-12 {
            return v / n;
        }
    }
}

/// Uniform direction, radius uniform in `[0, max_fraction·s)`.
pub fn ball_point<R: Rng>(rng: &mut R, ctx: &SpaceContext, max_fraction: f64) -> BallPoint {
    let r = rng.random::<f64>() * max_fraction;
    ball_point_with_norm(rng, ctx, r)
}

/// Uniform direction with norm exactly `fraction·s`.
pub fn ball_point_with_norm<R: Rng>(rng: &mut R, ctx: &SpaceContext, fraction: f64) -> BallPoint {
    assert!(
        (0.0..1.0).contains(&fraction),
        "fraction must lie in [0, 1)"
    );
    let dir = unit_direction(rng, ctx.dim());
    BallPoint::from_dvector(dir * (fraction * ctx.s()), ctx)
        .expect("scaled unit direction lies inside the ball")
}

/// Haar-distributed rotation: QR of a Gaussian matrix with sign fix-ups.
pub fn rotation<R: Rng>(rng: &mut R, dim: usize) -> RotationMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    RotationMatrix::from_raw(q)
}

pub fn gyromotion<R: Rng>(rng: &mut R, ctx: &SpaceContext, max_fraction: f64) -> GyroMotion {
    let x = ball_point(rng, ctx, max_fraction);
    let r = rotation(rng, ctx.dim());
    GyroMotion::new(x, r, ctx).expect("sampled rotation is proper")
}
