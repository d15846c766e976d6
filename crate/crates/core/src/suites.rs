//! Seeded property suites over the gyrogroup, gyrovector space, gyromotion
//! and gyrocovariance laws. Every suite takes the gyration implementation to
//! test so a deliberately broken one can be checked for detection.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::Rng;

use crate::ball::{einstein_add_points, gyrodifference, BallPoint};
use crate::barycentric::{eval_gyro, transform_rep, AnchorSet};
use crate::context::SpaceContext;
use crate::error::Result;
use crate::gyration::{check_gyrogroup_axioms_with, GyrationMap, RotationMatrix};
use crate::gyrovector::{
    check_gyrovector_axioms_with, gyrodistance, gyromidpoint, Gyroline, GyrovectorSample,
};
use crate::motions::{check_gyrocovariance, GyroMotion};
use crate::numeric::{inverse_condition, relative_residual, relative_scalar_residual};
use crate::report::AxiomReport;
use crate::sampling::{ball_point, gyromotion, seeded_rng, SampleRng};

/// Largest sampled norm as a fraction of `s`.
pub const SAMPLE_FRACTION: f64 = 0.99;
/// Largest norm for scalar-multiplication operands; keeps `r⊗a` for
/// `|r| ≤ 5` clear of the boundary.
pub const SCALAR_OPERAND_FRACTION: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gyrogroup,
    Gyrovector,
    Motions,
    Covariance,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Gyrogroup,
        Suite::Gyrovector,
        Suite::Motions,
        Suite::Covariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gyrogroup => "gyrogroup",
            Suite::Gyrovector => "gyrovector",
            Suite::Motions => "motions",
            Suite::Covariance => "covariance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

pub fn run_suite(
    suite: Suite,
    map: &dyn GyrationMap,
    ctx: &SpaceContext,
    seed: u64,
    count: usize,
) -> AxiomReport {
    let mut rng = seeded_rng(seed);
    match suite {
        Suite::Gyrogroup => gyrogroup_suite(map, ctx, &mut rng, count),
        Suite::Gyrovector => gyrovector_suite(map, ctx, &mut rng, count),
        Suite::Motions => motions_suite(map, ctx, &mut rng, count),
        Suite::Covariance => covariance_suite(ctx, &mut rng, count),
    }
}

pub fn gyrogroup_suite(
    map: &dyn GyrationMap,
    ctx: &SpaceContext,
    rng: &mut SampleRng,
    count: usize,
) -> AxiomReport {
    let sample: Vec<[BallPoint; 3]> = (0..count)
        .map(|_| std::array::from_fn(|_| ball_point(rng, ctx, SAMPLE_FRACTION)))
        .collect();
    check_gyrogroup_axioms_with(map, &sample, ctx)
}

pub fn gyrovector_samples(
    ctx: &SpaceContext,
    rng: &mut SampleRng,
    count: usize,
) -> Vec<GyrovectorSample> {
    (0..count)
        .map(|_| GyrovectorSample {
            a: ball_point(rng, ctx, SCALAR_OPERAND_FRACTION),
            b: ball_point(rng, ctx, SAMPLE_FRACTION),
            u: ball_point(rng, ctx, SAMPLE_FRACTION),
            v: ball_point(rng, ctx, SCALAR_OPERAND_FRACTION),
            r1: rng.random_range(-5.0..=5.0),
            r2: rng.random_range(-5.0..=5.0),
        })
        .collect()
}

pub fn gyrovector_suite(
    map: &dyn GyrationMap,
    ctx: &SpaceContext,
    rng: &mut SampleRng,
    count: usize,
) -> AxiomReport {
    check_gyrovector_axioms_with(map, &gyrovector_samples(ctx, rng, count), ctx)
}

pub const MOTION_LAWS: [&str; 5] = [
    "composition",
    "inverse",
    "gyrodistance preservation",
    "rotation respects addition",
    "left gyrotranslation theorem",
];

/// Gyromotion laws, with the gyration factor of each composition taken from
/// `map`.
pub fn motions_suite(
    map: &dyn GyrationMap,
    ctx: &SpaceContext,
    rng: &mut SampleRng,
    count: usize,
) -> AxiomReport {
    let mut report = AxiomReport::new();
    for law in MOTION_LAWS {
        report.declare(law);
    }
    let s = ctx.s();
    let vec_res = |l: Result<BallPoint>, r: Result<BallPoint>| match (l, r) {
        (Ok(l), Ok(r)) => relative_residual(l.coords(), r.coords(), s),
        _ => f64::INFINITY,
    };
    for _ in 0..count {
        let m1 = gyromotion(rng, ctx, SAMPLE_FRACTION);
        let m2 = gyromotion(rng, ctx, SAMPLE_FRACTION);
        let a = ball_point(rng, ctx, SAMPLE_FRACTION);
        let b = ball_point(rng, ctx, SAMPLE_FRACTION);

        let composed = compose_with(map, &m1, &m2, ctx);
        let seq = m2.apply(&a, ctx).and_then(|p| m1.apply(&p, ctx));
        report.record(
            MOTION_LAWS[0],
            vec_res(composed.and_then(|m| m.apply(&a, ctx)), seq),
        );

        let back = m1
            .inverse(ctx)
            .and_then(|inv| compose_with(map, &m1, &inv, ctx))
            .and_then(|m| m.apply(&a, ctx));
        report.record(MOTION_LAWS[1], vec_res(back, Ok(a.clone())));

        let d = m1
            .apply(&a, ctx)
            .and_then(|pa| gyrodistance(&pa, &m1.apply(&b, ctx)?, ctx));
        let r = match (d, gyrodistance(&a, &b, ctx)) {
            (Ok(x), Ok(y)) => relative_scalar_residual(x, y, s),
            _ => f64::INFINITY,
        };
        report.record(MOTION_LAWS[2], r);

        let rot = &m1.r;
        let lhs = einstein_add_points(&a, &b, ctx).and_then(|ab| rot.apply_point(&ab, ctx));
        let rhs = rot
            .apply_point(&a, ctx)
            .and_then(|ra| einstein_add_points(&ra, &rot.apply_point(&b, ctx)?, ctx));
        report.record(MOTION_LAWS[3], vec_res(lhs, rhs));

        // ⊖(X⊕A)⊕(X⊕B) = gyr[X,A](⊖A⊕B)
        let x = &m2.x;
        let lhs = einstein_add_points(x, &a, ctx)
            .and_then(|xa| gyrodifference(&xa, &einstein_add_points(x, &b, ctx)?, ctx));
        let rhs = gyrodifference(&a, &b, ctx)
            .and_then(|ab| ctx.rewrap(map.gyrate(x, &a, &ab.to_ambient(), ctx).into_inner()));
        report.record(MOTION_LAWS[4], vec_res(lhs, rhs));
    }
    report
}

/// `(X₁ ⊕ R₁X₂, gyr[X₁, R₁X₂]R₁R₂)` with the gyration matrix from `map`.
fn compose_with(
    map: &dyn GyrationMap,
    m1: &GyroMotion,
    m2: &GyroMotion,
    ctx: &SpaceContext,
) -> Result<GyroMotion> {
    let rx2 = m1.r.apply_point(&m2.x, ctx)?;
    let x = einstein_add_points(&m1.x, &rx2, ctx)?;
    let g: DMatrix<f64> = map.matrix(&m1.x, &rx2, ctx);
    let r = RotationMatrix::from_raw(g * m1.r.compose(&m2.r).matrix());
    GyroMotion::new(x, r, ctx)
}

pub const REP_CONSTANT_INVARIANCE: &str = "representation constant invariance";

/// Independent anchors whose gyrovector matrix is not badly conditioned.
pub fn well_conditioned_anchors(
    rng: &mut SampleRng,
    ctx: &SpaceContext,
    count: usize,
    max_fraction: f64,
) -> AnchorSet {
    loop {
        let pts: Vec<BallPoint> = (0..count)
            .map(|_| ball_point(rng, ctx, max_fraction))
            .collect();
        let cols: Option<Vec<_>> = pts[1..]
            .iter()
            .map(|p| {
                gyrodifference(&pts[0], p, ctx)
                    .ok()
                    .map(|g| g.coords().clone())
            })
            .collect();
        let Some(cols) = cols else { continue };
        if cols.is_empty() || inverse_condition(&DMatrix::from_columns(&cols)) > 1e-3 {
            if let Ok(anchors) = AnchorSet::new(pts, ctx) {
                return anchors;
            }
        }
    }
}

/// Gyrocovariance of the gyromidpoint, a gyroline point and gyrobarycentric
/// evaluation, plus invariance of the representation constant.
pub fn covariance_suite(ctx: &SpaceContext, rng: &mut SampleRng, count: usize) -> AxiomReport {
    let motions: Vec<GyroMotion> = (0..count)
        .map(|_| gyromotion(rng, ctx, SAMPLE_FRACTION))
        .collect();
    let pairs: Vec<Vec<BallPoint>> = (0..count)
        .map(|_| {
            (0..2)
                .map(|_| ball_point(rng, ctx, SAMPLE_FRACTION))
                .collect()
        })
        .collect();
    let n = ctx.dim().min(3) + 1;
    let anchor_sets: Vec<AnchorSet> = (0..count)
        .map(|_| well_conditioned_anchors(rng, ctx, n, 0.9))
        .collect();
    let weights: Vec<Vec<f64>> = (0..count)
        .map(|_| (0..n).map(|_| rng.random_range(0.05..1.0)).collect())
        .collect();
    let t: f64 = rng.random_range(-1.5..2.5);

    let mut report = AxiomReport::new();
    let rename = |r: AxiomReport, prefix: &'static str| {
        let mut out = AxiomReport::new();
        for l in r.laws {
            let law: &'static str = match (prefix, l.law) {
                ("gyromidpoint", crate::motions::TRANSLATION_COVARIANCE) => {
                    "gyromidpoint translation"
                }
                ("gyromidpoint", _) => "gyromidpoint rotation",
                ("gyroline", crate::motions::TRANSLATION_COVARIANCE) => {
                    "gyroline point translation"
                }
                ("gyroline", _) => "gyroline point rotation",
                (_, crate::motions::TRANSLATION_COVARIANCE) => "gyrobarycentric translation",
                _ => "gyrobarycentric rotation",
            };
            out.declare(law);
            if l.samples > 0 {
                out.record(law, l.max_residual);
            }
        }
        out
    };
    report.merge(rename(
        check_gyrocovariance(|p| gyromidpoint(&p[0], &p[1], ctx), &pairs, &motions, ctx),
        "gyromidpoint",
    ));
    report.merge(rename(
        check_gyrocovariance(
            |p| Gyroline::new(p[0].clone(), p[1].clone(), ctx)?.point(t, ctx),
            &pairs,
            &motions,
            ctx,
        ),
        "gyroline",
    ));

    report.declare("gyrobarycentric translation");
    report.declare("gyrobarycentric rotation");
    report.declare(REP_CONSTANT_INVARIANCE);
    for (i, (anchors, w)) in anchor_sets.iter().zip(&weights).enumerate() {
        let sample = vec![anchors.points().to_vec()];
        let m = &motions[i];
        let one = check_gyrocovariance(
            |pts| {
                eval_gyro(&AnchorSet::new(pts.to_vec(), ctx)?, w, ctx)?
                    .0
                    .into_ball(ctx)
            },
            &sample,
            std::slice::from_ref(m),
            ctx,
        );
        report.merge(rename(one, "gyrobarycentric"));
        let r = eval_gyro(anchors, w, ctx)
            .and_then(|(_, rep)| Ok((transform_rep(m, &rep, ctx)?, rep)))
            .map_or(f64::INFINITY, |(moved, rep)| {
                relative_scalar_residual(moved.const_sq, rep.const_sq, rep.const_sq.abs())
            });
        report.record(REP_CONSTANT_INVARIANCE, r);
    }
    report
}
