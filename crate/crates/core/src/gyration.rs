//! Gyrations `gyr[u,v]` as explicit linear maps of the ambient space, their
//! matrices, and the gyrogroup axiom checker.
//!
//! `gyr[u,v]w = w + (A u + B v)/D` with
//!
//! ```text
//! A = −(1/s²) γ_u²/(γ_u+1) (γ_v−1)(u·w) + (1/s²) γ_uγ_v (v·w)
//!     + (2/s⁴) γ_u²γ_v²/((γ_u+1)(γ_v+1)) (u·v)(v·w)
//! B = −(1/s²) γ_v/(γ_v+1) {γ_u(γ_v+1)(u·w) + (γ_u−1)γ_v(v·w)}
//! D = γ_uγ_v(1 + u·v/s²) + 1 = γ_{u⊕v} + 1
//! ```
//!
//! No gamma factor of `w` appears, so `w` ranges over all of ℝⁿ.

use nalgebra::{DMatrix, DVector};

use crate::ball::{einstein_add_points, gamma, gamma_minus_one, AmbientVector, BallPoint};
use crate::context::SpaceContext;
use crate::error::{GyroError, Result};
use crate::numeric::{max_abs_diff, orthogonality_error, relative_residual};
use crate::report::AxiomReport;

/// An orthogonal matrix with determinant +1.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationMatrix(DMatrix<f64>);

impl RotationMatrix {
    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    /// Validates orthogonality and orientation to within `rel_tol`.
    pub fn try_new(m: DMatrix<f64>, ctx: &SpaceContext) -> Result<Self> {
        if !m.is_square() {
            return Err(GyroError::InvalidContext(
                "rotation matrix must be square".into(),
            ));
        }
        ctx.check_dim(m.nrows())?;
        let tol = ctx.rel_tol();
        if orthogonality_error(&m) > tol {
            return Err(GyroError::InvalidContext("matrix is not orthogonal".into()));
        }
        if (m.determinant() - 1.0).abs() > tol {
            return Err(GyroError::InvalidContext(
                "matrix is not a proper rotation".into(),
            ));
        }
        Ok(Self(m))
    }

    /// Wraps a matrix produced by a map known to be a rotation. The
    /// orientation is checked by tests, not here.
    pub(crate) fn from_raw(m: DMatrix<f64>) -> Self {
        Self(m)
    }

    /// Planar rotation by `theta` radians.
    pub fn planar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self(DMatrix::from_row_slice(2, 2, &[c, -s, s, c]))
    }

    #[inline]
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn apply(&self, v: &AmbientVector) -> AmbientVector {
        AmbientVector::from_dvector(&self.0 * v.coords())
    }

    pub fn apply_point(&self, p: &BallPoint, ctx: &SpaceContext) -> Result<BallPoint> {
        ctx.rewrap(&self.0 * p.coords())
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &RotationMatrix) -> RotationMatrix {
        RotationMatrix(&self.0 * &other.0)
    }

    /// The inverse rotation.
    pub fn transpose(&self) -> RotationMatrix {
        RotationMatrix(self.0.transpose())
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    pub fn orthogonality_error(&self) -> f64 {
        orthogonality_error(&self.0)
    }

    /// Largest entry-wise difference to another matrix.
    pub fn distance(&self, other: &RotationMatrix) -> f64 {
        max_abs_diff(&self.0, &other.0)
    }
}

/// `gyr[u,v]` with its gamma factors precomputed.
#[derive(Debug, Clone)]
pub struct Gyration {
    u: BallPoint,
    v: BallPoint,
    ctx: SpaceContext,
    gamma_u: f64,
    gamma_v: f64,
    gamma_u_m1: f64,
    gamma_v_m1: f64,
    uv: f64,
}

impl Gyration {
    pub fn new(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> Self {
        let gamma_u = gamma(u, ctx);
        let gamma_v = gamma(v, ctx);
        Self {
            gamma_u_m1: gamma_minus_one(gamma_u, u.norm(), ctx.s()),
            gamma_v_m1: gamma_minus_one(gamma_v, v.norm(), ctx.s()),
            uv: u.dot(v),
            u: u.clone(),
            v: v.clone(),
            ctx: *ctx,
            gamma_u,
            gamma_v,
        }
    }

    pub fn generators(&self) -> (&BallPoint, &BallPoint) {
        (&self.u, &self.v)
    }

    /// `D = γ_{u⊕v} + 1`.
    pub fn denominator(&self) -> f64 {
        self.gamma_u * self.gamma_v * (1.0 + self.uv / self.ctx.s_sq()) + 1.0
    }

    pub(crate) fn apply_raw(&self, w: &DVector<f64>) -> DVector<f64> {
        let s_sq = self.ctx.s_sq();
        let (gu, gv) = (self.gamma_u, self.gamma_v);
        let uw = self.u.coords().dot(w);
        let vw = self.v.coords().dot(w);
        let a = (-gu * gu / (gu + 1.0) * self.gamma_v_m1 * uw + gu * gv * vw) / s_sq
            + 2.0 * gu * gu * gv * gv / ((gu + 1.0) * (gv + 1.0)) * self.uv * vw / (s_sq * s_sq);
        let b = -gv / (gv + 1.0) * (gu * (gv + 1.0) * uw + self.gamma_u_m1 * gv * vw) / s_sq;
        let d = self.denominator();
        w + (self.u.coords() * a + self.v.coords() * b) / d
    }

    pub fn apply(&self, w: &AmbientVector) -> AmbientVector {
        AmbientVector::from_dvector(self.apply_raw(w.coords()))
    }

    /// Gyrations preserve the norm, so ball points map to ball points.
    pub fn apply_point(&self, w: &BallPoint) -> Result<BallPoint> {
        self.ctx.rewrap(self.apply_raw(w.coords()))
    }

    /// The matrix of the linear map, column `i` being the image of `eᵢ`.
    pub fn matrix(&self) -> RotationMatrix {
        let n = self.ctx.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            let mut e = DVector::zeros(n);
            e[i] = 1.0;
            m.set_column(i, &self.apply_raw(&e));
        }
        RotationMatrix::from_raw(m)
    }

    /// `gyr[v,u]`, the inverse map.
    pub fn inverse(&self) -> Gyration {
        Gyration::new(&self.v, &self.u, &self.ctx)
    }
}

/// `gyr[u,v]w`.
pub fn gyr_apply(
    u: &BallPoint,
    v: &BallPoint,
    w: &AmbientVector,
    ctx: &SpaceContext,
) -> AmbientVector {
    Gyration::new(u, v, ctx).apply(w)
}

pub fn gyr_matrix(u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> RotationMatrix {
    Gyration::new(u, v, ctx).matrix()
}

/// A gyration implementation the axiom checkers can be pointed at. The
/// library's own is [`ExplicitGyration`]; tests substitute broken ones to
/// confirm the checkers notice.
pub trait GyrationMap: Sync {
    fn gyrate(
        &self,
        u: &BallPoint,
        v: &BallPoint,
        w: &AmbientVector,
        ctx: &SpaceContext,
    ) -> AmbientVector;

    fn matrix(&self, u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> DMatrix<f64> {
        let n = ctx.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            let col = self.gyrate(u, v, &AmbientVector::basis(n, i, 1.0), ctx);
            m.set_column(i, col.coords());
        }
        m
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExplicitGyration;

impl GyrationMap for ExplicitGyration {
    fn gyrate(
        &self,
        u: &BallPoint,
        v: &BallPoint,
        w: &AmbientVector,
        ctx: &SpaceContext,
    ) -> AmbientVector {
        gyr_apply(u, v, w, ctx)
    }

    fn matrix(&self, u: &BallPoint, v: &BallPoint, ctx: &SpaceContext) -> DMatrix<f64> {
        gyr_matrix(u, v, ctx).0
    }
}

pub const GYROGROUP_LAWS: [&str; 12] = [
    "G1 left identity",
    "G2 left inverse",
    "G3 left gyroassociative",
    "G4 gyroautomorphism",
    "G5 left loop",
    "G6 gyrocommutative",
    "right gyroassociative",
    "right reduction",
    "even property",
    "inversion law",
    "gyroautomorphic inverse",
    "left cancellation",
];

/// Checks the gyrogroup axioms and the derived gyration laws on each triple,
/// returning the worst residual per law.
pub fn check_gyrogroup_axioms(sample: &[[BallPoint; 3]], ctx: &SpaceContext) -> AxiomReport {
    check_gyrogroup_axioms_with(&ExplicitGyration, sample, ctx)
}

pub fn check_gyrogroup_axioms_with(
    map: &dyn GyrationMap,
    sample: &[[BallPoint; 3]],
    ctx: &SpaceContext,
) -> AxiomReport {
    let mut report = AxiomReport::new();
    for law in GYROGROUP_LAWS {
        report.declare(law);
    }
    for [a, b, c] in sample {
        check_triple(map, a, b, c, ctx, &mut report);
    }
    report
}

fn check_triple(
    map: &dyn GyrationMap,
    a: &BallPoint,
    b: &BallPoint,
    c: &BallPoint,
    ctx: &SpaceContext,
    report: &mut AxiomReport,
) {
    let s = ctx.s();
    let add = |x: &BallPoint, y: &BallPoint| einstein_add_points(x, y, ctx);
    let gyr = |x: &BallPoint, y: &BallPoint, w: &BallPoint| -> Result<BallPoint> {
        ctx.rewrap(map.gyrate(x, y, &w.to_ambient(), ctx).into_inner())
    };
    let mut vec_law = |law, lhs: Result<BallPoint>, rhs: Result<BallPoint>| {
        let r = match (lhs, rhs) {
            (Ok(l), Ok(r)) => relative_residual(l.coords(), r.coords(), s),
            _ => f64::INFINITY,
        };
        report.record(law, r);
    };
    let zero = ctx.origin();

    vec_law(GYROGROUP_LAWS[0], add(&zero, a), Ok(a.clone()));
    vec_law(GYROGROUP_LAWS[1], add(&-a, a), Ok(zero.clone()));

    let ab = add(a, b);
    vec_law(
        GYROGROUP_LAWS[2],
        add(b, c).and_then(|bc| add(a, &bc)),
        ab.clone().and_then(|ab| add(&ab, &gyr(a, b, c)?)),
    );
    // gyr[a,b] respects ⊕ on the pair (c, a)
    vec_law(
        GYROGROUP_LAWS[3],
        add(c, a).and_then(|ca| gyr(a, b, &ca)),
        gyr(a, b, c).and_then(|gc| add(&gc, &gyr(a, b, a)?)),
    );
    vec_law(
        GYROGROUP_LAWS[5],
        ab.clone(),
        add(b, a).and_then(|ba| gyr(a, b, &ba)),
    );
    vec_law(
        GYROGROUP_LAWS[6],
        ab.clone().and_then(|ab| add(&ab, c)),
        gyr(b, a, c).and_then(|gc| add(a, &add(b, &gc)?)),
    );
    vec_law(GYROGROUP_LAWS[10], ab.clone().map(|ab| -ab), add(&-a, &-b));
    vec_law(
        GYROGROUP_LAWS[11],
        ab.clone().and_then(|ab| add(&-a, &ab)),
        Ok(b.clone()),
    );

    let m_ab = map.matrix(a, b, ctx);
    let mut mat_law = |law, other: Result<DMatrix<f64>>| {
        let r = other.map_or(f64::INFINITY, |m| max_abs_diff(&m_ab, &m));
        report.record(law, r);
    };
    mat_law(
        GYROGROUP_LAWS[4],
        ab.as_ref()
            .map(|ab| map.matrix(ab, b, ctx))
            .map_err(Clone::clone),
    );
    mat_law(
        GYROGROUP_LAWS[7],
        add(b, a).map(|ba| map.matrix(a, &ba, ctx)),
    );
    mat_law(GYROGROUP_LAWS[8], Ok(map.matrix(&-a, &-b, ctx)));
    let n = ctx.dim();
    let product = &m_ab * map.matrix(b, a, ctx);
    report.record(
        GYROGROUP_LAWS[9],
        max_abs_diff(&product, &DMatrix::identity(n, n)),
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::einstein_add;
    use crate::sampling::{ball_point, ball_point_with_norm, seeded_rng};
    use proptest::prelude::*;

    fn ctx(dim: usize) -> SpaceContext {
        SpaceContext::unit(dim).unwrap()
    }

    /// gyr[u,v]w = ⊖(u⊕v)⊕(u⊕(v⊕w)), built only from Einstein addition.
    fn gyr_by_definition(
        u: &BallPoint,
        v: &BallPoint,
        w: &BallPoint,
        c: &SpaceContext,
    ) -> DVector<f64> {
        let uv = einstein_add_points(u, v, c).unwrap();
        let vw = einstein_add_points(v, w, c).unwrap();
        let u_vw = einstein_add_points(u, &vw, c).unwrap();
        einstein_add_points(&-uv, &u_vw, c)
            .unwrap()
            .coords()
            .clone()
    }

    #[test]
    fn trivial_gyrations() {
        let c = ctx(3);
        let w = AmbientVector::new(vec![2.0, -1.0, 0.5]);
        let v = c.ball_point(vec![0.2, 0.3, -0.4]).unwrap();
        assert_eq!(gyr_apply(&c.origin(), &v, &w, &c), w);
        let half_v = c.ball_point(vec![0.1, 0.15, -0.2]).unwrap();
        let gw = gyr_apply(&half_v, &v, &w, &c);
        assert!((gw.coords() - w.coords()).norm() < 1e-15);
        let gw = gyr_apply(&v, &-&v, &w, &c);
        assert!((gw.coords() - w.coords()).norm() < 1e-15);
        assert_eq!(gyr_matrix(&c.origin(), &v, &c), RotationMatrix::identity(3));
    }

    #[test]
    fn explicit_formula_matches_definition() {
        let c = SpaceContext::new(2.0, 4).unwrap();
        let mut rng = seeded_rng(11);
        for _ in 0..200 {
            let u = ball_point(&mut rng, &c, 0.98);
            let v = ball_point(&mut rng, &c, 0.98);
            let w = ball_point(&mut rng, &c, 0.98);
            let explicit = gyr_apply(&u, &v, &w.to_ambient(), &c);
            let oracle = gyr_by_definition(&u, &v, &w, &c);
            assert!(relative_residual(explicit.coords(), &oracle, c.s()) < 1e-12);
        }
    }

    #[test]
    fn planar_gyration_angle() {
        let c = ctx(2);
        let u = c.ball_point(vec![0.5, 0.0]).unwrap();
        let v = c.ball_point(vec![0.0, 0.5]).unwrap();
        let m = gyr_matrix(&u, &v, &c);
        // oracle: definition-based images of scaled basis vectors
        let e1 = c.ball_point(vec![0.1, 0.0]).unwrap();
        let e2 = c.ball_point(vec![0.0, 0.1]).unwrap();
        let col1 = gyr_by_definition(&u, &v, &e1, &c) / 0.1;
        let col2 = gyr_by_definition(&u, &v, &e2, &c) / 0.1;
        assert!((m.matrix().column(0) - col1).norm() < 1e-13);
        assert!((m.matrix().column(1) - col2).norm() < 1e-13);
        // frozen from a 40-digit evaluation of the definition: sin θ = −1/7
        let theta = m.matrix()[(1, 0)].atan2(m.matrix()[(0, 0)]);
        assert!((theta - -0.143_347_568_905_365_36).abs() < 1e-14);
        assert!((m.matrix()[(1, 0)] + 1.0 / 7.0).abs() < 1e-15);
        assert!(m.distance(&RotationMatrix::planar(theta)) < 1e-15);
    }

    #[test]
    fn inversion_and_orientation() {
        let c = ctx(3);
        let mut rng = seeded_rng(5);
        for _ in 0..50 {
            let u = ball_point(&mut rng, &c, 0.99);
            let v = ball_point(&mut rng, &c, 0.99);
            let g = Gyration::new(&u, &v, &c);
            let m = g.matrix();
            let inv = g.inverse().matrix();
            assert!(m.compose(&inv).distance(&RotationMatrix::identity(3)) < 1e-13);
            assert!(m.orthogonality_error() < 1e-13);
            assert!((m.determinant() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn gyrodifference_norm_chain() {
        let c = ctx(3);
        let mut rng = seeded_rng(8);
        for _ in 0..50 {
            let u = ball_point(&mut rng, &c, 0.95);
            let v = ball_point(&mut rng, &c, 0.95);
            let a = einstein_add_points(&-&u, &v, &c).unwrap().norm();
            let b = einstein_add_points(&u, &-&v, &c).unwrap().norm();
            let d = einstein_add_points(&-&v, &u, &c).unwrap().norm();
            assert!((a - b).abs() < 1e-13 && (a - d).abs() < 1e-13);
        }
    }

    #[test]
    fn axiom_suite_on_random_triples() {
        let c = ctx(3);
        let mut rng = seeded_rng(1);
        let sample: Vec<[BallPoint; 3]> = (0..200)
            .map(|_| std::array::from_fn(|_| ball_point(&mut rng, &c, 0.99)))
            .collect();
        let report = check_gyrogroup_axioms(&sample, &c);
        assert_eq!(report.laws.len(), GYROGROUP_LAWS.len());
        assert!(report.passes(1e-9), "{report:?}");
    }

    #[test]
    fn degenerate_triple_has_zero_residuals() {
        let c = ctx(3);
        let z = c.origin();
        let report = check_gyrogroup_axioms(&[[z.clone(), z.clone(), z]], &c);
        assert!(
            report.laws.iter().all(|l| l.max_residual == 0.0),
            "{report:?}"
        );
    }

    #[test]
    fn collinear_triple_reduces_to_associativity() {
        let c = ctx(3);
        let dir = [0.6, -0.48, 0.64];
        let p = |t: f64| c.ball_point(dir.iter().map(|x| x * t).collect()).unwrap();
        let report = check_gyrogroup_axioms(&[[p(0.9), p(-0.5), p(0.7)]], &c);
        assert!(report.max_residual("G3 left gyroassociative").unwrap() < 1e-12);
        assert!(report.passes(1e-12), "{report:?}");
    }

    struct SignFlipped;
    impl GyrationMap for SignFlipped {
        fn gyrate(
            &self,
            u: &BallPoint,
            v: &BallPoint,
            w: &AmbientVector,
            ctx: &SpaceContext,
        ) -> AmbientVector {
            let g = Gyration::new(u, v, ctx);
            let gw = g.apply(w);
            // w − (Au + Bv)/D instead of w + (Au + Bv)/D
            &(w * 2.0) - &gw
        }
    }

    #[test]
    fn suite_detects_a_broken_gyration() {
        let c = ctx(3);
        let mut rng = seeded_rng(2);
        let sample: Vec<[BallPoint; 3]> = (0..20)
            .map(|_| std::array::from_fn(|_| ball_point(&mut rng, &c, 0.9)))
            .collect();
        let report = check_gyrogroup_axioms_with(&SignFlipped, &sample, &c);
        assert!(!report.passes(1e-9));
        assert!(report.max_residual("G3 left gyroassociative").unwrap() > 1e-4);
    }

    #[test]
    fn near_boundary_extended_domain() {
        let c = ctx(3);
        let mut rng = seeded_rng(3);
        for _ in 0..100 {
            let u = ball_point_with_norm(&mut rng, &c, 0.999);
            let v = ball_point_with_norm(&mut rng, &c, 0.999);
            let w = AmbientVector::new(vec![3.0, -7.0, 1.5]);
            let gw = gyr_apply(&u, &v, &w, &c);
            assert!((gw.norm() - w.norm()).abs() < 1e-12 * w.norm());
        }
        let u = c.ball_point(vec![0.3, 0.0, 0.0]).unwrap();
        assert!(einstein_add(&u, &AmbientVector::new(vec![1.0, 1.0, 1.0]), &c).is_ok());
    }

    fn ball3() -> impl Strategy<Value = Vec<f64>> {
        (prop::collection::vec(-1.0f64..1.0, 3), 0.0f64..0.995).prop_filter_map(
            "nonzero direction",
            |(d, r)| {
                let n = d.iter().map(|x| x * x).sum::<f64>().sqrt();
                (n > 1e-6).then(|| d.iter().map(|x| x / n * r).collect())
            },
        )
    }

    proptest! {
        #[test]
        fn gyrations_preserve_inner_products(u in ball3(), v in ball3(), a in prop::collection::vec(-5.0f64..5.0, 3), b in prop::collection::vec(-5.0f64..5.0, 3)) {
            let c = ctx(3);
            let g = Gyration::new(&c.ball_point(u).unwrap(), &c.ball_point(v).unwrap(), &c);
            let (a, b) = (AmbientVector::new(a), AmbientVector::new(b));
            let (ga, gb) = (g.apply(&a), g.apply(&b));
            let scale = a.norm() * b.norm() + 1e-300;
            prop_assert!((ga.dot(&gb) - a.dot(&b)).abs() <= 1e-12 * scale.max(1.0));
            prop_assert!((ga.norm() - a.norm()).abs() <= 1e-12 * a.norm().max(1.0));
        }
    }
}
