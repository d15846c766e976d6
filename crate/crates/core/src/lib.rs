//! Einstein gyrovector spaces on the open s-ball of ℝⁿ.

pub mod ball;
pub mod barycentric;
pub mod cli;
pub mod context;
pub mod error;
pub mod gyration;
pub mod gyrovector;
pub mod motions;
pub mod numeric;
pub mod relativity;
pub mod report;
pub mod sampling;
pub mod suites;

pub use ball::{
    einstein_add, einstein_add_points, einstein_sub, gamma, gamma_signed, gyrodifference,
    AmbientVector, BallPoint, GammaKind, SignedGamma,
};
pub use context::SpaceContext;
pub use error::{GyroError, Result};
pub use gyration::{gyr_apply, gyr_matrix, Gyration, RotationMatrix};
