//! Exact Fréchet distance between polygonal curves by a sweep over the
//! distance terrain that keeps, per row and column, a deque of candidate entry
//! boundaries and an upper envelope of boundary profiles.
//!
//! ```
//! use leash::{frechet_distance, Metric, PolygonalCurve};
//!
//! let p = PolygonalCurve::from_vertices(&[[0.0, 0.0], [2.0, 0.0]])?;
//! let q = PolygonalCurve::from_vertices(&[[0.0, 1.0], [1.0, 2.0], [2.0, 1.0]])?;
//! let d = frechet_distance(&p, &q, &Metric::EuclideanSquared)?;
//! assert!((d.value - 2.0).abs() < 1e-12);
//! # Ok::<(), leash::FrechetError>(())
//! ```

pub mod engine;
pub mod envelope;
mod error;
pub mod geometry;
pub mod oracle;
pub mod workload;

pub use engine::{
    frechet_distance, frechet_distance_approx, frechet_distance_with, refine_with_decision, FrechetResult,
    SweepConfig, SweepStats,
};
pub use error::{FrechetError, Result};
pub use geometry::{BoundaryProfile, Metric, Point, PolygonalCurve, Polytope};
