//! Curves, points, convex distance functions and per-boundary distance profiles.

mod curve;
pub mod lines;
mod metric;
mod point;
mod polygon;
mod profile;

pub use curve::PolygonalCurve;
pub use metric::{Metric, Polytope, MAX_L1_DIM};
pub use point::Point;
pub use polygon::{lift_to_polygon_metric, polygon_sides_for_epsilon};
pub use profile::{BoundaryProfile, ProfileShape};

use crate::error::Result;

/// `delta(p, q)` in raw units.
pub fn eval_metric(metric: &Metric, p: &[f64], q: &[f64]) -> Result<f64> {
    metric.eval(p, q)
}

/// Profile of the terrain along the boundary between vertex `p` and the segment.
pub fn boundary_profile(metric: &Metric, p: &[f64], seg_start: &[f64], seg_end: &[f64]) -> Result<BoundaryProfile> {
    metric.boundary_profile(p, seg_start, seg_end)
}
