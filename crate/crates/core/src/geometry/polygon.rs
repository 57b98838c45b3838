//! Regular-polygon approximation of the Euclidean distance.
//!
//! A point and a segment span a plane. In that plane the Euclidean unit ball
//! is a circle, which is replaced by a circumscribed regular `k`-gon with one
//! side parallel to the segment. The polygon gauge under-estimates Euclidean
//! distance by at most a factor `cos(pi / k)`.

use std::f64::consts::PI;

use crate::error::{FrechetError, Result};
use crate::geometry::lines::Line;
use crate::geometry::point::{check_same_dim, dot, norm_sq, sub};
use crate::geometry::profile::BoundaryProfile;

/// Smallest polygon side count `k >= 3` with `1 / cos(pi / k) <= 1 + eps`.
pub fn polygon_sides_for_epsilon(eps: f64) -> Result<usize> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(FrechetError::InvalidInput(format!("epsilon must be positive, got {eps}")));
    }
    let target = 1.0 + eps;
    if target == 1.0 {
        return Err(FrechetError::InvalidInput(format!("epsilon {eps} is below double precision")));
    }
    let fits = |k: usize| 1.0 / (PI / k as f64).cos() <= target;
    let estimate = PI / (1.0 / target).acos();
    let mut k = if estimate.is_finite() { (estimate.ceil() as usize).max(3) } else { 3 };
    while k > 3 && fits(k - 1) {
        k -= 1;
    }
    while !fits(k) {
        k += 1;
    }
    Ok(k)
}

/// Unit facet normals of the circumscribed `k`-gon in segment coordinates
/// `(along, across)`. Normal 0 points along `-across`, so one side is parallel
/// to the segment.
pub(crate) fn polygon_normals(k: usize) -> impl Iterator<Item = (f64, f64)> {
    (0..k).map(move |f| {
        let theta = -PI / 2.0 + 2.0 * PI * f as f64 / k as f64;
        (theta.cos(), theta.sin())
    })
}

/// Distance profile from `p` to the segment `seg_start -> seg_end` under the
/// circumscribed regular `k`-gon gauge of the plane through `p` and the segment.
pub fn lift_to_polygon_metric(p: &[f64], seg_start: &[f64], seg_end: &[f64], k: usize) -> Result<BoundaryProfile> {
    if k < 3 {
        return Err(FrechetError::InvalidInput(format!("polygon needs at least 3 sides, got {k}")));
    }
    let d = p.len();
    if d < 2 {
        return Err(FrechetError::InvalidInput("polygon approximation needs dimension >= 2".into()));
    }
    check_same_dim(d, seg_start.len())?;
    check_same_dim(d, seg_end.len())?;

    let (along, across, length) = plane_coordinates(p, seg_start, seg_end);
    // Offset z(lambda) = seg(lambda) - p = (lambda * length - along, -across).
    let lines = polygon_normals(k)
        .enumerate()
        .map(|(f, (nx, ny))| (Line::new(length * nx, -along * nx - across * ny), f))
        .collect();
    BoundaryProfile::from_lines(lines)
}

/// Coordinates of `p` in the frame of the segment: signed offset along the
/// segment direction, non-negative distance across it, and the segment length.
fn plane_coordinates(p: &[f64], seg_start: &[f64], seg_end: &[f64]) -> (f64, f64, f64) {
    let ell = sub(seg_end, seg_start);
    let w = sub(p, seg_start);
    let length = norm_sq(&ell).sqrt();
    let axis: Vec<f64> = if length > 0.0 {
        ell.iter().map(|x| x / length).collect()
    } else {
        // Degenerate segment: any direction gives a valid in-plane frame.
        let mut e = vec![0.0; p.len()];
        e[0] = 1.0;
        e
    };
    let along = dot(&w, &axis);
    let across_sq = norm_sq(&w) - along * along;
    let across = if across_sq > 1e-24 * norm_sq(&w) {
        w.iter().zip(&axis).map(|(wi, ai)| wi - along * ai).map(|x| x * x).sum::<f64>().sqrt()
    } else {
        // Collinear: the across component vanishes in every plane containing the segment.
        0.0
    };
    (along, across, length)
}
