//! Reference computations used to cross-check the sweep: free-space
//! reachability (the classic decision procedure), bisection on its answer,
//! the discrete Fréchet distance, and brute-force envelope minima.

mod envelope;

pub use envelope::{envelope_minimum, grid_minimum, BruteForceEnvelope};

use crate::error::{FrechetError, Result};
use crate::geometry::{BoundaryProfile, Metric, PolygonalCurve, ProfileShape};

/// Slack added to interval endpoints so that touching configurations count as reachable.
pub const REACH_PADDING: f64 = 1e-12;

/// The sublevel set `{lambda in [0, 1] : profile(lambda) <= level}` of the raw
/// (untruncated) profile, or `None` when it is empty. `level` is in raw units.
pub fn boundary_feasible_interval(profile: &BoundaryProfile, level: f64) -> Option<(f64, f64)> {
    if profile.min_value() > level {
        return None;
    }
    let m = profile.argmin();
    let (lo, hi) = match profile.shape() {
        ProfileShape::Parabola { a, b, c } => parabola_sublevel(*a, *b, *c - level),
        ProfileShape::PiecewiseLinear(pieces) => {
            let mut lo = 0.0f64;
            let mut hi = 1.0f64;
            for piece in pieces {
                let (s, c) = (piece.line.slope, piece.line.intercept);
                if s > 0.0 {
                    hi = hi.min((level - c) / s);
                } else if s < 0.0 {
                    lo = lo.max((level - c) / s);
                }
            }
            (lo, hi)
        }
    };
    // The minimizer is feasible, so the interval always contains it.
    Some((lo.clamp(0.0, 1.0).min(m), hi.clamp(0.0, 1.0).max(m)))
}

/// Interval where `a x^2 + b x + c <= 0`, clipped to `[0, 1]`; assumes it is non-empty there.
fn parabola_sublevel(a: f64, b: f64, c: f64) -> (f64, f64) {
    if a == 0.0 {
        return if b > 0.0 {
            (0.0, -c / b)
        } else if b < 0.0 {
            (-c / b, 1.0)
        } else {
            (0.0, 1.0)
        };
    }
    let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
    // Numerically stable pair of roots.
    let q = -0.5 * (b + b.signum() * disc);
    let (r1, r2) = if q == 0.0 {
        let r = -b / (2.0 * a);
        (r, r)
    } else {
        let x1 = q / a;
        let x2 = c / q;
        (x1.min(x2), x1.max(x2))
    };
    (r1, r2)
}

/// All boundary profiles of a pair of curves, laid out for reachability sweeps.
///
/// Vertical boundary `(i, j)` pairs vertex `i` of `P` with segment `j` of `Q`;
/// horizontal boundary `(i, j)` pairs vertex `j` of `Q` with segment `i` of `P`.
#[derive(Debug, Clone)]
pub struct FreeSpace {
    metric: Metric,
    cols: usize,
    rows: usize,
    vertical: Vec<BoundaryProfile>,
    horizontal: Vec<BoundaryProfile>,
}

impl FreeSpace {
    pub fn new(p: &PolygonalCurve, q: &PolygonalCurve, metric: &Metric) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(FrechetError::DimensionMismatch { expected: p.dim(), found: q.dim() });
        }
        metric.check_dim(p.dim())?;
        let cols = p.segment_count();
        let rows = q.segment_count();
        let mut vertical = Vec::with_capacity((cols + 1) * rows);
        for i in 0..=cols {
            for j in 0..rows {
                vertical.push(metric.boundary_profile(p.vertex(i), q.vertex(j), q.vertex(j + 1))?);
            }
        }
        let mut horizontal = Vec::with_capacity(cols * (rows + 1));
        for i in 0..cols {
            for j in 0..=rows {
                horizontal.push(metric.boundary_profile(q.vertex(j), p.vertex(i), p.vertex(i + 1))?);
            }
        }
        Ok(FreeSpace { metric: metric.clone(), cols, rows, vertical, horizontal })
    }

    pub fn vertical(&self, i: usize, j: usize) -> &BoundaryProfile {
        &self.vertical[i * self.rows + j]
    }

    pub fn horizontal(&self, i: usize, j: usize) -> &BoundaryProfile {
        &self.horizontal[i * (self.rows + 1) + j]
    }

    /// Raw distance at the start corner. Both boundaries through the corner are
    /// consulted because the polygon gauge may disagree between them.
    pub fn start_raw(&self) -> f64 {
        self.vertical(0, 0).eval_raw(0.0).max(self.horizontal(0, 0).eval_raw(0.0))
    }

    pub fn end_raw(&self) -> f64 {
        let (c, r) = (self.cols, self.rows);
        self.vertical(c, r - 1).eval_raw(1.0).max(self.horizontal(c - 1, r).eval_raw(1.0))
    }

    /// Largest raw profile value over all boundaries.
    pub fn max_raw(&self) -> f64 {
        self.vertical.iter().chain(&self.horizontal).map(BoundaryProfile::max_value).fold(0.0, f64::max)
    }

    /// Whether a bimonotone path from the start corner to the end corner stays
    /// at or below `level` (raw units).
    pub fn decide_raw(&self, level: f64) -> bool {
        if self.start_raw() > level + REACH_PADDING || self.end_raw() > level + REACH_PADDING {
            return false;
        }
        let (cols, rows) = (self.cols, self.rows);
        // Reachable parts of the vertical boundaries in the current row, and
        // of the horizontal boundaries at the bottom of the current row.
        let mut left: Vec<Option<(f64, f64)>> = vec![None; cols + 1];
        let mut bottom: Vec<Option<(f64, f64)>> = vec![None; cols];
        bottom[0] = Some((0.0, 0.0));
        let mut top: Vec<Option<(f64, f64)>> = vec![None; cols];
        for j in 0..rows {
            left[0] = if j == 0 { Some((0.0, 0.0)) } else { None };
            for i in 0..cols {
                let from_left = left[i];
                let from_bottom = bottom[i];
                let right_free = boundary_feasible_interval(self.vertical(i + 1, j), level);
                left[i + 1] = propagate(right_free, from_bottom, from_left);
                let top_free = boundary_feasible_interval(self.horizontal(i, j + 1), level);
                top[i] = propagate(top_free, from_left, from_bottom);
            }
            std::mem::swap(&mut bottom, &mut top);
        }
        let reaches_end = |r: Option<(f64, f64)>| r.is_some_and(|(_, hi)| hi >= 1.0 - REACH_PADDING);
        reaches_end(left[cols]) || reaches_end(bottom[cols - 1])
    }

    /// Whether the Fréchet distance is at most `eps` (in reported units).
    pub fn decide(&self, eps: f64) -> bool {
        eps >= 0.0 && self.decide_raw(self.metric.to_raw(eps))
    }
}

/// Reachable part of an exit boundary of a cell. Anything reachable on the
/// entry boundary facing the exit's parameter direction (`across`) reaches the
/// whole free interval; from the parallel entry boundary (`along`) only the
/// part at or above the lowest reachable point is reachable.
fn propagate(free: Option<(f64, f64)>, across: Option<(f64, f64)>, along: Option<(f64, f64)>) -> Option<(f64, f64)> {
    let (lo, hi) = free?;
    if across.is_some() {
        return Some((lo, hi));
    }
    let (start, _) = along?;
    if hi + REACH_PADDING >= start {
        Some((lo.max(start).min(hi), hi))
    } else {
        None
    }
}

/// Decision procedure: is `d_F(P, Q) <= eps` under `metric`? `eps` is in reported units.
pub fn decide(p: &PolygonalCurve, q: &PolygonalCurve, metric: &Metric, eps: f64) -> Result<bool> {
    Ok(FreeSpace::new(p, q, metric)?.decide(eps))
}

/// Fréchet distance by bisection on the decision procedure, to relative width `rel_tol`.
pub fn frechet_by_bisection(p: &PolygonalCurve, q: &PolygonalCurve, metric: &Metric, rel_tol: f64) -> Result<f64> {
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(FrechetError::InvalidInput(format!("tolerance must be positive, got {rel_tol}")));
    }
    let space = FreeSpace::new(p, q, metric)?;
    let mut lo = metric.from_raw(space.start_raw().max(space.end_raw()));
    if space.decide(lo) {
        return Ok(lo);
    }
    let mut hi = metric.from_raw(space.max_raw());
    if !space.decide(hi) {
        return Err(FrechetError::ContractViolation("largest boundary value is not feasible".into()));
    }
    for _ in 0..400 {
        if hi - lo <= rel_tol * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if space.decide(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Discrete Fréchet distance between the curves after splitting every segment
/// into `refinement` equal parts. An upper bound on the continuous distance.
pub fn discrete_frechet(p: &PolygonalCurve, q: &PolygonalCurve, metric: &Metric, refinement: usize) -> Result<f64> {
    if refinement == 0 {
        return Err(FrechetError::InvalidInput("refinement must be at least 1".into()));
    }
    if matches!(metric, Metric::RegularPolygon(_)) {
        return Err(FrechetError::Config("the polygon gauge has no point-to-point form".into()));
    }
    if p.dim() != q.dim() {
        return Err(FrechetError::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let a = subdivide(p, refinement);
    let b = subdivide(q, refinement);
    let mut prev = vec![f64::INFINITY; b.len()];
    let mut cur = vec![0.0; b.len()];
    for (x, pa) in a.iter().enumerate() {
        for (y, qb) in b.iter().enumerate() {
            let d = metric.eval(pa, qb)?;
            let reach = match (x, y) {
                (0, 0) => d,
                (0, _) => cur[y - 1],
                (_, 0) => prev[0],
                _ => prev[y].min(prev[y - 1]).min(cur[y - 1]),
            };
            cur[y] = reach.max(d);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(metric.from_raw(prev[b.len() - 1]))
}

fn subdivide(curve: &PolygonalCurve, parts: usize) -> Vec<Vec<f64>> {
    let m = curve.segment_count();
    (0..=m * parts)
        .map(|k| {
            let t = (k / parts) as f64 + (k % parts) as f64 / parts as f64;
            curve.eval(t.min(m as f64)).expect("parameter in range").into_vec()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(v: &[&[f64]]) -> PolygonalCurve {
        PolygonalCurve::from_vertices(v).unwrap()
    }

    #[test]
    fn feasible_intervals() {
        let p = BoundaryProfile::parabola(4.0, 0.0, 1.0).unwrap();
        assert_eq!(boundary_feasible_interval(&p, 1.0), Some((0.0, 0.0)));
        assert_eq!(boundary_feasible_interval(&p, 5.0), Some((0.0, 1.0)));
        assert_eq!(boundary_feasible_interval(&p, 0.5), None);
        let v = Metric::L1.boundary_profile(&[0.0, 0.0], &[-1.0, 1.0], &[1.0, 1.0]).unwrap();
        assert_eq!(boundary_feasible_interval(&v, 1.5), Some((0.25, 0.75)));
    }

    #[test]
    fn decisions_on_small_cases() {
        let p = curve(&[&[0.0, 0.0], &[2.0, 0.0]]);
        let q = curve(&[&[0.0, 1.0], &[2.0, 1.0]]);
        assert!(decide(&p, &q, &Metric::EuclideanSquared, 1.0).unwrap());
        assert!(!decide(&p, &q, &Metric::EuclideanSquared, 0.999).unwrap());
        let peak = curve(&[&[0.0, 1.0], &[1.0, 2.0], &[2.0, 1.0]]);
        assert!(decide(&p, &peak, &Metric::EuclideanSquared, 2.0).unwrap());
        assert!(!decide(&p, &peak, &Metric::EuclideanSquared, 1.99).unwrap());
        assert!(decide(&peak, &peak, &Metric::LInfinity, 0.0).unwrap());
    }

    #[test]
    fn discrete_upper_bound() {
        let p = curve(&[&[0.0, 0.0], &[2.0, 0.0]]);
        let q = curve(&[&[0.0, 1.0], &[2.0, 1.0]]);
        assert_eq!(discrete_frechet(&p, &q, &Metric::EuclideanSquared, 1).unwrap(), 1.0);
        assert_eq!(discrete_frechet(&q, &q, &Metric::L1, 7).unwrap(), 0.0);
        let peak = curve(&[&[0.0, 1.0], &[1.0, 2.0], &[2.0, 1.0]]);
        let d = discrete_frechet(&p, &peak, &Metric::EuclideanSquared, 64).unwrap();
        assert!((2.0..2.05).contains(&d), "{d}");
    }
}
