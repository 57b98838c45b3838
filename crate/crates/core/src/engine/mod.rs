//! The leash sweep: visits the cells of the free-space grid row by row and
//! computes, for every cell boundary, the lowest leash length with which some
//! monotone walk from the start can reach it.

mod lane;

use crate::envelope::{envelope_for, WitnessEnvelope};
use crate::error::{FrechetError, Result};
use crate::geometry::{polygon_sides_for_epsilon, Metric, PolygonalCurve};
use crate::oracle::{BruteForceEnvelope, FreeSpace};
use lane::Lane;

/// When the optimum of the previous crossing boundary enters a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FloorPolicy {
    /// Only when the oldest candidate entry lies strictly before the current
    /// cell, i.e. when a witness must cross the previous boundary.
    #[default]
    WhenCrossed,
    /// On every query. Over-constrains queries whose witness enters through
    /// the current cell, so it yields an upper bound only.
    Always,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnvelopeChoice {
    /// Parabola envelope for squared Euclidean, facet queues otherwise.
    #[default]
    Auto,
    /// Brute-force envelope of truncated profiles, for cross-checking.
    Reference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepConfig {
    pub floor_policy: FloorPolicy,
    pub envelope: EnvelopeChoice,
}

/// Operation counts of one sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepStats {
    pub envelope_inserts: u64,
    pub envelope_removals: u64,
    pub envelope_queries: u64,
    pub deque_pops: u64,
}

/// Which lane a query belongs to: a row of vertical boundaries or a column of
/// horizontal ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaneKind {
    Row(usize),
    Column(usize),
}

/// Snapshot of a lane at one envelope query.
#[derive(Debug)]
pub struct QueryEvent<'a> {
    pub lane: LaneKind,
    /// Position of the current cell along the lane.
    pub position: usize,
    /// Candidate entry positions, oldest first.
    pub deque: &'a [usize],
    /// Entry optima (raw units) by position.
    pub entries: &'a [f64],
    /// Deque head after the previous step of this lane.
    pub previous_head: usize,
    pub floor_left: Option<f64>,
    pub floor_bottom: f64,
    pub lambda: f64,
    pub value: f64,
}

/// Hook for inspecting the sweep; used by tests.
pub trait SweepObserver {
    fn on_query(&mut self, event: &QueryEvent<'_>);
}

impl SweepObserver for () {
    fn on_query(&mut self, _: &QueryEvent<'_>) {}
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrechetResult {
    /// The distance in reported units (square-rooted for squared Euclidean).
    pub value: f64,
    /// The distance in the metric's raw units.
    pub raw_value: f64,
    pub metric: Metric,
    /// Segment counts of the first and second curve.
    pub segments: (usize, usize),
    pub stats: SweepStats,
}

/// Fréchet distance between `p` and `q` under `metric`.
pub fn frechet_distance(p: &PolygonalCurve, q: &PolygonalCurve, metric: &Metric) -> Result<FrechetResult> {
    frechet_distance_with(p, q, metric, SweepConfig::default(), &mut ())
}

/// Fréchet distance with an explicit configuration and an observer.
pub fn frechet_distance_with(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    metric: &Metric,
    config: SweepConfig,
    observer: &mut dyn SweepObserver,
) -> Result<FrechetResult> {
    if p.dim() != q.dim() {
        return Err(FrechetError::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    metric.check_dim(p.dim())?;
    let cols = p.segment_count();
    let rows = q.segment_count();
    let make_envelope = || -> Box<dyn WitnessEnvelope> {
        match config.envelope {
            EnvelopeChoice::Auto => envelope_for(metric),
            EnvelopeChoice::Reference => Box::new(BruteForceEnvelope::new()),
        }
    };
    let vertical = |i: usize, j: usize| metric.boundary_profile(p.vertex(i), q.vertex(j), q.vertex(j + 1));
    let horizontal = |i: usize, j: usize| metric.boundary_profile(q.vertex(j), p.vertex(i), p.vertex(i + 1));

    let mut stats = SweepStats::default();
    let start = vertical(0, 0)?.eval_raw(0.0).max(horizontal(0, 0)?.eval_raw(0.0));

    // bottom[i] holds the optimum on horizontal boundary (i, j) for the current row j.
    let mut bottom = vec![f64::INFINITY; cols];
    bottom[0] = start;
    let mut columns: Vec<Lane> = (0..cols).map(|i| Lane::new(LaneKind::Column(i), make_envelope(), rows)).collect();
    let mut last_left = f64::INFINITY;
    let mut removed_by_rows = 0;

    for j in 0..rows {
        let mut row = Lane::new(LaneKind::Row(j), make_envelope(), cols);
        // Optimum on the vertical boundary at the left of the current cell.
        let mut left = if j == 0 { start } else { f64::INFINITY };
        for i in 0..cols {
            let right = row.step(i, bottom[i], left, vertical(i + 1, j)?, config.floor_policy, &mut stats, observer)?;
            let top = columns[i].step(j, left, bottom[i], horizontal(i, j + 1)?, config.floor_policy, &mut stats, observer)?;
            bottom[i] = top;
            left = right;
        }
        last_left = left;
        removed_by_rows += row.removed_total();
    }
    stats.envelope_removals = removed_by_rows + columns.iter().map(Lane::removed_total).sum::<u64>();

    // A walk reaches the end corner through the right boundary or the top
    // boundary of the last cell, then follows that boundary to the corner.
    // Like the start, the end corner takes the larger of its two boundary values.
    let end = vertical(cols, rows - 1)?.eval_raw(1.0).max(horizontal(cols - 1, rows)?.eval_raw(1.0));
    let raw_value = last_left.min(bottom[cols - 1]).max(end);
    Ok(FrechetResult {
        value: metric.from_raw(raw_value),
        raw_value,
        metric: metric.clone(),
        segments: (cols, rows),
        stats,
    })
}

/// Euclidean Fréchet distance up to a factor `1 + eps`, from below: the
/// returned value `v` satisfies `v <= d_F <= (1 + eps) v`.
pub fn frechet_distance_approx(p: &PolygonalCurve, q: &PolygonalCurve, eps: f64) -> Result<FrechetResult> {
    let sides = polygon_sides_for_epsilon(eps)?;
    frechet_distance(p, q, &Metric::RegularPolygon(sides))
}

/// Narrows a bracket `lo <= d_F <= hi` on the Euclidean Fréchet distance by
/// bisection on the decision procedure until it is at most `eps * lo` wide.
///
/// With `lo = 0` the target width becomes `eps * hi`.
pub fn refine_with_decision(p: &PolygonalCurve, q: &PolygonalCurve, lo: f64, hi: f64, eps: f64) -> Result<f64> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(FrechetError::InvalidInput(format!("epsilon must be positive, got {eps}")));
    }
    if !(lo >= 0.0 && lo <= hi && hi.is_finite()) {
        return Err(FrechetError::InvalidInput(format!("invalid bracket [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(lo);
    }
    let space = FreeSpace::new(p, q, &Metric::EuclideanSquared)?;
    if !space.decide(hi) {
        return Err(FrechetError::ContractViolation(format!("upper bracket {hi} is below the Fréchet distance")));
    }
    if space.decide(lo) {
        return Ok(lo);
    }
    let width = if lo > 0.0 { eps * lo } else { eps * hi };
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > width {
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
