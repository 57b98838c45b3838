use std::collections::BTreeMap;

use crate::envelope::{apply_floors, check_floors, check_increasing, EnvelopeEntry, EnvelopeMode, MinPoint, WitnessEnvelope};
use crate::error::{FrechetError, Result};
use crate::geometry::lines::{upper_hull, Line};

/// Where the lowest point of the parabola envelope lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimumKind {
    /// At the minimum of the parabola with this id.
    AtVertex(usize),
    /// At `lambda = 0` or `lambda = 1`, on the parabola with this id.
    AtBoundary(usize),
    /// At the crossing of a parabola that is decreasing there (`decreasing`)
    /// and one that is increasing there (`increasing`).
    AtCrossing { decreasing: usize, increasing: usize },
}

/// Lowest point of the upper envelope of the stored parabolas, without floors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullMinimum {
    pub lambda: f64,
    pub value: f64,
    pub kind: MinimumKind,
}

/// Envelope of squared-Euclidean profiles of one row or column.
///
/// All parabolas of a row share the quadratic coefficient `a`, so after
/// subtracting `a * lambda^2` they are lines and their upper envelope is an
/// upper hull of lines. Any two of them cross at most once, which lets the
/// structure keep full parabolas: a parabola that is increasing at the lowest
/// crossing and older than its decreasing partner can never support a later
/// optimum and is discarded instead of being truncated.
#[derive(Debug, Clone, Default)]
pub struct ParabolaEnvelope {
    a: Option<f64>,
    entries: BTreeMap<usize, Line>,
    /// Upper hull of `entries` sorted by slope; stale while `dirty`.
    hull: Vec<(Line, usize)>,
    dirty: bool,
    last_id: Option<usize>,
    removed: u64,
    pruned: u64,
}

impl ParabolaEnvelope {
    pub fn new() -> Self {
        Self::default()
    }

    /// Shared quadratic coefficient of the live parabolas.
    pub fn quadratic(&self) -> Option<f64> {
        self.a
    }

    /// Ids of the live parabolas in increasing order.
    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Number of parabolas discarded because they could no longer matter.
    pub fn pruned(&self) -> u64 {
        self.pruned
    }

    /// Lowest point of the envelope on `[0, 1]` by binary search over the hull pieces.
    pub fn lowest_point(&mut self) -> Result<HullMinimum> {
        if self.entries.is_empty() {
            return Err(FrechetError::EmptyEnvelope);
        }
        self.rebuild_if_dirty();
        let a = self.a.unwrap_or(0.0);
        let hull = &self.hull;
        let h = hull.len();
        let right_end = |k: usize| if k + 1 < h { hull[k].0.crossing(&hull[k + 1].0) } else { f64::INFINITY };
        let first = partition_point(0, h, |k| right_end(k) <= 0.0);
        let last = partition_point(first, h, |k| right_end(k) < 1.0);
        let piece_end = |k: usize| right_end(k).min(1.0);
        // First piece on which the envelope stops decreasing.
        let k = partition_point(first, last, |k| 2.0 * a * piece_end(k) + hull[k].0.slope < 0.0);
        let (line, id) = hull[k];
        let start = if k == first { 0.0 } else { right_end(k - 1) };
        let end = piece_end(k);

        let derivative_at_end = 2.0 * a * end + line.slope;
        let (lambda, kind) = if derivative_at_end < 0.0 {
            (1.0, MinimumKind::AtBoundary(id))
        } else {
            let vertex = if a > 0.0 {
                -line.slope / (2.0 * a)
            } else if line.slope > 0.0 {
                f64::NEG_INFINITY
            } else {
                start
            };
            if vertex >= start {
                let lambda = vertex.min(end);
                if lambda == 0.0 || lambda == 1.0 {
                    (lambda, MinimumKind::AtBoundary(id))
                } else {
                    (lambda, MinimumKind::AtVertex(id))
                }
            } else if k == first {
                (0.0, MinimumKind::AtBoundary(id))
            } else {
                (start, MinimumKind::AtCrossing { decreasing: hull[k - 1].1, increasing: id })
            }
        };
        let value = (a * lambda * lambda + line.at(lambda)).max(0.0);
        Ok(HullMinimum { lambda, value, kind })
    }

    fn remove_id(&mut self, id: usize) {
        if self.entries.remove(&id).is_some() {
            self.removed += 1;
            self.dirty = true;
        }
        if self.entries.is_empty() {
            self.reset_shape();
        }
    }

    fn reset_shape(&mut self) {
        self.a = None;
        self.hull.clear();
        self.dirty = false;
    }

    fn rebuild_if_dirty(&mut self) {
        if self.dirty {
            let mut lines: Vec<(Line, usize)> = self.entries.iter().map(|(&id, &l)| (l, id)).collect();
            self.hull = upper_hull(&mut lines);
            self.dirty = false;
        }
    }

    /// Inserts into a clean hull in place.
    fn hull_insert(&mut self, line: Line, id: usize) {
        let hull = &mut self.hull;
        let mut pos = hull.partition_point(|(l, _)| l.slope < line.slope);
        if pos < hull.len() && hull[pos].0.slope == line.slope {
            if hull[pos].0.intercept >= line.intercept {
                return;
            }
            hull.remove(pos);
        }
        if pos > 0 && pos < hull.len() && hidden(hull[pos - 1].0, line, hull[pos].0) {
            return;
        }
        hull.insert(pos, (line, id));
        while pos >= 2 && hidden(hull[pos - 2].0, hull[pos - 1].0, hull[pos].0) {
            hull.remove(pos - 1);
            pos -= 1;
        }
        while pos + 2 < hull.len() && hidden(hull[pos].0, hull[pos + 1].0, hull[pos + 2].0) {
            hull.remove(pos + 1);
        }
    }
}

/// Whether `mid` never rises above both neighbours, given slopes `left < mid < right`.
fn hidden(left: Line, mid: Line, right: Line) -> bool {
    let lhs = (left.intercept - right.intercept) * (mid.slope - left.slope);
    let rhs = (left.intercept - mid.intercept) * (right.slope - left.slope);
    lhs <= rhs
}

/// First index in `lo..hi` where `pred` turns false; `pred` must be monotone.
fn partition_point(mut lo: usize, mut hi: usize, pred: impl Fn(usize) -> bool) -> usize {
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

impl WitnessEnvelope for ParabolaEnvelope {
    fn mode(&self) -> EnvelopeMode {
        EnvelopeMode::Parabola
    }

    fn insert(&mut self, entry: EnvelopeEntry) -> Result<()> {
        check_increasing(self.last_id, entry.id)?;
        let (a, b, c) = entry
            .profile
            .coefficients()
            .ok_or_else(|| FrechetError::Config("parabola envelope needs parabolic profiles".into()))?;
        if entry.profile.is_truncated() {
            return Err(FrechetError::Config("parabola envelope stores untruncated profiles".into()));
        }
        match self.a {
            Some(shared) if (shared - a).abs() > 1e-12 * shared.max(a) => {
                return Err(FrechetError::ContractViolation(format!(
                    "parabolas of one row must share the quadratic coefficient ({shared} vs {a})"
                )))
            }
            Some(_) => {}
            None => self.a = Some(a),
        }
        let line = Line::new(b, c);
        self.entries.insert(entry.id, line);
        self.last_id = Some(entry.id);
        if !self.dirty {
            self.hull_insert(line, entry.id);
        }
        Ok(())
    }

    fn remove_up_to(&mut self, max_id: usize) -> usize {
        let keep = self.entries.split_off(&(max_id.saturating_add(1)));
        let gone = std::mem::replace(&mut self.entries, keep);
        if max_id == usize::MAX {
            self.entries.clear();
        }
        let count = gone.len();
        if count > 0 {
            self.removed += count as u64;
            if self.hull.iter().any(|&(_, id)| id <= max_id) {
                self.dirty = true;
            }
        }
        if self.entries.is_empty() {
            self.reset_shape();
        }
        count
    }

    fn clear(&mut self) -> usize {
        let count = self.entries.len();
        self.removed += count as u64;
        self.entries.clear();
        self.last_id = None;
        self.reset_shape();
        count
    }

    fn min_query(&mut self, floor_left: Option<f64>, floor_bottom: f64) -> Result<MinPoint> {
        check_floors(floor_left, floor_bottom)?;
        loop {
            let low = self.lowest_point()?;
            if let MinimumKind::AtCrossing { decreasing, increasing } = low.kind {
                if increasing < decreasing {
                    self.remove_id(increasing);
                    self.pruned += 1;
                    continue;
                }
            }
            return Ok(apply_floors(low.lambda, low.value, floor_left, floor_bottom));
        }
    }

    fn truncate_frontier(&mut self) {}

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn removed_total(&self) -> u64 {
        self.removed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::BoundaryProfile;

    fn entry(id: usize, a: f64, b: f64, c: f64) -> EnvelopeEntry {
        EnvelopeEntry::new(id, BoundaryProfile::parabola(a, b, c).unwrap())
    }

    #[test]
    fn single_parabola() {
        let mut env = ParabolaEnvelope::new();
        env.insert(entry(1, 4.0, 0.0, 1.0)).unwrap();
        assert_eq!(env.min_query(None, 0.0).unwrap(), MinPoint { lambda: 0.0, value: 1.0 });
        let floored = env.min_query(None, 2.0).unwrap();
        assert_eq!(floored.value, 2.0);
        assert!(4.0 * floored.lambda * floored.lambda + 1.0 <= 2.0);
    }

    #[test]
    fn crossing_of_two_parabolas() {
        // 4 lambda^2 + 1 against 4 (lambda - 1)^2
        let mut env = ParabolaEnvelope::new();
        env.insert(entry(1, 4.0, 0.0, 1.0)).unwrap();
        env.insert(entry(2, 4.0, -8.0, 4.0)).unwrap();
        let low = env.lowest_point().unwrap();
        assert_eq!(low.lambda, 0.375);
        assert_eq!(low.value, 4.0 * 0.375 * 0.375 + 1.0);
        assert_eq!(low.kind, MinimumKind::AtCrossing { decreasing: 2, increasing: 1 });

        // The older parabola is increasing at the crossing, so it is pruned.
        let min = env.min_query(None, 0.0).unwrap();
        assert_eq!((min.lambda, min.value), (1.0, 0.0));
        assert_eq!(env.ids().collect::<Vec<_>>(), vec![2]);
        assert_eq!(env.pruned(), 1);
    }

    #[test]
    fn newer_increasing_parabola_is_kept() {
        let mut env = ParabolaEnvelope::new();
        env.insert(entry(1, 4.0, -8.0, 4.0)).unwrap();
        env.insert(entry(2, 4.0, 0.0, 1.0)).unwrap();
        let min = env.min_query(None, 0.0).unwrap();
        assert_eq!(min.lambda, 0.375);
        assert_eq!(env.len(), 2);
    }

    #[test]
    fn remove_and_clear() {
        let mut env = ParabolaEnvelope::new();
        for id in 1..=3 {
            env.insert(entry(id, 1.0, -(id as f64), 1.0)).unwrap();
        }
        assert_eq!(env.remove_up_to(0), 0);
        assert_eq!(env.len(), 3);
        assert_eq!(env.remove_up_to(2), 2);
        assert_eq!(env.ids().collect::<Vec<_>>(), vec![3]);
        assert_eq!(env.clear(), 1);
        assert_eq!(env.clear(), 0);
        assert!(matches!(env.min_query(None, 0.0), Err(FrechetError::EmptyEnvelope)));
        env.insert(entry(1, 9.0, 0.0, 0.0)).unwrap();
        assert_eq!(env.min_query(None, 0.0).unwrap().value, 0.0);
        assert_eq!(env.removed_total(), 3);
    }

    #[test]
    fn rejects_out_of_order_and_mixed_rows() {
        let mut env = ParabolaEnvelope::new();
        env.insert(entry(2, 1.0, 0.0, 0.0)).unwrap();
        assert!(matches!(env.insert(entry(2, 1.0, 0.0, 0.0)), Err(FrechetError::ContractViolation(_))));
        assert!(matches!(env.insert(entry(3, 2.0, 0.0, 0.0)), Err(FrechetError::ContractViolation(_))));
    }

    #[test]
    fn incremental_hull_matches_rebuild() {
        let lines = [(3.0, 0.0), (-2.0, 1.0), (0.5, 0.4), (-0.1, 0.3), (7.0, -6.0), (0.5, 0.6), (-9.0, 2.0)];
        let mut env = ParabolaEnvelope::new();
        for (k, &(b, c)) in lines.iter().enumerate() {
            env.insert(entry(k + 1, 1.5, b, c)).unwrap();
        }
        let incremental = env.hull.clone();
        env.dirty = true;
        env.rebuild_if_dirty();
        assert_eq!(incremental, env.hull);
    }
}
