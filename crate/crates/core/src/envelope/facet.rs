use std::collections::{BTreeMap, VecDeque};

use crate::envelope::{apply_floors, check_floors, check_increasing, EnvelopeEntry, EnvelopeMode, MinPoint, WitnessEnvelope};
use crate::error::{FrechetError, Result};
use crate::geometry::lines::{min_of_pieces, upper_envelope_on_unit, Line};

/// Lines of one facet: all parallel, intercepts non-increasing front to back.
#[derive(Debug, Clone)]
struct FacetQueue {
    slope: f64,
    items: VecDeque<(usize, f64)>,
}

/// Envelope of piecewise-linear profiles of one row or column.
///
/// Within a row every profile's facet `f` contributes a line of the same
/// slope, so per facet only the highest live line matters. Lines are kept in
/// a queue ordered by id; a new line evicts the lower lines behind it because
/// it outlives them. The envelope is the maximum of the queue heads plus the
/// largest minimum of a truncated profile.
#[derive(Debug, Clone, Default)]
pub struct FacetEnvelope {
    facets: BTreeMap<usize, FacetQueue>,
    /// Minima of truncated profiles, non-increasing front to back.
    minima: VecDeque<(usize, f64)>,
    ids: VecDeque<usize>,
    frontier: Option<Frontier>,
    removed: u64,
}

#[derive(Debug, Clone)]
struct Frontier {
    id: usize,
    rising_facets: Vec<usize>,
    min_value: f64,
}

impl FacetEnvelope {
    pub fn new() -> Self {
        Self::default()
    }

    /// The line at the head of facet `facet`, if any.
    pub fn head(&self, facet: usize) -> Option<Line> {
        let q = self.facets.get(&facet)?;
        q.items.front().map(|&(_, c)| Line::new(q.slope, c))
    }

    /// All queue heads; their maximum (with the truncated minima) is the envelope.
    pub fn heads(&self) -> Vec<(Line, usize)> {
        self.facets
            .iter()
            .filter_map(|(&f, q)| q.items.front().map(|&(_, c)| (Line::new(q.slope, c), f)))
            .collect()
    }

    /// Value of the envelope at `lambda`, without floors.
    pub fn eval(&self, lambda: f64) -> f64 {
        let lines = self.heads().into_iter().map(|(l, _)| l.at(lambda));
        let floor = self.minima.front().map_or(f64::NEG_INFINITY, |&(_, v)| v);
        lines.fold(floor, f64::max)
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().copied()
    }

    fn push_line(&mut self, id: usize, line: Line, facet: usize) -> Result<()> {
        let queue = self.facets.entry(facet).or_insert_with(|| FacetQueue { slope: line.slope, items: VecDeque::new() });
        if queue.items.is_empty() {
            queue.slope = line.slope;
        } else if (queue.slope - line.slope).abs() > 1e-9 * (1.0 + queue.slope.abs()) {
            return Err(FrechetError::ContractViolation(format!(
                "facet {facet} lines are not parallel ({} vs {})",
                queue.slope, line.slope
            )));
        }
        while queue.items.back().is_some_and(|&(_, c)| c < line.intercept) {
            queue.items.pop_back();
        }
        queue.items.push_back((id, line.intercept));
        Ok(())
    }

    fn push_minimum(&mut self, id: usize, value: f64) {
        while self.minima.back().is_some_and(|&(_, v)| v < value) {
            self.minima.pop_back();
        }
        self.minima.push_back((id, value));
    }
}

impl WitnessEnvelope for FacetEnvelope {
    fn mode(&self) -> EnvelopeMode {
        EnvelopeMode::FacetList
    }

    fn insert(&mut self, entry: EnvelopeEntry) -> Result<()> {
        check_increasing(self.ids.back().copied(), entry.id)?;
        let pieces = entry
            .profile
            .pieces()
            .ok_or_else(|| FrechetError::Config("facet envelope needs piecewise-linear profiles".into()))?;
        let truncated = entry.profile.is_truncated();
        let mut rising_facets = Vec::new();
        for piece in pieces {
            if piece.line.slope > 0.0 {
                if truncated {
                    continue;
                }
                rising_facets.push(piece.facet);
            }
            self.push_line(entry.id, piece.line, piece.facet)?;
        }
        self.ids.push_back(entry.id);
        self.frontier = None;
        if truncated {
            self.push_minimum(entry.id, entry.profile.min_value());
        } else {
            self.frontier = Some(Frontier { id: entry.id, rising_facets, min_value: entry.profile.min_value() });
        }
        Ok(())
    }

    fn remove_up_to(&mut self, max_id: usize) -> usize {
        let mut count = 0;
        while self.ids.front().is_some_and(|&id| id <= max_id) {
            self.ids.pop_front();
            count += 1;
        }
        if count == 0 {
            return 0;
        }
        self.facets.retain(|_, q| {
            while q.items.front().is_some_and(|&(id, _)| id <= max_id) {
                q.items.pop_front();
            }
            !q.items.is_empty()
        });
        while self.minima.front().is_some_and(|&(id, _)| id <= max_id) {
            self.minima.pop_front();
        }
        if self.frontier.as_ref().is_some_and(|f| f.id <= max_id) {
            self.frontier = None;
        }
        self.removed += count as u64;
        count
    }

    fn clear(&mut self) -> usize {
        let count = self.ids.len();
        self.facets.clear();
        self.minima.clear();
        self.ids.clear();
        self.frontier = None;
        self.removed += count as u64;
        count
    }

    fn min_query(&mut self, floor_left: Option<f64>, floor_bottom: f64) -> Result<MinPoint> {
        check_floors(floor_left, floor_bottom)?;
        if self.ids.is_empty() {
            return Err(FrechetError::EmptyEnvelope);
        }
        let mut lines = self.heads();
        let (lambda, value) = if lines.is_empty() {
            (0.0, f64::NEG_INFINITY)
        } else {
            min_of_pieces(&upper_envelope_on_unit(&mut lines))
        };
        let truncated_floor = self.minima.front().map_or(f64::NEG_INFINITY, |&(_, v)| v);
        Ok(apply_floors(lambda, value.max(truncated_floor), floor_left, floor_bottom))
    }

    /// The running minimum of a convex piecewise-linear profile is the maximum
    /// of its non-increasing pieces and its minimum, so truncation drops the
    /// frontier's rising lines (still at the back of their queues) and records
    /// its minimum.
    fn truncate_frontier(&mut self) {
        let Some(frontier) = self.frontier.take() else {
            return;
        };
        for facet in frontier.rising_facets {
            if let Some(q) = self.facets.get_mut(&facet) {
                if q.items.back().is_some_and(|&(id, _)| id == frontier.id) {
                    q.items.pop_back();
                }
                if q.items.is_empty() {
                    self.facets.remove(&facet);
                }
            }
        }
        self.push_minimum(frontier.id, frontier.min_value);
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    fn removed_total(&self) -> u64 {
        self.removed
    }
}
