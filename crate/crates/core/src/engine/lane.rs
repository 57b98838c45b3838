use std::collections::VecDeque;

use crate::envelope::{EnvelopeEntry, WitnessEnvelope};
use crate::error::Result;
use crate::geometry::BoundaryProfile;

use super::{FloorPolicy, LaneKind, QueryEvent, SweepObserver, SweepStats};

/// Sweep state of one row (or column): the candidate entry boundaries and the
/// envelope of the crossing boundaries between the oldest candidate and the frontier.
pub(crate) struct Lane {
    kind: LaneKind,
    /// Optimum on each entry boundary seen so far, indexed by position along the lane.
    entries: Vec<f64>,
    /// Positions of non-dominated entry boundaries; their optima strictly increase.
    deque: VecDeque<usize>,
    envelope: Box<dyn WitnessEnvelope>,
    head_floor: usize,
}

impl Lane {
    pub(crate) fn new(kind: LaneKind, envelope: Box<dyn WitnessEnvelope>, capacity: usize) -> Self {
        Lane { kind, entries: Vec::with_capacity(capacity), deque: VecDeque::new(), envelope, head_floor: 0 }
    }

    pub(crate) fn removed_total(&self) -> u64 {
        self.envelope.removed_total()
    }

    /// Processes the cell at position `idx`: `entry` is the optimum on its
    /// entry boundary, `previous` the optimum on the crossing boundary the cell
    /// starts from, and `exit` the profile of the crossing boundary it ends on.
    /// Returns the optimum on `exit` in raw units.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn step(
        &mut self,
        idx: usize,
        entry: f64,
        previous: f64,
        exit: BoundaryProfile,
        policy: FloorPolicy,
        stats: &mut SweepStats,
        observer: &mut dyn SweepObserver,
    ) -> Result<f64> {
        debug_assert_eq!(idx, self.entries.len());
        self.entries.push(entry);
        while self.deque.back().is_some_and(|&x| self.entries[x] >= entry) {
            self.deque.pop_back();
            stats.deque_pops += 1;
        }
        self.deque.push_back(idx);
        if self.deque.len() == 1 {
            self.envelope.clear();
        }
        self.envelope.insert(EnvelopeEntry::new(idx + 1, exit))?;
        stats.envelope_inserts += 1;

        let mut best = self.query(previous, policy, stats, observer)?;
        while self.deque.len() >= 2 && self.entries[self.deque[1]] <= best {
            self.envelope.remove_up_to(self.deque[1]);
            self.deque.pop_front();
            stats.deque_pops += 1;
            best = self.query(previous, policy, stats, observer)?;
        }
        self.envelope.truncate_frontier();
        self.head_floor = self.deque[0];
        Ok(best)
    }

    fn query(
        &mut self,
        previous: f64,
        policy: FloorPolicy,
        stats: &mut SweepStats,
        observer: &mut dyn SweepObserver,
    ) -> Result<f64> {
        let head = self.deque[0];
        let floor_left = match policy {
            FloorPolicy::WhenCrossed if self.deque.len() < 2 => None,
            _ => Some(previous),
        };
        let floor_bottom = self.entries[head];
        let point = self.envelope.min_query(floor_left, floor_bottom)?;
        stats.envelope_queries += 1;
        observer.on_query(&QueryEvent {
            lane: self.kind,
            position: self.entries.len() - 1,
            deque: self.deque.make_contiguous(),
            entries: &self.entries,
            previous_head: self.head_floor,
            floor_left,
            floor_bottom,
            lambda: point.lambda,
            value: point.value,
        });
        Ok(point.value)
    }
}
