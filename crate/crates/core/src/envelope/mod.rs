//! Dynamic upper envelopes over the boundary profiles of one row or column.
//!
//! The sweep keeps one envelope per row (vertical boundaries) and one per
//! column (horizontal boundaries). Profiles arrive in increasing boundary
//! index, leave from the front, and the newest profile is truncated to its
//! running minimum once its optimum has been computed.

mod facet;
mod parabola;

pub use facet::FacetEnvelope;
pub use parabola::{HullMinimum, MinimumKind, ParabolaEnvelope};

use crate::error::{FrechetError, Result};
use crate::geometry::{BoundaryProfile, Metric};

/// A boundary profile tagged with the index of its boundary within the row or column.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeEntry {
    pub id: usize,
    pub profile: BoundaryProfile,
}

impl EnvelopeEntry {
    pub fn new(id: usize, profile: BoundaryProfile) -> Self {
        EnvelopeEntry { id, profile }
    }
}

/// Lowest point of an envelope including the query floors. `value` is in raw metric units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinPoint {
    pub lambda: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeMode {
    /// Untruncated parabolas with pseudoline pruning.
    Parabola,
    /// Per-facet queues of parallel lines.
    FacetList,
    /// Brute-force evaluation of every live profile.
    Reference,
}

pub trait WitnessEnvelope {
    fn mode(&self) -> EnvelopeMode;

    /// Adds a profile; ids must strictly increase between clears.
    fn insert(&mut self, entry: EnvelopeEntry) -> Result<()>;

    /// Removes every profile with `id <= max_id` and returns how many were live.
    fn remove_up_to(&mut self, max_id: usize) -> usize;

    /// Removes everything and returns how many profiles were live.
    fn clear(&mut self) -> usize;

    /// Minimum over `lambda in [0, 1]` of `max(envelope(lambda), floor_left, floor_bottom)`.
    ///
    /// The floors are per-query constants and never change the stored profiles,
    /// although an implementation may discard profiles that provably no longer matter.
    fn min_query(&mut self, floor_left: Option<f64>, floor_bottom: f64) -> Result<MinPoint>;

    /// Replaces the most recently inserted profile by its running minimum.
    fn truncate_frontier(&mut self);

    /// Number of live profiles.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Total number of profiles removed so far, by any operation.
    fn removed_total(&self) -> u64;
}

/// The envelope implementation suited to a metric's profile shape.
pub fn envelope_for(metric: &Metric) -> Box<dyn WitnessEnvelope> {
    if metric.has_parabolic_profiles() {
        Box::new(ParabolaEnvelope::new())
    } else {
        Box::new(FacetEnvelope::new())
    }
}

pub(crate) fn check_floors(floor_left: Option<f64>, floor_bottom: f64) -> Result<()> {
    if floor_bottom.is_nan() || floor_left.is_some_and(f64::is_nan) {
        return Err(FrechetError::InvalidInput("NaN floor in minimum query".into()));
    }
    Ok(())
}

pub(crate) fn apply_floors(lambda: f64, value: f64, floor_left: Option<f64>, floor_bottom: f64) -> MinPoint {
    let value = value.max(floor_bottom).max(floor_left.unwrap_or(f64::NEG_INFINITY));
    MinPoint { lambda, value }
}

pub(crate) fn check_increasing(last: Option<usize>, id: usize) -> Result<()> {
    match last {
        Some(prev) if id <= prev => Err(FrechetError::ContractViolation(format!(
            "envelope ids must increase: got {id} after {prev}"
        ))),
        _ => Ok(()),
    }
}
