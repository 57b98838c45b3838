use crate::envelope::{apply_floors, check_floors, check_increasing, EnvelopeEntry, EnvelopeMode, MinPoint, WitnessEnvelope};
use crate::error::{FrechetError, Result};
use crate::geometry::BoundaryProfile;

/// Minimum of `max(profiles, floors)` over `[0, 1]`.
///
/// Every profile (truncated or not) is convex on the unit interval, so their
/// maximum is convex and ternary search converges to its minimum without any
/// knowledge of the profile shapes.
pub fn envelope_minimum<'a, I>(profiles: I, floor_left: Option<f64>, floor_bottom: f64) -> MinPoint
where
    I: IntoIterator<Item = &'a BoundaryProfile>,
{
    let profiles: Vec<&BoundaryProfile> = profiles.into_iter().collect();
    let f = |x: f64| profiles.iter().map(|p| p.eval(x)).fold(f64::NEG_INFINITY, f64::max);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    // (2/3)^100 is far below the resolution of a double on [0, 1].
    for _ in 0..100 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let mid = 0.5 * (lo + hi);
    let (lambda, value) = [(0.0, f(0.0)), (mid, f(mid)), (1.0, f(1.0))]
        .into_iter()
        .fold((0.0, f64::INFINITY), |best, cand| if cand.1 < best.1 { cand } else { best });
    apply_floors(lambda, value, floor_left, floor_bottom)
}

/// Minimum of `max(profiles, floors)` over `samples + 1` equally spaced points.
pub fn grid_minimum<'a, I>(profiles: I, floor_left: Option<f64>, floor_bottom: f64, samples: usize) -> MinPoint
where
    I: IntoIterator<Item = &'a BoundaryProfile>,
{
    let profiles: Vec<&BoundaryProfile> = profiles.into_iter().collect();
    let mut best = MinPoint { lambda: 0.0, value: f64::INFINITY };
    for k in 0..=samples {
        let x = k as f64 / samples as f64;
        let v = profiles.iter().map(|p| p.eval(x)).fold(f64::NEG_INFINITY, f64::max);
        if v < best.value {
            best = MinPoint { lambda: x, value: v };
        }
    }
    apply_floors(best.lambda, best.value, floor_left, floor_bottom)
}

/// Envelope that stores profiles verbatim and minimizes their maximum
/// directly. Every profile but the frontier is kept in truncated form.
#[derive(Debug, Clone, Default)]
pub struct BruteForceEnvelope {
    entries: Vec<EnvelopeEntry>,
    removed: u64,
}

impl BruteForceEnvelope {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[EnvelopeEntry] {
        &self.entries
    }

    /// Value of the envelope at `lambda`, without floors.
    pub fn eval(&self, lambda: f64) -> f64 {
        self.entries.iter().map(|e| e.profile.eval(lambda)).fold(f64::NEG_INFINITY, f64::max)
    }
}

impl WitnessEnvelope for BruteForceEnvelope {
    fn mode(&self) -> EnvelopeMode {
        EnvelopeMode::Reference
    }

    fn insert(&mut self, entry: EnvelopeEntry) -> Result<()> {
        check_increasing(self.entries.last().map(|e| e.id), entry.id)?;
        self.entries.push(entry);
        Ok(())
    }

    fn remove_up_to(&mut self, max_id: usize) -> usize {
        let before = self.entries.len();
        self.entries.retain(|e| e.id > max_id);
        let count = before - self.entries.len();
        self.removed += count as u64;
        count
    }

    fn clear(&mut self) -> usize {
        let count = self.entries.len();
        self.entries.clear();
        self.removed += count as u64;
        count
    }

    fn min_query(&mut self, floor_left: Option<f64>, floor_bottom: f64) -> Result<MinPoint> {
        check_floors(floor_left, floor_bottom)?;
        if self.entries.is_empty() {
            return Err(FrechetError::EmptyEnvelope);
        }
        Ok(envelope_minimum(self.entries.iter().map(|e| &e.profile), floor_left, floor_bottom))
    }

    fn truncate_frontier(&mut self) {
        if let Some(last) = self.entries.last_mut() {
            last.profile = last.profile.truncate();
        }
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn removed_total(&self) -> u64 {
        self.removed
    }
}
