#![allow(dead_code)]

use leash::workload::CurveGenerator;
use leash::{Metric, PolygonalCurve, Polytope};

pub fn curve(vertices: &[&[f64]]) -> PolygonalCurve {
    PolygonalCurve::from_vertices(vertices).unwrap()
}

/// Segment `(0,0)-(2,0)`.
pub fn flat() -> PolygonalCurve {
    curve(&[&[0.0, 0.0], &[2.0, 0.0]])
}

/// Segment `(0,1)-(2,1)`, parallel to [`flat`] at distance 1.
pub fn parallel() -> PolygonalCurve {
    curve(&[&[0.0, 1.0], &[2.0, 1.0]])
}

/// `(0,1)-(1,2)-(2,1)`: its peak is at distance 2 from [`flat`] under every metric used here.
pub fn peak() -> PolygonalCurve {
    curve(&[&[0.0, 1.0], &[1.0, 2.0], &[2.0, 1.0]])
}

/// Regular hexagon gauge in the plane.
pub fn hexagon() -> Metric {
    let normals: Vec<[f64; 2]> = (0..6)
        .map(|f| {
            let t = std::f64::consts::PI * f as f64 / 3.0 + 0.2;
            [t.cos(), t.sin()]
        })
        .collect();
    Metric::Polytope(Polytope::new(&normals).unwrap())
}

/// A random pair with 1 to `max_segments` segments each, coordinates in [-10, 10].
pub fn random_pair(gen: &mut CurveGenerator, max_segments: usize, dim: usize) -> (PolygonalCurve, PolygonalCurve) {
    let n = gen.segments(1, max_segments);
    let m = gen.segments(1, max_segments);
    (gen.uniform(n, dim, 10.0), gen.uniform(m, dim, 10.0))
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-12)
}

pub mod ops {
    use std::collections::BTreeMap;

    use leash::envelope::{EnvelopeEntry, FacetEnvelope, MinPoint, ParabolaEnvelope, WitnessEnvelope};
    use leash::oracle::{envelope_minimum, grid_minimum, BruteForceEnvelope};
    use leash::{BoundaryProfile, Metric};
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
    }

    fn random_point(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
        (0..d).map(|_| rng.gen_range(-10.0..10.0)).collect()
    }

    fn random_floors(rng: &mut ChaCha8Rng) -> (Option<f64>, f64) {
        let left = rng.gen_bool(0.5).then(|| rng.gen_range(0.0..15.0));
        let bottom = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..15.0) };
        (left, bottom)
    }

    /// One random operation sequence on a facet envelope, mirrored on the
    /// brute-force envelope. Inserts follow the sweep's pattern: insert,
    /// query, truncate.
    pub fn facet_trial(rng: &mut ChaCha8Rng, metric: &Metric, d: usize, ops: usize) -> Result<usize, String> {
        let (s0, s1) = (random_point(rng, d), random_point(rng, d));
        let mut fast = FacetEnvelope::new();
        let mut slow = BruteForceEnvelope::new();
        let mut next_id = 1;
        let mut checks = 0;
        for _ in 0..ops {
            let roll = rng.gen_range(0..10);
            if roll < 6 {
                let profile = metric.boundary_profile(&random_point(rng, d), &s0, &s1).map_err(|e| e.to_string())?;
                fast.insert(EnvelopeEntry::new(next_id, profile.clone())).map_err(|e| e.to_string())?;
                slow.insert(EnvelopeEntry::new(next_id, profile)).map_err(|e| e.to_string())?;
                next_id += 1;
                compare_facet(rng, &mut fast, &mut slow)?;
                fast.truncate_frontier();
                slow.truncate_frontier();
            } else if roll < 8 {
                let cut = rng.gen_range(0..next_id);
                let (a, b) = (fast.remove_up_to(cut), slow.remove_up_to(cut));
                if a != b {
                    return Err(format!("remove_up_to({cut}) removed {a} vs {b}"));
                }
            } else if roll < 9 && fast.clear() != slow.clear() {
                return Err("clear counts differ".into());
            }
            if fast.len() != slow.len() {
                return Err(format!("sizes differ: {} vs {}", fast.len(), slow.len()));
            }
            if !fast.is_empty() {
                compare_facet(rng, &mut fast, &mut slow)?;
                for k in 0..=8 {
                    let t = k as f64 / 8.0;
                    if !close(fast.eval(t), slow.eval(t)) {
                        return Err(format!("envelope at {t}: {} vs {}", fast.eval(t), slow.eval(t)));
                    }
                }
                checks += 1;
            }
        }
        if !fast.is_empty() {
            let got = fast.min_query(None, 0.0).map_err(|e| e.to_string())?;
            grid_check(slow.entries().iter().map(|e| &e.profile), got)?;
        }
        Ok(checks)
    }

    /// No grid point of the envelope lies below the reported minimum.
    fn grid_check<'a>(profiles: impl IntoIterator<Item = &'a BoundaryProfile>, got: MinPoint) -> Result<(), String> {
        let grid = grid_minimum(profiles, None, 0.0, 256);
        if grid.value < got.value - 1e-9 * got.value.max(1.0) {
            return Err(format!("grid point {grid:?} lies below the reported minimum {got:?}"));
        }
        Ok(())
    }

    fn compare_facet(rng: &mut ChaCha8Rng, fast: &mut FacetEnvelope, slow: &mut BruteForceEnvelope) -> Result<(), String> {
        let (left, bottom) = random_floors(rng);
        let a = fast.min_query(left, bottom).map_err(|e| e.to_string())?;
        let b = slow.min_query(left, bottom).map_err(|e| e.to_string())?;
        if !close(a.value, b.value) {
            return Err(format!("min_query({left:?}, {bottom}): {a:?} vs {b:?}"));
        }
        let at = slow.eval(a.lambda).max(bottom).max(left.unwrap_or(0.0));
        if !close(at, a.value) {
            return Err(format!("reported minimizer {} has height {at}, not {}", a.lambda, a.value));
        }
        Ok(())
    }

    /// One random operation sequence on a parabola envelope, checked against
    /// a direct minimization over the profiles it still holds.
    pub fn parabola_trial(rng: &mut ChaCha8Rng, ops: usize) -> Result<usize, String> {
        let d = rng.gen_range(2..=3);
        let (s0, s1) = (random_point(rng, d), random_point(rng, d));
        let mut env = ParabolaEnvelope::new();
        let mut live: BTreeMap<usize, BoundaryProfile> = BTreeMap::new();
        let mut next_id = 1;
        let mut checks = 0;
        for _ in 0..ops {
            let roll = rng.gen_range(0..10);
            if roll < 6 {
                let profile = Metric::EuclideanSquared
                    .boundary_profile(&random_point(rng, d), &s0, &s1)
                    .map_err(|e| e.to_string())?;
                env.insert(EnvelopeEntry::new(next_id, profile.clone())).map_err(|e| e.to_string())?;
                live.insert(next_id, profile);
                next_id += 1;
            } else if roll < 8 {
                let cut = rng.gen_range(0..next_id);
                let expected = live.range(..=cut).count();
                live.retain(|&id, _| id > cut);
                if env.remove_up_to(cut) != expected {
                    return Err(format!("remove_up_to({cut}) count"));
                }
            } else if roll < 9 {
                if env.clear() != live.len() {
                    return Err("clear count".into());
                }
                live.clear();
            }
            if live.is_empty() {
                continue;
            }
            let lowest = env.lowest_point().map_err(|e| e.to_string())?;
            let direct = envelope_minimum(live.values(), None, f64::NEG_INFINITY);
            if !close(lowest.value, direct.value) {
                return Err(format!("lowest point {lowest:?} vs {direct:?}"));
            }
            let (left, bottom) = random_floors(rng);
            let unpruned = envelope_minimum(live.values(), left, bottom);
            let got: MinPoint = env.min_query(left, bottom).map_err(|e| e.to_string())?;
            live.retain(|id, _| env.ids().any(|x| x == *id));
            if live.len() != env.len() {
                return Err("pruning removed ids that were never inserted".into());
            }
            let pruned = envelope_minimum(live.values(), left, bottom);
            if !close(got.value, pruned.value) || got.value > unpruned.value + 1e-9 * unpruned.value.max(1.0) {
                return Err(format!("min_query {got:?}: survivors give {pruned:?}, all give {unpruned:?}"));
            }
            checks += 1;
        }
        if !live.is_empty() {
            let got = env.min_query(None, 0.0).map_err(|e| e.to_string())?;
            live.retain(|id, _| env.ids().any(|x| x == *id));
            grid_check(live.values(), got)?;
        }
        Ok(checks)
    }
}
