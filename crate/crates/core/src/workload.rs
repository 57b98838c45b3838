//! Seeded random curves and timing runs for scaling measurements.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{frechet_distance, SweepStats};
use crate::error::Result;
use crate::geometry::{Metric, PolygonalCurve};

/// Deterministic generator of random curves.
#[derive(Debug, Clone)]
pub struct CurveGenerator {
    rng: ChaCha8Rng,
}

impl CurveGenerator {
    pub fn new(seed: u64) -> Self {
        CurveGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Curve with `segments` segments whose coordinates are uniform in `[-extent, extent]`.
    pub fn uniform(&mut self, segments: usize, dim: usize, extent: f64) -> PolygonalCurve {
        let coords = (0..(segments + 1) * dim).map(|_| self.rng.gen_range(-extent..=extent)).collect();
        PolygonalCurve::from_flat(dim, coords).expect("finite coordinates")
    }

    /// Random walk with steps uniform in `[-step, step]` per coordinate.
    pub fn walk(&mut self, segments: usize, dim: usize, step: f64) -> PolygonalCurve {
        let mut pos = vec![0.0; dim];
        let mut coords = Vec::with_capacity((segments + 1) * dim);
        coords.extend_from_slice(&pos);
        for _ in 0..segments {
            for x in pos.iter_mut() {
                *x += self.rng.gen_range(-step..=step);
            }
            coords.extend_from_slice(&pos);
        }
        PolygonalCurve::from_flat(dim, coords).expect("finite coordinates")
    }

    /// Copy of `curve` with every vertex moved by up to `amount` per coordinate.
    pub fn jitter(&mut self, curve: &PolygonalCurve, amount: f64) -> PolygonalCurve {
        let coords = curve.flat_coords().iter().map(|c| c + self.rng.gen_range(-amount..=amount)).collect();
        PolygonalCurve::from_flat(curve.dim(), coords).expect("finite coordinates")
    }

    pub fn segments(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// One timed sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub metric: Metric,
    pub segments: usize,
    /// Fastest of the repeated runs.
    pub elapsed: Duration,
    pub value: f64,
    pub stats: SweepStats,
}

/// Times the sweep on random-walk pairs with `n` segments each in dimension
/// `dim`, once per size, keeping the fastest of `repeats` runs.
pub fn bench(metric: &Metric, sizes: &[usize], dim: usize, repeats: usize, seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        let mut gen = CurveGenerator::new(seed.wrapping_add(k as u64));
        let p = gen.walk(n, dim, 1.0);
        let q = gen.walk(n, dim, 1.0);
        let mut best: Option<BenchRow> = None;
        for _ in 0..repeats.max(1) {
            let started = Instant::now();
            let result = frechet_distance(&p, &q, metric)?;
            let elapsed = started.elapsed();
            if best.as_ref().map_or(true, |b| elapsed < b.elapsed) {
                best = Some(BenchRow { metric: metric.clone(), segments: n, elapsed, value: result.value, stats: result.stats });
            }
        }
        rows.extend(best);
    }
    Ok(rows)
}

/// Least-squares slope of `log t` against `log n`.
pub fn scaling_exponent(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.segments as f64).ln(), r.elapsed.as_secs_f64().max(1e-9).ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Exponents `log(t(2n) / t(n)) / log 2` between consecutive rows.
pub fn doubling_exponents(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| {
            let ratio = w[1].elapsed.as_secs_f64() / w[0].elapsed.as_secs_f64().max(1e-9);
            let size_ratio = w[1].segments as f64 / w[0].segments as f64;
            ratio.ln() / size_ratio.ln()
        })
        .collect()
}
