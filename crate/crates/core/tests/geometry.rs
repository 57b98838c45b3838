mod common;

use std::f64::consts::PI;

use leash::geometry::{lift_to_polygon_metric, polygon_sides_for_epsilon, BoundaryProfile, Metric};
use proptest::prelude::*;

fn point(d: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0f64, d)
}

/// A point and a segment in a dimension between 2 and 4.
fn configuration() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
    (2usize..=4).prop_flat_map(|d| (point(d), point(d), point(d)))
}

fn exact_metrics(d: usize) -> Vec<Metric> {
    let mut metrics = vec![Metric::EuclideanSquared, Metric::L1, Metric::LInfinity];
    if d == 2 {
        metrics.push(common::hexagon());
    }
    metrics
}

fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

proptest! {
    #[test]
    fn profiles_match_pointwise_distance((p, s0, s1) in configuration()) {
        for metric in exact_metrics(p.len()) {
            let prof = metric.boundary_profile(&p, &s0, &s1).unwrap();
            for k in 0..100 {
                let t = k as f64 / 99.0;
                let direct = metric.eval(&p, &lerp(&s0, &s1, t)).unwrap();
                let v = prof.eval(t);
                prop_assert!((v - direct).abs() <= 1e-9 * direct.max(1.0), "{metric} at {t}: {v} vs {direct}");
            }
        }
    }

    #[test]
    fn profiles_are_unimodal((p, s0, s1) in configuration(), triples in prop::collection::vec((0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64), 200)) {
        let mut metrics = exact_metrics(p.len());
        metrics.push(Metric::RegularPolygon(7));
        for metric in metrics {
            let prof = metric.boundary_profile(&p, &s0, &s1).unwrap();
            for &(a, b, c) in &triples {
                let mut x = [a, b, c];
                x.sort_by(f64::total_cmp);
                let (v1, v2, v3) = (prof.eval(x[0]), prof.eval(x[1]), prof.eval(x[2]));
                prop_assert!(v2 <= v1.max(v3) + 1e-9 * v2.max(1.0), "{metric}: {x:?}");
            }
        }
    }

    #[test]
    fn truncation_is_running_minimum((p, s0, s1) in configuration()) {
        for metric in exact_metrics(p.len()) {
            let prof = metric.boundary_profile(&p, &s0, &s1).unwrap();
            let trunc = prof.truncate();
            let mut running = f64::INFINITY;
            let mut last = f64::INFINITY;
            for k in 0..=2000 {
                let t = k as f64 / 2000.0;
                running = running.min(prof.eval(t));
                let v = trunc.eval(t);
                prop_assert!(v <= last, "{metric}: truncated profile increases at {t}");
                prop_assert!(v <= running + 1e-9 * running.max(1.0));
                // The grid misses the exact minimizer by at most one step.
                prop_assert!(running - v <= 1e-2 * running.max(1.0), "{metric} at {t}: {v} vs {running}");
                last = v;
            }
            prop_assert!((trunc.eval(1.0) - prof.min_value()).abs() <= 1e-12 * prof.min_value().max(1.0));
        }
    }

    #[test]
    fn cells_are_segment_convex(
        (a0, a1, b0, b1) in (2usize..=3).prop_flat_map(|d| (point(d), point(d), point(d), point(d))),
        u in 0.0..1.0f64, v in 0.0..1.0f64, w in 0.0..1.0f64, sides in (0usize..4, 1usize..4),
    ) {
        // Two points on different boundaries of the cell [0,1]^2 and a point between them.
        let on_boundary = |side: usize, t: f64| match side {
            0 => (0.0, t),
            1 => (t, 0.0),
            2 => (1.0, t),
            _ => (t, 1.0),
        };
        let x1 = on_boundary(sides.0, u);
        let x2 = on_boundary((sides.0 + sides.1) % 4, v);
        let y = (x1.0 + w * (x2.0 - x1.0), x1.1 + w * (x2.1 - x1.1));
        for metric in exact_metrics(a0.len()) {
            let height = |(s, t): (f64, f64)| metric.eval(&lerp(&a0, &a1, s), &lerp(&b0, &b1, t)).unwrap();
            let bound = height(x1).max(height(x2));
            prop_assert!(height(y) <= bound + 1e-9 * bound.max(1.0), "{metric}");
        }
    }

    #[test]
    fn polygon_gauge_brackets_euclidean((p, s0, s1) in configuration(), k in 3usize..40) {
        let prof = lift_to_polygon_metric(&p, &s0, &s1, k).unwrap();
        let stretch = 1.0 / (PI / k as f64).cos();
        for j in 0..100 {
            let t = j as f64 / 99.0;
            let e = euclid(&p, &lerp(&s0, &s1, t));
            let g = prof.eval(t);
            prop_assert!(g <= e + 1e-9 * e.max(1.0), "k={k} t={t}: {g} > {e}");
            prop_assert!(e <= g * stretch + 1e-9 * e.max(1.0), "k={k} t={t}: {e} > {g} * {stretch}");
        }
    }

    #[test]
    fn row_profiles_share_the_quadratic_and_cross_once(
        (q0, q1, ps) in (2usize..=3).prop_flat_map(|d| (point(d), point(d), prop::collection::vec(point(d), 2..8))),
    ) {
        let len_sq: f64 = q0.iter().zip(&q1).map(|(a, b)| (b - a) * (b - a)).sum();
        let profiles: Vec<BoundaryProfile> =
            ps.iter().map(|p| Metric::EuclideanSquared.boundary_profile(p, &q0, &q1).unwrap()).collect();
        for prof in &profiles {
            let (a, _, _) = prof.coefficients().unwrap();
            prop_assert_eq!(a, len_sq);
        }
        for f in &profiles {
            for g in &profiles {
                let mut changes = 0;
                let mut prev = 0.0f64;
                for k in 0..=1000 {
                    let t = k as f64 / 1000.0;
                    let diff = f.eval(t) - g.eval(t);
                    if diff.abs() > 1e-9 * f.eval(t).max(1.0) {
                        if prev != 0.0 && diff.signum() != prev.signum() {
                            changes += 1;
                        }
                        prev = diff;
                    }
                }
                prop_assert!(changes <= 1);
            }
        }
    }
}

#[test]
fn square_gauge_profile() {
    // With k = 4 the gauge in the plane of p and the segment is max(|x|, |y|).
    let prof = lift_to_polygon_metric(&[0.0, 1.0], &[0.0, 0.0], &[2.0, 0.0], 4).unwrap();
    for j in 0..=50 {
        let t = j as f64 / 50.0;
        let expected = (2.0 * t).max(1.0);
        assert!((prof.eval(t) - expected).abs() < 1e-12, "t={t}");
    }
    assert!((1.0..=2.0f64.sqrt()).contains(&prof.eval(0.0)));
}

/// Gauge of the circumscribed `k`-gon (one side facing -y) found by walking
/// densely along its boundary and picking the point in the direction of `z`.
fn sampled_polygon_gauge(k: usize, z: (f64, f64)) -> f64 {
    let radius = 1.0 / (PI / k as f64).cos();
    let vertex = |f: usize| {
        let theta = -PI / 2.0 + (2.0 * f as f64 + 1.0) * PI / k as f64;
        (radius * theta.cos(), radius * theta.sin())
    };
    let target = z.1.atan2(z.0);
    let norm = (z.0 * z.0 + z.1 * z.1).sqrt();
    let mut best = (f64::INFINITY, 0.0);
    for f in 0..k {
        let (a, b) = (vertex(f), vertex((f + 1) % k));
        for s in 0..=20_000 {
            let u = s as f64 / 20_000.0;
            let x = (a.0 + u * (b.0 - a.0), a.1 + u * (b.1 - a.1));
            let mut gap = (x.1.atan2(x.0) - target).abs();
            gap = gap.min(2.0 * PI - gap);
            if gap < best.0 {
                best = (gap, (x.0 * x.0 + x.1 * x.1).sqrt());
            }
        }
    }
    norm / best.1
}

#[test]
fn collinear_polygon_profile_matches_sampled_gauge() {
    for k in [3, 5, 6, 8] {
        let prof = lift_to_polygon_metric(&[3.0, 0.0, 0.0], &[0.0, 0.0, 0.0], &[2.0, 0.0, 0.0], k).unwrap();
        for j in 0..=10 {
            let t = j as f64 / 10.0;
            // In the segment frame the offset is (2t - 3, 0).
            let expected = sampled_polygon_gauge(k, (2.0 * t - 3.0, 0.0));
            assert!((prof.eval(t) - expected).abs() < 1e-3 * expected.max(1.0), "k={k} t={t}: {} vs {expected}", prof.eval(t));
        }
    }
}

#[test]
fn square_gauge_matches_sampled_gauge_off_axis() {
    let prof = lift_to_polygon_metric(&[0.0, 1.0], &[0.0, 0.0], &[2.0, 0.0], 4).unwrap();
    for j in 0..=10 {
        let t = j as f64 / 10.0;
        let expected = sampled_polygon_gauge(4, (2.0 * t, -1.0));
        assert!((prof.eval(t) - expected).abs() < 1e-3, "t={t}");
    }
}

#[test]
fn side_counts_for_epsilon() {
    assert_eq!(polygon_sides_for_epsilon(1.0).unwrap(), 3);
    assert_eq!(polygon_sides_for_epsilon(0.01).unwrap(), 23);
    assert!(1.0 / (PI / 23.0).cos() <= 1.01 && 1.01 < 1.0 / (PI / 22.0).cos());
    assert_eq!(polygon_sides_for_epsilon(1e9).unwrap(), 3);
    // k grows like eps^(-1/2).
    let (k1, k2) = (polygon_sides_for_epsilon(1e-4).unwrap() as f64, polygon_sides_for_epsilon(1e-6).unwrap() as f64);
    assert!((k2 / k1 - 10.0).abs() < 0.1, "{k1} {k2}");
}

#[test]
fn zero_length_segments_give_constant_profiles() {
    let prof = Metric::EuclideanSquared.boundary_profile(&[1.0, 1.0], &[4.0, 5.0], &[4.0, 5.0]).unwrap();
    assert_eq!(prof.coefficients(), Some((0.0, 0.0, 25.0)));
    let prof = Metric::LInfinity.boundary_profile(&[1.0, 1.0], &[4.0, 5.0], &[4.0, 5.0]).unwrap();
    assert_eq!(prof.pieces().unwrap().len(), 1);
    assert_eq!(prof.eval(0.3), 4.0);
}
