use std::io::Write;
use std::time::Instant;

use anyhow::{Context, Result};
use leash::oracle::frechet_by_bisection;
use leash::workload::{bench, doubling_exponents, scaling_exponent};
use leash::{frechet_distance, frechet_distance_approx, Metric, PolygonalCurve};

use crate::error::CliError;
use crate::io::{parse_metric, read_curve};
use crate::{Cli, Command, CurvePair};

/// Runs one command, writing its report to `out`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Compute { pair, epsilon } => compute(pair, *epsilon, out),
        Command::Verify { pair, tolerance } => verify(pair, *tolerance, out),
        Command::Terrain { pair, resolution } => terrain(pair, *resolution, out),
        Command::Bench { metrics, seed, sizes, dim, repeats } => run_bench(metrics, *seed, sizes, *dim, *repeats, out),
    }
}

/// Formats `x` with 17 significant digits.
pub fn fmt_value(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:?}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-5..16).contains(&magnitude) {
        format!("{:.*}", (16 - magnitude) as usize, x)
    } else {
        format!("{x:.16e}")
    }
}

fn load(pair: &CurvePair) -> Result<(PolygonalCurve, PolygonalCurve, Metric)> {
    let a = read_curve(&pair.curve_a)?;
    let b = read_curve(&pair.curve_b)?;
    let metric = parse_metric(&pair.metric)?;
    if a.dim() != b.dim() {
        return Err(CliError::from(leash::FrechetError::DimensionMismatch { expected: a.dim(), found: b.dim() }).into());
    }
    Ok((a, b, metric))
}

fn compute(pair: &CurvePair, epsilon: Option<f64>, out: &mut dyn Write) -> Result<i32> {
    let (a, b, metric) = load(pair)?;
    let started = Instant::now();
    let result = match epsilon {
        Some(eps) => {
            if metric != Metric::EuclideanSquared {
                return Err(CliError::Config("--epsilon approximates the euclidean metric only".into()).into());
            }
            frechet_distance_approx(&a, &b, eps).map_err(CliError::from)?
        }
        None => frechet_distance(&a, &b, &metric).map_err(CliError::from)?,
    };
    let elapsed = started.elapsed();
    let s = result.stats;
    writeln!(out, "value             {}", fmt_value(result.value))?;
    writeln!(out, "metric            {}", result.metric)?;
    writeln!(out, "n                 {}", a.segment_count())?;
    writeln!(out, "m                 {}", b.segment_count())?;
    writeln!(out, "d                 {}", a.dim())?;
    writeln!(out, "elapsed_ms        {:.3}", elapsed.as_secs_f64() * 1e3)?;
    writeln!(out, "envelope_inserts  {}", s.envelope_inserts)?;
    writeln!(out, "envelope_removals {}", s.envelope_removals)?;
    writeln!(out, "envelope_queries  {}", s.envelope_queries)?;
    writeln!(out, "deque_pops        {}", s.deque_pops)?;
    Ok(0)
}

/// Relative gap between two non-negative values; zero when both vanish.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn verify(pair: &CurvePair, tolerance: f64, out: &mut dyn Write) -> Result<i32> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(CliError::Config(format!("tolerance must be positive, got {tolerance}")).into());
    }
    let (a, b, metric) = load(pair)?;
    let engine = frechet_distance(&a, &b, &metric).map_err(CliError::from)?.value;
    let oracle = frechet_by_bisection(&a, &b, &metric, (tolerance * 1e-3).min(1e-9)).map_err(CliError::from)?;
    let gap = relative_gap(engine, oracle);
    let pass = gap <= tolerance;
    writeln!(out, "engine  {}", fmt_value(engine))?;
    writeln!(out, "oracle  {}", fmt_value(oracle))?;
    writeln!(out, "gap     {gap:.3e}")?;
    writeln!(out, "status  {}", if pass { "ok" } else { "MISMATCH" })?;
    Ok(if pass { 0 } else { 1 })
}

fn terrain(pair: &CurvePair, resolution: usize, out: &mut dyn Write) -> Result<i32> {
    if resolution < 2 {
        return Err(CliError::Config("resolution must be at least 2".into()).into());
    }
    let (a, b, metric) = load(pair)?;
    if matches!(metric, Metric::RegularPolygon(_)) {
        return Err(CliError::Config("the polygon gauge is only defined on cell boundaries; no terrain to export".into()).into());
    }
    let (n, m) = (a.segment_count(), b.segment_count());
    writeln!(out, "# n={n} m={m} metric={metric}")?;
    writeln!(out, "s,t,value")?;
    let step = |k: usize, len: usize| (k as f64 * len as f64 / (resolution - 1) as f64).min(len as f64);
    for x in 0..resolution {
        let s = step(x, n);
        let ps = a.eval(s).context("evaluating first curve")?;
        for y in 0..resolution {
            let t = step(y, m);
            let qt = b.eval(t).context("evaluating second curve")?;
            let v = metric.from_raw(metric.eval(&ps, &qt).map_err(CliError::from)?);
            writeln!(out, "{},{},{}", fmt_value(s), fmt_value(t), fmt_value(v))?;
        }
    }
    Ok(0)
}

fn run_bench(metrics: &[String], seed: u64, sizes: &[usize], dim: usize, repeats: usize, out: &mut dyn Write) -> Result<i32> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(CliError::Config("sizes must be positive".into()).into());
    }
    let metrics = metrics.iter().map(|m| parse_metric(m)).collect::<Result<Vec<_>, _>>()?;
    writeln!(out, "{:<12} {:>6} {:>12} {:>10} {:>10} {:>10} {:>10} {:>8}", "metric", "n", "ms", "inserts", "removals", "queries", "pops", "ops/n^2")?;
    for metric in &metrics {
        let rows = bench(metric, sizes, dim, repeats, seed).map_err(CliError::from)?;
        for r in &rows {
            let s = r.stats;
            let ops = s.envelope_inserts + s.envelope_removals + s.envelope_queries + s.deque_pops;
            writeln!(
                out,
                "{:<12} {:>6} {:>12.3} {:>10} {:>10} {:>10} {:>10} {:>8.3}",
                metric.to_string(),
                r.segments,
                r.elapsed.as_secs_f64() * 1e3,
                s.envelope_inserts,
                s.envelope_removals,
                s.envelope_queries,
                s.deque_pops,
                ops as f64 / (r.segments * r.segments) as f64
            )?;
        }
        let doubling: Vec<String> = doubling_exponents(&rows).iter().map(|e| format!("{e:.2}")).collect();
        match scaling_exponent(&rows) {
            Some(fit) => writeln!(out, "exponent {metric}: fit {fit:.3}, per step [{}]", doubling.join(", "))?,
            None => writeln!(out, "exponent {metric}: needs at least two sizes")?,
        }
    }
    Ok(0)
}
