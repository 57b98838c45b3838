//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Curves cross the boundary as flat `[x0, y0, x1, y1, ...]` arrays of 2D
//! points. The plain functions in [`demo`] do the work and are tested natively;
//! the exported wrappers only convert errors into JavaScript exceptions.

use wasm_bindgen::prelude::*;

pub mod demo {
    use leash::{frechet_distance, frechet_distance_approx, geometry::polygon_sides_for_epsilon, Metric, PolygonalCurve};

    fn curve(flat: &[f64]) -> Result<PolygonalCurve, String> {
        if flat.len() < 2 || flat.len() % 2 != 0 {
            return Err("a curve needs at least one point given as x, y pairs".into());
        }
        PolygonalCurve::from_flat(2, flat.to_vec()).map_err(|e| e.to_string())
    }

    fn metric(name: &str) -> Result<Metric, String> {
        name.parse::<Metric>().map_err(|e| e.to_string())
    }

    /// Distance and sweep counters: `[value, inserts, removals, queries, deque pops]`.
    pub fn distance(a: &[f64], b: &[f64], metric_name: &str) -> Result<Vec<f64>, String> {
        let r = frechet_distance(&curve(a)?, &curve(b)?, &metric(metric_name)?).map_err(|e| e.to_string())?;
        let s = r.stats;
        Ok(vec![
            r.value,
            s.envelope_inserts as f64,
            s.envelope_removals as f64,
            s.envelope_queries as f64,
            s.deque_pops as f64,
        ])
    }

    /// Terrain heights on a `resolution x resolution` grid, rows of constant
    /// `t` from bottom to top, each row ordered by increasing `s`.
    pub fn terrain(a: &[f64], b: &[f64], metric_name: &str, resolution: usize) -> Result<Vec<f64>, String> {
        if !(2..=1024).contains(&resolution) {
            return Err("resolution must be between 2 and 1024".into());
        }
        let (p, q, m) = (curve(a)?, curve(b)?, metric(metric_name)?);
        if matches!(m, Metric::RegularPolygon(_)) {
            return Err("the polygon gauge has no terrain between cell boundaries".into());
        }
        let (n, k) = (p.segment_count() as f64, q.segment_count() as f64);
        let scale = (resolution - 1) as f64;
        let ps: Vec<_> = (0..resolution).map(|x| p.eval((x as f64 * n / scale).min(n))).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let mut out = Vec::with_capacity(resolution * resolution);
        for y in 0..resolution {
            let qt = q.eval((y as f64 * k / scale).min(k)).map_err(|e| e.to_string())?;
            for pt in &ps {
                out.push(m.from_raw(m.eval(pt, &qt).map_err(|e| e.to_string())?));
            }
        }
        Ok(out)
    }

    /// Polygon approximation against the exact Euclidean value:
    /// `[sides, approximate, exact, exact / approximate]`.
    pub fn approximation(a: &[f64], b: &[f64], epsilon: f64) -> Result<Vec<f64>, String> {
        let (p, q) = (curve(a)?, curve(b)?);
        let sides = polygon_sides_for_epsilon(epsilon).map_err(|e| e.to_string())?;
        let approx = frechet_distance_approx(&p, &q, epsilon).map_err(|e| e.to_string())?.value;
        let exact = frechet_distance(&p, &q, &Metric::EuclideanSquared).map_err(|e| e.to_string())?.value;
        let ratio = if approx > 0.0 { exact / approx } else { 1.0 };
        Ok(vec![sides as f64, approx, exact, ratio])
    }
}

fn js_err(message: String) -> JsValue {
    JsValue::from_str(&message)
}

#[wasm_bindgen]
pub fn distance(a: &[f64], b: &[f64], metric: &str) -> Result<Vec<f64>, JsValue> {
    demo::distance(a, b, metric).map_err(js_err)
}

#[wasm_bindgen]
pub fn terrain(a: &[f64], b: &[f64], metric: &str, resolution: usize) -> Result<Vec<f64>, JsValue> {
    demo::terrain(a, b, metric, resolution).map_err(js_err)
}

#[wasm_bindgen]
pub fn approximation(a: &[f64], b: &[f64], epsilon: f64) -> Result<Vec<f64>, JsValue> {
    demo::approximation(a, b, epsilon).map_err(js_err)
}
