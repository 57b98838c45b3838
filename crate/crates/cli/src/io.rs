//! Curve and facet files.
//!
//! CSV files hold one vertex (or facet normal) per line as comma-separated
//! coordinates; blank lines and lines starting with `#` are ignored. JSON
//! curve files hold `{"dimension": d, "vertices": [[...], ...]}`.

use std::fs;
use std::path::Path;

use leash::{Metric, PolygonalCurve, Polytope};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Serialize, Deserialize)]
struct JsonCurve {
    dimension: usize,
    vertices: Vec<Vec<f64>>,
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_curve(path: &Path) -> Result<PolygonalCurve, CliError> {
    let text = read_text(path)?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) || text.trim_start().starts_with('{');
    if is_json {
        parse_json_curve(&text, path)
    } else {
        parse_csv_curve(&text, path)
    }
}

pub fn parse_csv_curve(text: &str, path: &Path) -> Result<PolygonalCurve, CliError> {
    let rows = parse_csv_rows(text, path)?;
    if rows.is_empty() {
        return Err(CliError::Parse { path: path.to_path_buf(), line: 0, message: "no vertices".into() });
    }
    PolygonalCurve::from_vertices(&rows).map_err(CliError::from)
}

pub fn parse_json_curve(text: &str, path: &Path) -> Result<PolygonalCurve, CliError> {
    let parsed: JsonCurve = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        message: e.to_string(),
    })?;
    if parsed.vertices.is_empty() {
        return Err(CliError::Parse { path: path.to_path_buf(), line: 0, message: "no vertices".into() });
    }
    for (k, v) in parsed.vertices.iter().enumerate() {
        if v.len() != parsed.dimension {
            return Err(CliError::Parse {
                path: path.to_path_buf(),
                line: 0,
                message: format!("vertex {k} has {} coordinates, expected {}", v.len(), parsed.dimension),
            });
        }
    }
    PolygonalCurve::from_vertices(&parsed.vertices).map_err(CliError::from)
}

fn parse_csv_rows(text: &str, path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| CliError::Parse { path: path.to_path_buf(), line: k + 1, message };
        let row = line
            .split(',')
            .map(|field| {
                let field = field.trim();
                match field.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    Ok(_) => Err(parse_err(format!("non-finite coordinate '{field}'"))),
                    Err(_) => Err(parse_err(format!("bad number '{field}'"))),
                }
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_err(format!("{} coordinates, expected {}", row.len(), first.len())));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// One vertex per line, coordinates in shortest round-trip form.
pub fn curve_to_csv(curve: &PolygonalCurve) -> String {
    let mut out = String::new();
    for v in curve.vertices() {
        let fields: Vec<String> = v.iter().map(|c| format!("{c:?}")).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn curve_to_json(curve: &PolygonalCurve) -> String {
    let doc = JsonCurve { dimension: curve.dim(), vertices: curve.vertices().map(<[f64]>::to_vec).collect() };
    serde_json::to_string_pretty(&doc).expect("curves serialize")
}

pub fn read_polytope(path: &Path) -> Result<Polytope, CliError> {
    let text = read_text(path)?;
    let rows = parse_csv_rows(&text, path)?;
    if rows.is_empty() {
        return Err(CliError::Config(format!("{}: no facets", path.display())));
    }
    Polytope::new(&rows).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// Parses `euclidean`, `l1`, `linf`, `polygon:<k>` or `polytope:<facet-file>`.
pub fn parse_metric(spec: &str) -> Result<Metric, CliError> {
    match spec.strip_prefix("polytope:") {
        Some(file) => Ok(Metric::Polytope(read_polytope(Path::new(file))?)),
        None => spec.parse::<Metric>().map_err(|e| CliError::Config(e.to_string())),
    }
}
