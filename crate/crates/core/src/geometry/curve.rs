use crate::error::{FrechetError, Result};
use crate::geometry::point::Point;

/// A polygonal curve `[0, m] -> R^d` through an explicit vertex list.
///
/// A curve given with a single vertex is stored as one zero-length segment, so
/// every curve has at least one segment.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve {
    dim: usize,
    coords: Vec<f64>,
}

impl PolygonalCurve {
    /// Builds a curve from a flat coordinate buffer of `dim`-sized vertices.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(FrechetError::InvalidInput("dimension must be at least 1".into()));
        }
        if coords.is_empty() {
            return Err(FrechetError::EmptyCurve);
        }
        if coords.len() % dim != 0 {
            return Err(FrechetError::InvalidInput(format!(
                "{} coordinates do not split into vertices of dimension {dim}",
                coords.len()
            )));
        }
        if let Some((k, &value)) = coords.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(FrechetError::NonFinite { vertex: k / dim, value });
        }
        let mut coords = coords;
        if coords.len() == dim {
            coords.extend_from_within(..);
        }
        Ok(PolygonalCurve { dim, coords })
    }

    pub fn from_vertices<V: AsRef<[f64]>>(vertices: &[V]) -> Result<Self> {
        let first = vertices.first().ok_or(FrechetError::EmptyCurve)?;
        let dim = first.as_ref().len();
        let mut coords = Vec::with_capacity(dim * vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if v.len() != dim {
                return Err(FrechetError::DimensionMismatch { expected: dim, found: v.len() });
            }
            coords.extend_from_slice(v);
        }
        Self::from_flat(dim, coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn segment_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn vertex(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = &[f64]> + ExactSizeIterator + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn first(&self) -> &[f64] {
        self.vertex(0)
    }

    pub fn last(&self) -> &[f64] {
        self.vertex(self.vertex_count() - 1)
    }

    /// Evaluates the curve at `t = i + lambda`.
    pub fn eval(&self, t: f64) -> Result<Point> {
        let m = self.segment_count() as f64;
        if !(0.0..=m).contains(&t) {
            return Err(FrechetError::OutOfRange { value: t, max: m });
        }
        let i = (t.floor() as usize).min(self.segment_count() - 1);
        let lambda = t - i as f64;
        Ok(Point::lerp(self.vertex(i), self.vertex(i + 1), lambda))
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        PolygonalCurve { dim: self.dim, coords: self.coords.iter().map(|c| c * factor).collect() }
    }

    pub fn reversed(&self) -> Self {
        let coords = self.vertices().rev().flatten().copied().collect();
        PolygonalCurve { dim: self.dim, coords }
    }

    pub fn flat_coords(&self) -> &[f64] {
        &self.coords
    }
}
