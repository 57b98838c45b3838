use std::fmt;
use std::str::FromStr;

use crate::error::{FrechetError, Result};
use crate::geometry::lines::{Line, Piece};
use crate::geometry::point::{check_same_dim, dot, norm_sq, sub, Point};
use crate::geometry::polygon;
use crate::geometry::profile::BoundaryProfile;

/// Relative tolerance used when checking that a facet set is closed under negation.
const SYMMETRY_TOLERANCE: f64 = 1e-9;

/// A symmetric polytope gauge `z -> max_f <w_f, z>` given by its facet normals.
///
/// Each normal `w_f` describes the facet `{z : <w_f, z> = 1}` of the unit ball.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    dim: usize,
    normals: Vec<f64>,
}

impl Polytope {
    pub fn new<V: AsRef<[f64]>>(normals: &[V]) -> Result<Self> {
        let first = normals
            .first()
            .ok_or_else(|| FrechetError::Config("polytope needs at least one facet".into()))?;
        let dim = first.as_ref().len();
        if dim == 0 {
            return Err(FrechetError::Config("polytope facets need a dimension".into()));
        }
        let mut flat = Vec::with_capacity(dim * normals.len());
        for (f, w) in normals.iter().enumerate() {
            let w = w.as_ref();
            check_same_dim(dim, w.len())?;
            if let Some(&value) = w.iter().find(|x| !x.is_finite()) {
                return Err(FrechetError::NonFinite { vertex: f, value });
            }
            if norm_sq(w) == 0.0 {
                return Err(FrechetError::Config(format!("facet {f} has a zero normal")));
            }
            flat.extend_from_slice(w);
        }
        let polytope = Polytope { dim, normals: flat };
        polytope.check_symmetric()?;
        polytope.check_bounded()?;
        Ok(polytope)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.normals.len() / self.dim
    }

    pub fn facets(&self) -> impl Iterator<Item = &[f64]> {
        self.normals.chunks_exact(self.dim)
    }

    fn check_symmetric(&self) -> Result<()> {
        for (f, w) in self.facets().enumerate() {
            let scale = norm_sq(w).sqrt();
            let mirrored = self.facets().any(|v| {
                v.iter().zip(w).all(|(a, b)| (a + b).abs() <= SYMMETRY_TOLERANCE * scale)
            });
            if !mirrored {
                return Err(FrechetError::Config(format!(
                    "facet {f} has no opposite facet; asymmetric distances are not supported"
                )));
            }
        }
        Ok(())
    }

    /// The normals must span R^d, otherwise the unit ball is unbounded.
    fn check_bounded(&self) -> Result<()> {
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(self.dim);
        for w in self.facets() {
            let scale = norm_sq(w).sqrt();
            let mut r = w.to_vec();
            for b in &basis {
                let proj = dot(&r, b);
                r.iter_mut().zip(b).for_each(|(x, y)| *x -= proj * y);
            }
            let n = norm_sq(&r).sqrt();
            if n > 1e-10 * scale {
                basis.push(r.into_iter().map(|x| x / n).collect());
            }
        }
        if basis.len() < self.dim {
            return Err(FrechetError::Config(format!(
                "facet normals span only {} of {} dimensions",
                basis.len(),
                self.dim
            )));
        }
        Ok(())
    }

    fn gauge(&self, z: &[f64]) -> f64 {
        self.facets().map(|w| dot(w, z)).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// A convex, symmetric distance function together with its boundary-profile factory.
#[derive(Debug, Clone, PartialEq)]
pub enum Metric {
    /// Squared Euclidean distance. Reported results are square-rooted.
    EuclideanSquared,
    L1,
    LInfinity,
    Polytope(Polytope),
    /// Circumscribed regular polygon with the given number of sides, laid
    /// into the plane of each point–segment pair.
    RegularPolygon(usize),
}

impl Metric {
    pub fn polygon(sides: usize) -> Result<Self> {
        if sides < 3 {
            return Err(FrechetError::InvalidInput(format!("polygon needs at least 3 sides, got {sides}")));
        }
        Ok(Metric::RegularPolygon(sides))
    }

    /// True when boundary profiles are parabolas (otherwise piecewise linear).
    pub fn has_parabolic_profiles(&self) -> bool {
        matches!(self, Metric::EuclideanSquared)
    }

    /// True when the pointwise distance is a metric in the usual sense.
    pub fn is_true_metric(&self) -> bool {
        matches!(self, Metric::L1 | Metric::LInfinity | Metric::Polytope(_) | Metric::EuclideanSquared)
    }

    pub fn check_dim(&self, d: usize) -> Result<()> {
        match self {
            Metric::Polytope(poly) => check_same_dim(poly.dim(), d),
            Metric::RegularPolygon(_) if d < 2 => {
                Err(FrechetError::InvalidInput("polygon approximation needs dimension >= 2".into()))
            }
            Metric::L1 if d > MAX_L1_DIM => {
                Err(FrechetError::Config(format!("L1 profiles support up to {MAX_L1_DIM} dimensions")))
            }
            _ => Ok(()),
        }
    }

    /// Distance between two points, in raw units (squared for `EuclideanSquared`).
    pub fn eval(&self, p: &[f64], q: &[f64]) -> Result<f64> {
        check_same_dim(p.len(), q.len())?;
        self.check_dim(p.len())?;
        let value = match self {
            Metric::EuclideanSquared => p.iter().zip(q).map(|(a, b)| (b - a) * (b - a)).sum(),
            Metric::L1 => p.iter().zip(q).map(|(a, b)| (b - a).abs()).sum(),
            Metric::LInfinity => p.iter().zip(q).map(|(a, b)| (b - a).abs()).fold(0.0, f64::max),
            Metric::Polytope(poly) => poly.gauge(&sub(q, p)),
            Metric::RegularPolygon(_) => {
                return Err(FrechetError::Config(
                    "the polygon gauge is defined per point–segment pair; use segment_distance".into(),
                ))
            }
        };
        Ok(value)
    }

    /// Distance from `p` to the point at `lambda` on the segment, in raw units.
    pub fn segment_distance(&self, p: &[f64], seg_start: &[f64], seg_end: &[f64], lambda: f64) -> Result<f64> {
        match self {
            Metric::RegularPolygon(_) => Ok(self.boundary_profile(p, seg_start, seg_end)?.eval(lambda)),
            _ => {
                check_same_dim(seg_start.len(), seg_end.len())?;
                self.eval(p, &Point::lerp(seg_start, seg_end, lambda))
            }
        }
    }

    /// Distance from `p` to the segment `seg_start -> seg_end` as a function of
    /// the segment parameter.
    pub fn boundary_profile(&self, p: &[f64], seg_start: &[f64], seg_end: &[f64]) -> Result<BoundaryProfile> {
        let d = p.len();
        check_same_dim(d, seg_start.len())?;
        check_same_dim(d, seg_end.len())?;
        self.check_dim(d)?;
        match self {
            Metric::EuclideanSquared => {
                let ell = sub(seg_end, seg_start);
                let offset = sub(seg_start, p);
                BoundaryProfile::parabola(norm_sq(&ell), 2.0 * dot(&offset, &ell), norm_sq(&offset))
            }
            Metric::L1 => Ok(l1_profile(p, seg_start, seg_end)),
            Metric::LInfinity => {
                let lines = (0..d)
                    .flat_map(|axis| {
                        let slope = seg_end[axis] - seg_start[axis];
                        let offset = seg_start[axis] - p[axis];
                        [
                            (Line::new(slope, offset), 2 * axis),
                            (Line::new(-slope, -offset), 2 * axis + 1),
                        ]
                    })
                    .collect();
                BoundaryProfile::from_lines(lines)
            }
            Metric::Polytope(poly) => {
                let ell = sub(seg_end, seg_start);
                let offset = sub(seg_start, p);
                let lines = poly
                    .facets()
                    .enumerate()
                    .map(|(f, w)| (Line::new(dot(w, &ell), dot(w, &offset)), f))
                    .collect();
                BoundaryProfile::from_lines(lines)
            }
            Metric::RegularPolygon(k) => polygon::lift_to_polygon_metric(p, seg_start, seg_end, *k),
        }
    }

    /// Converts a value in reported units into the raw units of profiles.
    pub fn to_raw(&self, value: f64) -> f64 {
        match self {
            Metric::EuclideanSquared => value * value,
            _ => value,
        }
    }

    /// Converts a raw value into reported units.
    pub fn from_raw(&self, raw: f64) -> f64 {
        match self {
            Metric::EuclideanSquared => raw.max(0.0).sqrt(),
            _ => raw,
        }
    }
}

/// Largest dimension for which every L1 sign pattern fits a facet index.
pub const MAX_L1_DIM: usize = 60;

/// L1 profile built from its sign pattern on each interval between the zeros
/// of the coordinates of `seg(lambda) - p`; at most `d + 1` pieces. The facet
/// index encodes the sign pattern (bit `i` set when coordinate `i` is negative).
fn l1_profile(p: &[f64], seg_start: &[f64], seg_end: &[f64]) -> BoundaryProfile {
    let offsets = sub(seg_start, p);
    let slopes = sub(seg_end, seg_start);
    let mut cuts: Vec<f64> = offsets
        .iter()
        .zip(&slopes)
        .filter(|(_, &s)| s != 0.0)
        .map(|(&o, &s)| -o / s)
        .filter(|&t| t > 0.0 && t < 1.0)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut pieces: Vec<Piece> = Vec::with_capacity(cuts.len() + 1);
    let mut start = 0.0;
    for end in cuts.into_iter().chain(std::iter::once(1.0)) {
        let mid = 0.5 * (start + end);
        let (mut slope, mut intercept, mut facet) = (0.0, 0.0, 0usize);
        for (i, (&o, &s)) in offsets.iter().zip(&slopes).enumerate() {
            if o + mid * s < 0.0 {
                slope -= s;
                intercept -= o;
                facet |= 1 << i;
            } else {
                slope += s;
                intercept += o;
            }
        }
        pieces.push(Piece { start, end, line: Line::new(slope, intercept), facet });
        start = end;
    }
    BoundaryProfile::from_pieces_unchecked(pieces)
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::EuclideanSquared => write!(f, "euclidean"),
            Metric::L1 => write!(f, "l1"),
            Metric::LInfinity => write!(f, "linf"),
            Metric::Polytope(poly) => write!(f, "polytope({} facets)", poly.facet_count()),
            Metric::RegularPolygon(k) => write!(f, "polygon:{k}"),
        }
    }
}

impl FromStr for Metric {
    type Err = FrechetError;

    /// Parses `euclidean`, `l1`, `linf` and `polygon:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "euclidean" | "l2" => Ok(Metric::EuclideanSquared),
            "l1" | "manhattan" => Ok(Metric::L1),
            "linf" | "l-inf" | "chebyshev" => Ok(Metric::LInfinity),
            other => match other.strip_prefix("polygon:") {
                Some(k) => {
                    let k = k
                        .parse::<usize>()
                        .map_err(|_| FrechetError::Config(format!("bad polygon side count '{k}'")))?;
                    Metric::polygon(k)
                }
                None => Err(FrechetError::Config(format!("unknown metric '{s}'"))),
            },
        }
    }
}
