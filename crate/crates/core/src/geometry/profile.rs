use crate::error::{FrechetError, Result};
use crate::geometry::lines::{self, Line, Piece};

/// Functional form of a boundary profile on `lambda in [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum ProfileShape {
    /// `a * lambda^2 + b * lambda + c` with `a >= 0`.
    Parabola { a: f64, b: f64, c: f64 },
    /// Convex piecewise-linear function; pieces are contiguous and cover `[0, 1]`.
    PiecewiseLinear(Vec<Piece>),
}

/// The terrain restricted to one cell boundary: distance from a fixed vertex
/// of one curve to the point `lambda` along a segment of the other curve.
///
/// Every profile is unimodal on `[0, 1]`. A truncated profile evaluates to the
/// running minimum `min_{mu <= lambda} raw(mu)`: the raw profile up to its
/// minimizer and constant afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryProfile {
    shape: ProfileShape,
    argmin: f64,
    min_value: f64,
    truncated: bool,
}

impl BoundaryProfile {
    pub fn parabola(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 {
            return Err(FrechetError::InvalidInput(format!("invalid parabola ({a}, {b}, {c})")));
        }
        let argmin = if a > 0.0 {
            (-b / (2.0 * a)).clamp(0.0, 1.0)
        } else if b < 0.0 {
            1.0
        } else {
            0.0
        };
        let min_value = (a * argmin * argmin + b * argmin + c).max(0.0);
        Ok(BoundaryProfile { shape: ProfileShape::Parabola { a, b, c }, argmin, min_value, truncated: false })
    }

    /// Builds a piecewise-linear profile from tagged lines (one per facet);
    /// the profile is their upper envelope on `[0, 1]`.
    pub fn from_lines(mut lines: Vec<(Line, usize)>) -> Result<Self> {
        if lines.is_empty() {
            return Err(FrechetError::InvalidInput("piecewise-linear profile needs a line".into()));
        }
        if lines.iter().any(|(l, _)| !(l.slope.is_finite() && l.intercept.is_finite())) {
            return Err(FrechetError::InvalidInput("non-finite profile line".into()));
        }
        let pieces = lines::upper_envelope_on_unit(&mut lines);
        Ok(Self::from_pieces_unchecked(pieces))
    }

    /// Builds a profile from pieces that already form a convex envelope on `[0, 1]`.
    pub(crate) fn from_pieces_unchecked(pieces: Vec<Piece>) -> Self {
        let (argmin, min_value) = lines::min_of_pieces(&pieces);
        BoundaryProfile {
            shape: ProfileShape::PiecewiseLinear(pieces),
            argmin,
            min_value: min_value.max(0.0),
            truncated: false,
        }
    }

    pub fn constant(value: f64) -> Result<Self> {
        Self::parabola(0.0, 0.0, value)
    }

    pub fn shape(&self) -> &ProfileShape {
        &self.shape
    }

    /// Quadratic coefficients, for parabola profiles.
    pub fn coefficients(&self) -> Option<(f64, f64, f64)> {
        match self.shape {
            ProfileShape::Parabola { a, b, c } => Some((a, b, c)),
            ProfileShape::PiecewiseLinear(_) => None,
        }
    }

    pub fn pieces(&self) -> Option<&[Piece]> {
        match &self.shape {
            ProfileShape::PiecewiseLinear(p) => Some(p),
            ProfileShape::Parabola { .. } => None,
        }
    }

    /// Interior breakpoints of a piecewise-linear profile (empty for parabolas).
    pub fn breakpoints(&self) -> Vec<f64> {
        self.pieces()
            .map(|p| p.iter().skip(1).map(|piece| piece.start).collect())
            .unwrap_or_default()
    }

    /// Leftmost minimizer of the raw profile on `[0, 1]`.
    pub fn argmin(&self) -> f64 {
        self.argmin
    }

    pub fn min_value(&self) -> f64 {
        self.min_value
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// The running-minimum form of this profile.
    pub fn truncate(&self) -> Self {
        BoundaryProfile { truncated: true, ..self.clone() }
    }

    pub fn untruncated(&self) -> Self {
        BoundaryProfile { truncated: false, ..self.clone() }
    }

    /// Evaluates the profile, honouring the truncation flag.
    pub fn eval(&self, lambda: f64) -> f64 {
        if self.truncated && lambda >= self.argmin {
            self.min_value
        } else {
            self.eval_raw(lambda)
        }
    }

    /// Evaluates the untruncated profile.
    pub fn eval_raw(&self, lambda: f64) -> f64 {
        match &self.shape {
            ProfileShape::Parabola { a, b, c } => ((a * lambda + b) * lambda + c).max(0.0),
            ProfileShape::PiecewiseLinear(pieces) => lines::max_at(pieces, lambda),
        }
    }

    /// Largest value on `[0, 1]`; attained at an end because the profile is convex.
    pub fn max_value(&self) -> f64 {
        self.eval(0.0).max(self.eval(1.0))
    }
}
