//! Upper envelopes of lines over the unit parameter interval.

/// `slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub slope: f64,
    pub intercept: f64,
}

impl Line {
    pub fn new(slope: f64, intercept: f64) -> Self {
        Line { slope, intercept }
    }

    #[inline]
    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    /// Abscissa where `self` and `other` meet; infinite for parallel lines.
    pub fn crossing(&self, other: &Line) -> f64 {
        (self.intercept - other.intercept) / (other.slope - self.slope)
    }
}

/// One linear piece of a piecewise-linear function on `[start, end]`, tagged
/// with the facet of the distance polytope that produces it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub start: f64,
    pub end: f64,
    pub line: Line,
    pub facet: usize,
}

/// Upper envelope over the whole real line, as the subsequence of lines that
/// appear on it, sorted by increasing slope. Parallel lines keep the highest.
pub fn upper_hull(lines: &mut [(Line, usize)]) -> Vec<(Line, usize)> {
    // Adding 0.0 maps -0.0 to 0.0 so that equal slopes sort together.
    lines.sort_by(|a, b| {
        (a.0.slope + 0.0)
            .total_cmp(&(b.0.slope + 0.0))
            .then(a.0.intercept.total_cmp(&b.0.intercept))
    });
    let mut hull: Vec<(Line, usize)> = Vec::with_capacity(lines.len());
    for &(line, tag) in lines.iter() {
        if let Some(top) = hull.last() {
            if top.0.slope == line.slope {
                hull.pop();
            }
        }
        while hull.len() >= 2 {
            let l1 = hull[hull.len() - 2].0;
            let l2 = hull[hull.len() - 1].0;
            // l2 is hidden once l1 and `line` cross no later than l1 and l2.
            let lhs = (l1.intercept - line.intercept) * (l2.slope - l1.slope);
            let rhs = (l1.intercept - l2.intercept) * (line.slope - l1.slope);
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((line, tag));
    }
    hull
}

/// Upper envelope of tagged lines restricted to `[0, 1]`, as contiguous pieces
/// covering the interval exactly.
pub fn upper_envelope_on_unit(lines: &mut [(Line, usize)]) -> Vec<Piece> {
    assert!(!lines.is_empty(), "envelope of no lines");
    let hull = upper_hull(lines);
    let mut pieces: Vec<Piece> = Vec::with_capacity(hull.len());
    for (k, &(line, facet)) in hull.iter().enumerate() {
        let lo = if k == 0 { f64::NEG_INFINITY } else { hull[k - 1].0.crossing(&line) };
        let hi = if k + 1 == hull.len() { f64::INFINITY } else { line.crossing(&hull[k + 1].0) };
        let start = lo.max(0.0);
        let end = hi.min(1.0);
        if end > start {
            pieces.push(Piece { start, end, line, facet });
        }
    }
    if pieces.is_empty() {
        // All crossings collapsed onto the interval ends; pick the top line at the midpoint.
        let (line, facet) = hull
            .iter()
            .copied()
            .max_by(|a, b| a.0.at(0.5).total_cmp(&b.0.at(0.5)))
            .expect("non-empty hull");
        pieces.push(Piece { start: 0.0, end: 1.0, line, facet });
    }
    pieces[0].start = 0.0;
    for k in 1..pieces.len() {
        pieces[k].start = pieces[k - 1].end;
    }
    let last = pieces.len() - 1;
    pieces[last].end = 1.0;
    pieces
}

/// Minimum of a convex piecewise-linear function given by contiguous pieces.
/// Returns the leftmost minimizing breakpoint and the value there.
pub fn min_of_pieces(pieces: &[Piece]) -> (f64, f64) {
    let mut best = (pieces[0].start, max_at(pieces, pieces[0].start));
    for p in pieces {
        let v = max_at(pieces, p.end);
        if v < best.1 {
            best = (p.end, v);
        }
    }
    best
}

/// Value of the piecewise-linear function at `x`: the convex envelope is the
/// maximum of its piece lines.
#[inline]
pub fn max_at(pieces: &[Piece], x: f64) -> f64 {
    pieces.iter().map(|p| p.line.at(x)).fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tagged(lines: &[(f64, f64)]) -> Vec<(Line, usize)> {
        lines.iter().enumerate().map(|(k, &(s, c))| (Line::new(s, c), k)).collect()
    }

    #[test]
    fn v_shape_has_one_breakpoint() {
        let mut lines = tagged(&[(-2.0, 2.0), (2.0, 0.0)]);
        let pieces = upper_envelope_on_unit(&mut lines);
        assert_eq!(pieces.len(), 2);
        assert!((pieces[0].end - 0.5).abs() < 1e-15);
        let (x, v) = min_of_pieces(&pieces);
        assert!((x - 0.5).abs() < 1e-15 && (v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hidden_and_parallel_lines_drop_out() {
        let mut lines = tagged(&[(0.0, 1.0), (0.0, 3.0), (1.0, -5.0), (-1.0, 0.0)]);
        let pieces = upper_envelope_on_unit(&mut lines);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].facet, 1);
    }

    #[test]
    fn signed_zero_slopes_are_parallel() {
        let mut lines = tagged(&[(-2.0, 1.0), (-0.0, 2.0), (0.0, -2.0), (2.0, -1.0)]);
        let pieces = upper_envelope_on_unit(&mut lines);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].line, Line::new(-0.0, 2.0));
    }

    #[test]
    fn envelope_matches_pointwise_max() {
        let raw = [(3.0, -1.0), (-2.0, 0.5), (0.5, 0.2), (-0.1, 0.3), (7.0, -6.0)];
        let mut lines = tagged(&raw);
        let pieces = upper_envelope_on_unit(&mut lines);
        for k in 0..=100 {
            let x = k as f64 / 100.0;
            let direct = raw.iter().map(|&(s, c)| s * x + c).fold(f64::NEG_INFINITY, f64::max);
            let piece = pieces.iter().find(|p| p.start <= x && x <= p.end).unwrap();
            assert!((piece.line.at(x) - direct).abs() < 1e-12);
        }
    }
}
