use std::fmt;
use std::ops::Deref;

use crate::error::{FrechetError, Result};

/// A point in R^d with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(FrechetError::InvalidInput("point needs at least one coordinate".into()));
        }
        if let Some(&value) = coords.iter().find(|c| !c.is_finite()) {
            return Err(FrechetError::NonFinite { vertex: 0, value });
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.coords
    }

    /// `(1 - lambda) * a + lambda * b`, written so that lambda = 0 and 1 reproduce the endpoints exactly.
    pub(crate) fn lerp(a: &[f64], b: &[f64], lambda: f64) -> Point {
        let coords = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| if lambda == 1.0 { y } else { x + lambda * (y - x) })
            .collect();
        Point { coords }
    }
}

impl Deref for Point {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.coords
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_same_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(FrechetError::DimensionMismatch { expected, found });
    }
    Ok(())
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}
