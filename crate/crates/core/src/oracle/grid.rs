//! Uniform 1-D sampling grid for the numerical oracles.

use num_complex::Complex64;

use super::OracleError;

/// Uniform grid of n points on [x_min, x_max], endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self, OracleError> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(OracleError::InvalidGrid { reason: "bounds must be finite" });
        }
        if x_min >= x_max {
            return Err(OracleError::InvalidGrid { reason: "x_min must be below x_max" });
        }
        if n < 16 {
            return Err(OracleError::InvalidGrid { reason: "need at least 16 points" });
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        self.x_min + self.spacing() * i as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.point(i))
    }

    /// Index of the grid point closest to x, or None outside the grid.
    pub fn nearest_index(&self, x: f64) -> Option<usize> {
        if !x.is_finite() || x < self.x_min || x > self.x_max {
            return None;
        }
        let i = ((x - self.x_min) / self.spacing()).round() as usize;
        Some(i.min(self.n - 1))
    }

    /// Sample a complex-valued function on the grid.
    pub fn sample(&self, f: impl Fn(f64) -> Complex64) -> Vec<Complex64> {
        self.points().map(f).collect()
    }
}
