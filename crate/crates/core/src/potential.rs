//! Sampled potentials on a uniform x-grid, tagged with the equation sign ε.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{trapezoid_real, Grid};

/// Sign ε ∈ {+1, −1} selecting the focusing branch of the equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> f64 {
        match self {
            Epsilon::Plus => 1.0,
            Epsilon::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }

    pub fn from_int(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            _ => Err(Error::Format(format!("epsilon must be +1 or -1, got {v}"))),
        }
    }

    pub fn to_int(self) -> i32 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

/// Default bound on |q| at the grid ends, asserted at construction.
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;

/// Complex potential samples q on a uniform x-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSamples {
    grid: Grid,
    values: Vec<Complex64>,
    epsilon: Epsilon,
}

impl PotentialSamples {
    /// Construct with the default tail tolerance.
    pub fn new(grid: Grid, values: Vec<Complex64>, epsilon: Epsilon) -> Result<Self> {
        Self::with_tail_tolerance(grid, values, epsilon, DEFAULT_TAIL_TOL)
    }

    /// Construct with an explicit bound on the end-sample magnitudes.
    /// Reconstructed potentials carry numerical tails and use a loose bound.
    pub fn with_tail_tolerance(
        grid: Grid,
        values: Vec<Complex64>,
        epsilon: Epsilon,
        tail_tol: f64,
    ) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                len: values.len(),
                n: grid.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFinite(format!("potential sample {bad}")));
        }
        let tail = values[0].norm().max(values[values.len() - 1].norm());
        if tail > tail_tol {
            return Err(Error::NonDecayingTail {
                tail,
                tol: tail_tol,
            });
        }
        Ok(PotentialSamples {
            grid,
            values,
            epsilon,
        })
    }

    pub fn from_fn(
        grid: Grid,
        epsilon: Epsilon,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values, epsilon)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn tail_magnitude(&self) -> f64 {
        self.values[0]
            .norm()
            .max(self.values[self.values.len() - 1].norm())
    }

    /// Trapezoid value of ∫ |q|² dx.
    pub fn l2_norm_squared(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|v| v.norm_sqr()).collect();
        trapezoid_real(self.grid, &sq)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Pointwise sup distance to another potential on the same grid.
    pub fn sup_distance(&self, other: &PotentialSamples) -> f64 {
        assert_eq!(self.grid, other.grid, "grids must match");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_fat_tails() {
        let g = Grid::new(-5.0, 5.0, 64).unwrap();
        let values = vec![Complex64::new(0.1, 0.0); 64];
        let err = PotentialSamples::new(g, values, Epsilon::Minus).unwrap_err();
        assert!(matches!(err, Error::NonDecayingTail { .. }));
    }

    #[test]
    fn accepts_decaying_gaussian() {
        let g = Grid::new(-8.0, 8.0, 129).unwrap();
        let q = PotentialSamples::from_fn(g, Epsilon::Minus, |x| {
            Complex64::new(0.5 * (-x * x).exp(), 0.0)
        })
        .unwrap();
        assert!(q.tail_magnitude() < 1e-10);
        // ∫ 0.25 e^{-2x²} = 0.25 √(π/2)
        let expect = 0.25 * (std::f64::consts::PI / 2.0).sqrt();
        assert!((q.l2_norm_squared() - expect).abs() < 1e-12);
    }
}
