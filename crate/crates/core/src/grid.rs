//! Uniform grids, trapezoid quadrature, and the Cauchy projectors C± on the
//! real line, realised as Fourier multipliers on zero-padded grid data.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Uniformly spaced closed interval `[xmin, xmax]` with `n` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    xmin: f64,
    xmax: f64,
    n: usize,
}

impl Grid {
    pub const MIN_POINTS: usize = 8;

    pub fn new(xmin: f64, xmax: f64, n: usize) -> Result<Self> {
        if !xmin.is_finite() || !xmax.is_finite() {
            return Err(Error::InvalidGrid("endpoints must be finite".into()));
        }
        if xmin >= xmax {
            return Err(Error::InvalidGrid(format!(
                "xmin = {xmin} must be smaller than xmax = {xmax}"
            )));
        }
        if n < Self::MIN_POINTS {
            return Err(Error::InvalidGrid(format!(
                "need at least {} points, got {n}",
                Self::MIN_POINTS
            )));
        }
        Ok(Grid { xmin, xmax, n })
    }

    pub fn xmin(&self) -> f64 {
        self.xmin
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.xmax - self.xmin) / (self.n - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        self.xmin + i as f64 * self.spacing()
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    /// Index of the grid point closest to `x` (ties resolve downward).
    pub fn nearest_index(&self, x: f64) -> usize {
        let raw = ((x - self.xmin) / self.spacing()).round();
        (raw.max(0.0) as usize).min(self.n - 1)
    }

    /// Trapezoid quadrature weights: h at interior points, h/2 at the ends.
    pub fn quad_weight(&self, i: usize) -> f64 {
        let h = self.spacing();
        if i == 0 || i == self.n - 1 {
            0.5 * h
        } else {
            h
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (self.xmin + self.xmax).abs() <= 1e-12 * self.spacing().max(1.0)
    }
}

/// Complex-valued samples attached to a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                len: values.len(),
                n: grid.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFinite(format!("grid function value {bad}")));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values)
    }

    pub fn zero(grid: Grid) -> Self {
        GridFunction {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Trapezoid rule for the integral of `f` over its grid.
pub fn trapezoid(f: &GridFunction) -> Complex64 {
    trapezoid_values(f.grid(), f.values())
}

pub fn trapezoid_values(grid: Grid, values: &[Complex64]) -> Complex64 {
    debug_assert_eq!(values.len(), grid.len());
    let mut sum = Complex64::new(0.0, 0.0);
    for (i, v) in values.iter().enumerate() {
        sum += grid.quad_weight(i) * v;
    }
    sum
}

pub fn trapezoid_real(grid: Grid, values: &[f64]) -> f64 {
    debug_assert_eq!(values.len(), grid.len());
    values
        .iter()
        .enumerate()
        .map(|(i, v)| grid.quad_weight(i) * v)
        .sum()
}

fn fft_pair(len: usize) -> (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>) {
    static PLANS: OnceLock<Mutex<HashMap<usize, (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>)>>> =
        OnceLock::new();
    let plans = PLANS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = plans.lock().unwrap();
    map.entry(len)
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            (planner.plan_fft_forward(len), planner.plan_fft_inverse(len))
        })
        .clone()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Boundary {
    Above,
    Below,
}

/// Cauchy projector as a Fourier multiplier. The data is zero-padded by a
/// factor 2 to suppress wrap-around of the implicit circular convolution.
/// C+ keeps positive frequencies, C- is C+ minus the identity, and the
/// zero-frequency (and Nyquist) modes are split half/half so that
/// C+ - C- = I holds exactly.
fn cauchy_boundary(f: &GridFunction, side: Boundary) -> GridFunction {
    let n = f.grid().len();
    let padded = 2 * n;
    let (fwd, inv) = fft_pair(padded);

    let mut buf = vec![Complex64::new(0.0, 0.0); padded];
    buf[..n].copy_from_slice(f.values());
    fwd.process(&mut buf);

    let half = padded / 2;
    for (k, v) in buf.iter_mut().enumerate() {
        let plus_mask = if k == 0 || k == half {
            0.5
        } else if k < half {
            1.0
        } else {
            0.0
        };
        let m = match side {
            Boundary::Above => plus_mask,
            Boundary::Below => plus_mask - 1.0,
        };
        *v *= m;
    }
    inv.process(&mut buf);

    let scale = 1.0 / padded as f64;
    let values = buf[..n].iter().map(|v| v * scale).collect();
    GridFunction {
        grid: f.grid(),
        values,
    }
}

/// Boundary value from above of the Cauchy integral of `f`.
pub fn cauchy_plus(f: &GridFunction) -> GridFunction {
    cauchy_boundary(f, Boundary::Above)
}

/// Boundary value from below of the Cauchy integral of `f`.
pub fn cauchy_minus(f: &GridFunction) -> GridFunction {
    cauchy_boundary(f, Boundary::Below)
}

/// Cauchy integral (1/2πi) ∫ f(s)/(s − z) ds at a point strictly off the real
/// axis, by trapezoid quadrature over the grid. Points closer to the axis
/// than half a grid spacing are rejected: the quadrature is meaningless
/// there and callers should use the boundary-value projectors instead.
pub fn cauchy_at(f: &GridFunction, z: Complex64) -> Result<Complex64> {
    cauchy_at_values(f.grid(), f.values(), z)
}

pub fn cauchy_at_values(grid: Grid, values: &[Complex64], z: Complex64) -> Result<Complex64> {
    let min_dist = 0.5 * grid.spacing();
    if z.im.abs() < min_dist {
        return Err(Error::NearRealAxis {
            imag: z.im.abs(),
            min: min_dist,
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (i, v) in values.iter().enumerate() {
        let s = grid.point(i);
        sum += grid.quad_weight(i) * v / (Complex64::new(s, 0.0) - z);
    }
    Ok(sum / Complex64::new(0.0, 2.0 * std::f64::consts::PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trapezoid_of_zero_is_zero() {
        let g = Grid::new(-3.0, 7.0, 33).unwrap();
        let f = GridFunction::zero(g);
        assert_eq!(trapezoid(&f), c(0.0, 0.0));
    }

    #[test]
    fn trapezoid_of_constant_is_exact() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        let f = GridFunction::from_fn(g, |_| c(1.0, 0.0)).unwrap();
        let v = trapezoid(&f);
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn trapezoid_exact_for_affine() {
        let g = Grid::new(-2.0, 5.0, 29).unwrap();
        let f = GridFunction::from_fn(g, |x| c(3.0 * x + 1.0, -0.5 * x)).unwrap();
        // ∫_{-2}^{5} (3x+1) dx = 3*21/2 + 7 = 38.5; ∫ -x/2 = -21/4.
        let v = trapezoid(&f);
        assert_abs_diff_eq!(v.re, 38.5, epsilon = 1e-12);
        assert_abs_diff_eq!(v.im, -5.25, epsilon = 1e-12);
    }

    #[test]
    fn trapezoid_gaussian_reaches_sqrt_pi() {
        let g = Grid::new(-8.0, 8.0, 401).unwrap();
        let f = GridFunction::from_fn(g, |x| c((-x * x).exp(), 0.0)).unwrap();
        let v = trapezoid(&f);
        assert_abs_diff_eq!(v.re, std::f64::consts::PI.sqrt(), epsilon = 1e-10);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn projector_difference_is_identity() {
        let g = Grid::new(-20.0, 20.0, 256).unwrap();
        let f = GridFunction::from_fn(g, |x| c((-0.3 * x * x).exp() * (1.7 * x).cos(), 0.2 / (1.0 + x * x))).unwrap();
        let p = cauchy_plus(&f);
        let m = cauchy_minus(&f);
        for i in 0..g.len() {
            let diff = p.values()[i] - m.values()[i] - f.values()[i];
            assert!(diff.norm() < 1e-13, "C+ - C- != I at index {i}: {diff}");
        }
    }

    #[test]
    fn positive_frequency_content_is_kept_whole() {
        let g = Grid::new(-40.0, 40.0, 512).unwrap();
        // e^{i w x} * Gaussian with w large enough that the padded-grid mean
        // and all negative-frequency content are below machine noise.
        let f = GridFunction::from_fn(g, |x| {
            let env = (-x * x).exp();
            c(0.0, 12.0 * x).exp() * env
        })
        .unwrap();
        let p = cauchy_plus(&f);
        let m = cauchy_minus(&f);
        for i in 0..g.len() {
            assert!((p.values()[i] - f.values()[i]).norm() < 1e-12);
            assert!(m.values()[i].norm() < 1e-12);
        }
    }

    #[test]
    fn projectors_are_complementary_idempotents() {
        let g = Grid::new(-40.0, 40.0, 600).unwrap();
        let f = GridFunction::from_fn(g, |x| {
            let env = (-0.5 * x * x).exp();
            c(0.0, 12.0 * x).exp() * env + c(0.0, -9.0 * x).exp() * env * 0.7
        })
        .unwrap();
        let pp = cauchy_plus(&cauchy_plus(&f));
        let p = cauchy_plus(&f);
        let pm = cauchy_plus(&cauchy_minus(&f));
        for i in 0..g.len() {
            assert!((pp.values()[i] - p.values()[i]).norm() < 1e-12);
            assert!(pm.values()[i].norm() < 1e-12);
        }
    }

    #[test]
    fn lower_half_plane_pole_projects_to_minus() {
        // f(λ) = 1/(λ - i) is analytic in the lower half-plane with decay,
        // so C+ f = 0 and C- f = -f; residue calculus gives the closed form.
        let g = Grid::new(-40.0, 40.0, 2048).unwrap();
        let f = GridFunction::from_fn(g, |x| (c(x, 0.0) - c(0.0, 1.0)).inv()).unwrap();
        let p = cauchy_plus(&f);
        let m = cauchy_minus(&f);
        let mid = g.len() / 2;
        for i in (mid - 400)..(mid + 400) {
            assert!(p.values()[i].norm() < 1e-6, "C+ at {i}: {}", p.values()[i]);
            assert!(
                (m.values()[i] + f.values()[i]).norm() < 1e-6,
                "C- at {i}: {}",
                m.values()[i]
            );
        }
    }

    #[test]
    fn cauchy_at_zero_function() {
        let g = Grid::new(-10.0, 10.0, 128).unwrap();
        let f = GridFunction::zero(g);
        let v = cauchy_at(&f, c(0.3, 1.1)).unwrap();
        assert_eq!(v, c(0.0, 0.0));
    }

    #[test]
    fn cauchy_at_matches_residue_closed_form() {
        // f(s) = 1/(s - 2i): for z in the lower half-plane the only pole
        // inside the (clockwise) closure is s = z, giving -f(z) = -1/(z-2i).
        let g = Grid::new(-60.0, 60.0, 4001).unwrap();
        let f = GridFunction::from_fn(g, |s| (c(s, -2.0)).inv()).unwrap();
        let z = c(0.0, -1.0);
        let v = cauchy_at(&f, z).unwrap();
        let expect = -(z - c(0.0, 2.0)).inv();
        assert!((v - expect).norm() < 1e-4, "{v} vs {expect}");

        // Oversampled quadrature oracle on a 10x finer grid.
        let g10 = Grid::new(-60.0, 60.0, 40001).unwrap();
        let f10 = GridFunction::from_fn(g10, |s| (c(s, -2.0)).inv()).unwrap();
        let v10 = cauchy_at(&f10, z).unwrap();
        assert!((v - v10).norm() < 1e-4, "{v} vs oracle {v10}");
    }

    #[test]
    fn cauchy_at_schwarz_reflection_for_real_data() {
        let g = Grid::new(-12.0, 12.0, 501).unwrap();
        let f = GridFunction::from_fn(g, |x| c((-x * x).exp(), 0.0)).unwrap();
        let up = cauchy_at(&f, c(0.4, 1.0)).unwrap();
        let down = cauchy_at(&f, c(0.4, -1.0)).unwrap();
        assert!((up - down.conj()).norm() < 1e-14);
    }

    #[test]
    fn cauchy_at_rejects_near_axis_points() {
        let g = Grid::new(-10.0, 10.0, 101).unwrap();
        let f = GridFunction::zero(g);
        let err = cauchy_at(&f, c(0.0, 0.05)).unwrap_err();
        assert!(matches!(err, Error::NearRealAxis { .. }));
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(Grid::new(1.0, 1.0, 16).is_err());
        assert!(Grid::new(0.0, 1.0, 4).is_err());
        assert!(Grid::new(f64::NAN, 1.0, 16).is_err());
    }
}
