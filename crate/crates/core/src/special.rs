//! Complex log-Gamma, the Gauss hypergeometric function ₂F₁ on (0, 1), and
//! the principally branched root R(λ) used by the solvable potential family.

use num_complex::Complex64;

use crate::error::{Error, Result};

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);

/// Lanczos coefficients, g = 7, 9 terms (GNU Scientific Library set);
/// relative accuracy a little better than 1e-14 for Re z >= 0.5.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn is_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    z.im.abs() < tol && z.re <= 0.5 && (z.re - z.re.round()).abs() < tol
}

fn lanczos_log_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re >= 0.5);
    let x = z - C1;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        series += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt().ln() + (x + 0.5) * t.ln() - t + series.ln()
}

/// Principal branch of log Γ(z), continuous off the cut (−∞, 0] and real on
/// the positive real axis. Values with Re z < 1/2 are reached through the
/// recurrence log Γ(z) = log Γ(z+m) − Σ log(z+k); the lower half-plane by
/// Schwarz reflection.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFinite(format!("log_gamma argument {z}")));
    }
    if is_nonpositive_integer(z, 1e-12) {
        return Err(Error::GammaPole(z));
    }
    if z.im < 0.0 {
        return Ok(log_gamma(z.conj())?.conj());
    }
    if z.re >= 0.5 {
        return Ok(lanczos_log_gamma(z));
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut log_prod = C0;
    for k in 0..shift {
        log_prod += (z + k as f64).ln();
    }
    Ok(lanczos_log_gamma(z + shift as f64) - log_prod)
}

/// Γ(z) through the log form.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// exp(Σ log Γ(num) − Σ log Γ(den)); the only way Gamma values are combined
/// downstream, so overflow never materialises.
pub fn gamma_ratio(numerators: &[Complex64], denominators: &[Complex64]) -> Result<Complex64> {
    let mut acc = C0;
    for &z in numerators {
        acc += log_gamma(z)?;
    }
    for &z in denominators {
        acc -= log_gamma(z)?;
    }
    Ok(acc.exp())
}

/// Parameters (a, b, c) of the hypergeometric equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl HypergeometricParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        if is_nonpositive_integer(c, 1e-12) {
            return Err(Error::GammaPole(c));
        }
        Ok(HypergeometricParams { a, b, c })
    }
}

const SERIES_TOL: f64 = 1e-13;
const SERIES_MAX_TERMS: usize = 200;
const CONNECTION_DEGENERACY_TOL: f64 = 1e-8;

/// Plain power series Σ (a)_n (b)_n / (c)_n s^n / n!, for |s| <= 1/2.
fn hyp2f1_series(a: Complex64, b: Complex64, c: Complex64, s: f64) -> Result<Complex64> {
    let mut term = C1;
    let mut sum = C1;
    for n in 0..SERIES_MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * s;
        sum += term;
        if term.norm() <= SERIES_TOL * sum.norm().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::SeriesNonConvergent {
        tol: SERIES_TOL,
        max_terms: SERIES_MAX_TERMS,
    })
}

/// F(a,b,c;s) for real s in (0,1). The power series is used up to s = 1/2;
/// beyond that the connection formula in terms of 1−s keeps the series
/// ratio at or below 1/2:
///
///   F(a,b,c;s) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) · F(a,b,a+b−c+1;1−s)
///              + Γ(c)Γ(a+b−c)/(Γ(a)Γ(b)) · (1−s)^{c−a−b} F(c−a,c−b,c−a−b+1;1−s).
///
/// The connection coefficients blow up when c−a−b approaches an integer, so
/// that neighbourhood is rejected.
pub fn hyp2f1(p: HypergeometricParams, s: f64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&s) && s != 0.0 {
        return Err(Error::ArgumentOutOfRange(s));
    }
    let HypergeometricParams { a, b, c } = p;
    if s <= 0.5 {
        return hyp2f1_series(a, b, c, s);
    }
    let cab = c - a - b;
    let nearest = cab.re.round();
    if (cab - nearest).norm() < CONNECTION_DEGENERACY_TOL {
        return Err(Error::DegenerateParameters {
            tol: CONNECTION_DEGENERACY_TOL,
        });
    }
    let u = 1.0 - s;
    let coeff3 = gamma_ratio(&[c, cab], &[c - a, c - b])?;
    let coeff4 = gamma_ratio(&[c, -cab], &[a, b])?;
    let w3 = hyp2f1_series(a, b, a + b - c + C1, u)?;
    let w4 = hyp2f1_series(c - a, c - b, cab + C1, u)?;
    let pow = (cab * u.ln()).exp();
    Ok(coeff3 * w3 + coeff4 * pow * w4)
}

/// d/ds F(a,b,c;s) = (ab/c) F(a+1,b+1,c+1;s).
pub fn hyp2f1_derivative(p: HypergeometricParams, s: f64) -> Result<Complex64> {
    let shifted = HypergeometricParams::new(p.a + C1, p.b + C1, p.c + C1)?;
    Ok(p.a * p.b / p.c * hyp2f1(shifted, s)?)
}

/// Principal branch of √(λ − ε (μ/ν)²). Maps the open upper half-plane into
/// the open first quadrant.
pub fn branch_root(lambda: Complex64, epsilon: f64, mu: f64, nu: f64) -> Complex64 {
    debug_assert!(nu > 0.0);
    let shift = epsilon * (mu / nu).powi(2);
    (lambda - shift).sqrt()
}

/// √(−ε) with the convention √1 = 1, √(−1) = i.
pub fn sqrt_neg_epsilon(epsilon: f64) -> Complex64 {
    if epsilon < 0.0 {
        C1
    } else {
        Complex64::new(0.0, 1.0)
    }
}
