use thiserror::Error;

/// Errors produced by the scattering pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid function length {len} does not match grid size {n}")]
    LengthMismatch { len: usize, n: usize },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("evaluation point too close to the real axis (|Im z| = {imag:.3e} < {min:.3e})")]
    NearRealAxis { imag: f64, min: f64 },

    #[error("log-gamma pole at non-positive integer z = {0}")]
    GammaPole(num_complex::Complex64),

    #[error("degenerate hypergeometric parameters: c - a - b within {tol:.1e} of an integer")]
    DegenerateParameters { tol: f64 },

    #[error("series failed to converge to {tol:.1e} within {max_terms} terms")]
    SeriesNonConvergent { tol: f64, max_terms: usize },

    #[error("hypergeometric argument s = {0} outside (0, 1)")]
    ArgumentOutOfRange(f64),

    #[error("potential tail |q| = {tail:.3e} at grid end exceeds tolerance {tol:.3e}")]
    NonDecayingTail { tail: f64, tol: f64 },

    #[error("marching step underflow: no convergence to {tol:.1e} after {levels} refinements")]
    StepUnderflow { tol: f64, levels: usize },

    #[error("spectral singularity: |alpha({lambda})| = {magnitude:.3e} below threshold")]
    SpectralSingularity { lambda: f64, magnitude: f64 },

    #[error("reflection coefficient leaves the admissible set at lambda = {lambda}: 1 - eps*lambda*|rho|^2 = {value:.3e}")]
    OutsideAdmissibleSet { lambda: f64, value: f64 },

    #[error("winding boundary passes within {magnitude:.3e} of a zero")]
    BoundaryNearZero { magnitude: f64 },

    #[error("non-integer winding number {0} after maximal refinement")]
    NonIntegerWinding(f64),

    #[error("zero of multiplicity >= 2 detected in a cell of size {0:.3e}; only simple zeros are supported")]
    MultipleZero(f64),

    #[error("Newton iteration failed to converge after {0} steps")]
    NewtonDivergence(usize),

    #[error("norming-constant component ratios disagree by {rel:.3e} (not an eigenvalue?)")]
    InconsistentNorming { rel: f64 },

    #[error("derivative of alpha too small at eigenvalue: |alpha'| = {0:.3e}")]
    VanishingDerivative(f64),

    #[error("circle of radius {radius} around {center} violates analyticity constraints")]
    BadCircle {
        center: num_complex::Complex64,
        radius: f64,
    },

    #[error("linear system solve failed or residual {residual:.3e} exceeds {tol:.1e}")]
    SingularSystem { residual: f64, tol: f64 },

    #[error("discrete eigenvalues not distinct: |l1 - l2| = {0:.3e}")]
    CoincidentEigenvalues(f64),

    #[error("eigenvalue {0} not in the open upper half-plane")]
    EigenvalueNotUpper(num_complex::Complex64),

    #[error("norming constant must be nonzero")]
    ZeroNormingConstant,

    #[error("operation requires epsilon = -1; use the reflection trick for epsilon = +1")]
    UnsupportedEpsilon,

    #[error("reflection requires a symmetric grid (xmin = -xmax), got [{xmin}, {xmax}]")]
    AsymmetricGrid { xmin: f64, xmax: f64 },

    #[error("split-step blow-up: sup|q| jumped from {before:.3e} to {after:.3e} in one step")]
    Blowup { before: f64, after: f64 },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code classification used by the command-line driver:
    /// 2 for I/O and file-format problems, 4 for failures of the spectral
    /// admissibility assumptions (the potential is outside the solvable
    /// class), 3 for all other numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Format(_) => 2,
            Error::SpectralSingularity { .. }
            | Error::OutsideAdmissibleSet { .. }
            | Error::MultipleZero(_)
            | Error::BoundaryNearZero { .. } => 4,
            _ => 3,
        }
    }
}
