use thiserror::Error;

/// Errors raised by validated constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian: max |M - M\u{2020}| = {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("matrix entry magnitude {magnitude:e} exceeds the supported range")]
    EntryTooLarge { magnitude: f64 },

    #[error("matrix is not unitary: max |U\u{2020}U - I| = {defect:e}")]
    NotUnitary { defect: f64 },

    #[error("matrix is not normal: max |MM\u{2020} - M\u{2020}M| = {defect:e}")]
    NotNormal { defect: f64 },

    #[error("state vector is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },

    #[error("null vector: norm below threshold, cannot normalize")]
    NullVector,

    #[error("dimension {dim} below minimum {min}")]
    InvalidDimension { dim: usize, min: usize },

    #[error("j = {j} is not a positive half-integer")]
    NotHalfInteger { j: f64 },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("supplied perpendicular state is not orthogonal: |\u{27e8}\u{3c8}\u{22a5}|\u{3c8}\u{27e9}| = {overlap:e}")]
    PerpNotOrthogonal { overlap: f64 },

    #[error("state already saturates the sum relation; no perpendicular state needed")]
    AlreadySaturated,

    #[error("state is annihilated by the requested operator")]
    AnnihilatedState,

    #[error("degenerate common eigenstate: both variances vanish")]
    DegenerateCommonEigenstate,

    #[error("denominator below threshold")]
    ZeroDenominator,

    #[error("projected vector norm stayed below threshold after {0} resamples; RNG looks broken")]
    RandomPerpExhausted(u32),

    #[error(
        "grid too narrow for Gaussian decay: need x_max - a \u{2265} {required}, have {available}"
    )]
    GridTooNarrow { required: f64, available: f64 },

    #[error("grid must be symmetric about 0")]
    AsymmetricGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
