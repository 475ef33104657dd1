use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, got {actual})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),
    #[error("not a frame: smallest frame-operator eigenvalue {lambda_min:e} <= threshold {threshold:e}")]
    NotAFrame { lambda_min: f64, threshold: f64 },
    #[error("frame is not tight with bound 1 (max |S - I| = {deviation:e})")]
    NotTightUnit { deviation: f64 },
    #[error("Naimark dilation needs more vectors than dimensions (K = {frame_size}, N = {dimension})")]
    NotRedundant { frame_size: usize, dimension: usize },
    #[error("matrix is not unitary (max |U^H U - I| = {deviation:e})")]
    NonUnitary { deviation: f64 },
    #[error("matrix is not Hermitian (relative asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("prototype vector is zero")]
    ZeroPrototype,
    #[error("band of {bins} bins does not fit into {available} samples")]
    Aliasing { bins: usize, available: usize },
    #[error("bin {bin} is protected (passband or alias image of the passband)")]
    ProtectedBin { bin: i64 },
    #[error("bin {bin} lies outside the centered range [-{half}, {half})")]
    BinOutOfRange { bin: i64, half: i64 },
    #[error("filter does not provide perfect reconstruction (max deviation {deviation:e})")]
    NotPerfectReconstruction { deviation: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Empty(_) => "empty_input",
            Error::NonFinite(_) => "non_finite",
            Error::NotAFrame { .. } => "not_a_frame",
            Error::NotTightUnit { .. } => "not_tight_unit",
            Error::NotRedundant { .. } => "not_redundant",
            Error::NonUnitary { .. } => "non_unitary",
            Error::NotHermitian { .. } => "not_hermitian",
            Error::NoConvergence { .. } => "no_convergence",
            Error::InvalidParams(_) => "invalid_params",
            Error::ZeroPrototype => "zero_prototype",
            Error::Aliasing { .. } => "aliasing",
            Error::ProtectedBin { .. } => "protected_bin",
            Error::BinOutOfRange { .. } => "bin_out_of_range",
            Error::NotPerfectReconstruction { .. } => "not_perfect_reconstruction",
            Error::Parse(_) => "parse_error",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
