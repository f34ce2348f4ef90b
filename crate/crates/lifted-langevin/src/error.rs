use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("point is not on the boundary (residual {residual:.3e})")]
    NotOnBoundary { residual: f64 },

    #[error("ambiguous normal: {active} boundary constraints active at the point")]
    CornerPoint { active: usize },

    #[error("point is not strictly interior")]
    NotInterior,

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("normal is not a unit vector (|n| = {norm})")]
    NonUnitNormal { norm: f64 },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("unsupported potential for the spectral path: {0}")]
    UnsupportedPotential(String),

    #[error("input must have zero mean (mean component {0:.3e})")]
    NonzeroMean(f64),

    #[error("mode {mode} with alpha = {alpha} is outside the {band} band for T = {horizon}")]
    WrongBand {
        mode: usize,
        alpha: f64,
        band: &'static str,
        horizon: f64,
    },

    #[error("the constant-in-space, constant-in-time component must vanish")]
    DivisionGuard,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("boundary folding did not terminate in {0} iterations (step too large for the domain)")]
    FoldDiverged(usize),

    #[error("more than {0} reflection events in a single flight")]
    EventOverflow(u64),

    #[error("insufficient signal: {0}")]
    InsufficientSignal(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
