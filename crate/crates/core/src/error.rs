use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coherent amplitude |beta|^2 = {mean_photons} is truncation-unsafe at n_cut = {n_cut} (tail bound {tail_bound:e})")]
    TruncationUnsafe {
        mean_photons: f64,
        n_cut: usize,
        tail_bound: f64,
    },

    #[error("Fock index {index} out of range for n_cut = {n_cut}")]
    IndexOutOfRange { index: usize, n_cut: usize },

    #[error("n_cut must be at least {min}, got {got}")]
    InvalidCutoff { got: usize, min: usize },

    #[error("dimension mismatch: expected n_cut = {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("state vector has zero norm")]
    ZeroNorm,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid joint state: {0}")]
    InvalidState(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zero_probability: outcome has vanishing probability ({0})")]
    ZeroProbabilityOutcome(String),
}

pub type Result<T> = std::result::Result<T, Error>;
