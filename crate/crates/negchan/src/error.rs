//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    Dimension { expected: usize, got: usize },

    #[error("dimension {dim} is not divisible by bath dimension {dim_b}")]
    BathDimension { dim: usize, dim_b: usize },

    #[error("matrix is not Hermitian (max |a - a'| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max |u'u - 1| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("not a density matrix: {0}")]
    NotDensity(String),

    #[error("state vector norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },

    #[error("state vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("unknown gate name `{0}`")]
    UnknownGate(String),

    #[error("projection {index} has zero probability on the given state")]
    ZeroProbability { index: usize },
    #[error("composite needs at least 2 qubits, got m = {0}")]
    ExtensionTooShort(usize),

    #[error("matrix is not diagonal (max off-diagonal |a_ij| = {deviation:.3e})")]
    NotDiagonal { deviation: f64 },

    #[error("spectrum has {got} levels, expected {expected}")]
    SpectrumLength { expected: usize, got: usize },

    #[error("spectrum length {0} is not a power of two >= 4")]
    BadSpectrumShape(usize),

    #[error("index list {0:?} is not a permutation")]
    InvalidPermutation(Vec<usize>),

    #[error("linear system is singular or ill-conditioned")]
    SingularSystem,

    #[error("invalid projector pair: {0}")]
    InvalidProjectors(String),

    #[error("assignment map is inconsistent: Tr_B(image {index}) differs from tau_{index} by {deviation:.3e}")]
    InconsistentAssignment { index: usize, deviation: f64 },
}
