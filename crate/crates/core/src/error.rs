use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("system must contain at least {min} qubit(s), got {found}")]
    TooFewQubits { min: usize, found: usize },
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },
    #[error("duplicate qubit index {0}")]
    DuplicateQubit(usize),
    #[error("gate pair must name two distinct qubits, got ({0}, {0})")]
    RepeatedPairQubit(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("product of anticommuting Pauli strings is not Hermitian")]
    AnticommutingProduct,
    #[error("dense oracle limited to {max} qubits, got {found}")]
    OracleTooLarge { max: usize, found: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("orbit term {term:?} violates constraints for n={n}, m={m}, h={h}")]
    InvalidOrbitTerm {
        term: (u32, u32, u32, u32),
        n: u32,
        m: u32,
        h: u32,
    },
    #[error("distance vanished at t={t}; decay rate undefined")]
    DegenerateDistance { t: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("checkpoint I/O: {0}")]
    Checkpoint(#[from] std::io::Error),
    #[error("checkpoint format: {0}")]
    CheckpointFormat(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
