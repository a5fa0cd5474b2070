use thiserror::Error;

/// Errors reported by the measurement toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported extension degree m={0} (defaults cover 1..=8; pass a primitive polynomial for larger fields)")]
    UnsupportedDegree(u32),

    #[error("polynomial {poly:#b} does not have degree {m}")]
    WrongPolyDegree { poly: u64, m: u32 },

    #[error("polynomial {0:#b} is not primitive over GF(2)")]
    NotPrimitive(u64),

    #[error("invalid probability vector: {0}")]
    InvalidProbVector(String),

    #[error("invalid ranked list: not a permutation of 0..{0}")]
    InvalidRankedList(usize),

    #[error("variable node product vanished: incoming messages are contradictory")]
    DegenerateProduct,

    #[error("square QAM requires an even extension degree, got m={0}")]
    OddDegreeQam(u32),

    #[error("cannot fit a post-processor from an empty sample set")]
    EmptyFit,

    #[error("alphabet size mismatch: expected {expected}, got {got}")]
    AlphabetMismatch { expected: usize, got: usize },

    #[error("invalid discrete joint: {0}")]
    InvalidJoint(String),

    #[error("joint carries no z map (need a deterministic y → z assignment)")]
    MissingZMap,

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("post-processor parse error at line {line}: {msg}")]
    PostProcessorParse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
