use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("generator {kind}_{index} does not exist in R_{n}")]
    GeneratorOutOfRange { kind: char, index: usize, n: usize },

    #[error("invalid rook diagram {img:?}: {reason}")]
    InvalidDiagram { img: Vec<usize>, reason: &'static str },

    #[error("invalid permutation {images:?}")]
    InvalidPermutation { images: Vec<usize> },

    #[error("vertex subset must be non-empty")]
    EmptySubset,

    #[error("vertex subset {subset:?} is not contained in 1..={n}")]
    InvalidSubset { subset: Vec<usize>, n: usize },

    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<usize> },

    #[error("partition of {size} does not fit into n = {n}")]
    PartitionTooLarge { size: usize, n: usize },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    SizeCap { what: String, value: u128, cap: u128 },

    #[error("the zero element generates the zero ideal")]
    ZeroGenerator,

    #[error("anti-symmetrizer on {k} vertices does not embed into R_{n}")]
    TopTooLarge { k: usize, n: usize },

    #[error("{0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
