use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidCartanType { family: String, rank: usize },

    #[error("matrix is not a Cartan matrix of finite type: {0}")]
    NotFiniteType(String),

    #[error("orbit partition is not compatible with a diagram automorphism: {0}")]
    InvalidFolding(String),

    #[error("series inversion does not converge: entry has a nonnegative exponent")]
    NonConvergent,

    #[error("truncation too shallow: need exponent {needed}, exact only down to {floor}")]
    ShallowTruncation { needed: i64, floor: i64 },

    #[error("operation requires type {expected}, got {got}")]
    WrongType { expected: String, got: String },

    #[error("operation requires a simply-laced Cartan datum")]
    NotSimplyLaced,

    #[error("no fundamental character for node {node} at spectral shift {shift}")]
    MissingFundamental { node: usize, shift: i64 },

    #[error("no simple character available for {0}")]
    MissingSimple(String),

    #[error("element is not dominant: {0}")]
    NotDominant(String),

    #[error("support element {0} is not of the form gamma - Omega(eta) with integral eta")]
    NoIntegralSolution(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),

    #[error("element is not in the span of the simple basis: residual {0}")]
    NotInSpan(String),

    #[error("input is not Weyl-invariant: {0}")]
    NonInvariant(String),

    #[error("d_(lambda,alpha) = {0} is odd")]
    OddDimension(i64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { offset, msg: msg.into() }
    }
}
