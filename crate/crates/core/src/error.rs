use thiserror::Error;

/// Errors surfaced by construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {modulus:#b} of degree {degree} is reducible: divisible by {factor:#b}")]
    ReducibleModulus { modulus: u32, degree: u32, factor: u32 },
    #[error("field extension degree {0} out of range 1..=16")]
    BadExtensionDegree(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("relation `{relation}` cannot be oriented: leading word {leading} is not a two-generator descent or cap power")]
    Unorientable { relation: String, leading: String },
    #[error("confluence failure on critical pair {word}: {left} != {right}")]
    Confluence { word: String, left: String, right: String },
    #[error("rule budget {budget} exceeded while processing {word}")]
    RuleBudget { budget: usize, word: String },
    #[error("basis enumeration needs a degree bound: generator `{0}` is unbounded")]
    UnboundedBasis(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
}

pub type Result<T> = std::result::Result<T, Error>;
