use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("{0} is infinite")]
    Infinite(String),
    #[error("enumeration of {what} exceeded the cap of {cap}")]
    CapExceeded { what: String, cap: u64 },
    #[error("axiom {axiom} fails: {detail}")]
    Axiom { axiom: String, detail: String },
    #[error("not central: {0}")]
    NotCentral(String),
    #[error("h0 could not be decided: coset enumeration exceeded {cap} cosets")]
    H0Undecidable { cap: u64 },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: `{name}` is not defined")]
    Dangling { name: String, line: usize, col: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("no solution: {0}")]
    NoSolution(String),
}
