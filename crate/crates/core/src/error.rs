use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Errors from the structure-table text format, with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown basis letter {letter:?}")]
    UnknownLetter { line: usize, col: usize, letter: char },
    #[error("line {line}, column {col}: letter {letter:?} has index {index} > dimension {dim}")]
    LetterOutOfRange { line: usize, col: usize, letter: char, index: usize, dim: usize },
    #[error("unresolved parameter symbol {0:?}")]
    UnresolvedParameter(char),
    #[error("line {line}: right-hand side is not linear in the basis letters")]
    NotLinear { line: usize },
    #[error("line {line}: bracket of a letter with itself")]
    SelfBracket { line: usize },
    #[error("invalid JSON structure table: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants do not satisfy the Jacobi identity")]
    NotLie,
    #[error("matrix is not a derivation of the bracket")]
    NotDerivation,
    #[error("change-of-basis matrix is singular")]
    SingularBasis,
    #[error("algebras live over different fields")]
    FieldMismatch,
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("{0} is not a {1}-step nilpotent Lie bracket")]
    NotInVariety(String, usize),
    #[error("structure constants do not satisfy the Jacobi identity")]
    NotLie,
    #[error("parameter {0:?} does not occur in the family")]
    UnknownParameter(char),
    #[error("point violates the chosen constraint")]
    ConstraintViolated,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown algebra {0:?}")]
    UnknownName(String),
    #[error("missing value for parameter {0:?}")]
    MissingParameter(char),
    #[error("{0:?} needs the external data pack (set NILRIGID_DATA_PACK)")]
    ExternalDataRequired(String),
    #[error("data pack: {0}")]
    Pack(String),
    #[error("{0} vanishes at the requested parameters")]
    OutsideValidity(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Umbrella error for callers that mix subsystems (the CLI, reproduction suites).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}
