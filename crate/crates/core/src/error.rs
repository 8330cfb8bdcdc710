use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("too many atoms: {0} (at most {max})", max = crate::event::MAX_ATOMS)]
    TooManyAtoms(usize),
    #[error("the constraints leave no possible world")]
    EmptyUniverse,
    #[error("conditioning event of `{0}` is impossible")]
    EmptyConditioning(String),
    #[error("regions of `{0}` do not partition the universe")]
    NotAPartition(String),
    #[error("operator result has an impossible conditioning event")]
    DegenerateConjunction,
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("family has {size} members, above the cap of {cap}")]
    FamilyTooLarge { size: usize, cap: usize },
    #[error("assessment is not coherent")]
    Incoherent,
    #[error("family is not p-consistent")]
    NotPConsistent,
    #[error("distribution gives zero mass to the conditioning event")]
    ZeroMass,
    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),
    #[error("projection could not be certified")]
    Projection,
    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
