use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("too many vertices: {0} (at most {max})", max = crate::face::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("join requires disjoint vertex labels; `{0}` occurs in both")]
    OverlappingLabels(String),
    #[error("complexes live on different ground sets")]
    GroundSetMismatch,
    #[error("relative complex: removed part is not a subcomplex ({0} missing from total)")]
    NotSubcomplex(String),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("complete cycle in degree {k} needs {} vertices, got {got}", k + 2)]
    WrongCardinality { k: i32, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field `{0}` (expected q, f2, or fp:P)")]
    InvalidField(String),
    #[error("invalid degree {0}")]
    InvalidDegree(i32),
    #[error("chain term {face} has dimension {got}, expected {expected}")]
    MixedDegree { face: String, got: i32, expected: i32 },
    #[error("complex has no missing faces (its Stanley-Reisner ideal is zero)")]
    NoMissingFaces,
    #[error("subset scan over {0} vertices is too large")]
    TooLarge(usize),
    #[error("cut precondition violated: {0}")]
    CutPrecondition(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("corpus: {0}")]
    Corpus(String),
    #[error("corpus validation failed for {name}: {msg}")]
    CorpusValidation { name: String, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
