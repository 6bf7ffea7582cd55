use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field error: modulus not prime")]
    NotPrime(u64),
    #[error("field error: modulus {0} too large")]
    ModulusTooLarge(u64),
    #[error("field error: operands live over different fields")]
    FieldMismatch,
    #[error("entry {value} out of range for GF({modulus})")]
    EntryOutOfRange { value: u64, modulus: u32 },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("dimension error: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("parent mismatch: submodules belong to different modules")]
    ParentMismatch,
    #[error("invalid submodule: subspace is not stable under generator {generator}")]
    InvalidSubmodule { generator: usize },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("resource error: {0}")]
    Resource(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{}", .0.first().map(ToString::to_string).unwrap_or_else(|| "invalid series".into()))]
    InvalidSeries(Vec<SeriesViolation>),
    #[error("factor not simple at index {index}")]
    NotCompositionSeries { index: usize },
    #[error("unsupported input: {0}")]
    Unsupported(&'static str),
    #[error("incomparable labels: {0:?} vs {1:?}")]
    IncomparableLabel(String, String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

/// Clause of the normal-series definition that a series violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesClause {
    Empty,
    ParentMismatch,
    FirstTermNotZero,
    LastTermNotFull,
    NotStrict,
    NotSubmodule,
    LabelCount,
    FirstLabel,
    LabelOrder,
    LabelGap,
    LimitUnion,
}

impl SeriesClause {
    pub fn name(self) -> &'static str {
        match self {
            SeriesClause::Empty => "empty series",
            SeriesClause::ParentMismatch => "parent mismatch",
            SeriesClause::FirstTermNotZero => "first term not zero",
            SeriesClause::LastTermNotFull => "last term not full module",
            SeriesClause::NotStrict => "inclusion not strict",
            SeriesClause::NotSubmodule => "term not a submodule",
            SeriesClause::LabelCount => "label count mismatch",
            SeriesClause::FirstLabel => "first label not 1",
            SeriesClause::LabelOrder => "labels not increasing",
            SeriesClause::LabelGap => "label gap at successor",
            SeriesClause::LimitUnion => "limit term not union of predecessors",
        }
    }
}

/// One violated clause, with the 1-based index of the offending term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesViolation {
    pub clause: SeriesClause,
    pub index: usize,
}

impl fmt::Display for SeriesViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at index {}", self.clause.name(), self.index)
    }
}
