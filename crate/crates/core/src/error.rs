use std::fmt;

use thiserror::Error;

use crate::axioms::{Defect, ValidationReport};
use crate::model::Identifier;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// 1-based position of a token in `.ht` source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Unresolved,
    DuplicateId,
    Arity,
    DuplicateTag,
    Cycle,
}

impl ParseErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "E_SYNTAX",
            ParseErrorKind::Unresolved => "E_UNRESOLVED",
            ParseErrorKind::DuplicateId => "E_DUPLICATE_ID",
            ParseErrorKind::Arity => "E_ARITY",
            ParseErrorKind::DuplicateTag => "E_DUPLICATE_TAG",
            ParseErrorKind::Cycle => "E_CYCLE",
        }
    }
}

impl From<Defect> for ParseErrorKind {
    fn from(defect: Defect) -> Self {
        match defect {
            Defect::Duplicate => ParseErrorKind::DuplicateId,
            Defect::Unresolved | Defect::NotAVertex => ParseErrorKind::Unresolved,
            Defect::Arity => ParseErrorKind::Arity,
            Defect::DuplicateTag => ParseErrorKind::DuplicateTag,
            Defect::Cycle => ParseErrorKind::Cycle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {span}: {message}", kind.code())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid identifier {0:?}")]
    InvalidIdentifier(String),

    #[error("invalid relation symbol {relation}: {reason}")]
    InvalidRelation {
        relation: Identifier,
        reason: String,
    },

    #[error("hypersimplex {simplex} carries tag {tag} more than once")]
    DuplicateTag {
        simplex: Identifier,
        tag: Identifier,
    },

    #[error("{id} does not resolve")]
    Unresolved { id: Identifier },

    /// A hypernetwork failed construction; the report lists every violation.
    #[error("invalid hypernetwork: {}", .0.violations.first().map(|v| v.to_string()).unwrap_or_default())]
    Invalid(ValidationReport),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("identity conflict on {id}: {reason}")]
    IdentityConflict { id: Identifier, reason: String },

    #[error("views are over different backcloths ({left} vs {right})")]
    BaseMismatch { left: String, right: String },

    #[error("fixture {0} is missing")]
    FixtureMissing(String),
}

impl Error {
    /// Stable error code, as printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidIdentifier(_) | Error::InvalidRelation { .. } => "E_SYNTAX",
            Error::DuplicateTag { .. } => "E_DUPLICATE_TAG",
            Error::Unresolved { .. } => "E_UNRESOLVED",
            Error::Invalid(report) => report
                .violations
                .first()
                .map(|v| ParseErrorKind::from(v.defect).code())
                .unwrap_or("E_INVALID"),
            Error::Parse(e) => e.kind.code(),
            Error::IdentityConflict { .. } => "E_IDENTITY_CONFLICT",
            Error::BaseMismatch { .. } => "E_BASE_MISMATCH",
            Error::FixtureMissing(_) => "E_FIXTURE_MISSING",
        }
    }
}
