//! Error type shared by the whole crate.
//!
//! Every variant carries a stable machine-readable code (see [`Error::code`])
//! so the CLI can report failures deterministically in JSON mode, and an exit
//! class separating *verification* failures (the input parsed fine but the
//! mathematics rejected it) from plain input errors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown generator '{0}'")]
    UnknownGenerator(char),

    #[error("generator '{0}' has no image")]
    MissingImage(char),

    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),

    #[error("presentation and representation use different generators")]
    GeneratorMismatch,

    #[error("no invariant hermitian form (solution space is trivial)")]
    NoInvariantForm,

    #[error("invariant form is ambiguous (solution space has dimension {0}); supply the form in the manifest")]
    AmbiguousInvariantForm(usize),

    #[error("matrix has non-complex entries where complex entries are required")]
    NotComplex,

    #[error("matrix is not hermitian")]
    NotHermitian,

    #[error("hermitian form is degenerate")]
    DegenerateForm,

    #[error("form has signature ({0},{1}); expected (2,1)")]
    WrongSignature(usize, usize),

    #[error("matrix does not preserve the form: {0}")]
    NotInGroup(String),

    #[error("conjugation does not preserve the {0} subspace")]
    SubspaceNotPreserved(&'static str),

    #[error("relator {index} does not map to the identity matrix")]
    NotARepresentation { index: usize },

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable code used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::Syntax { .. } => "SYNTAX",
            Error::UnknownGenerator(_) => "UNKNOWN_GENERATOR",
            Error::MissingImage(_) => "MISSING_IMAGE",
            Error::InvalidGenerators(_) => "INVALID_GENERATORS",
            Error::GeneratorMismatch => "GENERATOR_MISMATCH",
            Error::NoInvariantForm => "NO_INVARIANT_FORM",
            Error::AmbiguousInvariantForm(_) => "AMBIGUOUS_INVARIANT_FORM",
            Error::NotComplex => "NOT_COMPLEX",
            Error::NotHermitian => "NOT_HERMITIAN",
            Error::DegenerateForm => "DEGENERATE_FORM",
            Error::WrongSignature(..) => "WRONG_SIGNATURE",
            Error::NotInGroup(_) => "NOT_IN_GROUP",
            Error::SubspaceNotPreserved(_) => "SUBSPACE_NOT_PRESERVED",
            Error::NotARepresentation { .. } => "NOT_A_REPRESENTATION",
            Error::Manifest(_) => "MANIFEST",
            Error::Io(_) => "IO",
            Error::Json(_) => "JSON",
        }
    }

    /// Process exit code class: 1 for verification failures, 2 for input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoInvariantForm
            | Error::AmbiguousInvariantForm(_)
            | Error::NotHermitian
            | Error::DegenerateForm
            | Error::WrongSignature(..)
            | Error::NotInGroup(_)
            | Error::SubspaceNotPreserved(_)
            | Error::NotARepresentation { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
