use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("invalid ring signature: {0}")]
    InvalidSignature(String),

    #[error("leading term of zero")]
    LeadingTermOfZero,

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("ordering is not admissible: {0}")]
    NotAdmissible(String),

    #[error("ordering is not a degree ordering: {0}")]
    NotDegreeOrdering(String),

    #[error("needs at least two variables")]
    TooFewVariables,

    #[error("too many generators ({0}) for inclusion-exclusion, limit is 20")]
    TooManyGenerators(usize),

    #[error("presentation not solvable-type for any registered ordering (rewrite budget of {0} steps exceeded)")]
    RewriteBudget(usize),

    #[error("presentation is not solvable-type for the ordering: relation ({0}, {1}) violates LM(p) < x_i*x_j")]
    NotSolvableType(String, String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("zero polynomial in multiplicativity samples")]
    ZeroSample,

    #[error("Buchberger budget of {budget} reductions exceeded ({basis_len} basis elements, {pending} pairs pending)")]
    BuchbergerBudget {
        budget: usize,
        basis_len: usize,
        pending: usize,
    },

    #[error("enumeration budget exceeded: {count} orderings > {limit}; try a smaller depth")]
    EnumerationBudget { count: u128, limit: u128 },

    #[error("fan result carries no Groebner bases")]
    MissingBases,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    /// Rebase a parse error produced on a single line onto a line number and
    /// column offset of an enclosing file.
    pub fn at_line(self, line: usize, column_offset: usize) -> Self {
        match self {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line,
                column: column + column_offset,
                message,
            },
            other => other,
        }
    }
}
