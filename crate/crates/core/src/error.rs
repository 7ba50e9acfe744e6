use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed superpartition {input:?}: offending token {token:?}")]
    Parse { input: String, token: String },

    #[error("antisymmetric parts must be strictly decreasing, got {0:?}")]
    AntisymNotStrict(Vec<usize>),

    #[error("symmetric parts must be weakly decreasing, got {0:?}")]
    SymNotDecreasing(Vec<usize>),

    #[error("bidegree mismatch: ({}|{}) vs ({}|{})", .left.0, .left.1, .right.0, .right.1)]
    BidegreeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("{nvars} variables are too few for {what} (need {needed})")]
    TooFewVariables {
        what: String,
        nvars: usize,
        needed: usize,
    },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("polynomial is not homogeneous in (bosonic|fermionic) degree")]
    NotHomogeneous,

    #[error("basis {0} is not valid here")]
    UnsupportedBasis(String),

    #[error("malformed expression {input:?}: {reason}")]
    Expression { input: String, reason: String },
}
