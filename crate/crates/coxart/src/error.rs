use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown type label `{0}`")]
    UnknownLabel(String),
    #[error("rank {rank} out of range for type {label}")]
    RankOutOfRange { label: String, rank: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("generator {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("elements live over different Coxeter matrices")]
    MatrixMismatch,
    #[error("subset {0} is not of finite type")]
    NotFiniteType(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("edge ({i},{j}) violates the Lambda inequality: mu = ({mu_ij}, {mu_ji}), label {label}")]
    LambdaViolation {
        i: usize,
        j: usize,
        mu_ij: String,
        mu_ji: String,
        label: String,
    },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
