use std::path::PathBuf;

use nonrandom::abelian::FieldCountError;
use nonrandom::bounds::BoundsError;
use nonrandom::dirichlet::DirichletError;
use nonrandom::permgroup::GroupError;
use nonrandom::quadratic::QuadraticError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("writing output: {0}")]
    Write(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quadratic(#[from] QuadraticError),
    #[error(transparent)]
    Field(#[from] FieldCountError),
    #[error(transparent)]
    Dirichlet(#[from] DirichletError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

impl CliError {
    /// 2: bad input, 3: empty range, 4: cap exceeded, 5: not enough data to fit, 1: anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Write(_) | CliError::Csv(_) | CliError::Json(_) => 1,
            CliError::Group(e) => match e {
                GroupError::CapExceeded { .. } => 4,
                _ => 2,
            },
            CliError::Quadratic(e) => match e {
                QuadraticError::EmptyRange(_) => 3,
                QuadraticError::Checkpoints | QuadraticError::NotFundamental(_) => 2,
            },
            CliError::Field(e) => match e {
                FieldCountError::EmptyRange(_) => 3,
                FieldCountError::CapExceeded { .. } | FieldCountError::OrderTooLarge { .. } => 4,
                FieldCountError::Parse(_)
                | FieldCountError::Checkpoints
                | FieldCountError::NotPrime(_)
                | FieldCountError::NotClosed => 2,
                _ => 1,
            },
            CliError::Dirichlet(e) => match e {
                DirichletError::InsufficientData(_) => 5,
                DirichletError::CapExceeded { .. } => 4,
                DirichletError::UnsupportedSingularity => 1,
                _ => 2,
            },
            CliError::Bounds(e) => match e {
                BoundsError::Group(GroupError::CapExceeded { .. }) => 4,
                _ => 2,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}
