use std::path::PathBuf;

use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unbound variable `{0}` in evaluation")]
    UnboundVariable(Var),

    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("singular parameter: {0}")]
    Singular(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operator is not in the Cartan subalgebra: {0}")]
    NotCartan(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
