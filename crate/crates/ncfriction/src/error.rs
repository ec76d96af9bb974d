//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the physics routines and file loaders.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical or physical domain of the
    /// operation (non-finite input, wrong sign, ion outside the gap, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested exactly at a pole of the expression.
    #[error("pole: {0}")]
    Pole(String),

    /// An iterative numerical procedure failed to converge to the
    /// requested accuracy.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A finite-difference or ODE step size collapsed below the resolvable
    /// scale without meeting its accuracy target.
    #[error("step-size failure: {0}")]
    StepSize(String),

    /// A material record or materials file violated one or more
    /// invariants. Every violation is listed.
    #[error("validation failed:\n{}", .0.join("\n"))]
    Validation(Vec<String>),

    /// A file could not be parsed.
    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code the CLI maps this error to: 2 for usage and
    /// validation problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Validation(_) | Error::Parse { .. } | Error::Io(_) => 2,
            Error::Pole(_) | Error::NoConvergence(_) | Error::StepSize(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
