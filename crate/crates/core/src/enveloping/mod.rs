//! Truncated U(Lie(m)) and the nonassociative envelope U(m).
//!
//! Every operation states the degrees it needs and refuses inputs whose exact
//! result could leave the budget; nothing is silently projected.

mod checks;
mod module;
mod ulie;
mod umalcev;

pub use checks::*;
pub use module::{InducedModule, Vector};
pub use ulie::{Op, OpTensor, ULie};
pub use umalcev::{Elem, Envelope, EnvelopeSummary, Tensor};

use thiserror::Error;

use crate::malcev::MalcevError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvError {
    #[error("degree budget exceeded: needs {needed}, budget {budget}")]
    Budget { needed: usize, budget: usize },
    #[error("bad monomial `{0}`")]
    BadMonomial(String),
    #[error(transparent)]
    Model(MalcevError),
}

/// Default truncation degree per fixture name.
pub fn default_degree(algebra: &str) -> usize {
    match algebra {
        "o0" => 3,
        _ => 4,
    }
}
