//! Smash products `A = k[V] ⊗ U(m)` of a relative representation with the envelope.
//!
//! `k[V]` is truncated at `deg_v` and `U(m)` at the envelope budget; products that would
//! leave either truncation return [`SmashError::Budget`].

mod algebra;
mod checks;
mod poly;

pub use algebra::{IsoMap, Key, SElem, STensor, SmashAlgebra, SmashSummary};
pub use checks::*;
pub use poly::{poly_antipode, poly_mul, Poly, PolyAction, PolyMap};

use thiserror::Error;

use crate::enveloping::EnvError;
use crate::malcev::MalcevError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmashError {
    #[error("{what} degree budget exceeded: needs {needed}, budget {budget}")]
    Budget { what: &'static str, needed: usize, budget: usize },
    #[error("operator has T letters and does not act on k[V]")]
    NotPlusOnly,
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Model(#[from] MalcevError),
    #[error("representation and envelope are over different algebras")]
    Incompatible,
    #[error("{0}")]
    Usage(String),
}
