//! Finite loops, Moufang elements, Doro actions and loop extensions over F_p.

mod doro;
mod extension;
mod finite;
mod groups;

pub use doro::{autotopism_check, doro_action_check, gxg_autotopism_check, DORO_RELATIONS};
pub use extension::{
    group_rep_action, group_rep_loop, group_rep_product_check, smith_extension, ExtensionJson, LoopExtension, MapEntry,
    SmithLoop,
    GROUP_REP_ANCHOR, RELATIVE_EQUATION_ANCHORS, RS_ANCHOR, SMITH_ANCHOR,
};
pub use finite::{
    compose, identity_perm, invert, loop_check, CheckMode, FiniteLoop, LoopDiagnostics, LoopJson, Nuclei,
    DEFAULT_SAMPLES, DEFAULT_SEED, EXHAUSTIVE_LIMIT, MOUFANG_ANCHORS,
};
pub use groups::{alternating5, cyclic, perm_group, symmetric3, FpMatrix, GroupRep, PermGroup, RepJson};

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("not a loop: {0}")]
    NotLoop(String),
    #[error("not a group")]
    NotGroup,
    #[error("not a Moufang element: {0}")]
    NotMoufang(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("invalid extension data: {0}")]
    BadExtension(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
