//! Malcev algebras, relative representations and the Lie algebras Lie(m)+ ⊂ Lie(m).

mod algebra;
mod json;
mod lie_envelope;
mod plus;
mod rep;
pub mod span;
mod structure;
mod zorn;

pub use algebra::{
    abelian, d_map_collapse_check, dd_check, derivation_check, malcev_check, non_malcev_3d, sl2, so3,
    MalcevAlgebra, DD_ANCHOR, DERIVATION_ANCHOR, MALCEV_ANCHOR,
};
pub use json::{algebra_from_json, AlgebraJson};
pub use lie_envelope::{build_lie_envelope, lambda_rho_relations, LieEnvelope, LAMBDA_RHO_ANCHORS};
pub use plus::{
    associative_envelope_dim, build_lie_plus, ideal_decomposition_check, is_absolutely_simple, Faithfulness,
    IdealReport, LiePlusModel, PlusMode, Word,
};
pub use rep::{
    adjoint, from_right_action_table, intertwiner, lie_module_check, m2_matrix_form, m2_table, minus_two,
    relative_rep_check, sl2_matrices, sl2_natural, tensor_relative_module, trivial_module, Action, LieModule,
    RelativeRep,
};
pub use structure::Structure;
pub use zorn::{o0, Zorn};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalcevError {
    #[error("structure constants are not antisymmetric")]
    NotAntisymmetric,
    #[error("Malcev identity fails at {0}")]
    NotMalcev(String),
    #[error("relative-representation identity fails at {0}")]
    NotRelative(String),
    #[error("not a Lie module: {0}")]
    NotModule(String),
    #[error("{0}")]
    ModeMismatch(String),
    #[error("input is not the 2x2 realization of sl2")]
    NotSl2,
    #[error("modules over different algebras")]
    Incompatible,
    #[error("representation does not factor through the model: {0}")]
    NotFactoring(String),
    #[error("Jacobi identity fails in envelope at {0}")]
    Jacobi(String),
    #[error("shape: {0}")]
    Shape(String),
    #[error("malformed algebra JSON: {0}")]
    Json(String),
    #[error("internal: {0}")]
    Internal(&'static str),
}
