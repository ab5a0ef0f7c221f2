//! Named fixtures.
//!
//! Algebras: `sl2`, `so3`, `o0`, `abelianN`, `non-malcev-3d`.
//! Relative modules: `adjoint`, `m2`, `m2-matrix`, `natural`, `natural-trivial`.
//! Groups: `s3`, `a5`, `cN`; representations: `trivial`, `sign`, `perm`, `deleted`.
//! Loops: `s3-sign-f3`, `s3-standard-f5`, `a5-deleted-f2`.

use std::sync::Arc;

use thiserror::Error;

use crate::loops::{alternating5, cyclic, group_rep_loop, symmetric3, GroupRep, LoopError, PermGroup, SmithLoop};
use crate::malcev::{
    abelian, adjoint, m2_matrix_form, m2_table, non_malcev_3d, o0, sl2, sl2_natural, so3, tensor_relative_module,
    trivial_module, MalcevAlgebra, MalcevError, PlusMode, RelativeRep,
};

pub const ALGEBRAS: [&str; 5] = ["sl2", "so3", "o0", "abelianN", "non-malcev-3d"];
pub const MODULES: [&str; 5] = ["adjoint", "m2", "m2-matrix", "natural", "natural-trivial"];
pub const GROUPS: [&str; 3] = ["s3", "a5", "cN"];
pub const REPS: [&str; 4] = ["trivial", "sign", "perm", "deleted"];
pub const LOOPS: [&str; 3] = ["s3-sign-f3", "s3-standard-f5", "a5-deleted-f2"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unknown {kind} `{name}` (known: {known})")]
    Unknown { kind: &'static str, name: String, known: String },
    #[error("module `{module}` is only defined for sl2")]
    NeedsSl2 { module: String },
    #[error(transparent)]
    Malcev(#[from] MalcevError),
    #[error(transparent)]
    Loop(#[from] LoopError),
}

fn unknown(kind: &'static str, name: &str, known: &[&str]) -> FixtureError {
    FixtureError::Unknown { kind, name: name.into(), known: known.join(", ") }
}

pub fn algebra(name: &str) -> Result<Arc<MalcevAlgebra>, FixtureError> {
    let alg = match name {
        "sl2" => sl2(),
        "so3" => so3(),
        "o0" => o0(),
        "non-malcev-3d" => non_malcev_3d(),
        _ => match name.strip_prefix("abelian").and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n > 0 => abelian(n),
            _ => return Err(unknown("algebra", name, &ALGEBRAS)),
        },
    };
    Ok(Arc::new(alg))
}

/// `m x m` for Lie algebras with zero center and `[m,m] = m`, the multiplication algebra otherwise.
pub fn plus_mode(alg: &MalcevAlgebra) -> PlusMode {
    let s = alg.structure();
    if alg.is_lie() && s.center().is_empty() && s.derived_dim() == alg.dim() {
        PlusMode::SemisimpleLie
    } else {
        PlusMode::MultiplicationAlgebra
    }
}

/// Default degree budget of the smash algebra's U(m) factor.
pub fn smash_degree(algebra: &str) -> usize {
    match algebra {
        "o0" => 2,
        _ => 3,
    }
}

pub fn module(alg: &Arc<MalcevAlgebra>, name: &str) -> Result<RelativeRep, FixtureError> {
    let is_sl2 = **alg == sl2();
    let need_sl2 = || -> Result<(), FixtureError> {
        if is_sl2 {
            Ok(())
        } else {
            Err(FixtureError::NeedsSl2 { module: name.into() })
        }
    };
    Ok(match name {
        "adjoint" => adjoint(alg),
        "m2" => {
            need_sl2()?;
            m2_table(alg)?
        }
        "m2-matrix" => {
            need_sl2()?;
            m2_matrix_form(alg)?
        }
        "natural" => {
            need_sl2()?;
            sl2_natural(alg)?.as_relative()
        }
        "natural-trivial" => {
            need_sl2()?;
            tensor_relative_module(&sl2_natural(alg)?, &trivial_module(alg, 1))?
        }
        _ => return Err(unknown("module", name, &MODULES)),
    })
}

pub fn group(name: &str) -> Result<PermGroup, FixtureError> {
    match name {
        "s3" => Ok(symmetric3()),
        "a5" => Ok(alternating5()),
        _ => match name.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=255).contains(&n) => Ok(cyclic(n)),
            _ => Err(unknown("group", name, &GROUPS)),
        },
    }
}

pub fn rep(g: &PermGroup, name: &str, p: u64) -> Result<GroupRep, FixtureError> {
    Ok(match name {
        "trivial" => GroupRep::trivial(g, 1, p)?,
        "sign" => GroupRep::sign(g, p)?,
        "perm" => GroupRep::permutation(g, p)?,
        "deleted" => GroupRep::deleted_permutation(g, p)?,
        _ => return Err(unknown("representation", name, &REPS)),
    })
}

/// The group, `V`, `W` and the loop `V ⊗ W × G` of a named loop fixture.
pub fn smith_loop(name: &str) -> Result<(PermGroup, GroupRep, GroupRep, SmithLoop), FixtureError> {
    let (g, v, w, p) = match name {
        "s3-sign-f3" => ("s3", "sign", "sign", 3),
        "s3-standard-f5" => ("s3", "deleted", "trivial", 5),
        "a5-deleted-f2" => ("a5", "deleted", "trivial", 2),
        _ => return Err(unknown("loop", name, &LOOPS)),
    };
    let g = group(g)?;
    let (v, w) = (rep(&g, v, p)?, rep(&g, w, p)?);
    let e = group_rep_loop(&v, &w)?;
    Ok((g, v, w, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(algebra("o0").unwrap().dim(), 7);
        assert_eq!(algebra("abelian4").unwrap().dim(), 4);
        assert_eq!(plus_mode(&algebra("sl2").unwrap()), PlusMode::SemisimpleLie);
        assert_eq!(plus_mode(&algebra("so3").unwrap()), PlusMode::SemisimpleLie);
        assert_eq!(plus_mode(&algebra("o0").unwrap()), PlusMode::MultiplicationAlgebra);
        assert_eq!(plus_mode(&algebra("abelian2").unwrap()), PlusMode::MultiplicationAlgebra);
        let sl = algebra("sl2").unwrap();
        for m in MODULES {
            assert!(module(&sl, m).is_ok(), "{m}");
        }
        assert_eq!(group("c5").unwrap().perms.len(), 5);
        assert_eq!(smith_loop("s3-sign-f3").unwrap().3.table.order(), 18);
    }

    #[test]
    fn unknown_names_are_errors() {
        assert!(matches!(algebra("g2"), Err(FixtureError::Unknown { kind: "algebra", .. })));
        assert!(algebra("abelian0").is_err());
        assert!(matches!(module(&algebra("o0").unwrap(), "m2"), Err(FixtureError::NeedsSl2 { .. })));
        assert!(module(&algebra("sl2").unwrap(), "spin").is_err());
        assert!(group("d4").is_err());
        assert!(rep(&group("s3").unwrap(), "regular", 3).is_err());
        assert!(smith_loop("s4").is_err());
    }
}
