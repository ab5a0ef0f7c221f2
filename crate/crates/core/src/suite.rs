//! Verification bundles used by the command line and by `verify all`.
//!
//! Each bundle appends records and facts to a report; hard errors (a fixture
//! that cannot be built, an input outside a budget) are returned instead.

use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::enveloping::{EnvError, Envelope};
use crate::fixtures::{self, FixtureError};
use crate::loops::{
    doro_action_check, gxg_autotopism_check, group_rep_product_check, loop_check, CheckMode, FiniteLoop, GroupRep,
    LoopError, PermGroup, SmithLoop,
};
use crate::malcev::{
    build_lie_envelope, build_lie_plus, d_map_collapse_check, dd_check, derivation_check, ideal_decomposition_check,
    intertwiner, is_absolutely_simple, m2_matrix_form, m2_table, malcev_check, relative_rep_check, sl2,
    sl2_natural, tensor_relative_module, trivial_module, LieEnvelope, LiePlusModel, MalcevAlgebra, MalcevError,
    PlusMode, RelativeRep,
};
use crate::report::{IdentityRecord, VerificationReport};
use crate::smash::{s1_s2_check, SmashAlgebra, SmashError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Malcev(#[from] MalcevError),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Smash(#[from] SmashError),
    #[error(transparent)]
    Loop(#[from] LoopError),
}

impl SuiteError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SuiteError::Env(EnvError::Budget { .. })
                | SuiteError::Smash(SmashError::Budget { .. })
                | SuiteError::Smash(SmashError::Env(EnvError::Budget { .. }))
        )
    }
}

type R<T = ()> = Result<T, SuiteError>;

pub fn malcev(rep: &mut VerificationReport, alg: &MalcevAlgebra) {
    let s = alg.structure();
    rep.fact("dim", alg.dim())
        .fact("is_lie", alg.is_lie())
        .fact("center_dim", s.center().len())
        .fact("derived_dim", s.derived_dim())
        .fact("absolutely_simple", is_absolutely_simple(alg));
    rep.extend([malcev_check(alg)]);
}

pub fn dmap(rep: &mut VerificationReport, alg: &MalcevAlgebra) {
    rep.extend([derivation_check(alg), dd_check(alg)]);
    if alg.is_lie() {
        rep.extend([d_map_collapse_check(alg)]);
    }
}

pub fn rep_check(rep: &mut VerificationReport, module: &RelativeRep) {
    rep.fact("module_dim", module.dim());
    rep.extend([relative_rep_check(module)]);
}

pub fn plus(rep: &mut VerificationReport, alg: &Arc<MalcevAlgebra>, mode: PlusMode) -> R<Arc<LiePlusModel>> {
    let p = build_lie_plus(alg, mode)?;
    rep.fact("plus_mode", mode)
        .fact("plus_dim", p.dim())
        .fact("plus_faithfulness", p.faithfulness())
        .fact("plus_center_dim", p.structure().center().len())
        .fact("plus_derived_dim", p.structure().derived_dim());
    rep.extend([p.jacobi_check(), p.relation_b_check(), p.dd_check()]);
    rep.extend([IdentityRecord::single(
        "ad-injective",
        "a ↦ ad_a has zero kernel in Lie(m)+",
        (!p.injective_on_ad()).then(|| "nonzero kernel".into()),
    )]);
    if alg.is_lie() {
        let ideals = ideal_decomposition_check(&p)?;
        rep.fact("ideal_dims", [ideals.dim_ad_minus_d, ideals.dim_ad_plus_2d]);
        rep.extend(ideals.records);
    }
    Ok(Arc::new(p))
}

pub fn lie(rep: &mut VerificationReport, plus: Arc<LiePlusModel>) -> R<Arc<LieEnvelope>> {
    let l = build_lie_envelope(plus)?;
    rep.fact("lie_dim", l.dim());
    rep.extend([l.jacobi_check()]);
    rep.extend(l.lambda_rho_check());
    Ok(Arc::new(l))
}

pub fn envelope(alg: &Arc<MalcevAlgebra>, degree: usize) -> R<Arc<Envelope>> {
    Ok(Arc::new(Envelope::build(alg, fixtures::plus_mode(alg), degree)?))
}

/// Product, coproduct, antipode and division laws of the truncated envelope.
pub fn engine(rep: &mut VerificationReport, env: &Envelope) -> R {
    env.precompute()?;
    rep.fact("envelope", env.summary());
    rep.extend([env.unit_check(), env.ordered_product_check(), env.commutator_check()]);
    if env.algebra().is_lie() {
        rep.extend([env.associativity_check(env.budget())]);
    }
    rep.extend([env.bialgebra_check(), env.delta_lambda_check()]);
    rep.extend(env.coalgebra_checks());
    rep.extend(env.antipode_checks());
    rep.extend(env.antipode_lambda_checks());
    rep.extend(env.lambda_recursion_checks());
    rep.extend(env.division_checks());
    Ok(())
}

pub fn moufang_hopf(rep: &mut VerificationReport, env: &Envelope, max_deg: usize) {
    rep.extend(env.moufang_hopf_check(max_deg));
}

pub fn nalt(rep: &mut VerificationReport, env: &Envelope) {
    rep.extend([env.nalt_primitives_check()]);
}

pub fn rs(rep: &mut VerificationReport, env: &Envelope, max_total: usize) {
    rep.extend(env.rs_plus_only_check(max_total));
    rep.extend([env.rs_unit_check()]);
    rep.extend(s1_s2_check(env, max_total));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashTarget {
    Nalt,
    Comma,
    ProductPaths,
    Fiber,
    All,
}

impl FromStr for SmashTarget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "nalt" => SmashTarget::Nalt,
            "comma" => SmashTarget::Comma,
            "product-paths" => SmashTarget::ProductPaths,
            "fiber" => SmashTarget::Fiber,
            "all" => SmashTarget::All,
            _ => return Err(format!("unknown smash check `{s}`")),
        })
    }
}

pub fn smash(rep: &mut VerificationReport, a: &SmashAlgebra, target: SmashTarget) {
    use SmashTarget::*;
    rep.fact("smash", a.summary());
    if matches!(target, ProductPaths | All) {
        rep.extend(a.product_paths_check());
        rep.extend([a.bialgebra_check(), a.mixed_associativity_check()]);
    }
    if matches!(target, Comma | All) {
        rep.extend(a.comma_abelian_group_check());
    }
    if matches!(target, Fiber | All) {
        rep.extend(a.fiber_kernel_check());
    }
    if matches!(target, Nalt | All) {
        rep.extend(a.relative_module_check());
    }
}

fn iso_record(name: &str, anchor: &str, l1: &RelativeRep, l2: &RelativeRep) -> IdentityRecord {
    IdentityRecord::single(name, anchor, intertwiner(l1, l2).is_none().then(|| "no invertible intertwiner".into()))
}

/// Known instances of the classification of relative modules and of Lie(m)+.
pub fn classification(rep: &mut VerificationReport, alg: &Arc<MalcevAlgebra>) -> R {
    if **alg == sl2() {
        let m2 = m2_table(alg)?;
        let built = tensor_relative_module(&sl2_natural(alg)?, &trivial_module(alg, 1))?;
        rep.extend([
            iso_record("modules-instance", "V_M = natural, V_L = trivial gives M2 up to isomorphism", &built, &m2),
            iso_record("m2-forms-isomorphic", "M2 table ≅ (-2x ⊗ 1) matrix form", &m2, &m2_matrix_form(alg)?),
        ]);
    }
    if !alg.is_lie() && is_absolutely_simple(alg) {
        let p = build_lie_plus(alg, PlusMode::MultiplicationAlgebra)?;
        let s = p.structure();
        rep.fact("multiplication_model_dim", p.dim());
        rep.extend([
            IdentityRecord::single(
                "multiplication-model-center",
                "Z(Lie(m)+) = 0 in the multiplication-algebra model",
                (!s.center().is_empty()).then(|| format!("center of dimension {}", s.center().len())),
            ),
            IdentityRecord::single(
                "multiplication-model-perfect",
                "[Lie(m)+, Lie(m)+] = Lie(m)+",
                (s.derived_dim() != p.dim()).then(|| format!("derived algebra of dimension {}", s.derived_dim())),
            ),
        ]);
    }
    Ok(())
}

/// Loop axioms, Moufang elements, Doro relations, relative equations and the round trip.
pub fn loop_lab(rep: &mut VerificationReport, g: &PermGroup, v: &GroupRep, w: &GroupRep, e: &SmithLoop, seed: u64) -> R {
    let t = &e.table;
    let mode = CheckMode::for_order(t.order(), seed);
    if let CheckMode::Sampled { seed, .. } = mode {
        rep.seed = Some(seed);
    }
    rep.fact("order", t.order()).fact("check_mode", mode.describe());
    let diag = loop_check(&t.rows());
    rep.extend([
        IdentityRecord::single("loop-axioms", "Latin square with two-sided identity", (!diag.is_loop).then(|| diag.diagnostics.join("; "))),
        t.division_check(mode),
        group_rep_product_check(e, v, w),
    ]);
    let base = e.base_copy();
    rep.extend([t.moufang_check(&base, mode).with_mode(mode.describe())]);
    loop_structure(rep, t, mode);
    rep.extend(doro_action_check(t, &base, mode)?.into_iter().map(|r| r.with_mode(mode.describe())));
    rep.extend(e.ext.relative_equations_check()?);
    rep.extend(gxg_autotopism_check(&g.table)?);
    rep.extend([e.round_trip_check()]);
    rep.extend(e.comma_check(seed));
    Ok(())
}

/// Facts about Moufang elements and nuclei.
pub fn loop_structure(rep: &mut VerificationReport, t: &FiniteLoop, mode: CheckMode) {
    let m = t.moufang_elements(mode);
    let nuc = t.nuclei(mode);
    rep.fact("associative", t.associativity_witness(mode).is_none())
        .fact("moufang_elements", m.len())
        .fact("nucleus", nuc.na.len())
        .fact("left_nucleus", nuc.left.len())
        .fact("middle_nucleus", nuc.middle.len())
        .fact("right_nucleus", nuc.right.len());
    rep.extend([IdentityRecord::single(
        "moufang-elements-subloop",
        "M(E) is a subloop",
        t.subloop_witness(&m),
    )]);
}

/// Degrees used by `verify all` for a named algebra.
pub struct Budgets {
    pub envelope: usize,
    pub moufang: usize,
    pub rs: usize,
    pub smash_env: usize,
    pub smash_v: usize,
}

pub fn default_budgets(algebra: &str) -> Budgets {
    let d = crate::enveloping::default_degree(algebra);
    Budgets { envelope: d, moufang: d, rs: d - 1, smash_env: fixtures::smash_degree(algebra), smash_v: 2 }
}

/// Every bundle for one algebra, plus the loop fixture `s3-sign-f3`.
pub fn all(rep: &mut VerificationReport, name: &str, seed: u64) -> R {
    let alg = fixtures::algebra(name)?;
    let b = default_budgets(name);
    rep.fixture("algebra", name);
    rep.truncate("degree", b.envelope).truncate("rs_total_degree", b.rs);
    malcev(rep, &alg);
    dmap(rep, &alg);
    let p = plus(rep, &alg, fixtures::plus_mode(&alg))?;
    lie(rep, p)?;
    let env = envelope(&alg, b.envelope)?;
    engine(rep, &env)?;
    moufang_hopf(rep, &env, b.moufang);
    nalt(rep, &env);
    rs(rep, &env, b.rs);
    classification(rep, &alg)?;
    let modules: &[&str] = if *alg == sl2() { &["m2", "adjoint"] } else { &["adjoint"] };
    rep.truncate("smash_deg_env", b.smash_env).truncate("smash_deg_v", b.smash_v);
    let senv = envelope(&alg, b.smash_env)?;
    for m in modules {
        let module = fixtures::module(&alg, m)?;
        rep_check(rep, &module);
        let a = SmashAlgebra::build(senv.clone(), &module, b.smash_v)?;
        let before = rep.records.len();
        smash(rep, &a, SmashTarget::All);
        for r in &mut rep.records[before..] {
            r.identity = format!("{m}/{}", r.identity);
        }
    }
    rep.facts.remove("smash");
    rep.fixture("loop", "s3-sign-f3");
    let (g, v, w, e) = fixtures::smith_loop("s3-sign-f3")?;
    loop_lab(rep, &g, &v, &w, &e, seed)
}
