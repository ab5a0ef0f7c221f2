//! Acceptance criteria, one line each. Run with `--nocapture` to see the table.
//! Criteria run one after another inside a single test so the timings are not
//! distorted by other tests sharing the machine.

use std::sync::Arc;
use std::time::{Duration, Instant};

use malcev_core::enveloping::Envelope;
use malcev_core::exact::{qi, Q};
use malcev_core::loops::{
    doro_action_check, group_rep_loop, gxg_autotopism_check, loop_check, symmetric3, CheckMode, GroupRep,
};
use malcev_core::malcev::{
    adjoint, build_lie_envelope, build_lie_plus, dd_check, derivation_check, ideal_decomposition_check, intertwiner,
    m2_matrix_form, m2_table, malcev_check, non_malcev_3d, o0, sl2, sl2_natural, tensor_relative_module,
    trivial_module, PlusMode,
};
use malcev_core::report::IdentityRecord;
use malcev_core::smash::SmashAlgebra;

type Outcome = Result<(), String>;

fn all_pass(what: &str, recs: &[IdentityRecord]) -> Outcome {
    for r in recs {
        if !r.passed() {
            return Err(format!("{what}: {} failed at {:?}", r.identity, r.failures));
        }
        if r.instances_checked == 0 {
            return Err(format!("{what}: {} checked nothing", r.identity));
        }
    }
    Ok(())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vec3(a: i64, b: i64, c: i64) -> Vec<Q> {
    vec![qi(a), qi(b), qi(c)]
}

fn c1_malcev_fixtures() -> Outcome {
    let s = sl2();
    ensure(s.bracket(&s.e(0), &s.e(2)) == vec3(1, 0, 0), || "[e,h] ≠ e".into())?;
    ensure(s.bracket(&s.e(1), &s.e(2)) == vec3(0, -1, 0), || "[f,h] ≠ -f".into())?;
    all_pass("sl2", &[malcev_check(&s)])?;
    all_pass("o0", &[malcev_check(&o0())])?;
    ensure(!malcev_check(&non_malcev_3d()).passed(), || "mutated 3-dim algebra passed".into())
}

fn c2_d_maps() -> Outcome {
    for (name, alg) in [("sl2", sl2()), ("o0", o0())] {
        all_pass(name, &[derivation_check(&alg), dd_check(&alg)])?;
    }
    Ok(())
}

fn c3_two_copies_model() -> Outcome {
    let p = build_lie_plus(&Arc::new(sl2()), PlusMode::SemisimpleLie).map_err(|e| e.to_string())?;
    all_pass("m x m", &[p.relation_b_check()])?;
    ensure(p.dim() == 6, || format!("span has dimension {}", p.dim()))?;
    ensure(p.injective_on_ad(), || "ad has a kernel".into())?;
    let ideals = ideal_decomposition_check(&p).map_err(|e| e.to_string())?;
    ensure((ideals.dim_ad_minus_d, ideals.dim_ad_plus_2d) == (3, 3), || {
        format!("ideal dimensions {} and {}", ideals.dim_ad_minus_d, ideals.dim_ad_plus_2d)
    })?;
    all_pass("ideals", &ideals.records)
}

fn c4_lie_envelopes() -> Outcome {
    for (name, alg, mode, dim) in
        [("sl2", sl2(), PlusMode::SemisimpleLie, 9), ("o0", o0(), PlusMode::MultiplicationAlgebra, 28)]
    {
        let plus = build_lie_plus(&Arc::new(alg), mode).map_err(|e| e.to_string())?;
        let l = build_lie_envelope(Arc::new(plus)).map_err(|e| e.to_string())?;
        ensure(l.dim() == dim, || format!("Lie({name}) has dimension {}", l.dim()))?;
        all_pass(name, &[l.jacobi_check()])?;
        let rels = l.lambda_rho_check();
        ensure(rels.len() == 3, || "expected three λ/ρ relations".into())?;
        all_pass(name, &rels)?;
    }
    Ok(())
}

fn sl2_env(n: usize) -> Result<Envelope, String> {
    Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, n).map_err(|e| e.to_string())
}

fn o0_env(n: usize) -> Result<Envelope, String> {
    Envelope::build(&Arc::new(o0()), PlusMode::MultiplicationAlgebra, n).map_err(|e| e.to_string())
}

fn c5_engine() -> Outcome {
    let env = sl2_env(4)?;
    env.precompute().map_err(|e| e.to_string())?;
    let mut recs = vec![
        env.associativity_check(4),
        env.commutator_check(),
        env.bialgebra_check(),
        env.delta_lambda_check(),
    ];
    recs.extend(env.coalgebra_checks());
    recs.extend(env.antipode_checks());
    recs.extend(env.antipode_lambda_checks());
    recs.extend(env.division_checks());
    all_pass("sl2 degree 4", &recs)?;
    let dims = env.summary().slice_dims;
    ensure(dims[2] == 10, || format!("degree ≤ 2 slice has dimension {}", dims[2]))
}

fn c6_moufang_hopf() -> Outcome {
    let s = sl2_env(4)?;
    let mut recs = s.moufang_hopf_check(4);
    recs.push(s.nalt_primitives_check());
    all_pass("sl2", &recs)?;
    let o = o0_env(3)?;
    let mut recs = o.moufang_hopf_check(3);
    recs.push(o.nalt_primitives_check());
    all_pass("o0", &recs)
}

fn c7_rs_plus_only() -> Outcome {
    for (name, env, total) in [("sl2", sl2_env(4)?, 3), ("o0", o0_env(3)?, 2)] {
        let mut recs = env.rs_plus_only_check(total);
        recs.push(env.rs_unit_check());
        all_pass(name, &recs)?;
    }
    Ok(())
}

fn smash_sweep(what: &str, a: &SmashAlgebra) -> Outcome {
    all_pass(what, &a.comma_abelian_group_check())?;
    all_pass(what, &a.product_paths_check())?;
    all_pass(what, &a.fiber_kernel_check())?;
    all_pass(what, &a.relative_module_check())
}

fn c8_smash() -> Outcome {
    let env = Arc::new(sl2_env(3)?);
    let alg = env.algebra().clone();
    let m2 = m2_table(&alg).map_err(|e| e.to_string())?;
    let err = |e: malcev_core::smash::SmashError| e.to_string();
    smash_sweep("sl2/m2", &SmashAlgebra::build(env.clone(), &m2, 2).map_err(err)?)?;
    smash_sweep("sl2/adjoint", &SmashAlgebra::build(env, &adjoint(&alg), 2).map_err(err)?)?;
    let o = Arc::new(o0_env(2)?);
    let oa = o.algebra().clone();
    smash_sweep("o0/adjoint", &SmashAlgebra::build(o, &adjoint(&oa), 2).map_err(err)?)?;
    let matrix = m2_matrix_form(&alg).map_err(|e| e.to_string())?;
    ensure(intertwiner(&m2, &matrix).is_some(), || "M2 table and matrix form not isomorphic".into())
}

fn c9_classification() -> Outcome {
    let alg = Arc::new(sl2());
    let natural = sl2_natural(&alg).map_err(|e| e.to_string())?;
    let built = tensor_relative_module(&natural, &trivial_module(&alg, 1)).map_err(|e| e.to_string())?;
    let m2 = m2_table(&alg).map_err(|e| e.to_string())?;
    ensure(intertwiner(&built, &m2).is_some(), || "natural ⊗ trivial is not M2".into())?;
    let p = build_lie_plus(&Arc::new(o0()), PlusMode::MultiplicationAlgebra).map_err(|e| e.to_string())?;
    ensure(p.dim() == 21, || format!("multiplication model has dimension {}", p.dim()))?;
    ensure(p.structure().center().is_empty(), || "nonzero center".into())?;
    ensure(p.structure().derived_dim() == 21, || format!("derived algebra of dimension {}", p.structure().derived_dim()))
}

fn c10_loop_lab() -> Outcome {
    let g = symmetric3();
    let sign = GroupRep::sign(&g, 3).map_err(|e| e.to_string())?;
    let e = group_rep_loop(&sign, &sign).map_err(|e| e.to_string())?;
    ensure(e.table.order() == 18, || format!("order {}", e.table.order()))?;
    let diag = loop_check(&e.table.rows());
    ensure(diag.is_loop, || diag.diagnostics.join("; "))?;
    let mode = CheckMode::Exhaustive;
    let base = e.base_copy();
    all_pass("S3 ⊆ M(E)", &[e.table.moufang_check(&base, mode)])?;
    all_pass("doro", &doro_action_check(&e.table, &base, mode).map_err(|e| e.to_string())?)?;
    all_pass("relative equations", &e.ext.relative_equations_check().map_err(|e| e.to_string())?)?;
    all_pass("G×G", &gxg_autotopism_check(&g.table).map_err(|e| e.to_string())?)?;
    all_pass("round trip", &[e.round_trip_check()])
}

#[test]
fn acceptance() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("malcev fixtures", 5, c1_malcev_fixtures),
        ("D-map laws", 30, c2_d_maps),
        ("m x m model of Lie(sl2)+", 5, c3_two_copies_model),
        ("Lie(m) envelopes", 60, c4_lie_envelopes),
        ("enveloping engine", 120, c5_engine),
        ("Moufang-Hopf identities", 300, c6_moufang_hopf),
        ("r, s are plus-only", 120, c7_rs_plus_only),
        ("smash products and relative modules", 300, c8_smash),
        ("classification cross-checks", 60, c9_classification),
        ("loop lab", 120, c10_loop_lab),
    ];
    let mut failed = Vec::new();
    for (i, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(t < Duration::from_secs(*bound), || format!("took {:.1}s, bound {bound}s", t.as_secs_f64()))
        });
        match &outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.2}s < {bound}s)", i + 1, t.as_secs_f64()),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name} ({:.2}s): {why}", i + 1, t.as_secs_f64());
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
