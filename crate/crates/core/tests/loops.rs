use std::time::Instant;

use malcev_core::exact::{Fp, Matrix};
use malcev_core::loops::*;
use malcev_core::report::IdentityRecord;

fn assert_all(recs: &[IdentityRecord]) {
    for r in recs {
        assert!(r.passed(), "{} failed: {:?}", r.identity, r.failures);
    }
}

fn s3_sign_loop() -> (PermGroup, SmithLoop) {
    let g = symmetric3();
    let v = GroupRep::sign(&g, 3).unwrap();
    let e = group_rep_loop(&v, &v).unwrap();
    (g, e)
}

#[test]
fn s3_sign_sign_over_f3() {
    let (g, e) = s3_sign_loop();
    assert_eq!(e.table.order(), 18);
    assert!(loop_check(&e.table.rows()).is_loop);
    let mode = CheckMode::Exhaustive;
    assert!(e.table.division_check(mode).passed());
    let m = e.table.moufang_elements(mode);
    assert!(e.base_copy().iter().all(|a| m.contains(a)));
    assert!(e.table.subloop_witness(&m).is_none());
    assert_all(&doro_action_check(&e.table, &e.base_copy(), mode).unwrap());
    assert_all(&e.ext.relative_equations_check().unwrap());
    assert_all(&gxg_autotopism_check(&g.table).unwrap());
    assert_all(&[e.round_trip_check()]);
    assert_all(&e.comma_check(DEFAULT_SEED));
    let v = GroupRep::sign(&g, 3).unwrap();
    assert_all(&[group_rep_product_check(&e, &v, &v)]);
}

#[test]
fn s3_standard_rep_gives_nonassociative_loop() {
    let g = symmetric3();
    let v = GroupRep::deleted_permutation(&g, 5).unwrap();
    let w = GroupRep::trivial(&g, 1, 5).unwrap();
    let e = group_rep_loop(&v, &w).unwrap();
    assert_eq!(e.table.order(), 150);
    let mode = CheckMode::Exhaustive;
    assert!(e.table.associativity_witness(mode).is_some());
    let m = e.table.moufang_elements(mode);
    assert!(e.base_copy().iter().all(|a| m.contains(a)));
    assert!(e.table.subloop_witness(&m).is_none());
    let nuc = e.table.nuclei(mode);
    assert!(e.table.subloop_witness(&nuc.na).is_none());
    // Na(E) is associative
    for &a in &nuc.na {
        for &b in &nuc.na {
            for &c in &nuc.na {
                let t = &e.table;
                assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
            }
        }
    }
    assert_all(&doro_action_check(&e.table, &e.base_copy(), mode).unwrap());
    assert_all(&e.ext.relative_equations_check().unwrap());
    assert_all(&[e.round_trip_check(), group_rep_product_check(&e, &v, &w)]);
    assert_all(&e.comma_check(DEFAULT_SEED));
}

#[test]
fn a5_deleted_permutation_over_f2() {
    let t = Instant::now();
    let g = alternating5();
    let v = GroupRep::deleted_permutation(&g, 2).unwrap();
    assert!(v.is_faithful());
    let w = GroupRep::trivial(&g, 1, 2).unwrap();
    let e = group_rep_loop(&v, &w).unwrap();
    assert_eq!(e.table.order(), 960);
    let mode = CheckMode::for_order(960, DEFAULT_SEED);
    assert_eq!(mode, CheckMode::Exhaustive);
    let base = e.base_copy();
    assert_all(&[e.table.moufang_check(&base, mode)]);
    let in_na: Vec<usize> = base.iter().copied().filter(|&a| e.table.in_nucleus(a, mode)).collect();
    assert_eq!(in_na, vec![e.table.identity()]);
    assert_all(&[e.round_trip_check()]);
    println!("a5 fixture in {:?}", t.elapsed());
}

#[test]
fn perturbed_action_breaks_relative_equations() {
    let (g, e) = s3_sign_loop();
    let a = g.table.index_of("(1 2)").unwrap();
    let b = g.table.index_of("(1 2 3)").unwrap();
    let bad = e.ext.with_map(false, a, b, Matrix::from_rows(3, 1, vec![vec![Fp::new(2, 3)]]).unwrap());
    let recs = bad.relative_equations_check().unwrap();
    let failed: Vec<&IdentityRecord> = recs.iter().filter(|r| !r.passed()).collect();
    assert!(!failed.is_empty());
    assert!(failed[0].failures[0].starts_with("a="));
}

#[test]
fn group_facts() {
    let g = symmetric3();
    let mode = CheckMode::Exhaustive;
    assert_eq!(g.table.moufang_elements(mode).len(), 6);
    assert_eq!(g.table.nuclei(mode).na.len(), 6);
    let z4 = cyclic(4);
    assert!(loop_check(&z4.table.rows()).is_loop);
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(g.table.ldiv(x, y), g.table.mul(g.table.inverse(x), y));
        }
    }
}

#[test]
fn abelian_group_has_trivial_r_twist() {
    let c = cyclic(3);
    let v = GroupRep::permutation(&c, 2).unwrap();
    let ext = group_rep_action(&v, &GroupRep::trivial(&c, 1, 2).unwrap()).unwrap();
    for a in 0..3 {
        for b in 0..3 {
            assert!(ext.r(a, b).is_identity());
        }
    }
}

#[test]
fn autotopism_examples() {
    let g = symmetric3();
    let t = &g.table;
    let a = t.index_of("(1 2 3)").unwrap();
    let id = identity_perm(6);
    assert!(autotopism_check(t, [&t.left_perm(a), &t.left_perm(a), &id]));
    assert!(autotopism_check(t, [&t.right_perm(a), &id, &t.right_perm(a)]));
    assert!(!autotopism_check(t, [&id, &id, &t.left_perm(a)]));
}

#[test]
fn doro_rejects_non_moufang_subset() {
    let g = symmetric3();
    let v = GroupRep::deleted_permutation(&g, 5).unwrap();
    let e = group_rep_loop(&v, &GroupRep::trivial(&g, 1, 5).unwrap()).unwrap();
    let mode = CheckMode::Exhaustive;
    let m = e.table.moufang_elements(mode);
    let outside = (0..e.table.order()).find(|x| !m.contains(x)).expect("non-Moufang element");
    assert!(matches!(doro_action_check(&e.table, &[outside], mode), Err(LoopError::NotMoufang(_))));
}

#[test]
fn json_round_trip_and_bad_table() {
    let (_, e) = s3_sign_loop();
    let j = serde_json::to_string(&e.table.to_json()).unwrap();
    let back: LoopJson = serde_json::from_str(&j).unwrap();
    assert_eq!(FiniteLoop::from_json(&back).unwrap(), e.table);
    let mut bad = back.clone();
    bad.table[3][4] = bad.table[3][5];
    assert!(matches!(FiniteLoop::from_json(&bad), Err(LoopError::NotLoop(_))));
}
