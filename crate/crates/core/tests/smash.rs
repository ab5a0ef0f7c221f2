use std::sync::Arc;

use malcev_core::enveloping::Envelope;
use malcev_core::exact::{qi, QMatrix};
use malcev_core::malcev::{adjoint, intertwiner, m2_matrix_form, m2_table, o0, sl2, PlusMode, RelativeRep};
use malcev_core::report::IdentityRecord;
use malcev_core::smash::*;
use malcev_core::sparse::Monomial;

fn assert_all(recs: &[IdentityRecord]) {
    for r in recs {
        assert!(r.passed(), "{} failed: {:?}", r.identity, r.failures);
        assert!(r.instances_checked > 0, "{} checked nothing", r.identity);
    }
}

fn sl2_env(n: usize) -> Arc<Envelope> {
    Arc::new(Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, n).unwrap())
}

fn full_sweep(a: &SmashAlgebra) {
    assert_all(&a.product_paths_check());
    assert_all(&[a.bialgebra_check(), a.mixed_associativity_check()]);
    assert_all(&a.comma_abelian_group_check());
    assert_all(&a.fiber_kernel_check());
    assert_all(&a.relative_module_check());
}

#[test]
fn sl2_m2_smash_passes_everything() {
    let env = sl2_env(3);
    let rep = m2_table(env.algebra()).unwrap();
    let a = SmashAlgebra::build(env, &rep, 2).unwrap();
    assert_eq!(a.basis().len(), 6 * 20);
    full_sweep(&a);
}

#[test]
fn sl2_adjoint_smash_passes_everything() {
    let env = sl2_env(3);
    let rep = adjoint(env.algebra());
    let a = SmashAlgebra::build(env, &rep, 2).unwrap();
    full_sweep(&a);
}

#[test]
fn o0_adjoint_smash_passes_everything() {
    let alg = Arc::new(o0());
    let env = Arc::new(Envelope::build(&alg, PlusMode::MultiplicationAlgebra, 2).unwrap());
    let a = SmashAlgebra::build(env, &adjoint(&alg), 2).unwrap();
    full_sweep(&a);
}

#[test]
fn m2_table_and_matrix_form_are_isomorphic() {
    let alg = Arc::new(sl2());
    let x = intertwiner(&m2_table(&alg).unwrap(), &m2_matrix_form(&alg).unwrap()).expect("intertwiner");
    assert_eq!(x.rank(), 2);
}

#[test]
fn split_product_and_unit_examples() {
    let env = sl2_env(3);
    let a = SmashAlgebra::build(env.clone(), &m2_table(env.algebra()).unwrap(), 2).unwrap();
    let x = Monomial::letter(0);
    let b = env.parse_monomial("e*h").unwrap();
    let xs = SElem::basis((x.clone(), Monomial::one()));
    let bs = SElem::basis((Monomial::one(), b.clone()));
    assert_eq!(a.mul(&xs, &bs).unwrap(), SElem::basis((x.clone(), b.clone())));
    assert_eq!(a.mul(&SmashAlgebra::one(), &xs).unwrap(), xs);
    // (x⊗e)(x'⊗f) against the r/s expansion computed afresh
    let u = (x.clone(), env.parse_monomial("e").unwrap());
    let v = (Monomial::letter(1), env.parse_monomial("f").unwrap());
    assert_eq!(a.mul_basis(&u, &v).unwrap(), a.mul_basis_reference(&u, &v).unwrap());
}

#[test]
fn smash_is_not_associative_for_o0() {
    let alg = Arc::new(o0());
    let env = Arc::new(Envelope::build(&alg, PlusMode::MultiplicationAlgebra, 2).unwrap());
    let a = SmashAlgebra::build(env, &adjoint(&alg), 2).unwrap();
    let p = |i| SElem::basis((Monomial::one(), Monomial::letter(i)));
    let x = SElem::basis((Monomial::letter(0), Monomial::one()));
    let found = (0..7).any(|i| (0..7).any(|j| !a.associator_with(i, &p(j), &x).unwrap().is_zero()));
    assert!(found);
}

#[test]
fn budgets_are_refused() {
    let env = sl2_env(2);
    let a = SmashAlgebra::build(env.clone(), &m2_table(env.algebra()).unwrap(), 1).unwrap();
    let x = SElem::basis((Monomial::letter(0), Monomial::one()));
    assert!(matches!(a.mul(&x, &x), Err(SmashError::Budget { what: "k[V]", .. })));
    let b = SElem::basis((Monomial::one(), env.parse_monomial("e*f").unwrap()));
    assert!(matches!(a.mul(&b, &b), Err(SmashError::Budget { what: "U(m)", .. })));
}

#[test]
fn non_relative_operators_are_rejected() {
    // The right-action table read directly as left operators.
    let alg = Arc::new(sl2());
    let m2 = m2_table(&alg).unwrap();
    let literal: Vec<QMatrix> = m2.mats().iter().map(|m| m.scale(&qi(-1))).collect();
    let bad = RelativeRep::unchecked(alg.clone(), literal).unwrap();
    let env = sl2_env(3);
    assert!(matches!(SmashAlgebra::build(env, &bad, 2), Err(SmashError::Model(_))));
}

#[test]
fn isotropy_names_round_trip() {
    for m in IsoMap::ALL {
        assert_eq!(m.to_string().parse::<IsoMap>().unwrap(), m);
    }
    assert!(matches!("q".parse::<IsoMap>(), Err(SmashError::Usage(_))));
}

#[test]
fn s1_s2_vanish_with_corrected_sign() {
    let env = sl2_env(4);
    assert_all(&s1_s2_check(&env, 3));
    let o = Envelope::build(&Arc::new(o0()), PlusMode::MultiplicationAlgebra, 3).unwrap();
    assert_all(&s1_s2_check(&o, 2));
}

#[test]
fn s2_as_printed_fails() {
    let env = sl2_env(4);
    let one = Monomial::one();
    let (s1, s2) = s1_s2(&env, 0, &one, &one, true).unwrap();
    assert!(s1.is_zero());
    assert!(!s2.is_zero());
    let (_, s2) = s1_s2(&env, 0, &one, &one, false).unwrap();
    assert!(s2.is_zero());
}
