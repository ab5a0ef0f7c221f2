use std::collections::BTreeMap;
use std::sync::Arc;

use malcev_core::enveloping::*;
use malcev_core::exact::{qi, Q};
use malcev_core::malcev::{o0, sl2, PlusMode};
use malcev_core::report::IdentityRecord;
use malcev_core::sparse::{Lin, Monomial};

fn sl2_env(n: usize) -> Envelope {
    Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, n).unwrap()
}

fn o0_env() -> Envelope {
    Envelope::build(&Arc::new(o0()), PlusMode::MultiplicationAlgebra, 3).unwrap()
}

fn assert_all(recs: &[IdentityRecord]) {
    for r in recs {
        assert!(r.passed(), "{} failed: {:?}", r.identity, r.failures);
    }
}

/// Plain word rewriting `ba -> ab + [b,a]` until sorted.
fn oracle_straighten(word: Vec<u16>, br: &dyn Fn(u16, u16) -> Vec<(u16, Q)>) -> BTreeMap<Vec<u16>, Q> {
    let mut out = BTreeMap::new();
    let mut stack = vec![(word, qi(1))];
    while let Some((w, c)) = stack.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => {
                let e = out.entry(w).or_insert_with(|| qi(0));
                *e += c;
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                stack.push((swapped, c.clone()));
                for (k, d) in br(w[i], w[i + 1]) {
                    let mut nw = w[..i].to_vec();
                    nw.push(k);
                    nw.extend_from_slice(&w[i + 2..]);
                    stack.push((nw, &c * d));
                }
            }
        }
    }
    out.retain(|_, c| *c != qi(0));
    out
}

#[test]
fn sl2_products_match_classical_pbw() {
    let env = sl2_env(4);
    let alg = env.algebra().clone();
    let br = |x: u16, y: u16| -> Vec<(u16, Q)> {
        alg.bracket(&alg.e(x as usize), &alg.e(y as usize))
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != qi(0))
            .map(|(k, c)| (k as u16, c.clone()))
            .collect()
    };
    for a in env.basis() {
        for b in env.basis() {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let mut w = a.letters().to_vec();
            w.extend_from_slice(b.letters());
            let want = oracle_straighten(w, &br);
            let got: BTreeMap<Vec<u16>, Q> =
                env.mul_mono(a, b).unwrap().iter().map(|(m, c)| (m.letters().to_vec(), c.clone())).collect();
            assert_eq!(got, want, "{a:?} * {b:?}");
        }
    }
}

#[test]
fn sl2_engine_laws() {
    let env = sl2_env(4);
    env.precompute().unwrap();
    let mut recs = vec![
        env.unit_check(),
        env.ordered_product_check(),
        env.commutator_check(),
        env.associativity_check(4),
        env.bialgebra_check(),
        env.delta_lambda_check(),
    ];
    recs.extend(env.coalgebra_checks());
    recs.extend(env.antipode_checks());
    recs.extend(env.antipode_lambda_checks());
    recs.extend(env.lambda_recursion_checks());
    recs.extend(env.division_checks());
    assert_all(&recs);
    assert_eq!(env.summary().slice_dims[2], 10);
    assert_eq!(env.summary().slice_dims, vec![1, 4, 10, 20, 35]);
}

#[test]
fn ulie_straightening_confluent() {
    let env = sl2_env(3);
    assert_all(&[ulie_associativity_check(env.ulie(), 3)]);
}

#[test]
fn o0_is_not_associative_but_moufang_hopf() {
    let env = o0_env();
    assert!(!env.associativity_check(3).passed());
    let mut recs = env.moufang_hopf_check(3);
    recs.push(env.nalt_primitives_check());
    recs.push(env.commutator_check());
    recs.extend(env.lambda_recursion_checks());
    recs.extend(env.antipode_lambda_checks());
    recs.push(env.delta_lambda_check());
    recs.extend(env.division_checks());
    assert_all(&recs);
}

#[test]
fn rs_elements_plus_only() {
    let env = sl2_env(4);
    let mut recs = env.rs_plus_only_check(3);
    recs.push(env.rs_unit_check());
    assert_all(&recs);
    let o = o0_env();
    let mut recs = o.rs_plus_only_check(2);
    recs.push(o.rs_unit_check());
    assert_all(&recs);
}

#[test]
fn basic_examples() {
    let env = sl2_env(4);
    let e = env.parse_monomial("e").unwrap();
    let z = Elem::basis(e.clone());
    assert_eq!(env.lambda_mono(&Monomial::one()).unwrap(), Op::one());
    assert_eq!(env.apply(&env.lambda_mono(&e).unwrap(), &Elem::one()).unwrap(), z);
    assert_eq!(env.antipode(&z).unwrap(), z.neg());
    assert_eq!(env.counit(&z), qi(0));
    assert_eq!(env.counit(&Elem::one()), qi(1));
    let d = env.coproduct(&z).unwrap();
    let want: Lin<(Monomial, Monomial)> =
        [((e.clone(), Monomial::one()), qi(1)), ((Monomial::one(), e.clone()), qi(1))].into_iter().collect();
    assert_eq!(d, want);
    assert_eq!(env.left_divide(&Elem::one(), &z).unwrap(), z);
}

#[test]
fn budget_is_refused_not_truncated() {
    let env = sl2_env(2);
    let a = env.parse_monomial("e*f").unwrap();
    let b = env.parse_monomial("h").unwrap();
    assert_eq!(env.mul_mono(&a, &b), Err(EnvError::Budget { needed: 3, budget: 2 }));
    assert!(matches!(env.parse_monomial("e*f*h"), Err(EnvError::Budget { .. })));
    assert!(matches!(env.parse_monomial("h*e"), Err(EnvError::BadMonomial(_))));
    assert!(matches!(env.parse_monomial("q"), Err(EnvError::BadMonomial(_))));
}

/// U(O0) with one structure constant of the product table nudged.
struct Perturbed<'a>(&'a Envelope, Monomial, Monomial);

impl ProductAlgebra for Perturbed<'_> {
    type Key = Monomial;
    type Error = EnvError;
    fn product(&self, x: &Elem, y: &Elem) -> Result<Elem, EnvError> {
        let mut out = Elem::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let mut p = self.0.mul_mono(a, b)?;
                if (a, b) == (&self.1, &self.2) {
                    p.add_term(Monomial::one(), qi(1));
                }
                out.add_scaled(&p, &(ca * cb));
            }
        }
        Ok(out)
    }
    fn fits(&self, xs: &[&Elem]) -> bool {
        self.0.fits(xs)
    }
}

#[test]
fn nalt_detects_perturbed_product() {
    let env = o0_env();
    let gens: Vec<(String, Elem)> = (0..7).map(|a| (env.labels()[a].clone(), env.prim(a))).collect();
    let others: Vec<(String, Elem)> = env.basis_up_to(2).iter().map(|m| (format!("{m:?}"), Elem::basis(m.clone()))).collect();
    assert!(nalt_check(&env, &gens, &others).passed());
    let bad = Perturbed(&env, Monomial::letter(1), Monomial::letter(2));
    let rec = nalt_check(&bad, &gens, &others);
    assert!(!rec.passed());
    assert!(!rec.failures.is_empty());
}
