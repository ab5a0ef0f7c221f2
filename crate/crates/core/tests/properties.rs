use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use malcev_core::enveloping::{Elem, Envelope};
use malcev_core::exact::{fmt_q, parse_q, q, qi, Field, Fp, Matrix, QMatrix};
use malcev_core::fixtures;
use malcev_core::loops::{cyclic, FiniteLoop};
use malcev_core::malcev::{m2_table, o0, sl2, PlusMode};
use malcev_core::smash::{SElem, SmashAlgebra};
use malcev_core::sparse::{Lin, Monomial};

fn sl2_env() -> &'static Envelope {
    static E: OnceLock<Envelope> = OnceLock::new();
    E.get_or_init(|| Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, 4).unwrap())
}

fn o0_env() -> &'static Envelope {
    static E: OnceLock<Envelope> = OnceLock::new();
    E.get_or_init(|| Envelope::build(&Arc::new(o0()), PlusMode::MultiplicationAlgebra, 3).unwrap())
}

fn sl2_smash() -> &'static SmashAlgebra {
    static A: OnceLock<SmashAlgebra> = OnceLock::new();
    A.get_or_init(|| {
        let env = Arc::new(Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, 2).unwrap());
        let rep = m2_table(env.algebra()).unwrap();
        SmashAlgebra::build(env, &rep, 2).unwrap()
    })
}

fn s3_standard() -> &'static FiniteLoop {
    static L: OnceLock<FiniteLoop> = OnceLock::new();
    L.get_or_init(|| fixtures::smith_loop("s3-standard-f5").unwrap().3.table)
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 1..4)
}

/// Combination of the basis monomials of degree ≤ `max_deg`.
fn elem(env: &Envelope, max_deg: usize, t: &[(usize, i64)]) -> Elem {
    let ms = env.basis_up_to(max_deg);
    let mut out = Elem::zero();
    for &(i, c) in t {
        out.add_term(ms[i % ms.len()].clone(), qi(c));
    }
    out
}

fn selem(a: &SmashAlgebra, t: &[(usize, i64)]) -> SElem {
    let ks: Vec<_> = a.basis().iter().filter(|(x, b)| x.degree() <= 1 && b.degree() <= 1).cloned().collect();
    let mut out = SElem::zero();
    for &(i, c) in t {
        out.add_term(ks[i % ks.len()].clone(), qi(c));
    }
    out
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(c), prop::collection::vec(prop::collection::vec(-2i64..=2, c), r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity((cols, rows) in small_matrix()) {
        let m = QMatrix::from_rows((), cols, rows.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect()).unwrap();
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == qi(0)));
        }
    }

    #[test]
    fn inverses_over_q_and_fp((cols, rows) in small_matrix()) {
        let n = cols.min(rows.len());
        let sq: Vec<Vec<i64>> = rows.iter().take(n).map(|r| r[..n].to_vec()).collect();
        let m = QMatrix::from_rows((), n, sq.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect()).unwrap();
        match m.inverse() {
            Some(inv) => prop_assert!((&m * &inv).is_identity()),
            None => prop_assert!(m.rank() < n),
        }
        let f = Matrix::from_rows(7, n, sq.iter().map(|r| r.iter().map(|&v| Fp::new(v, 7)).collect()).collect()).unwrap();
        if let Some(inv) = f.inverse() {
            prop_assert!((&inv * &f).is_identity());
        }
    }

    #[test]
    fn rationals_print_and_parse(n in -1000i64..1000, d in 1i64..1000) {
        let x = q(n, d);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn prime_field_inverse(v in 1i64..1000) {
        let x = Fp::new(v, 1009);
        prop_assert_eq!(x.mul_elem(&x.inv_elem().unwrap()), Fp::one_in(1009));
    }

    #[test]
    fn loop_divisions(x in 0usize..150, y in 0usize..150, n in 1usize..9) {
        let t = s3_standard();
        prop_assert_eq!(t.mul(x, t.ldiv(x, y)), y);
        prop_assert_eq!(t.mul(t.rdiv(y, x), x), y);
        prop_assert_eq!(t.ldiv(x, t.mul(x, y)), y);
        let c = cyclic(n);
        let (a, b) = (x % n, y % n);
        prop_assert_eq!(c.table.mul(a, c.table.ldiv(a, b)), b);
    }

    #[test]
    fn sl2_envelope_is_a_bialgebra(u in terms(), v in terms(), w in terms()) {
        let env = sl2_env();
        let (u, v, w) = (elem(env, 2, &u), elem(env, 1, &v), elem(env, 1, &w));
        let uv = env.mul(&u, &v).unwrap();
        let lhs = env.coproduct(&uv).unwrap();
        let rhs = env.tensor_mul(&env.coproduct(&u).unwrap(), &env.coproduct(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(env.counit(&uv), env.counit(&u) * env.counit(&v));
        let s = env.antipode(&uv).unwrap();
        prop_assert_eq!(s, env.mul(&env.antipode(&v).unwrap(), &env.antipode(&u).unwrap()).unwrap());
        let left = env.mul(&uv, &w).unwrap();
        prop_assert_eq!(left, env.mul(&u, &env.mul(&v, &w).unwrap()).unwrap());
    }

    #[test]
    fn o0_primitives_in_nalt(a in terms(), u in terms(), v in terms()) {
        let env = o0_env();
        let a = elem(env, 1, &a).map_linear(|m| if m.degree() == 1 { Lin::basis(m.clone()) } else { Lin::zero() });
        let (u, v) = (elem(env, 1, &u), elem(env, 1, &v));
        let assoc = |x: &Elem, y: &Elem, z: &Elem| {
            env.mul(&env.mul(x, y).unwrap(), z).unwrap().minus(&env.mul(x, &env.mul(y, z).unwrap()).unwrap())
        };
        let first = assoc(&a, &u, &v);
        prop_assert_eq!(&first, &assoc(&u, &a, &v).neg());
        prop_assert_eq!(&first, &assoc(&u, &v, &a));
    }

    #[test]
    fn smash_is_a_bialgebra(u in terms(), v in terms()) {
        let a = sl2_smash();
        let (u, v) = (selem(a, &u), selem(a, &v));
        let uv = a.mul(&u, &v).unwrap();
        prop_assert_eq!(SmashAlgebra::counit(&uv), SmashAlgebra::counit(&u) * SmashAlgebra::counit(&v));
        let rhs = a.tensor_mul(&a.coproduct(&u).unwrap(), &a.coproduct(&v).unwrap()).unwrap();
        prop_assert_eq!(a.coproduct(&uv).unwrap(), rhs);
    }

    #[test]
    fn smash_left_division(u in terms(), v in terms()) {
        let a = sl2_smash();
        let (u, v) = (selem(a, &u), selem(a, &v));
        // Σ u1 (u2 \ v) = ε(u) v
        let d = a.coproduct(&u).unwrap();
        let mut acc = SElem::zero();
        for ((x, y), c) in d.iter() {
            let q = a.left_divide(&SElem::basis(y.clone()), &v).unwrap();
            acc.add_scaled(&a.mul(&SElem::basis(x.clone()), &q).unwrap(), c);
        }
        prop_assert_eq!(acc, v.scaled(&SmashAlgebra::counit(&u)));
    }
}

#[test]
fn monomial_of_degree_zero_is_the_unit() {
    assert!(Monomial::one().is_one());
}
