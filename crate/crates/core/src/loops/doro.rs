//! Doro relations as permutation identities, and autotopisms of groups.

use crate::report::IdentityRecord;

use super::finite::{compose, identity_perm, invert, CheckMode, FiniteLoop};
use super::LoopError;

type Perm = Vec<u32>;

/// Relation name and its formula; `a⁻¹` is the inverse in E.
pub const DORO_RELATIONS: [(&str, &str); 13] = [
    ("units", "λ_e = ρ_e = τ_e = 1"),
    ("tau-lambda-rho", "τ_a λ_a ρ_a = 1"),
    ("lambda-aba", "λ_aba = λ_a λ_b λ_a"),
    ("rho-aba", "ρ_aba = ρ_a ρ_b ρ_a"),
    ("tau-aba", "τ_aba = τ_a τ_b τ_a"),
    ("lambda-ainv-b", "λ_{a⁻¹b} = τ_a λ_b ρ_a"),
    ("rho-ainv-b", "ρ_{a⁻¹b} = λ_a ρ_b τ_a"),
    ("tau-ainv-b", "τ_{a⁻¹b} = ρ_a τ_b λ_a"),
    ("lambda-b-ainv", "λ_{ba⁻¹} = ρ_a λ_b τ_a"),
    ("rho-b-ainv", "ρ_{ba⁻¹} = τ_a ρ_b λ_a"),
    ("tau-b-ainv", "τ_{ba⁻¹} = λ_a τ_b ρ_a"),
    ("action-definition", "λ_a x = ax, ρ_a x = xa, τ_a x = (a\\x)/a"),
    ("subloop", "Q is closed under product and inverses"),
];

struct Ops {
    lambda: Vec<Perm>,
    rho: Vec<Perm>,
    tau: Vec<Perm>,
}

fn c3(f: &[u32], g: &[u32], h: &[u32]) -> Perm {
    compose(f, &compose(g, h))
}

/// Every Doro relation, for all `a, b ∈ Q`, as an equality of permutations of `E`.
pub fn doro_action_check(e: &FiniteLoop, q: &[usize], mode: CheckMode) -> Result<Vec<IdentityRecord>, LoopError> {
    if let Some(&a) = q.iter().find(|&&a| !e.is_moufang_element(a, mode)) {
        return Err(LoopError::NotMoufang(e.label(a).to_string()));
    }
    let n = e.order();
    let mut inside = vec![false; n];
    for &a in q {
        inside[a] = true;
    }
    let ops = Ops {
        lambda: (0..n).map(|a| if inside[a] { e.left_perm(a) } else { Vec::new() }).collect(),
        rho: (0..n).map(|a| if inside[a] { e.right_perm(a) } else { Vec::new() }).collect(),
        tau: (0..n)
            .map(|a| if inside[a] { (0..n).map(|x| e.rdiv(e.ldiv(a, x), a) as u32).collect() } else { Vec::new() })
            .collect(),
    };
    let id = identity_perm(n);
    let closed = q.iter().all(|&a| inside[e.inverse(a)] && q.iter().all(|&b| inside[e.mul(a, b)]));
    let pairs: Vec<(usize, usize)> = q.iter().flat_map(|&a| q.iter().map(move |&b| (a, b))).collect();
    let name = |a: usize, b: usize| format!("a={} b={}", e.label(a), e.label(b));
    let m = |x, y| e.mul(x, y);
    let (l, r, t) = (&ops.lambda, &ops.rho, &ops.tau);
    let mut out = Vec::new();
    let ee = e.identity();
    out.push(IdentityRecord::single(
        DORO_RELATIONS[0].0,
        DORO_RELATIONS[0].1,
        (!inside[ee] || l[ee] != id || r[ee] != id || t[ee] != id).then(|| "e".to_string()),
    ));
    out.push(IdentityRecord::sweep(DORO_RELATIONS[1].0, DORO_RELATIONS[1].1, q, |&a| {
        (c3(&t[a], &l[a], &r[a]) != id).then(|| format!("a={}", e.label(a)))
    }));
    if !closed {
        out.push(IdentityRecord::single(DORO_RELATIONS[12].0, DORO_RELATIONS[12].1, Some("not closed".into())));
        return Ok(out);
    }
    type Rel<'a> = Box<dyn Fn(usize, usize) -> bool + Sync + Send + 'a>;
    let inv = |a| e.inverse(a);
    let rels: Vec<Rel> = vec![
        Box::new(|a, b| l[m(a, m(b, a))] == c3(&l[a], &l[b], &l[a])),
        Box::new(|a, b| r[m(a, m(b, a))] == c3(&r[a], &r[b], &r[a])),
        Box::new(|a, b| t[m(a, m(b, a))] == c3(&t[a], &t[b], &t[a])),
        Box::new(|a, b| l[m(inv(a), b)] == c3(&t[a], &l[b], &r[a])),
        Box::new(|a, b| r[m(inv(a), b)] == c3(&l[a], &r[b], &t[a])),
        Box::new(|a, b| t[m(inv(a), b)] == c3(&r[a], &t[b], &l[a])),
        Box::new(|a, b| l[m(b, inv(a))] == c3(&r[a], &l[b], &t[a])),
        Box::new(|a, b| r[m(b, inv(a))] == c3(&t[a], &r[b], &l[a])),
        Box::new(|a, b| t[m(b, inv(a))] == c3(&l[a], &t[b], &r[a])),
    ];
    for (k, rel) in rels.iter().enumerate() {
        let (id_name, formula) = DORO_RELATIONS[k + 2];
        out.push(IdentityRecord::sweep(id_name, formula, &pairs, |&(a, b)| (!rel(a, b)).then(|| name(a, b))));
    }
    // τ_a really is the inverse of λ_a ρ_a, so the action is by permutations of E.
    out.push(IdentityRecord::sweep(DORO_RELATIONS[11].0, DORO_RELATIONS[11].1, q, |&a| {
        (invert(&compose(&l[a], &r[a])) != t[a]).then(|| format!("a={}", e.label(a)))
    }));
    out.push(IdentityRecord::single(DORO_RELATIONS[12].0, DORO_RELATIONS[12].1, None));
    Ok(out)
}

/// `φ1(ab) = φ2(a)φ3(b)` for all `a, b`.
pub fn autotopism_check(g: &FiniteLoop, phi: [&[u32]; 3]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| phi[0][g.mul(a, b)] as usize == g.mul(phi[1][a] as usize, phi[2][b] as usize)))
}

/// The G×G picture of `Doro(G)_e` inside `Atp(G)` and the images of `r(a,b)`, `s(a,b)`.
pub fn gxg_autotopism_check(g: &FiniteLoop) -> Result<Vec<IdentityRecord>, LoopError> {
    if !g.is_group() {
        return Err(LoopError::NotGroup);
    }
    let n = g.order();
    let all: Vec<usize> = (0..n).collect();
    let lp = |a| g.left_perm(a);
    let rp = |a| g.right_perm(a);
    let id = identity_perm(n);
    let examples = IdentityRecord::sweep(
        "atp-examples",
        "(L_a, L_a, Id), (R_a, Id, R_a), (Id, R_a⁻¹, L_a) ∈ Atp(G)",
        &all,
        |&a| {
            let ok = autotopism_check(g, [&lp(a), &lp(a), &id])
                && autotopism_check(g, [&rp(a), &id, &rp(a)])
                && autotopism_check(g, [&id, &invert(&rp(a)), &lp(a)]);
            (!ok).then(|| format!("a={}", g.label(a)))
        },
    );
    let non_examples = IdentityRecord::sweep("atp-non-example", "(Id, Id, L_a) ∉ Atp(G) for a ≠ e", &all, |&a| {
        (a != g.identity() && autotopism_check(g, [&id, &id, &lp(a)])).then(|| format!("a={}", g.label(a)))
    });
    // (a,b) ↦ (L_b R_b⁻¹, L_b R_a⁻¹, R_b⁻¹ L_a)
    let embed = |a: usize, b: usize| -> [Perm; 3] {
        [
            compose(&lp(b), &invert(&rp(b))),
            compose(&lp(b), &invert(&rp(a))),
            compose(&invert(&rp(b)), &lp(a)),
        ]
    };
    let pairs: Vec<(usize, usize)> = all.iter().flat_map(|&a| all.iter().map(move |&b| (a, b))).collect();
    let into_atp = IdentityRecord::sweep("gxg-into-atp", "(L_b R_b⁻¹, L_b R_a⁻¹, R_b⁻¹ L_a) ∈ Atp(G)", &pairs, |&(a, b)| {
        let t = embed(a, b);
        (!autotopism_check(g, [&t[0], &t[1], &t[2]])).then(|| format!("a={} b={}", g.label(a), g.label(b)))
    });
    let quads: Vec<(usize, usize, usize, usize)> =
        pairs.iter().flat_map(|&(a, b)| pairs.iter().map(move |&(c, d)| (a, b, c, d))).collect();
    let hom = IdentityRecord::sweep("gxg-homomorphism", "(a,b)(c,d) ↦ image(a,b) ∘ image(c,d)", &quads, |&(a, b, c, d)| {
        let (x, y) = (embed(a, b), embed(c, d));
        let z = embed(g.mul(a, c), g.mul(b, d));
        (0..3).any(|i| compose(&x[i], &y[i]) != z[i]).then(|| format!("({},{}) ({},{})", g.label(a), g.label(b), g.label(c), g.label(d)))
    });
    let inv = |a| g.inverse(a);
    let images = IdentityRecord::sweep(
        "rs-images",
        "r(a,b) ↦ (Id, R⁻¹_h, L_h) = (h, e), s(a,b) ↦ (L_a R⁻¹_a, L_a, R⁻¹_a)(Id, R⁻¹_k, L_k) = (k, a); h = b⁻¹a⁻¹ba, k = b⁻¹a⁻²b",
        &pairs,
        |&(a, b)| {
            let h = g.mul(g.mul(g.mul(inv(b), inv(a)), b), a);
            let k = g.mul(g.mul(g.mul(inv(b), inv(a)), inv(a)), b);
            let r_img = [id.clone(), invert(&rp(h)), lp(h)];
            let s1 = [compose(&lp(a), &invert(&rp(a))), lp(a), invert(&rp(a))];
            let s2 = [id.clone(), invert(&rp(k)), lp(k)];
            let s_img: Vec<Perm> = (0..3).map(|i| compose(&s1[i], &s2[i])).collect();
            let ok = r_img.to_vec() == embed(h, g.identity()).to_vec() && s_img == embed(k, a).to_vec();
            (!ok).then(|| format!("a={} b={}", g.label(a), g.label(b)))
        },
    );
    Ok(vec![examples, non_examples, into_atp, hom, images])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::groups::symmetric3;

    #[test]
    fn group_satisfies_doro_relations() {
        let s3 = symmetric3();
        let all: Vec<usize> = (0..6).collect();
        let recs = doro_action_check(&s3.table, &all, CheckMode::Exhaustive).unwrap();
        assert!(recs.iter().all(|r| r.passed()), "{recs:?}");
    }

    #[test]
    fn gxg_checks_pass_for_s3() {
        let s3 = symmetric3();
        let recs = gxg_autotopism_check(&s3.table).unwrap();
        assert!(recs.iter().all(|r| r.passed()), "{recs:?}");
    }
}
