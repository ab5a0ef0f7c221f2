//! Loops `E_e × Q` built from action data `r(a,b)`, `s(a,b)` on an F_p-vector space.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{Field, Fp, Matrix};
use crate::par;
use crate::report::IdentityRecord;

use super::finite::{CheckMode, FiniteLoop, LoopJson, DEFAULT_SEED};
use super::groups::{FpMatrix, GroupRep};
use super::LoopError;

pub const SMITH_ANCHOR: &str = "(x,a)(y,b) = (r(a,b)x + s(a,b)y, ab)";
pub const RS_ANCHOR: &str = "r(a,b)x = ((x·0_a)·0_b)/0_ab, s(a,b)y = (0_a·(y·0_b))/0_ab";
pub const RELATIVE_EQUATION_ANCHORS: [&str; 4] = [
    "r(a,c(bc)) = r((ac)b,c) r(ac,b) r(a,c)",
    "r((ac)b,c) s(ac,b) = s(a,c(bc)) s(c,bc) r(b,c)",
    "s(c,a(cb)) r(a,cb) = r((ca)c,b) r(a,c) s(c,a)",
    "s((ca)c,b) = s(c,a(cb)) s(a,cb) s(c,b)",
];
pub const GROUP_REP_ANCHOR: &str = "(Σ v⊗w, a)(Σ v'⊗w', b) = (Σ b⁻¹a⁻¹ba v⊗w + Σ b⁻¹a⁻²b v'⊗a w', ab)";

/// Pair sweeps over fibers switch to sampling above this many instances.
const PAIR_LIMIT: usize = 1 << 21;

/// One non-identity entry of the action data; labels refer to the base loop.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MapEntry {
    pub a: String,
    pub b: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<i64>>>,
}

/// Action data as JSON; unlisted maps are the identity.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtensionJson {
    pub base: LoopJson,
    pub p: u64,
    pub dim: usize,
    pub maps: Vec<MapEntry>,
}

/// Action data over a base loop: `r(a,b)`, `s(a,b)` stored at `a·n + b`.
#[derive(Clone, Debug)]
pub struct LoopExtension {
    base: Arc<FiniteLoop>,
    p: u64,
    dim: usize,
    r: Vec<FpMatrix>,
    s: Vec<FpMatrix>,
}

impl LoopExtension {
    /// Checks shapes, invertibility and `r(e,b) = r(a,e) = s(e,b) = 1`.
    pub fn new(base: Arc<FiniteLoop>, p: u64, dim: usize, r: Vec<FpMatrix>, s: Vec<FpMatrix>) -> Result<Self, LoopError> {
        let n = base.order();
        if r.len() != n * n || s.len() != n * n {
            return Err(LoopError::Shape(format!("expected {} matrices for r and for s", n * n)));
        }
        if r.iter().chain(&s).any(|m| m.rows() != dim || m.cols() != dim || m.ctx() != p) {
            return Err(LoopError::Shape(format!("every matrix must be {dim}×{dim} over F_{p}")));
        }
        let ext = LoopExtension { base, p, dim, r, s };
        ext.validate()?;
        Ok(ext)
    }

    fn validate(&self) -> Result<(), LoopError> {
        let b = &self.base;
        let e = b.identity();
        for x in 0..b.order() {
            for (name, m) in [("r(e,b)", self.r(e, x)), ("r(a,e)", self.r(x, e)), ("s(e,b)", self.s(e, x))] {
                if !m.is_identity() {
                    return Err(LoopError::BadExtension(format!("{name} ≠ 1 at {}", b.label(x))));
                }
            }
        }
        for a in 0..b.order() {
            for c in 0..b.order() {
                if self.dim > 0 && (self.r(a, c).inverse().is_none() || self.s(a, c).inverse().is_none()) {
                    return Err(LoopError::BadExtension(format!("singular map at ({},{})", b.label(a), b.label(c))));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(j: &ExtensionJson) -> Result<Self, LoopError> {
        let p = crate::exact::check_prime(j.p)?;
        let base = Arc::new(FiniteLoop::from_json(&j.base)?);
        let n = base.order();
        let one = Matrix::identity(j.dim, p);
        let (mut r, mut s) = (vec![one.clone(); n * n], vec![one; n * n]);
        let mat = |rows: &Vec<Vec<i64>>| -> Result<FpMatrix, LoopError> {
            let rows = rows.iter().map(|row| row.iter().map(|&v| Fp::new(v, p)).collect()).collect();
            Ok(Matrix::from_rows(p, j.dim, rows)?)
        };
        for m in &j.maps {
            let a = base.index_of(&m.a).ok_or_else(|| LoopError::UnknownLabel(m.a.clone()))?;
            let b = base.index_of(&m.b).ok_or_else(|| LoopError::UnknownLabel(m.b.clone()))?;
            if let Some(x) = &m.r {
                r[a * n + b] = mat(x)?;
            }
            if let Some(x) = &m.s {
                s[a * n + b] = mat(x)?;
            }
        }
        Self::new(base, p, j.dim, r, s)
    }

    pub fn to_json(&self) -> ExtensionJson {
        let b = &self.base;
        let rows = |m: &FpMatrix| -> Vec<Vec<i64>> {
            (0..m.rows()).map(|i| (0..m.cols()).map(|k| m.get(i, k).value() as i64).collect()).collect()
        };
        let mut maps = Vec::new();
        for x in 0..b.order() {
            for y in 0..b.order() {
                let (r, s) = (self.r(x, y), self.s(x, y));
                if !r.is_identity() || !s.is_identity() {
                    maps.push(MapEntry {
                        a: b.label(x).into(),
                        b: b.label(y).into(),
                        r: (!r.is_identity()).then(|| rows(r)),
                        s: (!s.is_identity()).then(|| rows(s)),
                    });
                }
            }
        }
        ExtensionJson { base: b.to_json(), p: self.p, dim: self.dim, maps }
    }

    pub fn base(&self) -> &Arc<FiniteLoop> {
        &self.base
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r(&self, a: usize, b: usize) -> &FpMatrix {
        &self.r[a * self.base.order() + b]
    }

    pub fn s(&self, a: usize, b: usize) -> &FpMatrix {
        &self.s[a * self.base.order() + b]
    }

    /// Same data with `r(a,b)` or `s(a,b)` replaced; invariants are not re-checked.
    pub fn with_map(&self, which_s: bool, a: usize, b: usize, m: FpMatrix) -> Self {
        let mut out = self.clone();
        let i = a * self.base.order() + b;
        if which_s {
            out.s[i] = m;
        } else {
            out.r[i] = m;
        }
        out
    }

    pub fn fiber_size(&self) -> usize {
        (self.p as usize).pow(self.dim as u32)
    }

    /// The four operator equations characterizing relative representations.
    pub fn relative_equations_check(&self) -> Result<Vec<IdentityRecord>, LoopError> {
        let q = &self.base;
        let mode = CheckMode::for_order(q.order(), DEFAULT_SEED);
        if let Some(a) = (0..q.order()).find(|&a| !q.is_moufang_element(a, mode)) {
            return Err(LoopError::NotMoufang(q.label(a).to_string()));
        }
        let n = q.order();
        let triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
        let m = |x, y| q.mul(x, y);
        let (r, s) = (|a, b| self.r(a, b), |a, b| self.s(a, b));
        let eq = |k: usize, a: usize, b: usize, c: usize| -> bool {
            match k {
                0 => *r(a, m(c, m(b, c))) == &(r(m(m(a, c), b), c) * r(m(a, c), b)) * r(a, c),
                1 => {
                    &*r(m(m(a, c), b), c) * s(m(a, c), b)
                        == &(s(a, m(c, m(b, c))) * s(c, m(b, c))) * r(b, c)
                }
                2 => &*s(c, m(a, m(c, b))) * r(a, m(c, b)) == &(r(m(m(c, a), c), b) * r(a, c)) * s(c, a),
                _ => *s(m(m(c, a), c), b) == &(s(c, m(a, m(c, b))) * s(a, m(c, b))) * s(c, b),
            }
        };
        Ok((0..4)
            .map(|k| {
                IdentityRecord::sweep(&format!("relative-equation-{}", k + 1), RELATIVE_EQUATION_ANCHORS[k], &triples, |&(a, b, c)| {
                    (!eq(k, a, b, c)).then(|| format!("a={} b={} c={}", q.label(a), q.label(b), q.label(c)))
                })
            })
            .collect())
    }
}

/// Fiber vectors are coded base `p`, least significant coordinate first.
fn decode(mut code: usize, p: u64, dim: usize) -> Vec<Fp> {
    (0..dim)
        .map(|_| {
            let v = code % p as usize;
            code /= p as usize;
            Fp::new(v as i64, p)
        })
        .collect()
}

fn encode(v: &[Fp], p: u64) -> usize {
    v.iter().rev().fold(0usize, |acc, x| acc * p as usize + x.value() as usize)
}

fn fiber_label(v: &[Fp]) -> String {
    v.iter().map(|x| x.value().to_string()).collect::<Vec<_>>().join(",")
}

/// The loop `E = E_e × Q` with its fiber coordinates.
#[derive(Clone, Debug)]
pub struct SmithLoop {
    pub ext: LoopExtension,
    pub table: FiniteLoop,
}

impl SmithLoop {
    /// Index of `(x, a)`.
    pub fn element(&self, x: usize, a: usize) -> usize {
        a * self.ext.fiber_size() + x
    }

    /// `(x, a)` of an index.
    pub fn coords(&self, u: usize) -> (usize, usize) {
        (u % self.ext.fiber_size(), u / self.ext.fiber_size())
    }

    pub fn zero(&self, a: usize) -> usize {
        self.element(0, a)
    }

    /// The embedded copy `0 × Q`.
    pub fn base_copy(&self) -> Vec<usize> {
        (0..self.ext.base.order()).map(|a| self.zero(a)).collect()
    }

    pub fn project(&self, u: usize) -> usize {
        self.coords(u).1
    }

    fn add_codes(&self, x: usize, y: usize, sign: i64) -> usize {
        let (p, d) = (self.ext.p, self.ext.dim);
        let (vx, vy) = (decode(x, p, d), decode(y, p, d));
        let v: Vec<Fp> = vx.iter().zip(&vy).map(|(a, b)| Fp::new(a.value() as i64 + sign * b.value() as i64, p)).collect();
        encode(&v, p)
    }

    /// `⊞((x,a),(y,a)) = (x+y, a)`; `None` off the fibered product.
    pub fn boxplus(&self, u: usize, v: usize) -> Option<usize> {
        let ((x, a), (y, b)) = (self.coords(u), self.coords(v));
        (a == b).then(|| self.element(self.add_codes(x, y, 1), a))
    }

    /// `⊟(x,a) = (-x,a)`.
    pub fn boxminus(&self, u: usize) -> usize {
        let (x, a) = self.coords(u);
        self.element(self.add_codes(0, x, -1), a)
    }

    /// The comma-category abelian group axioms for `(E → Q, ⊞, ⊟, 0)`.
    pub fn comma_check(&self, seed: u64) -> Vec<IdentityRecord> {
        let q = &self.ext.base;
        let (n, f) = (q.order(), self.ext.fiber_size());
        let e = &self.table;
        let all_quads = n * n * f.pow(4);
        let items: Vec<(usize, usize, usize, usize, usize, usize)> = if all_quads <= PAIR_LIMIT {
            let mut out = Vec::with_capacity(all_quads);
            for a in 0..n {
                for b in 0..n {
                    for x in 0..f {
                        for y in 0..f {
                            for x2 in 0..f {
                                for y2 in 0..f {
                                    out.push((a, b, x, y, x2, y2));
                                }
                            }
                        }
                    }
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..PAIR_LIMIT / 16)
                .map(|_| {
                    let mut g = |m: usize| rng.gen_range(0..m);
                    (g(n), g(n), g(f), g(f), g(f), g(f))
                })
                .collect()
        };
        let mode = if all_quads <= PAIR_LIMIT { "exhaustive".to_string() } else { format!("sampled: seed {seed}, {} instances", items.len()) };
        let el = |x, a| self.element(x, a);
        let hom = IdentityRecord::sweep(
            "boxplus-homomorphism",
            "⊞((x,a)(x',b), (y,a)(y',b)) = ⊞((x,a),(y,a)) ⊞((x',b),(y',b))",
            &items,
            |&(a, b, x, y, x2, y2)| {
                let l = self.boxplus(e.mul(el(x, a), el(x2, b)), e.mul(el(y, a), el(y2, b)));
                let r = e.mul(self.boxplus(el(x, a), el(y, a))?, self.boxplus(el(x2, b), el(y2, b))?);
                (l != Some(r)).then(|| format!("a={} b={} x={x} y={y} x'={x2} y'={y2}", q.label(a), q.label(b)))
            },
        )
        .with_mode(mode.clone());
        let pairs: Vec<(usize, usize)> = (0..e.order()).flat_map(|u| (0..e.order()).map(move |v| (u, v))).collect();
        let pairs = if pairs.len() <= PAIR_LIMIT { pairs } else { pairs.into_iter().step_by(7).collect() };
        let morph = IdentityRecord::sweep(
            "projection-boxminus-zero",
            "π(uv) = π(u)π(v), ⊟(uv) = ⊟(u)⊟(v), 0_a 0_b = 0_ab",
            &pairs,
            |&(u, v)| {
                let uv = e.mul(u, v);
                let ok = self.project(uv) == q.mul(self.project(u), self.project(v))
                    && self.boxminus(uv) == e.mul(self.boxminus(u), self.boxminus(v))
                    && e.mul(self.zero(self.project(u)), self.zero(self.project(v))) == self.zero(q.mul(self.project(u), self.project(v)));
                (!ok).then(|| format!("u={} v={}", e.label(u), e.label(v)))
            },
        );
        let fiber_items: Vec<(usize, usize, usize)> = (0..n).flat_map(|a| (0..f).flat_map(move |x| (0..f).map(move |y| (a, x, y)))).collect();
        let group = IdentityRecord::sweep(
            "fiber-abelian-group",
            "x ⊞ y = y ⊞ x, x ⊞ 0_a = x, x ⊞ ⊟x = 0_a, (x ⊞ y) ⊞ z = x ⊞ (y ⊞ z)",
            &fiber_items,
            |&(a, x, y)| {
                let (u, v) = (el(x, a), el(y, a));
                let z = el((x + y) % f, a);
                let ok = self.boxplus(u, v) == self.boxplus(v, u)
                    && self.boxplus(u, self.zero(a)) == Some(u)
                    && self.boxplus(u, self.boxminus(u)) == Some(self.zero(a))
                    && self.boxplus(self.boxplus(u, v).unwrap(), z) == self.boxplus(u, self.boxplus(v, z).unwrap());
                (!ok).then(|| format!("a={} x={x} y={y}", q.label(a)))
            },
        );
        vec![hom, morph, group]
    }

    /// Recover `r(a,b)`, `s(a,b)` from the Cayley table alone, checking linearity.
    pub fn extract_action(&self) -> Result<LoopExtension, LoopError> {
        let q = &self.ext.base;
        let (n, f, p, d) = (q.order(), self.ext.fiber_size(), self.ext.p, self.ext.dim);
        let e = &self.table;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let maps = par::map(&pairs, |&(a, b)| -> Result<(FpMatrix, FpMatrix), LoopError> {
            let (za, zb, zab) = (self.zero(a), self.zero(b), self.zero(q.mul(a, b)));
            let r_of = |x: usize| self.coords(e.rdiv(e.mul(e.mul(self.element(x, q.identity()), za), zb), zab)).0;
            let s_of = |x: usize| self.coords(e.rdiv(e.mul(za, e.mul(self.element(x, q.identity()), zb)), zab)).0;
            let mut out = Vec::new();
            for map in [&r_of as &dyn Fn(usize) -> usize, &s_of] {
                let cols: Vec<Vec<Fp>> = (0..d)
                    .map(|i| {
                        let mut unit = vec![Fp::zero_in(p); d];
                        unit[i] = Fp::one_in(p);
                        decode(map(encode(&unit, p)), p, d)
                    })
                    .collect();
                let m = Matrix::from_columns(p, d, &cols);
                for x in 0..f {
                    let want = m.apply(&decode(x, p, d)).map_err(LoopError::Exact)?;
                    if encode(&want, p) != map(x) {
                        return Err(LoopError::BadExtension(format!("action at ({},{}) is not linear", q.label(a), q.label(b))));
                    }
                }
                out.push(m);
            }
            let s = out.pop().expect("two maps");
            Ok((out.pop().expect("two maps"), s))
        });
        let mut r = Vec::with_capacity(n * n);
        let mut s = Vec::with_capacity(n * n);
        for m in maps {
            let (rm, sm) = m?;
            r.push(rm);
            s.push(sm);
        }
        LoopExtension::new(q.clone(), p, d, r, s)
    }

    /// Extract the action from the table, rebuild, and compare both the data and the table.
    pub fn round_trip_check(&self) -> IdentityRecord {
        let failure = match self.extract_action() {
            Err(e) => Some(e.to_string()),
            Ok(back) => {
                let n = self.ext.base.order();
                let bad = (0..n * n).find(|&i| back.r[i] != self.ext.r[i] || back.s[i] != self.ext.s[i]);
                match bad {
                    Some(i) => Some(format!("extracted map differs at ({},{})", self.ext.base.label(i / n), self.ext.base.label(i % n))),
                    None => match smith_extension(&back) {
                        Err(e) => Some(e.to_string()),
                        Ok(again) => (again.table != self.table).then(|| "rebuilt Cayley table differs".to_string()),
                    },
                }
            }
        };
        let mut rec = IdentityRecord::single("smith-round-trip", RS_ANCHOR, failure);
        rec.instances_checked = (self.ext.base.order() * self.ext.base.order()) as u64;
        rec
    }
}

/// Build `E_e × Q` with the product `(x,a)(y,b) = (r(a,b)x + s(a,b)y, ab)`.
pub fn smith_extension(ext: &LoopExtension) -> Result<SmithLoop, LoopError> {
    let q = &ext.base;
    let (n, f, p, d) = (q.order(), ext.fiber_size(), ext.p, ext.dim);
    let vecs: Vec<Vec<Fp>> = (0..f).map(|x| decode(x, p, d)).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    // image codes of r(a,b), s(a,b) on every fiber vector
    let images = par::map(&pairs, |&(a, b)| {
        let img = |m: &FpMatrix| -> Vec<Vec<Fp>> { vecs.iter().map(|v| m.apply(v).expect("shape")).collect() };
        (img(ext.r(a, b)), img(ext.s(a, b)))
    });
    let size = n * f;
    let rows: Vec<usize> = (0..size).collect();
    let table = par::map(&rows, |&u| {
        let (x, a) = (u % f, u / f);
        let mut row = Vec::with_capacity(size);
        for v in 0..size {
            let (y, b) = (v % f, v / f);
            let (ri, si) = &images[a * n + b];
            let sum: Vec<Fp> = ri[x].iter().zip(&si[y]).map(|(s, t)| s.add_elem(t)).collect();
            row.push(q.mul(a, b) * f + encode(&sum, p));
        }
        row
    });
    let labels = (0..size).map(|u| format!("({};{})", fiber_label(&vecs[u % f]), q.label(u / f))).collect();
    let table = FiniteLoop::new(labels, table)?;
    Ok(SmithLoop { ext: ext.clone(), table })
}

/// `r(a,b) = ρ_V(b⁻¹a⁻¹ba) ⊗ 1`, `s(a,b) = ρ_V(b⁻¹a⁻²b) ⊗ ρ_W(a)` on `V ⊗ W`.
pub fn group_rep_action(v: &GroupRep, w: &GroupRep) -> Result<LoopExtension, LoopError> {
    if v.group() != w.group() || v.p() != w.p() {
        return Err(LoopError::Shape("representations over different groups or fields".into()));
    }
    let g = v.group().clone();
    if !g.is_group() {
        return Err(LoopError::NotGroup);
    }
    let (n, p) = (g.order(), v.p());
    let inv = |a| g.inverse(a);
    let iw = Matrix::identity(w.dim(), p);
    let mut r = Vec::with_capacity(n * n);
    let mut s = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let comm = g.mul(g.mul(inv(b), inv(a)), g.mul(b, a));
            let conj = g.mul(g.mul(inv(b), g.mul(inv(a), inv(a))), b);
            r.push(v.of(comm).kron(&iw));
            s.push(v.of(conj).kron(w.of(a)));
        }
    }
    LoopExtension::new(g, p, v.dim() * w.dim(), r, s)
}

/// The loop `V ⊗ W × G`.
pub fn group_rep_loop(v: &GroupRep, w: &GroupRep) -> Result<SmithLoop, LoopError> {
    smith_extension(&group_rep_action(v, w)?)
}

/// Brute-force comparison of the loop product with the closed formula on `V ⊗ W × G`.
pub fn group_rep_product_check(e: &SmithLoop, v: &GroupRep, w: &GroupRep) -> IdentityRecord {
    let g = e.ext.base.clone();
    let (p, d) = (e.ext.p, e.ext.dim);
    let f = e.ext.fiber_size();
    let items: Vec<(usize, usize)> = (0..e.table.order()).flat_map(|u| (0..e.table.order()).map(move |x| (u, x))).collect();
    let items: Vec<(usize, usize)> = if items.len() <= PAIR_LIMIT { items } else { items.into_iter().step_by(11).collect() };
    IdentityRecord::sweep("group-rep-product", GROUP_REP_ANCHOR, &items, |&(u, x)| {
        let ((cx, a), (cy, b)) = (e.coords(u), e.coords(x));
        let inv = |z| g.inverse(z);
        let h1 = g.mul(g.mul(g.mul(inv(b), inv(a)), b), a);
        let h2 = g.mul(g.mul(g.mul(inv(b), inv(a)), inv(a)), b);
        let m1 = v.of(h1).kron(&Matrix::identity(w.dim(), p));
        let m2 = v.of(h2).kron(w.of(a));
        let t1 = m1.apply(&decode(cx, p, d)).expect("shape");
        let t2 = m2.apply(&decode(cy, p, d)).expect("shape");
        let sum: Vec<Fp> = t1.iter().zip(&t2).map(|(s, t)| s.add_elem(t)).collect();
        let want = g.mul(a, b) * f + encode(&sum, p);
        (e.table.mul(u, x) != want).then(|| format!("u={} v={}", e.table.label(u), e.table.label(x)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::groups::{cyclic, symmetric3};

    #[test]
    fn zero_fiber_gives_base() {
        let s3 = symmetric3();
        let v = GroupRep::trivial(&s3, 0, 3).unwrap();
        let e = group_rep_loop(&v, &v).unwrap();
        assert_eq!(e.table.order(), 6);
        assert_eq!(e.table.rows(), s3.table.rows());
    }

    #[test]
    fn identity_action_on_abelian_base_is_direct_product() {
        let c = cyclic(3);
        let n = 3;
        let one = Matrix::identity(1, 2);
        let ext = LoopExtension::new(c.table.clone(), 2, 1, vec![one.clone(); n * n], vec![one; n * n]).unwrap();
        let e = smith_extension(&ext).unwrap();
        assert!(e.table.is_group());
        assert!(ext.relative_equations_check().unwrap().iter().all(|r| r.passed()));
        // commutative since both factors are
        let t = &e.table;
        assert!((0..6).all(|u| (0..6).all(|v| t.mul(u, v) == t.mul(v, u))));
    }

    #[test]
    fn unit_violation_rejected() {
        let c = cyclic(2);
        let one = Matrix::identity(1, 3);
        let two = one.scale(&Fp::new(2, 3));
        let r = vec![one.clone(), one.clone(), one.clone(), one.clone()];
        let s = vec![two, one.clone(), one.clone(), one];
        assert!(matches!(LoopExtension::new(c.table.clone(), 3, 1, r, s), Err(LoopError::BadExtension(_))));
    }

    #[test]
    fn codes_round_trip() {
        for x in 0..27 {
            assert_eq!(encode(&decode(x, 3, 3), 3), x);
        }
    }
}
