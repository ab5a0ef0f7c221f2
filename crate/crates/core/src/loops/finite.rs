//! Finite loops given by Cayley tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::par;
use crate::report::IdentityRecord;

use super::LoopError;

/// Orders above this switch triple sweeps to seeded sampling.
pub const EXHAUSTIVE_LIMIT: usize = 2000;
/// Sampled `(x, y)` pairs per fixed element in sampling mode.
pub const DEFAULT_SAMPLES: usize = 4096;
pub const DEFAULT_SEED: u64 = 0x5eed_1007;

pub const MOUFANG_ANCHORS: [&str; 2] = ["a(x(ay)) = ((ax)a)y", "((xa)y)a = x(a(ya))"];

/// How sweeps over `(a, x, y)` triples are run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64, per_element: usize },
}

impl CheckMode {
    pub fn for_order(n: usize, seed: u64) -> Self {
        if n <= EXHAUSTIVE_LIMIT {
            CheckMode::Exhaustive
        } else {
            CheckMode::Sampled { seed, per_element: DEFAULT_SAMPLES }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CheckMode::Exhaustive => "exhaustive".into(),
            CheckMode::Sampled { seed, per_element } => format!("sampled: seed {seed}, {per_element} pairs per element"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LoopJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Outcome of [`loop_check`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LoopDiagnostics {
    pub is_loop: bool,
    pub identity: Option<usize>,
    pub diagnostics: Vec<String>,
}

/// Latin square with a two-sided identity; the first violated row or column is named.
pub fn loop_check(table: &[Vec<usize>]) -> LoopDiagnostics {
    let n = table.len();
    let mut diagnostics = Vec::new();
    if let Some(i) = table.iter().position(|r| r.len() != n) {
        diagnostics.push(format!("row {i} has {} entries, expected {n}", table[i].len()));
    } else if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| table[i][j] >= n) {
        diagnostics.push(format!("entry ({i},{j}) = {} out of range", table[i][j]));
    } else {
        let repeat = |get: &dyn Fn(usize) -> usize| -> Option<(usize, usize, usize)> {
            let mut seen = vec![usize::MAX; n];
            for k in 0..n {
                let v = get(k);
                if seen[v] != usize::MAX {
                    return Some((v, seen[v], k));
                }
                seen[v] = k;
            }
            None
        };
        for i in 0..n {
            if let Some((v, k1, k2)) = repeat(&|k| table[i][k]) {
                diagnostics.push(format!("row {i} repeats entry {v} at columns {k1} and {k2}"));
                break;
            }
        }
        for j in 0..n {
            if let Some((v, k1, k2)) = repeat(&|k| table[k][j]) {
                diagnostics.push(format!("column {j} repeats entry {v} at rows {k1} and {k2}"));
                break;
            }
        }
    }
    let identity = if diagnostics.is_empty() {
        (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
    } else {
        None
    };
    if diagnostics.is_empty() && identity.is_none() {
        diagnostics.push("no two-sided identity".into());
    }
    LoopDiagnostics { is_loop: diagnostics.is_empty(), identity, diagnostics }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLoop {
    n: usize,
    e: usize,
    labels: Vec<String>,
    table: Vec<u32>,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
}

/// The three one-sided nuclei and their intersection.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Nuclei {
    pub left: Vec<usize>,
    pub middle: Vec<usize>,
    pub right: Vec<usize>,
    pub na: Vec<usize>,
}

impl FiniteLoop {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, LoopError> {
        let n = table.len();
        if labels.len() != n {
            return Err(LoopError::Shape(format!("{} labels for order {n}", labels.len())));
        }
        let diag = loop_check(&table);
        let e = match diag.identity {
            Some(e) if diag.is_loop => e,
            _ => return Err(LoopError::NotLoop(diag.diagnostics.join("; "))),
        };
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let mut ldiv = vec![0u32; n * n];
        let mut rdiv = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let xy = flat[x * n + y] as usize;
                ldiv[x * n + xy] = y as u32;
                rdiv[xy * n + y] = x as u32;
            }
        }
        Ok(FiniteLoop { n, e, labels, table: flat, ldiv, rdiv })
    }

    pub fn from_json(j: &LoopJson) -> Result<Self, LoopError> {
        if j.order != j.table.len() {
            return Err(LoopError::Shape(format!("order {} but {} rows", j.order, j.table.len())));
        }
        Self::new(j.labels.clone(), j.table.clone())
    }

    pub fn to_json(&self) -> LoopJson {
        LoopJson { order: self.n, labels: self.labels.clone(), table: self.rows() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n.max(1)).take(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// `x\y`, the unique `z` with `xz = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.n + y] as usize
    }

    /// `y/x`, the unique `z` with `zx = y`.
    #[inline]
    pub fn rdiv(&self, y: usize, x: usize) -> usize {
        self.rdiv[y * self.n + x] as usize
    }

    /// Right inverse `x\e`; two-sided whenever `x` is a Moufang element.
    pub fn inverse(&self, x: usize) -> usize {
        self.ldiv(x, self.e)
    }

    fn pairs_for(&self, a: usize, mode: CheckMode) -> Vec<(usize, usize)> {
        let n = self.n;
        match mode {
            CheckMode::Exhaustive => (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect(),
            CheckMode::Sampled { seed, per_element } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (a as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                (0..per_element).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
            }
        }
    }

    /// First `(x, y)` breaking either Moufang law for `a`.
    pub fn moufang_witness(&self, a: usize, mode: CheckMode) -> Option<(usize, usize)> {
        let m = |x, y| self.mul(x, y);
        self.pairs_for(a, mode).into_iter().find(|&(x, y)| {
            m(a, m(x, m(a, y))) != m(m(m(a, x), a), y) || m(m(m(x, a), y), a) != m(x, m(a, m(y, a)))
        })
    }

    pub fn is_moufang_element(&self, a: usize, mode: CheckMode) -> bool {
        self.moufang_witness(a, mode).is_none()
    }

    /// M(E), the set of Moufang elements.
    pub fn moufang_elements(&self, mode: CheckMode) -> Vec<usize> {
        let all: Vec<usize> = (0..self.n).collect();
        par::filter_map(&all, |&a| self.is_moufang_element(a, mode).then_some(a))
    }

    /// `None` if `set` contains `e` and is closed under product and both divisions.
    pub fn subloop_witness(&self, set: &[usize]) -> Option<String> {
        let mut inside = vec![false; self.n];
        for &a in set {
            inside[a] = true;
        }
        if !inside[self.e] {
            return Some("identity missing".into());
        }
        for &a in set {
            for &b in set {
                for (name, v) in [("ab", self.mul(a, b)), ("a\\b", self.ldiv(a, b)), ("b/a", self.rdiv(b, a))] {
                    if !inside[v] {
                        return Some(format!("{name} leaves the set for a={} b={}", self.labels[a], self.labels[b]));
                    }
                }
            }
        }
        None
    }

    fn assoc_witness(&self, a: usize, mode: CheckMode, slot: usize) -> Option<(usize, usize)> {
        let m = |x, y| self.mul(x, y);
        self.pairs_for(a, mode).into_iter().find(|&(y, z)| match slot {
            0 => m(m(a, y), z) != m(a, m(y, z)),
            1 => m(m(y, a), z) != m(y, m(a, z)),
            _ => m(m(y, z), a) != m(y, m(z, a)),
        })
    }

    pub fn in_left_nucleus(&self, a: usize, mode: CheckMode) -> bool {
        self.assoc_witness(a, mode, 0).is_none()
    }

    pub fn in_nucleus(&self, a: usize, mode: CheckMode) -> bool {
        (0..3).all(|s| self.assoc_witness(a, mode, s).is_none())
    }

    pub fn nuclei(&self, mode: CheckMode) -> Nuclei {
        let all: Vec<usize> = (0..self.n).collect();
        let flags = par::map(&all, |&a| [0, 1, 2].map(|s| self.assoc_witness(a, mode, s).is_none()));
        let pick = |s: usize| all.iter().copied().filter(|&a| flags[a][s]).collect::<Vec<_>>();
        let na = all.iter().copied().filter(|&a| flags[a].iter().all(|&f| f)).collect();
        Nuclei { left: pick(0), middle: pick(1), right: pick(2), na }
    }

    /// First non-associative triple, if any.
    pub fn associativity_witness(&self, mode: CheckMode) -> Option<(usize, usize, usize)> {
        let all: Vec<usize> = (0..self.n).collect();
        par::find_first(&all, |&a| self.assoc_witness(a, mode, 0).map(|(y, z)| (a, y, z)))
    }

    pub fn is_group(&self) -> bool {
        self.associativity_witness(CheckMode::for_order(self.n, DEFAULT_SEED)).is_none()
    }

    /// Division laws `x\(xy) = y = x(x\y)` and `(yx)/x = y = (y/x)x`.
    pub fn division_check(&self, mode: CheckMode) -> IdentityRecord {
        let all: Vec<usize> = (0..self.n).collect();
        let mut rec = IdentityRecord::sweep("divisions", "x\\(xy) = y = x(x\\y), (yx)/x = y = (y/x)x", &all, |&x| {
            self.pairs_for(x, mode)
                .into_iter()
                .find(|&(y, _)| {
                    self.ldiv(x, self.mul(x, y)) != y
                        || self.mul(x, self.ldiv(x, y)) != y
                        || self.rdiv(self.mul(y, x), x) != y
                        || self.mul(self.rdiv(y, x), x) != y
                })
                .map(|(y, _)| format!("x={} y={}", self.labels[x], self.labels[y]))
        });
        rec.mode = Some(mode.describe());
        rec
    }

    /// Both Moufang laws for every element of `set`, with witnesses.
    pub fn moufang_check(&self, set: &[usize], mode: CheckMode) -> IdentityRecord {
        let mut rec = IdentityRecord::sweep("moufang-elements", &MOUFANG_ANCHORS.join(", "), set, |&a| {
            self.moufang_witness(a, mode)
                .map(|(x, y)| format!("a={} x={} y={}", self.labels[a], self.labels[x], self.labels[y]))
        });
        rec.mode = Some(mode.describe());
        rec
    }

    /// Left multiplication `x ↦ ax` as a permutation.
    pub fn left_perm(&self, a: usize) -> Vec<u32> {
        (0..self.n).map(|x| self.mul(a, x) as u32).collect()
    }

    /// Right multiplication `x ↦ xa` as a permutation.
    pub fn right_perm(&self, a: usize) -> Vec<u32> {
        (0..self.n).map(|x| self.mul(x, a) as u32).collect()
    }
}

/// `(f∘g)(x) = f(g(x))`.
pub fn compose(f: &[u32], g: &[u32]) -> Vec<u32> {
    g.iter().map(|&x| f[x as usize]).collect()
}

pub fn invert(f: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; f.len()];
    for (i, &v) in f.iter().enumerate() {
        out[v as usize] = i as u32;
    }
    out
}

pub fn identity_perm(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn cyclic_is_loop() {
        let d = loop_check(&zn(4));
        assert!(d.is_loop);
        assert_eq!(d.identity, Some(0));
    }

    #[test]
    fn repeated_row_entry_named() {
        let mut t = zn(4);
        t[2][3] = t[2][0];
        let d = loop_check(&t);
        assert!(!d.is_loop);
        assert!(d.diagnostics[0].starts_with("row 2 repeats"), "{:?}", d.diagnostics);
    }

    #[test]
    fn latin_square_without_identity() {
        // 0 is only a left identity
        let t = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        let d = loop_check(&t);
        assert!(!d.is_loop);
        assert_eq!(d.diagnostics, vec!["no two-sided identity".to_string()]);
    }

    #[test]
    fn group_divisions_and_self_division() {
        let l = FiniteLoop::new((0..5).map(|i| i.to_string()).collect(), zn(5)).unwrap();
        for x in 0..5 {
            assert_eq!(l.ldiv(x, x), 0);
            for y in 0..5 {
                assert_eq!(l.ldiv(x, y), (y + 5 - x) % 5);
            }
        }
        assert!(l.division_check(CheckMode::Exhaustive).passed());
        assert_eq!(l.moufang_elements(CheckMode::Exhaustive).len(), 5);
        assert_eq!(l.nuclei(CheckMode::Exhaustive).na.len(), 5);
    }

    #[test]
    fn sampling_only_above_limit() {
        assert_eq!(CheckMode::for_order(EXHAUSTIVE_LIMIT, 1), CheckMode::Exhaustive);
        assert!(matches!(CheckMode::for_order(EXHAUSTIVE_LIMIT + 1, 1), CheckMode::Sampled { .. }));
    }
}
