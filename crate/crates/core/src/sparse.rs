//! Sparse linear combinations keyed by monomials (or tuples of them).

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::exact::{fmt_q, Q};

/// Weakly increasing sequence of basis indices; the empty sequence is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u16; 6]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Monomial(smallvec::smallvec![i as u16])
    }

    /// Sorts the indices (useful for commuting letters).
    pub fn sorted(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        Monomial(idx.into_iter().map(|i| i as u16).collect())
    }

    /// Keeps the given order; caller guarantees it is weakly increasing where that matters.
    pub fn from_slice(idx: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(idx))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn first(&self) -> Option<u16> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u16> {
        self.0.last().copied()
    }

    /// Drop the last letter.
    pub fn init(&self) -> Monomial {
        let mut v = self.0.clone();
        v.pop();
        Monomial(v)
    }

    /// Drop the first letter.
    pub fn tail(&self) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[1..]))
    }

    pub fn push(&self, x: u16) -> Monomial {
        let mut v = self.0.clone();
        v.push(x);
        Monomial(v)
    }

    pub fn prepend(&self, x: u16) -> Monomial {
        let mut v: SmallVec<[u16; 6]> = SmallVec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Product of commuting letters (merge of sorted lists).
    pub fn merge(&self, o: &Monomial) -> Monomial {
        let mut v: SmallVec<[u16; 6]> = SmallVec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            if self.0[i] <= o.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(o.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&o.0[j..]);
        Monomial(v)
    }

    /// All (sub, complement) splits by position; 2^deg entries.
    pub fn splits(&self) -> Vec<(Monomial, Monomial)> {
        let n = self.0.len();
        (0u32..(1 << n))
            .map(|mask| {
                let mut a = SmallVec::new();
                let mut b = SmallVec::new();
                for (k, &x) in self.0.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        a.push(x);
                    } else {
                        b.push(x);
                    }
                }
                (Monomial(a), Monomial(b))
            })
            .collect()
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|&i| labels.get(i as usize).cloned().unwrap_or_else(|| format!("x{i}"))).collect::<Vec<_>>().join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// All weakly increasing monomials in `n` letters of degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(Monomial::from_slice(cur));
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut Vec::new(), &mut out);
    out
}

/// All weakly increasing monomials of degree `<= max_deg`, degree-major.
pub fn monomials_up_to(n: usize, max_deg: usize) -> Vec<Monomial> {
    (0..=max_deg).flat_map(|d| monomials_of_degree(n, d)).collect()
}

/// Sparse linear combination with no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Lin<K: Ord>(BTreeMap<K, Q>);

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut l = Self::zero();
        l.add_term(k, c);
        l
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &Lin<K>, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &o.0 {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add_assign(&mut self, o: &Lin<K>) {
        for (k, v) in &o.0 {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, o: &Lin<K>) {
        for (k, v) in &o.0 {
            self.add_term(k.clone(), -v.clone());
        }
    }

    pub fn plus(&self, o: &Lin<K>) -> Lin<K> {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn minus(&self, o: &Lin<K>) -> Lin<K> {
        let mut r = self.clone();
        r.sub_assign(o);
        r
    }

    pub fn scaled(&self, c: &Q) -> Lin<K> {
        if c.is_zero() {
            return Self::zero();
        }
        Lin(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn neg(&self) -> Lin<K> {
        Lin(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    /// Apply a linear map given on basis keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<K2>) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible variant of [`Lin::map_linear`].
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<Lin<K2>, E>,
    ) -> Result<Lin<K2>, E> {
        let mut out = Lin::zero();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    pub fn retain(&mut self, f: impl FnMut(&K, &mut Q) -> bool) {
        self.0.retain(f);
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(it: I) -> Self {
        let mut l = Lin::zero();
        for (k, c) in it {
            l.add_term(k, c);
        }
        l
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(k, c)| format!("{}*{:?}", fmt_q(c), k)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Lin<Monomial> {
    pub fn one() -> Self {
        Lin::basis(Monomial::one())
    }

    pub fn max_degree(&self) -> usize {
        self.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of the empty monomial.
    pub fn constant(&self) -> Q {
        self.coeff(&Monomial::one())
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter().map(|(m, c)| format!("{} {}", fmt_q(c), m.render(labels))).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn pbw_counts() {
        // C(n+d-1, d) monomials of degree d in n letters.
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(3, 4).len(), 35);
        assert!(monomials_up_to(4, 3).iter().all(Monomial::is_sorted));
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut l = Lin::basis(Monomial::letter(1));
        l.add_term(Monomial::letter(1), qi(-1));
        assert!(l.is_zero());
    }

    #[test]
    fn merge_sorted() {
        let a = Monomial::sorted(vec![0, 2]);
        let b = Monomial::sorted(vec![1, 2]);
        assert_eq!(a.merge(&b), Monomial::sorted(vec![0, 1, 2, 2]));
        assert_eq!(a.splits().len(), 4);
    }
}
