//! Incremental spans of vectors (flattened matrices) with exact coordinates.

use num_traits::Zero;

use crate::exact::{axpy, QMatrix, Q};

/// Row echelon set used to test linear independence incrementally.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -v[*p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        self.rows.push((p, r.iter().map(|x| x * &inv).collect()));
        true
    }
}

/// Coordinates with respect to a fixed linearly independent list.
#[derive(Clone, Debug)]
pub struct SpanCoords {
    basis: Vec<Vec<Q>>,
    rows: Vec<usize>,
    inv: QMatrix,
}

impl SpanCoords {
    /// `basis` must be linearly independent.
    pub fn new(basis: Vec<Vec<Q>>) -> Self {
        let k = basis.len();
        if k == 0 {
            return SpanCoords { basis, rows: Vec::new(), inv: QMatrix::zeros(0, 0, ()) };
        }
        let len = basis[0].len();
        let t = QMatrix::from_rows((), len, basis.clone()).expect("rows");
        let (_, rows) = t.rref();
        assert_eq!(rows.len(), k, "basis must be independent");
        let mut sub = QMatrix::zeros(k, k, ());
        for (i, &r) in rows.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                sub.set(i, j, b[r].clone());
            }
        }
        let inv = sub.inverse().expect("independent rows");
        SpanCoords { basis, rows, inv }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        let picked: Vec<Q> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.apply(&picked).expect("dim");
        let mut back = vec![Q::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            axpy(&mut back, ci, b);
        }
        (back == v).then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn coordinates_and_membership() {
        let b = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]];
        let mut e = Echelon::new();
        assert!(e.insert(&b[0]));
        assert!(e.insert(&b[1]));
        assert!(!e.insert(&[qi(2), qi(3), qi(1)]));
        let sc = SpanCoords::new(b);
        assert_eq!(sc.coords(&[qi(2), qi(3), qi(1)]), Some(vec![qi(2), qi(1)]));
        assert_eq!(sc.coords(&[qi(1), qi(0), qi(0)]), None);
    }
}
