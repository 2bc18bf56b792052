//! Exact row reduction over a [`Field`].

use crate::scalar::{Field, Scalar};

/// An incrementally built row-echelon basis of a subspace of `F^len`.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    len: usize,
    /// Reduced rows, each normalized to 1 at its pivot.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(field: Field, len: usize) -> Echelon {
        Echelon {
            field,
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the residue is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.len, "vector length");
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (k, r) in row.iter().enumerate().skip(*pivot) {
                if !r.is_zero() {
                    v[k] = &v[k] - &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep older rows reduced at the new pivot so `reduce` is one pass
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let c = row[pivot].clone();
            for k in pivot..self.len {
                if !v[k].is_zero() {
                    row[k] = &row[k] - &(&c * &v[k]);
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Rank of a family of equal-length vectors.
pub fn rank<I>(field: Field, len: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut e = Echelon::new(field, len);
    for v in vectors {
        e.insert(v);
        if e.rank() == len {
            break;
        }
    }
    e.rank()
}
