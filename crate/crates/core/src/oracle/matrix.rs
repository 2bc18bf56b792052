use std::fmt;

use crate::linalg::{rank, Echelon};
use crate::scalar::{Field, Scalar};

/// A square matrix with exact entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    dim: usize,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zero(field: Field, dim: usize) -> DenseMatrix {
        DenseMatrix {
            field,
            dim,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(field: Field, dim: usize) -> DenseMatrix {
        let mut m = Self::zero(field, dim);
        for k in 0..dim {
            m.set(k, k, field.one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Entries flattened row by row.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zero(self.field, self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> DenseMatrix {
        DenseMatrix {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions");
        DenseMatrix {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions");
        let n = self.dim;
        let mut out = Self::zero(self.field, n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.dim {
                    acc += self.get(r, c);
                }
                acc
            })
            .collect()
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} over {}", self.dim, self.dim, self.field)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of the matrices viewed as vectors of length `dim²`.
pub fn span_rank(mats: &[DenseMatrix]) -> usize {
    let Some(first) = mats.first() else {
        return 0;
    };
    let len = first.dim * first.dim;
    rank(first.field, len, mats.iter().map(|m| {
        assert_eq!(m.dim, first.dim, "matrix dimensions");
        m.to_vector()
    }))
}

/// Dimension of the algebra generated by `gens` (with identity), by closing
/// the span under right multiplication by the generators.
pub fn generated_algebra_dim(gens: &[DenseMatrix]) -> usize {
    let Some(first) = gens.first() else {
        return 0;
    };
    let (field, dim) = (first.field, first.dim);
    let mut span = Echelon::new(field, dim * dim);
    let mut queue = vec![DenseMatrix::identity(field, dim)];
    span.insert(queue[0].to_vector());
    while let Some(m) = queue.pop() {
        for g in gens {
            let p = m.mul(g);
            if span.insert(p.to_vector()) {
                queue.push(p);
            }
        }
    }
    span.rank()
}
