//! Brute-force realization of the scheme as explicit matrices.
//!
//! Nothing here uses the closed-form structure constants: relations are read
//! off point coordinates, `A_g` and `E_g*` are built entry by entry, and
//! every algebra fact is recomputed by matrix products and exact ranks.

mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use matrix::{generated_algebra_dim, span_rank, DenseMatrix};

use crate::algebra::{AlgebraElt, B1Elt, BasisTriple};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::scheme::{Mask, SchemeSpec};

/// Default bound on `|X|`.
pub const DEFAULT_CAP: usize = 200;

/// A point of `X = U_1 × … × U_n`; coordinate `a` lies in `[0, |U_a|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<u64>);

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All points in mixed-radix order, the first coordinate most significant.
pub fn points(spec: &SchemeSpec, cap: usize) -> Result<Vec<Point>> {
    let count = spec.point_count();
    if count > cap as u128 {
        return Err(Error::OracleCap { points: count, cap });
    }
    let mut out = vec![Point(vec![0; spec.n()])];
    for (a, &size) in spec.sizes().iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..size).map(move |v| {
                    let mut q = p.clone();
                    q.0[a] = v;
                    q
                })
            })
            .collect();
    }
    Ok(out)
}

/// The mask of coordinates where `x` and `y` differ.
pub fn relation(spec: &SchemeSpec, x: &Point, y: &Point) -> Mask {
    let n = spec.n();
    let mut bits = 0u32;
    for a in 0..n {
        if x.0[a] != y.0[a] {
            bits |= 1 << a;
        }
    }
    spec.mask(bits).expect("width matches the scheme")
}

/// The scheme realized on its point set, relative to a base point `x`.
#[derive(Debug, Clone)]
pub struct Oracle {
    spec: Arc<SchemeSpec>,
    points: Vec<Point>,
    base: usize,
    /// `relations[r * |X| + c]` is the relation between points `r` and `c`.
    relations: Vec<Mask>,
}

impl Oracle {
    /// Oracle with base point `(0, …, 0)` and the default cap.
    pub fn new(spec: &Arc<SchemeSpec>) -> Result<Oracle> {
        Self::with_base(spec, None, DEFAULT_CAP)
    }

    /// Oracle with an explicit base point (default all zeros) and cap.
    pub fn with_base(spec: &Arc<SchemeSpec>, base: Option<Point>, cap: usize) -> Result<Oracle> {
        let points = points(spec, cap)?;
        let base = base.unwrap_or_else(|| Point(vec![0; spec.n()]));
        let base = points
            .iter()
            .position(|p| *p == base)
            .ok_or_else(|| Error::BadPoint(base.0.clone()))?;
        let mut relations = Vec::with_capacity(points.len() * points.len());
        for y in &points {
            for z in &points {
                relations.push(relation(spec, y, z));
            }
        }
        Ok(Oracle {
            spec: spec.clone(),
            points,
            base,
            relations,
        })
    }

    /// The same scheme seen from another base point.
    pub fn rebased(&self, base: &Point) -> Result<Oracle> {
        let base = self
            .points
            .iter()
            .position(|p| p == base)
            .ok_or_else(|| Error::BadPoint(base.0.clone()))?;
        Ok(Oracle { base, ..self.clone() })
    }

    pub fn spec(&self) -> &Arc<SchemeSpec> {
        &self.spec
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn base(&self) -> &Point {
        &self.points[self.base]
    }

    /// `|X|`.
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    fn rel(&self, y: usize, z: usize) -> Mask {
        self.relations[y * self.points.len() + z]
    }

    fn index(&self, p: &Point) -> Result<usize> {
        self.points
            .iter()
            .position(|q| q == p)
            .ok_or_else(|| Error::BadPoint(p.0.clone()))
    }

    fn indicator<F: Fn(usize, usize) -> bool>(&self, on: F) -> DenseMatrix {
        let field = self.spec.field();
        let n = self.dim();
        let mut m = DenseMatrix::zero(field, n);
        for r in 0..n {
            for c in 0..n {
                if on(r, c) {
                    m.set(r, c, field.one());
                }
            }
        }
        m
    }

    /// `A_g(y, z) = 1` iff `(y, z)` lies in relation `g`.
    pub fn adjacency_matrix(&self, g: Mask) -> DenseMatrix {
        self.indicator(|r, c| self.rel(r, c) == g)
    }

    /// `E_g*(y, y) = 1` iff `y` is in relation `g` with the base point.
    pub fn dual_idempotent(&self, g: Mask) -> DenseMatrix {
        self.indicator(|r, c| r == c && self.rel(self.base, r) == g)
    }

    /// `E_g* A_h E_i*`, formed as a product of the three matrices.
    pub fn realize_b1(&self, t: &BasisTriple) -> DenseMatrix {
        self.dual_idempotent(t.g)
            .mul(&self.adjacency_matrix(t.h))
            .mul(&self.dual_idempotent(t.i))
    }

    /// `B_{g,h,i} = Σ_{g△i ⪯ j ⪯ h} E_g* A_j E_i*`.
    pub fn realize_b2(&self, t: &BasisTriple) -> DenseMatrix {
        let mut acc = DenseMatrix::zero(self.spec.field(), self.dim());
        for j in (t.g ^ t.i).interval(&t.h) {
            acc = acc.add(&self.realize_b1(&BasisTriple { g: t.g, h: j, i: t.i }));
        }
        acc
    }

    pub fn realize_elt(&self, x: &AlgebraElt) -> DenseMatrix {
        let mut acc = DenseMatrix::zero(self.spec.field(), self.dim());
        for (t, c) in x.terms() {
            acc = acc.add(&self.realize_b2(t).scale(c));
        }
        acc
    }

    pub fn realize_b1_elt(&self, x: &B1Elt) -> DenseMatrix {
        let mut acc = DenseMatrix::zero(self.spec.field(), self.dim());
        for (t, c) in x.terms() {
            acc = acc.add(&self.realize_b1(t).scale(c));
        }
        acc
    }

    /// `|{w : x ~_g w, y ~_h w, z ~_i w}|`, counted over all of X.
    pub fn triple_intersection_count(&self, x: &Point, y: &Point, z: &Point, g: Mask, h: Mask, i: Mask) -> Result<u64> {
        let (x, y, z) = (self.index(x)?, self.index(y)?, self.index(z)?);
        Ok((0..self.dim())
            .filter(|&w| self.rel(x, w) == g && self.rel(y, w) == h && self.rel(z, w) == i)
            .count() as u64)
    }

    /// `E_g* A_h E_i* · E_i* A_k E_l*` expanded in the `E* A E*` basis, with
    /// coefficients counted as triple intersections: for each `m`, pick `y, z`
    /// with `x ~_g y`, `x ~_l z`, `y ~_m z` and count `w` with
    /// `y ~_h w`, `x ~_i w`, `w ~_k z`.
    pub fn b1_product_by_counting(&self, a: &BasisTriple, b: &BasisTriple) -> Result<B1Elt> {
        if a.i != b.g {
            return Ok(B1Elt::zero(&self.spec));
        }
        let x = self.base;
        let field = self.spec.field();
        let mut seen: BTreeMap<Mask, u64> = BTreeMap::new();
        for y in 0..self.dim() {
            if self.rel(x, y) != a.g {
                continue;
            }
            for z in 0..self.dim() {
                if self.rel(x, z) != b.i {
                    continue;
                }
                let m = self.rel(y, z);
                if seen.contains_key(&m) {
                    continue;
                }
                let count = (0..self.dim())
                    .filter(|&w| self.rel(y, w) == a.h && self.rel(x, w) == a.i && self.rel(w, z) == b.h)
                    .count() as u64;
                seen.insert(m, count);
            }
        }
        B1Elt::from_terms(
            &self.spec,
            seen.into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (BasisTriple { g: a.g, h: m, i: b.i }, field.from_u64(c))),
        )
    }

    /// Rank of the realized B-basis of T.
    pub fn algebra_dim(&self, basis: &[BasisTriple]) -> usize {
        let mats: Vec<DenseMatrix> = basis.iter().map(|t| self.realize_b2(t)).collect();
        span_rank(&mats)
    }

    /// Dimension of the algebra generated by all `A_g` and `E_g*`.
    pub fn generated_dim(&self) -> Result<usize> {
        let mut gens = Vec::new();
        for g in self.spec.masks()? {
            gens.push(self.adjacency_matrix(g));
            gens.push(self.dual_idempotent(g));
        }
        Ok(generated_algebra_dim(&gens))
    }

    /// `dim {v ∈ span(realized basis) : M v = 0 for all M in left_ideal}`.
    pub fn annihilator_dim(&self, basis: &[BasisTriple], left_ideal: &[AlgebraElt]) -> usize {
        let realized: Vec<DenseMatrix> = basis.iter().map(|t| self.realize_b2(t)).collect();
        let gens: Vec<DenseMatrix> = left_ideal.iter().map(|e| self.realize_elt(e)).collect();
        let span = span_rank(&realized);
        let n = self.dim();
        let len = gens.len() * n * n;
        let images = realized.iter().map(|r| {
            let mut v = Vec::with_capacity(len);
            for m in &gens {
                v.extend(m.mul(r).to_vector());
            }
            v
        });
        // the realization may be degenerate; the kernel lives inside the span
        span - rank(self.spec.field(), len, images)
    }
}
