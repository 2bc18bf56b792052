//! The semisimple quotient T/Rad(T) and its Wedderburn–Artin blocks.
//!
//! `T/Rad(T)` has basis `D_{g,h,i} + Rad(T)` over the triples with
//! `p ∤ k_h`, where
//!
//! ```text
//! D_{g,h,i} = Σ_k Σ_{l ∈ U_{gi,h,k}} (-1)^k k̄_{i∩l}^{-1} B_{g,l,i}.
//! ```
//!
//! Two such triples multiply to a third (coefficient 1) exactly when they
//! are composable and share the signature `(g∩i)° ∖ h`; each signature class
//! is a full matrix algebra indexed by its diagonal masks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{corner_basis, dim_t, enumerate_p, mul_basis, AlgebraElt, BasisTriple};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::scheme::{Mask, SchemeSpec};

/// A basis triple whose middle has valency prime to p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTriple(BasisTriple);

impl DTriple {
    pub fn new(spec: &SchemeSpec, t: BasisTriple) -> Result<DTriple> {
        BasisTriple::new(spec, t.g, t.h, t.i)?;
        if spec.p_divides_valency(t.h) {
            return Err(Error::OutOfRange(format!(
                "p divides the valency of the middle of {t}"
            )));
        }
        Ok(DTriple(t))
    }

    pub fn parse(spec: &SchemeSpec, text: &str) -> Result<DTriple> {
        DTriple::new(spec, BasisTriple::parse(spec, text)?)
    }

    pub fn triple(&self) -> BasisTriple {
        self.0
    }

    pub fn g(&self) -> Mask {
        self.0.g
    }

    pub fn h(&self) -> Mask {
        self.0.h
    }

    pub fn i(&self) -> Mask {
        self.0.i
    }
}

impl fmt::Display for DTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.0)
    }
}

/// `(g∩i)° ∖ h`, the class label of a D-triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Mask);

impl Signature {
    pub fn mask(&self) -> Mask {
        self.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn signature(spec: &SchemeSpec, t: &DTriple) -> Signature {
    Signature(spec.circ(t.g() & t.i()) - t.h())
}

/// The triples of `𝔻` in canonical order; there are `dim T - dim Rad T`.
pub fn d_triples(spec: &SchemeSpec) -> Result<Vec<DTriple>> {
    Ok(enumerate_p(spec)?
        .into_iter()
        .filter(|t| !spec.p_divides_valency(t.h))
        .map(DTriple)
        .collect())
}

/// Expands `D_{g,h,i}` in the B-basis.
pub fn build_d(spec: &Arc<SchemeSpec>, t: DTriple) -> Result<AlgebraElt> {
    let BasisTriple { g, h, i } = t.0;
    let top = spec.mask_product(g, i);
    let field = spec.field();
    let mut terms = Vec::new();
    for k in 0..=spec.n_count(top, h) {
        let sign = field.sign(k as u32);
        for l in spec.u_set(top, h, k)? {
            let inv = spec
                .valency_scalar(i & l)
                .inv()
                .ok_or_else(|| Error::Inconsistent(format!("k({}) vanishes for {l} in the layers of {t}", i & l)))?;
            terms.push((BasisTriple { g, h: l, i }, &sign * &inv));
        }
    }
    AlgebraElt::from_terms(spec, terms)
}

/// Product in `T/Rad(T)` on the D-basis. The coefficient is always 1.
pub fn quo_mul(spec: &SchemeSpec, a: &DTriple, b: &DTriple) -> Option<DTriple> {
    if a.i() != b.g() || signature(spec, a) != signature(spec, b) {
        return None;
    }
    let h = spec.bracket5(a.g(), a.h(), a.i(), b.h(), b.i());
    Some(DTriple(BasisTriple { g: a.g(), h, i: b.i() }))
}

/// `build_d` of the product, or zero.
pub fn lift(spec: &Arc<SchemeSpec>, t: Option<DTriple>) -> Result<AlgebraElt> {
    match t {
        Some(t) => build_d(spec, t),
        None => Ok(AlgebraElt::zero(spec)),
    }
}

/// One full matrix algebra `M_size(F)` inside `T/Rad(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnBlock {
    pub signature: Signature,
    /// The diagonal masks `{a : (a, b, a) in the class}`, canonical order.
    pub row_masks: Vec<Mask>,
    pub size: usize,
    /// The class triples keyed by `(row, column)`: the matrix units.
    pub units: BTreeMap<(Mask, Mask), DTriple>,
}

impl WedderburnBlock {
    /// The matrix unit in row `a`, column `b`.
    pub fn unit(&self, a: Mask, b: Mask) -> Option<DTriple> {
        self.units.get(&(a, b)).copied()
    }
}

/// Partitions `𝔻` by signature. Each class must be a full set of matrix
/// units over its diagonal masks; anything else is reported as
/// [`Error::Inconsistent`].
pub fn wedderburn_blocks(spec: &SchemeSpec) -> Result<Vec<WedderburnBlock>> {
    let mut classes: BTreeMap<Signature, Vec<DTriple>> = BTreeMap::new();
    for t in d_triples(spec)? {
        classes.entry(signature(spec, &t)).or_default().push(t);
    }
    let mut blocks = Vec::with_capacity(classes.len());
    for (sig, class) in classes {
        let mut row_masks: Vec<Mask> = class.iter().filter(|t| t.g() == t.i()).map(|t| t.g()).collect();
        row_masks.sort();
        row_masks.dedup();
        let size = row_masks.len();
        let mut units = BTreeMap::new();
        for t in &class {
            if units.insert((t.g(), t.i()), *t).is_some() {
                return Err(Error::Inconsistent(format!(
                    "class {sig} has two triples from {} to {}",
                    t.g(),
                    t.i()
                )));
            }
        }
        if class.len() != size * size || units.keys().any(|(a, b)| row_masks.binary_search(a).is_err() || row_masks.binary_search(b).is_err()) {
            return Err(Error::Inconsistent(format!(
                "class {sig} has {} triples over {size} diagonal masks",
                class.len()
            )));
        }
        blocks.push(WedderburnBlock {
            signature: sig,
            row_masks,
            size,
            units,
        });
    }
    Ok(blocks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub semisimple: bool,
    pub frobenius: bool,
    pub symmetric: bool,
}

/// All three properties hold iff `p ∤ ∏ (|U_a| - 1)`.
pub fn verdicts(spec: &SchemeSpec) -> Verdicts {
    let ok = spec.p_divisible_count() == 0;
    Verdicts {
        semisimple: ok,
        frobenius: ok,
        symmetric: ok,
    }
}

/// A left ideal `U` whose dimension plus that of its right annihilator
/// falls short of `dim T`, so T is not Frobenius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusWitness {
    pub left_ideal_dim: u128,
    pub annihilator_dim: u128,
    pub total: u128,
    pub dim_t: u128,
}

/// `U = span{B_{a,a,0} : p | k_a}` has dimension `2^n - 2^{n-m}` and right
/// annihilator `span{B_{a,b,c} : a ≠ 0}` of dimension `dim T - 2^n`.
/// `None` when T is semisimple.
pub fn frobenius_falsification_witness(spec: &SchemeSpec) -> Option<FrobeniusWitness> {
    let m = spec.p_divisible_count();
    if m == 0 {
        return None;
    }
    let n = spec.n() as u32;
    let left_ideal_dim = (1u128 << n) - (1u128 << (n - m as u32));
    let dim_t = dim_t(spec);
    let annihilator_dim = dim_t - (1u128 << n);
    Some(FrobeniusWitness {
        left_ideal_dim,
        annihilator_dim,
        total: left_ideal_dim + annihilator_dim,
        dim_t,
    })
}

/// Basis triples `(a, a, 0)` spanning the witness ideal `U`.
pub fn witness_ideal(spec: &SchemeSpec) -> Result<Vec<BasisTriple>> {
    let zero = spec.zero();
    Ok(spec
        .masks()?
        .into_iter()
        .filter(|a| spec.p_divides_valency(*a))
        .map(|a| BasisTriple { g: a, h: a, i: zero })
        .collect())
}

/// `dim {x ∈ T : u x = 0 for every u in gens}` from the structure constants.
pub fn right_annihilator_dim(spec: &SchemeSpec, gens: &[BasisTriple]) -> Result<usize> {
    let all = enumerate_p(spec)?;
    let index: BTreeMap<BasisTriple, usize> = all.iter().enumerate().map(|(k, t)| (*t, k)).collect();
    let len = gens.len() * all.len();
    let field = spec.field();
    let mut image = Echelon::new(field, len);
    for t in &all {
        let mut v = vec![field.zero(); len];
        for (k, u) in gens.iter().enumerate() {
            if let Some((c, r)) = mul_basis(spec, u, t) {
                v[k * all.len() + index[&r]] = c;
            }
        }
        image.insert(v);
    }
    Ok(all.len() - image.rank())
}

/// The semisimple quotient of the corner `E_g* T E_g*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerQuotient {
    pub dim: usize,
    pub idempotent_masks: Vec<Mask>,
}

/// `{a ⪯ g° : p ∤ k_a}`; the `D_{g,a,g}` are orthogonal idempotents.
pub fn corner_quotient(spec: &SchemeSpec, g: Mask) -> CornerQuotient {
    let idempotent_masks: Vec<Mask> = corner_basis(spec, g)
        .into_iter()
        .filter(|a| !spec.p_divides_valency(*a))
        .collect();
    CornerQuotient {
        dim: idempotent_masks.len(),
        idempotent_masks,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub signature: String,
    pub size: usize,
    pub rows: Vec<String>,
}

/// Wedderburn report: `{"n_classes", "blocks", "verdicts"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnReport {
    pub n_classes: usize,
    pub blocks: Vec<BlockJson>,
    pub verdicts: Verdicts,
}

pub fn wedderburn_report(spec: &SchemeSpec) -> Result<WedderburnReport> {
    let blocks = wedderburn_blocks(spec)?;
    Ok(WedderburnReport {
        n_classes: blocks.len(),
        blocks: blocks
            .iter()
            .map(|b| BlockJson {
                signature: b.signature.to_string(),
                size: b.size,
                rows: b.row_masks.iter().map(ToString::to_string).collect(),
            })
            .collect(),
        verdicts: verdicts(spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(sizes: &[u64], p: u64) -> Arc<SchemeSpec> {
        Arc::new(SchemeSpec::new(sizes.to_vec(), p).unwrap())
    }

    fn d(s: &SchemeSpec, text: &str) -> DTriple {
        DTriple::parse(s, text).unwrap()
    }

    fn b(s: &SchemeSpec, text: &str) -> BasisTriple {
        BasisTriple::parse(s, text).unwrap()
    }

    #[test]
    fn d_triple_counts() {
        assert_eq!(d_triples(&spec(&[2, 3], 5)).unwrap().len(), 20);
        assert_eq!(d_triples(&spec(&[2, 3], 2)).unwrap().len(), 8);
        assert!(DTriple::parse(&spec(&[2, 3], 2), "01,01,01").is_err());
    }

    #[test]
    fn d_elements() {
        let s = spec(&[2, 3], 2);
        let t = d(&s, "01,10,11");
        assert_eq!(build_d(&s, t).unwrap(), AlgebraElt::basis(&s, b(&s, "01,10,11")));

        let s = spec(&[2, 3], 5);
        let dd = build_d(&s, d(&s, "11,00,11")).unwrap();
        let half = s.field().from_i64(2).inv().unwrap();
        let expect = AlgebraElt::from_terms(
            &s,
            [(b(&s, "11,00,11"), s.field().one()), (b(&s, "11,01,11"), -&half)],
        )
        .unwrap();
        assert_eq!(dd, expect);
        assert_eq!(&dd * &dd, dd);

        let z = build_d(&s, d(&s, "00,00,00")).unwrap();
        assert_eq!(z, AlgebraElt::basis(&s, b(&s, "00,00,00")));
    }

    #[test]
    fn quotient_products() {
        let s = spec(&[2, 3], 2);
        let p = quo_mul(&s, &d(&s, "01,10,11"), &d(&s, "11,10,01"));
        assert_eq!(p, Some(d(&s, "01,00,01")));
        assert_eq!(quo_mul(&s, &d(&s, "01,10,11"), &d(&s, "01,00,01")), None);

        let s = spec(&[2, 3], 5);
        assert_eq!(quo_mul(&s, &d(&s, "11,00,11"), &d(&s, "11,01,11")), None);
    }

    #[test]
    fn signatures() {
        let s = spec(&[2, 3], 5);
        assert!(signature(&s, &d(&s, "00,00,00")).mask().is_empty());
        assert_eq!(signature(&s, &d(&s, "11,00,11")).to_string(), "01");
        assert!(signature(&s, &d(&s, "01,01,01")).mask().is_empty());
    }

    #[test]
    fn block_shapes() {
        let sizes = |s: &SchemeSpec| -> Vec<usize> { wedderburn_blocks(s).unwrap().iter().map(|b| b.size).collect() };
        assert_eq!(sizes(&spec(&[2, 3], 5)), [4, 2]);
        assert_eq!(sizes(&spec(&[2, 3], 2)), [2, 2]);
        assert_eq!(sizes(&spec(&[2, 2], 3)), [4]);
        assert_eq!(sizes(&spec(&[2, 3], 0)), [4, 2]);
    }

    #[test]
    fn verdict_table() {
        let all = |v: Verdicts| v.semisimple && v.frobenius && v.symmetric;
        let none = |v: Verdicts| !v.semisimple && !v.frobenius && !v.symmetric;
        assert!(all(verdicts(&spec(&[2, 3], 5))));
        assert!(none(verdicts(&spec(&[2, 3], 2))));
        assert!(all(verdicts(&spec(&[2, 3], 0))));
    }

    #[test]
    fn frobenius_witness_dims() {
        let w = frobenius_falsification_witness(&spec(&[2, 3], 2)).unwrap();
        assert_eq!((w.left_ideal_dim, w.annihilator_dim, w.total, w.dim_t), (2, 16, 18, 20));
        let w = frobenius_falsification_witness(&spec(&[3, 3], 2)).unwrap();
        assert_eq!((w.left_ideal_dim, w.annihilator_dim, w.total, w.dim_t), (3, 21, 24, 25));
        assert!(frobenius_falsification_witness(&spec(&[2, 3], 5)).is_none());
    }

    #[test]
    fn symbolic_annihilator_matches_formula() {
        for (sizes, p) in [(&[2u64, 3][..], 2), (&[3, 3][..], 2), (&[2, 4][..], 3)] {
            let s = spec(sizes, p);
            let w = frobenius_falsification_witness(&s).unwrap();
            let u = witness_ideal(&s).unwrap();
            assert_eq!(u.len() as u128, w.left_ideal_dim);
            assert_eq!(right_annihilator_dim(&s, &u).unwrap() as u128, w.annihilator_dim);
        }
    }

    #[test]
    fn corner_quotients() {
        let g = |s: &SchemeSpec| s.parse_mask("01").unwrap();
        let s5 = spec(&[2, 3], 5);
        assert_eq!(corner_quotient(&s5, g(&s5)).dim, 2);
        let s2 = spec(&[2, 3], 2);
        assert_eq!(corner_quotient(&s2, g(&s2)).dim, 1);
        assert_eq!(corner_quotient(&s2, s2.zero()).dim, 1);
    }
}
