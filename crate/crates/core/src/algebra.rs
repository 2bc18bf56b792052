//! Elements of the Terwilliger algebra in the structured basis `B_{g,h,i}`.
//!
//! The basis is indexed by the triples `(g, h, i)` with
//! `g △ i ⪯ h ⪯ (g △ i) ∪ (g ∩ i)°`. Products of two basis elements are
//! either zero or a single basis element times a valency:
//!
//! ```text
//! B_{g,h,i} B_{j,k,l} = δ_{i,j} k̄_{h∩i∩k} B_{g, [g,h,i,k,l], l}
//! ```
//!
//! The other basis, `E_g* A_h E_i*` over the same index set, is reachable
//! through [`b2_to_b1`] and [`b1_to_b2`]; it exists for cross-checks only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::scheme::{Mask, SchemeSpec};

/// Index of a basis element: left idempotent, middle relation, right
/// idempotent. Ordered lexicographically on `(g, h, i)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisTriple {
    pub g: Mask,
    pub h: Mask,
    pub i: Mask,
}

impl BasisTriple {
    /// Builds a triple, rejecting it unless it lies in `ℙ`.
    pub fn new(spec: &SchemeSpec, g: Mask, h: Mask, i: Mask) -> Result<BasisTriple> {
        for m in [&g, &h, &i] {
            spec.check_mask(m)?;
        }
        if spec.in_p(g, h, i) {
            Ok(BasisTriple { g, h, i })
        } else {
            Err(Error::NotInP {
                g: g.to_string(),
                h: h.to_string(),
                i: i.to_string(),
            })
        }
    }

    /// Parses `"g,h,i"` (parentheses optional) against a scheme.
    pub fn parse(spec: &SchemeSpec, text: &str) -> Result<BasisTriple> {
        let raw: RawTriple = text.parse()?;
        let [g, h, i] = raw.0;
        for m in [&g, &h, &i] {
            spec.check_mask(m)?;
        }
        BasisTriple::new(spec, g, h, i)
    }

    pub fn transpose(&self) -> BasisTriple {
        BasisTriple {
            g: self.i,
            h: self.h,
            i: self.g,
        }
    }

    pub fn to_strings(&self) -> [String; 3] {
        [self.g.to_string(), self.h.to_string(), self.i.to_string()]
    }
}

impl fmt::Display for BasisTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.g, self.h, self.i)
    }
}

impl fmt::Debug for BasisTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{self}")
    }
}

/// Three masks parsed from `"g,h,i"` with no membership check.
struct RawTriple([Mask; 3]);

impl FromStr for RawTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<RawTriple> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::BadMask {
                text: s.to_string(),
                reason: "expected three comma-separated bitstrings".into(),
            });
        }
        Ok(RawTriple([parts[0].parse()?, parts[1].parse()?, parts[2].parse()?]))
    }
}

/// `dim T = |ℙ| = 2^{2n₁} 5^{n₂}`, without enumerating.
pub fn dim_t(spec: &SchemeSpec) -> u128 {
    4u128.pow(spec.n1() as u32) * 5u128.pow(spec.n2() as u32)
}

/// Every triple of `ℙ`, in canonical order. Its length is `2^{2n₁} 5^{n₂}`.
pub fn enumerate_p(spec: &SchemeSpec) -> Result<Vec<BasisTriple>> {
    let masks = spec.masks()?;
    let mut out = Vec::new();
    for &g in &masks {
        for &i in &masks {
            let low = g ^ i;
            let high = low | spec.circ(g & i);
            for h in low.interval(&high) {
                out.push(BasisTriple { g, h, i });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `ℙ_{g,i}`: the middles `h` with `(g, h, i) ∈ ℙ`.
pub fn middles(spec: &SchemeSpec, g: Mask, i: Mask) -> Vec<Mask> {
    let low = g ^ i;
    low.interval(&(low | spec.circ(g & i)))
}

/// Product of two basis elements: `None` when it vanishes.
pub fn mul_basis(spec: &SchemeSpec, a: &BasisTriple, b: &BasisTriple) -> Option<(Scalar, BasisTriple)> {
    if a.i != b.g {
        return None;
    }
    let c = spec.valency_scalar(a.h & a.i & b.h);
    if c.is_zero() {
        return None;
    }
    let h = spec.bracket5(a.g, a.h, a.i, b.h, b.i);
    debug_assert!(spec.in_p(a.g, h, b.i));
    Some((c, BasisTriple { g: a.g, h, i: b.i }))
}

type TermMap = BTreeMap<BasisTriple, Scalar>;

fn accumulate(terms: &mut TermMap, t: BasisTriple, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&t) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(&t);
            }
        }
        None => {
            terms.insert(t, c.clone());
        }
    }
}

fn same_spec(a: &Arc<SchemeSpec>, b: &Arc<SchemeSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A JSON term: `{"triple": ["g","h","i"], "coeff": "c"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub triple: [String; 3],
    pub coeff: String,
}

fn terms_from_json(spec: &SchemeSpec, json: &[TermJson]) -> Result<TermMap> {
    let mut terms = TermMap::new();
    for t in json {
        let triple = BasisTriple::parse(spec, &t.triple.join(","))?;
        let c = spec.field().parse_scalar(&t.coeff)?;
        accumulate(&mut terms, triple, &c);
    }
    Ok(terms)
}

fn terms_to_json(terms: &TermMap) -> Vec<TermJson> {
    terms
        .iter()
        .map(|(t, c)| TermJson {
            triple: t.to_strings(),
            coeff: c.to_string(),
        })
        .collect()
}

fn fmt_terms(terms: &TermMap, symbol: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (t, c)) in terms.iter().enumerate() {
        if k > 0 {
            f.write_str(" + ")?;
        }
        write!(f, "{c}·{symbol}{t}")?;
    }
    Ok(())
}

/// An element of T written in the `B_{g,h,i}` basis. Zero coefficients are
/// never stored, so structural equality is equality in T.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElt {
    spec: Arc<SchemeSpec>,
    terms: TermMap,
}

impl AlgebraElt {
    pub fn zero(spec: &Arc<SchemeSpec>) -> AlgebraElt {
        AlgebraElt {
            spec: spec.clone(),
            terms: TermMap::new(),
        }
    }

    /// `I = Σ_g B_{g,0,g}`.
    pub fn identity(spec: &Arc<SchemeSpec>) -> Result<AlgebraElt> {
        let zero = spec.zero();
        let one = spec.field().one();
        let terms = spec
            .masks()?
            .into_iter()
            .map(|g| (BasisTriple { g, h: zero, i: g }, one.clone()))
            .collect();
        Ok(AlgebraElt {
            spec: spec.clone(),
            terms,
        })
    }

    pub fn basis(spec: &Arc<SchemeSpec>, t: BasisTriple) -> AlgebraElt {
        Self::term(spec, t, spec.field().one())
    }

    pub fn term(spec: &Arc<SchemeSpec>, t: BasisTriple, c: Scalar) -> AlgebraElt {
        assert!(spec.in_p(t.g, t.h, t.i), "{t} is not a basis triple");
        let mut terms = TermMap::new();
        accumulate(&mut terms, t, &c);
        AlgebraElt {
            spec: spec.clone(),
            terms,
        }
    }

    /// Builds an element from arbitrary terms, checking every triple and
    /// every coefficient's field.
    pub fn from_terms<I>(spec: &Arc<SchemeSpec>, terms: I) -> Result<AlgebraElt>
    where
        I: IntoIterator<Item = (BasisTriple, Scalar)>,
    {
        let mut map = TermMap::new();
        for (t, c) in terms {
            BasisTriple::new(spec, t.g, t.h, t.i)?;
            if !spec.field().contains(&c) {
                return Err(Error::SpecMismatch);
            }
            accumulate(&mut map, t, &c);
        }
        Ok(AlgebraElt {
            spec: spec.clone(),
            terms: map,
        })
    }

    pub fn from_json(spec: &Arc<SchemeSpec>, json: &[TermJson]) -> Result<AlgebraElt> {
        Ok(AlgebraElt {
            spec: spec.clone(),
            terms: terms_from_json(spec, json)?,
        })
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        terms_to_json(&self.terms)
    }

    pub fn spec(&self) -> &Arc<SchemeSpec> {
        &self.spec
    }

    /// `c_{g,h,i}(self)`.
    pub fn coeff(&self, t: &BasisTriple) -> Scalar {
        self.terms
            .get(t)
            .cloned()
            .unwrap_or_else(|| self.spec.field().zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisTriple, &Scalar)> {
        self.terms.iter()
    }

    /// The support in the B-basis, canonical order.
    pub fn support(&self) -> impl Iterator<Item = &BasisTriple> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElt {
        let mut terms = TermMap::new();
        for (t, v) in &self.terms {
            accumulate(&mut terms, *t, &(v * c));
        }
        AlgebraElt {
            spec: self.spec.clone(),
            terms,
        }
    }

    pub fn checked_add(&self, other: &AlgebraElt) -> Result<AlgebraElt> {
        self.same(other)?;
        let mut terms = self.terms.clone();
        for (t, c) in &other.terms {
            accumulate(&mut terms, *t, c);
        }
        Ok(AlgebraElt {
            spec: self.spec.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &AlgebraElt) -> Result<AlgebraElt> {
        self.checked_add(&-other)
    }

    /// Bilinear extension of the basis product.
    pub fn checked_mul(&self, other: &AlgebraElt) -> Result<AlgebraElt> {
        self.same(other)?;
        let mut by_left: BTreeMap<Mask, Vec<(&BasisTriple, &Scalar)>> = BTreeMap::new();
        for (t, c) in &other.terms {
            by_left.entry(t.g).or_default().push((t, c));
        }
        let spec = &*self.spec;
        let mut terms = TermMap::new();
        for (a, ca) in &self.terms {
            let Some(rhs) = by_left.get(&a.i) else {
                continue;
            };
            for (b, cb) in rhs {
                if let Some((k, t)) = mul_basis(spec, a, b) {
                    accumulate(&mut terms, t, &(&(ca * cb) * &k));
                }
            }
        }
        Ok(AlgebraElt {
            spec: self.spec.clone(),
            terms,
        })
    }

    /// The anti-automorphism induced by `B_{g,h,i}ᵀ = B_{i,h,g}`.
    pub fn transpose(&self) -> AlgebraElt {
        AlgebraElt {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.transpose(), c.clone()))
                .collect(),
        }
    }

    fn same(&self, other: &AlgebraElt) -> Result<()> {
        if same_spec(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }
}

impl fmt::Display for AlgebraElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.terms, "B", f)
    }
}

impl fmt::Debug for AlgebraElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElt[{}]", self)
    }
}

// Operator forms panic when the operands come from different schemes; use
// the `checked_*` methods when that can happen.

impl Add for &AlgebraElt {
    type Output = AlgebraElt;
    fn add(self, rhs: &AlgebraElt) -> AlgebraElt {
        self.checked_add(rhs).expect("operands from different schemes")
    }
}

impl Sub for &AlgebraElt {
    type Output = AlgebraElt;
    fn sub(self, rhs: &AlgebraElt) -> AlgebraElt {
        self.checked_sub(rhs).expect("operands from different schemes")
    }
}

impl Mul for &AlgebraElt {
    type Output = AlgebraElt;
    fn mul(self, rhs: &AlgebraElt) -> AlgebraElt {
        self.checked_mul(rhs).expect("operands from different schemes")
    }
}

impl Neg for &AlgebraElt {
    type Output = AlgebraElt;
    fn neg(self) -> AlgebraElt {
        AlgebraElt {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(t, c)| (*t, -c)).collect(),
        }
    }
}

/// An element written in the `E_g* A_h E_i*` basis.
#[derive(Clone, PartialEq, Eq)]
pub struct B1Elt {
    spec: Arc<SchemeSpec>,
    terms: TermMap,
}

impl B1Elt {
    pub fn zero(spec: &Arc<SchemeSpec>) -> B1Elt {
        B1Elt {
            spec: spec.clone(),
            terms: TermMap::new(),
        }
    }

    pub fn basis(spec: &Arc<SchemeSpec>, t: BasisTriple) -> B1Elt {
        assert!(spec.in_p(t.g, t.h, t.i), "{t} is not a basis triple");
        let mut terms = TermMap::new();
        terms.insert(t, spec.field().one());
        B1Elt {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn from_terms<I>(spec: &Arc<SchemeSpec>, terms: I) -> Result<B1Elt>
    where
        I: IntoIterator<Item = (BasisTriple, Scalar)>,
    {
        let mut map = TermMap::new();
        for (t, c) in terms {
            BasisTriple::new(spec, t.g, t.h, t.i)?;
            accumulate(&mut map, t, &c);
        }
        Ok(B1Elt {
            spec: spec.clone(),
            terms: map,
        })
    }

    pub fn spec(&self) -> &Arc<SchemeSpec> {
        &self.spec
    }

    /// `c^{g,h,i}(self)`.
    pub fn coeff(&self, t: &BasisTriple) -> Scalar {
        self.terms
            .get(t)
            .cloned()
            .unwrap_or_else(|| self.spec.field().zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisTriple, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for B1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.terms, "EAE", f)
    }
}

impl fmt::Debug for B1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B1Elt[{}]", self)
    }
}

/// Expands each `B_{g,h,i}` as `Σ_{g△i ⪯ j ⪯ h} E_g* A_j E_i*`.
pub fn b2_to_b1(x: &AlgebraElt) -> B1Elt {
    let mut terms = TermMap::new();
    for (t, c) in &x.terms {
        for j in (t.g ^ t.i).interval(&t.h) {
            accumulate(&mut terms, BasisTriple { g: t.g, h: j, i: t.i }, c);
        }
    }
    B1Elt {
        spec: x.spec.clone(),
        terms,
    }
}

/// Inverts [`b2_to_b1`] by Möbius inversion on the subset interval:
/// `E_g* A_h E_i* = Σ_{g△i ⪯ j ⪯ h} (-1)^{|h∖j|} B_{g,j,i}`.
pub fn b1_to_b2(x: &B1Elt) -> AlgebraElt {
    let field = x.spec.field();
    let mut terms = TermMap::new();
    for (t, c) in &x.terms {
        for j in (t.g ^ t.i).interval(&t.h) {
            let sign = field.sign((t.h - j).len() as u32);
            accumulate(&mut terms, BasisTriple { g: t.g, h: j, i: t.i }, &(c * &sign));
        }
    }
    AlgebraElt {
        spec: x.spec.clone(),
        terms,
    }
}

/// Basis middles of the corner algebra `E_g* T E_g*`: `{a : a ⪯ g°}`.
pub fn corner_basis(spec: &SchemeSpec, g: Mask) -> Vec<Mask> {
    spec.zero().interval(&spec.circ(g))
}

/// `B_{g,h,g} B_{g,i,g} = k̄_{h∩i} B_{g,h∪i,g}`; `None` when the scalar
/// vanishes.
pub fn corner_mul(spec: &SchemeSpec, g: Mask, h: Mask, i: Mask) -> Result<Option<(Scalar, Mask)>> {
    for m in [&g, &h, &i] {
        spec.check_mask(m)?;
    }
    let top = spec.circ(g);
    for m in [h, i] {
        if !m.subset_of(&top) {
            return Err(Error::NotInP {
                g: g.to_string(),
                h: m.to_string(),
                i: g.to_string(),
            });
        }
    }
    let c = spec.valency_scalar(h & i);
    Ok(if c.is_zero() { None } else { Some((c, h | i)) })
}
