//! The center Z(T), with basis
//! `C_g = Σ_{h ∈ E} k̄_{g∖h} B_{h, g∩h, h}` for `g ⪯ 1°`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElt, BasisTriple};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::scheme::{Mask, SchemeSpec};

/// A mask supported on factors of size greater than 2; indexes `C_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralIndex(Mask);

impl CentralIndex {
    pub fn new(spec: &SchemeSpec, g: Mask) -> Result<CentralIndex> {
        spec.check_mask(&g)?;
        if spec.circ(g) == g {
            Ok(CentralIndex(g))
        } else {
            Err(Error::OutOfRange(format!(
                "{g} touches a factor of size 2, so it indexes no central basis element"
            )))
        }
    }

    pub fn mask(&self) -> Mask {
        self.0
    }
}

impl fmt::Display for CentralIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All `2^{n₂}` central indices in canonical order.
pub fn central_indices(spec: &SchemeSpec) -> Result<Vec<CentralIndex>> {
    spec.check_enumeration_cap()?;
    Ok(spec
        .zero()
        .interval(&spec.circ(spec.full()))
        .into_iter()
        .map(CentralIndex)
        .collect())
}

pub fn build_c(spec: &Arc<SchemeSpec>, g: CentralIndex) -> Result<AlgebraElt> {
    let g = g.0;
    let terms = spec.masks()?.into_iter().map(|h| {
        (
            BasisTriple { g: h, h: g & h, i: h },
            spec.valency_scalar(g - h),
        )
    });
    AlgebraElt::from_terms(spec, terms)
}

/// `C_g C_h = k̄_{g∩h} C_{g∪h}`.
pub fn center_mul(spec: &SchemeSpec, g: CentralIndex, h: CentralIndex) -> (Scalar, CentralIndex) {
    (spec.valency_scalar(g.0 & h.0), CentralIndex(g.0 | h.0))
}

/// Basis of Rad(Z(T)): the `C_a` with `p | k_a`. Empty in characteristic 0.
pub fn center_rad_basis(spec: &SchemeSpec) -> Result<Vec<CentralIndex>> {
    Ok(central_indices(spec)?
        .into_iter()
        .filter(|g| spec.p_divides_valency(g.0))
        .collect())
}

/// `|{a : p | |U_a| - 1}| + 1`, which is 1 when the radical vanishes.
pub fn center_nilpotent_index(spec: &SchemeSpec) -> usize {
    spec.p_divisible_count() + 1
}

/// Span membership in Z(T). The coefficient of `B_{1,a,1}` in `C_b` is
/// `δ_{a,b}`, so the only candidate is `Σ_a c_{1,a,1}(x) C_a`.
pub fn is_central(x: &AlgebraElt) -> Result<bool> {
    let spec = x.spec();
    let one = spec.full();
    let mut candidate = AlgebraElt::zero(spec);
    for g in central_indices(spec)? {
        let c = x.coeff(&BasisTriple { g: one, h: g.0, i: one });
        if !c.is_zero() {
            candidate = &candidate + &build_c(spec, g)?.scale(&c);
        }
    }
    Ok(candidate == *x)
}

/// Center report: `{"dim", "basis", "rad_dim", "nilpotent_index"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub dim: usize,
    pub basis: Vec<String>,
    pub rad_dim: usize,
    pub nilpotent_index: usize,
}

pub fn center_report(spec: &SchemeSpec) -> Result<CenterReport> {
    let basis = central_indices(spec)?;
    Ok(CenterReport {
        dim: basis.len(),
        basis: basis.iter().map(ToString::to_string).collect(),
        rad_dim: center_rad_basis(spec)?.len(),
        nilpotent_index: center_nilpotent_index(spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(sizes: &[u64], p: u64) -> Arc<SchemeSpec> {
        Arc::new(SchemeSpec::new(sizes.to_vec(), p).unwrap())
    }

    fn ci(s: &SchemeSpec, text: &str) -> CentralIndex {
        CentralIndex::new(s, s.parse_mask(text).unwrap()).unwrap()
    }

    #[test]
    fn index_sets() {
        let s = spec(&[2, 3], 5);
        let idx: Vec<String> = central_indices(&s).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(idx, ["00", "01"]);
        assert_eq!(central_indices(&spec(&[2, 2], 5)).unwrap().len(), 1);
        assert_eq!(central_indices(&spec(&[3, 3], 5)).unwrap().len(), 4);
        assert!(CentralIndex::new(&s, s.parse_mask("10").unwrap()).is_err());
    }

    #[test]
    fn c_zero_is_identity() {
        for p in [0, 2, 3, 5] {
            let s = spec(&[2, 3], p);
            let c0 = build_c(&s, ci(&s, "00")).unwrap();
            assert_eq!(c0, AlgebraElt::identity(&s).unwrap());
        }
    }

    #[test]
    fn c_g_mod_two_drops_even_terms() {
        let s = spec(&[2, 3], 2);
        let cg = build_c(&s, ci(&s, "01")).unwrap();
        let support: Vec<String> = cg.support().map(|t| t.to_string()).collect();
        assert_eq!(support, ["(01,01,01)", "(11,01,11)"]);
    }

    #[test]
    fn products() {
        let s = spec(&[2, 3], 5);
        let (z, g) = (ci(&s, "00"), ci(&s, "01"));
        assert_eq!(center_mul(&s, g, g), (s.field().from_i64(2), g));
        assert_eq!(center_mul(&s, z, g), (s.field().one(), g));
        let s = spec(&[3, 3], 5);
        let (a, b) = (ci(&s, "10"), ci(&s, "01"));
        assert_eq!(center_mul(&s, a, b), (s.field().one(), ci(&s, "11")));
    }

    #[test]
    fn radical_of_center() {
        let s = spec(&[2, 3], 2);
        assert_eq!(center_rad_basis(&s).unwrap(), vec![ci(&s, "01")]);
        assert_eq!(center_nilpotent_index(&s), 2);
        let s = spec(&[2, 3], 5);
        assert!(center_rad_basis(&s).unwrap().is_empty());
        assert_eq!(center_nilpotent_index(&s), 1);
        let s = spec(&[3, 3], 2);
        assert_eq!(center_rad_basis(&s).unwrap().len(), 3);
        assert_eq!(center_nilpotent_index(&s), 3);
        let s = spec(&[3, 3], 0);
        assert!(center_rad_basis(&s).unwrap().is_empty());
        assert_eq!(center_nilpotent_index(&s), 1);
    }

    #[test]
    fn membership() {
        let s = spec(&[2, 3], 3);
        assert!(is_central(&AlgebraElt::identity(&s).unwrap()).unwrap());
        let off = BasisTriple::parse(&s, "01,01,00").unwrap();
        assert!(!is_central(&AlgebraElt::basis(&s, off)).unwrap());
        let sum = &build_c(&s, ci(&s, "01")).unwrap() + &build_c(&s, ci(&s, "00")).unwrap();
        assert!(is_central(&sum).unwrap());
        assert!(is_central(&AlgebraElt::zero(&s)).unwrap());
    }

    #[test]
    fn report_shape() {
        let r = center_report(&spec(&[2, 3], 2)).unwrap();
        assert_eq!(
            r,
            CenterReport {
                dim: 2,
                basis: vec!["00".into(), "01".into()],
                rad_dim: 1,
                nilpotent_index: 2,
            }
        );
    }
}
