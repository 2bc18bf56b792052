//! The Jacobson radical of T: the span of the `B_{a,b,c}` with `p | k_b`.
//!
//! Its nilpotent index is `2m + 1` where `m` counts the factors with
//! `p | |U_a| - 1`. The lower bound is certified by an explicit chain of
//! `2m` radical basis elements with nonzero product; the upper bound by
//! sweeping products of `2m + 1` radical basis elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{enumerate_p, mul_basis, AlgebraElt, BasisTriple};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::scheme::{Mask, SchemeSpec};

/// Sequence sweeps with at most this many sequences are exhaustive.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Seed used by randomized sweeps unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x7e77_1119;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalBasis {
    pub triples: Vec<BasisTriple>,
}

impl RadicalBasis {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

pub fn rad_basis(spec: &SchemeSpec) -> Result<RadicalBasis> {
    Ok(RadicalBasis {
        triples: enumerate_p(spec)?
            .into_iter()
            .filter(|t| spec.p_divides_valency(t.h))
            .collect(),
    })
}

pub fn rad_dim(spec: &SchemeSpec) -> Result<usize> {
    Ok(rad_basis(spec)?.len())
}

/// The B-basis diagonalizes membership: `x ∈ Rad(T)` iff every term's middle
/// has valency divisible by p.
pub fn in_radical(x: &AlgebraElt) -> bool {
    let spec = x.spec();
    x.support().all(|t| spec.p_divides_valency(t.h))
}

pub fn nilpotent_index(spec: &SchemeSpec) -> usize {
    2 * spec.p_divisible_count() + 1
}

/// For each factor with `p | |U_j| - 1` (increasing `j`), the pair
/// `B_{1, l, 1∖l}, B_{1∖l, l, 1}` with `l` the singleton at `j`. Each pair
/// multiplies to `B_{1,l,1}` and those commute to a nonzero product.
pub fn witness_chain(spec: &SchemeSpec) -> Result<Vec<BasisTriple>> {
    if spec.p_divisible_count() == 0 {
        return Err(Error::ZeroRadical);
    }
    let one = spec.full();
    let mut chain = Vec::with_capacity(2 * spec.p_divisible_count());
    for j in spec.p_divisible_mask().support() {
        let l = Mask::singleton(spec.n(), j);
        chain.push(BasisTriple { g: one, h: l, i: one - l });
        chain.push(BasisTriple { g: one - l, h: l, i: one });
    }
    Ok(chain)
}

/// Ordered product of basis elements, `None` when it vanishes.
pub fn chain_product(spec: &SchemeSpec, chain: &[BasisTriple]) -> Option<(Scalar, BasisTriple)> {
    let (first, rest) = chain.split_first()?;
    let mut acc = (spec.field().one(), *first);
    for t in rest {
        let (c, next) = mul_basis(spec, &acc.1, t)?;
        acc = (&acc.0 * &c, next);
    }
    Some(acc)
}

/// Middles of the radical of the corner `E_g* T E_g*`.
pub fn corner_rad_basis(spec: &SchemeSpec, g: Mask) -> Vec<Mask> {
    crate::algebra::corner_basis(spec, g)
        .into_iter()
        .filter(|a| spec.p_divides_valency(*a))
        .collect()
}

pub fn corner_nilpotent_index(spec: &SchemeSpec, g: Mask) -> usize {
    (g & spec.p_divisible_mask()).len() + 1
}

/// Outcome of checking that all products of a fixed length vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub length: usize,
    pub exhaustive: bool,
    /// Sequences covered, counting pruned extensions of vanishing prefixes.
    pub sequences: u128,
    pub seed: Option<u64>,
    /// A sequence whose product does not vanish, if one was found.
    pub counterexample: Option<Vec<BasisTriple>>,
}

impl SweepOutcome {
    pub fn all_vanish(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that every ordered product of `length` elements of `basis`
/// vanishes. Exhaustive (with prefix pruning) when `|basis|^length` is at
/// most [`EXHAUSTIVE_LIMIT`]; otherwise `samples` random composable chains
/// are drawn with a seeded generator.
pub fn sweep_products(
    spec: &SchemeSpec,
    basis: &[BasisTriple],
    length: usize,
    samples: usize,
    seed: Option<u64>,
) -> SweepOutcome {
    let total = (basis.len() as u128).checked_pow(length as u32);
    match total {
        Some(total) if total <= EXHAUSTIVE_LIMIT => {
            let mut prefix = Vec::with_capacity(length);
            let counterexample = dfs(spec, basis, length, None, &mut prefix);
            SweepOutcome {
                length,
                exhaustive: true,
                sequences: total,
                seed: None,
                counterexample,
            }
        }
        _ => {
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let counterexample = sample_chains(spec, basis, length, samples, seed);
            SweepOutcome {
                length,
                exhaustive: false,
                sequences: samples as u128,
                seed: Some(seed),
                counterexample,
            }
        }
    }
}

fn dfs(
    spec: &SchemeSpec,
    basis: &[BasisTriple],
    length: usize,
    acc: Option<BasisTriple>,
    prefix: &mut Vec<BasisTriple>,
) -> Option<Vec<BasisTriple>> {
    if prefix.len() == length {
        return Some(prefix.clone());
    }
    for t in basis {
        let next = match acc {
            None => Some(*t),
            Some(a) => mul_basis(spec, &a, t).map(|(_, r)| r),
        };
        // a vanishing prefix makes every extension vanish
        if let Some(r) = next {
            prefix.push(*t);
            if let Some(found) = dfs(spec, basis, length, Some(r), prefix) {
                return Some(found);
            }
            prefix.pop();
        }
    }
    None
}

fn sample_chains(
    spec: &SchemeSpec,
    basis: &[BasisTriple],
    length: usize,
    samples: usize,
    seed: u64,
) -> Option<Vec<BasisTriple>> {
    if basis.is_empty() || length == 0 {
        return None;
    }
    // only chains whose adjacent idempotents match can survive
    let mut by_left: BTreeMap<Mask, Vec<BasisTriple>> = BTreeMap::new();
    for t in basis {
        by_left.entry(t.g).or_default().push(*t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: for _ in 0..samples {
        let mut chain = vec![basis[rng.random_range(0..basis.len())]];
        while chain.len() < length {
            let Some(next) = by_left.get(&chain.last().unwrap().i) else {
                continue 'outer;
            };
            chain.push(next[rng.random_range(0..next.len())]);
        }
        if chain_product(spec, &chain).is_some() {
            return Some(chain);
        }
    }
    None
}

/// Looks for a basis triple `t` and radical triple `r` such that `t·r` or
/// `r·t` leaves the radical. `None` means the radical span is an ideal.
pub fn ideal_closure_violation(spec: &SchemeSpec) -> Result<Option<(BasisTriple, BasisTriple)>> {
    let all = enumerate_p(spec)?;
    let rad = rad_basis(spec)?;
    for r in &rad.triples {
        for t in &all {
            for prod in [mul_basis(spec, t, r), mul_basis(spec, r, t)].into_iter().flatten() {
                if !spec.p_divides_valency(prod.1.h) {
                    return Ok(Some((*t, *r)));
                }
            }
        }
    }
    Ok(None)
}

/// Radical report: `{"dim", "nilpotent_index", "witness", "basis"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub dim: usize,
    pub nilpotent_index: usize,
    pub witness: Vec<[String; 3]>,
    pub basis: Vec<[String; 3]>,
}

pub fn radical_report(spec: &SchemeSpec) -> Result<RadicalReport> {
    let basis = rad_basis(spec)?;
    let witness = match witness_chain(spec) {
        Ok(chain) => chain,
        Err(Error::ZeroRadical) => Vec::new(),
        Err(e) => return Err(e),
    };
    Ok(RadicalReport {
        dim: basis.len(),
        nilpotent_index: nilpotent_index(spec),
        witness: witness.iter().map(BasisTriple::to_strings).collect(),
        basis: basis.triples.iter().map(BasisTriple::to_strings).collect(),
    })
}

/// The witness chain multiplied out as an algebra element.
pub fn witness_element(spec: &Arc<SchemeSpec>) -> Result<AlgebraElt> {
    let chain = witness_chain(spec)?;
    Ok(match chain_product(spec, &chain) {
        Some((c, t)) => AlgebraElt::term(spec, t, c),
        None => AlgebraElt::zero(spec),
    })
}
