//! The cross-validation suite: every closed-form claim recomputed against
//! the matrix realization.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{b1_to_b2, b2_to_b1, corner_basis, dim_t, enumerate_p, mul_basis, AlgebraElt, B1Elt, BasisTriple};
use crate::center::{build_c, center_mul, central_indices, is_central};
use crate::error::Result;
use crate::linalg::Echelon;
use crate::oracle::{span_rank, DenseMatrix, Oracle, Point, DEFAULT_CAP};
use crate::quotient::{
    build_d, corner_quotient, d_triples, frobenius_falsification_witness, lift, quo_mul, right_annihilator_dim,
    signature, wedderburn_blocks, witness_ideal,
};
use crate::radical::{
    chain_product, corner_nilpotent_index, corner_rad_basis, ideal_closure_violation, in_radical, nilpotent_index,
    rad_basis, sweep_products, witness_chain, DEFAULT_SEED, EXHAUSTIVE_LIMIT,
};
use crate::scheme::SchemeSpec;

/// The generated-algebra closure is only attempted up to this many points.
pub const GENERATED_DIM_POINT_LIMIT: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Number of distinct base points (at least 1).
    pub base_points: usize,
    pub seed: u64,
    pub oracle_cap: usize,
    /// Chains drawn when a nilpotency sweep is too large to be exhaustive.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            base_points: 2,
            seed: DEFAULT_SEED,
            oracle_cap: DEFAULT_CAP,
            samples: 2000,
        }
    }
}

/// One named identity family, with how many instances were compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub comparisons: u64,
    pub passed: bool,
    /// The first failing instance, empty when the check passed.
    pub detail: String,
}

impl Check {
    fn new(name: &str, comparisons: u64, failures: Vec<String>) -> Check {
        Check {
            name: name.to_string(),
            comparisons,
            passed: failures.is_empty(),
            detail: failures.into_iter().next().unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub base_points: Vec<String>,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifySummary {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Evenly spaced base points, starting at `(0, …, 0)` and ending at the
/// last point in mixed-radix order.
pub fn spread_base_points(oracle: &Oracle, count: usize) -> Vec<Point> {
    let pts = oracle.points();
    let count = count.clamp(1, pts.len());
    if count == 1 {
        return vec![pts[0].clone()];
    }
    (0..count)
        .map(|k| pts[k * (pts.len() - 1) / (count - 1)].clone())
        .collect()
}

/// Oracles at several base points plus the realized B-basis at each.
pub struct Verifier {
    spec: Arc<SchemeSpec>,
    opts: VerifyOptions,
    basis: Vec<BasisTriple>,
    oracles: Vec<Oracle>,
    realized: Vec<BTreeMap<BasisTriple, DenseMatrix>>,
}

impl Verifier {
    pub fn new(spec: &Arc<SchemeSpec>, opts: VerifyOptions) -> Result<Verifier> {
        let first = Oracle::with_base(spec, None, opts.oracle_cap)?;
        let basis = enumerate_p(spec)?;
        let mut oracles = Vec::new();
        for p in spread_base_points(&first, opts.base_points) {
            oracles.push(first.rebased(&p)?);
        }
        let realized = oracles
            .iter()
            .map(|o| basis.iter().map(|t| (*t, o.realize_b2(t))).collect())
            .collect();
        Ok(Verifier {
            spec: spec.clone(),
            opts,
            basis,
            oracles,
            realized,
        })
    }

    pub fn oracles(&self) -> &[Oracle] {
        &self.oracles
    }

    pub fn basis(&self) -> &[BasisTriple] {
        &self.basis
    }

    pub fn realized(&self, oracle: usize, t: &BasisTriple) -> &DenseMatrix {
        &self.realized[oracle][t]
    }

    fn realize(&self, oracle: usize, x: &AlgebraElt) -> DenseMatrix {
        let o = &self.oracles[oracle];
        let mut acc = DenseMatrix::zero(self.spec.field(), o.dim());
        for (t, c) in x.terms() {
            acc = acc.add(&self.realized[oracle][t].scale(c));
        }
        acc
    }

    fn span_of(&self, oracle: usize, triples: &[BasisTriple]) -> Echelon {
        let n = self.oracles[oracle].dim();
        let mut e = Echelon::new(self.spec.field(), n * n);
        for t in triples {
            e.insert(self.realized[oracle][t].to_vector());
        }
        e
    }

    pub fn run(&self) -> Result<VerifySummary> {
        let checks = vec![
            self.dimension()?,
            self.structure_constants(),
            self.b1_structure_constants()?,
            self.basis_conversion(),
            self.transpose(),
            self.center()?,
            self.radical()?,
            self.quotient()?,
            self.corners()?,
            self.frobenius()?,
            self.base_point_independence()?,
        ];
        Ok(VerifySummary {
            base_points: self.oracles.iter().map(|o| o.base().to_string()).collect(),
            seed: self.opts.seed,
            passed: checks.iter().all(|c| c.passed),
            checks,
        })
    }

    /// `|ℙ| = 2^{2n₁}5^{n₂}` equals the rank of the realized basis and, on
    /// small schemes, the dimension of the algebra generated by `A_g, E_g*`.
    pub fn dimension(&self) -> Result<Check> {
        let expect = dim_t(&self.spec);
        let mut failures = Vec::new();
        let mut count = 1;
        if self.basis.len() as u128 != expect {
            failures.push(format!("|P| = {} but the closed form gives {expect}", self.basis.len()));
        }
        for (k, o) in self.oracles.iter().enumerate() {
            let mats: Vec<DenseMatrix> = self.basis.iter().map(|t| self.realized[k][t].clone()).collect();
            let rank = span_rank(&mats) as u128;
            count += 1;
            if rank != expect {
                failures.push(format!("realized rank {rank} at base {} but dim T = {expect}", o.base()));
            }
        }
        if self.oracles[0].dim() <= GENERATED_DIM_POINT_LIMIT {
            let gen = self.oracles[0].generated_dim()? as u128;
            count += 1;
            if gen != expect {
                failures.push(format!("A/E* generate an algebra of dimension {gen}, expected {expect}"));
            }
        }
        Ok(Check::new("dimension", count, failures))
    }

    /// `realize(B_a B_b) = realize(B_a) realize(B_b)` for all basis pairs.
    pub fn structure_constants(&self) -> Check {
        let mut failures = Vec::new();
        let mut count = 0;
        let field = self.spec.field();
        let n = self.oracles[0].dim();
        for a in &self.basis {
            for b in &self.basis {
                count += 1;
                let lhs = match mul_basis(&self.spec, a, b) {
                    Some((c, t)) => self.realized[0][&t].scale(&c),
                    None => DenseMatrix::zero(field, n),
                };
                if lhs != self.realized[0][a].mul(&self.realized[0][b]) {
                    failures.push(format!("B{a} B{b}"));
                }
            }
        }
        Check::new("structure-constants", count, failures)
    }

    /// Products in the `E* A E*` basis three ways: matrix product, triple
    /// intersection counts, and the B-basis rule conjugated by the basis
    /// change.
    pub fn b1_structure_constants(&self) -> Result<Check> {
        let o = &self.oracles[0];
        let mut failures = Vec::new();
        let mut count = 0;
        let realized_b1: BTreeMap<BasisTriple, DenseMatrix> = self.basis.iter().map(|t| (*t, o.realize_b1(t))).collect();
        for a in &self.basis {
            for b in self.basis.iter().filter(|b| b.g == a.i) {
                count += 1;
                let counted = o.b1_product_by_counting(a, b)?;
                if o.realize_b1_elt(&counted) != realized_b1[a].mul(&realized_b1[b]) {
                    failures.push(format!("counted product of EAE{a} and EAE{b} disagrees with the matrices"));
                }
                let via_b2 = b1_to_b2(&B1Elt::basis(&self.spec, *a)).checked_mul(&b1_to_b2(&B1Elt::basis(&self.spec, *b)))?;
                if b2_to_b1(&via_b2) != counted {
                    failures.push(format!("counted product of EAE{a} and EAE{b} disagrees with the B-basis rule"));
                }
            }
        }
        Ok(Check::new("b1-structure-constants", count, failures))
    }

    /// The subset-lattice inversion between the two bases, checked as
    /// matrices and as a round trip.
    pub fn basis_conversion(&self) -> Check {
        let o = &self.oracles[0];
        let mut failures = Vec::new();
        for t in &self.basis {
            let b1 = B1Elt::basis(&self.spec, *t);
            let b2 = b1_to_b2(&b1);
            if self.realize(0, &b2) != o.realize_b1(t) {
                failures.push(format!("inverse expansion of EAE{t}"));
            }
            if b2_to_b1(&b2) != b1 {
                failures.push(format!("round trip of EAE{t}"));
            }
            let single = AlgebraElt::basis(&self.spec, *t);
            if b1_to_b2(&b2_to_b1(&single)) != single {
                failures.push(format!("round trip of B{t}"));
            }
        }
        Check::new("basis-conversion", 3 * self.basis.len() as u64, failures)
    }

    pub fn transpose(&self) -> Check {
        let mut failures = Vec::new();
        for t in &self.basis {
            if self.realized[0][&t.transpose()] != self.realized[0][t].transpose() {
                failures.push(format!("transpose of B{t}"));
            }
        }
        Check::new("transpose", self.basis.len() as u64, failures)
    }

    /// Each `C_g` commutes with every `A_h` and `E_h*` at every base point,
    /// and the `C_g` multiply as `k̄_{g∩h} C_{g∪h}`.
    pub fn center(&self) -> Result<Check> {
        let mut failures = Vec::new();
        let mut count = 0;
        let idx = central_indices(&self.spec)?;
        let cs: Vec<AlgebraElt> = idx.iter().map(|g| build_c(&self.spec, *g)).collect::<Result<_>>()?;
        let masks = self.spec.masks()?;
        for (k, o) in self.oracles.iter().enumerate() {
            for (g, c) in idx.iter().zip(&cs) {
                let m = self.realize(k, c);
                for h in &masks {
                    for other in [o.adjacency_matrix(*h), o.dual_idempotent(*h)] {
                        count += 1;
                        if m.mul(&other) != other.mul(&m) {
                            failures.push(format!("C_{g} does not commute with a generator for {h} at base {}", o.base()));
                        }
                    }
                }
            }
        }
        for (g, cg) in idx.iter().zip(&cs) {
            count += 1;
            if !is_central(cg)? {
                failures.push(format!("C_{g} fails the symbolic membership test"));
            }
            for b in &self.basis {
                count += 1;
                let y = AlgebraElt::basis(&self.spec, *b);
                if &y * cg != cg * &y {
                    failures.push(format!("C_{g} does not commute with B{b}"));
                }
            }
            for (h, ch) in idx.iter().zip(&cs) {
                count += 1;
                let (s, gh) = center_mul(&self.spec, *g, *h);
                let want = build_c(&self.spec, gh)?.scale(&s);
                if cg * ch != want {
                    failures.push(format!("C_{g} C_{h} != k C_{gh}"));
                }
            }
        }
        Ok(Check::new("center", count, failures))
    }

    /// Ideal closure, nilpotency at the index, and a nonzero witness one
    /// step below it, symbolically and as matrices.
    pub fn radical(&self) -> Result<Check> {
        let mut failures = Vec::new();
        let mut count = 0u64;
        let rad = rad_basis(&self.spec)?.triples;
        let index = nilpotent_index(&self.spec);

        count += 1;
        if let Some((t, r)) = ideal_closure_violation(&self.spec)? {
            failures.push(format!("B{t} and B{r} multiply out of the radical"));
        }
        let span = self.span_of(0, &rad);
        for r in &rad {
            for t in &self.basis {
                let (mr, mt) = (&self.realized[0][r], &self.realized[0][t]);
                for prod in [mt.mul(mr), mr.mul(mt)] {
                    count += 1;
                    if !span.contains(prod.to_vector()) {
                        failures.push(format!("realized product of B{t} and B{r} leaves the radical span"));
                    }
                }
            }
        }

        let sweep = sweep_products(&self.spec, &rad, index, self.opts.samples, Some(self.opts.seed));
        count += sweep.sequences as u64;
        if let Some(chain) = sweep.counterexample {
            failures.push(format!("symbolic product of {} radical elements is nonzero: {chain:?}", index));
        }
        let (checked, found) = self.matrix_sweep(&rad, index);
        count += checked;
        if let Some(chain) = found {
            failures.push(format!("realized product of {index} radical elements is nonzero: {chain:?}"));
        }

        if !rad.is_empty() {
            let chain = witness_chain(&self.spec)?;
            count += 2;
            if chain.len() != index - 1 || chain_product(&self.spec, &chain).is_none() {
                failures.push("witness chain product vanishes symbolically".into());
            }
            let mut m = self.realized[0][&chain[0]].clone();
            for t in &chain[1..] {
                m = m.mul(&self.realized[0][t]);
            }
            if m.is_zero() {
                failures.push("witness chain product vanishes as a matrix".into());
            }
        }
        Ok(Check::new("radical", count, failures))
    }

    /// Products of `length` realized radical elements, exhaustive with
    /// pruning when small, otherwise sampled along composable chains.
    fn matrix_sweep(&self, rad: &[BasisTriple], length: usize) -> (u64, Option<Vec<BasisTriple>>) {
        if rad.is_empty() {
            return (0, None);
        }
        let mats: Vec<&DenseMatrix> = rad.iter().map(|t| &self.realized[0][t]).collect();
        let total = (rad.len() as u128).checked_pow(length as u32);
        if matches!(total, Some(t) if t <= EXHAUSTIVE_LIMIT) {
            let mut prefix = Vec::new();
            let found = matrix_dfs(&mats, length, None, &mut prefix);
            let found = found.map(|idx| idx.into_iter().map(|k| rad[k]).collect());
            return (total.unwrap() as u64, found);
        }
        let mut by_left: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (k, t) in rad.iter().enumerate() {
            by_left.entry(t.g).or_default().push(k);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        'outer: for _ in 0..self.opts.samples {
            let mut chain = vec![rng.random_range(0..rad.len())];
            while chain.len() < length {
                let Some(next) = by_left.get(&rad[*chain.last().unwrap()].i) else {
                    continue 'outer;
                };
                chain.push(next[rng.random_range(0..next.len())]);
            }
            let mut m = mats[chain[0]].clone();
            for &k in &chain[1..] {
                m = m.mul(mats[k]);
            }
            if !m.is_zero() {
                return (self.opts.samples as u64, Some(chain.into_iter().map(|k| rad[k]).collect()));
            }
        }
        (self.opts.samples as u64, None)
    }

    /// Matrix units, the lift to T modulo the radical (symbolic and as
    /// matrices), exact idempotence of diagonal D elements, and the block
    /// dimension count.
    pub fn quotient(&self) -> Result<Check> {
        let mut failures = Vec::new();
        let mut count = 0;
        let ds = d_triples(&self.spec)?;
        let blocks = wedderburn_blocks(&self.spec)?;
        let rad = rad_basis(&self.spec)?.triples;

        count += 1;
        let squares: usize = blocks.iter().map(|b| b.size * b.size).sum();
        if squares != ds.len() || ds.len() + rad.len() != self.basis.len() {
            failures.push(format!(
                "block sizes squared sum to {squares}, |D| = {}, rad = {}, dim T = {}",
                ds.len(),
                rad.len(),
                self.basis.len()
            ));
        }

        let block_of: BTreeMap<_, usize> = blocks
            .iter()
            .enumerate()
            .flat_map(|(k, b)| b.units.values().map(move |t| (*t, k)))
            .collect();
        let built: BTreeMap<_, AlgebraElt> = ds.iter().map(|t| Ok((*t, build_d(&self.spec, *t)?))).collect::<Result<_>>()?;
        let realized: BTreeMap<_, DenseMatrix> = built.iter().map(|(t, e)| (*t, self.realize(0, e))).collect();
        let rad_span = self.span_of(0, &rad);
        for a in &ds {
            for b in &ds {
                count += 1;
                let prod = quo_mul(&self.spec, a, b);
                let (ba, bb) = (&blocks[block_of[a]], &blocks[block_of[b]]);
                let unit = if block_of[a] == block_of[b] && a.i() == b.g() {
                    ba.unit(a.g(), b.i())
                } else {
                    None
                };
                if prod != unit {
                    failures.push(format!("D{a} D{b}: quotient product {prod:?}, matrix-unit rule {unit:?}"));
                }
                debug_assert!(prod.is_none() || signature(&self.spec, a) == bb.signature);
                let diff = &(&built[a] * &built[b]) - &lift(&self.spec, prod)?;
                if !in_radical(&diff) {
                    failures.push(format!("D{a} D{b} differs from its quotient product outside the radical"));
                }
                let lifted = prod.map(|t| realized[&t].clone()).unwrap_or_else(|| DenseMatrix::zero(self.spec.field(), self.oracles[0].dim()));
                if !rad_span.contains(realized[a].mul(&realized[b]).sub(&lifted).to_vector()) {
                    failures.push(format!("realized D{a} D{b} differs from its quotient product outside the radical span"));
                }
            }
            if a.g() == a.i() {
                count += 1;
                if &built[a] * &built[a] != built[a] {
                    failures.push(format!("D{a} is not idempotent"));
                }
            }
        }
        Ok(Check::new("quotient", count, failures))
    }

    /// Per corner: dimension split, radical index, and orthogonal
    /// idempotents (symbolic and realized).
    pub fn corners(&self) -> Result<Check> {
        let mut failures = Vec::new();
        let mut count = 0;
        for g in self.spec.masks()? {
            count += 1;
            let q = corner_quotient(&self.spec, g);
            let rad = corner_rad_basis(&self.spec, g);
            let top = self.spec.n_count(self.spec.mask_product(g, g), self.spec.zero());
            let all = corner_basis(&self.spec, g).len();
            if q.dim != 1 << top || q.dim + rad.len() != all {
                failures.push(format!("corner {g}: {} + {} != {all} or != 2^{top}", q.dim, rad.len()));
            }
            let index = (g & self.spec.p_divisible_mask()).len() + 1;
            if corner_nilpotent_index(&self.spec, g) != index || (rad.is_empty() != (index == 1)) {
                failures.push(format!("corner {g}: nilpotent index"));
            }
            let ds: Vec<_> = q
                .idempotent_masks
                .iter()
                .map(|a| {
                    let t = crate::quotient::DTriple::new(&self.spec, BasisTriple { g, h: *a, i: g })?;
                    let e = build_d(&self.spec, t)?;
                    let m = self.realize(0, &e);
                    Ok((*a, e, m))
                })
                .collect::<Result<_>>()?;
            for (a, ea, ma) in &ds {
                for (b, eb, mb) in &ds {
                    count += 1;
                    let (sym, mat) = (ea * eb, ma.mul(mb));
                    let ok = if a == b {
                        sym == *ea && mat == *ma
                    } else {
                        sym.is_zero() && mat.is_zero()
                    };
                    if !ok {
                        failures.push(format!("corner {g}: D({a}) D({b}) is not δ D({a})"));
                    }
                }
            }
            // B_{g,h,g} D_{g,i,g} = k̄_h D_{g,i,g} if h ⪯ i, else 0, for p ∤ k_h
            for h in q.idempotent_masks.iter().copied() {
                let bh = AlgebraElt::basis(&self.spec, BasisTriple { g, h, i: g });
                for (i, ei, _) in &ds {
                    count += 1;
                    let want = if h.subset_of(i) {
                        ei.scale(&self.spec.valency_scalar(h))
                    } else {
                        AlgebraElt::zero(&self.spec)
                    };
                    if &bh * ei != want || ei * &bh != want {
                        failures.push(format!("corner {g}: B({h}) D({i})"));
                    }
                }
            }
        }
        Ok(Check::new("corners", count, failures))
    }

    /// For a non-semisimple algebra the witness ideal and its annihilator
    /// have the closed-form dimensions, and they sum to less than dim T.
    pub fn frobenius(&self) -> Result<Check> {
        let Some(w) = frobenius_falsification_witness(&self.spec) else {
            return Ok(Check::new("frobenius", 0, Vec::new()));
        };
        let mut failures = Vec::new();
        let gens = witness_ideal(&self.spec)?;
        let elts: Vec<AlgebraElt> = gens.iter().map(|t| AlgebraElt::basis(&self.spec, *t)).collect();
        if gens.len() as u128 != w.left_ideal_dim {
            failures.push(format!("|U| = {} but expected {}", gens.len(), w.left_ideal_dim));
        }
        let realized: Vec<DenseMatrix> = gens.iter().map(|t| self.realized[0][t].clone()).collect();
        if span_rank(&realized) as u128 != w.left_ideal_dim {
            failures.push("witness ideal generators are dependent as matrices".into());
        }
        let symbolic = right_annihilator_dim(&self.spec, &gens)? as u128;
        let oracle = self.oracles[0].annihilator_dim(&self.basis, &elts) as u128;
        if symbolic != w.annihilator_dim || oracle != w.annihilator_dim {
            failures.push(format!(
                "annihilator dimension: closed form {}, symbolic {symbolic}, oracle {oracle}",
                w.annihilator_dim
            ));
        }
        // U must be a left ideal for the dimension count to certify anything
        let uspan = self.span_of(0, &gens);
        for t in &self.basis {
            for u in &gens {
                if !uspan.contains(self.realized[0][t].mul(&self.realized[0][u]).to_vector()) {
                    failures.push(format!("B{t} B{u} leaves the witness ideal"));
                }
            }
        }
        if w.total >= w.dim_t {
            failures.push(format!("{} + {} is not below dim T = {}", w.left_ideal_dim, w.annihilator_dim, w.dim_t));
        }
        Ok(Check::new("frobenius", 4 + (self.basis.len() * gens.len()) as u64, failures))
    }

    /// Dimensions of T and of the radical span agree across base points.
    pub fn base_point_independence(&self) -> Result<Check> {
        let rad = rad_basis(&self.spec)?.triples;
        let mut seen = Vec::new();
        for k in 0..self.oracles.len() {
            seen.push((self.span_of(k, &self.basis).rank(), self.span_of(k, &rad).rank()));
        }
        let mut failures = Vec::new();
        if seen.windows(2).any(|w| w[0] != w[1]) {
            failures.push(format!("(dim T, dim Rad) per base point: {seen:?}"));
        }
        Ok(Check::new("base-point-independence", seen.len() as u64, failures))
    }
}

fn matrix_dfs(mats: &[&DenseMatrix], length: usize, acc: Option<DenseMatrix>, prefix: &mut Vec<usize>) -> Option<Vec<usize>> {
    if prefix.len() == length {
        return Some(prefix.clone());
    }
    for (k, m) in mats.iter().enumerate() {
        let next = match &acc {
            None => (*m).clone(),
            Some(a) => a.mul(m),
        };
        if next.is_zero() {
            continue;
        }
        prefix.push(k);
        if let Some(found) = matrix_dfs(mats, length, Some(next), prefix) {
            return Some(found);
        }
        prefix.pop();
    }
    None
}

/// Runs the whole suite for one scheme.
pub fn verify(spec: &Arc<SchemeSpec>, opts: VerifyOptions) -> Result<VerifySummary> {
    Verifier::new(spec, opts)?.run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_point_spread() {
        let s = Arc::new(SchemeSpec::new(vec![2, 3], 5).unwrap());
        let o = Oracle::new(&s).unwrap();
        let pts = spread_base_points(&o, 2);
        assert_eq!(pts, vec![Point(vec![0, 0]), Point(vec![1, 2])]);
        assert_eq!(spread_base_points(&o, 100).len(), 6);
        assert_eq!(spread_base_points(&o, 0).len(), 1);
    }

    #[test]
    fn small_suite_passes() {
        for p in [2, 3] {
            let s = Arc::new(SchemeSpec::new(vec![2, 3], p).unwrap());
            let summary = verify(&s, VerifyOptions::default()).unwrap();
            for c in &summary.checks {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
            assert!(summary.passed);
        }
    }
}
