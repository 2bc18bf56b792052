//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal; exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use terwilliger_core::algebra::{corner_basis, enumerate_p, mul_basis};
use terwilliger_core::center::{build_c, central_indices, CentralIndex};
use terwilliger_core::oracle::{span_rank, DenseMatrix, Oracle};
use terwilliger_core::quotient::{
    build_d, corner_quotient, d_triples, frobenius_falsification_witness, lift, quo_mul, wedderburn_blocks,
    witness_ideal, DTriple,
};
use terwilliger_core::radical::{
    corner_nilpotent_index, corner_rad_basis, in_radical, nilpotent_index, rad_basis, rad_dim, witness_chain,
};
use terwilliger_core::verify::spread_base_points;
use terwilliger_core::{AlgebraElt, BasisTriple, SchemeSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn spec(sizes: &[u64], p: u64) -> Arc<SchemeSpec> {
    Arc::new(SchemeSpec::new(sizes.to_vec(), p).expect("valid scheme"))
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `0`, `g`, `h`, `1` on sizes (2,3): `g` is the factor of size 3.
fn tri(s: &SchemeSpec, text: &str) -> BasisTriple {
    let parts: Vec<&str> = text
        .split(',')
        .map(|c| match c {
            "0" => "00",
            "g" => "01",
            "h" => "10",
            "1" => "11",
            _ => panic!("unknown symbol {c}"),
        })
        .collect();
    BasisTriple::parse(s, &parts.join(",")).expect("triple in P")
}

fn sorted(s: &SchemeSpec, list: &[&str]) -> Vec<BasisTriple> {
    let mut v: Vec<BasisTriple> = list.iter().map(|t| tri(s, t)).collect();
    v.sort();
    v
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    ensure!(spent < limit, "{what} took {spent:.1?}, limit {limit:?}");
    Ok(())
}

const MINUTE: Duration = Duration::from_secs(60);

fn dimension_formula() -> Outcome {
    let mut seen = Vec::new();
    for sizes in [&[2u64][..], &[3], &[2, 3], &[2, 2], &[3, 3], &[2, 3, 3]] {
        let start = Instant::now();
        let s = spec(sizes, 0);
        let n1 = sizes.iter().filter(|&&k| k == 2).count() as u32;
        let n2 = sizes.iter().filter(|&&k| k > 2).count() as u32;
        let formula = 2usize.pow(2 * n1) * 5usize.pow(n2);
        let basis = enumerate_p(&s).map_err(fail)?;
        let o = Oracle::new(&s).map_err(fail)?;
        ensure!(o.dim() <= 54, "{sizes:?} has {} points", o.dim());
        let realized: Vec<DenseMatrix> = basis.iter().map(|t| o.realize_b1(t)).collect();
        let rank = span_rank(&realized);
        ensure!(basis.len() == formula && rank == formula, "{sizes:?}: |P| {} formula {formula} rank {rank}", basis.len());
        within(start, MINUTE, &format!("{sizes:?}"))?;
        seen.push(formula.to_string());
    }
    Ok(format!("dims {}", seen.join(", ")))
}

const SIX_POINT_BASIS: [&str; 20] = [
    "0,0,0", "0,g,g", "0,h,h", "0,1,1", "g,0,g", "g,g,0", "g,g,g", "g,h,1", "g,1,h", "g,1,1",
    "h,0,h", "h,g,1", "h,h,0", "h,1,g", "1,0,1", "1,g,h", "1,g,1", "1,h,g", "1,1,0", "1,1,g",
];

fn six_point_basis() -> Outcome {
    let s = spec(&[2, 3], 0);
    let listed: Vec<BasisTriple> = SIX_POINT_BASIS.iter().map(|t| tri(&s, t)).collect();
    ensure!(enumerate_p(&s).map_err(fail)? == listed, "basis list differs");
    for p in [0, 3, 5] {
        let s = spec(&[2, 3], p);
        let got = mul_basis(&s, &tri(&s, "g,1,1"), &tri(&s, "1,g,1"));
        let want = (s.field().from_u64(2), tri(&s, "g,1,1"));
        ensure!(got.as_ref() == Some(&want), "char {p}: product {got:?}");
    }
    Ok("20 triples in order; product 2·B(g,1,1) in char 0, 3, 5".into())
}

fn center_example() -> Outcome {
    let s = spec(&[2, 3], 0);
    let f = s.field();
    let idx = central_indices(&s).map_err(fail)?;
    ensure!(idx.len() == 2, "dim Z = {}", idx.len());
    let c0 = build_c(&s, CentralIndex::new(&s, s.zero()).map_err(fail)?).map_err(fail)?;
    ensure!(c0 == AlgebraElt::identity(&s).map_err(fail)?, "C_0 is not the identity");
    let cg = build_c(&s, CentralIndex::new(&s, s.parse_mask("01").map_err(fail)?).map_err(fail)?).map_err(fail)?;
    let want = AlgebraElt::from_terms(
        &s,
        [
            (tri(&s, "0,0,0"), f.from_u64(2)),
            (tri(&s, "g,g,g"), f.one()),
            (tri(&s, "h,0,h"), f.from_u64(2)),
            (tri(&s, "1,g,1"), f.one()),
        ],
    )
    .map_err(fail)?;
    ensure!(cg == want, "C_g = {cg}");
    ensure!(&cg * &cg == cg.scale(&f.from_u64(2)), "C_g C_g != 2 C_g");
    Ok("C_0 = I, C_g = 2B(0,0,0) + B(g,g,g) + 2B(h,0,h) + B(1,g,1), dim Z = 2".into())
}

const RADICAL_TRIPLES: [&str; 12] = [
    "0,g,g", "0,1,1", "g,g,0", "g,g,g", "g,1,h", "g,1,1", "h,g,1", "h,1,g", "1,g,h", "1,g,1", "1,1,0", "1,1,g",
];

fn radical_example() -> Outcome {
    let start = Instant::now();
    let s = spec(&[2, 3], 2);
    let rad = rad_basis(&s).map_err(fail)?.triples;
    ensure!(rad_dim(&s).map_err(fail)? == 12, "rad_dim {}", rad.len());
    ensure!(rad == sorted(&s, &RADICAL_TRIPLES), "radical basis differs");
    ensure!(nilpotent_index(&s) == 3, "nilpotent index {}", nilpotent_index(&s));

    let o = Oracle::new(&s).map_err(fail)?;
    let mats: Vec<DenseMatrix> = rad.iter().map(|t| o.realize_b2(t)).collect();
    let mut products = 0;
    for a in &mats {
        for b in &mats {
            let ab = a.mul(b);
            for c in &mats {
                ensure!(ab.mul(c).is_zero(), "a triple product of radical elements is nonzero");
                products += 1;
            }
        }
    }
    let chain = witness_chain(&s).map_err(fail)?;
    ensure!(chain.len() == 2, "witness chain has length {}", chain.len());
    ensure!(!o.realize_b2(&chain[0]).mul(&o.realize_b2(&chain[1])).is_zero(), "witness product vanishes");
    within(start, MINUTE, "radical sweep")?;
    Ok(format!("{products} triple products zero, witness nonzero"))
}

const D_TRIPLES_CHAR_2: [&str; 8] = ["0,0,0", "0,h,h", "g,0,g", "g,h,1", "h,0,h", "h,h,0", "1,0,1", "1,h,g"];

fn quotient_basis_example() -> Outcome {
    let s = spec(&[2, 3], 5);
    let all: Vec<BasisTriple> = d_triples(&s).map_err(fail)?.iter().map(DTriple::triple).collect();
    ensure!(all == enumerate_p(&s).map_err(fail)?, "char 5 quotient basis is not all of P");

    let s = spec(&[2, 3], 2);
    let got: Vec<BasisTriple> = d_triples(&s).map_err(fail)?.iter().map(DTriple::triple).collect();
    ensure!(got == sorted(&s, &D_TRIPLES_CHAR_2), "char 2 quotient basis {got:?}");
    let d = |t: &str| DTriple::new(&s, tri(&s, t)).map_err(fail);
    let prod = quo_mul(&s, &d("g,h,1")?, &d("1,h,g")?);
    ensure!(prod == Some(d("g,0,g")?), "quo_mul gave {prod:?}");
    Ok("20 D-triples in char 5, 8 in char 2, (g,h,1)(1,h,g) = (g,0,g)".into())
}

fn block_example() -> Outcome {
    let mut out = Vec::new();
    for (p, want) in [(5u64, vec![4usize, 2]), (2, vec![2, 2])] {
        let s = spec(&[2, 3], p);
        let blocks = wedderburn_blocks(&s).map_err(fail)?;
        let sizes: Vec<usize> = blocks.iter().map(|b| b.size).collect();
        ensure!(sizes == want, "char {p}: blocks {sizes:?}");
        let squares: usize = sizes.iter().map(|k| k * k).sum();
        let dt = enumerate_p(&s).map_err(fail)?.len();
        ensure!(squares == dt - rad_dim(&s).map_err(fail)?, "char {p}: bookkeeping {squares}");
        out.push(format!("char {p} {sizes:?}"));
    }
    Ok(out.join(", "))
}

const ORACLE_SPECS: [(&[u64], &[u64]); 2] = [(&[2, 3], &[0, 2, 3, 5]), (&[2, 2, 3], &[2, 3])];

fn faithfulness_sweep() -> Outcome {
    let start = Instant::now();
    let mut comparisons = 0usize;
    for (sizes, chars) in ORACLE_SPECS {
        for &p in chars {
            let s = spec(sizes, p);
            let o = Oracle::new(&s).map_err(fail)?;
            let basis = enumerate_p(&s).map_err(fail)?;
            let mats: Vec<DenseMatrix> = basis.iter().map(|t| o.realize_b2(t)).collect();
            for (a, ma) in basis.iter().zip(&mats) {
                for (b, mb) in basis.iter().zip(&mats) {
                    let want = match mul_basis(&s, a, b) {
                        Some((c, t)) => o.realize_b2(&t).scale(&c),
                        None => DenseMatrix::zero(s.field(), o.dim()),
                    };
                    ensure!(ma.mul(mb) == want, "{sizes:?} char {p}: {a} {b}");
                    comparisons += 1;
                }
            }
        }
    }
    within(start, 5 * MINUTE, "faithfulness sweep")?;
    Ok(format!("{comparisons} products agree"))
}

fn center_commutation() -> Outcome {
    let mut checks = 0usize;
    for (sizes, chars) in ORACLE_SPECS {
        for &p in chars {
            let s = spec(sizes, p);
            let base = Oracle::new(&s).map_err(fail)?;
            let points = spread_base_points(&base, 2);
            ensure!(points.len() == 2 && points[0] != points[1], "need two base points");
            for x in &points {
                let o = base.rebased(x).map_err(fail)?;
                for g in central_indices(&s).map_err(fail)? {
                    let c = o.realize_elt(&build_c(&s, g).map_err(fail)?);
                    for h in s.masks().map_err(fail)? {
                        for m in [o.adjacency_matrix(h), o.dual_idempotent(h)] {
                            ensure!(c.mul(&m) == m.mul(&c), "{sizes:?} char {p} at {x}: C_{g} against {h}");
                            checks += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checks} commutators vanish"))
}

fn matrix_units() -> Outcome {
    let mut pairs = 0usize;
    for p in [2u64, 5] {
        let s = spec(&[2, 3], p);
        let blocks = wedderburn_blocks(&s).map_err(fail)?;
        let locate = |t: &DTriple| {
            blocks
                .iter()
                .enumerate()
                .find_map(|(k, b)| b.units.iter().find(|(_, u)| *u == t).map(|((r, c), _)| (k, *r, *c)))
        };
        let all = d_triples(&s).map_err(fail)?;
        let built: Vec<AlgebraElt> = all.iter().map(|t| build_d(&s, *t)).collect::<Result<_, _>>().map_err(fail)?;
        for (a, da) in all.iter().zip(&built) {
            for (b, db) in all.iter().zip(&built) {
                let (ka, i, j) = locate(a).ok_or_else(|| format!("{a} in no block"))?;
                let (kb, k, l) = locate(b).ok_or_else(|| format!("{b} in no block"))?;
                let want = if ka == kb && j == k { blocks[ka].unit(i, l) } else { None };
                let got = quo_mul(&s, a, b);
                ensure!(got == want, "char {p}: {a}·{b} gave {got:?}, expected {want:?}");
                let diff = &(da * db) - &lift(&s, got).map_err(fail)?;
                ensure!(in_radical(&diff), "char {p}: {a}·{b} differs from its lift outside the radical");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn frobenius_falsification() -> Outcome {
    let mut out = Vec::new();
    for (sizes, want_u, want_r, want_t) in [(&[2u64, 3][..], 2usize, 16usize, 20usize), (&[3, 3], 3, 21, 25)] {
        let s = spec(sizes, 2);
        let basis = enumerate_p(&s).map_err(fail)?;
        let o = Oracle::new(&s).map_err(fail)?;
        let gens = witness_ideal(&s).map_err(fail)?;
        let elts: Vec<AlgebraElt> = gens.iter().map(|t| AlgebraElt::basis(&s, *t)).collect();
        let u = span_rank(&elts.iter().map(|e| o.realize_elt(e)).collect::<Vec<_>>());
        let r = o.annihilator_dim(&basis, &elts);
        ensure!(u == want_u && r == want_r && basis.len() == want_t, "{sizes:?}: {u} + {r} vs {}", basis.len());
        ensure!(u + r < basis.len(), "{sizes:?}: no shortfall");
        let w = frobenius_falsification_witness(&s).ok_or("no witness")?;
        ensure!(
            (w.left_ideal_dim, w.annihilator_dim, w.dim_t) == (u as u128, r as u128, want_t as u128),
            "{sizes:?}: closed form {w:?}"
        );
        out.push(format!("{u} + {r} = {} < {}", u + r, basis.len()));
    }
    Ok(out.join(", "))
}

/// Smallest L such that every product of L matrices from `mats` vanishes.
fn matrix_nilpotent_index(mats: &[DenseMatrix]) -> usize {
    if mats.is_empty() {
        return 1;
    }
    let mut layer: Vec<DenseMatrix> = mats.to_vec();
    let mut length = 1;
    while layer.iter().any(|m| !m.is_zero()) {
        layer = layer
            .iter()
            .filter(|m| !m.is_zero())
            .flat_map(|m| mats.iter().map(move |n| m.mul(n)))
            .collect();
        length += 1;
    }
    length
}

fn corner_structure() -> Outcome {
    let mut corners = 0usize;
    for p in [2u64, 5] {
        let s = spec(&[2, 3], p);
        let o = Oracle::new(&s).map_err(fail)?;
        for g in s.masks().map_err(fail)? {
            let mids = corner_basis(&s, g);
            let rad = corner_rad_basis(&s, g);
            let n_gg = s.n_count(s.mask_product(g, g), s.zero());
            ensure!(mids.len() == (1 << n_gg) + rad.len(), "corner {g}: {} vs 2^{n_gg} + {}", mids.len(), rad.len());
            let realized: Vec<DenseMatrix> = mids.iter().map(|h| o.realize_b2(&BasisTriple { g, h: *h, i: g })).collect();
            ensure!(span_rank(&realized) == mids.len(), "corner {g}: realized rank");

            let formula = g.support().filter(|&a| (s.sizes()[a - 1] - 1).is_multiple_of(p)).count() + 1;
            let rad_mats: Vec<DenseMatrix> = rad.iter().map(|h| o.realize_b2(&BasisTriple { g, h: *h, i: g })).collect();
            let actual = matrix_nilpotent_index(&rad_mats);
            ensure!(
                corner_nilpotent_index(&s, g) == formula && actual == formula,
                "corner {g}: index {} formula {formula} matrices {actual}",
                corner_nilpotent_index(&s, g)
            );

            let q = corner_quotient(&s, g);
            let ds: Vec<AlgebraElt> = q
                .idempotent_masks
                .iter()
                .map(|a| DTriple::new(&s, BasisTriple { g, h: *a, i: g }).and_then(|t| build_d(&s, t)))
                .collect::<Result<_, _>>()
                .map_err(fail)?;
            for (x, dx) in ds.iter().enumerate() {
                let mx = o.realize_elt(dx);
                for (y, dy) in ds.iter().enumerate() {
                    let my = o.realize_elt(dy);
                    let (sym, mat) = if x == y { (dx.clone(), mx.clone()) } else { (AlgebraElt::zero(&s), DenseMatrix::zero(s.field(), o.dim())) };
                    ensure!(dx * dy == sym, "corner {g}: symbolic D products");
                    ensure!(mx.mul(&my) == mat, "corner {g}: realized D products");
                }
            }
            corners += 1;
        }
    }
    Ok(format!("{corners} corners"))
}

fn base_point_independence() -> Outcome {
    let mut out = Vec::new();
    for (sizes, chars, count) in [(&[2u64, 3][..], &[2u64, 5][..], 6usize), (&[2, 2, 3], &[2, 3], 3)] {
        for &p in chars {
            let s = spec(sizes, p);
            let basis = enumerate_p(&s).map_err(fail)?;
            let rad = rad_basis(&s).map_err(fail)?.triples;
            let base = Oracle::new(&s).map_err(fail)?;
            let points = spread_base_points(&base, count);
            ensure!(points.len() >= 2, "fewer than two base points");
            for x in &points {
                let o = base.rebased(x).map_err(fail)?;
                let dim_t = o.algebra_dim(&basis);
                let dim_rad = span_rank(&rad.iter().map(|t| o.realize_b2(t)).collect::<Vec<_>>());
                ensure!(
                    dim_t == basis.len() && dim_rad == rad.len(),
                    "{sizes:?} char {p} at {x}: dims {dim_t}, {dim_rad}"
                );
            }
            out.push(format!("{sizes:?}/{p} at {} points", points.len()));
        }
    }
    Ok(out.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("dimension formula", dimension_formula),
        ("six-point basis and product", six_point_basis),
        ("center of the six-point scheme", center_example),
        ("radical in characteristic 2", radical_example),
        ("quotient basis", quotient_basis_example),
        ("Wedderburn blocks", block_example),
        ("oracle faithfulness", faithfulness_sweep),
        ("center commutation", center_commutation),
        ("quotient matrix units", matrix_units),
        ("Frobenius falsification", frobenius_falsification),
        ("corner structure", corner_structure),
        ("base-point independence", base_point_independence),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let spent = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name:<32} PASS  {detail} ({spent:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name:<32} FAIL  {why} ({spent:.2?})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
