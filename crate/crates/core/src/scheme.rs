//! Factorial scheme parameters and the mask calculus on `{0,1}^n`.
//!
//! A relation of the direct product of trivial schemes is an n-tuple over
//! `{0,1}`; it is stored as its support, one bit per coordinate (coordinate
//! `a` lives in bit `a - 1`). Externally a mask is a length-n bitstring with
//! coordinate 1 leftmost.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Hard limit on the number of factors a mask word can hold.
pub const MAX_FACTORS: usize = 32;

/// Limit on the number of factors for operations that enumerate `{0,1}^n`
/// or the triple set.
pub const ENUMERATION_CAP: usize = 20;

/// A subset of the coordinates `[1, n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mask {
    bits: u32,
    width: u8,
}

impl Mask {
    pub fn from_bits(width: usize, bits: u32) -> Result<Mask> {
        if width == 0 || width > MAX_FACTORS {
            return Err(Error::BadMask {
                text: format!("{bits:#b}"),
                reason: format!("width {width} outside [1, {MAX_FACTORS}]"),
            });
        }
        if width < 32 && bits >> width != 0 {
            return Err(Error::BadMask {
                text: format!("{bits:#b}"),
                reason: format!("bits set beyond coordinate {width}"),
            });
        }
        Ok(Mask {
            bits,
            width: width as u8,
        })
    }

    pub(crate) fn raw(width: usize, bits: u32) -> Mask {
        debug_assert!((1..=MAX_FACTORS).contains(&width));
        Mask {
            bits,
            width: width as u8,
        }
    }

    pub fn empty(width: usize) -> Mask {
        Mask::raw(width, 0)
    }

    pub fn full(width: usize) -> Mask {
        Mask::raw(width, full_bits(width))
    }

    /// The mask whose only coordinate is `coord` (1-based).
    pub fn singleton(width: usize, coord: usize) -> Mask {
        assert!(coord >= 1 && coord <= width, "coordinate {coord} outside [1, {width}]");
        Mask::raw(width, 1 << (coord - 1))
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Size of the support.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, coord: usize) -> bool {
        coord >= 1 && coord <= self.width() && self.bits >> (coord - 1) & 1 == 1
    }

    /// The 1-based coordinates in the support, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.width()).filter(move |&a| self.contains(a))
    }

    /// The partial order: `self ⪯ other` iff the support is contained.
    pub fn subset_of(&self, other: &Mask) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    pub fn try_union(self, other: Mask) -> Result<Mask> {
        self.same_width(&other)?;
        Ok(self | other)
    }

    pub fn try_intersect(self, other: Mask) -> Result<Mask> {
        self.same_width(&other)?;
        Ok(self & other)
    }

    pub fn try_setminus(self, other: Mask) -> Result<Mask> {
        self.same_width(&other)?;
        Ok(self - other)
    }

    pub fn try_symdiff(self, other: Mask) -> Result<Mask> {
        self.same_width(&other)?;
        Ok(self ^ other)
    }

    pub fn try_subset_of(&self, other: &Mask) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.subset_of(other))
    }

    /// All masks `a` with `self ⪯ a ⪯ upper`, in canonical order.
    pub fn interval(&self, upper: &Mask) -> Vec<Mask> {
        if !self.subset_of(upper) {
            return Vec::new();
        }
        let free = upper.bits & !self.bits;
        let mut out: Vec<Mask> = submasks(free)
            .map(|s| Mask::raw(self.width(), self.bits | s))
            .collect();
        out.sort();
        out
    }

    fn same_width(&self, other: &Mask) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            })
        }
    }

    #[inline]
    fn check(&self, other: &Mask) {
        assert_eq!(self.width, other.width, "mask widths differ");
    }
}

/// Iterates every submask of `bits`, including 0 and `bits` itself.
pub(crate) fn submasks(bits: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(bits);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & bits) };
        Some(cur)
    })
}

fn full_bits(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl BitOr for Mask {
    type Output = Mask;
    fn bitor(self, rhs: Mask) -> Mask {
        self.check(&rhs);
        Mask::raw(self.width(), self.bits | rhs.bits)
    }
}

impl BitAnd for Mask {
    type Output = Mask;
    fn bitand(self, rhs: Mask) -> Mask {
        self.check(&rhs);
        Mask::raw(self.width(), self.bits & rhs.bits)
    }
}

impl BitXor for Mask {
    type Output = Mask;
    fn bitxor(self, rhs: Mask) -> Mask {
        self.check(&rhs);
        Mask::raw(self.width(), self.bits ^ rhs.bits)
    }
}

/// Set difference.
impl Sub for Mask {
    type Output = Mask;
    fn sub(self, rhs: Mask) -> Mask {
        self.check(&rhs);
        Mask::raw(self.width(), self.bits & !rhs.bits)
    }
}

/// Canonical order: lexicographic on the rendered bitstring, so coordinate 1
/// is the most significant position.
impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 1..=self.width() {
            f.write_str(if self.contains(a) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask({self})")
    }
}

impl FromStr for Mask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mask> {
        let s = s.trim();
        let bad = |reason: &str| Error::BadMask {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() || s.len() > MAX_FACTORS {
            return Err(bad("expected 1 to 32 binary digits"));
        }
        let mut bits = 0u32;
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return Err(bad("only '0' and '1' are allowed")),
            }
        }
        Ok(Mask::raw(s.len(), bits))
    }
}

/// The valency `k_g`, exact and reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valency {
    pub integer: BigUint,
    pub scalar: Scalar,
    pub p_divides: bool,
}

/// Parameters of a factorial scheme together with its ground field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchemeSpec {
    sizes: Vec<u64>,
    field: Field,
    /// Coordinates with `|U_a| > 2`.
    large: u32,
    /// Coordinates with `p | |U_a| - 1` (empty in characteristic 0).
    p_divisible: u32,
    /// `|U_a| - 1` reduced mod p, per coordinate (unused in characteristic 0).
    residues: Vec<u64>,
}

impl SchemeSpec {
    pub fn new(sizes: Vec<u64>, characteristic: u64) -> Result<SchemeSpec> {
        if sizes.is_empty() {
            return Err(Error::NoFactors);
        }
        if sizes.len() > MAX_FACTORS {
            return Err(Error::TooManyFactors {
                n: sizes.len(),
                max: MAX_FACTORS,
            });
        }
        if let Some((index, &size)) = sizes.iter().enumerate().find(|(_, &s)| s < 2) {
            return Err(Error::FactorTooSmall {
                index: index + 1,
                size,
            });
        }
        let field = Field::new(characteristic)?;
        let p = field.characteristic();
        let mut large = 0u32;
        let mut p_divisible = 0u32;
        for (a, &s) in sizes.iter().enumerate() {
            if s > 2 {
                large |= 1 << a;
            }
            if p != 0 && (s - 1) % p == 0 {
                p_divisible |= 1 << a;
            }
        }
        let residues = sizes
            .iter()
            .map(|&s| if p == 0 { 0 } else { (s - 1) % p })
            .collect();
        Ok(SchemeSpec {
            sizes,
            field,
            large,
            p_divisible,
            residues,
        })
    }

    pub fn n(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// Number of factors of size exactly 2.
    pub fn n1(&self) -> usize {
        self.n() - self.n2()
    }

    /// Number of factors of size greater than 2.
    pub fn n2(&self) -> usize {
        self.large.count_ones() as usize
    }

    /// Number of coordinates with `p | |U_a| - 1`.
    pub fn p_divisible_count(&self) -> usize {
        self.p_divisible.count_ones() as usize
    }

    pub fn p_divisible_mask(&self) -> Mask {
        Mask::raw(self.n(), self.p_divisible)
    }

    pub fn zero(&self) -> Mask {
        Mask::empty(self.n())
    }

    pub fn full(&self) -> Mask {
        Mask::full(self.n())
    }

    pub fn mask(&self, bits: u32) -> Result<Mask> {
        Mask::from_bits(self.n(), bits)
    }

    /// Parses a bitstring and checks it has this scheme's width.
    pub fn parse_mask(&self, text: &str) -> Result<Mask> {
        let m: Mask = text.parse()?;
        if m.width() != self.n() {
            return Err(Error::BadMask {
                text: text.to_string(),
                reason: format!("expected {} digits", self.n()),
            });
        }
        Ok(m)
    }

    pub fn check_mask(&self, g: &Mask) -> Result<()> {
        if g.width() == self.n() {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                left: self.n(),
                right: g.width(),
            })
        }
    }

    pub fn check_enumeration_cap(&self) -> Result<()> {
        if self.n() > ENUMERATION_CAP {
            Err(Error::EnumerationCap {
                n: self.n(),
                cap: ENUMERATION_CAP,
            })
        } else {
            Ok(())
        }
    }

    /// All of `{0,1}^n` in canonical order.
    pub fn masks(&self) -> Result<Vec<Mask>> {
        self.check_enumeration_cap()?;
        let n = self.n();
        let mut out: Vec<Mask> = (0..1u32 << n).map(|b| Mask::raw(n, b)).collect();
        out.sort();
        Ok(out)
    }

    /// Number of points `|X| = ∏ |U_a|`, saturating.
    pub fn point_count(&self) -> u128 {
        self.sizes
            .iter()
            .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
    }

    /// Restriction of a support to the coordinates with `|U_a| > 2`.
    pub fn circ(&self, g: Mask) -> Mask {
        Mask::raw(g.width(), g.bits & self.large)
    }

    pub fn valency(&self, g: Mask) -> Valency {
        let integer = g
            .support()
            .fold(BigUint::one(), |acc, a| acc * BigUint::from(self.sizes[a - 1] - 1));
        Valency {
            scalar: self.field.from_biguint(&integer),
            p_divides: self.p_divides_valency(g),
            integer,
        }
    }

    /// `k̄_g` without building the integer.
    pub fn valency_scalar(&self, g: Mask) -> Scalar {
        match self.field.characteristic() {
            0 => self.valency(g).scalar,
            p => {
                let v = g.support().fold(1u64, |acc, a| acc * self.residues[a - 1] % p);
                Scalar::Mod {
                    value: v,
                    modulus: p,
                }
            }
        }
    }

    pub fn p_divides_valency(&self, g: Mask) -> bool {
        g.bits & self.p_divisible != 0
    }

    /// Triple membership `(g, h, i) ∈ ℙ`:
    /// `g △ i ⪯ h ⪯ (g △ i) ∪ (g ∩ i)°`.
    pub fn in_p(&self, g: Mask, h: Mask, i: Mask) -> bool {
        let d = g ^ i;
        d.subset_of(&h) && h.subset_of(&(d | self.circ(g & i)))
    }

    /// The five-argument bracket
    /// `(g △ k) ∪ ((g ∩ k)° ∖ i) ∪ ((h ∪ j) ∩ (g ∩ i ∩ k)°)`.
    pub fn bracket5(&self, g: Mask, h: Mask, i: Mask, j: Mask, k: Mask) -> Mask {
        (g ^ k) | (self.circ(g & k) - i) | ((h | j) & self.circ(g & i & k))
    }

    /// `gh = [g, 1, 1, 1, h]`, the maximum of `ℙ_{g,h}`.
    pub fn mask_product(&self, g: Mask, h: Mask) -> Mask {
        let one = self.full();
        self.bracket5(g, one, one, one, h)
    }

    /// The intersection number `p_{g,h}^i`, as a product of the per-factor
    /// numbers of the trivial schemes.
    pub fn intersection_number(&self, g: Mask, h: Mask, i: Mask) -> BigUint {
        let mut acc = BigUint::one();
        for a in 1..=self.n() {
            let size = self.sizes[a - 1];
            let factor = match (g.contains(a), h.contains(a), i.contains(a)) {
                (false, false, false) | (false, true, true) | (true, false, true) => 1,
                (true, true, false) => size - 1,
                (true, true, true) => size - 2,
                _ => 0,
            };
            if factor == 0 {
                return BigUint::ZERO;
            }
            acc *= BigUint::from(factor);
        }
        acc
    }

    /// `n_{g,h}`: coordinates of `g ∖ h` whose factor has `p ∤ |U_a| - 1`.
    pub fn n_count(&self, g: Mask, h: Mask) -> usize {
        ((g - h).bits & !self.p_divisible).count_ones() as usize
    }

    /// The layer `{a : h ⪯ a ⪯ g, p ∤ k_a, |a ∖ h| = i}`.
    pub fn u_set(&self, g: Mask, h: Mask, i: usize) -> Result<Vec<Mask>> {
        if !h.try_subset_of(&g)? {
            return Err(Error::OutOfRange(format!("{h} is not below {g}")));
        }
        if self.p_divides_valency(h) {
            return Err(Error::OutOfRange(format!(
                "p divides the valency of {h}"
            )));
        }
        let top = self.n_count(g, h);
        if i > top {
            return Err(Error::OutOfRange(format!(
                "layer {i} exceeds n_(g,h) = {top}"
            )));
        }
        Ok(h
            .interval(&g)
            .into_iter()
            .filter(|a| !self.p_divides_valency(*a) && (*a - h).len() == i)
            .collect())
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(u64::to_string).collect();
        write!(f, "sizes=({}), char={}", sizes.join(","), self.characteristic())
    }
}
