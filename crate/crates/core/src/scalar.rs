//! Exact scalars over a prime field or the rationals.
//!
//! Every scalar the engine produces is the image of an integer (or a ratio of
//! integers whose denominator is a unit), so the prime subfield is all we ever
//! need. A [`Field`] is identified by its characteristic; characteristic 0
//! means exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime characteristic (exclusive). Residues below 2^32
/// keep every product inside a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    characteristic: u64,
}

impl Field {
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < MAX_CHARACTERISTIC && is_prime(characteristic)) {
            Ok(Field { characteristic })
        } else {
            Err(Error::BadCharacteristic(characteristic))
        }
    }

    pub fn rationals() -> Self {
        Field { characteristic: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Mod {
                value: v % p,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(v.clone())),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    pub fn from_biguint(&self, v: &BigUint) -> Scalar {
        self.from_bigint(&BigInt::from(v.clone()))
    }

    /// `(-1)^k` as a field element.
    pub fn sign(&self, k: u32) -> Scalar {
        if k.is_multiple_of(2) {
            self.one()
        } else {
            self.from_i64(-1)
        }
    }

    /// Parses a decimal residue, a signed integer, or `num/den`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        let num = self.from_bigint(&num);
        let den = self.from_bigint(&den).inv().ok_or_else(bad)?;
        Ok(&num * &den)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Mod { modulus, .. } => *modulus == self.characteristic,
            Scalar::Rational(_) => self.characteristic == 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a prime field or of Q. Arithmetic between scalars of
/// different fields is a logic error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field {
                characteristic: *modulus,
            },
            Scalar::Rational(_) => Field::rationals(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn field_clash(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar arithmetic across fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => field_clash(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: (a + p - b) % p,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => field_clash(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => field_clash(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                *a = (*a + b) % *p;
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => field_clash(self, rhs),
        }
    }
}

/// Residues print as decimal numbers in `[0, p)`; rationals print as
/// `num/den`, or as a bare integer when the denominator is 1.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => {
                let (n, d) = (r.numer(), r.denom());
                debug_assert!(d.is_positive());
                write!(f, "{n}/{d}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(Field::new(6), Err(Error::BadCharacteristic(6)));
        assert_eq!(Field::new(1), Err(Error::BadCharacteristic(1)));
        assert!(Field::new(0).is_ok());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(4_294_967_291).is_ok());
        assert!(Field::new(1 << 32).is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = Field::new(5).unwrap();
        let two = f.from_i64(2);
        assert_eq!(two.inv().unwrap(), f.from_i64(3));
        assert!(f.zero().inv().is_none());
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn parse_and_render() {
        let q = Field::rationals();
        let x = q.parse_scalar("-3/6").unwrap();
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!(q.parse_scalar("4/2").unwrap().to_string(), "2");
        let f = Field::new(7).unwrap();
        assert_eq!(f.parse_scalar("1/2").unwrap().to_string(), "4");
        assert!(f.parse_scalar("1/7").is_err());
        assert!(f.parse_scalar("x").is_err());
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixing_fields_panics() {
        let _ = &Field::new(3).unwrap().one() + &Field::new(5).unwrap().one();
    }
}
