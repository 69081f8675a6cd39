use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Field descriptor: the rationals or a prime field `F_p` with `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field descriptor, rejecting composites and moduli that do not fit.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElem::Mod {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => FieldElem::Mod {
                value: reduce_bigint(v, p),
                modulus: p,
            },
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Result<FieldElem> {
        match *self {
            Field::Rational => Ok(FieldElem::Rational(v.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(v.numer(), p);
                let den = reduce_bigint(v.denom(), p);
                if den == 0 {
                    return Err(Error::NotInvertible(format!("{} mod {}", v.denom(), p)));
                }
                Ok(FieldElem::Mod {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }

    /// Whether `e` is an element of this field.
    pub fn contains(&self, e: &FieldElem) -> bool {
        match (self, e) {
            (Field::Rational, FieldElem::Rational(_)) => true,
            (Field::Prime(p), FieldElem::Mod { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    /// Inverse of `Display`: `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| Error::Invalid(format!("unknown field `{s}`, expected `q` or `fp:<p>`")))?;
        Field::prime(p)
    }
}

/// An element of [`Field`]. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero, mirroring integer division.
    pub fn inv(&self) -> FieldElem {
        match self {
            FieldElem::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                FieldElem::Rational(r.recip())
            }
            FieldElem::Mod { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                FieldElem::Mod {
                    value: inv_mod(*value, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Small integer value, if the element is one (residues map to `[0, p)`).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldElem::Rational(r) if r.is_integer() => r.numer().to_i64(),
            FieldElem::Rational(_) => None,
            FieldElem::Mod { value, .. } => i64::try_from(*value).ok(),
        }
    }

    /// Sign for display: residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_negative(),
            FieldElem::Mod { .. } => false,
        }
    }

    fn check(&self, other: &FieldElem) {
        debug_assert_eq!(self.field(), other.field(), "mixed-field arithmetic");
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => write!(f, "{r}"),
            FieldElem::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod {
                    value: add_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a - b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod {
                    value: add_mod(*a, *modulus - *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl $atr<&FieldElem> for FieldElem {
            fn $am(&mut self, rhs: &FieldElem) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}

owned_binop!(Add, add, AddAssign, add_assign);
owned_binop!(Sub, sub, SubAssign, sub_assign);
owned_binop!(Mul, mul, MulAssign, mul_assign);

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    v.mod_floor(&m).to_u64().expect("residue fits")
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = p - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % p == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(2).is_ok());
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(1_000_000_007 * 3).is_err());
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-4), FieldElem::Mod { value: 3, modulus: 7 });
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a - &b, f.from_i64(1));
        assert_eq!(&b - &a, f.from_i64(6));
        assert_eq!(&a * &a.inv(), f.one());
        assert_eq!(-&f.zero(), f.zero());
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Field::Rational;
        let half = q.from_rational(&BigRational::new(2.into(), (-4).into())).unwrap();
        match &half {
            FieldElem::Rational(r) => {
                assert_eq!(*r.numer(), BigInt::from(-1));
                assert_eq!(*r.denom(), BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(half.to_string(), "-1/2");
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::Prime(7);
        let r = BigRational::new((-4).into(), 1.into());
        assert_eq!(f.from_rational(&r).unwrap().to_i64(), Some(3));
        let bad = BigRational::new(1.into(), 14.into());
        assert!(f.from_rational(&bad).is_err());
    }
}
