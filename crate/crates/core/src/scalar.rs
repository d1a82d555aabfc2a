//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Description of the coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    /// The rational numbers, arbitrary precision.
    Rationals,
    /// The prime field Z/p, p < 2^31.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 31) || !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the coefficient field. Rationals are kept in lowest terms
/// with positive denominator; prime-field values in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, modulus: p },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Fp { value: 1, modulus: p },
        }
    }

    pub fn from_integer(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(p as i64) as u32;
                Scalar::Fp { value: m, modulus: p }
            }
        }
    }

    /// Build `numer/denom` in the given field; the denominator must be invertible.
    pub fn from_ratio(field: Field, numer: BigInt, denom: BigInt) -> Result<Scalar> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(numer, denom))),
            Field::Prime(p) => {
                let n = bigint_mod(&numer, p);
                let d = bigint_mod(&denom, p);
                if d == 0 {
                    return Err(Error::ScalarOutOfField(format!("{}/{}", numer, denom)));
                }
                let inv = fp_inv(d, p);
                Ok(Scalar::Fp { value: mulmod(n, inv, p), modulus: p })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "mixed-field scalar arithmetic");
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, .. }) => {
                Scalar::Fp { value: mulmod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: fp_inv(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// `true` for rationals with negative numerator; used only for printing.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{}", value),
        }
    }
}

fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn fp_inv(a: u32, p: u32) -> u32 {
    // extended Euclid on i64; p < 2^31 so no overflow
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "attempt to invert a non-unit mod p");
    s0.rem_euclid(p as i64) as u32
}

fn bigint_mod(n: &BigInt, p: u32) -> u32 {
    use num_traits::ToPrimitive;
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u32().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(2147483647).is_ok()); // 2^31 - 1 is prime
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(0).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn rational_normal_form() {
        let a = Scalar::from_ratio(Field::Rationals, BigInt::from(2), BigInt::from(-4)).unwrap();
        match &a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn fp_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = Scalar::from_integer(f, 5);
        let b = Scalar::from_integer(f, 4);
        assert_eq!(a.mul(&b), Scalar::from_integer(f, 6)); // 20 mod 7
        assert_eq!(a.add(&b), Scalar::from_integer(f, 2));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(Scalar::from_integer(f, -1), Scalar::from_integer(f, 6));
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_field_rejected() {
        let a = Scalar::from_integer(Field::Rationals, 1);
        let b = Scalar::from_integer(Field::prime(5).unwrap(), 1);
        let _ = a.add(&b);
    }
}
