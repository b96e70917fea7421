//! Exact scalars: prime fields `F_p` and arbitrary-precision rationals.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient field of a computation: a prime field or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Validates primality for `Prime` fields.
    pub fn checked(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(self)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Fp { p: *p, v: 0 },
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Fp { p: *p, v: 1 % *p },
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    /// Embeds a signed integer.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: m }
            }
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Embeds a big integer (used to cast Mobius values into the field).
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut m = n % &p_big;
                if m.is_negative() {
                    m += &p_big;
                }
                let digits = m.to_u64_digits().1;
                Scalar::Fp {
                    p: *p,
                    v: digits.first().copied().unwrap_or(0),
                }
            }
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
        }
    }

    /// Number of field elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Rational => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rational => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

/// One exact field element. Prime-field values are reduced into `[0, p)`;
/// rationals are kept in lowest terms by `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { p: u64, v: u64 },
    Rat(BigRational),
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
            Scalar::Rat(_) => FieldSpec::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: (a + b) % p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: (p - v) % p,
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: mul_mod(*a, *b, *p),
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "division by zero");
                Scalar::Fp {
                    p: *p,
                    v: pow_mod(*v, p - 2, *p),
                }
            }
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Finds an element of multiplicative order exactly `n` in `F_p`,
/// searching small bases. Exists iff `n` divides `p - 1`.
pub fn root_of_unity(p: u64, n: u64) -> Option<u64> {
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return None;
    }
    if n == 1 {
        return Some(1 % p);
    }
    for g in 2..p {
        let w = pow_mod(g, (p - 1) / n, p);
        // w has order dividing n; accept when no proper divisor kills it
        if (1..n)
            .filter(|k| n.is_multiple_of(*k))
            .all(|k| pow_mod(w, k, p) != 1)
            && pow_mod(w, n, p) == 1
        {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(FieldSpec::Prime(5).checked().is_ok());
        assert!(FieldSpec::Prime(6).checked().is_err());
        assert!(FieldSpec::Prime(2).checked().is_ok());
        assert!(FieldSpec::Prime(1).checked().is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&b), f.from_i64(1));
        assert_eq!(a.inv().mul(&a), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Rational;
        let half = f.from_i64(1).div(&f.from_i64(2));
        assert_eq!(half.add(&half), f.one());
    }

    #[test]
    fn roots_of_unity() {
        // 2 has order 4 mod 5; some element of order 2 mod 5 is 4
        let w = root_of_unity(5, 2).unwrap();
        assert_eq!(mul_mod(w, w, 5), 1);
        assert_ne!(w, 1);
        // order 3 requires p = 7
        assert!(root_of_unity(5, 3).is_none());
        let w3 = root_of_unity(7, 3).unwrap();
        assert_eq!(pow_mod(w3, 3, 7), 1);
        assert_ne!(pow_mod(w3, 1, 7), 1);
    }
}
