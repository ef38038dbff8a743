//! Ground fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which ground field a ring is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Build a prime field, checking that `p` is a prime below `2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp {
                    v: r.to_u32().expect("residue fits"),
                    p,
                }
            }
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::CoefficientNotInField(format!(
                "{num}/{den} over {self}"
            )));
        }
        Ok(self.from_bigint(num) / d)
    }

    /// Whether `s` lives in this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Q(_)) => true,
            (FieldSpec::Prime(p), Scalar::Fp { p: q, .. }) => p == q,
            _ => false,
        }
    }

    /// Every element of a prime field, in the order `0, 1, ..., p-1`.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |v| Scalar::Fp { v, p })),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `QQ`, `Q`, `F_p`, `Fp:p`, `GF(p)` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "QQ" | "Q" | "q" | "qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix("Fp:"))
            .or_else(|| t.strip_prefix("fp:"))
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognised field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Prime-field elements carry their modulus so that
/// arithmetic needs no external context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    v: pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32,
                    p: *p,
                }
            }
        }
    }

    /// True when the canonical printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(q.abs()),
            s => s.clone(),
        }
    }

    /// Image in `F_p`, or `None` when the denominator vanishes mod `p`.
    /// Prime-field inputs must already live in `F_p`.
    pub fn reduce_mod(&self, p: u32) -> Option<Scalar> {
        let fp = FieldSpec::Prime(p);
        match self {
            Scalar::Q(q) => fp.from_fraction(q.numer(), q.denom()).ok(),
            Scalar::Fp { p: q, .. } if *q == p => Some(self.clone()),
            Scalar::Fp { .. } => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) {
        if let (Scalar::Fp { p, .. }, Scalar::Fp { p: q, .. }) = (self, other) {
            assert_eq!(p, q, "mixing prime fields");
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => {
                        self.check_same(rhs);
                        Scalar::Fp {
                            v: $fp(*a as u64, *b as u64, *p as u64) as u32,
                            p: *p,
                        }
                    }
                    _ => panic!("mixing rational and prime-field scalars"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| a * b % p
);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(5).unwrap();
        let a = f.from_i64(-2);
        assert_eq!(a, f.from_i64(3));
        assert_eq!(&a * &a.inv(), f.one());
        assert_eq!(-&f.one(), f.from_i64(4));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(91).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn fractions_in_prime_field() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(f2
            .from_fraction(&BigInt::from(1), &BigInt::from(2))
            .is_err());
        let f7 = FieldSpec::prime(7).unwrap();
        let half = f7.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half, f7.from_i64(4));
    }
}
