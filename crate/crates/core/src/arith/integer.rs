//! Exact signed integers.
//!
//! Values that fit in an `i64` are stored inline and all arithmetic on them
//! is checked; on overflow the operation is redone in arbitrary precision.
//! The representation is normalized, so a `Big` value never fits in `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Big(BigInt),
}

/// An arbitrary-precision signed integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Integer(Repr);

impl Integer {
    pub const ZERO: Integer = Integer(Repr::Small(0));
    pub const ONE: Integer = Integer(Repr::Small(1));

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer(Repr::Small(v)),
            None => Integer(Repr::Big(b)),
        }
    }

    /// Copy out as a `BigInt`.
    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(v) => Some(v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => u64::try_from(*v).ok(),
            Repr::Big(b) => b.to_u64(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_even(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => v & 1 == 0,
            Repr::Big(b) => b.is_even(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(v) => v.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Integer {
        match &self.0 {
            Repr::Small(v) => match v.checked_abs() {
                Some(a) => Integer(Repr::Small(a)),
                None => Integer::from_big(BigInt::from(*v).abs()),
            },
            Repr::Big(b) => Integer::from_big(b.abs()),
        }
    }

    /// Number of significant bits of `|self|`; zero for zero.
    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Small(v) => 64 - u64::from(v.unsigned_abs().leading_zeros()),
            Repr::Big(b) => b.bits(),
        }
    }

    /// Quotient rounded toward negative infinity. Panics on a zero divisor.
    pub fn div_floor(&self, other: &Integer) -> Integer {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                Integer(Repr::Small(a.div_floor(b)))
            }
            _ => Integer::from_big(self.to_bigint().div_floor(&other.to_bigint())),
        }
    }

    /// Remainder with the sign of the divisor. Panics on a zero divisor.
    pub fn mod_floor(&self, other: &Integer) -> Integer {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) if *b != -1 => Integer(Repr::Small(a.mod_floor(b))),
            (Repr::Small(_), Repr::Small(_)) => Integer::ZERO,
            _ => Integer::from_big(self.to_bigint().mod_floor(&other.to_bigint())),
        }
    }

    /// `self mod other` as a `u64`, for a positive divisor that fits.
    pub fn mod_u64(&self, modulus: u64) -> u64 {
        assert!(modulus > 0, "modulus must be positive");
        match &self.0 {
            Repr::Small(v) => (*v as i128).rem_euclid(modulus as i128) as u64,
            Repr::Big(b) => b
                .mod_floor(&BigInt::from(modulus))
                .to_u64()
                .expect("residue below a u64 modulus"),
        }
    }

    /// `true` iff `other` divides `self`. Zero divides only zero.
    pub fn is_multiple_of(&self, other: &Integer) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        self.mod_floor(other).is_zero()
    }

    pub fn pow(&self, exp: u32) -> Integer {
        if let Repr::Small(v) = self.0 {
            if let Some(p) = v.checked_pow(exp) {
                return Integer(Repr::Small(p));
            }
        }
        Integer::from_big(num_traits::Pow::pow(self.to_bigint(), exp))
    }

    /// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Integer) -> Integer {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                let g = binary_gcd(a.unsigned_abs(), b.unsigned_abs());
                Integer::from(g)
            }
            _ => Integer::from_big(self.to_bigint().gcd(&other.to_bigint())),
        }
    }
}

fn binary_gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

macro_rules! impl_from_small {
    ($($t:ty),*) => {$(
        impl From<$t> for Integer {
            fn from(v: $t) -> Integer {
                Integer(Repr::Small(i64::from(v)))
            }
        }
    )*};
}
impl_from_small!(i8, i16, i32, i64, u8, u16, u32);

macro_rules! impl_from_wide {
    ($($t:ty),*) => {$(
        impl From<$t> for Integer {
            fn from(v: $t) -> Integer {
                match i64::try_from(v) {
                    Ok(s) => Integer(Repr::Small(s)),
                    Err(_) => Integer(Repr::Big(BigInt::from(v))),
                }
            }
        }
    )*};
}
impl_from_wide!(u64, usize, i128, u128);

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Integer {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> BigInt {
        v.to_bigint()
    }
}

impl Default for Integer {
    fn default() -> Integer {
        Integer::ZERO
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Integer) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Integer) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(v) = a.$checked(*b) {
                        return Integer(Repr::Small(v));
                    }
                }
                Integer::from_big($trait::$method(self.to_bigint(), rhs.to_bigint()))
            }
        }
        impl $trait<Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                $trait::$method(self, &rhs)
            }
        }
        impl $trait<i64> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: i64) -> Integer {
                $trait::$method(self, &Integer::from(rhs))
            }
        }
        impl $trait<i64> for Integer {
            type Output = Integer;
            fn $method(self, rhs: i64) -> Integer {
                $trait::$method(&self, &Integer::from(rhs))
            }
        }
        impl $assign_trait<&Integer> for Integer {
            fn $assign(&mut self, rhs: &Integer) {
                *self = $trait::$method(&*self, rhs);
            }
        }
        impl $assign_trait<Integer> for Integer {
            fn $assign(&mut self, rhs: Integer) {
                *self = $trait::$method(&*self, &rhs);
            }
        }
    };
}

impl_binop!(Add, add, checked_add, AddAssign, add_assign);
impl_binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
impl_binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Integer(Repr::Small(n)),
                None => Integer::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Sum for Integer {
    fn sum<I: Iterator<Item = Integer>>(iter: I) -> Integer {
        iter.fold(Integer::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Integer> for Integer {
    fn sum<I: Iterator<Item = &'a Integer>>(iter: I) -> Integer {
        iter.fold(Integer::ZERO, |acc, x| acc + x)
    }
}

impl Product for Integer {
    fn product<I: Iterator<Item = Integer>>(iter: I) -> Integer {
        iter.fold(Integer::ONE, |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Integer> for Integer {
    fn product<I: Iterator<Item = &'a Integer>>(iter: I) -> Integer {
        iter.fold(Integer::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid integer literal {0:?}")]
pub struct ParseIntegerError(pub String);

impl FromStr for Integer {
    type Err = ParseIntegerError;

    fn from_str(s: &str) -> Result<Integer, ParseIntegerError> {
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        if let Ok(v) = t.parse::<i64>() {
            return Ok(Integer(Repr::Small(v)));
        }
        t.parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|_| ParseIntegerError(s.to_string()))
    }
}

// JSON: a number when it fits in i64, otherwise a decimal string.
impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => serializer.serialize_i64(*v),
            Repr::Big(b) => serializer.serialize_str(&b.to_string()),
        }
    }
}

struct IntegerVisitor;

impl Visitor<'_> for IntegerVisitor {
    type Value = Integer;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
        Ok(Integer::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
        Ok(Integer::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Integer, D::Error> {
        deserializer.deserialize_any(IntegerVisitor)
    }
}

impl Zero for Integer {
    fn zero() -> Integer {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Integer {
        Integer::ONE
    }
}
