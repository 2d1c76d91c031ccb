use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Ring;
use crate::arith::Integer;
use crate::error::{Error, Result};

/// An element `x + y*w` of a [`Ring`].
///
/// The operator impls panic when the operands live in different rings; the
/// `try_*` methods report that as [`Error::RingMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingElement {
    ring: Ring,
    x: Integer,
    y: Integer,
}

impl RingElement {
    pub(crate) fn from_parts(x: Integer, y: Integer, ring: Ring) -> RingElement {
        RingElement { ring, x, y }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn x(&self) -> &Integer {
        &self.x
    }

    pub fn y(&self) -> &Integer {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    /// The rational integer this element equals, if it lies in `Z_R`.
    pub fn as_integer(&self) -> Option<&Integer> {
        self.y.is_zero().then_some(&self.x)
    }

    pub(crate) fn check_same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &RingElement) -> RingElement {
        RingElement { ring: self.ring, x: &self.x + &other.x, y: &self.y + &other.y }
    }

    fn sub_unchecked(&self, other: &RingElement) -> RingElement {
        RingElement { ring: self.ring, x: &self.x - &other.x, y: &self.y - &other.y }
    }

    fn mul_unchecked(&self, other: &RingElement) -> RingElement {
        if matches!(self.ring, Ring::Integers) {
            return RingElement { ring: self.ring, x: &self.x * &other.x, y: Integer::ZERO };
        }
        let (c0, c1) = self.ring.omega_square();
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x + &yy * c0;
        let mut y = &self.x * &other.y + &self.y * &other.x;
        if c1 != 0 {
            y += &yy * c1;
        }
        RingElement { ring: self.ring, x, y }
    }

    /// Multiply by a rational integer.
    pub fn scale(&self, k: &Integer) -> RingElement {
        RingElement { ring: self.ring, x: &self.x * k, y: &self.y * k }
    }

    pub fn pow(&self, exp: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Galois conjugate (`sqrt m -> -sqrt m`); identity on `Z`.
    pub fn conjugate(&self) -> RingElement {
        let (_, c1) = self.ring.omega_square();
        RingElement {
            ring: self.ring,
            x: &self.x + &(&self.y * c1),
            y: -&self.y,
        }
    }

    /// Field norm `N(a) = a * conj(a)`; equals `a^2` on `Z`.
    pub fn norm(&self) -> Integer {
        if matches!(self.ring, Ring::Integers) {
            return &self.x * &self.x;
        }
        let (c0, c1) = self.ring.omega_square();
        let mut n = &self.x * &self.x - &(&self.y * &self.y) * c0;
        if c1 != 0 {
            n += &(&self.x * &self.y) * c1;
        }
        n
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Sign of the real embedding with `sqrt m > 0`. Only meaningful for
    /// `Z` and real quadratic rings.
    pub(crate) fn real_sign(&self) -> i32 {
        match self.ring {
            Ring::Integers => self.x.signum(),
            Ring::Quadratic(q) => {
                let (_, c1) = self.ring.omega_square();
                // value = (2x + c1*y + y*sqrt m) / 2 in the half basis,
                // x + y*sqrt m otherwise
                let u = if c1 == 1 { &(&self.x * 2) + &self.y } else { self.x.clone() };
                sign_of_surd(&u, &self.y, q.m())
            }
        }
    }

    /// Parse `x`, `x+y*w` or `x-y*w` (whitespace ignored) as an element of `ring`.
    pub fn parse(s: &str, ring: Ring) -> Result<RingElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad ring element {s:?}; expected INT or INT(+|-)INT*w"));
        let is_int = |t: &str| {
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        let (x, y) = match compact.strip_suffix("*w") {
            None => (compact.as_str(), "0"),
            Some(body) => {
                let split = body
                    .char_indices()
                    .skip(1)
                    .find(|(_, c)| *c == '+' || *c == '-')
                    .map(|(i, _)| i)
                    .ok_or_else(bad)?;
                (&body[..split], &body[split..])
            }
        };
        if !is_int(x) || !is_int(y) {
            return Err(bad());
        }
        let x: Integer = x.parse().map_err(|_| bad())?;
        let y: Integer = y.parse().map_err(|_| bad())?;
        ring.element(x, y)
    }
}

/// Sign of `u + v*sqrt(m)` for integers `u, v` and a non-square `m > 0`.
pub(crate) fn sign_of_surd(u: &Integer, v: &Integer, m: i64) -> i32 {
    let (su, sv) = (u.signum(), v.signum());
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    let uu = u * u;
    let mvv = &(v * v) * m;
    if uu > mvv {
        su
    } else {
        sv
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else if self.y.is_negative() {
            write!(f, "{}-{}*w", self.x, self.y.abs())
        } else {
            write!(f, "{}+{}*w", self.x, self.y)
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

fn assert_same(a: &RingElement, b: &RingElement) {
    if let Err(e) = a.check_same_ring(b) {
        panic!("{e}");
    }
}

macro_rules! impl_ring_op {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                assert_same(self, rhs);
                self.$inner(rhs)
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                assert_same(&self, &rhs);
                self.$inner(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                assert_same(&self, rhs);
                self.$inner(rhs)
            }
        }
    };
}

impl_ring_op!(Add, add, add_unchecked);
impl_ring_op!(Sub, sub, sub_unchecked);
impl_ring_op!(Mul, mul, mul_unchecked);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { ring: self.ring, x: -&self.x, y: -&self.y }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn embedding() {
        let g = Ring::gaussian();
        assert!(g.embed(0).is_zero());
        assert!(g.embed(1).is_one());
        let five = g.embed(5);
        assert_eq!((five.x(), five.y()), (&int(5), &int(0)));
        assert_eq!(&g.embed(2) * &g.embed(3), g.embed(6));
    }

    #[test]
    fn gaussian_product() {
        let g = Ring::gaussian();
        let a = g.element(1, 1).unwrap();
        let b = g.element(1, -1).unwrap();
        assert_eq!(&a * &b, g.embed(2));
        let i = g.omega().unwrap();
        assert_eq!(&i * &i, g.embed(-1));
        assert_eq!(&a + &g.zero(), a);
    }

    #[test]
    fn half_basis_multiplication() {
        // w = (1 + sqrt 17)/2 satisfies w^2 = w + 4
        let r = Ring::quadratic(17).unwrap();
        let w = r.omega().unwrap();
        assert_eq!(&w * &w, r.element(4, 1).unwrap());
        // (1 + w)(1 + w) = 1 + 2w + w + 4 = 5 + 3w
        let a = r.element(1, 1).unwrap();
        assert_eq!(&a * &a, r.element(5, 3).unwrap());
    }

    #[test]
    fn norms() {
        assert_eq!(Ring::gaussian().one().norm(), int(1));
        assert_eq!(Ring::quadratic(17).unwrap().element(1, 1).unwrap().norm(), int(-2));
        assert_eq!(Ring::gaussian().element(2, 1).unwrap().norm(), int(5));
        assert_eq!(Ring::Integers.embed(-3).norm(), int(9));
        let r = Ring::quadratic(-3).unwrap();
        let a = r.element(3, -2).unwrap();
        assert_eq!(&a * &a.conjugate(), r.embed(a.norm()));
    }

    #[test]
    fn units() {
        let g = Ring::gaussian();
        assert!(g.one().is_unit());
        assert!(!g.zero().is_unit());
        assert!(g.omega().unwrap().is_unit());
        assert!(!g.element(1, 1).unwrap().is_unit());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Ring::gaussian().one();
        let b = Ring::Integers.one();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_, _))));
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn text_format() {
        let r = Ring::quadratic(17).unwrap();
        let a = RingElement::parse(" 1 + 1 * w ", r).unwrap();
        assert_eq!(a, r.element(1, 1).unwrap());
        assert_eq!(a.to_string(), "1+1*w");
        let b = RingElement::parse("-3-12*w", r).unwrap();
        assert_eq!(b, r.element(-3, -12).unwrap());
        assert_eq!(b.to_string(), "-3-12*w");
        assert_eq!(RingElement::parse("0+5*w", r).unwrap().to_string(), "0+5*w");
        assert_eq!(RingElement::parse("-7", Ring::Integers).unwrap(), Ring::Integers.embed(-7));
        for bad in ["", "w", "3*w", "1+w", "1+-2*w", "1++2*w", "x", "1+2*w+3"] {
            assert!(RingElement::parse(bad, r).is_err(), "{bad:?} should not parse");
        }
        assert!(RingElement::parse("1+2*w", Ring::Integers).is_err());
    }

    #[test]
    fn surd_signs() {
        assert_eq!(sign_of_surd(&int(-4), &int(1), 17), 1);
        assert_eq!(sign_of_surd(&int(-5), &int(1), 17), -1);
        assert_eq!(sign_of_surd(&int(0), &int(-1), 2), -1);
        assert_eq!(sign_of_surd(&int(3), &int(0), 2), 1);
    }
}
