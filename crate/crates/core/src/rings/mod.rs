//! The concrete GCD domains: `Z` and norm-Euclidean quadratic rings of
//! integers `O_K`, `K = Q(sqrt m)`.
//!
//! A quadratic element is stored as coordinates `(x, y)` over the integral
//! basis `{1, w}` where `w = (1 + sqrt m)/2` if `m = 1 (mod 4)` and
//! `w = sqrt m` otherwise. In both cases `w^2 = c0 + c1*w` for small integer
//! constants, which is all the arithmetic needs.

mod element;
mod euclid;
mod splitting;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factorize, nth_root_floor, Integer};
use crate::error::{Error, Result};

pub use element::RingElement;
pub(crate) use euclid::gcd_raw;
pub use euclid::{
    are_associates, canonical_associate, canonical_associate_with_unit, extended_gcd_ring,
    gcd_ring, is_coprime,
};
pub use splitting::{primes_above, PrimesAbove, Splitting};

/// Imaginary quadratic fields whose ring of integers is norm-Euclidean.
pub const IMAGINARY_ALLOWLIST: [i64; 5] = [-1, -2, -3, -7, -11];

/// Real quadratic fields whose ring of integers is norm-Euclidean.
pub const REAL_ALLOWLIST: [i64; 16] = [2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73];

/// Integral basis convention for a quadratic ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisConvention {
    /// `w = sqrt m`, used when `m = 2, 3 (mod 4)`.
    OmegaSqrt,
    /// `w = (1 + sqrt m)/2`, used when `m = 1 (mod 4)`.
    OmegaHalf,
}

/// Which quadratic fields may be instantiated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Allowlist {
    pub imaginary: Vec<i64>,
    pub real: Vec<i64>,
}

impl Default for Allowlist {
    fn default() -> Allowlist {
        Allowlist { imaginary: IMAGINARY_ALLOWLIST.to_vec(), real: REAL_ALLOWLIST.to_vec() }
    }
}

impl Allowlist {
    pub fn contains(&self, m: i64) -> bool {
        self.imaginary.contains(&m) || self.real.contains(&m)
    }
}

/// A quadratic ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticRing {
    m: i64,
    // fundamental unit (x, y) > 1 for real fields
    unit: Option<(i64, i64)>,
}

impl QuadraticRing {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn basis(&self) -> BasisConvention {
        if self.m.rem_euclid(4) == 1 {
            BasisConvention::OmegaHalf
        } else {
            BasisConvention::OmegaSqrt
        }
    }

    pub fn is_real(&self) -> bool {
        self.m > 0
    }
}

/// Identifies the ambient domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Quadratic(QuadraticRing),
}

impl Ring {
    pub fn integers() -> Ring {
        Ring::Integers
    }

    /// `Z[i]`.
    pub fn gaussian() -> Ring {
        Ring::quadratic(-1).expect("-1 is allowlisted")
    }

    /// The ring of integers of `Q(sqrt m)`, restricted to the default allowlist.
    pub fn quadratic(m: i64) -> Result<Ring> {
        Ring::quadratic_allowing(m, &Allowlist::default())
    }

    /// As [`Ring::quadratic`] with a caller-supplied allowlist. Rings outside
    /// the default list may fail the runtime Euclidean check in `divmod`.
    pub fn quadratic_allowing(m: i64, allowlist: &Allowlist) -> Result<Ring> {
        if m == 0 || m == 1 || !is_squarefree(m) {
            return Err(Error::UnsupportedRing(format!("m = {m} is not a squarefree integer other than 0, 1")));
        }
        if !allowlist.contains(m) {
            return Err(Error::UnsupportedRing(format!("Q(sqrt {m}) is not on the norm-Euclidean allowlist")));
        }
        let unit = if m > 0 { Some(fundamental_unit(m)?) } else { None };
        Ok(Ring::Quadratic(QuadraticRing { m, unit }))
    }

    pub fn quadratic_parameter(&self) -> Option<i64> {
        match self {
            Ring::Integers => None,
            Ring::Quadratic(q) => Some(q.m),
        }
    }

    pub fn basis(&self) -> Option<BasisConvention> {
        match self {
            Ring::Integers => None,
            Ring::Quadratic(q) => Some(q.basis()),
        }
    }

    /// `(c0, c1)` with `w^2 = c0 + c1*w`; zero for `Z`, where `w` is unused.
    pub(crate) fn omega_square(&self) -> (i64, i64) {
        match self {
            Ring::Integers => (0, 0),
            Ring::Quadratic(q) => match q.basis() {
                BasisConvention::OmegaSqrt => (q.m, 0),
                BasisConvention::OmegaHalf => ((q.m - 1) / 4, 1),
            },
        }
    }

    pub fn zero(&self) -> RingElement {
        self.embed(Integer::ZERO)
    }

    pub fn one(&self) -> RingElement {
        self.embed(Integer::ONE)
    }

    /// The image `k * 1_R` of a rational integer.
    pub fn embed(&self, k: impl Into<Integer>) -> RingElement {
        RingElement::from_parts(k.into(), Integer::ZERO, *self)
    }

    /// The basis element `w`; fails for `Z`.
    pub fn omega(&self) -> Result<RingElement> {
        self.element(0, 1)
    }

    /// `x + y*w`; `y` must be zero in `Z`.
    pub fn element(&self, x: impl Into<Integer>, y: impl Into<Integer>) -> Result<RingElement> {
        let y = y.into();
        if matches!(self, Ring::Integers) && !y.is_zero() {
            return Err(Error::Parse("Z has no w coordinate".into()));
        }
        Ok(RingElement::from_parts(x.into(), y, *self))
    }

    /// The unit group when it is finite (imaginary rings and `Z`).
    pub fn finite_units(&self) -> Option<Vec<RingElement>> {
        match self {
            Ring::Integers => Some(vec![self.embed(1), self.embed(-1)]),
            Ring::Quadratic(q) if q.is_real() => None,
            Ring::Quadratic(_) => {
                let mut units = Vec::new();
                for x in -2i64..=2 {
                    for y in -2i64..=2 {
                        let e = RingElement::from_parts(x.into(), y.into(), *self);
                        if e.norm().is_one() {
                            units.push(e);
                        }
                    }
                }
                Some(units)
            }
        }
    }

    /// Fundamental unit `> 1` of a real quadratic ring.
    pub fn fundamental_unit(&self) -> Option<RingElement> {
        match self {
            Ring::Quadratic(QuadraticRing { unit: Some((x, y)), .. }) => {
                Some(RingElement::from_parts((*x).into(), (*y).into(), *self))
            }
            _ => None,
        }
    }
}

fn is_squarefree(m: i64) -> bool {
    factorize(&Integer::from(m))
        .map(|f| f.factors.iter().all(|(_, e)| *e == 1))
        .unwrap_or(false)
}

const UNIT_SEARCH_LIMIT: i64 = 1_000_000;

/// Smallest unit `> 1` of a real quadratic ring, in basis coordinates.
///
/// Writes units as `(u + v*sqrt m)/k` with `k = 2` for the half basis and
/// `k = 1` otherwise, and takes the least `v >= 1` (then least `u > 0`) with
/// `u^2 - m v^2 = +-k^2`.
fn fundamental_unit(m: i64) -> Result<(i64, i64)> {
    let half = m.rem_euclid(4) == 1;
    let k2: i128 = if half { 4 } else { 1 };
    let m128 = i128::from(m);
    for v in 1..=UNIT_SEARCH_LIMIT {
        let v128 = i128::from(v);
        let mut best: Option<i128> = None;
        for target in [m128 * v128 * v128 - k2, m128 * v128 * v128 + k2] {
            if target <= 0 {
                continue;
            }
            let u = nth_root_floor(&Integer::from(target), 2).to_i64().unwrap() as i128;
            if u * u == target && (!half || (u - v128) % 2 == 0) {
                best = Some(best.map_or(u, |b: i128| b.min(u)));
            }
        }
        if let Some(u) = best {
            return Ok(if half {
                (((u - v128) / 2) as i64, v)
            } else {
                (u as i64, v)
            });
        }
    }
    Err(Error::UnsupportedRing(format!("no fundamental unit of Q(sqrt {m}) found with v <= {UNIT_SEARCH_LIMIT}")))
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Quadratic(q) => write!(f, "Q(sqrt {})", q.m),
        }
    }
}

impl Ring {
    /// Parse a ring tag with an explicit allowlist.
    ///
    /// Accepts `Z`, `Q(sqrt m)` and the aliases `gauss`, `gaussian`, `Z[i]`
    /// (m = -1) and `eisenstein` (m = -3). Whitespace is ignored.
    pub fn parse_with(s: &str, allowlist: &Allowlist) -> Result<Ring> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let m = match compact.to_ascii_lowercase().as_str() {
            "z" => return Ok(Ring::Integers),
            "gauss" | "gaussian" | "z[i]" => -1,
            "eisenstein" => -3,
            _ => {
                let inner = compact
                    .strip_prefix("Q(sqrt")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unrecognised ring {s:?}")))?;
                let inner = inner
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(inner);
                inner
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad quadratic parameter in {s:?}")))?
            }
        };
        Ring::quadratic_allowing(m, allowlist)
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        Ring::parse_with(s, &Allowlist::default())
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Ring, D::Error> {
        let s = String::deserialize(deserializer)?;
        // a ring tag in a report was produced by this library; trust it
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Z" {
            return Ok(Ring::Integers);
        }
        let m = compact
            .strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.parse::<i64>().ok())
            .ok_or_else(|| serde::de::Error::custom(format!("bad ring tag {s:?}")))?;
        let all = Allowlist { imaginary: vec![m], real: vec![m] };
        Ring::quadratic_allowing(m, &all).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_follows_m_mod_4() {
        assert_eq!(Ring::quadratic(-1).unwrap().basis(), Some(BasisConvention::OmegaSqrt));
        assert_eq!(Ring::quadratic(-3).unwrap().basis(), Some(BasisConvention::OmegaHalf));
        assert_eq!(Ring::quadratic(17).unwrap().basis(), Some(BasisConvention::OmegaHalf));
        assert_eq!(Ring::quadratic(2).unwrap().basis(), Some(BasisConvention::OmegaSqrt));
        assert_eq!(Ring::Integers.basis(), None);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(matches!(Ring::quadratic(4), Err(Error::UnsupportedRing(_))));
        assert!(matches!(Ring::quadratic(1), Err(Error::UnsupportedRing(_))));
        assert!(matches!(Ring::quadratic(-5), Err(Error::UnsupportedRing(_))));
        assert!(matches!(Ring::quadratic(10), Err(Error::UnsupportedRing(_))));
        let wide = Allowlist { imaginary: vec![-5], real: vec![] };
        assert!(Ring::quadratic_allowing(-5, &wide).is_ok());
    }

    #[test]
    fn fundamental_units() {
        let cases = [(2, (1, 1)), (3, (2, 1)), (5, (0, 1)), (17, (3, 2)), (73, (943, 250)), (29, (2, 1))];
        for (m, (x, y)) in cases {
            let r = Ring::quadratic(m).unwrap();
            let e = r.fundamental_unit().unwrap();
            assert_eq!((e.x().to_i64().unwrap(), e.y().to_i64().unwrap()), (x, y), "m = {m}");
            assert!(e.is_unit());
        }
    }

    #[test]
    fn finite_unit_groups() {
        assert_eq!(Ring::gaussian().finite_units().unwrap().len(), 4);
        assert_eq!(Ring::quadratic(-3).unwrap().finite_units().unwrap().len(), 6);
        assert_eq!(Ring::quadratic(-7).unwrap().finite_units().unwrap().len(), 2);
        assert!(Ring::quadratic(2).unwrap().finite_units().is_none());
    }

    #[test]
    fn ring_tags_round_trip() {
        for tag in ["Z", "Q(sqrt 17)", "Q(sqrt -1)", "Q(sqrt 73)"] {
            let r: Ring = tag.parse().unwrap();
            assert_eq!(r.to_string(), tag);
        }
        assert_eq!("gauss".parse::<Ring>().unwrap(), Ring::gaussian());
        assert_eq!("Q( sqrt(-3) )".parse::<Ring>().unwrap(), Ring::quadratic(-3).unwrap());
        assert!("Q(17)".parse::<Ring>().is_err());
    }
}
