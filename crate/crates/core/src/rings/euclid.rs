//! Euclidean division, gcds and canonical associates.

use super::{Ring, RingElement};
use crate::arith::Integer;
use crate::error::{Error, Result};

// Radii of the neighbourhood searched around the rounded quotient when plain
// rounding leaves a remainder that is too large.
const QUOTIENT_SEARCH_RADII: [i64; 5] = [1, 2, 4, 8, 16];

// Powers of the fundamental unit tried in each direction in real fields.
const UNIT_TWISTS: usize = 4;

/// `round(num / den)` for `den > 0`, ties toward negative infinity.
fn round_ties_down(num: &Integer, den: &Integer) -> Integer {
    // ceil((2 num - den) / (2 den))
    let two_den = den * 2;
    let t = &(num * 2) - den;
    -(-t).div_floor(&two_den)
}

/// Rounded quotient of `a / b`, or the best lattice point near it, whose
/// remainder has absolute norm below `bound`.
fn near_quotient(a: &RingElement, b: &RingElement, bound: &Integer) -> Option<(RingElement, RingElement)> {
    let ring = a.ring();
    let mut n = b.norm();
    let p = a * &b.conjugate();
    let (mut px, mut py) = (p.x().clone(), p.y().clone());
    if n.is_negative() {
        n = -n;
        px = -px;
        py = -py;
    }
    let q = RingElement::from_parts(round_ties_down(&px, &n), round_ties_down(&py, &n), ring);
    let r = a - &(&q * b);
    if r.norm().abs() < *bound {
        return Some((q, r));
    }
    for radius in QUOTIENT_SEARCH_RADII {
        let mut best: Option<(Integer, RingElement, RingElement)> = None;
        for i in -radius..=radius {
            for j in -radius..=radius {
                let cand = &q + &RingElement::from_parts(i.into(), j.into(), ring);
                let rem = a - &(&cand * b);
                let size = rem.norm().abs();
                if best.as_ref().is_none_or(|(s, _, _)| size < *s) {
                    best = Some((size, cand, rem));
                }
            }
        }
        if let Some((size, cand, rem)) = best {
            if size < *bound {
                return Some((cand, rem));
            }
        }
    }
    None
}

impl RingElement {
    /// `Some(self / divisor)` when the division is exact.
    pub fn exact_div(&self, divisor: &RingElement) -> Option<RingElement> {
        if divisor.is_zero() {
            return self.is_zero().then(|| self.ring().zero());
        }
        if let (Ring::Integers, Some(d)) = (self.ring(), divisor.as_integer()) {
            return self.x().is_multiple_of(d).then(|| self.ring().embed(self.x().div_floor(d)));
        }
        let n = divisor.norm();
        let p = self * &divisor.conjugate();
        if p.x().is_multiple_of(&n) && p.y().is_multiple_of(&n) {
            Some(RingElement::from_parts(p.x().div_floor(&n), p.y().div_floor(&n), self.ring()))
        } else {
            None
        }
    }

    /// `true` iff `divisor | self`. Zero divides only zero.
    pub fn is_divisible_by(&self, divisor: &RingElement) -> bool {
        self.exact_div(divisor).is_some()
    }

    /// Division with remainder: `self = q * divisor + r` with `|N(r)| < |N(divisor)|`.
    ///
    /// The quotient is the coordinate-wise rounding of the exact quotient
    /// (ties toward negative infinity). If that remainder is too large, the
    /// nearby lattice points are searched and the one of least `|N(r)|`
    /// (first in row-major order) is taken. In real fields the same search
    /// is repeated on `self * e^k` for small powers of the fundamental unit.
    /// Failure to find a remainder of smaller norm is an internal error.
    pub fn divmod(&self, divisor: &RingElement) -> Result<(RingElement, RingElement)> {
        self.check_same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.ring();
        if let Ring::Integers = ring {
            let (a, b) = (self.x(), divisor.x());
            let q = round_ties_down(&(a * b.signum() as i64), &b.abs());
            let r = a - &(&q * b);
            return Ok((ring.embed(q), ring.embed(r)));
        }

        let bound = divisor.norm().abs();
        if let Some(found) = near_quotient(self, divisor, &bound) {
            return Ok(found);
        }
        // In real fields a suitable quotient can lie far out along the
        // hyperbola; multiplying by a unit first brings it close.
        if let Some(eps) = ring.fundamental_unit() {
            let eps_inv = &eps.conjugate() * &ring.embed(eps.norm());
            let (mut up, mut down) = (ring.one(), ring.one());
            for _ in 0..UNIT_TWISTS {
                up = &up * &eps;
                down = &down * &eps_inv;
                for (u, u_inv) in [(&up, &down), (&down, &up)] {
                    if let Some((q, r)) = near_quotient(&(self * u), divisor, &bound) {
                        let (q, r) = (&q * u_inv, &r * u_inv);
                        debug_assert_eq!(&(&q * divisor) + &r, *self);
                        return Ok((q, r));
                    }
                }
            }
        }
        Err(Error::internal(format!(
            "no quotient of {self} by {divisor} in {ring} leaves a remainder of smaller norm"
        )))
    }

    /// Remainder of [`RingElement::divmod`].
    pub fn rem(&self, divisor: &RingElement) -> Result<RingElement> {
        self.divmod(divisor).map(|(_, r)| r)
    }
}

/// A gcd from the plain Euclidean algorithm, not normalized.
pub(crate) fn gcd_raw(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.check_same_ring(b)?;
    if let Ring::Integers = a.ring() {
        return Ok(a.ring().embed(a.x().gcd(b.x())));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = std::mem::replace(&mut b, r);
    }
    Ok(a)
}

/// `true` iff `gcd(a, b)` is a unit.
pub fn is_coprime(a: &RingElement, b: &RingElement) -> Result<bool> {
    Ok(gcd_raw(a, b)?.is_unit())
}

/// Greatest common divisor in canonical associate form; `gcd(0, 0) = 0`.
pub fn gcd_ring(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    gcd_raw(a, b).map(|g| canonical_associate(&g))
}

/// `(g, s, t)` with `g = gcd_ring(a, b)` and `s*a + t*b = g`.
pub fn extended_gcd_ring(
    a: &RingElement,
    b: &RingElement,
) -> Result<(RingElement, RingElement, RingElement)> {
    a.check_same_ring(b)?;
    let ring = a.ring();
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (ring.one(), ring.zero());
    let (mut old_t, mut t) = (ring.zero(), ring.one());
    while !r.is_zero() {
        let (q, rem) = old_r.divmod(&r)?;
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &(&q * &s);
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &(&q * &t);
        old_t = std::mem::replace(&mut t, next_t);
    }
    let (g, u) = canonical_associate_with_unit(&old_r);
    Ok((g, &old_s * &u, &old_t * &u))
}

/// The distinguished representative of the associate class of `a`.
///
/// * `Z`: the nonnegative associate.
/// * imaginary rings: the unit multiple with the lexicographically largest
///   coordinates `(x, y)`, so units map to `1` and rational integers to
///   their absolute value.
/// * real rings: the unit multiple `a'` with real embedding `s1 > 0` and
///   `1 <= s1(a')^2 / |N(a')| < s1(e)^2` for the fundamental unit `e > 1`.
pub fn canonical_associate(a: &RingElement) -> RingElement {
    canonical_associate_with_unit(a).0
}

/// `(a * u, u)` where `a * u` is [`canonical_associate`]`(a)` and `u` a unit.
pub fn canonical_associate_with_unit(a: &RingElement) -> (RingElement, RingElement) {
    let ring = a.ring();
    if a.is_zero() {
        return (a.clone(), ring.one());
    }
    match ring.finite_units() {
        Some(units) => units
            .into_iter()
            .map(|u| (a * &u, u))
            .max_by(|(p, _), (q, _)| (p.x(), p.y()).cmp(&(q.x(), q.y())))
            .expect("unit group is nonempty"),
        None => real_canonical(a),
    }
}

fn real_canonical(a: &RingElement) -> (RingElement, RingElement) {
    let ring = a.ring();
    let eps = ring.fundamental_unit().expect("real quadratic ring");
    let eps_inv = eps.conjugate().scale(&eps.norm());
    let eps_sq = &eps * &eps;
    let abs_norm = a.norm().abs();

    let mut cur = a.clone();
    let mut unit = ring.one();
    loop {
        let sq = &cur * &cur;
        if (&sq - &ring.embed(abs_norm.clone())).real_sign() < 0 {
            cur = &cur * &eps;
            unit = &unit * &eps;
        } else if (&sq - &eps_sq.scale(&abs_norm)).real_sign() >= 0 {
            cur = &cur * &eps_inv;
            unit = &unit * &eps_inv;
        } else {
            break;
        }
    }
    if cur.real_sign() < 0 {
        (-cur, -unit)
    } else {
        (cur, unit)
    }
}

/// `true` iff `a` and `b` differ by a unit factor.
pub fn are_associates(a: &RingElement, b: &RingElement) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.exact_div(b).is_some_and(|q| q.is_unit())
}
