//! Decomposition numbers: the least rational prime `p` such that `p * 1_R`
//! is divisible by two non-associate prime elements of `R`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, legendre_symbol, multiplicative_order, primes_up_to, Integer};
use crate::error::{Error, Result};
use crate::rings::{primes_above, Ring};

/// Bound past which the decomposition number no longer affects which
/// progression lengths always have a coprime term.
pub const DEFAULT_DELTA_BOUND: u64 = 13;

pub const DEFAULT_CYCLOTOMIC_BOUND: u64 = 100_000;

/// `m` (with `m != 2 mod 4`) for which `Z[zeta_m]` is a UFD, after
/// Masley and Montgomery. Advisory data only; nothing here depends on it.
pub const CYCLOTOMIC_UFD_CONDUCTORS: [u64; 30] = [
    1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 24, 25, 27, 28, 32, 33, 35, 36, 40,
    44, 45, 48, 60, 84,
];

/// `true` iff `Z[zeta_m]` is on the UFD list. `Z[zeta_2k] = Z[zeta_k]` for odd `k`.
pub fn is_known_cyclotomic_ufd(m: u64) -> bool {
    let m = if m % 4 == 2 { m / 2 } else { m };
    CYCLOTOMIC_UFD_CONDUCTORS.contains(&m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaMethod {
    ClosedFormQuadratic,
    ClosedFormCyclotomic,
    SplittingOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaValue {
    Finite(u64),
    /// No qualifying prime up to the given bound (this includes `delta = infinity`).
    InfiniteOrBeyondBound(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaResult {
    pub value: DeltaValue,
    pub method: DeltaMethod,
}

impl DeltaResult {
    pub fn finite(&self) -> Option<u64> {
        match self.value {
            DeltaValue::Finite(p) => Some(p),
            DeltaValue::InfiniteOrBeyondBound(_) => None,
        }
    }
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaValue::Finite(p) => write!(f, "{p}"),
            DeltaValue::InfiniteOrBeyondBound(b) => write!(f, "infinite (no prime <= {b})"),
        }
    }
}

/// `delta` truncated at 13.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CappedDelta {
    Finite(u64),
    Infinite,
}

/// Closed form for `O_K`, `K = Q(sqrt m)` on the default allowlist.
pub fn delta_quadratic(m: i64) -> Result<DeltaResult> {
    delta_quadratic_ring(Ring::quadratic(m)?)
}

/// Closed form for a quadratic ring: 2 if `m = 1 (mod 8)`, otherwise the
/// least odd prime `p` with `(m/p) = 1`.
pub fn delta_quadratic_ring(ring: Ring) -> Result<DeltaResult> {
    let m = ring
        .quadratic_parameter()
        .ok_or_else(|| Error::UnsupportedRing(format!("{ring} is not quadratic")))?;
    let value = if m.rem_euclid(8) == 1 {
        2
    } else {
        let m = Integer::from(m);
        let mut p = 3u64;
        loop {
            if crate::arith::is_prime_u64(p) && legendre_symbol(&m, &Integer::from(p))? == 1 {
                break p;
            }
            p += 2;
        }
    };
    Ok(DeltaResult { value: DeltaValue::Finite(value), method: DeltaMethod::ClosedFormQuadratic })
}

/// Closed form for `Z[zeta_m]` with the default search bound.
pub fn delta_cyclotomic(m: u64) -> Result<DeltaResult> {
    delta_cyclotomic_bounded(m, DEFAULT_CYCLOTOMIC_BOUND)
}

/// Least prime `p <= bound` with `l = m / p^v_p(m) > 1` and `p` not a
/// generator of `(Z/l)^*`, i.e. `ord_l(p) < phi(l)`. When `(Z/l)^*` is not
/// cyclic no generator exists and every such `p` qualifies.
pub fn delta_cyclotomic_bounded(m: u64, bound: u64) -> Result<DeltaResult> {
    if m == 0 {
        return Err(Error::precondition("cyclotomic index must be >= 1"));
    }
    let method = DeltaMethod::ClosedFormCyclotomic;
    for p in primes_up_to(bound) {
        let mut l = m;
        while l.is_multiple_of(p) {
            l /= p;
        }
        if l <= 1 {
            continue;
        }
        let l = Integer::from(l);
        let order = multiplicative_order(&Integer::from(p), &l)?;
        if order < euler_phi(&l)? {
            return Ok(DeltaResult { value: DeltaValue::Finite(p), method });
        }
    }
    Ok(DeltaResult { value: DeltaValue::InfiniteOrBeyondBound(bound), method })
}

/// Least prime `p <= bound` that splits into two non-associate primes.
pub fn delta_oracle(ring: Ring, bound: u64) -> Result<DeltaResult> {
    if bound < 2 {
        return Err(Error::precondition(format!("delta search bound must be >= 2, got {bound}")));
    }
    let method = DeltaMethod::SplittingOracle;
    for p in primes_up_to(bound) {
        if primes_above(&Integer::from(p), ring)?.is_split() {
            return Ok(DeltaResult { value: DeltaValue::Finite(p), method });
        }
    }
    Ok(DeltaResult { value: DeltaValue::InfiniteOrBeyondBound(bound), method })
}

/// `delta_R` if it is at most 13, otherwise `Infinite`.
pub fn delta_capped(ring: Ring) -> Result<CappedDelta> {
    Ok(match delta_oracle(ring, DEFAULT_DELTA_BOUND)?.value {
        DeltaValue::Finite(p) => CappedDelta::Finite(p),
        DeltaValue::InfiniteOrBeyondBound(_) => CappedDelta::Infinite,
    })
}

/// `min{16, 1 + delta_R}`: the largest length for which every progression
/// with coprime first term and difference has a term coprime to the rest.
pub fn coprime_length_bound(ring: Ring) -> Result<usize> {
    Ok(match delta_capped(ring)? {
        CappedDelta::Finite(d) => 16.min(1 + d as usize),
        CappedDelta::Infinite => 16,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{IMAGINARY_ALLOWLIST, REAL_ALLOWLIST};

    fn fin(v: u64) -> DeltaValue {
        DeltaValue::Finite(v)
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(delta_quadratic(-1).unwrap().value, fin(5));
        assert_eq!(delta_quadratic(17).unwrap().value, fin(2));
        assert_eq!(delta_quadratic(2).unwrap().value, fin(7));
        assert!(matches!(delta_quadratic(-5), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(delta_cyclotomic(1).unwrap().value, DeltaValue::InfiniteOrBeyondBound(DEFAULT_CYCLOTOMIC_BOUND));
        assert_eq!(delta_cyclotomic(2).unwrap().value, DeltaValue::InfiniteOrBeyondBound(DEFAULT_CYCLOTOMIC_BOUND));
        assert_eq!(delta_cyclotomic(5).unwrap().value, fin(11));
        assert_eq!(delta_cyclotomic(4).unwrap().value, fin(5));
        // (Z/8)^* is not cyclic, so 3 qualifies
        assert_eq!(delta_cyclotomic(8).unwrap().value, fin(3));
        assert_eq!(delta_cyclotomic_bounded(5, 7).unwrap().value, DeltaValue::InfiniteOrBeyondBound(7));
        assert!(delta_cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_matches_quadratic_where_rings_coincide() {
        assert_eq!(delta_cyclotomic(4).unwrap().value, delta_quadratic(-1).unwrap().value);
        assert_eq!(delta_cyclotomic(3).unwrap().value, delta_quadratic(-3).unwrap().value);
        assert_eq!(delta_cyclotomic(6).unwrap().value, delta_quadratic(-3).unwrap().value);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(delta_oracle(Ring::Integers, 50).unwrap().value, DeltaValue::InfiniteOrBeyondBound(50));
        assert_eq!(delta_oracle(Ring::gaussian(), 13).unwrap().value, fin(5));
        assert_eq!(delta_oracle(Ring::quadratic(-3).unwrap(), 13).unwrap().value, fin(7));
        assert_eq!(delta_oracle(Ring::gaussian(), 3).unwrap().value, DeltaValue::InfiniteOrBeyondBound(3));
        assert!(delta_oracle(Ring::gaussian(), 1).is_err());
    }

    #[test]
    fn capped_examples() {
        assert_eq!(delta_capped(Ring::Integers).unwrap(), CappedDelta::Infinite);
        assert_eq!(delta_capped(Ring::gaussian()).unwrap(), CappedDelta::Finite(5));
        assert_eq!(delta_capped(Ring::quadratic(73).unwrap()).unwrap(), CappedDelta::Finite(2));
        assert_eq!(coprime_length_bound(Ring::gaussian()).unwrap(), 6);
        assert_eq!(coprime_length_bound(Ring::Integers).unwrap(), 16);
    }

    #[test]
    fn closed_form_agrees_with_oracle() {
        for m in IMAGINARY_ALLOWLIST.iter().chain(REAL_ALLOWLIST.iter()) {
            let ring = Ring::quadratic(*m).unwrap();
            let closed = delta_quadratic(*m).unwrap().finite().unwrap();
            let oracle = delta_oracle(ring, 100).unwrap();
            assert_eq!(oracle.finite(), Some(closed), "m = {m}");
            // nothing below the closed-form value splits
            if closed > 2 {
                assert_eq!(
                    delta_oracle(ring, closed - 1).unwrap().value,
                    DeltaValue::InfiniteOrBeyondBound(closed - 1),
                    "m = {m}"
                );
            }
        }
    }

    #[test]
    fn ufd_list_lookup() {
        assert!(is_known_cyclotomic_ufd(5));
        assert!(is_known_cyclotomic_ufd(10));
        assert!(!is_known_cyclotomic_ufd(23));
        assert!(!is_known_cyclotomic_ufd(46));
    }
}
