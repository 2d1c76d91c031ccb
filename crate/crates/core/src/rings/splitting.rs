//! How a rational prime factors in a quadratic ring (Kummer-Dedekind).

use serde::{Deserialize, Serialize};

use super::euclid::{are_associates, gcd_ring};
use super::{Ring, RingElement};
use crate::arith::{is_prime, Integer};
use crate::error::{Error, Result};

// Roots of the minimal polynomial are found by scanning all residues.
const ROOT_SCAN_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting {
    /// `p = unit * P * Q` with `P`, `Q` non-associate primes.
    Split(RingElement, RingElement),
    /// `p = unit * P^2`.
    Ramified(RingElement),
    /// `p` stays prime.
    Inert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimesAbove {
    pub p: Integer,
    pub splitting: Splitting,
}

impl PrimesAbove {
    pub fn is_split(&self) -> bool {
        matches!(self.splitting, Splitting::Split(..))
    }
}

/// Factor `p * 1_R` by factoring the minimal polynomial of `w` modulo `p`.
///
/// Two distinct roots `r1 != r2` give `P = gcd(p, w - r1)` and
/// `Q = gcd(p, w - r2)`; a double root gives a ramified prime; no root means
/// `p` is inert. `p = 2` goes through the same mod-2 factorization. In `Z`
/// every prime is inert.
pub fn primes_above(p: &Integer, ring: Ring) -> Result<PrimesAbove> {
    if !p.is_positive() || !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if let Ring::Integers = ring {
        return Ok(PrimesAbove { p: p.clone(), splitting: Splitting::Inert });
    }
    let pu = p
        .to_u64()
        .filter(|&v| v <= ROOT_SCAN_LIMIT)
        .ok_or_else(|| Error::precondition(format!("prime {p} above the root-scan limit {ROOT_SCAN_LIMIT}")))?;

    // minimal polynomial X^2 - c1 X - c0
    let (c0, c1) = ring.omega_square();
    let c0 = Integer::from(c0).mod_u64(pu) as u128;
    let c1 = Integer::from(c1).mod_u64(pu) as u128;
    let pm = pu as u128;
    let roots: Vec<u64> = (0..pu)
        .filter(|&r| {
            let r = r as u128;
            (r * r % pm + (pm - c1) * r % pm + (pm - c0)).is_multiple_of(pm)
        })
        .collect();

    let p_elem = ring.embed(p.clone());
    let w = ring.omega()?;
    let prime_at = |r: u64| gcd_ring(&p_elem, &(&w - &ring.embed(r)));

    let splitting = match roots.as_slice() {
        [] => Splitting::Inert,
        [r] => {
            let big_p = prime_at(*r)?;
            if !are_associates(&(&big_p * &big_p), &p_elem) {
                return Err(Error::internal(format!("{big_p}^2 is not an associate of {p} in {ring}")));
            }
            Splitting::Ramified(big_p)
        }
        [r1, r2] => {
            let big_p = prime_at(*r1)?;
            let big_q = prime_at(*r2)?;
            if !are_associates(&(&big_p * &big_q), &p_elem) || big_p == big_q {
                return Err(Error::internal(format!(
                    "{big_p} and {big_q} do not split {p} in {ring}"
                )));
            }
            Splitting::Split(big_p, big_q)
        }
        _ => return Err(Error::internal(format!("quadratic with {} roots mod {p}", roots.len()))),
    };
    Ok(PrimesAbove { p: p.clone(), splitting })
}
