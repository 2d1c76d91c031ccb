use serde::{Deserialize, Serialize};

use super::{find_coprime_term, ArithmeticProgression};
use crate::arith::Integer;
use crate::crt::{solve, Congruence, CongruenceSystem, CrtOutcome};
use crate::decomposition::{delta_capped, CappedDelta};
use crate::error::{Error, Result};
use crate::rings::{primes_above, Ring, RingElement, Splitting};

/// `2 * 3 * 5 * 7 * 11 * 13`.
pub const PRIMORIAL_13: i64 = 30030;

/// A progression `z, z+1, ..., z+n-1` with no term coprime to the others,
/// with the data used to build it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCounterexample {
    pub progression: ArithmeticProgression,
    pub delta: u64,
    /// The two non-associate primes above `delta`.
    pub p: RingElement,
    pub q: RingElement,
    /// `z = 0 (mod modulus)` and `z = -1 (mod q)`.
    pub modulus: RingElement,
}

/// Build `AP(z, 1, n)` with no term coprime to the others, for
/// `1 + delta < n < 17`.
///
/// With `delta = P Q` (up to a unit), `z` is chosen divisible by every prime
/// up to 13 other than `delta`, and by `P`, while `z + 1` is divisible by `Q`.
/// Each term then shares a factor with a neighbour at distance at most 13.
pub fn construct_counterexample_ring(ring: Ring, n: usize) -> Result<RingCounterexample> {
    let delta = match delta_capped(ring)? {
        CappedDelta::Finite(d) => d,
        CappedDelta::Infinite => {
            return Err(Error::precondition(format!("delta of {ring} is infinite or above 13")))
        }
    };
    if n <= 1 + delta as usize || n >= 17 {
        return Err(Error::precondition(format!(
            "length {n} is outside the open interval ({}, 17)",
            1 + delta
        )));
    }
    let Splitting::Split(p, q) = primes_above(&Integer::from(delta), ring)?.splitting else {
        return Err(Error::internal(format!("{delta} does not split in {ring}")));
    };
    let modulus = &ring.embed(PRIMORIAL_13 / delta as i64) * &p;
    let system = CongruenceSystem::new(vec![
        Congruence::new(ring.zero(), modulus.clone())?,
        Congruence::new(ring.embed(-1), q.clone())?,
    ])?;
    let z = match solve(&system)? {
        CrtOutcome::Solved(sol) => sol.value,
        CrtOutcome::Incompatible(_) => {
            return Err(Error::internal(format!("congruences for {ring} are incompatible")))
        }
    };
    let progression = ArithmeticProgression::new(z, ring.one(), n)?;
    if let Some(w) = find_coprime_term(&progression)?.witness {
        return Err(Error::internal(format!("constructed progression has coprime term {w}")));
    }
    Ok(RingCounterexample { progression, delta, p, q, modulus })
}
