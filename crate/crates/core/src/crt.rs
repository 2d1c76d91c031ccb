//! Chinese remaindering with moduli that need not be coprime.
//!
//! A system `z = u_i (mod v_i)` is solvable iff `gcd(v_i, v_j) | u_i - u_j`
//! for every pair, provided each pairwise gcd is an `R`-linear combination
//! of the two moduli. Euclidean rings always supply that combination, so
//! the solver merges congruences pairwise from left to right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{canonical_associate, extended_gcd_ring, gcd_raw, Ring, RingElement};

/// `z = residue (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub residue: RingElement,
    pub modulus: RingElement,
}

impl Congruence {
    pub fn new(residue: RingElement, modulus: RingElement) -> Result<Congruence> {
        residue.check_same_ring(&modulus)?;
        if modulus.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(Congruence { residue, modulus })
    }

    pub fn is_satisfied_by(&self, z: &RingElement) -> bool {
        (z - &self.residue).is_divisible_by(&self.modulus)
    }
}

/// A nonempty list of congruences over one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    congruences: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new(congruences: Vec<Congruence>) -> Result<CongruenceSystem> {
        let first = congruences
            .first()
            .ok_or_else(|| Error::precondition("a congruence system needs at least one congruence"))?;
        for c in &congruences {
            first.modulus.check_same_ring(&c.modulus)?;
            c.residue.check_same_ring(&c.modulus)?;
            if c.modulus.is_zero() {
                return Err(Error::ZeroArgument);
            }
        }
        Ok(CongruenceSystem { congruences })
    }

    pub fn ring(&self) -> Ring {
        self.congruences[0].modulus.ring()
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }
}

/// A pair of congruences (1-based indices) with `gcd(v_i, v_j)` not dividing `u_i - u_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
}

/// All solutions are `value + modulus * R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub value: RingElement,
    pub modulus: RingElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CrtOutcome {
    Solved(Solution),
    Incompatible(Witness),
}

/// The first pair (in lexicographic order) violating the pairwise gcd
/// criterion, or `None` if the system is solvable.
pub fn check_compatible(sys: &CongruenceSystem) -> Result<Option<Witness>> {
    let cs = sys.congruences();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let g = gcd_raw(&cs[i].modulus, &cs[j].modulus)?;
            if !(&cs[i].residue - &cs[j].residue).is_divisible_by(&g) {
                return Ok(Some(Witness { i: i + 1, j: j + 1 }));
            }
        }
    }
    Ok(None)
}

fn reduce(value: &RingElement, modulus: &RingElement) -> Result<RingElement> {
    match value.ring() {
        Ring::Integers => {
            let m = modulus.x().abs();
            Ok(value.ring().embed(value.x().mod_floor(&m)))
        }
        Ring::Quadratic(_) => value.rem(modulus),
    }
}

/// Merge two congruences into one with modulus `v1 v2 / gcd(v1, v2)`.
/// Returns `None` when they have no common solution.
pub fn merge(first: &Congruence, second: &Congruence) -> Result<Option<Congruence>> {
    first.modulus.check_same_ring(&second.modulus)?;
    let (g, s, _) = extended_gcd_ring(&first.modulus, &second.modulus)?;
    let diff = &second.residue - &first.residue;
    let Some(k) = diff.exact_div(&g) else {
        return Ok(None);
    };
    let lcm = (&first.modulus * &second.modulus)
        .exact_div(&g)
        .ok_or_else(|| Error::internal("gcd does not divide the product of the moduli"))?;
    let lcm = canonical_associate(&lcm);
    let value = &first.residue + &(&(&first.modulus * &s) * &k);
    let merged = Congruence { residue: reduce(&value, &lcm)?, modulus: lcm };
    if !first.is_satisfied_by(&merged.residue) || !second.is_satisfied_by(&merged.residue) {
        return Err(Error::internal("merged residue violates an input congruence"));
    }
    Ok(Some(merged))
}

/// Solve the system, or report the violating pair.
///
/// Over `Z` the value is the least nonnegative residue modulo the lcm. In
/// quadratic rings it is a Euclidean remainder modulo the lcm. Every
/// returned value is checked against each congruence before returning.
pub fn solve(sys: &CongruenceSystem) -> Result<CrtOutcome> {
    if let Some(w) = check_compatible(sys)? {
        return Ok(CrtOutcome::Incompatible(w));
    }
    let cs = sys.congruences();
    let first = Congruence {
        residue: reduce(&cs[0].residue, &cs[0].modulus)?,
        modulus: canonical_associate(&cs[0].modulus),
    };
    let mut acc = first;
    for c in &cs[1..] {
        acc = merge(&acc, c)?
            .ok_or_else(|| Error::internal("pairwise-compatible system failed to merge"))?;
    }
    for (idx, c) in cs.iter().enumerate() {
        if !c.is_satisfied_by(&acc.residue) {
            return Err(Error::internal(format!("solution {} fails congruence {}", acc.residue, idx + 1)));
        }
    }
    Ok(CrtOutcome::Solved(Solution { value: acc.residue, modulus: acc.modulus }))
}
