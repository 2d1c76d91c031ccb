use super::{find_coprime_term, ArithmeticProgression};
use crate::arith::Integer;
use crate::crt::{solve, Congruence, CongruenceSystem, CrtOutcome};
use crate::error::{Error, Result};
use crate::rings::Ring;

fn require_integer_coprime(ap: &ArithmeticProgression) -> Result<()> {
    if ap.ring() != Ring::Integers {
        return Err(Error::UnsupportedRing(format!("expected Z, got {}", ap.ring())));
    }
    if !ap.has_coprime_start()? {
        return Err(Error::NotCoprime { a: ap.first().to_string(), n: ap.difference().to_string() });
    }
    Ok(())
}

/// An integer `z` with `term(i) | z - i` for every `i`.
///
/// Terms share no prime with a gap that does not also divide the gap in
/// indices, so the system is always solvable. A zero term forces `z = i`.
pub fn transfer_ap_to_consecutive(ap: &ArithmeticProgression) -> Result<Integer> {
    require_integer_coprime(ap)?;
    let z_ring = Ring::Integers;
    let terms = ap.terms();
    let zero_at = terms.iter().position(|t| t.is_zero());
    let mut congruences = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        congruences.push(Congruence::new(z_ring.embed(k as i64 + 1), t.clone())?);
    }
    let z = if let Some(k) = zero_at {
        Integer::from(k as i64 + 1)
    } else {
        match solve(&CongruenceSystem::new(congruences)?)? {
            CrtOutcome::Solved(sol) => sol.value.x().clone(),
            CrtOutcome::Incompatible(w) => {
                return Err(Error::internal(format!(
                    "transfer system incompatible at congruences {} and {}",
                    w.i, w.j
                )))
            }
        }
    };
    for (k, t) in terms.iter().enumerate() {
        let diff = &z - &Integer::from(k as i64 + 1);
        let ok = if t.is_zero() { diff.is_zero() } else { diff.is_multiple_of(t.x()) };
        if !ok {
            return Err(Error::internal(format!("term {} does not divide {z} - {}", k + 1, k + 1)));
        }
    }
    Ok(z)
}

/// Find a term coprime to the others by way of the consecutive run
/// `z-1, z-2, ..., z-n`, where `z` comes from [`transfer_ap_to_consecutive`].
///
/// Since `term(i) | z - i`, an index isolated in the run is isolated in
/// the progression. Returns that index, checked against the progression.
pub fn coprime_term_via_consecutive(ap: &ArithmeticProgression) -> Result<Option<usize>> {
    let z = transfer_ap_to_consecutive(ap)?;
    let z_ring = Ring::Integers;
    let run = ArithmeticProgression::new(z_ring.embed(&z - &Integer::ONE), z_ring.embed(-1), ap.len())?;
    let Some(k) = find_coprime_term(&run)?.witness else {
        return Ok(None);
    };
    if !super::coprime_to_all(k, ap)? {
        return Err(Error::internal(format!("index {k} is coprime in the run but not in the progression")));
    }
    Ok(Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let ap = ArithmeticProgression::integers(3, 2, 3).unwrap();
        let z = transfer_ap_to_consecutive(&ap).unwrap();
        assert_eq!(z.mod_floor(&Integer::from(105)), Integer::from(52));

        let one = ArithmeticProgression::integers(9, 4, 1).unwrap();
        let z = transfer_ap_to_consecutive(&one).unwrap();
        assert_eq!(z.mod_floor(&Integer::from(9)), Integer::ONE);

        let naturals = ArithmeticProgression::integers(1, 1, 10).unwrap();
        let z = transfer_ap_to_consecutive(&naturals).unwrap();
        for i in 1..=10i64 {
            assert!((&z - &Integer::from(i)).is_multiple_of(&Integer::from(i)));
        }
    }

    #[test]
    fn zero_term() {
        let ap = ArithmeticProgression::integers(-4, 1, 8).unwrap();
        assert_eq!(transfer_ap_to_consecutive(&ap).unwrap(), Integer::from(5));
    }

    #[test]
    fn rejects_bad_input() {
        let ap = ArithmeticProgression::integers(4, 6, 3).unwrap();
        assert!(matches!(transfer_ap_to_consecutive(&ap), Err(Error::NotCoprime { .. })));
        let g = Ring::gaussian();
        let ap = ArithmeticProgression::new(g.one(), g.one(), 3).unwrap();
        assert!(matches!(transfer_ap_to_consecutive(&ap), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn coprime_index_maps_back() {
        let ap = ArithmeticProgression::integers(7, 10, 16).unwrap();
        assert!(coprime_term_via_consecutive(&ap).unwrap().is_some());
    }
}
