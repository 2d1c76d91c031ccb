use serde::{Deserialize, Serialize};

use super::{coprimality_table, find_coprime_term, report_from_table, ArithmeticProgression};
use crate::arith::{primes_up_to, Integer};
use crate::decomposition::coprime_length_bound;
use crate::error::{Error, Result};
use crate::rings::{gcd_raw, Ring, RingElement};

/// A progression with no term coprime to the others.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub a: RingElement,
    pub d: RingElement,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub ring: Ring,
    pub coord_bound: i64,
    pub n_max: usize,
    /// Coprime `(a, d)` pairs examined.
    pub pairs_tested: u64,
    /// Progressions examined, one per pair and length `2 <= n <= n_max`.
    pub progressions_tested: u64,
    pub violations: Vec<Violation>,
}

/// Check every coprime `(a, d)` with coordinates in `[-coord_bound, coord_bound]`
/// and every length `2 <= n <= n_max` for a term coprime to the rest.
///
/// Over `Z` the pair is normalized by sign (`d >= 0`, and `a >= 0` when
/// `d = 0`); quadratic rings test every coordinate pair.
pub fn verify_bound_sweep(ring: Ring, coord_bound: i64, n_max: usize) -> Result<SweepReport> {
    verify_bound_sweep_with_jobs(ring, coord_bound, n_max, 1)
}

/// As [`verify_bound_sweep`], split over `jobs` threads by first term.
/// The report does not depend on `jobs`.
pub fn verify_bound_sweep_with_jobs(
    ring: Ring,
    coord_bound: i64,
    n_max: usize,
    jobs: usize,
) -> Result<SweepReport> {
    if coord_bound < 0 {
        return Err(Error::precondition(format!("coordinate bound must be >= 0, got {coord_bound}")));
    }
    if n_max == 0 {
        return Err(Error::precondition("n_max must be >= 1"));
    }
    let limit = coprime_length_bound(ring)?;
    if n_max > limit {
        return Err(Error::precondition(format!(
            "n_max = {n_max} exceeds min(16, 1 + delta) = {limit} for {ring}"
        )));
    }

    let coords: Vec<(i64, i64)> = match ring {
        Ring::Integers => (-coord_bound..=coord_bound).map(|x| (x, 0)).collect(),
        Ring::Quadratic(_) => (-coord_bound..=coord_bound)
            .flat_map(|x| (-coord_bound..=coord_bound).map(move |y| (x, y)))
            .collect(),
    };
    let firsts: Vec<RingElement> =
        coords.iter().map(|&(x, y)| RingElement::from_parts(x.into(), y.into(), ring)).collect();
    let diffs: Vec<RingElement> = match ring {
        Ring::Integers => (0..=coord_bound).map(|x| ring.embed(x)).collect(),
        Ring::Quadratic(_) => firsts.clone(),
    };

    let jobs = jobs.clamp(1, firsts.len().max(1));
    let chunk = firsts.len().div_ceil(jobs);
    let partials: Vec<Result<Partial>> = if jobs == 1 {
        vec![sweep_chunk(&firsts, &diffs, n_max)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = firsts
                .chunks(chunk)
                .map(|part| {
                    let diffs = &diffs;
                    scope.spawn(move || sweep_chunk(part, diffs, n_max))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|_| Err(Error::internal("sweep worker panicked"))))
                .collect()
        })
    };

    let mut report = SweepReport {
        ring,
        coord_bound,
        n_max,
        pairs_tested: 0,
        progressions_tested: 0,
        violations: Vec::new(),
    };
    for part in partials {
        let part = part?;
        report.pairs_tested += part.pairs;
        report.progressions_tested += part.progressions;
        report.violations.extend(part.violations);
    }
    Ok(report)
}

#[derive(Default)]
struct Partial {
    pairs: u64,
    progressions: u64,
    violations: Vec<Violation>,
}

fn sweep_chunk(firsts: &[RingElement], diffs: &[RingElement], n_max: usize) -> Result<Partial> {
    let mut out = Partial::default();
    let integers = matches!(firsts.first().map(RingElement::ring), Some(Ring::Integers));
    for a in firsts {
        for d in diffs {
            if integers && d.is_zero() && a.x().is_negative() {
                continue;
            }
            if !gcd_raw(a, d)?.is_unit() {
                continue;
            }
            out.pairs += 1;
            let ap = ArithmeticProgression { a: a.clone(), d: d.clone(), n: n_max };
            let table = coprimality_table(&ap.terms())?;
            for n in 2..=n_max {
                out.progressions += 1;
                if report_from_table(&table, n).witness.is_none() {
                    out.violations.push(Violation { a: a.clone(), d: d.clone(), n });
                }
            }
        }
    }
    Ok(out)
}

/// Smallest `x` in `[0, scan_limit]` such that `x, x+1, ..., x+n-1` has no
/// element coprime to the others. Requires `n >= 17`; shorter blocks always
/// have one.
///
/// Two elements of the block share only primes below `n`, so each start is
/// screened with those primes, and a hit is confirmed by a full gcd scan.
pub fn search_counterexample_consecutive(n: usize, scan_limit: &Integer) -> Result<Option<Integer>> {
    if n <= 16 {
        return Err(Error::precondition(format!(
            "every block of n <= 16 consecutive integers has a coprime element, got n = {n}"
        )));
    }
    if scan_limit.is_negative() {
        return Ok(None);
    }
    let limit = scan_limit
        .to_u64()
        .ok_or_else(|| Error::precondition(format!("scan limit {scan_limit} is too large")))?;
    let primes = primes_up_to(n as u64 - 1);

    let mut isolated = vec![true; n];
    for x in 0..=limit {
        isolated.iter_mut().for_each(|v| *v = true);
        for &p in &primes {
            let p = p as usize;
            // offset of the first block element divisible by p
            let first = ((p as u64 - x % p as u64) % p as u64) as usize;
            let mut i = first;
            // p divides x+first, x+first+p, ...; all of them share p unless alone
            if first + p < n {
                while i < n {
                    isolated[i] = false;
                    i += p;
                }
            }
        }
        if isolated.iter().all(|v| !v) {
            let start = Integer::from(x);
            let ap = ArithmeticProgression::new(Ring::Integers.embed(start.clone()), Ring::Integers.one(), n)?;
            if let Some(w) = find_coprime_term(&ap)?.witness {
                return Err(Error::internal(format!("screened block at {x} has coprime element {w}")));
            }
            return Ok(Some(start));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_lengths() {
        for ring in [Ring::Integers, Ring::gaussian(), Ring::quadratic(17).unwrap()] {
            let r = verify_bound_sweep(ring, 3, 1).unwrap();
            assert!(r.violations.is_empty());
            assert_eq!(r.progressions_tested, 0);
            assert!(r.pairs_tested > 0);
        }
    }

    #[test]
    fn small_integer_sweep() {
        let r = verify_bound_sweep(Ring::Integers, 20, 16).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.progressions_tested, r.pairs_tested * 15);
    }

    #[test]
    fn integer_pair_count() {
        // d = 0: only a = 1; d = 1: all 5 values of a; d = 2: odd a
        let r = verify_bound_sweep(Ring::Integers, 2, 2).unwrap();
        assert_eq!(r.pairs_tested, 1 + 5 + 2);
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let one = verify_bound_sweep(Ring::gaussian(), 3, 6).unwrap();
        let four = verify_bound_sweep_with_jobs(Ring::gaussian(), 3, 6, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.violations.is_empty());
    }

    #[test]
    fn sweep_preconditions() {
        assert!(verify_bound_sweep(Ring::gaussian(), 2, 7).is_err());
        assert!(verify_bound_sweep(Ring::Integers, 2, 17).is_err());
        assert!(verify_bound_sweep(Ring::Integers, -1, 2).is_err());
        assert!(verify_bound_sweep(Ring::Integers, 2, 0).is_err());
    }

    #[test]
    fn sweep_beyond_the_bound_finds_violations() {
        // sqrt(17) has delta = 2, so length 4 is past the bound; sweep the
        // lengths by hand through the same machinery
        let ring = Ring::quadratic(17).unwrap();
        let a = ring.element(1, 1).unwrap();
        let ap = ArithmeticProgression::new(a, ring.one(), 4).unwrap();
        let table = coprimality_table(&ap.terms()).unwrap();
        assert!(report_from_table(&table, 3).witness.is_some());
        assert!(report_from_table(&table, 4).witness.is_none());
    }

    #[test]
    fn consecutive_search() {
        assert!(search_counterexample_consecutive(16, &Integer::from(100)).is_err());
        assert_eq!(search_counterexample_consecutive(17, &Integer::from(100)).unwrap(), None);
        assert_eq!(
            search_counterexample_consecutive(17, &Integer::from(2184)).unwrap(),
            Some(Integer::from(2184))
        );
        assert_eq!(search_counterexample_consecutive(17, &Integer::from(2183)).unwrap(), None);
    }
}
