//! Terms coprime to all others in arithmetic progressions.
//!
//! Over a GCD domain `R` of characteristic zero with decomposition number
//! `delta_R`, every progression `a, a+d, ..., a+(n-1)d` with `gcd(a, d) = 1`
//! and `n <= min{16, 1 + delta_R}` contains a term coprime to all the others,
//! and this length is sharp. This module searches for such terms, sweeps
//! the claim exhaustively, and builds the progressions showing sharpness.

mod construct;
mod power;
mod squares;
mod sweep;
mod transfer;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{gcd_raw, Ring, RingElement};

pub use construct::{construct_counterexample_ring, RingCounterexample, PRIMORIAL_13};
pub use power::{product_power_check, PowerCheckReport};
pub use squares::squares_ap_triples;
pub use sweep::{
    search_counterexample_consecutive, verify_bound_sweep, verify_bound_sweep_with_jobs,
    SweepReport, Violation,
};
pub use transfer::{coprime_term_via_consecutive, transfer_ap_to_consecutive};

/// `AP(a, d, n) = {a, a + d, ..., a + (n-1)d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticProgression {
    a: RingElement,
    d: RingElement,
    n: usize,
}

impl ArithmeticProgression {
    pub fn new(a: RingElement, d: RingElement, n: usize) -> Result<ArithmeticProgression> {
        a.check_same_ring(&d)?;
        if n == 0 {
            return Err(Error::precondition("a progression needs at least one term"));
        }
        Ok(ArithmeticProgression { a, d, n })
    }

    /// Shorthand for a progression of rational integers.
    pub fn integers(a: i64, d: i64, n: usize) -> Result<ArithmeticProgression> {
        ArithmeticProgression::new(Ring::Integers.embed(a), Ring::Integers.embed(d), n)
    }

    pub fn first(&self) -> &RingElement {
        &self.a
    }

    pub fn difference(&self) -> &RingElement {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ring(&self) -> Ring {
        self.a.ring()
    }

    /// The term `a + (i-1)d`, for `1 <= i <= n`.
    pub fn term(&self, i: usize) -> Result<RingElement> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, len: self.n });
        }
        Ok(&self.a + &self.d.scale(&(i as i64 - 1).into()))
    }

    pub fn terms(&self) -> Vec<RingElement> {
        let mut out = Vec::with_capacity(self.n);
        let mut t = self.a.clone();
        for _ in 0..self.n {
            let next = &t + &self.d;
            out.push(std::mem::replace(&mut t, next));
        }
        out
    }

    /// `true` iff `gcd(a, d)` is a unit.
    pub fn has_coprime_start(&self) -> Result<bool> {
        Ok(gcd_raw(&self.a, &self.d)?.is_unit())
    }
}

/// The elements of `s` divisible by `r`, in order.
pub fn multiples(r: &RingElement, s: &[RingElement]) -> Result<Vec<RingElement>> {
    if r.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = Vec::new();
    for x in s {
        r.check_same_ring(x)?;
        if x.is_divisible_by(r) {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// `true` iff term `index` (1-based) has a unit gcd with every other term.
pub fn coprime_to_all(index: usize, ap: &ArithmeticProgression) -> Result<bool> {
    let x = ap.term(index)?;
    for (j, t) in ap.terms().iter().enumerate() {
        if j + 1 != index && !gcd_raw(&x, t)?.is_unit() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a full pairwise gcd scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeReport {
    /// Smallest index of a term coprime to all others.
    pub witness: Option<usize>,
    /// For each index lacking that property, the smallest index it shares a
    /// non-unit factor with.
    pub pairwise_offenders: BTreeMap<usize, usize>,
}

/// Symmetric table of "gcd is a unit" over all pairs of `terms`.
pub(crate) fn coprimality_table(terms: &[RingElement]) -> Result<Vec<Vec<bool>>> {
    let n = terms.len();
    let mut table = vec![vec![true; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let unit = gcd_raw(&terms[i], &terms[j])?.is_unit();
            table[i][j] = unit;
            table[j][i] = unit;
        }
    }
    Ok(table)
}

/// Build the report for the first `n` terms described by `table`.
pub(crate) fn report_from_table(table: &[Vec<bool>], n: usize) -> CoprimeReport {
    let mut witness = None;
    let mut offenders = BTreeMap::new();
    for (i, row) in table.iter().enumerate().take(n) {
        match (0..n).find(|&j| j != i && !row[j]) {
            Some(j) => {
                offenders.insert(i + 1, j + 1);
            }
            None => {
                witness.get_or_insert(i + 1);
            }
        }
    }
    CoprimeReport { witness, pairwise_offenders: offenders }
}

/// Scan all pairs of terms for one coprime to the rest.
///
/// Requires `gcd(a, d)` to be a unit.
pub fn find_coprime_term(ap: &ArithmeticProgression) -> Result<CoprimeReport> {
    if !ap.has_coprime_start()? {
        return Err(Error::NotCoprime { a: ap.a.to_string(), n: ap.d.to_string() });
    }
    let table = coprimality_table(&ap.terms())?;
    Ok(report_from_table(&table, ap.n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_and_indices() {
        let ap = ArithmeticProgression::integers(7, 10, 4).unwrap();
        let t: Vec<_> = ap.terms().iter().map(|e| e.x().to_i64().unwrap()).collect();
        assert_eq!(t, vec![7, 17, 27, 37]);
        assert_eq!(ap.term(4).unwrap(), Ring::Integers.embed(37));
        assert!(matches!(ap.term(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(ap.term(5), Err(Error::IndexOutOfRange { .. })));
        assert!(ArithmeticProgression::integers(1, 1, 0).is_err());
    }

    #[test]
    fn multiples_examples() {
        let z = Ring::Integers;
        let s: Vec<_> = (1..=4).map(|k| z.embed(k)).collect();
        assert_eq!(multiples(&z.one(), &s).unwrap(), s);
        assert_eq!(multiples(&z.embed(2), &s).unwrap(), vec![z.embed(2), z.embed(4)]);
        assert_eq!(multiples(&z.zero(), &s), Err(Error::ZeroArgument));
    }

    #[test]
    fn middle_term_of_odd_progression() {
        // all terms odd, gcd(a, d) = 1: a + 2d is coprime to the rest
        let ap = ArithmeticProgression::integers(3, 4, 5).unwrap();
        assert!(coprime_to_all(3, &ap).unwrap());
        let single = ArithmeticProgression::integers(6, 1, 1).unwrap();
        assert!(coprime_to_all(1, &single).unwrap());
        assert!(coprime_to_all(2, &single).is_err());
    }

    #[test]
    fn sqrt17_progression_has_no_coprime_term() {
        let r = Ring::quadratic(17).unwrap();
        let ap = ArithmeticProgression::new(r.element(1, 1).unwrap(), r.one(), 4).unwrap();
        for i in 1..=4 {
            assert!(!coprime_to_all(i, &ap).unwrap());
        }
        let report = find_coprime_term(&ap).unwrap();
        assert_eq!(report.witness, None);
        assert_eq!(report.pairwise_offenders.len(), 4);
    }

    #[test]
    fn find_examples() {
        let single = ArithmeticProgression::integers(9, 3, 1);
        assert!(matches!(find_coprime_term(&single.unwrap()), Err(Error::NotCoprime { .. })));
        let one = ArithmeticProgression::integers(9, 4, 1).unwrap();
        assert_eq!(find_coprime_term(&one).unwrap().witness, Some(1));
        let ap = ArithmeticProgression::integers(7, 10, 16).unwrap();
        let report = find_coprime_term(&ap).unwrap();
        let w = report.witness.expect("a witness exists for n <= 16");
        assert!(coprime_to_all(w, &ap).unwrap());
        for (i, j) in &report.pairwise_offenders {
            let (ti, tj) = (ap.term(*i).unwrap(), ap.term(*j).unwrap());
            assert!(!gcd_raw(&ti, &tj).unwrap().is_unit());
        }
    }

    #[test]
    fn smallest_witness_wins() {
        // 5, 6, 7, 8: both 5 and 7 are coprime to the rest
        let ap = ArithmeticProgression::integers(5, 1, 4).unwrap();
        assert_eq!(find_coprime_term(&ap).unwrap().witness, Some(1));
        // 2, 3, 4, 5, 6: only 5
        let ap = ArithmeticProgression::integers(2, 1, 5).unwrap();
        assert_eq!(find_coprime_term(&ap).unwrap().witness, Some(4));
    }
}
