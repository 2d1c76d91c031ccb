use serde::{Deserialize, Serialize};

use super::ArithmeticProgression;
use crate::arith::{is_ring_perfect_power_int, Integer};
use crate::error::{Error, Result};
use crate::rings::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerCheckReport {
    pub terms: Vec<Integer>,
    pub coprime: bool,
    pub within_length_bound: bool,
    /// 1-based indices of terms that are perfect powers.
    pub perfect_power_terms: Vec<usize>,
    pub unit_terms: Vec<usize>,
    pub zero_terms: Vec<usize>,
    pub product: Integer,
    pub product_is_perfect_power: bool,
    /// Whether the progression satisfies the hypotheses under which the
    /// product cannot be a perfect power.
    pub hypotheses_hold: bool,
}

/// Decide whether the product of the terms is a perfect power.
///
/// The product of `n <= 16` terms of a progression with coprime `a, d` is
/// never a perfect power when no term is one, provided either `a, d > 0`
/// or no term is a unit. Inputs outside these hypotheses are reported, not
/// rejected; inside them a perfect-power product is an internal error.
pub fn product_power_check(ap: &ArithmeticProgression) -> Result<PowerCheckReport> {
    if ap.ring() != Ring::Integers {
        return Err(Error::UnsupportedRing(format!("expected Z, got {}", ap.ring())));
    }
    let terms: Vec<Integer> = ap.terms().iter().map(|t| t.x().clone()).collect();
    let indices = |pred: &dyn Fn(&Integer) -> bool| -> Vec<usize> {
        terms.iter().enumerate().filter(|(_, t)| pred(t)).map(|(k, _)| k + 1).collect()
    };
    let perfect_power_terms = indices(&is_ring_perfect_power_int);
    let unit_terms = indices(&|t| t.abs().is_one());
    let zero_terms = indices(&Integer::is_zero);
    let product: Integer = terms.iter().product();
    let product_is_perfect_power = is_ring_perfect_power_int(&product);

    let coprime = ap.has_coprime_start()?;
    let within_length_bound = ap.len() <= 16;
    let positive = ap.first().x().is_positive() && ap.difference().x().is_positive();
    let hypotheses_hold = coprime
        && within_length_bound
        && perfect_power_terms.is_empty()
        && (positive || unit_terms.is_empty());
    if hypotheses_hold && product_is_perfect_power {
        return Err(Error::internal(format!("product {product} of {} terms is a perfect power", ap.len())));
    }
    Ok(PowerCheckReport {
        terms,
        coprime,
        within_length_bound,
        perfect_power_terms,
        unit_terms,
        zero_terms,
        product,
        product_is_perfect_power,
        hypotheses_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_is_a_cube() {
        let r = product_power_check(&ArithmeticProgression::integers(2, 3, 3).unwrap()).unwrap();
        assert_eq!(r.perfect_power_terms, vec![3]);
        assert!(!r.hypotheses_hold);
    }

    #[test]
    fn no_power_terms() {
        let r = product_power_check(&ArithmeticProgression::integers(2, 5, 4).unwrap()).unwrap();
        assert_eq!(r.product, Integer::from(2856));
        assert!(r.hypotheses_hold);
        assert!(!r.product_is_perfect_power);
    }

    #[test]
    fn zero_product() {
        let r = product_power_check(&ArithmeticProgression::integers(0, 1, 5).unwrap()).unwrap();
        assert!(r.product.is_zero());
        assert!(!r.product_is_perfect_power);
        assert_eq!(r.zero_terms, vec![1]);
        let r = product_power_check(&ArithmeticProgression::integers(0, 5, 3).unwrap()).unwrap();
        assert!(!r.coprime && !r.product_is_perfect_power);
    }

    #[test]
    fn outside_hypotheses_is_reported() {
        // 1 * 8 * 27 = 6^3 has cube terms
        let r = product_power_check(&ArithmeticProgression::integers(-1, 9, 2).unwrap()).unwrap();
        assert_eq!(r.unit_terms, vec![1]);
        // -1, 1 with product -1 (a unit, not a power)
        let r = product_power_check(&ArithmeticProgression::integers(-1, 2, 2).unwrap()).unwrap();
        assert!(!r.product_is_perfect_power);
    }
}
