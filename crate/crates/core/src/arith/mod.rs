//! Rational-integer primitives shared by the rest of the crate.

mod integer;
mod primes;

pub use integer::{Integer, ParseIntegerError};
pub use primes::{factorize, is_prime, is_prime_u64, primes_up_to, Factorization};

use crate::error::{Error, Result};

/// Nonnegative gcd with `gcd(0, 0) = 0`.
pub fn gcd_int(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Returns `(g, s, t)` with `g = gcd_int(a, b)` and `s*a + t*b = g`.
pub fn extended_gcd_int(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::ONE, Integer::ZERO);
    let (mut old_t, mut t) = (Integer::ZERO, Integer::ONE);
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &(&q * &r);
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &(&q * &s);
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &(&q * &t);
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// `base^exp mod modulus` for `exp >= 0` and `modulus >= 1`, result in `[0, modulus)`.
pub fn mod_pow(base: &Integer, exp: &Integer, modulus: &Integer) -> Integer {
    assert!(!exp.is_negative(), "negative exponent");
    assert!(modulus.is_positive(), "modulus must be positive");
    let m = modulus.to_bigint();
    let b = base.to_bigint();
    let r = b.modpow(&exp.to_bigint(), &m);
    // BigInt::modpow keeps the sign of the base
    Integer::from(r).mod_floor(modulus)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, computed by quadratic
/// reciprocity.
pub fn legendre_symbol(a: &Integer, p: &Integer) -> Result<i32> {
    if !p.is_positive() || p.is_even() || !is_prime(p) {
        return Err(Error::NotOddPrime(p.clone()));
    }
    let mut a = a.mod_floor(p);
    let mut n = p.clone();
    let mut result = 1;
    let eight = Integer::from(8);
    let four = Integer::from(4);
    let two = Integer::from(2);
    while !a.is_zero() {
        while a.is_even() {
            a = a.div_floor(&two);
            let r = n.mod_floor(&eight).to_i64().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four).to_i64() == Some(3) && n.mod_floor(&four).to_i64() == Some(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { result } else { 0 })
}

/// Euler's totient. `n` must be positive.
pub fn euler_phi(n: &Integer) -> Result<Integer> {
    if !n.is_positive() {
        return Err(Error::precondition(format!("euler_phi needs n >= 1, got {n}")));
    }
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product())
}

/// Smallest `k >= 1` with `a^k = 1 (mod n)`.
pub fn multiplicative_order(a: &Integer, n: &Integer) -> Result<Integer> {
    if *n < Integer::from(2) {
        return Err(Error::ModulusTooSmall(n.clone()));
    }
    if !gcd_int(a, n).is_one() {
        return Err(Error::NotCoprime { a: a.to_string(), n: n.to_string() });
    }
    let mut order = euler_phi(n)?;
    let phi_factors = factorize(&order)?;
    for (q, _) in &phi_factors.factors {
        while order.is_multiple_of(q) {
            let candidate = order.div_floor(q);
            if mod_pow(a, &candidate, n).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// `floor(n^(1/k))` for `n >= 0`, `k >= 1`, by binary search.
pub fn nth_root_floor(n: &Integer, k: u32) -> Integer {
    assert!(!n.is_negative() && k >= 1);
    if n.is_zero() || k == 1 {
        return n.clone();
    }
    let mut lo = Integer::ONE;
    let mut hi = Integer::from(2).pow((n.bits() / u64::from(k) + 1) as u32);
    // invariant: lo^k <= n < hi^k
    while &hi - &lo > Integer::ONE {
        let mid = (&lo + &hi).div_floor(&Integer::from(2));
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn exact_root(n: &Integer, k: u32) -> Option<Integer> {
    let r = nth_root_floor(n, k);
    (r.pow(k) == *n).then_some(r)
}

/// `true` iff `n = t^r` with integers `t > 1`, `r > 1`. Zero, one and
/// negative numbers are never perfect powers in this sense.
pub fn is_perfect_power_int(n: &Integer) -> bool {
    if *n < Integer::from(4) {
        return false;
    }
    (2..=n.bits() as u32).any(|r| exact_root(n, r).is_some())
}

/// Perfect power in the ring `Z`: `n = t^r` with `t` a nonzero non-unit and
/// `r > 1`. Differs from [`is_perfect_power_int`] only on negatives, where
/// odd powers such as `-8 = (-2)^3` count.
pub fn is_ring_perfect_power_int(n: &Integer) -> bool {
    if !n.is_negative() {
        return is_perfect_power_int(n);
    }
    let m = n.abs();
    if m < Integer::from(8) {
        return false;
    }
    (3..=m.bits() as u32)
        .step_by(2)
        .any(|r| exact_root(&m, r).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_int(&int(0), &int(0)), int(0));
        assert_eq!(gcd_int(&int(-9), &int(0)), int(9));
        assert_eq!(gcd_int(&int(1071), &int(462)), int(21));
    }

    #[test]
    fn extended_gcd_examples() {
        assert_eq!(extended_gcd_int(&int(1), &int(0)), (int(1), int(1), int(0)));
        assert_eq!(extended_gcd_int(&int(6), &int(0)), (int(6), int(1), int(0)));
        assert_eq!(extended_gcd_int(&int(0), &int(0)), (int(0), int(1), int(0)));
        let (g, s, t) = extended_gcd_int(&int(240), &int(46));
        assert_eq!(g, int(2));
        assert_eq!(&s * int(240) + &t * int(46), int(2));
        let (g, s, t) = extended_gcd_int(&int(-6), &int(0));
        assert_eq!((g, s, t), (int(6), int(-1), int(0)));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&int(0), &int(5)), Ok(0));
        for p in [3, 5, 7, 11, 101] {
            assert_eq!(legendre_symbol(&int(1), &int(p)), Ok(1));
        }
        assert_eq!(legendre_symbol(&int(-1), &int(5)), Ok(1));
        assert_eq!(legendre_symbol(&int(-1), &int(7)), Ok(-1));
        assert!(matches!(legendre_symbol(&int(3), &int(2)), Err(Error::NotOddPrime(_))));
        assert!(matches!(legendre_symbol(&int(3), &int(9)), Err(Error::NotOddPrime(_))));
        assert!(matches!(legendre_symbol(&int(3), &int(-7)), Err(Error::NotOddPrime(_))));
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(&int(1), &int(7)), Ok(int(1)));
        assert_eq!(multiplicative_order(&int(2), &int(5)), Ok(int(4)));
        assert_eq!(multiplicative_order(&int(11), &int(5)), Ok(int(1)));
        assert_eq!(multiplicative_order(&int(-1), &int(5)), Ok(int(2)));
        assert!(matches!(multiplicative_order(&int(2), &int(4)), Err(Error::NotCoprime { .. })));
        assert!(matches!(multiplicative_order(&int(2), &int(1)), Err(Error::ModulusTooSmall(_))));
    }

    #[test]
    fn roots_and_powers() {
        assert_eq!(nth_root_floor(&int(80), 2), int(8));
        assert_eq!(nth_root_floor(&int(81), 4), int(3));
        assert_eq!(nth_root_floor(&int(0), 3), int(0));
        assert!(!is_perfect_power_int(&int(0)));
        assert!(!is_perfect_power_int(&int(1)));
        assert!(is_perfect_power_int(&int(36)));
        assert!(is_perfect_power_int(&int(8)));
        assert!(!is_perfect_power_int(&int(-8)));
        assert!(!is_perfect_power_int(&int(2856)));
        let big = Integer::from(3).pow(40) * Integer::from(5).pow(40);
        assert!(is_perfect_power_int(&big));
        assert!(!is_perfect_power_int(&(big + 1)));
    }

    #[test]
    fn ring_perfect_powers_in_z() {
        assert!(is_ring_perfect_power_int(&int(-8)));
        assert!(is_ring_perfect_power_int(&int(-243)));
        assert!(!is_ring_perfect_power_int(&int(-4)));
        assert!(!is_ring_perfect_power_int(&int(-1)));
        assert!(!is_ring_perfect_power_int(&int(0)));
        assert!(is_ring_perfect_power_int(&int(16)));
        // -64 = (-4)^3
        assert!(is_ring_perfect_power_int(&int(-64)));
    }
}
