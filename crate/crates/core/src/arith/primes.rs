//! Primality and factorization.

use serde::{Deserialize, Serialize};

use super::{gcd_int, mod_pow, Integer};
use crate::error::{Error, Result};

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

// Deterministic for every n < 3.3 * 10^24, which covers all u64 inputs.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

// Extra bases used above 2^64 where the test is probabilistic.
const EXTRA_WITNESSES: [u64; 8] = [41, 43, 47, 53, 59, 61, 67, 71];

/// `true` iff `|n|` is a rational prime.
///
/// Exact for `|n| < 2^64`; above that a strong probable-prime test over 20
/// fixed bases is used.
pub fn is_prime(n: &Integer) -> bool {
    let n = n.abs();
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for &p in WITNESSES.iter().chain(EXTRA_WITNESSES.iter()) {
        if n.mod_u64(p) == 0 {
            return false;
        }
    }
    WITNESSES
        .iter()
        .chain(EXTRA_WITNESSES.iter())
        .all(|&a| strong_probable_prime(&n, &Integer::from(a)))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: &Integer, a: &Integer) -> bool {
    let one = Integer::ONE;
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    let two = Integer::from(2);
    while d.is_even() {
        d = d.div_floor(&two);
        s += 1;
    }
    let mut x = mod_pow(a, &d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x).mod_floor(n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Prime factorization `sign * prod(p^e)`, primes increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i32,
    pub factors: Vec<(Integer, u32)>,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn value(&self) -> Integer {
        let magnitude: Integer = self.factors.iter().map(|(p, e)| p.pow(*e)).product();
        if self.sign < 0 {
            -magnitude
        } else {
            magnitude
        }
    }

    pub fn primes(&self) -> impl Iterator<Item = &Integer> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Factor a nonzero integer: trial division up to 10^6, then Pollard rho.
pub fn factorize(n: &Integer) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let sign = n.signum();
    let mut rest = n.abs();
    let mut primes: Vec<Integer> = Vec::new();

    push_all(&mut rest, 2, &mut primes);
    let mut d = 3u64;
    while d <= TRIAL_DIVISION_LIMIT {
        if Integer::from(d * d) > rest {
            break;
        }
        push_all(&mut rest, d, &mut primes);
        d += 2;
    }
    if !rest.is_one() {
        split_large(rest, &mut primes);
    }

    primes.sort();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

fn push_all(rest: &mut Integer, p: u64, primes: &mut Vec<Integer>) {
    let pi = Integer::from(p);
    while rest.mod_u64(p) == 0 {
        *rest = rest.div_floor(&pi);
        primes.push(pi.clone());
    }
}

fn split_large(n: Integer, out: &mut Vec<Integer>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let other = n.div_floor(&d);
    split_large(d, out);
    split_large(other, out);
}

/// Brent's variant of Pollard rho. `n` must be odd and composite.
fn pollard_brent(n: &Integer) -> Integer {
    let mut c = Integer::ONE;
    loop {
        let step = |x: &Integer| (x * x + &c).mod_floor(n);
        let mut y = Integer::from(2);
        let mut r = 1u64;
        let mut q = Integer::ONE;
        let mut g = Integer::ONE;
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    q = (&q * (&x - &y).abs()).mod_floor(n);
                }
                g = gcd_int(&q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = gcd_int(&(&x - &ys).abs(), n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += Integer::ONE;
    }
}

/// All primes `<= limit`, by sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}
