use std::collections::HashSet;

use num_integer::Integer as _;

use crate::arith::Integer;
use crate::error::{Error, Result};

/// The first `count` distinct triples `(a^2, b^2, c^2)` of squares in
/// arithmetic progression with `gcd(a^2, b^2 - a^2) = 1`.
///
/// Rational points on `x^2 + y^2 = 2` are taken on the line through `(1, 1)`
/// with slope `p/q`; clearing denominators gives `a^2 + c^2 = 2 b^2`. Slopes
/// are visited in order of increasing `max(|p|, q)`, then `q`, then `p`.
pub fn squares_ap_triples(count: usize) -> Result<Vec<(Integer, Integer, Integer)>> {
    if count == 0 {
        return Err(Error::precondition("count must be >= 1"));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut height: i64 = 1;
    while out.len() < count {
        for q in 1..=height {
            for p in -height..=height {
                if p.abs().max(q) != height || p.gcd(&q) != 1 {
                    continue;
                }
                let Some(roots) = triple_for_slope(p, q) else { continue };
                if seen.insert(roots) {
                    let [a, b, c] = roots.map(|v| Integer::from(v).pow(2));
                    out.push((a, b, c));
                    if out.len() == count {
                        return Ok(out);
                    }
                }
            }
        }
        height += 1;
    }
    Ok(out)
}

/// Reduced `(a, b, c)` with `a < c` for slope `p/q`, or `None` on the
/// trivial progression `1, 1, 1`.
fn triple_for_slope(p: i64, q: i64) -> Option<[i128; 3]> {
    let (p, q) = (p as i128, q as i128);
    let a = (p * p - 2 * p * q - q * q).abs();
    let c = (q * q - 2 * p * q - p * p).abs();
    let b = p * p + q * q;
    let g = a.gcd(&b).gcd(&c);
    let (a, b, c) = (a / g, b / g, c / g);
    if a == c {
        return None;
    }
    Some([a.min(c), b, a.max(c)])
}
