#![allow(dead_code)]

use proptest::prelude::*;

/// Membership by dynamic programming over `[0, limit]`, sharing nothing with
/// the library's Apéry-set path.
pub fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut out = vec![false; limit as usize + 1];
    out[0] = true;
    for x in 1..=limit {
        out[x as usize] = gens.iter().any(|&g| g <= x && out[(x - g) as usize]);
    }
    out
}

/// Gaps by sieving up to `min(gens)·max(gens)`, which exceeds F(S).
pub fn sieve_gaps(gens: &[i64]) -> Vec<i64> {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    let limit = lo * hi;
    let member = sieve(gens, limit);
    (0..=limit).filter(|&x| !member[x as usize]).collect()
}

/// Gaps of `S/d` straight from the definition `x ∈ S/d ⇔ dx ∈ S`.
pub fn sieve_quotient_gaps(gens: &[i64], d: i64) -> Vec<i64> {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    let limit = lo * hi;
    let member = sieve(gens, limit);
    (0..=limit / d)
        .filter(|&x| !member[(d * x) as usize])
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// 2 to 4 generators in `[2, 60]` with gcd 1.
pub fn generator_sets() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=60, 2..=4).prop_filter("gcd must be 1", |g| {
        g.iter().fold(0, |acc, &x| gcd(acc, x)) == 1
    })
}
