//! Seeded random generator sets for the sweeps.

use nsg_core::{gcd_all, NumericalSemigroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `cases` semigroups with 2 to 4 minimal generators, all at most `max_gen`.
///
/// The same seed always yields the same list.
pub fn random_semigroups(seed: u64, cases: usize, max_gen: i64) -> Vec<NumericalSemigroup> {
    assert!(max_gen >= 3, "need room for two coprime generators ≥ 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(cases);
    while out.len() < cases {
        let n = rng.gen_range(2..=4);
        let gens: Vec<i64> = (0..n).map(|_| rng.gen_range(2..=max_gen)).collect();
        if gcd_all(&gens) != 1 {
            continue;
        }
        let s = NumericalSemigroup::from_generators(&gens).expect("gcd checked");
        if (2..=4).contains(&s.embedding_dimension()) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let a = random_semigroups(7, 50, 60);
        assert_eq!(a, random_semigroups(7, 50, 60));
        assert_ne!(a, random_semigroups(8, 50, 60));
        for s in &a {
            assert!((2..=4).contains(&s.embedding_dimension()));
            assert!(s
                .minimal_generators()
                .iter()
                .all(|&g| (2..=60).contains(&g)));
        }
    }
}
