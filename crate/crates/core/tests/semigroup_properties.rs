mod common;

use common::{generator_sets, sieve, sieve_gaps};
use nsg_core::{invariants_from_apery, NumericalSemigroup};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn apery_invariants_match_sieve(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let gaps = sieve_gaps(&gens);
        prop_assert_eq!(s.gaps(), gaps.as_slice());
        let (f, g) = invariants_from_apery(&s.multiplicity_apery()).unwrap();
        prop_assert_eq!(f, gaps.last().copied().unwrap_or(-1));
        prop_assert_eq!(g, gaps.len() as i64);
        prop_assert_eq!(s.frobenius(), f);
        prop_assert!(g >= (f + 1) / 2 && g <= f + 1);
    }

    #[test]
    fn apery_set_ignores_generator_order(gens in generator_sets(), seed in any::<u64>()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mut shuffled = gens.clone();
        // deterministic permutation from the seed
        let n = shuffled.len();
        for i in (1..n).rev() {
            let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
            shuffled.swap(i, j);
        }
        let t = NumericalSemigroup::from_generators(&shuffled).unwrap();
        prop_assert_eq!(&s, &t);
        for &n in s.minimal_generators() {
            prop_assert_eq!(s.apery_set(n).unwrap(), t.apery_set(n).unwrap());
        }
    }

    #[test]
    fn apery_sets_at_every_generator_are_valid(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        for &n in s.minimal_generators() {
            let ap = s.apery_set(n).unwrap();
            let el = ap.elements();
            prop_assert_eq!(el.len() as i64, n);
            prop_assert_eq!(el[0], 0);
            for (r, &w) in el.iter().enumerate() {
                prop_assert_eq!(w % n, r as i64);
                prop_assert!(s.contains(w));
                prop_assert!(!s.contains(w - n));
            }
            prop_assert_eq!(
                invariants_from_apery(&ap).unwrap(),
                (s.frobenius(), s.genus())
            );
        }
    }

    #[test]
    fn membership_matches_representability(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let limit = s.frobenius() + 2 * s.multiplicity();
        let member = sieve(&gens, limit);
        for x in 0..=limit {
            prop_assert_eq!(s.contains(x), member[x as usize], "x = {}", x);
        }
    }

    #[test]
    fn minimal_generators_are_minimal(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mg = s.minimal_generators();
        prop_assert_eq!(s.multiplicity(), mg[0]);
        for &g in mg {
            // g ∉ S* + S*
            let splits = (1..g).any(|x| s.contains(x) && s.contains(g - x));
            prop_assert!(!splits, "{} decomposes", g);
        }
        // and they generate the same semigroup
        prop_assert_eq!(&NumericalSemigroup::from_generators(mg).unwrap(), &s);
    }

    #[test]
    fn semigroup_polynomial_at_one(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let c = s.semigroup_polynomial_coeffs();
        prop_assert_eq!(c.iter().sum::<i64>(), 1);
        prop_assert_eq!(c.len() as i64, s.frobenius() + 2);
    }

    #[test]
    fn symmetric_iff_genus_identity(gens in generator_sets()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert_eq!(s.is_symmetric(), 2 * s.genus() == s.frobenius() + 1);
    }
}

#[test]
fn frozen_examples() {
    let s = NumericalSemigroup::from_generators(&[6, 9, 20, 27]).unwrap();
    assert_eq!(s.minimal_generators(), &[6, 9, 20]);
    let s = NumericalSemigroup::from_generators(&[6, 7, 8]).unwrap();
    assert_eq!(s.apery_set(6).unwrap().elements(), &[0, 7, 8, 15, 16, 23]);
    assert_eq!((s.frobenius(), s.genus()), (17, 9));
    assert!(s.is_symmetric());
}
