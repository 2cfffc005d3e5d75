mod common;

use common::{generator_sets, sieve_quotient_gaps};
use nsg_core::roots::{genus_quotient_via_roots_with, hilbert_at_roots, IDENTITY_TOLERANCE};
use nsg_core::{
    frobenius_quotient_dsymmetric, gap_class_counts, quotient, Complex64, NumericalSemigroup,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quotient_matches_definition(gens in generator_sets(), d in 1i64..=12) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let q = quotient(&s, d).unwrap();
        let expected = sieve_quotient_gaps(&gens, d);
        prop_assert_eq!(q.gaps(), expected.as_slice());
        for x in 0..=q.frobenius() + 2 {
            prop_assert_eq!(q.contains(x), s.contains(d * x));
        }
        prop_assert!(q.frobenius() <= s.frobenius().div_euclid(d));
    }

    #[test]
    fn quotient_genus_is_zero_class(gens in generator_sets(), d in 1i64..=12) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let a = gap_class_counts(&s, d).unwrap();
        prop_assert_eq!(a.total(), s.genus());
        prop_assert_eq!(a.quotient_genus(), quotient(&s, d).unwrap().genus());
    }

    #[test]
    fn quotients_compose(gens in generator_sets(), d in 1i64..=6, e in 1i64..=6) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let twice = quotient(&quotient(&s, d).unwrap(), e).unwrap();
        prop_assert_eq!(twice, quotient(&s, d * e).unwrap());
    }

    #[test]
    fn dsymmetric_frobenius_matches(gens in generator_sets(), d in 1i64..=10) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.is_d_symmetric(d));
        let f = frobenius_quotient_dsymmetric(&s, d).unwrap();
        prop_assert_eq!(f, quotient(&s, d).unwrap().frobenius());
    }

    #[test]
    fn roots_formula_matches_brute_force(gens in generator_sets(), d in 2i64..=12) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let r = genus_quotient_via_roots_with::<f64>(&s, d, 1e-6).unwrap();
        prop_assert_eq!(r.genus, quotient(&s, d).unwrap().genus());
        prop_assert!(r.residual < 1e-6);
    }

    #[test]
    fn hilbert_root_sum_is_real(gens in generator_sets(), d in 2i64..=12) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let sum: Complex64 = hilbert_at_roots::<f64>(&s, d).unwrap().iter().map(|e| e.value).sum();
        prop_assert!(sum.im.abs() < IDENTITY_TOLERANCE, "imaginary part {}", sum.im);
    }
}
