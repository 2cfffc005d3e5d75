//! Quotients `S/d = {x ∈ ℕ : d·x ∈ S}` and the residue-class gap counts that
//! tie their genus back to S.

use serde::Serialize;

use crate::arith::require_positive;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `counts[i]` is the number of gaps of S congruent to `i` mod `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapClassCounts {
    pub d: i64,
    pub counts: Vec<i64>,
}

impl GapClassCounts {
    /// `A_0`, which is the genus of `S/d`.
    pub fn quotient_genus(&self) -> i64 {
        self.counts[0]
    }

    /// Sum of all classes, which is the genus of S.
    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }
}

/// Builds `S/d` exactly.
///
/// Only `x ≤ ⌊F(S)/d⌋` needs a membership test, since `d·x > F(S)` puts `x`
/// in the quotient. The result is assembled from its own Apéry table so the
/// canonical form (minimal generators, gaps) comes out of the same path as
/// [`NumericalSemigroup::from_generators`].
pub fn quotient(s: &NumericalSemigroup, d: i64) -> Result<NumericalSemigroup> {
    require_positive("d", d)?;
    if d == 1 {
        return Ok(s.clone());
    }
    if s.is_naturals() || s.contains(d) {
        return Ok(NumericalSemigroup::naturals());
    }
    let bound = s.frobenius() / d + 1;
    let member = |x: i64| x >= bound || s.contains(d * x);
    let m = (1..=bound)
        .find(|&x| member(x))
        .expect("bound itself is always a member");
    let mut apery = vec![-1i64; m as usize];
    let mut unfilled = m;
    let mut x = 0;
    while unfilled > 0 {
        let r = (x % m) as usize;
        if apery[r] < 0 && member(x) {
            apery[r] = x;
            unfilled -= 1;
        }
        x += 1;
    }
    NumericalSemigroup::from_multiplicity_apery(m, apery)
}

/// The least `x ∈ S` (zero included) with `x ≡ F(S) (mod d)`.
///
/// When `d | F(S)` this is 0.
pub fn frobenius_residue_witness(s: &NumericalSemigroup, d: i64) -> Result<i64> {
    require_positive("d", d)?;
    if s.is_naturals() {
        return Err(Error::Precondition("S = ℕ has no Frobenius number".into()));
    }
    let mut x = s.frobenius().rem_euclid(d);
    while !s.contains(x) {
        x += d;
    }
    Ok(x)
}

/// `F(S/d) = (F(S) − x)/d` for a `d`-symmetric S, where `x` is the least
/// element of S congruent to `F(S)` mod `d`.
///
/// The least element may be 0 (exactly when `d | F(S)`); restricting `x` to
/// positive elements gives wrong answers in that case. With this reading
/// `d = 1` is covered as well and returns `F(S)`.
pub fn frobenius_quotient_dsymmetric(s: &NumericalSemigroup, d: i64) -> Result<i64> {
    require_positive("d", d)?;
    if s.is_naturals() {
        return Err(Error::Precondition(
            "the d-symmetric Frobenius formula needs F(S) ≥ 0".into(),
        ));
    }
    if let Some(gap) = s.d_symmetry_violation(d) {
        return Err(Error::NotDSymmetric { d, gap });
    }
    let x = frobenius_residue_witness(s, d)?;
    Ok((s.frobenius() - x) / d)
}

pub fn gap_class_counts(s: &NumericalSemigroup, d: i64) -> Result<GapClassCounts> {
    require_positive("d", d)?;
    let mut counts = vec![0i64; d as usize];
    for &g in s.gaps() {
        counts[(g % d) as usize] += 1;
    }
    Ok(GapClassCounts { d, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(&sg(&[3, 5]), 2).unwrap();
        assert_eq!(q.minimal_generators(), &[3, 4, 5]);
        assert_eq!(q.gaps(), &[1, 2]);
        assert_eq!((q.frobenius(), q.genus()), (2, 2));

        let s = sg(&[6, 9, 20]);
        assert_eq!(quotient(&s, 1).unwrap(), s);

        let q = quotient(&sg(&[6, 7, 8]), 3).unwrap();
        assert_eq!(q.minimal_generators(), &[2, 5]);
    }

    #[test]
    fn quotient_by_element_is_naturals() {
        assert_eq!(
            quotient(&sg(&[3, 5]), 3).unwrap(),
            NumericalSemigroup::naturals()
        );
        assert_eq!(
            quotient(&NumericalSemigroup::naturals(), 7).unwrap(),
            NumericalSemigroup::naturals()
        );
        assert!(quotient(&sg(&[3, 5]), 0).is_err());
    }

    #[test]
    fn dsymmetric_frobenius() {
        let s = sg(&[3, 5]);
        assert_eq!(frobenius_residue_witness(&s, 2), Ok(3));
        assert_eq!(frobenius_quotient_dsymmetric(&s, 2), Ok(2));
        assert_eq!(frobenius_quotient_dsymmetric(&sg(&[2, 3]), 1), Ok(1));
        // d | F(S): the witness is 0. <2,17> has F = 15 and <2,17>/3 has gaps {1,3,5}.
        let s = sg(&[2, 17]);
        assert_eq!(frobenius_residue_witness(&s, 3), Ok(0));
        assert_eq!(frobenius_quotient_dsymmetric(&s, 3), Ok(5));
        assert_eq!(quotient(&s, 3).unwrap().frobenius(), 5);
    }

    #[test]
    fn dsymmetric_frobenius_refuses_bad_input() {
        assert_eq!(
            frobenius_quotient_dsymmetric(&sg(&[3, 4, 5]), 1),
            Err(Error::NotDSymmetric { d: 1, gap: 1 })
        );
        assert!(matches!(
            frobenius_quotient_dsymmetric(&NumericalSemigroup::naturals(), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn gap_classes() {
        let s = sg(&[3, 5]);
        assert_eq!(gap_class_counts(&s, 2).unwrap().counts, vec![2, 2]);
        assert_eq!(gap_class_counts(&s, 3).unwrap().counts, vec![0, 3, 1]);
        let n = gap_class_counts(&NumericalSemigroup::naturals(), 4).unwrap();
        assert_eq!(n.counts, vec![0; 4]);
        assert_eq!(n.total(), 0);
    }
}
