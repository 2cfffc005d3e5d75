//! Closed forms for embedding dimension two.

use crate::arith::{self, gcd, mod_inverse, require_positive};
use crate::error::{Error, Result};

/// Sylvester: `F(⟨a,b⟩) = ab − a − b` and `g(⟨a,b⟩) = (a−1)(b−1)/2`.
pub fn sylvester_invariants(a: i64, b: i64) -> Result<(i64, i64)> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    if gcd(a, b) != 1 {
        return Err(Error::Precondition(format!("gcd({a}, {b}) ≠ 1")));
    }
    let ab = arith::mul(a, b, "a·b")?;
    let frobenius = ab - a - b;
    let genus = arith::mul(a - 1, b - 1, "(a−1)(b−1)")? / 2;
    Ok((frobenius, genus))
}

/// Floor-sum closed form for `g(⟨a,b⟩/d)` with `a`, `b`, `d` pairwise coprime
/// and `d ≥ 2`.
///
/// With `a*` the inverse of `a` mod `d` in `[1, d−1]` and `q = ⌊(a−1)/d⌋`:
///
/// ```text
/// g = (a−1)(b+d−a*·ab)/(2d) + q·(a*b·q + a*b − 2)/2 + Σ_{1≤j<a, d∤j} ⌊a*bj/d⌋
/// ```
pub fn genus_quotient_ed2_closed_form(a: i64, b: i64, d: i64) -> Result<i64> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "the closed form needs d ≥ 2, got {d}"
        )));
    }
    for (x, y) in [(a, b), (a, d), (b, d)] {
        if gcd(x, y) != 1 {
            return Err(Error::Precondition(format!(
                "a, b, d must be pairwise coprime; gcd({x}, {y}) ≠ 1"
            )));
        }
    }
    genus_quotient_ed2_raw(a, b, d)
}

/// The same expression with only `gcd(a, d) = 1` required (so that `a*`
/// exists). Used to probe the formula outside its stated hypotheses.
pub fn genus_quotient_ed2_raw(a: i64, b: i64, d: i64) -> Result<i64> {
    let a_star = mod_inverse(a, d)
        .filter(|&x| x != 0)
        .ok_or_else(|| Error::Precondition(format!("{a} is not invertible mod {d}")))?;
    const CTX: &str = "floor-sum closed form";
    let a_star_b = arith::mul(a_star, b, CTX)?;
    let q = (a - 1) / d;

    // Everything is scaled by 2d and divided once at the end.
    let first = arith::mul(
        a - 1,
        arith::sub(b + d, arith::mul(a_star_b, a, CTX)?, CTX)?,
        CTX,
    )?;
    let second = arith::mul(
        arith::mul(d, q, CTX)?,
        arith::add(arith::mul(a_star_b, q, CTX)?, a_star_b - 2, CTX)?,
        CTX,
    )?;
    let mut floor_sum = 0i64;
    for j in (1..a).filter(|j| j % d != 0) {
        floor_sum = arith::add(floor_sum, arith::mul(a_star_b, j, CTX)? / d, CTX)?;
    }
    let total = arith::add(
        arith::add(first, second, CTX)?,
        arith::mul(2 * d, floor_sum, CTX)?,
        CTX,
    )?;
    arith::exact_div(total, 2 * d, CTX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::quotient;
    use crate::semigroup::NumericalSemigroup;

    fn brute(a: i64, b: i64, d: i64) -> i64 {
        let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
        quotient(&s, d).unwrap().genus()
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester_invariants(3, 5), Ok((7, 4)));
        assert_eq!(sylvester_invariants(1, 9), Ok((-1, 0)));
        assert_eq!(sylvester_invariants(2, 3), Ok((1, 1)));
        assert!(matches!(
            sylvester_invariants(4, 6),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            sylvester_invariants(i64::MAX / 2, 5),
            Err(Error::Overflow("a·b"))
        );
    }

    #[test]
    fn ed2_examples() {
        assert_eq!(genus_quotient_ed2_closed_form(3, 5, 2), Ok(2));
        assert_eq!(genus_quotient_ed2_closed_form(2, 3, 5), Ok(0));
        assert_eq!(brute(2, 3, 5), 0);
        assert_eq!(genus_quotient_ed2_closed_form(5, 7, 3), Ok(4));
        assert_eq!(brute(5, 7, 3), 4);
    }

    #[test]
    fn ed2_preconditions() {
        assert!(matches!(
            genus_quotient_ed2_closed_form(3, 5, 1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            genus_quotient_ed2_closed_form(3, 4, 2),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            genus_quotient_ed2_closed_form(4, 6, 5),
            Err(Error::Precondition(_))
        ));
        // raw variant still needs a invertible mod d
        assert!(genus_quotient_ed2_raw(4, 5, 2).is_err());
    }

    #[test]
    fn ed2_small_grid() {
        for a in 1..20 {
            for b in 1..20 {
                for d in 2..7 {
                    if a == b || gcd(a, b) != 1 || gcd(a, d) != 1 || gcd(b, d) != 1 {
                        continue;
                    }
                    assert_eq!(
                        genus_quotient_ed2_closed_form(a, b, d),
                        Ok(brute(a, b, d)),
                        "({a}, {b}, {d})"
                    );
                }
            }
        }
    }
}
