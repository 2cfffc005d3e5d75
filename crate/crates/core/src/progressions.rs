//! Quotients of semigroups generated by arithmetic progressions.
//!
//! Two families appear here:
//!
//! * `⟨a, a+k, a+2k⟩` quotiented by a divisor `d` of `a` ([`Ap3Spec`]);
//! * the full progression `⟨a, a+k, …, a+(a−1)k⟩` ([`FullApSpec`]), which is
//!   the semigroup generated by every term of `a, a+k, a+2k, …`.
//!
//! Every closed form checks its own hypotheses and returns
//! [`Error::Precondition`] outside them. Divisions by 2 and 4 are done on
//! scaled integers and a remainder is reported as a theorem violation.

use serde::Serialize;

use crate::arith::{self, gcd, require_positive};
use crate::error::{Error, Result};
use crate::quotient::quotient;
use crate::semigroup::NumericalSemigroup;

/// Parameters of `⟨a, a+k, a+2k⟩ / d` with `d | a`.
///
/// `s = a/d` and `t = ⌊d/2⌋`, so that `d = 2t+1` or `d = 2t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ap3Spec {
    pub a: i64,
    pub k: i64,
    pub d: i64,
    pub s: i64,
    pub t: i64,
}

impl Ap3Spec {
    pub fn new(a: i64, k: i64, d: i64) -> Result<Self> {
        require_positive("a", a)?;
        require_positive("k", k)?;
        require_positive("d", d)?;
        if gcd(a, k) != 1 {
            return Err(Error::Precondition(format!("gcd({a}, {k}) ≠ 1")));
        }
        if a % d != 0 {
            return Err(Error::Precondition(format!(
                "d = {d} does not divide a = {a}"
            )));
        }
        Ok(Self {
            a,
            k,
            d,
            s: a / d,
            t: d / 2,
        })
    }

    /// `[a, a+k, a+2k]`.
    pub fn generators(&self) -> [i64; 3] {
        [self.a, self.a + self.k, self.a + 2 * self.k]
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(&self.generators())
    }
}

/// Parameters of `⟨a, a+k, …, a+(a−1)k⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FullApSpec {
    pub a: i64,
    pub k: i64,
}

impl FullApSpec {
    pub fn new(a: i64, k: i64) -> Result<Self> {
        require_positive("a", a)?;
        require_positive("k", k)?;
        if gcd(a, k) != 1 {
            return Err(Error::Precondition(format!("gcd({a}, {k}) ≠ 1")));
        }
        Ok(Self { a, k })
    }

    pub fn generators(&self) -> Vec<i64> {
        progression(self.a, self.k, self.a - 1)
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(&self.generators())
    }

    fn cofactor(&self, d: i64) -> Result<i64> {
        require_positive("d", d)?;
        if self.a % d != 0 {
            return Err(Error::Precondition(format!(
                "d = {d} does not divide a = {}",
                self.a
            )));
        }
        Ok(self.a / d)
    }
}

/// `[a, a+k, …, a+ℓk]`.
pub fn progression(a: i64, k: i64, ell: i64) -> Vec<i64> {
    (0..=ell).map(|i| a + i * k).collect()
}

/// `⟨a, a+k, a+2k⟩` (with `gcd(a, k) = 1`) is symmetric exactly when `a` is
/// even.
pub fn ap3_symmetric_iff_even(a: i64, k: i64) -> Result<bool> {
    require_positive("a", a)?;
    require_positive("k", k)?;
    if gcd(a, k) != 1 {
        return Err(Error::Precondition(format!("gcd({a}, {k}) ≠ 1")));
    }
    Ok(a % 2 == 0)
}

/// The quotient `⟨a, a+k, a+2k⟩/d` built from its explicit generators:
///
/// * `d = 2t+1` odd: `⟨s, s+k+ts, s+2k+2ts⟩`, requiring `s` even;
/// * `d = 2t` even: `⟨s, k+st⟩`, for every multiple `a = sd`.
///
/// For even `d` the requirement that `a` be an even multiple of `d` holds
/// automatically, so no parity condition on `s` is imposed there.
pub fn ap3_quotient_generators(spec: &Ap3Spec) -> Result<NumericalSemigroup> {
    let Ap3Spec { k, d, s, t, .. } = *spec;
    if d < 3 {
        return Err(Error::Precondition(format!("needs d ≥ 3, got {d}")));
    }
    if d % 2 == 1 {
        if s % 2 != 0 {
            return Err(Error::Precondition(format!(
                "odd d = {d} needs a = {} to be an even multiple of d",
                spec.a
            )));
        }
        NumericalSemigroup::from_generators(&[s, s + k + t * s, s + 2 * k + 2 * t * s])
    } else {
        NumericalSemigroup::from_generators(&[s, k + s * t])
    }
}

/// Even `d ≥ 4`: `F = (s−1)(a+2k)/2 − s` and `g = (s−1)(a+2k−2)/4`.
pub fn ap3_even_d_invariants(spec: &Ap3Spec) -> Result<(i64, i64)> {
    let Ap3Spec { a, k, d, s, .. } = *spec;
    if d < 4 || d % 2 != 0 {
        return Err(Error::Precondition(format!("needs even d ≥ 4, got {d}")));
    }
    const CTX: &str = "even-d progression formula";
    let f2 = arith::mul(s - 1, a + 2 * k, CTX)?;
    let g4 = arith::mul(s - 1, a + 2 * k - 2, CTX)?;
    let frobenius = theorem_div(f2, 2, CTX)? - s;
    let genus = theorem_div(g4, 4, CTX)?;
    Ok((frobenius, genus))
}

/// Odd `a` (so `d = 2t+1` and `s` odd):
///
/// ```text
/// F = ((s−1)t + (s−1)/2)·s + (s−1)k − s
/// g = ( s(s−1)t + (s²−1)/2 + (s−1)k − (s−1) ) / 2
/// ```
///
/// and these satisfy `2g − F = (s+1)/2`, which is checked as well.
pub fn ap3_odd_a_invariants(spec: &Ap3Spec) -> Result<(i64, i64)> {
    let Ap3Spec { a, k, d, s, t } = *spec;
    if a % 2 == 0 {
        return Err(Error::Precondition(format!("needs odd a, got {a}")));
    }
    if d % 2 == 0 || s % 2 == 0 {
        return Err(Error::InvariantViolation(format!(
            "odd a = {a} with even d = {d} or even s = {s}"
        )));
    }
    const CTX: &str = "odd-a progression formula";
    let half_s_minus_one = (s - 1) / 2;
    let frobenius = arith::mul(
        arith::add(arith::mul(s - 1, t, CTX)?, half_s_minus_one, CTX)?,
        s,
        CTX,
    )? + arith::mul(s - 1, k, CTX)?
        - s;
    // 4g = 2s(s−1)t + (s²−1) + 2(s−1)k − 2(s−1)
    let g4 = arith::mul(2 * s, arith::mul(s - 1, t, CTX)?, CTX)? + arith::mul(s, s, CTX)? - 1
        + 2 * arith::mul(s - 1, k, CTX)?
        - 2 * (s - 1);
    let genus = theorem_div(g4, 4, CTX)?;
    if 2 * genus - frobenius != (s + 1) / 2 {
        return Err(Error::TheoremViolation(format!(
            "2g − F = {} but (s+1)/2 = {}",
            2 * genus - frobenius,
            (s + 1) / 2
        )));
    }
    Ok((frobenius, genus))
}

/// `⟨a, a+k, …, a+(a−1)k⟩ / d = ⟨s, s+k, …, s+(s−1)k⟩` for `d | a`, `s = a/d`.
pub fn full_ap_quotient(spec: &FullApSpec, d: i64) -> Result<NumericalSemigroup> {
    let s = spec.cofactor(d)?;
    NumericalSemigroup::from_generators(&progression(s, spec.k, s - 1))
}

/// For `d | a` with `s = a/d ≥ 2`: `F(S/d) = k(s−1)` and
/// `g(S/d) = (k+1)(s−1)/2`, so that `g = (F + s − 1)/2`.
///
/// `s = 1` means `S/d = ℕ`, where the identity would read `0 = −1/2`; that
/// case is refused here and handled by the generic quotient.
pub fn full_ap_divisor_identity(spec: &FullApSpec, d: i64) -> Result<(i64, i64)> {
    let s = spec.cofactor(d)?;
    if s < 2 {
        return Err(Error::Precondition(format!(
            "d = a = {d} gives the trivial quotient ℕ"
        )));
    }
    const CTX: &str = "full progression divisor formula";
    let frobenius = arith::mul(spec.k, s - 1, CTX)?;
    let genus = theorem_div(arith::mul(spec.k + 1, s - 1, CTX)?, 2, CTX)?;
    if 2 * genus != frobenius + s - 1 {
        return Err(Error::TheoremViolation(format!(
            "g = {genus} but (F + s − 1)/2 = ({frobenius} + {})/2",
            s - 1
        )));
    }
    Ok((frobenius, genus))
}

/// For `d | k`: `F(S/d) = (a−1)k/d` and `g(S/d) = (a−1)(k/d + 1)/2`, so
/// that `g = (F + a − 1)/2`.
pub fn full_ap_d_divides_k(spec: &FullApSpec, d: i64) -> Result<(i64, i64)> {
    require_positive("d", d)?;
    let FullApSpec { a, k } = *spec;
    if k % d != 0 {
        return Err(Error::Precondition(format!(
            "d = {d} does not divide k = {k}"
        )));
    }
    if a < 2 {
        return Err(Error::Precondition(format!("needs a ≥ 2, got {a}")));
    }
    const CTX: &str = "full progression d | k formula";
    let frobenius = arith::mul(a - 1, k / d, CTX)?;
    let genus = theorem_div(arith::mul(a - 1, k / d + 1, CTX)?, 2, CTX)?;
    if 2 * genus != frobenius + a - 1 {
        return Err(Error::TheoremViolation(format!(
            "g = {genus} but (F + a − 1)/2 = ({frobenius} + {})/2",
            a - 1
        )));
    }
    Ok((frobenius, genus))
}

fn theorem_div(num: i64, den: i64, ctx: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::TheoremViolation(format!(
            "{ctx}: {num} is not divisible by {den}"
        )));
    }
    Ok(num / den)
}

/// One row of the exploratory table for `⟨a, a+k, …, a+ℓk⟩ / d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpenProblemRow {
    pub d: i64,
    pub frobenius: i64,
    pub genus: i64,
    pub twice_genus_minus_frobenius: i64,
}

/// Brute-force `F` and `g` of `⟨a, a+k, …, a+ℓk⟩/d` for `3 ≤ ℓ ≤ a−2`.
pub fn open_problem_sweep(
    a: i64,
    k: i64,
    ell: i64,
    d_range: impl IntoIterator<Item = i64>,
) -> Result<Vec<OpenProblemRow>> {
    require_positive("a", a)?;
    require_positive("k", k)?;
    if gcd(a, k) != 1 {
        return Err(Error::Precondition(format!("gcd({a}, {k}) ≠ 1")));
    }
    if ell < 3 || ell > a - 2 {
        return Err(Error::Precondition(format!(
            "ℓ must satisfy 3 ≤ ℓ ≤ a − 2 = {}, got {ell}",
            a - 2
        )));
    }
    let s = NumericalSemigroup::from_generators(&progression(a, k, ell))?;
    d_range
        .into_iter()
        .map(|d| {
            let q = quotient(&s, d)?;
            Ok(OpenProblemRow {
                d,
                frobenius: q.frobenius(),
                genus: q.genus(),
                twice_genus_minus_frobenius: 2 * q.genus() - q.frobenius(),
            })
        })
        .collect()
}
