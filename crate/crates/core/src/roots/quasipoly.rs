//! The degree-2 structure of `g(⟨a,b⟩/d)` in exact rational arithmetic.
//!
//! For pairwise coprime `a, b, d`,
//! `g(⟨a,b⟩/d) − (a−1)(b−1)/(2d)` depends only on `a mod d` and `b mod d`.
//! Specializing to `b = a + k` makes `a ↦ g(⟨a,a+k⟩/d)` a quasipolynomial of
//! period `d` with leading coefficient `1/(2d)`.

use std::ops::RangeInclusive;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::arith::{gcd, require_positive};
use crate::error::{Error, Result};
use crate::quotient::quotient;
use crate::semigroup::NumericalSemigroup;
use crate::Rational;

/// Three points to fit a quadratic plus one held out.
pub const FIT_MIN_SAMPLES: usize = 4;

/// Fit of `a ↦ g(⟨a,a+k⟩/d)` on one residue class of `a` mod `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFit {
    pub residue: i64,
    /// Residue of `b = a + k` mod `d`.
    pub b_residue: i64,
    /// `(c2, c1, c0)` with `g = c2·a² + c1·a + c0` on this class.
    pub coefficients: [Rational; 3],
    pub fitted_at: [i64; 3],
    /// Number of further samples the fit predicted exactly.
    pub held_out: usize,
    /// `g − (a−1)(b−1)/(2d)` on this class, when `a`, `b`, `d` are pairwise
    /// coprime there. Outside that case the difference is not constant.
    pub cabd_constant: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasipolynomialFit {
    pub d: i64,
    pub k: i64,
    pub classes: Vec<ClassFit>,
}

fn overflow() -> Error {
    Error::Overflow("rational interpolation")
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< n` through `n` points, by Lagrange's formula in checked arithmetic.
pub fn interpolate<T>(xs: &[T], ys: &[T]) -> Result<Vec<T>>
where
    T: Clone + PartialEq + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv,
{
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::InvalidArgument(
            "interpolation needs equally many x and y values".into(),
        ));
    }
    let n = xs.len();
    let mut result = vec![T::zero(); n];
    for (j, (xj, yj)) in xs.iter().zip(ys).enumerate() {
        // basis numerator Π_{m≠j} (x − x_m) and denominator Π (x_j − x_m)
        let mut basis = vec![T::one()];
        let mut denom = T::one();
        for (m, xm) in xs.iter().enumerate() {
            if m == j {
                continue;
            }
            let mut next = vec![T::zero(); basis.len() + 1];
            for (i, c) in basis.iter().enumerate() {
                next[i + 1] = next[i + 1].checked_add(c).ok_or_else(overflow)?;
                let shifted = c.checked_mul(xm).ok_or_else(overflow)?;
                next[i] = next[i].checked_sub(&shifted).ok_or_else(overflow)?;
            }
            basis = next;
            let diff = xj.checked_sub(xm).ok_or_else(overflow)?;
            if diff.is_zero() {
                return Err(Error::InvalidArgument(
                    "interpolation nodes must be distinct".into(),
                ));
            }
            denom = denom.checked_mul(&diff).ok_or_else(overflow)?;
        }
        let scale = yj.checked_div(&denom).ok_or_else(overflow)?;
        for (r, c) in result.iter_mut().zip(&basis) {
            let term = c.checked_mul(&scale).ok_or_else(overflow)?;
            *r = r.checked_add(&term).ok_or_else(overflow)?;
        }
    }
    Ok(result)
}

fn eval<I>(coeffs: &[Ratio<I>], x: &Ratio<I>) -> Result<Ratio<I>>
where
    I: Clone + Integer + CheckedAdd + CheckedMul,
{
    coeffs
        .iter()
        .rev()
        .try_fold(Ratio::zero(), |acc: Ratio<I>, c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or_else(overflow)
        })
}

fn brute_genus(a: i64, b: i64, d: i64) -> Result<i64> {
    let s = NumericalSemigroup::from_generators(&[a, b])?;
    Ok(quotient(&s, d)?.genus())
}

fn pairwise_coprime(a: i64, b: i64, d: i64) -> bool {
    gcd(a, b) == 1 && gcd(a, d) == 1 && gcd(b, d) == 1
}

/// `g(⟨a,b⟩/d) − (a−1)(b−1)/(2d)` with the genus taken by brute force.
pub fn cabd_value(a: i64, b: i64, d: i64) -> Result<Rational> {
    require_positive("d", d)?;
    let g = brute_genus(a, b, d)?;
    let base = Rational::new((a - 1) * (b - 1), 2 * d);
    Ok(Rational::from_integer(g) - base)
}

/// All pairwise-coprime `(a, b)` with `1 ≤ a, b ≤ max` in the given classes.
pub fn admissible_pairs_in_class(a_class: i64, b_class: i64, d: i64, max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in (1..=max).filter(|a| a.rem_euclid(d) == a_class.rem_euclid(d)) {
        for b in (1..=max).filter(|b| b.rem_euclid(d) == b_class.rem_euclid(d)) {
            if a != b && pairwise_coprime(a, b, d) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Checks that `g(⟨a,b⟩/d) − (a−1)(b−1)/(2d)` agrees on every sample and
/// returns the common value.
pub fn extract_cabd_constant(
    a_class: i64,
    b_class: i64,
    d: i64,
    samples: &[(i64, i64)],
) -> Result<Rational> {
    require_positive("d", d)?;
    if samples.len() < 2 {
        return Err(Error::InsufficientSamples {
            residue: a_class.rem_euclid(d),
            d,
            found: samples.len(),
            required: 2,
        });
    }
    let mut first: Option<((i64, i64), Rational)> = None;
    for &(a, b) in samples {
        if a < 1 || b < 1 || !pairwise_coprime(a, b, d) {
            return Err(Error::Precondition(format!(
                "sample ({a}, {b}) is not pairwise coprime with d = {d}"
            )));
        }
        if (a - a_class).rem_euclid(d) != 0 || (b - b_class).rem_euclid(d) != 0 {
            return Err(Error::Precondition(format!(
                "sample ({a}, {b}) is not in class ({a_class}, {b_class}) mod {d}"
            )));
        }
        let c = cabd_value(a, b, d)?;
        match &first {
            None => first = Some(((a, b), c)),
            Some((w, c0)) if *c0 != c => {
                return Err(Error::TheoremViolation(format!(
                    "C differs within class ({a_class}, {b_class}) mod {d}: \
                     {c0} at {w:?} but {c} at ({a}, {b})"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(first.expect("at least two samples").1)
}

/// Fits `a ↦ g(⟨a,a+k⟩/d)` on every residue class of `a` mod `d`.
///
/// Sample points are the `a` in `a_range` with `a ≥ 1` and `gcd(a, k) = 1`.
/// Classes with `gcd(r, d, k) > 1` contain no such `a` and are left out. Each
/// class is interpolated through its first three samples, the leading
/// coefficient is checked against `1/(2d)`, and every remaining sample must be
/// reproduced exactly. A class with fewer than [`FIT_MIN_SAMPLES`] samples is
/// an error.
pub fn fit_quasipolynomial(
    k: i64,
    d: i64,
    a_range: RangeInclusive<i64>,
) -> Result<QuasipolynomialFit> {
    require_positive("k", k)?;
    require_positive("d", d)?;
    let lo = (*a_range.start()).max(1);
    let hi = *a_range.end();
    let leading = Rational::new(1, 2 * d);
    let mut classes = Vec::new();

    // classes where every a shares a factor with k carry no samples
    for r in (0..d).filter(|&r| gcd(gcd(r, d), k) == 1) {
        let samples: Vec<i64> = (lo..=hi)
            .filter(|&a| a.rem_euclid(d) == r && gcd(a, k) == 1)
            .collect();
        if samples.len() < FIT_MIN_SAMPLES {
            return Err(Error::InsufficientSamples {
                residue: r,
                d,
                found: samples.len(),
                required: FIT_MIN_SAMPLES,
            });
        }
        let values = samples
            .iter()
            .map(|&a| brute_genus(a, a + k, d))
            .collect::<Result<Vec<_>>>()?;

        let xs: Vec<Rational> = samples[..3]
            .iter()
            .map(|&a| Rational::from_integer(a))
            .collect();
        let ys: Vec<Rational> = values[..3]
            .iter()
            .map(|&g| Rational::from_integer(g))
            .collect();
        let low_first = interpolate(&xs, &ys)?;
        let coefficients = [low_first[2], low_first[1], low_first[0]];
        if coefficients[0] != leading {
            return Err(Error::TheoremViolation(format!(
                "leading coefficient {} ≠ {leading} on class {r} mod {d} (k = {k})",
                coefficients[0]
            )));
        }
        for (&a, &g) in samples.iter().zip(&values).skip(3) {
            let predicted = eval(&low_first, &Rational::from_integer(a))?;
            if predicted != Rational::from_integer(g) {
                return Err(Error::TheoremViolation(format!(
                    "fit on class {r} mod {d} (k = {k}) predicts {predicted} at a = {a}, \
                     brute force gives {g}"
                )));
            }
        }

        let b_residue = (r + k).rem_euclid(d);
        let cabd_constant = if gcd(r, d) == 1 && gcd(b_residue, d) == 1 {
            let pairs: Vec<(i64, i64)> = samples.iter().map(|&a| (a, a + k)).collect();
            Some(extract_cabd_constant(r, b_residue, d, &pairs)?)
        } else {
            None
        };

        classes.push(ClassFit {
            residue: r,
            b_residue,
            coefficients,
            fitted_at: [samples[0], samples[1], samples[2]],
            held_out: samples.len() - 3,
            cabd_constant,
        });
    }
    Ok(QuasipolynomialFit { d, k, classes })
}
