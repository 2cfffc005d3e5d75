//! Genus of `S/d` from values of the Hilbert series at `d`-th roots of unity.
//!
//! With `A_i` the number of gaps of S in residue class `i` mod `d`,
//!
//! ```text
//! g(S/d) = A_0 = (1/d)·[ g(S) + (d−1)/2 − Σ_{i=1}^{d−1} H_S(ζ_d^i) ]
//! ```
//!
//! `H_S` diverges on the unit circle as a series, so it is evaluated as
//! `P_S(x)/(1 − x)` with `P_S` the semigroup polynomial.
//!
//! Floating routines are generic over [`num_traits::Float`]; `f64` is the
//! working precision everywhere in this crate.

mod closed_form;
mod quasipoly;

pub use closed_form::{
    genus_quotient_ed2_closed_form, genus_quotient_ed2_raw, sylvester_invariants,
};
pub use quasipoly::{
    admissible_pairs_in_class, cabd_value, extract_cabd_constant, fit_quasipolynomial, interpolate,
    ClassFit, QuasipolynomialFit, FIT_MIN_SAMPLES,
};

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::arith::require_positive;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Rounding tolerance for the floating genus formula.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Tolerance for identities that hold to machine precision.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

/// `H_S(ζ_d^index)` for one root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootEvaluation<T> {
    pub d: i64,
    pub index: i64,
    pub value: Complex<T>,
}

/// Result of the floating genus formula before and after rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootGenus<T> {
    pub genus: i64,
    /// Distance of the unrounded value from `genus`, folding in any leftover
    /// imaginary part.
    pub residual: T,
}

fn cast<T: Float>(x: i64) -> T {
    T::from(x).expect("i64 is representable in any Float type")
}

/// `ζ_d^i = exp(2πi·i/d)`, with the exponent reduced mod `d` first.
pub fn root_of_unity<T: Float + FloatConst>(d: i64, i: i64) -> Complex<T> {
    let k = i.rem_euclid(d);
    let angle = T::TAU() * cast::<T>(k) / cast::<T>(d);
    Complex::new(angle.cos(), angle.sin())
}

/// Horner evaluation of an integer polynomial given lowest degree first.
pub fn eval_integer_poly<T: Float>(coeffs: &[i64], x: Complex<T>) -> Complex<T> {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(T::zero(), T::zero()), |acc, &c| {
            acc * x + Complex::new(cast::<T>(c), T::zero())
        })
}

pub fn hilbert_at_root<T: Float + FloatConst>(
    s: &NumericalSemigroup,
    d: i64,
    index: i64,
) -> Result<Complex<T>> {
    hilbert_at_root_from_coeffs(&s.semigroup_polynomial_coeffs(), d, index)
}

fn hilbert_at_root_from_coeffs<T: Float + FloatConst>(
    coeffs: &[i64],
    d: i64,
    index: i64,
) -> Result<Complex<T>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "roots of unity need d ≥ 2, got {d}"
        )));
    }
    if index.rem_euclid(d) == 0 {
        return Err(Error::Pole { d, index });
    }
    let z = root_of_unity::<T>(d, index);
    let one = Complex::new(T::one(), T::zero());
    Ok(eval_integer_poly(coeffs, z) / (one - z))
}

/// `H_S(ζ_d^i)` for `i = 1, …, d−1`.
pub fn hilbert_at_roots<T: Float + FloatConst>(
    s: &NumericalSemigroup,
    d: i64,
) -> Result<Vec<RootEvaluation<T>>> {
    let coeffs = s.semigroup_polynomial_coeffs();
    (1..d)
        .map(|index| {
            Ok(RootEvaluation {
                d,
                index,
                value: hilbert_at_root_from_coeffs(&coeffs, d, index)?,
            })
        })
        .collect()
}

/// Deviation of `Σ_{n=1}^{d−1} 1/(1 − ζ_d^n)` from `(d−1)/2`: the larger of
/// the real-part error and the absolute imaginary part.
pub fn root_of_unity_identity_check<T: Float + FloatConst>(d: i64) -> T {
    assert!(d >= 2, "identity check needs d ≥ 2, got {d}");
    let one = Complex::new(T::one(), T::zero());
    let sum = (1..d).fold(Complex::new(T::zero(), T::zero()), |acc, n| {
        acc + one / (one - root_of_unity::<T>(d, n))
    });
    let expected = cast::<T>(d - 1) / cast::<T>(2);
    (sum.re - expected).abs().max(sum.im.abs())
}

/// Floating evaluation of the roots-of-unity genus formula at a caller-chosen
/// precision and tolerance.
pub fn genus_quotient_via_roots_with<T: Float + FloatConst>(
    s: &NumericalSemigroup,
    d: i64,
    tolerance: T,
) -> Result<RootGenus<T>> {
    require_positive("d", d)?;
    if d == 1 {
        return Ok(RootGenus {
            genus: s.genus(),
            residual: T::zero(),
        });
    }
    let sum = hilbert_at_roots::<T>(s, d)?
        .into_iter()
        .fold(Complex::new(T::zero(), T::zero()), |acc, e| acc + e.value);
    let half_d_minus_one = cast::<T>(d - 1) / cast::<T>(2);
    let value = (cast::<T>(s.genus()) + half_d_minus_one - sum.re) / cast::<T>(d);
    let rounded = value.round();
    let residual = (value - rounded).abs().max((sum.im / cast::<T>(d)).abs());
    if residual.is_nan() || residual >= tolerance {
        return Err(Error::NumericalFailure {
            d,
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(RootGenus {
        genus: rounded.to_i64().ok_or(Error::Overflow("rounded genus"))?,
        residual,
    })
}

/// `g(S/d)` through the roots-of-unity formula in `f64` with
/// [`ROUNDING_TOLERANCE`].
pub fn genus_quotient_via_roots(s: &NumericalSemigroup, d: i64) -> Result<i64> {
    genus_quotient_via_roots_with::<f64>(s, d, ROUNDING_TOLERANCE).map(|r| r.genus)
}
