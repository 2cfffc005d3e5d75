//! Numerical semigroups, their quotients `S/d`, and closed forms for the
//! invariants of those quotients.
//!
//! * [`semigroup`]: canonical [`NumericalSemigroup`]s and Apéry sets, the
//!   brute-force machinery every formula is checked against.
//! * [`quotient`]: exact construction of `S/d`, gap counts per residue class,
//!   and the Frobenius number of `S/d` for `d`-symmetric `S`.
//! * [`roots`]: the genus of `S/d` from Hilbert-series values at roots of
//!   unity, Sylvester's formulas, the floor-sum closed form for two
//!   generators, and the quasipolynomial structure in `a` of `g(⟨a,a+k⟩/d)`.
//! * [`progressions`]: quotients of semigroups generated by arithmetic
//!   progressions.
//! * [`report`]: one-stop evaluation of all applicable formulas for `(S, d)`.
//!
//! Semigroup arithmetic is exact in `i64` with overflow reported as an error.
//! Floating routines are generic over [`num_traits::Float`] and rational ones
//! over [`num_rational::Ratio`]; the aliases below fix the working types.

mod arith;
pub mod error;
pub mod progressions;
pub mod quotient;
pub mod report;
pub mod roots;
pub mod semigroup;

#[cfg(test)]
pub(crate) mod testutil;

pub use arith::{gcd, gcd_all, mod_inverse};
pub use error::{Error, Result};
pub use quotient::{
    frobenius_quotient_dsymmetric, frobenius_residue_witness, gap_class_counts, quotient,
    GapClassCounts,
};
pub use report::{FormulaCheck, Prediction, QuotientReport};
pub use semigroup::{invariants_from_apery, AperySet, NumericalSemigroup};

/// Exact rational used by the quasipolynomial fits.
pub type Rational = num_rational::Ratio<i64>;

/// Working complex type for roots-of-unity evaluation.
pub type Complex64 = num_complex::Complex<f64>;

/// [`roots::RootEvaluation`] at working precision.
pub type RootEvaluation64 = roots::RootEvaluation<f64>;
