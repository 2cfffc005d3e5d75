//! Checked integer helpers shared by the formula modules.

use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| acc.gcd(&v))
}

/// Inverse of `a` modulo `m` in `[0, m)`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m < 1 {
        return None;
    }
    let ext = a.rem_euclid(m).extended_gcd(&m);
    (ext.gcd == 1).then(|| ext.x.rem_euclid(m))
}

/// Exact division that reports a non-zero remainder as an invariant violation.
pub(crate) fn exact_div(num: i64, den: i64, context: &str) -> Result<i64> {
    let (q, r) = num.div_rem(&den);
    if r != 0 {
        return Err(Error::InvariantViolation(format!(
            "{context}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

pub(crate) fn require_positive(name: &str, value: i64) -> Result<()> {
    if value < 1 {
        return Err(Error::InvalidArgument(format!(
            "{name} must be positive, got {value}"
        )));
    }
    Ok(())
}
