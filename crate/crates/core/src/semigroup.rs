//! Canonical numerical semigroups and Apéry sets.
//!
//! A [`NumericalSemigroup`] is stored through its Apéry set with respect to the
//! multiplicity `m`: entry `r` is the smallest element congruent to `r` mod `m`.
//! Membership, gaps, Frobenius number and genus all fall out of that table, so
//! nothing ever sieves the whole interval `[0, F(S)]`.

use serde::Serialize;

use crate::arith::{self, gcd_all};
use crate::error::{Error, Result};

/// Upper bound on the number of gaps a semigroup may have before construction
/// is refused. The gap list is materialized, so this caps memory.
pub const MAX_GENUS: i64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    /// Ap(S, m) where m is the multiplicity.
    #[serde(skip)]
    apery: Vec<i64>,
}

/// Ap(S, n): the smallest element of S in every residue class mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    modulus: i64,
    elements: Vec<i64>,
}

impl AperySet {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Entry `r` is the least element of S congruent to `r` mod `n`.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Frobenius number and genus via Selmer's formulas:
    /// `F = max(Ap) - n` and `g = (sum(Ap) - n(n-1)/2) / n`.
    pub fn frobenius_and_genus(&self) -> Result<(i64, i64)> {
        invariants_from_apery(self)
    }
}

/// Selmer's formulas applied to an Apéry set.
///
/// The genus is computed as `(2·Σw − n(n−1)) / 2n`; a non-zero remainder means
/// the table is not an Apéry set of any numerical semigroup.
pub fn invariants_from_apery(ap: &AperySet) -> Result<(i64, i64)> {
    let n = ap.modulus;
    let max = *ap
        .elements
        .iter()
        .max()
        .ok_or_else(|| Error::InvariantViolation("empty Apéry set".into()))?;
    let frobenius = max - n;
    let mut sum = 0i64;
    for &w in &ap.elements {
        sum = arith::add(sum, w, "Apéry element sum")?;
    }
    let twice = arith::sub(
        arith::mul(2, sum, "Apéry element sum")?,
        arith::mul(n, n - 1, "Apéry modulus")?,
        "Selmer genus",
    )?;
    let genus = arith::exact_div(twice, 2 * n, "Selmer genus formula")?;
    Ok((frobenius, genus))
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`.
    ///
    /// Duplicates are dropped; the generator list may be in any order and may
    /// contain redundant elements. The gcd must be 1.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let gcd = gcd_all(&gens);
        if gcd != 1 {
            return Err(Error::NotNumericalSemigroup { gcd });
        }
        let m = gens[0];
        let apery = round_robin_apery(&gens, m)?;
        Self::from_multiplicity_apery(m, apery)
    }

    /// The semigroup ℕ.
    pub fn naturals() -> Self {
        Self {
            minimal_generators: vec![1],
            frobenius: -1,
            gaps: Vec::new(),
            apery: vec![0],
        }
    }

    /// Assembles a semigroup from `Ap(S, m)` with `m` the multiplicity.
    pub(crate) fn from_multiplicity_apery(m: i64, apery: Vec<i64>) -> Result<Self> {
        debug_assert_eq!(apery.len() as i64, m);
        debug_assert_eq!(apery[0], 0);
        if m == 1 {
            return Ok(Self::naturals());
        }

        let mut genus = 0i64;
        for (r, &w) in apery.iter().enumerate() {
            genus += (w - r as i64) / m;
        }
        if genus > MAX_GENUS {
            return Err(Error::TooLarge {
                genus,
                limit: MAX_GENUS,
            });
        }

        let mut gaps = Vec::with_capacity(genus as usize);
        for (r, &w) in apery.iter().enumerate().skip(1) {
            gaps.extend((r as i64..w).step_by(m as usize));
        }
        gaps.sort_unstable();
        let frobenius = gaps.last().copied().unwrap_or(-1);

        let mut s = Self {
            minimal_generators: Vec::new(),
            frobenius,
            gaps,
            apery,
        };
        s.minimal_generators = s.minimal_generators_from_apery();
        Ok(s)
    }

    /// An element of Ap(S, m) \ {0} is a minimal generator unless it splits as
    /// a sum of two nonzero elements, and both summands must then lie in the
    /// Apéry set too. Walking the table in increasing order, it is enough to
    /// test subtraction of the minimal generators already found.
    fn minimal_generators_from_apery(&self) -> Vec<i64> {
        let m = self.apery.len() as i64;
        let mut candidates: Vec<i64> = self.apery[1..].to_vec();
        candidates.sort_unstable();
        let mut found: Vec<i64> = Vec::new();
        for w in candidates {
            let decomposes = found.iter().any(|&g| w - g > 0 && self.contains(w - g));
            if !decomposes {
                found.push(w);
            }
        }
        let mut gens = Vec::with_capacity(found.len() + 1);
        gens.push(m);
        gens.extend(found);
        gens
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// `max(ℕ \ S)`, or `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius < 0
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.apery.len() as i64;
        x >= self.apery[(x % m) as usize]
    }

    /// Ap(S, m) for the multiplicity m, without recomputation.
    pub fn multiplicity_apery(&self) -> AperySet {
        AperySet {
            modulus: self.multiplicity(),
            elements: self.apery.clone(),
        }
    }

    /// Ap(S, n) for any nonzero `n ∈ S`.
    pub fn apery_set(&self, n: i64) -> Result<AperySet> {
        if n < 1 || !self.contains(n) {
            return Err(Error::AperyModulusNotInSemigroup(n));
        }
        if n == self.multiplicity() {
            return Ok(self.multiplicity_apery());
        }
        let elements = round_robin_apery(&self.minimal_generators, n)?;
        Ok(AperySet {
            modulus: n,
            elements,
        })
    }

    /// First gap `n > 0` with `d | n` whose mirror `F(S) − n` is not in S.
    pub fn d_symmetry_violation(&self, d: i64) -> Option<i64> {
        assert!(d >= 1, "d must be positive, got {d}");
        self.gaps
            .iter()
            .copied()
            .find(|&n| n % d == 0 && !self.contains(self.frobenius - n))
    }

    /// `n ∉ S ⇒ F(S) − n ∈ S` for every positive multiple `n` of `d`.
    ///
    /// Panics if `d < 1`.
    pub fn is_d_symmetric(&self, d: i64) -> bool {
        self.d_symmetry_violation(d).is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_d_symmetric(1)
    }

    /// Coefficients of `P_S(x) = 1 − (1 − x)·Σ_{n ∉ S} x^n`, lowest degree
    /// first. Degree is `F(S) + 1`; ℕ gives the constant polynomial 1.
    pub fn semigroup_polynomial_coeffs(&self) -> Vec<i64> {
        let len = (self.frobenius + 2).max(1) as usize;
        let mut coeffs = vec![0i64; len];
        coeffs[0] = 1;
        for &g in &self.gaps {
            coeffs[g as usize] -= 1;
            coeffs[g as usize + 1] += 1;
        }
        coeffs
    }
}

/// Per-residue minima of the semigroup generated by `gens`, modulo `n`.
///
/// Shortest paths on the residue cycle, one generator at a time: for each
/// generator `a` the residues split into `gcd(a, n)` cycles of step `a mod n`,
/// and a single walk around each cycle starting from its current minimum
/// settles every entry.
pub(crate) fn round_robin_apery(gens: &[i64], n: i64) -> Result<Vec<i64>> {
    let len = n as usize;
    let mut w = vec![i64::MAX; len];
    w[0] = 0;
    for &a in gens {
        let step = (a % n) as usize;
        if step == 0 {
            continue;
        }
        let cycles = arith::gcd(step as i64, n) as usize;
        let cycle_len = len / cycles;
        for start in 0..cycles {
            let mut best = start;
            let mut cur = start;
            for _ in 0..cycle_len {
                if w[cur] < w[best] {
                    best = cur;
                }
                cur = (cur + step) % len;
            }
            if w[best] == i64::MAX {
                continue;
            }
            let mut cur = best;
            for _ in 0..cycle_len {
                let next = (cur + step) % len;
                let cand = w[cur].checked_add(a).ok_or(Error::Overflow("Apéry set"))?;
                if cand < w[next] {
                    w[next] = cand;
                }
                cur = next;
            }
        }
    }
    if w.contains(&i64::MAX) {
        return Err(Error::InvariantViolation(format!(
            "generators do not reach every residue mod {n}"
        )));
    }
    Ok(w)
}
