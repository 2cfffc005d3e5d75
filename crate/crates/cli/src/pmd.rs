//! Solution sets of `ax mod b ≤ cx`.

use anyhow::{bail, ensure};
use nsg_core::NumericalSemigroup;
use serde::Serialize;

pub const DEFAULT_WINDOW: i64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PmdReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Everything scanned, `0..=scanned`.
    pub scanned: i64,
    pub semigroup: NumericalSemigroup,
}

fn satisfies(a: i64, b: i64, c: i64, x: i64) -> bool {
    let r = (a as i128 * x as i128).rem_euclid(b as i128);
    r <= c as i128 * x as i128
}

/// Brute-forces `{x ≥ 0 : ax mod b ≤ cx}`.
///
/// The predicate only gets easier as `x` grows by `b`, so `b` consecutive
/// members mean every larger `x` is a member too. Scanning stops there; if
/// that does not happen by `window` the call fails.
pub fn solve(a: i64, b: i64, c: i64, window: i64) -> anyhow::Result<PmdReport> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        ensure!(v > 0, "{name} must be positive, got {v}");
    }
    ensure!(window > 0, "window must be positive, got {window}");

    let mut member = Vec::new();
    let mut run = 0i64;
    let mut x = 0i64;
    while run < b {
        if x > window {
            bail!(
                "no run of {b} consecutive solutions up to {window}; \
                 try a larger --window"
            );
        }
        let m = satisfies(a, b, c, x);
        member.push(m);
        run = if m { run + 1 } else { 0 };
        x += 1;
    }
    let scanned = x - 1;
    let conductor = x - b;

    // Closure on the window: no gap is a sum of two members.
    for h in (1..conductor).filter(|&h| !member[h as usize]) {
        if let Some(y) = (1..=h / 2).find(|&y| member[y as usize] && member[(h - y) as usize]) {
            bail!(
                "solution set is not closed: {y} + {} = {h} is missing",
                h - y
            );
        }
    }

    let gens: Vec<i64> = if conductor == 0 {
        vec![1]
    } else {
        (1..=2 * conductor)
            .filter(|&y| y > scanned || member[y as usize])
            .collect()
    };
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    let expected_gaps: Vec<i64> = (0..conductor).filter(|&h| !member[h as usize]).collect();
    ensure!(
        semigroup.gaps() == expected_gaps.as_slice(),
        "generated semigroup disagrees with the solution set"
    );
    Ok(PmdReport {
        a,
        b,
        c,
        scanned,
        semigroup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = solve(3, 7, 1, DEFAULT_WINDOW).unwrap();
        assert_eq!(r.semigroup.minimal_generators(), &[3, 5, 7]);
        assert_eq!((r.semigroup.frobenius(), r.semigroup.genus()), (4, 3));

        let r = solve(2, 5, 1, DEFAULT_WINDOW).unwrap();
        assert_eq!(r.semigroup.gaps(), &[1, 2]);
    }

    #[test]
    fn c_at_least_a_gives_naturals() {
        for (a, b, c) in [(3, 7, 3), (2, 9, 5), (1, 1, 1)] {
            assert!(solve(a, b, c, DEFAULT_WINDOW)
                .unwrap()
                .semigroup
                .is_naturals());
        }
    }

    #[test]
    fn matches_predicate_on_a_grid() {
        for a in 1..12 {
            for b in 1..12 {
                for c in 1..4 {
                    let s = solve(a, b, c, DEFAULT_WINDOW).unwrap().semigroup;
                    for x in 0..200 {
                        assert_eq!(s.contains(x), satisfies(a, b, c, x), "({a},{b},{c}) at {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_window_and_bad_input() {
        assert!(solve(3, 7, 1, 3)
            .unwrap_err()
            .to_string()
            .contains("--window"));
        assert!(solve(0, 7, 1, 100).is_err());
    }
}
