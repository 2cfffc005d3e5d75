/// Representability sieve: `out[x]` says whether `x` is a nonnegative
/// combination of `gens`. Independent of the Apéry machinery.
pub(crate) fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut out = vec![false; limit as usize + 1];
    out[0] = true;
    for x in 1..=limit {
        out[x as usize] = gens.iter().any(|&g| g <= x && out[(x - g) as usize]);
    }
    out
}
