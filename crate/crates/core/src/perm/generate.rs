//! Two independent generators for avoidance classes.
//!
//! [`avoiders_filter`] is the brute-force oracle: it walks all `n!`
//! permutations and keeps the avoiders. [`avoiders_pruned`] builds
//! permutations left to right and abandons a prefix as soon as it contains a
//! pattern, which is sound because appending entries on the right preserves
//! every existing occurrence, glued junctions included. Both return the same
//! list in lexicographic order.

use super::pattern::occurrences;
use super::{Pattern, PermError, Permutation};

/// Default size cap for the brute-force oracle (n! blowup).
pub const DEFAULT_ORACLE_BOUND: usize = 9;

/// All permutations of size `n` avoiding every pattern in `pats`, by
/// exhaustive filtering, in lexicographic order.
pub fn avoiders_filter(n: usize, pats: &[Pattern]) -> Result<Vec<Permutation>, PermError> {
    avoiders_filter_bounded(n, pats, DEFAULT_ORACLE_BOUND)
}

/// [`avoiders_filter`] with an explicit size cap.
pub fn avoiders_filter_bounded(
    n: usize,
    pats: &[Pattern],
    bound: usize,
) -> Result<Vec<Permutation>, PermError> {
    if n > bound {
        return Err(PermError::OracleBoundExceeded { n, bound });
    }
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    let mut current: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        let p = Permutation::from_vec_unchecked(current.clone());
        if p.avoids_all(pats) {
            out.push(p);
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(out)
}

/// Steps `v` to its lexicographic successor; false once `v` is the last
/// (decreasing) arrangement.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of size `n` avoiding every pattern in `pats`, by
/// backtracking with pruning, in lexicographic order. Agrees with
/// [`avoiders_filter`] item for item.
pub fn avoiders_pruned(n: usize, pats: &[Pattern]) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend(n, pats, &mut prefix, &mut used, &mut out);
    out
}

fn extend(
    n: usize,
    pats: &[Pattern],
    prefix: &mut Vec<u32>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n {
        out.push(Permutation::from_vec_unchecked(prefix.clone()));
        return;
    }
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        prefix.push(v);
        used[v as usize] = true;
        // Only occurrences ending at the new entry can be new; shorter
        // prefixes were checked at earlier depths.
        if !pats.iter().any(|p| occurrences(prefix, p, true, true) > 0) {
            extend(n, pats, prefix, used, out);
        }
        used[v as usize] = false;
        prefix.pop();
    }
}
