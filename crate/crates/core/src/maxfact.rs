//! Greedy maximum-dimension factorisation (FMD) for any width `k`.
//!
//! The scan keeps `p`, the first unfactorised position, and looks for the new
//! factor (one not yet in `D`) that ends first, preferring the longest among
//! those ending at the same position. Everything between `p` and the chosen
//! factor is chunked into full `k`-blocks plus a remainder. Each chunk ends
//! before the chosen factor, so it is already in `D`; the final dimension
//! therefore equals the number of picks.

use std::collections::HashSet;

use crate::word::{FactorSet, Factorisation, Symbol, TokenString};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GreedyMaxTrace {
    /// 1-based `(t, j)` of every factor added to `D`, in scan order.
    pub picks: Vec<(usize, usize)>,
    /// 1-based `(start, end)` of every gap or tail chunk.
    pub fills: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct GreedyMax<'w> {
    pub factorisation: Factorisation<'w>,
    pub factors: FactorSet,
    pub trace: GreedyMaxTrace,
}

/// Runs the greedy scan in `O(k^2 n)` symbol comparisons (`O(kn)` set probes).
pub fn greedy_max_kfact(w: &TokenString, k: usize) -> GreedyMax<'_> {
    assert!(k >= 1, "width bound must be positive");
    let n = w.len();
    let mut seen: HashSet<&[Symbol]> = HashSet::new();
    let mut factors = FactorSet::default();
    let mut trace = GreedyMaxTrace::default();
    let mut lengths = Vec::new();

    let mut p = 1;
    let mut j = 1;
    while j <= n {
        let longest = (j + 1 - p).min(k);
        let pick = (1..=longest)
            .rev()
            .map(|len| j + 1 - len)
            .find(|&t| !seen.contains(w.substring(t, j)));
        if let Some(t) = pick {
            chunk(p, t - 1, k, &mut lengths, &mut trace.fills);
            let factor = w.substring(t, j);
            seen.insert(factor);
            factors.insert_traced(factor, (t, j));
            trace.picks.push((t, j));
            lengths.push(j + 1 - t);
            p = j + 1;
        }
        j += 1;
    }
    chunk(p, n, k, &mut lengths, &mut trace.fills);

    GreedyMax {
        factorisation: Factorisation::from_lengths(w, lengths),
        factors,
        trace,
    }
}

/// Splits `start..=end` into length-`k` chunks followed by one shorter remainder.
fn chunk(
    start: usize,
    end: usize,
    k: usize,
    lengths: &mut Vec<usize>,
    fills: &mut Vec<(usize, usize)>,
) {
    let mut s = start;
    while s <= end {
        let e = (s + k - 1).min(end);
        lengths.push(e + 1 - s);
        fills.push((s, e));
        s = e + 1;
    }
}

/// First `k`-factor occurrence outside `D` that no pick ends within.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndsWithinFailure {
    pub start: usize,
    pub end: usize,
}

/// Checks that every occurrence `w[i:j]` of length at most `k` whose string is
/// not among the picks contains the end position of some pick.
pub fn check_ends_within(
    w: &TokenString,
    k: usize,
    trace: &GreedyMaxTrace,
) -> Result<(), EndsWithinFailure> {
    let n = w.len();
    let picked: HashSet<&[Symbol]> = trace
        .picks
        .iter()
        .map(|&(t, j)| w.substring(t, j))
        .collect();
    // ends_before[x] = number of pick ends at positions < x
    let mut ends_before = vec![0usize; n + 2];
    for &(_, j) in &trace.picks {
        ends_before[j + 1] += 1;
    }
    for x in 1..ends_before.len() {
        ends_before[x] += ends_before[x - 1];
    }
    for j in 1..=n {
        for i in j.saturating_sub(k - 1).max(1)..=j {
            if picked.contains(w.substring(i, j)) {
                continue;
            }
            if ends_before[j + 1] == ends_before[i] {
                return Err(EndsWithinFailure { start: i, end: j });
            }
        }
    }
    Ok(())
}
