//! Dynamic programme over (prefix length, factor set).
//!
//! `T[i, X]` holds when some `k`-factorisation of `w[1:i]` uses exactly the
//! factor set `X`. Only the feasible sets are stored: position `i + len` gains
//! `X ∪ {w[i+1 : i+len]}` for every feasible `X` at `i`, starting from
//! `T[0, ∅]`. The answer is the largest feasible set at `n`, and a witness is
//! recovered by walking the same transitions backwards.

use std::collections::HashSet;

use super::KFactorUniverse;
use crate::error::ExactError;
use crate::word::{Factorisation, Symbol, TokenString};

pub const DEFAULT_MASK_BITS: u32 = 24;

/// Feasible factor sets for the prefix of length `position`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpState {
    pub position: usize,
    /// Bitmasks over the universe order, ascending.
    pub feasible: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct DpResult {
    pub optimum: usize,
    pub cuts: Vec<usize>,
    /// The optimal factor set `X*`.
    pub mask: u64,
    pub universe: KFactorUniverse,
}

impl DpResult {
    pub fn witness<'w>(&self, w: &'w TokenString) -> Factorisation<'w> {
        Factorisation::from_cuts(w, self.cuts.clone())
    }

    /// Members of `X*` in universe order.
    pub fn factor_set(&self) -> Vec<&[Symbol]> {
        self.universe
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, f)| f.as_slice())
            .collect()
    }
}

/// Computes every `T[i, ·]` frontier. Refuses when the universe has more than
/// `mask_bits` factors (capped at 64).
pub fn feasible_sets(
    w: &TokenString,
    k: usize,
    mask_bits: u32,
) -> Result<(KFactorUniverse, Vec<DpState>), ExactError> {
    if k == 0 {
        return Err(ExactError::ZeroWidth);
    }
    let universe = KFactorUniverse::new(w, k);
    let budget = mask_bits.min(64);
    if universe.len() > budget as usize {
        return Err(ExactError::UniverseTooLarge {
            universe: universe.len(),
            budget,
        });
    }
    let ids = universe.occurrence_ids(w, k);
    let n = w.len();
    let mut frontiers: Vec<HashSet<u64>> = vec![HashSet::new(); n + 1];
    frontiers[0].insert(0);
    for i in 0..n {
        let current: Vec<u64> = frontiers[i].iter().copied().collect();
        for (len, &id) in (1..).zip(&ids[i]) {
            let next = &mut frontiers[i + len];
            next.extend(current.iter().map(|x| x | 1 << id));
        }
    }
    let states = frontiers
        .into_iter()
        .enumerate()
        .map(|(position, set)| {
            let mut feasible: Vec<u64> = set.into_iter().collect();
            feasible.sort_unstable();
            DpState { position, feasible }
        })
        .collect();
    Ok((universe, states))
}

/// Exact maximum dimension via the factor-set DP.
pub fn exact_max_dp(w: &TokenString, k: usize, mask_bits: u32) -> Result<DpResult, ExactError> {
    let (universe, states) = feasible_sets(w, k, mask_bits)?;
    let n = w.len();
    // largest set, smallest mask among ties
    let mask = states[n]
        .feasible
        .iter()
        .copied()
        .max_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(b.cmp(a)))
        .expect("T[n, D(F)] holds for some F");

    let ids = universe.occurrence_ids(w, k);
    let mut cuts = Vec::new();
    let (mut pos, mut x) = (n, mask);
    while pos > 0 {
        cuts.push(pos);
        let (len, prev) = (1..=k.min(pos))
            .find_map(|len| {
                let bit = 1u64 << ids[pos - len][len - 1];
                if x & bit == 0 {
                    return None;
                }
                let feasible = &states[pos - len].feasible;
                [x, x & !bit]
                    .into_iter()
                    .find(|y| feasible.binary_search(y).is_ok())
                    .map(|y| (len, y))
            })
            .expect("every feasible state has a feasible predecessor");
        pos -= len;
        x = prev;
    }
    debug_assert_eq!(x, 0);
    cuts.reverse();
    Ok(DpResult {
        optimum: mask.count_ones() as usize,
        cuts,
        mask,
        universe,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Format;

    fn plain(s: &str) -> TokenString {
        TokenString::parse(s.as_bytes(), Format::Plain).unwrap()
    }

    #[test]
    fn aababa_optimum_set() {
        let w = plain("aababa");
        let r = exact_max_dp(&w, 2, DEFAULT_MASK_BITS).unwrap();
        assert_eq!(r.optimum, 4);
        let names: Vec<String> = r
            .factor_set()
            .iter()
            .map(|f| w.render_factor(f, Format::Plain))
            .collect();
        assert_eq!(names, ["a", "b", "aa", "ab"]);
        let f = r.witness(&w);
        assert!(f.validate(2).is_ok());
        assert_eq!(f.render(Format::Plain), "aa|b|ab|a");
    }

    #[test]
    fn single_symbol_word() {
        let w = plain("aa");
        let r = exact_max_dp(&w, 2, DEFAULT_MASK_BITS).unwrap();
        assert_eq!(r.optimum, 1);
    }

    #[test]
    fn first_frontier_is_single_symbol() {
        let w = plain("abc");
        let (_, states) = feasible_sets(&w, 2, DEFAULT_MASK_BITS).unwrap();
        assert_eq!(states[0].feasible, vec![0]);
        assert_eq!(states[1].feasible, vec![1]);
    }

    #[test]
    fn refuses_large_universe() {
        let w = plain("abcdefghij");
        let err = exact_max_dp(&w, 3, 8).unwrap_err();
        assert_eq!(
            err,
            ExactError::UniverseTooLarge {
                universe: 27,
                budget: 8
            }
        );
    }

    #[test]
    fn empty_word() {
        let w = plain("");
        let r = exact_max_dp(&w, 2, DEFAULT_MASK_BITS).unwrap();
        assert_eq!((r.optimum, r.mask), (0, 0));
        assert!(r.cuts.is_empty());
    }
}
