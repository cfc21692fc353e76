//! Exact solvers: exhaustive enumeration, the subset DP over factor sets, and
//! a branch-and-bound search for maximum dimension.

mod bb;
mod brute;
mod dp;

use std::collections::HashMap;

use crate::word::{Symbol, TokenString};

pub use bb::{exact_max_bb, BbOptions, BbResult, DEFAULT_NODE_BUDGET};
pub use brute::{brute_force, BruteForceResult, DEFAULT_FACTORISATION_BUDGET};
pub use dp::{exact_max_dp, feasible_sets, DpResult, DpState, DEFAULT_MASK_BITS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    fn improves(self, candidate: usize, best: usize) -> bool {
        match self {
            Objective::Min => candidate < best,
            Objective::Max => candidate > best,
        }
    }
}

/// Number of `k`-factorisations of a word of length `n`:
/// `T(0) = 1`, `T(m) = T(m-1) + ... + T(m-k)`. Saturates at `u128::MAX`.
pub fn count_factorisations(n: usize, k: usize) -> u128 {
    let mut t = vec![0u128; n + 1];
    t[0] = 1;
    for m in 1..=n {
        t[m] = (1..=k.min(m)).fold(0u128, |acc, j| acc.saturating_add(t[m - j]));
    }
    t[n]
}

/// Every distinct factor of length at most `k`, ordered by length and then by
/// symbol ids. A factor's position in this order is its bit in a set mask.
#[derive(Clone, Debug)]
pub struct KFactorUniverse {
    factors: Vec<Vec<Symbol>>,
    index: HashMap<Vec<Symbol>, usize>,
}

impl KFactorUniverse {
    pub fn new(w: &TokenString, k: usize) -> Self {
        let data = w.symbols();
        let mut factors: Vec<Vec<Symbol>> = (1..=k.min(data.len()))
            .flat_map(|len| data.windows(len).map(<[Symbol]>::to_vec))
            .collect();
        factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        factors.dedup();
        let index = factors
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        KFactorUniverse { factors, index }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Vec<Symbol>] {
        &self.factors
    }

    pub fn index_of(&self, factor: &[Symbol]) -> Option<usize> {
        self.index.get(factor).copied()
    }

    /// Table `ids[start][len - 1]` of the universe index of `w[start+1 : start+len]`
    /// (0-based `start`), for every occurrence that fits in the word.
    pub(crate) fn occurrence_ids(&self, w: &TokenString, k: usize) -> Vec<Vec<usize>> {
        let data = w.symbols();
        (0..data.len())
            .map(|s| {
                (1..=k.min(data.len() - s))
                    .map(|len| self.index[&data[s..s + len]])
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Format;

    #[test]
    fn n_step_fibonacci_values() {
        assert_eq!(count_factorisations(0, 3), 1);
        assert_eq!(count_factorisations(3, 3), 4);
        assert_eq!(count_factorisations(10, 2), 89);
        assert_eq!(count_factorisations(16, 3), 10609);
        assert_eq!(count_factorisations(22, 3), 410744);
        assert_eq!(count_factorisations(5, 1), 1);
    }

    #[test]
    fn universe_order() {
        let w = TokenString::parse(b"aababa", Format::Plain).unwrap();
        let u = KFactorUniverse::new(&w, 2);
        assert_eq!(
            u.factors(),
            &[vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0]]
        );
        assert_eq!(u.index_of(&[0, 1]), Some(3));
        assert!(u.len() <= 2 + 4);
    }
}
