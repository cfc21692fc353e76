//! Minimum-dimension factorisation (FmD) for width 2.
//!
//! A 2-factor `ab` is *good* when some 2-factorisation covers every occurrence
//! of `a` and of `b` with copies of `ab`. For `a != b` that holds exactly when
//! every `a` is immediately followed by `b` and every `b` is immediately
//! preceded by `a`; for `aa` it holds when every maximal run of `a` has even
//! length. The remaining positions can always be filled with singletons.

use std::collections::{HashMap, HashSet};

use crate::word::{Factorisation, Symbol, TokenString};

/// A good 2-factor together with the disjoint occurrences that cover its symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFactor {
    pub first: Symbol,
    pub second: Symbol,
    /// 1-based start positions, increasing and pairwise non-overlapping.
    pub occurrences: Vec<usize>,
}

impl GoodFactor {
    pub fn symbols(&self) -> [Symbol; 2] {
        [self.first, self.second]
    }

    pub fn shares_symbol_with(&self, other: &GoodFactor) -> bool {
        self.symbols().iter().any(|s| other.symbols().contains(s))
    }

    fn is_square(&self) -> bool {
        self.first == self.second
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyMinStats {
    /// Distinct symbols of the word.
    pub m: usize,
    /// Symbols covered by good factors `ab` with `a != b` in the initial `A(w)`.
    pub m_good: usize,
    /// Good factors merged, in the order they were chosen.
    pub chosen: Vec<GoodFactor>,
    /// Dimension of the returned factorisation.
    pub d: usize,
}

impl GreedyMinStats {
    /// `d = m - #{chosen ab : a != b}`: merging `ab` retires two singletons and
    /// adds one factor, merging `aa` swaps `a` for `aa`.
    pub fn dimension_identity_holds(&self) -> bool {
        let merged = self.chosen.iter().filter(|g| !g.is_square()).count();
        self.d + merged == self.m
    }

    /// `d <= m - m_good / 4`, kept in integers.
    pub fn ratio_bound_holds(&self) -> bool {
        4 * self.d + self.m_good <= 4 * self.m
    }
}

/// The set `A(w)` of good 2-factors, ordered by first occurrence in `w`.
pub fn good_factors(w: &TokenString) -> Vec<GoodFactor> {
    let data = w.symbols();
    let mut occ: HashMap<Symbol, usize> = HashMap::new();
    for &s in data {
        *occ.entry(s).or_default() += 1;
    }

    // (count, first start) of each adjacent pair of distinct symbols
    let mut pairs: HashMap<(Symbol, Symbol), (usize, usize)> = HashMap::new();
    for (i, win) in data.windows(2).enumerate() {
        if win[0] != win[1] {
            let e = pairs.entry((win[0], win[1])).or_insert((0, i + 1));
            e.0 += 1;
        }
    }

    let mut found: Vec<(usize, GoodFactor)> = Vec::new();
    for (&(a, b), &(count, first)) in &pairs {
        if count == occ[&a] && count == occ[&b] {
            let occurrences = data
                .windows(2)
                .enumerate()
                .filter(|(_, win)| win[0] == a && win[1] == b)
                .map(|(i, _)| i + 1)
                .collect();
            found.push((
                first,
                GoodFactor {
                    first: a,
                    second: b,
                    occurrences,
                },
            ));
        }
    }

    // squares: every maximal run of the symbol must have even length
    let mut runs: HashMap<Symbol, (bool, Vec<usize>)> = HashMap::new();
    let mut i = 0;
    while i < data.len() {
        let s = data[i];
        let mut j = i;
        while j < data.len() && data[j] == s {
            j += 1;
        }
        let entry = runs.entry(s).or_insert((true, Vec::new()));
        let len = j - i;
        entry.0 &= len % 2 == 0;
        entry.1.extend((i..j).step_by(2).map(|p| p + 1));
        i = j;
    }
    for (s, (all_even, occurrences)) in runs {
        if all_even {
            found.push((
                occurrences[0],
                GoodFactor {
                    first: s,
                    second: s,
                    occurrences,
                },
            ));
        }
    }

    found.sort_by_key(|(first, _)| *first);
    found.into_iter().map(|(_, g)| g).collect()
}

/// Greedy 2-factorisation for FmD. Starts from singletons and merges good
/// factors in order of first occurrence, discarding every good factor that
/// shares a symbol with one already merged.
pub fn greedy_min_2fact(w: &TokenString) -> (Factorisation<'_>, GreedyMinStats) {
    let candidates = good_factors(w);
    let m = w.distinct_symbols();
    let m_good = candidates
        .iter()
        .filter(|g| !g.is_square())
        .flat_map(|g| g.symbols())
        .collect::<HashSet<_>>()
        .len();

    // pair_start[i] marks that positions i+1, i+2 (1-based) form one factor
    let mut pair_start = vec![false; w.len()];
    let mut retired: HashSet<Symbol> = HashSet::new();
    let mut chosen = Vec::new();
    for good in candidates {
        if good.symbols().iter().any(|s| retired.contains(s)) {
            continue;
        }
        for &i in &good.occurrences {
            pair_start[i - 1] = true;
        }
        retired.extend(good.symbols());
        chosen.push(good);
    }

    let mut cuts = Vec::with_capacity(w.len());
    let mut pos = 0;
    while pos < w.len() {
        pos += if pair_start[pos] { 2 } else { 1 };
        cuts.push(pos);
    }
    let f = Factorisation::from_cuts(w, cuts);
    let d = f.dimension();
    (
        f,
        GreedyMinStats {
            m,
            m_good,
            chosen,
            d,
        },
    )
}

/// All singletons: dimension `m`, a `k`-approximation for FmD at any width `k`.
pub fn singleton_baseline(w: &TokenString, k: usize) -> Factorisation<'_> {
    assert!(k >= 1, "width bound must be positive");
    Factorisation::singletons(w)
}
