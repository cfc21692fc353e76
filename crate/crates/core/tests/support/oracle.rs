//! Slow reference implementations over raw symbol slices. Nothing here calls
//! into the crate's solvers.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

/// Every cut sequence of a length-`n` word into pieces of length at most `k`.
pub fn all_cuts(n: usize, k: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=k.min(n) {
        for rest in all_cuts(n - first, k) {
            let mut cuts = vec![first];
            cuts.extend(rest.into_iter().map(|c| c + first));
            out.push(cuts);
        }
    }
    out
}

pub fn pieces<'a>(word: &'a [u32], cuts: &[usize]) -> Vec<&'a [u32]> {
    let mut prev = 0;
    cuts.iter()
        .map(|&c| {
            let piece = &word[prev..c];
            prev = c;
            piece
        })
        .collect()
}

pub fn dimension(word: &[u32], cuts: &[usize]) -> usize {
    pieces(word, cuts).into_iter().collect::<HashSet<_>>().len()
}

pub fn optimum(word: &[u32], k: usize, maximise: bool) -> usize {
    let dims = all_cuts(word.len(), k)
        .into_iter()
        .map(|c| dimension(word, &c));
    if maximise {
        dims.max().unwrap()
    } else {
        dims.min().unwrap()
    }
}

/// Good 2-factors tested literally: some 2-factorisation in which no factor
/// other than `ab` contains `a` or `b`.
pub fn good_by_definition(word: &[u32]) -> BTreeSet<(u32, u32)> {
    let candidates: BTreeSet<(u32, u32)> = word.windows(2).map(|p| (p[0], p[1])).collect();
    let factorisations = all_cuts(word.len(), 2);
    candidates
        .into_iter()
        .filter(|&(a, b)| {
            factorisations.iter().any(|cuts| {
                pieces(word, cuts)
                    .into_iter()
                    .all(|f| f == [a, b] || !(f.contains(&a) || f.contains(&b)))
            })
        })
        .collect()
}

/// Every length-<=k occurrence whose string is not picked must contain the
/// end of a pick. Picks are 1-based `(t, j)`.
pub fn ends_within_holds(word: &[u32], k: usize, picks: &[(usize, usize)]) -> bool {
    let picked: HashSet<&[u32]> = picks.iter().map(|&(t, j)| &word[t - 1..j]).collect();
    for i in 1..=word.len() {
        for j in i..(i + k).min(word.len() + 1) {
            if picked.contains(&word[i - 1..j]) {
                continue;
            }
            if !picks.iter().any(|&(_, e)| i <= e && e <= j) {
                return false;
            }
        }
    }
    true
}

/// All words of length `n` over `0..sigma`.
pub fn all_words(sigma: u32, n: usize) -> Vec<Vec<u32>> {
    let mut words = vec![vec![]];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..sigma).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    words
}

/// Whether some `l`-subset of the triples is pairwise disjoint in every coordinate.
pub fn has_perfect_matching(l: usize, triples: &[[usize; 3]]) -> bool {
    let t = triples.len();
    (0u32..1 << t).any(|mask| {
        if mask.count_ones() as usize != l {
            return false;
        }
        let chosen: Vec<&[usize; 3]> = (0..t)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &triples[i])
            .collect();
        (0..3).all(|c| chosen.iter().map(|tr| tr[c]).collect::<HashSet<_>>().len() == l)
    })
}
