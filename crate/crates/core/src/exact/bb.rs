//! Depth-first search over cut positions for maximum dimension.
//!
//! The incumbent starts at the greedy solution. A node at position `i` with
//! `D` distinct factors so far cannot end above
//! `|D| + min(n - i, |U_i \ D|)`, where `U_i` is the set of factors occurring
//! in the unfactorised suffix, so it is cut when that bound does not beat the
//! incumbent.

use super::KFactorUniverse;
use crate::error::ExactError;
use crate::maxfact::greedy_max_kfact;
use crate::word::{Factorisation, TokenString};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BbOptions {
    pub node_budget: u64,
}

impl Default for BbOptions {
    fn default() -> Self {
        BbOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BbResult {
    pub optimum: usize,
    pub cuts: Vec<usize>,
    pub nodes: u64,
}

impl BbResult {
    pub fn witness<'w>(&self, w: &'w TokenString) -> Factorisation<'w> {
        Factorisation::from_cuts(w, self.cuts.clone())
    }
}

pub fn exact_max_bb(w: &TokenString, k: usize, options: BbOptions) -> Result<BbResult, ExactError> {
    if k == 0 {
        return Err(ExactError::ZeroWidth);
    }
    let n = w.len();
    let universe = KFactorUniverse::new(w, k);
    let ids = universe.occurrence_ids(w, k);

    // suffix_ids[i]: distinct factors occurring at or after 0-based position i
    let mut suffix_ids: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut seen = vec![false; universe.len()];
    for i in (0..n).rev() {
        let mut here = suffix_ids[i + 1].clone();
        for &id in &ids[i] {
            if !seen[id] {
                seen[id] = true;
                here.push(id);
            }
        }
        suffix_ids[i] = here;
    }

    let greedy = greedy_max_kfact(w, k);
    let mut search = Search {
        ids,
        suffix_ids,
        n,
        counts: vec![0; universe.len()],
        distinct: 0,
        cuts: Vec::with_capacity(n),
        best: greedy.factorisation.dimension(),
        best_cuts: greedy.factorisation.into_cuts(),
        nodes: 0,
        budget: options.node_budget,
    };
    if search.run(0) {
        Ok(BbResult {
            optimum: search.best,
            cuts: search.best_cuts,
            nodes: search.nodes,
        })
    } else {
        Err(ExactError::NodeBudgetExceeded {
            budget: options.node_budget,
            lower_bound: search.best,
            witness: search.best_cuts,
        })
    }
}

struct Search {
    ids: Vec<Vec<usize>>,
    suffix_ids: Vec<Vec<usize>>,
    n: usize,
    counts: Vec<u32>,
    distinct: usize,
    cuts: Vec<usize>,
    best: usize,
    best_cuts: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// Returns false once the node budget is exhausted.
    fn run(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if pos == self.n {
            if self.distinct > self.best {
                self.best = self.distinct;
                self.best_cuts = self.cuts.clone();
            }
            return true;
        }
        let unused = self.suffix_ids[pos]
            .iter()
            .filter(|&&id| self.counts[id] == 0)
            .count();
        if self.distinct + unused.min(self.n - pos) <= self.best {
            return true;
        }

        // unused factors first, longer before shorter
        let mut order: Vec<usize> = (1..=self.ids[pos].len()).rev().collect();
        order.sort_by_key(|&len| self.counts[self.ids[pos][len - 1]] != 0);
        for len in order {
            let id = self.ids[pos][len - 1];
            self.counts[id] += 1;
            if self.counts[id] == 1 {
                self.distinct += 1;
            }
            self.cuts.push(pos + len);
            let within_budget = self.run(pos + len);
            self.cuts.pop();
            self.counts[id] -= 1;
            if self.counts[id] == 0 {
                self.distinct -= 1;
            }
            if !within_budget {
                return false;
            }
        }
        true
    }
}
