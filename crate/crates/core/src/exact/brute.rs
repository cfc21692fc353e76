use super::{count_factorisations, KFactorUniverse, Objective};
use crate::error::ExactError;
use crate::word::{Factorisation, TokenString};

pub const DEFAULT_FACTORISATION_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceResult {
    pub optimum: usize,
    /// Lexicographically smallest cut sequence attaining the optimum.
    pub cuts: Vec<usize>,
    /// Complete factorisations visited.
    pub explored: u128,
}

impl BruteForceResult {
    pub fn witness<'w>(&self, w: &'w TokenString) -> Factorisation<'w> {
        Factorisation::from_cuts(w, self.cuts.clone())
    }
}

/// Enumerates every `k`-factorisation of `w` and keeps the best dimension.
/// Refuses when the count `T(n)` exceeds `budget`.
pub fn brute_force(
    w: &TokenString,
    k: usize,
    objective: Objective,
    budget: u128,
) -> Result<BruteForceResult, ExactError> {
    if k == 0 {
        return Err(ExactError::ZeroWidth);
    }
    let estimated = count_factorisations(w.len(), k);
    if estimated > budget {
        return Err(ExactError::TooManyFactorisations { estimated, budget });
    }
    let universe = KFactorUniverse::new(w, k);
    let mut search = Search {
        ids: universe.occurrence_ids(w, k),
        n: w.len(),
        objective,
        counts: vec![0; universe.len()],
        distinct: 0,
        cuts: Vec::with_capacity(w.len()),
        best: None,
        explored: 0,
    };
    search.run(0);
    let (optimum, cuts) = search.best.expect("every word has a factorisation");
    Ok(BruteForceResult {
        optimum,
        cuts,
        explored: search.explored,
    })
}

struct Search {
    ids: Vec<Vec<usize>>,
    n: usize,
    objective: Objective,
    counts: Vec<u32>,
    distinct: usize,
    cuts: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
    explored: u128,
}

impl Search {
    fn run(&mut self, pos: usize) {
        if pos == self.n {
            self.explored += 1;
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.objective.improves(self.distinct, *best),
            };
            if better {
                self.best = Some((self.distinct, self.cuts.clone()));
            }
            return;
        }
        for len in 1..=self.ids[pos].len() {
            let id = self.ids[pos][len - 1];
            self.counts[id] += 1;
            if self.counts[id] == 1 {
                self.distinct += 1;
            }
            self.cuts.push(pos + len);
            self.run(pos + len);
            self.cuts.pop();
            self.counts[id] -= 1;
            if self.counts[id] == 0 {
                self.distinct -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Format;

    fn plain(s: &str) -> TokenString {
        TokenString::parse(s.as_bytes(), Format::Plain).unwrap()
    }

    #[test]
    fn aababa_max_is_four() {
        let w = plain("aababa");
        let r = brute_force(&w, 2, Objective::Max, DEFAULT_FACTORISATION_BUDGET).unwrap();
        assert_eq!(r.optimum, 4);
        assert_eq!(r.explored, 13);
        let f = r.witness(&w);
        assert!(f.validate(2).is_ok());
        assert_eq!(f.dimension(), 4);
        assert_eq!(f.render(Format::Plain), "aa|b|a|ba");
    }

    #[test]
    fn abac_min_is_two() {
        let w = plain("abac");
        let r = brute_force(&w, 2, Objective::Min, DEFAULT_FACTORISATION_BUDGET).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.witness(&w).render(Format::Plain), "ab|ac");
    }

    #[test]
    fn abc_counts_four() {
        let w = plain("abc");
        let r = brute_force(&w, 3, Objective::Max, DEFAULT_FACTORISATION_BUDGET).unwrap();
        assert_eq!((r.optimum, r.explored), (3, 4));
    }

    #[test]
    fn refuses_over_budget() {
        let w = plain("abababababab");
        let err = brute_force(&w, 3, Objective::Max, 100).unwrap_err();
        assert_eq!(
            err,
            ExactError::TooManyFactorisations {
                estimated: 927,
                budget: 100
            }
        );
    }

    #[test]
    fn empty_word() {
        let w = plain("");
        let r = brute_force(&w, 2, Objective::Min, 10).unwrap();
        assert_eq!((r.optimum, r.explored), (0, 1));
        assert!(r.cuts.is_empty());
    }
}
