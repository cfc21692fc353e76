//! Greedy-versus-optimum experiment for maximum dimension on random words.

use std::fmt::Write as _;

use rand_core::RngCore;

use crate::error::{ExactError, ExperimentError};
use crate::exact::{brute_force, count_factorisations, Objective, DEFAULT_FACTORISATION_BUDGET};
use crate::maxfact::greedy_max_kfact;
use crate::rng::{below, seeded};
use crate::word::{Alphabet, TokenString};

pub const CSV_HEADER: &str = "trial,seed,n,sigma,k,d_greedy,d_opt,ratio";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub trials: usize,
    /// Word lengths are drawn uniformly from `1..=max_n`.
    pub max_n: usize,
    pub sigmas: Vec<usize>,
    pub ks: Vec<usize>,
    pub seed: u64,
    /// Per-trial cap on enumerated factorisations.
    pub budget: u128,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            trials: 1000,
            max_n: 16,
            sigmas: vec![2, 3, 4],
            ks: vec![2, 3],
            seed: 0,
            budget: DEFAULT_FACTORISATION_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    /// 1-based trial number.
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub sigma: usize,
    pub k: usize,
    pub d_greedy: usize,
    pub d_opt: usize,
}

impl Trial {
    pub fn ratio(&self) -> f64 {
        self.d_greedy as f64 / self.d_opt as f64
    }

    /// `2 * d_greedy >= d_opt`.
    pub fn within_factor_two(&self) -> bool {
        2 * self.d_greedy >= self.d_opt
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub trials: Vec<Trial>,
}

impl ExperimentReport {
    /// Trial with the smallest ratio (first one on ties).
    pub fn worst(&self) -> Option<&Trial> {
        self.trials.iter().reduce(|best, t| {
            // compare d_g / d_o exactly
            if t.d_greedy * best.d_opt < best.d_greedy * t.d_opt {
                t
            } else {
                best
            }
        })
    }

    pub fn min_ratio(&self) -> f64 {
        self.worst().map_or(1.0, Trial::ratio)
    }

    pub fn mean_ratio(&self) -> f64 {
        if self.trials.is_empty() {
            return 1.0;
        }
        self.trials.iter().map(Trial::ratio).sum::<f64>() / self.trials.len() as f64
    }

    /// Counts per ratio bin `[b/10, (b+1)/10)`, with 1.0 in the last bin.
    pub fn histogram(&self) -> [usize; 10] {
        let mut bins = [0; 10];
        for t in &self.trials {
            bins[((t.ratio() * 10.0) as usize).min(9)] += 1;
        }
        bins
    }

    pub fn violations(&self) -> impl Iterator<Item = &Trial> {
        self.trials.iter().filter(|t| !t.within_factor_two())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for t in &self.trials {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{:.6}",
                t.trial,
                t.seed,
                t.n,
                t.sigma,
                t.k,
                t.d_greedy,
                t.d_opt,
                t.ratio()
            );
        }
        out
    }
}

/// Random word of length `n` with i.i.d. uniform symbols `s0 .. s{sigma-1}`.
pub fn random_word<R: RngCore>(rng: &mut R, n: usize, sigma: usize) -> TokenString {
    let alphabet = Alphabet::new((0..sigma).map(|i| format!("s{i}"))).expect("distinct names");
    let data = (0..n).map(|_| below(rng, sigma) as u32).collect();
    TokenString::new(alphabet, data).expect("ids are below sigma")
}

/// Runs the experiment. Trial `i` draws its own seed from a master stream
/// seeded with `config.seed`, then draws `n`, `sigma`, `k` and the word from
/// that seed, in that order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    if config.trials == 0 || config.max_n == 0 {
        return Err(ExperimentError::InvalidConfig(
            "trials and max-n must be positive".into(),
        ));
    }
    if config.sigmas.is_empty() || config.sigmas.contains(&0) {
        return Err(ExperimentError::InvalidConfig(
            "alphabet sizes must be positive".into(),
        ));
    }
    if config.ks.is_empty() || config.ks.contains(&0) {
        return Err(ExperimentError::InvalidConfig(
            "widths must be positive".into(),
        ));
    }
    let max_k = *config.ks.iter().max().unwrap();
    let estimated = count_factorisations(config.max_n, max_k);
    if estimated > config.budget {
        return Err(ExactError::TooManyFactorisations {
            estimated,
            budget: config.budget,
        }
        .into());
    }

    let mut master = seeded(config.seed);
    let mut trials = Vec::with_capacity(config.trials);
    for trial in 1..=config.trials {
        let seed = master.next_u64();
        let mut rng = seeded(seed);
        let n = 1 + below(&mut rng, config.max_n);
        let sigma = config.sigmas[below(&mut rng, config.sigmas.len())];
        let k = config.ks[below(&mut rng, config.ks.len())];
        let w = random_word(&mut rng, n, sigma);
        let d_greedy = greedy_max_kfact(&w, k).factorisation.dimension();
        let d_opt = brute_force(&w, k, Objective::Max, config.budget)?.optimum;
        trials.push(Trial {
            trial,
            seed,
            n,
            sigma,
            k,
            d_greedy,
            d_opt,
        });
    }
    Ok(ExperimentReport { trials })
}
