use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use strfact::exact::{
    brute_force, exact_max_bb, exact_max_dp, BbOptions, DEFAULT_FACTORISATION_BUDGET,
    DEFAULT_NODE_BUDGET,
};
use strfact::experiment::{run_experiment, ExperimentConfig};
use strfact::maxfact::{check_ends_within, greedy_max_kfact};
use strfact::minfact::{good_factors as find_good_factors, greedy_min_2fact, singleton_baseline};
use strfact::reduction::{
    matching_to_factorisation, reduce_3dm, solve_3dm_brute, ReductionOutput, ThreeDmInstance,
};
use strfact::{
    ExactError, ExperimentError, Factorisation, Format, Objective, ReductionError, Symbol,
    TokenString,
};
use thiserror::Error;

use crate::{ExperimentArgs, FactorizeArgs, ReduceArgs, SolveArgs, Solver, VerifyArgs, WordArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Rejected(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(err: ExactError) -> Self {
        match err {
            ExactError::ZeroWidth => CliError::Usage(err.to_string()),
            _ => CliError::Budget(err.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(err: ReductionError) -> Self {
        match err {
            ReductionError::BudgetExceeded(_) => CliError::Budget(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: Option<&Path>) -> Result<Vec<u8>> {
    match path {
        Some(path) => {
            fs::read(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_word(args: &WordArgs) -> Result<TokenString> {
    let bytes = match &args.word {
        Some(inline) => inline.clone().into_bytes(),
        None => read_input(args.input.as_deref())?,
    };
    TokenString::parse(&bytes, args.format).map_err(|e| CliError::Usage(e.to_string()))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Optimality {
    Yes,
    No,
    Unknown,
}

impl Optimality {
    fn as_str(self) -> &'static str {
        match self {
            Optimality::Yes => "yes",
            Optimality::No => "no",
            Optimality::Unknown => "unknown",
        }
    }
}

/// Machine layout: summary line, then one factor per line.
fn render_lines(f: &Factorisation<'_>, format: Format, opt: Optimality) -> String {
    let mut out = format!(
        "dim={} width={} opt={}\n",
        f.dimension(),
        f.width(),
        opt.as_str()
    );
    for factor in f.factors() {
        out.push_str(&f.word().render_factor(factor, format));
        out.push('\n');
    }
    out
}

fn render_human(
    f: &Factorisation<'_>,
    format: Format,
    opt: Optimality,
    header: &[(String, String)],
) -> String {
    let mut out = String::new();
    for (key, value) in header {
        let _ = writeln!(out, "{key:<10} {value}");
    }
    match format {
        Format::Plain => {
            let _ = writeln!(out, "{:<10} {}", "factors", f.render(format));
        }
        Format::Tokens => {
            out.push_str("factors\n");
            for (i, factor) in f.factors().enumerate() {
                let _ = writeln!(
                    out,
                    "  {}: {}",
                    i + 1,
                    f.word().render_factor(factor, format)
                );
            }
        }
    }
    let _ = writeln!(out, "{:<10} {}", "width", f.width());
    let _ = writeln!(out, "{:<10} {}", "dimension", f.dimension());
    let _ = writeln!(out, "{:<10} {}", "optimal", opt.as_str());
    out
}

pub fn factorize(args: FactorizeArgs) -> Result<()> {
    let w = read_word(&args.word)?;
    let k = args.k;
    if k == 0 {
        return Err(CliError::Usage("--k must be positive".into()));
    }
    let solver_name = args
        .solver
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    let mut header = vec![
        ("solver".to_owned(), solver_name),
        ("k".to_owned(), k.to_string()),
    ];
    let brute_budget = args
        .budget_nodes
        .map_or(DEFAULT_FACTORISATION_BUDGET, u128::from);
    let mut budget_error = None;

    let (cuts, opt) = match args.solver {
        Solver::MinGreedy => {
            if k != 2 {
                return Err(CliError::Usage(
                    "min-greedy is defined for --k 2 only".into(),
                ));
            }
            let (f, stats) = greedy_min_2fact(&w);
            if !stats.dimension_identity_holds() || !stats.ratio_bound_holds() {
                return Err(CliError::Invariant(format!(
                    "greedy-min statistics {stats:?}"
                )));
            }
            header.push(("m".into(), stats.m.to_string()));
            header.push(("m_good".into(), stats.m_good.to_string()));
            header.push(("merged".into(), stats.chosen.len().to_string()));
            (f.into_cuts(), Optimality::Unknown)
        }
        Solver::MinBrute => {
            let r = brute_force(&w, k, Objective::Min, brute_budget)?;
            header.push(("explored".into(), r.explored.to_string()));
            (r.cuts, Optimality::Yes)
        }
        Solver::MaxGreedy => {
            let g = greedy_max_kfact(&w, k);
            if let Err(failure) = check_ends_within(&w, k, &g.trace) {
                return Err(CliError::Invariant(format!(
                    "no pick ends within w[{}:{}]",
                    failure.start, failure.end
                )));
            }
            (g.factorisation.into_cuts(), Optimality::Unknown)
        }
        Solver::MaxDp => {
            let r = exact_max_dp(&w, k, args.budget_masks)?;
            header.push(("universe".into(), r.universe.len().to_string()));
            (r.cuts, Optimality::Yes)
        }
        Solver::MaxBb => {
            let options = BbOptions {
                node_budget: args.budget_nodes.unwrap_or(DEFAULT_NODE_BUDGET),
            };
            match exact_max_bb(&w, k, options) {
                Ok(r) => {
                    header.push(("nodes".into(), r.nodes.to_string()));
                    (r.cuts, Optimality::Yes)
                }
                Err(err @ ExactError::NodeBudgetExceeded { .. }) => {
                    let ExactError::NodeBudgetExceeded { witness, .. } = &err else {
                        unreachable!()
                    };
                    let cuts = witness.clone();
                    budget_error = Some(CliError::from(err));
                    (cuts, Optimality::No)
                }
                Err(err) => return Err(err.into()),
            }
        }
        Solver::MaxBrute => {
            let r = brute_force(&w, k, Objective::Max, brute_budget)?;
            header.push(("explored".into(), r.explored.to_string()));
            (r.cuts, Optimality::Yes)
        }
        Solver::Baseline => (singleton_baseline(&w, k).into_cuts(), Optimality::Unknown),
    };

    let f = Factorisation::from_cuts(&w, cuts);
    let report = f.validate(k);
    if !report.is_ok() {
        let msgs: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(CliError::Invariant(msgs.join("; ")));
    }
    let text = if args.word.lines {
        render_lines(&f, args.word.format, opt)
    } else {
        render_human(&f, args.word.format, opt, &header)
    };
    print!("{text}");
    match budget_error {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

pub fn good_factors(args: WordArgs) -> Result<()> {
    let w = read_word(&args)?;
    let found = find_good_factors(&w);
    let mut out = if args.lines {
        format!("count={}\n", found.len())
    } else {
        format!("{} good factor(s)\n", found.len())
    };
    for g in &found {
        let positions: Vec<String> = g.occurrences.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{}\t{}",
            w.render_factor(&g.symbols(), args.format),
            positions.join(",")
        );
    }
    print!("{out}");
    Ok(())
}

fn read_instance(path: Option<&Path>) -> Result<ThreeDmInstance> {
    let bytes = read_input(path)?;
    let text =
        String::from_utf8(bytes).map_err(|_| CliError::Usage("3DM input is not UTF-8".into()))?;
    Ok(ThreeDmInstance::parse(&text)?)
}

fn write_reduction(dir: &Path, out: &ReductionOutput) -> Result<()> {
    write_file(
        dir,
        "word.txt",
        &format!("{}\n", out.word.render(Format::Tokens)),
    )?;
    write_file(dir, "meta.txt", &out.render_metadata())
}

pub fn reduce(args: ReduceArgs) -> Result<()> {
    let inst = read_instance(args.input.as_deref())?;
    let out = reduce_3dm(&inst);
    match &args.out {
        Some(dir) => {
            write_reduction(dir, &out)?;
            println!(
                "n = {} sigma = {} d = {}",
                out.word.len(),
                out.word.alphabet().len(),
                out.d
            );
        }
        None => {
            println!("{}", out.word.render(Format::Tokens));
            println!();
            print!("{}", out.render_metadata());
        }
    }
    Ok(())
}

pub fn solve(args: SolveArgs) -> Result<()> {
    let inst = read_instance(args.input.as_deref())?;
    let matching = solve_3dm_brute(&inst, args.budget_nodes)?;
    let mut text = String::new();
    match &matching {
        Some(m) => {
            text.push_str("matching=yes\n");
            for &i in m {
                let [p, q, r] = inst.triple_names(i);
                let _ = writeln!(text, "{} {p} {q} {r}", i + 1);
            }
        }
        None => text.push_str("matching=no\n"),
    }
    print!("{text}");
    if let Some(dir) = &args.out {
        let out = reduce_3dm(&inst);
        write_reduction(dir, &out)?;
        if let Some(m) = &matching {
            let f = matching_to_factorisation(&inst, m, &out)?;
            if f.dimension() != out.d || !f.validate(out.k).is_ok() {
                return Err(CliError::Invariant("forward factorisation misses d".into()));
            }
            write_file(
                dir,
                "factors.txt",
                &render_lines(&f, Format::Tokens, Optimality::Unknown),
            )?;
        }
    }
    Ok(())
}

/// Maps the factor lines of a factorisation file onto cut positions of `w`.
fn parse_factor_file(
    w: &TokenString,
    text: &str,
    format: Format,
) -> std::result::Result<Vec<usize>, String> {
    let mut cuts = Vec::new();
    let mut pos = 0;
    let lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with("dim="));
    for (idx, line) in (1..).zip(lines) {
        let names: Vec<String> = match format {
            Format::Plain => line
                .trim_end_matches('\r')
                .chars()
                .map(String::from)
                .collect(),
            Format::Tokens => line.split_whitespace().map(str::to_owned).collect(),
        };
        let factor: Option<Vec<Symbol>> = names.iter().map(|n| w.alphabet().id(n)).collect();
        let Some(factor) = factor else {
            return Err(format!("factor {idx} uses a symbol not in the word"));
        };
        let end = pos + factor.len();
        if end > w.len() || w.symbols()[pos..end] != factor[..] {
            return Err(format!(
                "factor {idx} does not match the word at position {}",
                pos + 1
            ));
        }
        pos = end;
        cuts.push(end);
    }
    Ok(cuts)
}

pub fn verify(args: VerifyArgs) -> Result<()> {
    let word_bytes = read_input(Some(&args.word))?;
    let w =
        TokenString::parse(&word_bytes, args.format).map_err(|e| CliError::Usage(e.to_string()))?;
    let factor_bytes = read_input(Some(&args.factors))?;
    let text = String::from_utf8(factor_bytes)
        .map_err(|_| CliError::Usage("factor file is not UTF-8".into()))?;
    let cuts = parse_factor_file(&w, &text, args.format).map_err(|msg| {
        println!("invalid\n{msg}");
        CliError::Rejected(msg)
    })?;
    let f = Factorisation::from_cuts(&w, cuts);
    let report = f.validate(args.k);
    if report.is_ok() {
        println!("ok dim={} width={}", f.dimension(), f.width());
        Ok(())
    } else {
        println!("invalid");
        for v in &report.violations {
            println!("{v}");
        }
        Err(CliError::Rejected(format!(
            "{} violation(s)",
            report.violations.len()
        )))
    }
}

pub fn experiment(args: ExperimentArgs) -> Result<()> {
    let config = ExperimentConfig {
        trials: args.trials,
        max_n: args.max_n,
        sigmas: args.sigma.clone(),
        ks: args.k.clone(),
        seed: args.seed,
        budget: args
            .budget_nodes
            .map_or(DEFAULT_FACTORISATION_BUDGET, u128::from),
    };
    let report = run_experiment(&config).map_err(|err| match err {
        ExperimentError::InvalidConfig(_) => CliError::Usage(err.to_string()),
        ExperimentError::Exact(e) => e.into(),
    })?;
    let csv = report.to_csv();
    if let Some(dir) = &args.out {
        write_file(dir, "experiment.csv", &csv)?;
    }

    if args.lines {
        print!("{csv}");
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "trials      {}", report.trials.len());
        let _ = writeln!(out, "seed        {}", config.seed);
        if let Some(worst) = report.worst() {
            let _ = writeln!(
                out,
                "min ratio   {:.6} (trial {}: n={} sigma={} k={} greedy={} opt={})",
                worst.ratio(),
                worst.trial,
                worst.n,
                worst.sigma,
                worst.k,
                worst.d_greedy,
                worst.d_opt
            );
            let strictly = 2 * worst.d_greedy > worst.d_opt;
            let _ = writeln!(out, "above 1/2   {}", if strictly { "yes" } else { "no" });
        }
        let _ = writeln!(out, "mean ratio  {:.6}", report.mean_ratio());
        out.push_str("\nsigma  k  trials  min_ratio  mean_ratio\n");
        let mut groups: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
        for t in &report.trials {
            groups.entry((t.sigma, t.k)).or_default().push(t.ratio());
        }
        for ((sigma, k), ratios) in &groups {
            let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
            let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
            let _ = writeln!(
                out,
                "{sigma:>5}  {k}  {:>6}  {min:>9.6}  {mean:>10.6}",
                ratios.len()
            );
        }
        out.push_str("\nratio bin    trials\n");
        for (b, count) in report.histogram().iter().enumerate() {
            if *count > 0 {
                let close = if b == 9 { ']' } else { ')' };
                let _ = writeln!(
                    out,
                    "[{:.1}, {:.1}{close}  {count:>6}",
                    b as f64 / 10.0,
                    (b + 1) as f64 / 10.0
                );
            }
        }
        print!("{out}");
    }

    let violations = report.violations().count();
    if violations > 0 {
        return Err(CliError::Invariant(format!(
            "{violations} trial(s) below ratio 1/2"
        )));
    }
    Ok(())
}
