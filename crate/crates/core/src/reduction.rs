//! Compiles 3-dimensional matching into maximum-dimension factorisation at
//! width 3.
//!
//! For triple `i = (p, q, r)` the word contains `u_i = t1_i p q r t2_i f_i`,
//! `x_i = a1_i t1_i p a2_i` and `y_i = b1_i r t2_i b2_i`; every distinct pair
//! `(p, q)` and `(q, r)` used by a triple contributes `c1 p q c2` and
//! `c1 q r c2` with fresh delimiters. A perfect matching exists exactly when
//! the word has a 3-factorisation of dimension at least
//! `d = 2l + 10t + 3t1 + 3t2`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rand_core::RngCore;

use crate::error::ReductionError;
use crate::rng::below;
use crate::word::{Alphabet, Factorisation, Symbol, TokenString};

/// Prefixes of generated gadget symbols; ground-set names may not use them.
pub const RESERVED_PREFIXES: [&str; 11] = [
    "t1_", "t2_", "f_", "a1_", "a2_", "b1_", "b2_", "c1pq_", "c2pq_", "c1qr_", "c2qr_",
];

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDmInstance {
    x: Vec<String>,
    y: Vec<String>,
    z: Vec<String>,
    /// Indices into `x`, `y` and `z`.
    triples: Vec<[usize; 3]>,
}

impl ThreeDmInstance {
    pub fn new(
        x: Vec<String>,
        y: Vec<String>,
        z: Vec<String>,
        triples: Vec<[usize; 3]>,
    ) -> Result<Self, ReductionError> {
        let l = x.len();
        if l == 0 || y.len() != l || z.len() != l {
            return Err(ReductionError::UnequalSets {
                x: x.len(),
                y: y.len(),
                z: z.len(),
            });
        }
        let mut names = HashSet::new();
        for name in x.iter().chain(&y).chain(&z) {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(ReductionError::Malformed(format!(
                    "invalid element name `{name}`"
                )));
            }
            if RESERVED_PREFIXES.iter().any(|p| name.starts_with(p)) {
                return Err(ReductionError::ReservedName(name.clone()));
            }
            if !names.insert(name.as_str()) {
                return Err(ReductionError::DuplicateName(name.clone()));
            }
        }
        if triples.is_empty() {
            return Err(ReductionError::NoTriples);
        }
        let mut seen = HashSet::new();
        for (i, triple) in triples.iter().enumerate() {
            if let Some(&bad) = triple.iter().find(|&&c| c >= l) {
                return Err(ReductionError::UnknownElement {
                    index: i + 1,
                    name: bad.to_string(),
                });
            }
            if !seen.insert(*triple) {
                return Err(ReductionError::DuplicateTriple(i + 1));
            }
        }
        Ok(ThreeDmInstance { x, y, z, triples })
    }

    /// Builds an instance from triples spelled with element names.
    pub fn from_names(
        x: Vec<String>,
        y: Vec<String>,
        z: Vec<String>,
        triples: &[[&str; 3]],
    ) -> Result<Self, ReductionError> {
        let sets = [&x, &y, &z];
        let mut resolved = Vec::with_capacity(triples.len());
        for (i, names) in triples.iter().enumerate() {
            let mut t = [0; 3];
            for c in 0..3 {
                t[c] = sets[c].iter().position(|n| n == names[c]).ok_or_else(|| {
                    ReductionError::UnknownElement {
                        index: i + 1,
                        name: names[c].to_owned(),
                    }
                })?;
            }
            resolved.push(t);
        }
        Self::new(x, y, z, resolved)
    }

    /// Parses the text layout: `l t`, then the names of X, Y and Z on one line
    /// each, then `t` lines `p q r`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'));
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| ReductionError::Malformed(format!("missing {what}")))
        };
        let header: Vec<&str> = next("header")?.split_whitespace().collect();
        let [l, t] = header[..] else {
            return Err(ReductionError::Malformed("header must be `l t`".into()));
        };
        let parse_count = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ReductionError::Malformed(format!("`{s}` is not a count")))
        };
        let (l, t) = (parse_count(l)?, parse_count(t)?);
        let mut sets = Vec::with_capacity(3);
        for set in ["X", "Y", "Z"] {
            let names: Vec<String> = next(set)?.split_whitespace().map(str::to_owned).collect();
            if names.len() != l {
                return Err(ReductionError::Malformed(format!(
                    "{set} has {} names, expected {l}",
                    names.len()
                )));
            }
            sets.push(names);
        }
        let mut triples = Vec::with_capacity(t);
        for i in 0..t {
            let line = next(&format!("triple {}", i + 1))?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [p, q, r] = parts[..] else {
                return Err(ReductionError::Malformed(format!(
                    "triple {} must have three names",
                    i + 1
                )));
            };
            triples.push([p, q, r]);
        }
        if let Some(extra) = lines.next() {
            return Err(ReductionError::Malformed(format!(
                "unexpected trailing line `{extra}`"
            )));
        }
        let z = sets.pop().unwrap();
        let y = sets.pop().unwrap();
        let x = sets.pop().unwrap();
        Self::from_names(x, y, z, &triples)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.l(), self.t());
        for set in [&self.x, &self.y, &self.z] {
            out.push_str(&set.join(" "));
            out.push('\n');
        }
        for &[p, q, r] in &self.triples {
            let _ = writeln!(out, "{} {} {}", self.x[p], self.y[q], self.z[r]);
        }
        out
    }

    pub fn l(&self) -> usize {
        self.x.len()
    }

    pub fn t(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn triple_names(&self, i: usize) -> [&str; 3] {
        let [p, q, r] = self.triples[i];
        [&self.x[p], &self.y[q], &self.z[r]]
    }

    /// Checks that `selection` indexes distinct, pairwise disjoint triples.
    pub fn check_disjoint(&self, selection: &[usize]) -> Result<(), ReductionError> {
        let mut owner: [HashMap<usize, usize>; 3] = Default::default();
        let mut chosen = HashSet::new();
        for &i in selection {
            if i >= self.t() {
                return Err(ReductionError::TripleOutOfRange(i));
            }
            if !chosen.insert(i) {
                return Err(ReductionError::NotAMatching(i, i));
            }
            for (c, map) in owner.iter_mut().enumerate() {
                if let Some(&other) = map.get(&self.triples[i][c]) {
                    return Err(ReductionError::NotAMatching(other, i));
                }
                map.insert(self.triples[i][c], i);
            }
        }
        Ok(())
    }

    /// Checks that `selection` is a perfect matching (`l` disjoint triples).
    pub fn check_matching(&self, selection: &[usize]) -> Result<(), ReductionError> {
        self.check_disjoint(selection)?;
        if selection.len() != self.l() {
            return Err(ReductionError::WrongMatchingSize {
                found: selection.len(),
                expected: self.l(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    U,
    X,
    Y,
    Zpq,
    Zqr,
}

impl BlockKind {
    pub fn label(self) -> &'static str {
        match self {
            BlockKind::U => "u",
            BlockKind::X => "x",
            BlockKind::Y => "y",
            BlockKind::Zpq => "zpq",
            BlockKind::Zqr => "zqr",
        }
    }
}

/// A gadget block of the compiled word, 1-based inclusive positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// 1-based index among blocks of the same kind.
    pub index: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub word: TokenString,
    pub k: usize,
    pub d: usize,
    pub blocks: Vec<Block>,
    pub t1: usize,
    pub t2: usize,
}

impl ReductionOutput {
    pub fn blocks_of(&self, kind: BlockKind) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(move |b| b.kind == kind)
    }

    /// `key = value` header followed by a CSV table of block ranges.
    pub fn render_metadata(&self) -> String {
        let mut out = String::new();
        for (key, value) in [
            ("k", self.k),
            ("d", self.d),
            ("n", self.word.len()),
            ("sigma", self.word.alphabet().len()),
            ("t", self.blocks_of(BlockKind::U).count()),
            ("t1", self.t1),
            ("t2", self.t2),
        ] {
            let _ = writeln!(out, "{key} = {value}");
        }
        out.push_str("\nkind,index,start,end\n");
        for b in &self.blocks {
            let _ = writeln!(out, "{},{},{},{}", b.kind.label(), b.index, b.start, b.end);
        }
        out
    }
}

/// Builds the width-3 instance `(w, d)` for a 3DM instance.
pub fn reduce_3dm(inst: &ThreeDmInstance) -> ReductionOutput {
    let t = inst.t();
    let mut pq_pairs: Vec<(usize, usize)> = Vec::new();
    let mut qr_pairs: Vec<(usize, usize)> = Vec::new();
    for &[p, q, r] in &inst.triples {
        if !pq_pairs.contains(&(p, q)) {
            pq_pairs.push((p, q));
        }
        if !qr_pairs.contains(&(q, r)) {
            qr_pairs.push((q, r));
        }
    }

    let mut names: Vec<String> = inst
        .x
        .iter()
        .chain(&inst.y)
        .chain(&inst.z)
        .cloned()
        .collect();
    for i in 1..=t {
        for prefix in ["t1_", "t2_", "f_", "a1_", "a2_", "b1_", "b2_"] {
            names.push(format!("{prefix}{i}"));
        }
    }
    for j in 1..=pq_pairs.len() {
        names.push(format!("c1pq_{j}"));
        names.push(format!("c2pq_{j}"));
    }
    for j in 1..=qr_pairs.len() {
        names.push(format!("c1qr_{j}"));
        names.push(format!("c2qr_{j}"));
    }
    let alphabet = Alphabet::new(names).expect("gadget names are unique by construction");
    let id = |name: &str| alphabet.id(name).expect("interned above");
    let l = inst.l();
    let (xs, ys, zs) = (0, l, 2 * l);

    let mut data: Vec<Symbol> = Vec::new();
    let mut blocks = Vec::new();
    let mut push = |kind: BlockKind, index: usize, symbols: Vec<Symbol>| {
        let start = data.len() + 1;
        data.extend(symbols);
        blocks.push(Block {
            kind,
            index,
            start,
            end: data.len(),
        });
    };
    let sym = |offset: usize, idx: usize| (offset + idx) as Symbol;

    for (i, &[p, q, r]) in (1..).zip(&inst.triples) {
        let g = |prefix: &str| id(&format!("{prefix}{i}"));
        push(
            BlockKind::U,
            i,
            vec![
                g("t1_"),
                sym(xs, p),
                sym(ys, q),
                sym(zs, r),
                g("t2_"),
                g("f_"),
            ],
        );
    }
    for (i, &[p, _, _]) in (1..).zip(&inst.triples) {
        let g = |prefix: &str| id(&format!("{prefix}{i}"));
        push(
            BlockKind::X,
            i,
            vec![g("a1_"), g("t1_"), sym(xs, p), g("a2_")],
        );
    }
    for (i, &[_, _, r]) in (1..).zip(&inst.triples) {
        let g = |prefix: &str| id(&format!("{prefix}{i}"));
        push(
            BlockKind::Y,
            i,
            vec![g("b1_"), sym(zs, r), g("t2_"), g("b2_")],
        );
    }
    for (j, &(p, q)) in (1..).zip(&pq_pairs) {
        push(
            BlockKind::Zpq,
            j,
            vec![
                id(&format!("c1pq_{j}")),
                sym(xs, p),
                sym(ys, q),
                id(&format!("c2pq_{j}")),
            ],
        );
    }
    for (j, &(q, r)) in (1..).zip(&qr_pairs) {
        push(
            BlockKind::Zqr,
            j,
            vec![
                id(&format!("c1qr_{j}")),
                sym(ys, q),
                sym(zs, r),
                id(&format!("c2qr_{j}")),
            ],
        );
    }

    let (t1, t2) = (pq_pairs.len(), qr_pairs.len());
    let word = TokenString::new(alphabet, data).expect("symbols come from the alphabet");
    ReductionOutput {
        word,
        k: 3,
        d: 2 * l + 10 * t + 3 * t1 + 3 * t2,
        blocks,
        t1,
        t2,
    }
}

/// Factorises the compiled word from a perfect matching; the result has
/// dimension exactly `d`.
pub fn matching_to_factorisation<'a>(
    inst: &ThreeDmInstance,
    matching: &[usize],
    out: &'a ReductionOutput,
) -> Result<Factorisation<'a>, ReductionError> {
    inst.check_matching(matching)?;
    let matched: HashSet<usize> = matching.iter().copied().collect();
    let mut lengths = Vec::new();
    for block in &out.blocks {
        match block.kind {
            BlockKind::U if matched.contains(&(block.index - 1)) => lengths.extend([1; 6]),
            BlockKind::U => lengths.extend([1, 3, 1, 1]),
            _ => lengths.extend([1, 2, 1]),
        }
    }
    let f = Factorisation::from_lengths(&out.word, lengths);
    let (l, t) = (inst.l(), inst.t());
    let expected = 6 * l + 4 * (t - l) + 3 * t + 3 * t + 3 * out.t1 + 3 * out.t2;
    assert_eq!(expected, out.d);
    assert_eq!(f.dimension(), out.d, "forward construction must reach d");
    Ok(f)
}

/// Why [`extract_matching`] could not recover a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractFailure {
    /// 0-based triples whose `u` block was cut into six singletons.
    pub selected: Vec<usize>,
    pub reason: ReductionError,
}

/// Reads off the triples whose `u` block is split into six singletons and
/// checks that they form a perfect matching. Succeeds on canonical
/// factorisations of dimension `d`; other optimal factorisations may fail.
pub fn extract_matching(
    inst: &ThreeDmInstance,
    out: &ReductionOutput,
    f: &Factorisation<'_>,
) -> Result<Vec<usize>, ExtractFailure> {
    let cuts: HashSet<usize> = f.cuts().iter().copied().collect();
    let selected: Vec<usize> = out
        .blocks_of(BlockKind::U)
        .filter(|b| (b.start - 1..=b.end).all(|c| c == 0 || cuts.contains(&c)))
        .map(|b| b.index - 1)
        .collect();
    match inst.check_matching(&selected) {
        Ok(()) => Ok(selected),
        Err(reason) => Err(ExtractFailure { selected, reason }),
    }
}

/// Backtracking search for a perfect matching, covering X elements in order.
pub fn solve_3dm_brute(
    inst: &ThreeDmInstance,
    node_budget: u64,
) -> Result<Option<Vec<usize>>, ReductionError> {
    let l = inst.l();
    let mut by_x: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (i, t) in inst.triples.iter().enumerate() {
        by_x[t[0]].push(i);
    }
    struct State<'a> {
        inst: &'a ThreeDmInstance,
        by_x: Vec<Vec<usize>>,
        used_y: Vec<bool>,
        used_z: Vec<bool>,
        chosen: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    fn go(s: &mut State<'_>, x: usize) -> Result<bool, ReductionError> {
        s.nodes += 1;
        if s.nodes > s.budget {
            return Err(ReductionError::BudgetExceeded(s.budget));
        }
        if x == s.by_x.len() {
            return Ok(true);
        }
        for idx in 0..s.by_x[x].len() {
            let i = s.by_x[x][idx];
            let [_, y, z] = s.inst.triples[i];
            if s.used_y[y] || s.used_z[z] {
                continue;
            }
            s.used_y[y] = true;
            s.used_z[z] = true;
            s.chosen.push(i);
            if go(s, x + 1)? {
                return Ok(true);
            }
            s.chosen.pop();
            s.used_y[y] = false;
            s.used_z[z] = false;
        }
        Ok(false)
    }
    let mut state = State {
        inst,
        by_x,
        used_y: vec![false; l],
        used_z: vec![false; l],
        chosen: Vec::new(),
        nodes: 0,
        budget: node_budget,
    };
    if go(&mut state, 0)? {
        state.chosen.sort_unstable();
        Ok(Some(state.chosen))
    } else {
        Ok(None)
    }
}

/// Random instance over `x1..xl`, `y1..yl`, `z1..zl` with `min(t, l^3)`
/// distinct triples.
pub fn random_instance<R: RngCore>(rng: &mut R, l: usize, t: usize) -> ThreeDmInstance {
    let names = |prefix: &str| (1..=l).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>();
    let t = t.min(l * l * l);
    let mut seen = HashSet::new();
    let mut triples = Vec::with_capacity(t);
    while triples.len() < t {
        let triple = [below(rng, l), below(rng, l), below(rng, l)];
        if seen.insert(triple) {
            triples.push(triple);
        }
    }
    ThreeDmInstance::new(names("x"), names("y"), names("z"), triples)
        .expect("generated instance is valid")
}
