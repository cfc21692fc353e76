//! Words over an interned alphabet and their factorisations.
//!
//! Positions exposed by this module are 1-based and inclusive: `substring(i, j)`
//! is the factor starting at `i` and ending at `j`. A factorisation is stored as
//! the list of factor end positions, so factor `r` spans `cuts[r-1]+1 ..= cuts[r]`
//! with an implicit leading cut at 0.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::ParseError;

/// Dense symbol id, an index into an [`Alphabet`].
pub type Symbol = u32;

/// How a word is written as text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    /// One line, one printable byte per symbol.
    Plain,
    /// One line of whitespace-separated tokens.
    Tokens,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "tokens" => Ok(Format::Tokens),
            other => Err(format!(
                "unknown format `{other}` (expected plain or tokens)"
            )),
        }
    }
}

/// Ordered table of distinct symbol names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for name in names {
            let name = name.into();
            check_token(&name)?;
            if alphabet.lookup.contains_key(&name) {
                return Err(ParseError::DuplicateSymbol(name));
            }
            alphabet.push(name);
        }
        Ok(alphabet)
    }

    fn push(&mut self, name: String) -> Symbol {
        let id = self.symbols.len() as Symbol;
        self.lookup.insert(name.clone(), id);
        self.symbols.push(name);
        id
    }

    fn intern(&mut self, name: &str) -> Symbol {
        match self.lookup.get(name) {
            Some(&id) => id,
            None => self.push(name.to_owned()),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<Symbol> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, id: Symbol) -> &str {
        &self.symbols[id as usize]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// True when every name is a single byte, so the plain format can render it.
    pub fn is_plain(&self) -> bool {
        self.symbols.iter().all(|s| s.len() == 1)
    }
}

fn check_token(token: &str) -> Result<(), ParseError> {
    if token.is_empty() {
        return Err(ParseError::EmptyToken);
    }
    if token.chars().any(char::is_whitespace) {
        return Err(ParseError::WhitespaceInToken(token.to_owned()));
    }
    Ok(())
}

/// A word `w` of length `n`, stored as symbol ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenString {
    alphabet: Alphabet,
    data: Vec<Symbol>,
}

impl TokenString {
    /// Builds a word over an explicit alphabet. The alphabet may contain symbols
    /// that do not occur in `data`.
    pub fn new(alphabet: Alphabet, data: Vec<Symbol>) -> Result<Self, ParseError> {
        if let Some(&bad) = data.iter().find(|&&s| s as usize >= alphabet.len()) {
            return Err(ParseError::UnknownSymbol(bad));
        }
        Ok(TokenString { alphabet, data })
    }

    /// Interns `tokens` in first-occurrence order.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut alphabet = Alphabet::default();
        let mut data = Vec::new();
        for token in tokens {
            let token = token.as_ref();
            check_token(token)?;
            data.push(alphabet.intern(token));
        }
        Ok(TokenString { alphabet, data })
    }

    /// Parses one line of text. A single trailing newline is ignored.
    pub fn parse(text: &[u8], format: Format) -> Result<Self, ParseError> {
        let text = strip_line_end(text);
        if text.contains(&b'\n') {
            return Err(ParseError::MultipleLines);
        }
        match format {
            Format::Plain => {
                let mut alphabet = Alphabet::default();
                let mut data = Vec::with_capacity(text.len());
                for (pos, &byte) in text.iter().enumerate() {
                    if !byte.is_ascii_graphic() {
                        return Err(ParseError::NonPrintable {
                            byte,
                            position: pos + 1,
                        });
                    }
                    let name = (byte as char).to_string();
                    data.push(alphabet.intern(&name));
                }
                Ok(TokenString { alphabet, data })
            }
            Format::Tokens => {
                let text = std::str::from_utf8(text).map_err(|_| ParseError::InvalidUtf8)?;
                Self::from_tokens(text.split_whitespace())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.data
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.data[i - 1]
    }

    /// `w[i:j]`, 1-based inclusive. Panics unless `1 <= i <= j <= n`.
    pub fn substring(&self, i: usize, j: usize) -> &[Symbol] {
        assert!(
            1 <= i && i <= j && j <= self.len(),
            "substring({i}, {j}) out of range for n = {}",
            self.len()
        );
        &self.data[i - 1..j]
    }

    /// Number of distinct symbols that occur in the word.
    pub fn distinct_symbols(&self) -> usize {
        self.data.iter().collect::<HashSet<_>>().len()
    }

    pub fn render(&self, format: Format) -> String {
        self.render_factor(&self.data, format)
    }

    /// Renders an arbitrary symbol sequence over this word's alphabet.
    pub fn render_factor(&self, factor: &[Symbol], format: Format) -> String {
        let sep = match format {
            Format::Plain => "",
            Format::Tokens => " ",
        };
        factor
            .iter()
            .map(|&s| self.alphabet.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

fn strip_line_end(text: &[u8]) -> &[u8] {
    let text = text.strip_suffix(b"\n").unwrap_or(text);
    text.strip_suffix(b"\r").unwrap_or(text)
}

/// One problem found by [`Factorisation::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Cut `index` (1-based) is not larger than the previous cut.
    NotIncreasing { index: usize, cut: usize },
    /// Cut `index` lies past the end of the word.
    OutOfRange { index: usize, cut: usize, n: usize },
    /// The last cut is not `n`.
    WrongEnd { last: usize, n: usize },
    /// Factor `index` (1-based) is longer than the width bound.
    TooWide { index: usize, len: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotIncreasing { index, cut } => {
                write!(f, "cut {index} at position {cut} does not increase")
            }
            Violation::OutOfRange { index, cut, n } => {
                write!(f, "cut {index} at position {cut} is past n = {n}")
            }
            Violation::WrongEnd { last, n } => write!(f, "cuts end at {last}, not at n = {n}"),
            Violation::TooWide { index, len, k } => {
                write!(f, "factor {index} has length {len} > k = {k}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A factorisation of a borrowed word, stored as increasing factor end positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorisation<'w> {
    word: &'w TokenString,
    cuts: Vec<usize>,
}

impl<'w> Factorisation<'w> {
    /// Wraps `cuts` without checking them; call [`validate`](Self::validate)
    /// before using the accessors on untrusted input.
    pub fn from_cuts(word: &'w TokenString, cuts: Vec<usize>) -> Self {
        Factorisation { word, cuts }
    }

    /// Builds the factorisation whose factors have the given lengths.
    pub fn from_lengths(word: &'w TokenString, lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut end = 0;
        let cuts = lengths
            .into_iter()
            .map(|len| {
                end += len;
                end
            })
            .collect();
        Factorisation { word, cuts }
    }

    pub fn singletons(word: &'w TokenString) -> Self {
        Factorisation {
            word,
            cuts: (1..=word.len()).collect(),
        }
    }

    pub fn word(&self) -> &'w TokenString {
        self.word
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn into_cuts(self) -> Vec<usize> {
        self.cuts
    }

    /// Number of factors `l`, counting repeats.
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// 1-based inclusive `(start, end)` span of every factor, in order.
    pub fn spans(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let starts = std::iter::once(0).chain(self.cuts.iter().copied());
        starts
            .zip(self.cuts.iter().copied())
            .map(|(prev, end)| (prev + 1, end))
    }

    pub fn factors(&self) -> impl Iterator<Item = &'w [Symbol]> + '_ {
        let word = self.word;
        self.spans().map(move |(i, j)| word.substring(i, j))
    }

    pub fn width(&self) -> usize {
        self.spans().map(|(i, j)| j + 1 - i).max().unwrap_or(0)
    }

    /// `d(F)`, the number of distinct factors.
    pub fn dimension(&self) -> usize {
        self.factors().collect::<HashSet<_>>().len()
    }

    /// Checks that the cuts are strictly increasing, end at `n` and that every
    /// factor has length at most `k`.
    pub fn validate(&self, k: usize) -> ValidationReport {
        let n = self.word.len();
        let mut violations = Vec::new();
        let mut prev = 0;
        for (idx, &cut) in self.cuts.iter().enumerate() {
            if cut <= prev {
                violations.push(Violation::NotIncreasing {
                    index: idx + 1,
                    cut,
                });
                continue;
            }
            if cut > n {
                violations.push(Violation::OutOfRange {
                    index: idx + 1,
                    cut,
                    n,
                });
                continue;
            }
            if cut - prev > k {
                violations.push(Violation::TooWide {
                    index: idx + 1,
                    len: cut - prev,
                    k,
                });
            }
            prev = cut;
        }
        let last = self.cuts.last().copied().unwrap_or(0);
        if last != n {
            violations.push(Violation::WrongEnd { last, n });
        }
        ValidationReport { violations }
    }

    /// `D(F)` without an insertion trace.
    pub fn factor_set(&self) -> FactorSet {
        let mut set = FactorSet::default();
        for factor in self.factors() {
            set.members.entry(factor.to_vec()).or_insert(None);
        }
        set
    }

    pub fn render(&self, format: Format) -> String {
        self.factors()
            .map(|f| self.word.render_factor(f, format))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// The set `D(F)` of distinct factors. Members produced by a traced algorithm
/// remember the 1-based `(t, j)` occurrence at which they were added.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorSet {
    members: BTreeMap<Vec<Symbol>, Option<(usize, usize)>>,
}

impl FactorSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, factor: &[Symbol]) -> bool {
        self.members.contains_key(factor)
    }

    /// Inserts a member with the occurrence that introduced it. Returns false
    /// if the factor was already present.
    pub fn insert_traced(&mut self, factor: &[Symbol], at: (usize, usize)) -> bool {
        if self.members.contains_key(factor) {
            return false;
        }
        self.members.insert(factor.to_vec(), Some(at));
        true
    }

    pub fn trace(&self, factor: &[Symbol]) -> Option<(usize, usize)> {
        self.members.get(factor).copied().flatten()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Symbol], Option<(usize, usize)>)> {
        self.members.iter().map(|(f, t)| (f.as_slice(), *t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(s: &str) -> TokenString {
        TokenString::parse(s.as_bytes(), Format::Plain).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = plain("acbacba");
        assert_eq!((w.len(), w.alphabet().len()), (7, 3));
        assert_eq!(w.render(Format::Plain), "acbacba");

        let e = plain("");
        assert_eq!((e.len(), e.alphabet().len()), (0, 0));

        let t = TokenString::parse(b"t1_1 x y z t2_1 f_1\n", Format::Tokens).unwrap();
        assert_eq!((t.len(), t.alphabet().len()), (6, 6));
        assert_eq!(t.render(Format::Tokens), "t1_1 x y z t2_1 f_1");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            TokenString::parse(b"ab\x01c", Format::Plain),
            Err(ParseError::NonPrintable {
                byte: 1,
                position: 3
            })
        ));
        assert!(matches!(
            TokenString::parse(b"a b", Format::Plain),
            Err(ParseError::NonPrintable { .. })
        ));
        assert!(matches!(
            TokenString::parse(b"ab\ncd", Format::Plain),
            Err(ParseError::MultipleLines)
        ));
        assert!(matches!(
            TokenString::from_tokens(["a", ""]),
            Err(ParseError::EmptyToken)
        ));
        assert!(matches!(
            TokenString::from_tokens(["a b"]),
            Err(ParseError::WhitespaceInToken(_))
        ));
        assert!(matches!(
            Alphabet::new(["x", "x"]),
            Err(ParseError::DuplicateSymbol(_))
        ));
    }

    #[test]
    fn substring_is_one_based() {
        let w = plain("abcd");
        assert_eq!(w.substring(2, 3), &[1, 2]);
        assert_eq!(w.at(4), 3);
    }

    #[test]
    fn validate_examples() {
        let w = plain("aababa");
        let f = Factorisation::from_lengths(&w, [1, 2, 1, 1, 1]);
        assert!(f.validate(2).is_ok());
        assert_eq!(f.render(Format::Plain), "a|ab|a|b|a");

        let w = plain("ab");
        let f = Factorisation::from_cuts(&w, vec![2]);
        assert_eq!(
            f.validate(1).violations,
            vec![Violation::TooWide {
                index: 1,
                len: 2,
                k: 1
            }]
        );

        let w = plain("abc");
        let f = Factorisation::from_cuts(&w, vec![1, 2]);
        assert_eq!(
            f.validate(3).violations,
            vec![Violation::WrongEnd { last: 2, n: 3 }]
        );

        let f = Factorisation::from_cuts(&w, vec![2, 2, 3]);
        assert_eq!(
            f.validate(3).violations,
            vec![Violation::NotIncreasing { index: 2, cut: 2 }]
        );
    }

    #[test]
    fn empty_word_has_empty_factorisation() {
        let w = plain("");
        let f = Factorisation::from_cuts(&w, vec![]);
        assert!(f.validate(1).is_ok());
        assert_eq!((f.dimension(), f.width()), (0, 0));
    }

    #[test]
    fn dimension_examples() {
        let w = plain("aababa");
        assert_eq!(
            Factorisation::from_lengths(&w, [1, 2, 1, 1, 1]).dimension(),
            3
        );
        assert_eq!(Factorisation::from_lengths(&w, [2, 1, 2, 1]).dimension(), 4);
        assert_eq!(Factorisation::from_lengths(&w, [6]).dimension(), 1);
    }

    #[test]
    fn factor_set_matches_dimension() {
        let w = plain("aababa");
        let f = Factorisation::from_lengths(&w, [2, 1, 2, 1]);
        let set = f.factor_set();
        assert_eq!(set.len(), 4);
        assert!(set.contains(&[0, 0]));
        assert_eq!(set.trace(&[0]), None);
    }
}
