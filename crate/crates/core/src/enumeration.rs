//! Lazy lexicographic enumeration of each family and the rank/unrank
//! bijections onto `0..count`.
//!
//! Selections are sequences of alphabet positions. Ordering is always by
//! position, never by symbol text.

use std::collections::HashSet;
use std::fmt;
use std::iter::FusedIterator;
use std::str::FromStr;

use crate::counting::{count_combinations, count_mode, LacParams};
use crate::error::{LacError, Result};
use crate::natural::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Mode {
    /// Repetition and order allowed.
    List,
    /// Order allowed, no repetition.
    Arrangement,
    /// Neither repetition nor order; stored as strictly increasing indices.
    Combination,
    /// Arrangement of all `n` objects.
    Permutation,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::List,
        Mode::Arrangement,
        Mode::Combination,
        Mode::Permutation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::List => "list",
            Mode::Arrangement => "arrangement",
            Mode::Combination => "combination",
            Mode::Permutation => "permutation",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

/// Ordered set of distinct, non-empty symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(symbols.len());
        for s in &symbols {
            if s.is_empty() {
                return Err(LacError::EmptySymbol);
            }
            if !seen.insert(s.as_str()) {
                return Err(LacError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `a, b, c, ...` for `n <= 26`, otherwise `x0, x1, ...`.
    pub fn default_for(n: usize) -> Self {
        let symbols = if n <= 26 {
            (b'a'..).take(n).map(|c| (c as char).to_string()).collect()
        } else {
            (0..n).map(|i| format!("x{i}")).collect()
        };
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> Option<&str> {
        self.symbols.get(index).map(String::as_str)
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Parses the text of a length-`p` selection into alphabet positions.
    ///
    /// Comma-separated input is split on commas. Otherwise the text is
    /// segmented into exactly `p` symbols; an ambiguous segmentation is
    /// rejected.
    pub fn parse_indices(&self, text: &str, p: usize) -> std::result::Result<Vec<usize>, String> {
        if text.contains(',') {
            return text
                .split(',')
                .map(|tok| {
                    self.index_of(tok.trim())
                        .ok_or_else(|| format!("unknown symbol {tok:?}"))
                })
                .collect();
        }
        let mut found = Vec::new();
        let mut path = Vec::with_capacity(p);
        self.segment(text, p, &mut path, &mut found);
        match found.len() {
            0 => Err(format!(
                "{text:?} is not a sequence of {p} alphabet symbols"
            )),
            1 => Ok(found.pop().unwrap()),
            _ => Err(format!("{text:?} splits into symbols in more than one way")),
        }
    }

    fn segment(&self, rest: &str, left: usize, path: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        if found.len() > 1 {
            return;
        }
        if left == 0 {
            if rest.is_empty() {
                found.push(path.clone());
            }
            return;
        }
        for (i, sym) in self.symbols.iter().enumerate() {
            if let Some(tail) = rest.strip_prefix(sym.as_str()) {
                path.push(i);
                self.segment(tail, left - 1, path, found);
                path.pop();
            }
        }
    }
}

/// One list, arrangement, combination or permutation, as alphabet positions.
///
/// Ordering compares the index sequences lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Selection {
    indices: Vec<usize>,
    mode: Mode,
}

impl Selection {
    /// Builds a selection over an alphabet of `n` symbols, checking the
    /// invariants of `mode`.
    pub fn new(indices: Vec<usize>, mode: Mode, n: usize) -> Result<Self> {
        validate(&indices, mode, n)?;
        Ok(Selection { indices, mode })
    }

    pub(crate) fn new_unchecked(indices: Vec<usize>, mode: Mode) -> Self {
        Selection { indices, mode }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Concatenated symbol text, e.g. `"ab"`.
    ///
    /// Panics if an index is outside `alphabet`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.indices
            .iter()
            .map(|&i| alphabet.symbols[i].as_str())
            .collect()
    }
}

fn validate(indices: &[usize], mode: Mode, n: usize) -> Result<()> {
    let invalid = |reason: String| Err(LacError::InvalidSelection { mode, reason });
    if let Some(&i) = indices.iter().find(|&&i| i >= n) {
        return invalid(format!("index {i} outside alphabet of {n} symbols"));
    }
    match mode {
        Mode::List => {}
        Mode::Combination => {
            if indices.windows(2).any(|w| w[0] >= w[1]) {
                return invalid("indices must be strictly increasing".into());
            }
        }
        Mode::Arrangement | Mode::Permutation => {
            let mut seen = vec![false; n];
            for &i in indices {
                if std::mem::replace(&mut seen[i], true) {
                    return invalid(format!("index {i} repeated"));
                }
            }
            if mode == Mode::Permutation && indices.len() != n {
                return invalid(format!(
                    "length {} differs from alphabet size {n}",
                    indices.len()
                ));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cursor {
    Fresh,
    Running,
    Done,
}

/// Lazy lexicographic stream of every selection in one family.
///
/// State is the current index sequence; each step rewrites it in place.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    mode: Mode,
    current: Vec<usize>,
    cursor: Cursor,
}

/// Streams the family `(alphabet, p, mode)` in increasing lexicographic order.
///
/// Injective families with `p > n` yield an empty stream.
pub fn enumerate(alphabet: &Alphabet, p: usize, mode: Mode) -> Result<Enumeration> {
    Enumeration::new(alphabet.len(), p, mode)
}

impl Enumeration {
    pub fn new(n: usize, p: usize, mode: Mode) -> Result<Self> {
        if mode == Mode::Permutation && p != n {
            return Err(LacError::PermutationLengthMismatch { n, p });
        }
        let (current, cursor) = match mode {
            Mode::List if n == 0 && p > 0 => (Vec::new(), Cursor::Done),
            Mode::List => (vec![0; p], Cursor::Fresh),
            _ if p > n => (Vec::new(), Cursor::Done),
            _ => ((0..p).collect(), Cursor::Fresh),
        };
        Ok(Enumeration {
            n,
            mode,
            current,
            cursor,
        })
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        let s = &mut self.current;
        match self.mode {
            Mode::List => next_list(s, n),
            Mode::Combination => next_combination(s, n),
            Mode::Arrangement | Mode::Permutation => next_arrangement(s, n),
        }
    }
}

impl Iterator for Enumeration {
    type Item = Selection;

    fn next(&mut self) -> Option<Selection> {
        match self.cursor {
            Cursor::Done => return None,
            Cursor::Fresh => self.cursor = Cursor::Running,
            Cursor::Running => {
                if !self.advance() {
                    self.cursor = Cursor::Done;
                    return None;
                }
            }
        }
        Some(Selection::new_unchecked(self.current.clone(), self.mode))
    }
}

impl FusedIterator for Enumeration {}

// Odometer: bump the last digit that is below n - 1, reset the tail.
fn next_list(s: &mut [usize], n: usize) -> bool {
    for i in (0..s.len()).rev() {
        if s[i] + 1 < n {
            s[i] += 1;
            s[i + 1..].fill(0);
            return true;
        }
    }
    false
}

// Rightmost position that can still grow is the one with s[i] < n - p + i.
fn next_combination(s: &mut [usize], n: usize) -> bool {
    let p = s.len();
    for i in (0..p).rev() {
        if s[i] < n - p + i {
            s[i] += 1;
            for j in i + 1..p {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// Raise the rightmost position that has a larger value unused by its
// prefix, then fill the tail with the smallest unused values in order.
fn next_arrangement(s: &mut [usize], n: usize) -> bool {
    let p = s.len();
    for i in (0..p).rev() {
        let bump = (s[i] + 1..n).find(|v| !s[..i].contains(v));
        if let Some(v) = bump {
            s[i] = v;
            for j in i + 1..p {
                s[j] = (0..n)
                    .find(|v| !s[..j].contains(v))
                    .expect("p <= n leaves an unused value");
            }
            return true;
        }
    }
    false
}

/// 0-based position of `selection` in `enumerate(alphabet, selection.len(), mode)`.
///
/// Lists rank as base-`n` numbers, arrangements and permutations in the
/// mixed-radix factorial number system, combinations as a lexicographic
/// combinadic sum.
pub fn rank(selection: &Selection, alphabet: &Alphabet) -> Result<Natural> {
    let n = alphabet.len();
    let s = selection.indices();
    validate(s, selection.mode(), n)?;
    Ok(match selection.mode() {
        Mode::List => s
            .iter()
            .fold(Natural::zero(), |r, &d| r * n as u64 + d as u64),
        Mode::Arrangement | Mode::Permutation => {
            s.iter().enumerate().fold(Natural::zero(), |r, (i, &v)| {
                let smaller_unused = v - s[..i].iter().filter(|&&u| u < v).count();
                r * (n - i) as u64 + smaller_unused as u64
            })
        }
        Mode::Combination => {
            let p = s.len();
            let mut r = Natural::zero();
            let mut lo = 0;
            for (i, &v) in s.iter().enumerate() {
                // every combination that agrees up to i - 1 and places a
                // smaller value at position i comes first
                for skipped in lo..v {
                    r = r + count_combinations(LacParams::new(n - 1 - skipped, p - 1 - i));
                }
                lo = v + 1;
            }
            r
        }
    })
}

/// Inverse of [`rank`]: the selection at position `r` of the family.
pub fn unrank(r: &Natural, alphabet: &Alphabet, p: usize, mode: Mode) -> Result<Selection> {
    let n = alphabet.len();
    let count = count_mode(LacParams::new(n, p), mode)?;
    if *r >= count {
        return Err(LacError::RankOutOfRange {
            rank: r.clone(),
            count,
        });
    }
    let indices = match mode {
        Mode::List => {
            let radix = Natural::from(n);
            let mut rest = r.clone();
            let mut digits = vec![0; p];
            for d in digits.iter_mut().rev() {
                let (q, rem) = rest.div_rem(&radix);
                *d = small(&rem);
                rest = q;
            }
            digits
        }
        Mode::Arrangement | Mode::Permutation => {
            let mut rest = r.clone();
            let mut code = vec![0; p];
            for i in (0..p).rev() {
                let (q, rem) = rest.div_rem(&Natural::from(n - i));
                code[i] = small(&rem);
                rest = q;
            }
            let mut unused: Vec<usize> = (0..n).collect();
            code.into_iter().map(|c| unused.remove(c)).collect()
        }
        Mode::Combination => {
            let mut rest = r.clone();
            let mut out = Vec::with_capacity(p);
            let mut v = 0;
            for i in 0..p {
                // skip whole blocks of combinations that start with a smaller value
                loop {
                    let block = count_combinations(LacParams::new(n - 1 - v, p - 1 - i));
                    match rest.checked_sub(&block) {
                        Some(smaller) => {
                            rest = smaller;
                            v += 1;
                        }
                        None => break,
                    }
                }
                out.push(v);
                v += 1;
            }
            out
        }
    };
    Ok(Selection::new_unchecked(indices, mode))
}

fn small(v: &Natural) -> usize {
    v.to_usize()
        .expect("digit below alphabet size fits in usize")
}
