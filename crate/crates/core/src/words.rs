//! Double occurrence words and the word surgeries behind graph operations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("odd number of tokens ({0})")]
    OddLength(usize),
    #[error("letter {letter} occurs {count} times")]
    Unbalanced { letter: Letter, count: usize },
    #[error("offset {offset} out of range for a word of length {len}")]
    OffsetOutOfRange { offset: usize, len: usize },
    #[error("letter {0} does not occur in the word")]
    LetterAbsent(Letter),
    #[error("letter {0} occurs in both words")]
    SharedAlphabet(Letter),
    #[error("cycle words need at least 3 letters, got {0}")]
    CycleTooShort(usize),
    #[error("letter {0} is not in the word's alphabet")]
    UnknownLetter(Letter),
    #[error("word has {0} letters, more than a graph can hold")]
    TooManyLetters(usize),
}

/// A letter is an opaque token; letters compare by their token text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(token: impl Into<String>) -> Self {
        Letter(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Letter {
    fn from(s: &str) -> Self {
        Letter(s.to_owned())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// A sequence in which every letter occurs exactly twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    tokens: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { tokens: Vec::new() }
    }

    pub fn from_tokens(tokens: Vec<Letter>) -> Result<Self, WordError> {
        if tokens.len() % 2 == 1 {
            return Err(WordError::OddLength(tokens.len()));
        }
        let mut counts: HashMap<&Letter, usize> = HashMap::new();
        for t in &tokens {
            *counts.entry(t).or_default() += 1;
        }
        // report the smallest offending letter so errors are deterministic
        if let Some((letter, &count)) = counts.iter().filter(|(_, &c)| c != 2).min_by_key(|(l, _)| *l) {
            return Err(WordError::Unbalanced { letter: (*letter).clone(), count });
        }
        Ok(Word { tokens })
    }

    /// Whitespace-separated tokens, or one token per character when the
    /// text has no whitespace.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let text = text.trim();
        let tokens: Vec<Letter> = if text.contains(char::is_whitespace) {
            text.split_whitespace().map(Letter::from).collect()
        } else {
            text.chars().map(|c| Letter(c.to_string())).collect()
        };
        Word::from_tokens(tokens)
    }

    pub fn render(&self) -> String {
        let compact = self.tokens.iter().all(|t| t.0.chars().count() == 1);
        if compact {
            self.tokens.iter().map(|t| t.as_str()).collect()
        } else {
            self.tokens.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn tokens(&self) -> &[Letter] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Sorted letter set.
    pub fn letters(&self) -> Vec<Letter> {
        let set: BTreeSet<&Letter> = self.tokens.iter().collect();
        set.into_iter().cloned().collect()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.tokens.contains(letter)
    }

    fn positions(&self, letter: &Letter) -> Result<(usize, usize), WordError> {
        let mut it = self.tokens.iter().enumerate().filter(|(_, t)| *t == letter).map(|(i, _)| i);
        match (it.next(), it.next()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(WordError::LetterAbsent(letter.clone())),
        }
    }

    /// Letter indices into the sorted alphabet.
    fn indexed(&self) -> (Vec<Letter>, Vec<usize>) {
        let letters = self.letters();
        let index: HashMap<&Letter, usize> = letters.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let seq = self.tokens.iter().map(|t| index[t]).collect();
        (letters, seq)
    }

    /// Vertices are the letters (in sorted order); `a` and `b` are adjacent
    /// iff their occurrences alternate.
    pub fn interlacement(&self) -> Result<Graph, WordError> {
        let (letters, seq) = self.indexed();
        let n = letters.len();
        if n > crate::graph::MAX_VERTICES {
            return Err(WordError::TooManyLetters(n));
        }
        let mut g = Graph::with_names(letters.iter().map(|l| l.0.clone())).expect("distinct letters");
        for (a, b) in interlaced_pairs(&seq, n) {
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// `w_{i+1} ... w_{2n} w_1 ... w_i`.
    pub fn cyclic_shift(&self, offset: usize) -> Result<Word, WordError> {
        if offset >= self.len() {
            return Err(WordError::OffsetOutOfRange { offset, len: self.len() });
        }
        let mut tokens = self.tokens.clone();
        tokens.rotate_left(offset);
        Ok(Word { tokens })
    }

    pub fn reversed(&self) -> Word {
        Word { tokens: self.tokens.iter().rev().cloned().collect() }
    }

    /// Lexicographically least sequence among all rotations and reversed
    /// rotations; letters keep their identity.
    pub fn canonical_cyclic_form(&self) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let (letters, seq) = self.indexed();
        let best = least_dihedral_rotation(&seq);
        Word { tokens: best.into_iter().map(|i| letters[i].clone()).collect() }
    }

    pub fn cyclically_equivalent(&self, other: &Word) -> bool {
        self.len() == other.len() && self.canonical_cyclic_form() == other.canonical_cyclic_form()
    }

    pub fn delete_letter(&self, letter: &Letter) -> Result<Word, WordError> {
        if !self.contains(letter) {
            return Err(WordError::LetterAbsent(letter.clone()));
        }
        Ok(Word { tokens: self.tokens.iter().filter(|t| *t != letter).cloned().collect() })
    }

    /// Reverse the tokens strictly between the two occurrences of `letter`.
    pub fn reverse_between(&self, letter: &Letter) -> Result<Word, WordError> {
        let (a, b) = self.positions(letter)?;
        let mut tokens = self.tokens.clone();
        tokens[a + 1..b].reverse();
        Ok(Word { tokens })
    }

    /// Subsequence on the letters of `keep`.
    pub fn restrict(&self, keep: &BTreeSet<Letter>) -> Result<Word, WordError> {
        if let Some(missing) = keep.iter().find(|l| !self.contains(l)) {
            return Err(WordError::UnknownLetter(missing.clone()));
        }
        Ok(Word { tokens: self.tokens.iter().filter(|t| keep.contains(t)).cloned().collect() })
    }

    /// Concatenation of words on disjoint alphabets; realizes the disjoint
    /// union of the interlacement graphs.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if let Some(shared) = self.letters().into_iter().find(|l| other.contains(l)) {
            return Err(WordError::SharedAlphabet(shared));
        }
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        Ok(Word { tokens })
    }
}

/// Word on `left ∪ right` whose interlacement graph is the disjoint union of
/// theirs plus the single edge `a`–`b`.
///
/// `left` is rotated to end with the second occurrence of `a` and `right` to
/// start with the first occurrence of `b`; the two boundary tokens are then
/// swapped across the seam: `w_1 ... w_{2a-1} x_1 w_{2a} x_2 ... x_{2b}`.
pub fn join_single_edge(left: &Word, right: &Word, a: &Letter, b: &Letter) -> Result<Word, WordError> {
    if let Some(shared) = left.letters().into_iter().find(|l| right.contains(l)) {
        return Err(WordError::SharedAlphabet(shared));
    }
    let (_, a_second) = left.positions(a)?;
    let (b_first, _) = right.positions(b)?;
    let mut w = left.tokens.clone();
    let shift = (a_second + 1) % w.len();
    w.rotate_left(shift);
    let mut x = right.tokens.clone();
    x.rotate_left(b_first);
    let last = w.pop().expect("nonempty");
    let mut tokens = w;
    let mut x = x.into_iter();
    tokens.push(x.next().expect("nonempty"));
    tokens.push(last);
    tokens.extend(x);
    Ok(Word { tokens })
}

/// `v1 vc v2 v1 v3 v2 ... vc v(c-1)`, realizing the cycle `v1 v2 ... vc`.
pub fn cycle_word(c: usize) -> Result<Word, WordError> {
    if c < 3 {
        return Err(WordError::CycleTooShort(c));
    }
    let v = |i: usize| Letter(format!("v{i}"));
    let mut tokens = vec![v(1), v(c)];
    for i in 2..=c {
        tokens.push(v(i));
        tokens.push(v(i - 1));
    }
    Ok(Word { tokens })
}

/// Interlaced pairs `(a, b)` with `a < b` of an index sequence over `0..n`.
pub(crate) fn interlaced_pairs(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut first = vec![usize::MAX; n];
    let mut second = vec![usize::MAX; n];
    for (i, &x) in seq.iter().enumerate() {
        if first[x] == usize::MAX {
            first[x] = i;
        } else {
            second[x] = i;
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let inside = |p: usize| first[a] < p && p < second[a];
            if inside(first[b]) != inside(second[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

pub(crate) fn least_dihedral_rotation(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    let mut best: Option<Vec<usize>> = None;
    for base in [seq, rev.as_slice()] {
        for r in 0..len {
            let better = match &best {
                None => true,
                Some(b) => base[r..].iter().chain(&base[..r]).lt(b.iter()),
            };
            if better {
                best = Some(base[r..].iter().chain(&base[..r]).copied().collect());
            }
        }
    }
    best.unwrap_or_default()
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}
