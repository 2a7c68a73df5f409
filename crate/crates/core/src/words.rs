//! Alphabets, words, weights and the two orders used throughout the crate.
//!
//! Letters are stored as ranks `0..k`; rank `i` renders as the `(i+1)`-th
//! lowercase letter. The empty word renders as `-`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rendering of the empty word.
pub const EMPTY: &str = "-";

/// A totally ordered alphabet `a_1 < a_2 < ... < a_k`, letters stored by rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if size > 255 {
            return Err(Error::AlphabetUnsupported(size));
        }
        Ok(Alphabet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Parses the textual word format: lowercase letters, or `-` for the empty word.
    pub fn parse(&self, text: &str) -> Result<Word> {
        if self.size > 26 {
            return Err(Error::AlphabetTooLarge(self.size));
        }
        let text = text.trim();
        if text == EMPTY {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let rank = match c {
                'a'..='z' => c as u8 - b'a',
                _ => {
                    return Err(Error::LetterOutOfRange {
                        letter: c,
                        size: self.size,
                    })
                }
            };
            if rank as usize >= self.size {
                return Err(Error::LetterOutOfRange {
                    letter: c,
                    size: self.size,
                });
            }
            letters.push(rank);
        }
        Ok(Word(letters))
    }

    /// Builds a word from ranks, checking each one against the alphabet.
    pub fn word(&self, ranks: &[u8]) -> Result<Word> {
        if let Some(&rank) = ranks.iter().find(|&&r| r as usize >= self.size) {
            return Err(Error::RankOutOfRange { rank, size: self.size });
        }
        Ok(Word(ranks.to_vec()))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.iter().all(|&r| (r as usize) < self.size)
    }

    /// All `k^n` words of length `n` in lexicographic order.
    pub fn words_of_length(&self, n: usize) -> WordsOfLength {
        WordsOfLength {
            size: self.size as u8,
            current: Some(vec![0; n]),
        }
    }
}

/// Smallest alphabet containing every letter of `w` (at least one letter).
pub fn minimal_alphabet(w: &Word) -> Alphabet {
    let size = w.iter().map(|&r| r as usize + 1).max().unwrap_or(1);
    Alphabet { size }
}

/// Odometer over all words of a fixed length.
pub struct WordsOfLength {
    size: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.size {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(Word(out))
    }
}

/// A finite word. Derived `Ord` is the lexicographic order in which a proper
/// prefix is smaller than its extensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ranks(ranks: Vec<u8>) -> Self {
        Word(ranks)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    /// Suffix starting at 0-based position `from`.
    pub fn suffix(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn concat<'a, I>(parts: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        Word(out)
    }

    pub fn join(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Cyclic rotation starting at position `offset`.
    pub fn rotation(&self, offset: usize) -> Word {
        let n = self.0.len();
        Word((0..n).map(|i| self.0[(offset + i) % n]).collect())
    }

    /// True iff the word is not a proper power `r^j`, `j >= 2`.
    pub fn is_primitive(&self) -> bool {
        let n = self.0.len();
        if n == 0 {
            return false;
        }
        (1..n)
            .filter(|d| n.is_multiple_of(*d))
            .all(|d| (d..n).any(|i| self.0[i] != self.0[i - d]))
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EMPTY);
        }
        for &r in &self.0 {
            if r < 26 {
                write!(f, "{}", (b'a' + r) as char)?;
            } else {
                write!(f, "{{{}}}", r)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses over the full 26-letter alphabet.
    fn from_str(s: &str) -> Result<Word> {
        Alphabet { size: 26 }.parse(s)
    }
}

/// A word or the sentinel `∞`, which is greater than every word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(Word),
    Infinity,
}

impl Bound {
    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Bound::Finite(w) => Some(w),
            Bound::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Bound::Infinity)
    }
}

impl From<Word> for Bound {
    fn from(w: Word) -> Self {
        Bound::Finite(w)
    }
}

impl From<Option<Word>> for Bound {
    fn from(w: Option<Word>) -> Self {
        w.map_or(Bound::Infinity, Bound::Finite)
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialEq<Word> for Bound {
    fn eq(&self, other: &Word) -> bool {
        self.as_word() == Some(other)
    }
}

impl PartialOrd<Word> for Bound {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(match self {
            Bound::Finite(w) => w.cmp(other),
            Bound::Infinity => Ordering::Greater,
        })
    }
}

impl PartialEq<Bound> for Word {
    fn eq(&self, other: &Bound) -> bool {
        other == self
    }
}

impl PartialOrd<Bound> for Word {
    fn partial_cmp(&self, other: &Bound) -> Option<Ordering> {
        other.partial_cmp(self).map(Ordering::reverse)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(w) => w.fmt(f),
            Bound::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Bound> {
        match s.trim() {
            "inf" | "∞" => Ok(Bound::Infinity),
            t => Ok(Bound::Finite(t.parse()?)),
        }
    }
}

/// Lexicographic comparison of words extended by `∞`.
pub fn lex_compare(u: &Bound, v: &Bound) -> Ordering {
    match (u, v) {
        (Bound::Infinity, Bound::Infinity) => Ordering::Equal,
        (Bound::Infinity, _) => Ordering::Greater,
        (_, Bound::Infinity) => Ordering::Less,
        (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
    }
}

/// Compares the periodic sequences `uuu...` and `vvv...` under the alternating
/// lexicographic order.
///
/// The first difference at 1-based position `i` decides: the letters compare
/// normally when `i` is odd and reversed when `i` is even. Sequences agreeing on
/// `|u| + |v|` letters are identical (Fine–Wilf).
pub fn alt_lex_compare_periodic(u: &Word, v: &Word) -> Result<Ordering> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(alt_lex_compare_rotations(u, 0, v, 0))
}

/// Alternating comparison of the periodic sequences read from `u` at `a` and
/// from `v` at `b`. Both words must be nonempty.
pub(crate) fn alt_lex_compare_rotations(u: &Word, a: usize, v: &Word, b: usize) -> Ordering {
    let (p, q) = (u.len(), v.len());
    for i in 0..p + q {
        let x = u[(a + i) % p];
        let y = v[(b + i) % q];
        if x != y {
            let ord = x.cmp(&y);
            // i is 0-based; 1-based position i+1 is even when i is odd
            return if i % 2 == 0 { ord } else { ord.reverse() };
        }
    }
    Ordering::Equal
}

/// Plain lexicographic comparison of periodic sequences, same window rule.
pub(crate) fn lex_compare_rotations(u: &Word, a: usize, v: &Word, b: usize) -> Ordering {
    let (p, q) = (u.len(), v.len());
    for i in 0..p + q {
        let ord = u[(a + i) % p].cmp(&v[(b + i) % q]);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// Letter counts `(α_1, ..., α_k)`; the exponent vector of the monomial `wt(w)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str(")")
    }
}

pub fn weight(w: &Word, alphabet: Alphabet) -> WeightVector {
    let mut counts = vec![0; alphabet.size()];
    for &r in w.iter() {
        counts[r as usize] += 1;
    }
    WeightVector(counts)
}
