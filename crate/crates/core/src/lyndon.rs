//! Lyndon words: predicates, the Lyndon factorization, standard and iterated
//! standard factorizations, and enumeration.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Bound, Word};

/// Separator rendered between Lyndon factors.
pub const FACTOR_BAR: char = '|';
/// ASCII stand-in for the dashed bar marking standard and iterated standard
/// factorizations.
pub const DASHED_BAR: char = '!';

/// True iff `w` is nonempty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w.letters() < &w[i..])
}

/// Weakly decreasing sequence of Lyndon words whose concatenation is the source word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LyndonFactorization {
    factors: Vec<Word>,
}

impl LyndonFactorization {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// 1-based start position of each factor.
    pub fn starts(&self) -> Vec<usize> {
        let mut pos = 1;
        self.factors
            .iter()
            .map(|f| {
                let p = pos;
                pos += f.len();
                p
            })
            .collect()
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.factors)
    }
}

impl fmt::Display for LyndonFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.factors, FACTOR_BAR)
    }
}

pub(crate) fn write_joined(f: &mut impl fmt::Write, parts: &[Word], sep: char) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str(crate::words::EMPTY);
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_char(sep)?;
        }
        write!(f, "{}", p)?;
    }
    Ok(())
}

/// Lyndon factors of `w` by Duval's algorithm; empty for the empty word.
pub fn lyndon_factors(w: &Word) -> Vec<Word> {
    let s = w.letters();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(Word::from_ranks(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    factors
}

pub fn lyndon_factorize(w: &Word) -> Result<LyndonFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(LyndonFactorization {
        factors: lyndon_factors(w),
    })
}

/// 1-based positions `q` whose suffix is smaller than every earlier suffix.
/// These are exactly the start positions of the Lyndon factors.
pub fn factor_starts_via_suffix_minima(w: &Word) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut starts = Vec::new();
    let mut best: Option<&[u8]> = None;
    for q in 0..w.len() {
        let suffix = &w[q..];
        if best.is_none_or(|b| suffix < b) {
            starts.push(q + 1);
            best = Some(suffix);
        }
    }
    Ok(starts)
}

/// 0-based start of the lexicographically smallest proper suffix, if `|w| >= 2`.
pub fn smallest_proper_suffix(w: &Word) -> Option<usize> {
    (1..w.len()).min_by(|&a, &b| w[a..].cmp(&w[b..]))
}

/// `ℓ = r s` with `s` the smallest (equivalently longest Lyndon) proper suffix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardFactorization {
    pub r: Word,
    pub s: Word,
}

impl fmt::Display for StandardFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.r, DASHED_BAR, self.s)
    }
}

pub fn standard_factorization(l: &Word) -> Result<StandardFactorization> {
    if !is_lyndon(l) {
        return Err(Error::NotLyndon(l.to_string()));
    }
    split_smallest_suffix(l).ok_or_else(|| Error::TooShort(l.to_string()))
}

/// Splits off the smallest proper suffix without checking that `w` is Lyndon.
pub(crate) fn split_smallest_suffix(w: &Word) -> Option<StandardFactorization> {
    let at = smallest_proper_suffix(w)?;
    Some(StandardFactorization {
        r: w.prefix(at),
        s: w.suffix(at),
    })
}

/// Iterated standard factorization `ℓ = r_j s_j s_{j-1} ... s_1` with respect
/// to a reference word `u` (or `∞`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsfDecomposition {
    head: Word,
    /// Removed suffixes in removal order: `s_1, s_2, ..., s_j`.
    removed: Vec<Word>,
    reference: Bound,
}

impl IsfDecomposition {
    /// `r_j`.
    pub fn head(&self) -> &Word {
        &self.head
    }

    /// `j`, the number of removed suffixes.
    pub fn depth(&self) -> usize {
        self.removed.len()
    }

    /// `s_i` for `1 <= i <= j`.
    pub fn s(&self, i: usize) -> &Word {
        &self.removed[i - 1]
    }

    /// `s_j`, the suffix that stopped the process.
    pub fn last(&self) -> &Word {
        self.removed.last().expect("ISF removes at least one suffix")
    }

    /// `s_j, s_{j-1}, ..., s_1` in left-to-right order.
    pub fn tail(&self) -> Vec<Word> {
        self.removed.iter().rev().cloned().collect()
    }

    /// `s_{j-1} ... s_1` concatenated.
    pub fn inner_tail(&self) -> Word {
        Word::concat(self.removed[..self.removed.len() - 1].iter().rev())
    }

    pub fn reference(&self) -> &Bound {
        &self.reference
    }

    /// `r_j, s_j, ..., s_1`.
    pub fn pieces(&self) -> Vec<Word> {
        let mut out = vec![self.head.clone()];
        out.extend(self.tail());
        out
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.pieces())
    }
}

impl fmt::Display for IsfDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.pieces(), DASHED_BAR)
    }
}

/// Repeatedly removes the smallest proper suffix while it is even and smaller
/// than `u`; the first suffix that is odd or `>= u` ends the process.
pub fn isf(l: &Word, u: &Bound) -> Result<IsfDecomposition> {
    if !is_lyndon(l) {
        return Err(Error::NotLyndon(l.to_string()));
    }
    if l.len() < 2 {
        return Err(Error::TooShort(l.to_string()));
    }
    let mut remainder = l.clone();
    let mut removed = Vec::new();
    loop {
        let Some(StandardFactorization { r, s }) = split_smallest_suffix(&remainder) else {
            return Err(Error::IsfExhausted {
                word: l.to_string(),
                remainder: remainder.to_string(),
            });
        };
        let keep_going = s.is_even() && s < *u;
        removed.push(s);
        remainder = r;
        if !keep_going {
            return Ok(IsfDecomposition {
                head: remainder,
                removed,
                reference: u.clone(),
            });
        }
    }
}

/// Lyndon words of length at most `max_len`, in lexicographic order
/// (Duval's generation algorithm).
pub fn enumerate_lyndon_words(alphabet: Alphabet, max_len: usize) -> LyndonWords {
    LyndonWords {
        top: (alphabet.size() - 1) as u8,
        max_len,
        current: if max_len == 0 { Vec::new() } else { vec![0] },
    }
}

#[derive(Debug, Clone)]
pub struct LyndonWords {
    top: u8,
    max_len: usize,
    current: Vec<u8>,
}

impl Iterator for LyndonWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.current.is_empty() {
            return None;
        }
        let out = Word::from_ranks(self.current.clone());
        let w = &mut self.current;
        let period = w.len();
        while w.len() < self.max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&self.top) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn fact(s: &str) -> String {
        lyndon_factorize(&w(s)).unwrap().to_string()
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&w("aabc")));
        assert!(!is_lyndon(&w("aa")));
        assert!(is_lyndon(&w("c")));
        assert!(!is_lyndon(&Word::empty()));
        assert!(!is_lyndon(&w("ba")));
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(fact("dadccdbccc"), "d|adccdbccc");
        assert_eq!(fact("cdcdadbccc"), "cd|cd|adbccc");
        assert_eq!(fact("aaa"), "a|a|a");
        assert_eq!(lyndon_factorize(&Word::empty()), Err(Error::EmptyWord));
        assert!(lyndon_factors(&Word::empty()).is_empty());
    }

    #[test]
    fn suffix_minima_examples() {
        assert_eq!(factor_starts_via_suffix_minima(&w("dadccdbccc")).unwrap(), vec![1, 2]);
        assert_eq!(factor_starts_via_suffix_minima(&w("abc")).unwrap(), vec![1]);
        assert_eq!(factor_starts_via_suffix_minima(&w("cba")).unwrap(), vec![1, 2, 3]);
        assert_eq!(factor_starts_via_suffix_minima(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn standard_factorization_examples() {
        let sf = standard_factorization(&w("adccdbccc")).unwrap();
        assert_eq!((sf.r.to_string(), sf.s.to_string()), ("adccd".into(), "bccc".into()));
        assert_eq!(standard_factorization(&w("abacabc")).unwrap().to_string(), "abac!abc");
        assert_eq!(standard_factorization(&w("ab")).unwrap().to_string(), "a!b");
        assert!(matches!(standard_factorization(&w("a")), Err(Error::TooShort(_))));
        assert!(matches!(standard_factorization(&w("ba")), Err(Error::NotLyndon(_))));
    }

    #[test]
    fn isf_examples() {
        let u = |s: &str| Bound::Finite(w(s));
        assert_eq!(isf(&w("adbccc"), &u("ccd")).unwrap().to_string(), "a!d!bccc");
        assert_eq!(isf(&w("ccedcd"), &u("dde")).unwrap().to_string(), "c!ced!cd");
        let l = w("adcdbcdcbcbc");
        let d = isf(&l, &u("c")).unwrap();
        assert_eq!(d.to_string(), "ad!cd!bcdc!bc!bc");
        assert_eq!(d.depth(), 4);
        assert_eq!(d.s(4), &w("cd"));
        assert_eq!(isf(&l, &Bound::Infinity).unwrap().to_string(), "a!d!cd!bcdc!bc!bc");
    }

    #[test]
    fn isf_errors() {
        assert!(matches!(isf(&w("a"), &Bound::Infinity), Err(Error::TooShort(_))));
        assert!(matches!(isf(&w("ba"), &Bound::Infinity), Err(Error::NotLyndon(_))));
        // abb: smallest proper suffix b is odd, stops at once
        assert_eq!(isf(&w("abb"), &Bound::Infinity).unwrap().to_string(), "ab!b");
        // aabab -> aab!ab -> a!ab!ab, both removed suffixes even
        assert!(matches!(
            isf(&w("aabab"), &Bound::Infinity),
            Err(Error::IsfExhausted { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let names = |k, n| -> Vec<String> { enumerate_lyndon_words(k, n).map(|w| w.to_string()).collect() };
        assert_eq!(names(k2, 2), ["a", "ab", "b"]);
        assert_eq!(names(k2, 3), ["a", "aab", "ab", "abb", "b"]);
        assert_eq!(names(Alphabet::new(1).unwrap(), 5), ["a"]);
    }

    #[test]
    fn enumeration_matches_filter() {
        for k in 1..=3 {
            let alphabet = Alphabet::new(k).unwrap();
            for n in 1..=6 {
                let mut expected: Vec<Word> = (1..=n)
                    .flat_map(|len| alphabet.words_of_length(len))
                    .filter(is_lyndon)
                    .collect();
                expected.sort();
                let got: Vec<Word> = enumerate_lyndon_words(alphabet, n).collect();
                assert_eq!(got, expected, "k={k} n={n}");
            }
        }
    }
}
