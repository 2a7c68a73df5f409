//! Necklace encodings of permutations.
//!
//! Given `S ⊆ [n-1]`, values `1..=s_1` become `a`, `s_1+1..=s_2` become `b`, and
//! so on. Relabeling the cycles of `π` this way yields a multiset of primitive
//! necklaces. [`phi`] applies to permutations with `Des(π) ⊆ S` and is inverted
//! by ranking positions under the lexicographic order of their periodic labels;
//! [`xi`] applies to odd-cycle permutations with `Asc(π) ⊆ S` and is inverted
//! with the alternating lexicographic order instead.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyndon::{is_lyndon, lyndon_factors};
use crate::perms::{CycleForm, Permutation};
use crate::words::{alt_lex_compare_rotations, lex_compare_rotations, weight, Alphabet, Word};

/// A subset `S = {s_1 < ... < s_{k-1}} ⊆ [n-1]` together with `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subset {
    n: usize,
    elements: Vec<usize>,
}

impl Subset {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset("n must be positive".into()));
        }
        elements.sort_unstable();
        if elements.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidSubset(format!("repeated element in {:?}", elements)));
        }
        if let Some(&bad) = elements.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::InvalidSubset(format!("{} is outside [1, {}]", bad, n - 1)));
        }
        Ok(Subset { n, elements })
    }

    pub fn full(n: usize) -> Self {
        Subset {
            n,
            elements: (1..n).collect(),
        }
    }

    /// Subset of `[n-1]` encoded by a bitmask, bit `i-1` for element `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Subset {
            n,
            elements: (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        }
    }

    /// Parses `4,7` (empty string for `∅`).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let elements = text
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("`{}`: {}", t, e))))
            .collect::<Result<Vec<usize>>>()?;
        Subset::new(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &s| m | 1 << (s - 1))
    }

    pub fn contains_all(&self, other: &[usize]) -> bool {
        other.iter().all(|x| self.elements.binary_search(x).is_ok())
    }

    /// `α(S) = (s_1, s_2 - s_1, ..., n - s_{k-1})`.
    pub fn composition(&self) -> Vec<usize> {
        let mut prev = 0;
        let mut parts: Vec<usize> = self
            .elements
            .iter()
            .map(|&s| {
                let part = s - prev;
                prev = s;
                part
            })
            .collect();
        parts.push(self.n - prev);
        parts
    }

    /// The alphabet `a_1 < ... < a_k`, `k = |S| + 1`.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.elements.len() + 1).expect("subset of [n-1] with n <= 256")
    }

    /// Letter rank replacing value `v`: `i` with `s_i < v <= s_{i+1}` (0-based).
    pub fn letter_of_value(&self, v: usize) -> Result<u8> {
        if v == 0 || v > self.n {
            return Err(Error::ValueOutOfRange { value: v, n: self.n });
        }
        Ok(self.elements.partition_point(|&s| s < v) as u8)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s)?;
        }
        f.write_str("}")
    }
}

/// Lexicographically least rotation of `w` and its offset.
pub fn minimal_rotation(w: &Word) -> (Word, usize) {
    (0..w.len().max(1))
        .map(|o| (w.rotation(o), o))
        .min()
        .unwrap_or((Word::empty(), 0))
}

/// A multiset of primitive necklaces, each stored as its Lyndon representative,
/// kept in weakly decreasing order so that concatenation gives the Lyndon
/// factorization of the associated word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NecklaceMultiset {
    necklaces: Vec<Word>,
}

impl NecklaceMultiset {
    /// Canonicalizes each necklace; rejects empty or non-primitive ones.
    pub fn new(necklaces: Vec<Word>) -> Result<Self> {
        let mut canonical = Vec::with_capacity(necklaces.len());
        for w in necklaces {
            if !w.is_primitive() {
                return Err(Error::InvalidNecklaces(format!("({}) is not primitive", w)));
            }
            canonical.push(minimal_rotation(&w).0);
        }
        canonical.sort_unstable_by(|a, b| b.cmp(a));
        Ok(NecklaceMultiset { necklaces: canonical })
    }

    /// Reads a multiset off the Lyndon factorization of `w`.
    pub fn from_word(w: &Word) -> Self {
        NecklaceMultiset {
            necklaces: lyndon_factors(w),
        }
    }

    /// Concatenation of the representatives in weakly decreasing order.
    pub fn to_word(&self) -> Word {
        Word::concat(&self.necklaces)
    }

    pub fn necklaces(&self) -> &[Word] {
        &self.necklaces
    }

    /// Distinct representatives with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(&Word, usize)> {
        let mut out: Vec<(&Word, usize)> = Vec::new();
        for w in &self.necklaces {
            match out.last_mut() {
                Some((last, count)) if *last == w => *count += 1,
                _ => out.push((w, 1)),
            }
        }
        out
    }

    pub fn total_length(&self) -> usize {
        self.necklaces.iter().map(|w| w.len()).sum()
    }

    pub fn cycle_structure(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.necklaces.iter().map(|w| w.len()).collect();
        lens.sort_unstable();
        lens
    }

    fn check_weight(&self, set: &Subset) -> Result<()> {
        let expected = set.composition();
        let word = self.to_word();
        let alphabet = set.alphabet();
        let found = if alphabet.contains(&word) {
            weight(&word, alphabet).0
        } else {
            weight(&word, crate::words::minimal_alphabet(&word)).0
        };
        if found != expected {
            return Err(Error::WeightMismatch { expected, found });
        }
        Ok(())
    }
}

impl fmt::Display for NecklaceMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.necklaces.is_empty() {
            return f.write_str(crate::words::EMPTY);
        }
        for w in &self.necklaces {
            f.write_str("(")?;
            for (i, l) in w.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", Word::from_ranks(vec![*l]))?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for NecklaceMultiset {
    type Err = Error;

    /// Parses `(a,b)(a,b)(a,a,b,c)`; commas inside a necklace are optional.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut necklaces = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (body, tail) = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed necklace list `{}`", s)))?;
            let letters: String = body.chars().filter(|&c| c != ',').collect();
            if letters.is_empty() {
                return Err(Error::InvalidNecklaces("empty necklace".into()));
            }
            necklaces.push(letters.parse::<Word>()?);
            rest = tail;
        }
        NecklaceMultiset::new(necklaces)
    }
}

fn relabel_cycles(set: &Subset, pi: &Permutation) -> Result<Vec<Word>> {
    pi.cycles()
        .iter()
        .map(|c| {
            c.iter()
                .map(|&v| set.letter_of_value(v))
                .collect::<Result<Vec<u8>>>()
                .map(Word::from_ranks)
        })
        .collect()
}

fn check_size(set: &Subset, n: usize) -> Result<()> {
    if set.n() != n {
        return Err(Error::ParameterMismatch(format!(
            "subset is over [{}] but the permutation has length {}",
            set.n(),
            n
        )));
    }
    Ok(())
}

/// Gessel–Reutenauer map: relabels the cycles of `π` (with `Des(π) ⊆ S`).
pub fn phi(set: &Subset, pi: &Permutation) -> Result<NecklaceMultiset> {
    check_size(set, pi.len())?;
    let des = pi.boundary_sets().descents;
    if !set.contains_all(&des) {
        return Err(Error::DescentsNotInSet {
            des,
            set: set.elements().to_vec(),
        });
    }
    NecklaceMultiset::new(relabel_cycles(set, pi)?)
}

/// Ranks every position of every necklace by `order` on periodic labels and
/// reads each necklace as a cycle. Among identical labels, which only arise
/// from repeated copies of a necklace, the copy listed later ranks lower.
fn rank_positions<F>(m: &NecklaceMultiset, order: F) -> CycleForm
where
    F: Fn(&Word, usize, &Word, usize) -> Ordering,
{
    let ws = m.necklaces();
    let mut positions: Vec<(usize, usize)> = ws
        .iter()
        .enumerate()
        .flat_map(|(f, w)| (0..w.len()).map(move |o| (f, o)))
        .collect();
    positions.sort_by(|&(f, a), &(g, b)| order(&ws[f], a, &ws[g], b).then(g.cmp(&f)));
    let mut cycles: Vec<Vec<usize>> = ws.iter().map(|w| vec![0; w.len()]).collect();
    for (rank, &(f, o)) in positions.iter().enumerate() {
        cycles[f][o] = rank + 1;
    }
    CycleForm { cycles }
}

/// Inverse of [`phi`]: plain lexicographic ranking of periodic labels. The
/// returned cycles follow the necklace order, each starting at the first
/// letter of its Lyndon representative.
pub fn phi_inv(set: &Subset, m: &NecklaceMultiset) -> Result<CycleForm> {
    m.check_weight(set)?;
    Ok(rank_positions(m, lex_compare_rotations))
}

/// Relabels the cycles of `π ∈ S^o_n` with `Asc(π) ⊆ S`. The resulting
/// necklaces are odd, primitive and pairwise distinct.
pub fn xi(set: &Subset, pi: &Permutation) -> Result<NecklaceMultiset> {
    check_size(set, pi.len())?;
    if !pi.classify_parity().is_odd() {
        return Err(Error::WrongParityClass(format!("{} has an even cycle", pi)));
    }
    let asc = pi.boundary_sets().ascents;
    if !set.contains_all(&asc) {
        return Err(Error::AscentsNotInSet {
            asc,
            set: set.elements().to_vec(),
        });
    }
    NecklaceMultiset::new(relabel_cycles(set, pi)?)
}

/// Inverse of [`xi`]: ranking by the alternating lexicographic order, which
/// has no ties on distinct primitive necklaces.
pub fn xi_inv(set: &Subset, m: &NecklaceMultiset) -> Result<CycleForm> {
    if let Some(w) = m.necklaces().iter().find(|w| w.is_even()) {
        return Err(Error::InvalidNecklaces(format!("({}) has even length", w)));
    }
    if let Some((w, _)) = m.multiplicities().into_iter().find(|&(_, c)| c > 1) {
        return Err(Error::InvalidNecklaces(format!("({}) is repeated", w)));
    }
    debug_assert!(m.necklaces().iter().all(is_lyndon));
    m.check_weight(set)?;
    Ok(rank_positions(m, alt_lex_compare_rotations))
}
