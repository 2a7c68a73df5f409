//! Permutations of `[n]`: one-line and cycle forms, descent and ascent sets,
//! cycle-parity classes, Bóna's odd-to-even map and the hat transform.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `[n]`, stored in one-line notation with 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {} repeated", v)));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Builds a permutation from disjoint cycles covering `[n]`, `n` = total length.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut one_line = vec![0; n];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidPermutation("empty cycle".into()));
            }
            for (i, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::ValueOutOfRange { value: v, n });
                }
                if one_line[v - 1] != 0 {
                    return Err(Error::InvalidPermutation(format!("value {} repeated", v)));
                }
                one_line[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { one_line })
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    pub fn cycle_form(&self, policy: CyclePolicy) -> CycleForm {
        let mut cycles = self.cycles();
        match policy {
            CyclePolicy::LargestFirstAscending => {
                for c in &mut cycles {
                    let at = argmax(c);
                    c.rotate_left(at);
                }
                cycles.sort_by_key(|c| c[0]);
            }
            CyclePolicy::SmallestFirstDescending => {
                // cycles() already starts each cycle at its minimum
                cycles.sort_by_key(|c| std::cmp::Reverse(c[0]));
            }
        }
        CycleForm { cycles }
    }

    pub fn boundary_sets(&self) -> BoundarySets {
        let mut descents = Vec::new();
        let mut ascents = Vec::new();
        for (i, pair) in self.one_line.windows(2).enumerate() {
            if pair[0] > pair[1] {
                descents.push(i + 1);
            } else {
                ascents.push(i + 1);
            }
        }
        BoundarySets {
            n: self.len(),
            descents,
            ascents,
        }
    }

    /// Descent set as a bitmask, bit `i-1` for descent `i`.
    pub fn descent_mask(&self) -> u64 {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn classify_parity(&self) -> ParityClass {
        classify_cycle_lengths(self.cycles().iter().map(Vec::len))
    }
}

fn argmax(c: &[usize]) -> usize {
    c.iter().enumerate().max_by_key(|&(_, v)| v).map_or(0, |(i, _)| i)
}

/// Classifies a cycle type (also used for Lyndon factor lengths).
pub(crate) fn classify_cycle_lengths(lengths: impl IntoIterator<Item = usize>) -> ParityClass {
    let mut all_odd = true;
    let mut singletons = 0;
    let mut other_odd = false;
    for len in lengths {
        if len % 2 == 1 {
            if len == 1 {
                singletons += 1;
            } else {
                other_odd = true;
            }
        } else {
            all_odd = false;
        }
    }
    let all_even = !other_odd && singletons <= 1;
    match (all_odd, all_even) {
        (true, true) => ParityClass::Both,
        (true, false) => ParityClass::OddCycles,
        (false, true) => ParityClass::EvenCycles,
        (false, false) => ParityClass::Neither,
    }
}

/// Which of `S^o_n` (all cycles odd) and `S^e_n` (all cycles even except at
/// most one fixed point) a permutation belongs to. Only the identity of `[1]`
/// (and the empty permutation) lies in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    OddCycles,
    EvenCycles,
    Both,
    Neither,
}

impl ParityClass {
    pub fn is_odd(self) -> bool {
        matches!(self, ParityClass::OddCycles | ParityClass::Both)
    }

    pub fn is_even(self) -> bool {
        matches!(self, ParityClass::EvenCycles | ParityClass::Both)
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::OddCycles => "odd-cycles",
            ParityClass::EvenCycles => "even-cycles",
            ParityClass::Both => "both",
            ParityClass::Neither => "neither",
        })
    }
}

/// Presentation conventions for cycle notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclePolicy {
    /// Each cycle starts with its largest element; cycles by increasing first element.
    LargestFirstAscending,
    /// Each cycle starts with its smallest element; cycles by decreasing first element.
    SmallestFirstDescending,
}

/// A permutation presented as an explicit sequence of cycles. The order of
/// cycles and their starting points are part of the value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleForm {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(&self.cycles)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<CycleForm> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation `{}`", s)))?;
            let cycle = body
                .0
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("`{}`: {}", t, e))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body.1;
        }
        if cycles.is_empty() {
            return Err(Error::Parse("no cycles".into()));
        }
        let form = CycleForm { cycles };
        form.to_permutation()?;
        Ok(form)
    }
}

impl fmt::Display for Permutation {
    /// One-line notation; values are concatenated when `n <= 9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { " " };
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts cycle notation `(3,6)(2,5)(1,4,7,8)`, space- or comma-separated
    /// one-line notation, or concatenated single digits `45672381`.
    fn from_str(s: &str) -> Result<Permutation> {
        let t = s.trim();
        if t.starts_with('(') {
            return t.parse::<CycleForm>()?.to_permutation();
        }
        let values: Vec<usize> = if t.contains(|c: char| c.is_whitespace() || c == ',') {
            t.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|e| Error::Parse(format!("`{}`: {}", p, e))))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {:?}", c)))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// `Des(π)` and `Asc(π)`, complementary subsets of `[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundarySets {
    pub n: usize,
    pub descents: Vec<usize>,
    pub ascents: Vec<usize>,
}

/// `|S^o_n| = |S^e_n|`: `(n-1)!!^2` for even `n`, `n (n-2)!!^2` for odd `n`.
pub fn parity_class_size(n: usize) -> u64 {
    fn double_factorial(m: i64) -> u64 {
        (1..=m).rev().step_by(2).map(|x| x as u64).product()
    }
    let n = n as i64;
    if n % 2 == 0 {
        double_factorial(n - 1).pow(2)
    } else {
        n as u64 * double_factorial(n - 2).pow(2)
    }
}

/// Bóna's bijection `S^o_n -> S^e_n` for even `n`: write `π` with each cycle
/// starting at its largest element and cycles in increasing order of first
/// element, then move the last element of `C_{2i-1}` to the end of `C_{2i}`.
pub fn bona_map(pi: &Permutation) -> Result<Permutation> {
    let n = pi.len();
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if !pi.classify_parity().is_odd() {
        return Err(Error::WrongParityClass(format!("{} does not have only odd cycles", pi)));
    }
    let mut cycles = pi.cycle_form(CyclePolicy::LargestFirstAscending).cycles;
    for pair in cycles.chunks_mut(2) {
        if let [first, second] = pair {
            let moved = first.pop().expect("cycles are nonempty");
            second.push(moved);
        }
    }
    cycles.retain(|c| !c.is_empty());
    Permutation::from_cycles(&cycles)
}

/// `π̂`: cycles starting at their smallest element, ordered by decreasing first
/// element, parentheses removed.
pub fn foata_hat(pi: &Permutation) -> Permutation {
    let form = pi.cycle_form(CyclePolicy::SmallestFirstDescending);
    Permutation {
        one_line: form.cycles.concat(),
    }
}

/// Inverse of [`foata_hat`]: left-to-right minima of `π̂` open the cycles.
pub fn foata_hat_inverse(hat: &Permutation) -> Permutation {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut min = usize::MAX;
    for &v in hat.one_line() {
        if v < min {
            min = v;
            cycles.push(Vec::new());
        }
        cycles.last_mut().unwrap().push(v);
    }
    Permutation::from_cycles(&cycles).expect("hat word is a permutation")
}

/// 1-based positions of the left-to-right minima of a sequence.
pub fn left_to_right_minima(values: &[usize]) -> Vec<usize> {
    let mut min = usize::MAX;
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if v < min {
            min = v;
            out.push(i + 1);
        }
    }
    out
}

/// All permutations of `[n]` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: Some((1..=n).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        let n = a.len();
        if let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) {
            let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
            a.swap(i, j);
            a[i + 1..].reverse();
            self.next = Some(a);
        }
        Some(Permutation { one_line: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(p("45672381").boundary_sets().descents, vec![4, 7]);
        assert_eq!(p("86325417").boundary_sets().ascents, vec![4, 7]);
        let id = Permutation::identity(5).boundary_sets();
        assert!(id.descents.is_empty());
        assert_eq!(id.ascents, vec![1, 2, 3, 4]);
        assert_eq!(p("45672381").descent_mask(), 0b1001000);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(p("(3,6)(2,5)(1,4,7,8)").classify_parity(), ParityClass::EvenCycles);
        assert_eq!(p("(5)(3)(2,6,4)(1,8,7)").classify_parity(), ParityClass::OddCycles);
        assert_eq!(p("12").classify_parity(), ParityClass::OddCycles);
        assert_eq!(p("213").classify_parity(), ParityClass::EvenCycles);
        assert_eq!(p("2134").classify_parity(), ParityClass::Neither);
        assert_eq!(p("1").classify_parity(), ParityClass::Both);
    }

    #[test]
    fn codec() {
        assert_eq!(p("(3,6)(2,5)(1,4,7,8)"), p("45672381"));
        assert_eq!(p("4 5 6 7 2 3 8 1"), p("45672381"));
        assert_eq!(p("1 2 3"), Permutation::identity(3));
        assert!(matches!(
            "2 2 3".parse::<Permutation>(),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            "1 4 2".parse::<Permutation>(),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            "(1,2)(4)".parse::<Permutation>(),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!("(1,2".parse::<Permutation>().is_err());
        let big = p("2 3 9 10 11 8 12 16 1 4 5 6 7 14 17 13 15");
        assert_eq!(big.to_string(), "2 3 9 10 11 8 12 16 1 4 5 6 7 14 17 13 15");
        assert_eq!(big, p("(15,17)(14)(6,8,16,13,7,12)(5,11)(4,10)(1,2,3,9)"));
        let form: CycleForm = "(3,6)(2,5)(1,4,7,8)".parse().unwrap();
        assert_eq!(form.to_string(), "(3,6)(2,5)(1,4,7,8)");
    }

    #[test]
    fn cycle_policies() {
        let pi = p("(6)(1,7,3,8,4,2,5)");
        assert_eq!(
            pi.cycle_form(CyclePolicy::LargestFirstAscending).to_string(),
            "(6)(8,4,2,5,1,7,3)"
        );
        assert_eq!(
            pi.cycle_form(CyclePolicy::SmallestFirstDescending).to_string(),
            "(6)(1,7,3,8,4,2,5)"
        );
    }

    #[test]
    fn bona_examples() {
        assert_eq!(bona_map(&Permutation::identity(4)).unwrap(), p("2143"));
        assert_eq!(bona_map(&Permutation::identity(2)).unwrap(), p("21"));
        // (3,1,2)(4): C1 = (3,1,2), C2 = (4); 2 moves to the end of C2
        let img = bona_map(&p("(3,1,2)(4)")).unwrap();
        assert_eq!(img, p("(3,1)(4,2)"));
        assert_eq!(img.classify_parity(), ParityClass::EvenCycles);
        assert_eq!(bona_map(&Permutation::identity(3)), Err(Error::OddLength(3)));
        assert!(matches!(bona_map(&p("2143")), Err(Error::WrongParityClass(_))));
    }

    #[test]
    fn hat_examples() {
        let pi = p("(6)(1,7,3,8,4,2,5)");
        assert_eq!(foata_hat(&pi).to_string(), "61738425");
        assert_eq!(foata_hat(&Permutation::identity(3)).to_string(), "321");
        assert_eq!(foata_hat_inverse(&p("61738425")), pi);
        assert_eq!(left_to_right_minima(p("61738425").one_line()), vec![1, 2]);
    }

    #[test]
    fn closed_form() {
        let sizes: Vec<u64> = (1..=8).map(parity_class_size).collect();
        assert_eq!(sizes, vec![1, 1, 3, 9, 45, 225, 1575, 11025]);
    }

    #[test]
    fn enumeration() {
        assert_eq!(all_permutations(4).count(), 24);
        assert_eq!(all_permutations(1).count(), 1);
        assert_eq!(all_permutations(0).count(), 1);
    }
}
