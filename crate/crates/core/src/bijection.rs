//! The weight-preserving bijection `Ψ` from words whose Lyndon factors are odd
//! and distinct to words whose Lyndon factors are even (up to one factor of
//! length one), its inverse `Ω`, step traces, and the permutation bijection
//! `f_S = Φ_S⁻¹ ∘ Ψ ∘ Ξ_S`.
//!
//! Both maps shuttle subwords between a pair of words `(O, E)`. A `Ψ` step
//! looks at the rightmost Lyndon factor `o_m` of `O`: if its standard
//! factorization `r ! s` has `s < o_{m-1}` the factor is *splittable* and the
//! even half moves to the front of `E` (rule `S` moves `s`, rule `P` moves
//! `r`); otherwise the last two factors move as `o_m o_{m-1}` (rule `F`).
//! `Ω` undoes one step at a time, choosing between `S'`, `P'` and `F'` from the
//! iterated standard factorization of the leftmost factor of `E'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyndon::{
    isf, lyndon_factors, split_smallest_suffix, write_joined, IsfDecomposition, StandardFactorization, DASHED_BAR,
    FACTOR_BAR,
};
use crate::necklace::{phi, phi_inv, xi, xi_inv, NecklaceMultiset, Subset};
use crate::perms::{CycleForm, Permutation};
use crate::words::{Bound, Word};

/// Membership of a word in `W^o_n` and `W^e_n`. A single letter (and the
/// empty word) belongs to both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WordClass {
    OddDistinct,
    EvenPlusAtMostOneSingleton,
    Both,
    Neither,
}

impl WordClass {
    pub fn is_odd_distinct(self) -> bool {
        matches!(self, WordClass::OddDistinct | WordClass::Both)
    }

    pub fn is_even(self) -> bool {
        matches!(self, WordClass::EvenPlusAtMostOneSingleton | WordClass::Both)
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordClass::OddDistinct => "odd-distinct",
            WordClass::EvenPlusAtMostOneSingleton => "even",
            WordClass::Both => "both",
            WordClass::Neither => "neither",
        })
    }
}

pub fn classify_word(w: &Word) -> WordClass {
    classify_factors(&lyndon_factors(w))
}

fn classify_factors(factors: &[Word]) -> WordClass {
    let odd_distinct = odd_distinct_violation(factors).is_none();
    let even = even_violation(factors).is_none();
    match (odd_distinct, even) {
        (true, true) => WordClass::Both,
        (true, false) => WordClass::OddDistinct,
        (false, true) => WordClass::EvenPlusAtMostOneSingleton,
        (false, false) => WordClass::Neither,
    }
}

/// Factors arrive weakly decreasing, so repeats are adjacent.
fn odd_distinct_violation(factors: &[Word]) -> Option<String> {
    if let Some(f) = factors.iter().find(|f| f.is_even()) {
        return Some(format!("Lyndon factor `{}` has even length", f));
    }
    factors
        .windows(2)
        .find(|p| p[0] == p[1])
        .map(|p| format!("Lyndon factor `{}` is repeated", p[0]))
}

fn even_violation(factors: &[Word]) -> Option<String> {
    if let Some(f) = factors.iter().find(|f| f.is_odd() && f.len() > 1) {
        return Some(format!("Lyndon factor `{}` has odd length", f));
    }
    if factors.iter().filter(|f| f.len() == 1).count() > 1 {
        return Some("more than one Lyndon factor of length one".into());
    }
    None
}

/// Names of the step rules. `Insert1` and `Extract1` move a lone letter at the
/// end of `Ψ` and at the start of `Ω` when `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    S,
    P,
    F,
    Insert1,
    SPrime,
    PPrime,
    FPrime,
    Extract1,
}

impl Rule {
    /// The rule of the other map that undoes this one.
    pub fn counterpart(self) -> Rule {
        match self {
            Rule::S => Rule::SPrime,
            Rule::P => Rule::PPrime,
            Rule::F => Rule::FPrime,
            Rule::Insert1 => Rule::Extract1,
            Rule::SPrime => Rule::S,
            Rule::PPrime => Rule::P,
            Rule::FPrime => Rule::F,
            Rule::Extract1 => Rule::Insert1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::S => "S",
            Rule::P => "P",
            Rule::F => "F",
            Rule::Insert1 => "Insert1",
            Rule::SPrime => "S'",
            Rule::PPrime => "P'",
            Rule::FPrime => "F'",
            Rule::Extract1 => "Extract1",
        }
    }

    /// Column label in the step table; the single-letter moves carry none.
    pub fn table_label(self) -> String {
        match self {
            Rule::Insert1 | Rule::Extract1 => String::new(),
            r => format!("({})", r.name()),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The pair `(O, E)` manipulated by both maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairState {
    pub o: Word,
    pub e: Word,
}

impl PairState {
    pub fn new(o: Word, e: Word) -> Self {
        PairState { o, e }
    }
}

/// What a step decided on, beyond its rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StepDetail {
    /// Standard factorization of `o_m` (rules `S`, `P`; `F` when `|o_m| >= 2`).
    Split(StandardFactorization),
    /// ISF of `e'_1` with respect to `o'_h` (rules `P'`, `F'`).
    Isf(IsfDecomposition),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: Rule,
    pub before: PairState,
    pub after: PairState,
    pub detail: StepDetail,
}

/// Ordered record of the states visited by `Ψ` or `Ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub direction: Direction,
    pub initial: PairState,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Psi,
    Omega,
}

/// One row of a step table, with factor bars (`|`) and dashed bars (`!`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub rule: Option<Rule>,
    pub o: String,
    pub e: String,
}

/// Machine-readable step record; words are plain, `-` when empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub rule: Option<String>,
    #[serde(rename = "O")]
    pub o: String,
    #[serde(rename = "E")]
    pub e: String,
}

impl BijectionTrace {
    pub fn rules(&self) -> Vec<Rule> {
        self.steps.iter().map(|s| s.rule).collect()
    }

    pub fn final_state(&self) -> &PairState {
        self.steps.last().map_or(&self.initial, |s| &s.after)
    }

    pub fn states(&self) -> impl Iterator<Item = &PairState> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.after))
    }

    pub fn records(&self) -> Vec<TraceRecord> {
        self.states()
            .enumerate()
            .map(|(i, st)| TraceRecord {
                step: i,
                rule: i.checked_sub(1).map(|j| self.steps[j].rule.name().to_string()),
                o: st.o.to_string(),
                e: st.e.to_string(),
            })
            .collect()
    }

    /// Rows annotated the way the step tables show them. For `Ψ` the column `O`
    /// carries its Lyndon factorization, with the standard factorization of the
    /// last factor marked whenever another `S`/`P`/`F` step follows. For `Ω`
    /// both columns carry factorizations, and the leftmost factor of `E'`
    /// shows its ISF whenever the next step is `P'` or `F'`.
    pub fn rows(&self) -> Vec<TraceRow> {
        let states: Vec<&PairState> = self.states().collect();
        let mut rows = Vec::with_capacity(states.len());
        for (i, st) in states.iter().enumerate() {
            let rule = i.checked_sub(1).map(|j| self.steps[j].rule);
            let next = self.steps.get(i);
            let (o, e) = match self.direction {
                Direction::Psi => {
                    let split = next.and_then(|s| match &s.detail {
                        StepDetail::Split(sf) => Some(sf),
                        _ => None,
                    });
                    let o = render_factors(
                        &lyndon_factors(&st.o),
                        split.map(|sf| {
                            let mut out = String::new();
                            write_joined(&mut out, &[sf.r.clone(), sf.s.clone()], DASHED_BAR).unwrap();
                            out
                        }),
                        true,
                    );
                    let e = if rule == Some(Rule::Insert1) {
                        render_factors(&lyndon_factors(&st.e), None, false)
                    } else {
                        st.e.to_string()
                    };
                    (o, e)
                }
                Direction::Omega => {
                    let o = render_factors(&lyndon_factors(&st.o), None, false);
                    let isf = next.and_then(|s| match &s.detail {
                        StepDetail::Isf(d) => Some(d.to_string()),
                        _ => None,
                    });
                    (o, render_factors(&lyndon_factors(&st.e), isf, false))
                }
            };
            rows.push(TraceRow { rule, o, e });
        }
        rows
    }

    /// Plain-text step table.
    pub fn table(&self) -> String {
        let rows = self.rows();
        let (left, right) = match self.direction {
            Direction::Psi => ("O", "E"),
            Direction::Omega => ("O'", "E'"),
        };
        let width = rows
            .iter()
            .map(|r| r.o.chars().count())
            .max()
            .unwrap_or(0)
            .max(left.len());
        let labels: Vec<String> = rows
            .iter()
            .map(|r| r.rule.map(Rule::table_label).unwrap_or_default())
            .collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0).max(4);
        let mut out = String::new();
        let mut line = |o: &str, label: &str, e: &str| {
            let pad = width - o.chars().count();
            let text = format!("{}{}  {:<lw$}  {}", o, " ".repeat(pad), label, e, lw = lw);
            out.push_str(text.trim_end());
            out.push('\n');
        };
        line(left, "", right);
        line(&"-".repeat(width), "", &"-".repeat(right.len().max(4)));
        for (r, label) in rows.iter().zip(&labels) {
            line(&r.o, label, &r.e);
        }
        out
    }
}

/// Joins factors with `|`, replacing the last (`last = true`) or first factor
/// by `annotated` when given.
fn render_factors(factors: &[Word], annotated: Option<String>, last: bool) -> String {
    if factors.is_empty() {
        return crate::words::EMPTY.to_string();
    }
    let mut parts: Vec<String> = factors.iter().map(Word::to_string).collect();
    if let Some(a) = annotated {
        let idx = if last { parts.len() - 1 } else { 0 };
        parts[idx] = a;
    }
    parts.join(&FACTOR_BAR.to_string())
}

/// One `(ψ)` step; requires `|O| >= 2`.
pub fn psi_step(state: &PairState) -> Result<Step> {
    if state.o.len() < 2 {
        return Err(Error::WrongWordClass {
            word: state.o.to_string(),
            reason: "a psi step needs |O| >= 2".into(),
        });
    }
    let factors = lyndon_factors(&state.o);
    let m = factors.len();
    let last = &factors[m - 1];
    let previous: Bound = if m >= 2 {
        Bound::Finite(factors[m - 2].clone())
    } else {
        Bound::Infinity
    };
    let split = split_smallest_suffix(last);
    let splittable = split.as_ref().is_some_and(|sf| sf.s < previous);
    let head = Word::concat(&factors[..m - 1]);
    let (rule, after) = match (&split, splittable) {
        (Some(sf), true) if sf.r.is_odd() => (Rule::S, PairState::new(head.join(&sf.r), sf.s.join(&state.e))),
        (Some(sf), true) => (Rule::P, PairState::new(head.join(&sf.s), sf.r.join(&state.e))),
        _ => {
            let Bound::Finite(prev) = previous else {
                return Err(Error::WrongWordClass {
                    word: state.o.to_string(),
                    reason: "single unsplittable factor".into(),
                });
            };
            let o = Word::concat(&factors[..m - 2]);
            (Rule::F, PairState::new(o, Word::concat([last, &prev, &state.e])))
        }
    };
    Ok(Step {
        rule,
        before: state.clone(),
        after,
        detail: split.map_or(StepDetail::None, StepDetail::Split),
    })
}

/// Inserts a single letter as a new Lyndon factor of `e`, at the leftmost slot
/// keeping the factors weakly decreasing.
fn insert_letter(letter: &Word, e: &Word) -> Word {
    let mut factors = lyndon_factors(e);
    let at = factors.iter().position(|f| f <= letter).unwrap_or(factors.len());
    factors.insert(at, letter.clone());
    Word::concat(&factors)
}

/// `Ψ : W^o_n -> W^e_n` with its trace.
pub fn psi(w: &Word) -> Result<(Word, BijectionTrace)> {
    if let Some(reason) = odd_distinct_violation(&lyndon_factors(w)) {
        return Err(Error::WrongWordClass {
            word: w.to_string(),
            reason,
        });
    }
    let initial = PairState::new(w.clone(), Word::empty());
    let mut state = initial.clone();
    let mut steps = Vec::new();
    while state.o.len() >= 2 {
        let step = psi_step(&state)?;
        state = step.after.clone();
        steps.push(step);
    }
    if state.o.len() == 1 {
        let after = PairState::new(Word::empty(), insert_letter(&state.o, &state.e));
        steps.push(Step {
            rule: Rule::Insert1,
            before: state.clone(),
            after: after.clone(),
            detail: StepDetail::None,
        });
        state = after;
    }
    let trace = BijectionTrace {
        direction: Direction::Psi,
        initial,
        steps,
    };
    Ok((state.e, trace))
}

/// One `(ω)` step; requires `E'` nonempty.
pub fn omega_step(state: &PairState) -> Result<Step> {
    let e_factors = lyndon_factors(&state.e);
    let Some(first) = e_factors.first() else {
        return Err(Error::WrongWordClass {
            word: state.e.to_string(),
            reason: "an omega step needs E' nonempty".into(),
        });
    };
    let rest = Word::concat(&e_factors[1..]);
    let o_factors = lyndon_factors(&state.o);
    let h = o_factors.len();
    let last: Bound = o_factors.last().cloned().into();
    if last < *first {
        return Ok(Step {
            rule: Rule::SPrime,
            before: state.clone(),
            after: PairState::new(state.o.join(first), rest),
            detail: StepDetail::None,
        });
    }
    let d = isf(first, &last)?;
    let new_e = d.inner_tail().join(&rest);
    let (rule, new_o) = if last <= *d.last() {
        let last = last.as_word().expect("a finite word is at most s_j");
        let o = Word::concat(o_factors[..h - 1].iter().chain([d.head(), d.last(), last]));
        (Rule::PPrime, o)
    } else {
        (Rule::FPrime, Word::concat([&state.o, d.last(), d.head()]))
    };
    Ok(Step {
        rule,
        before: state.clone(),
        after: PairState::new(new_o, new_e),
        detail: StepDetail::Isf(d),
    })
}

/// Splits off the unique length-one Lyndon factor, returning it and the rest.
fn extract_letter(w: &Word) -> Option<(Word, Word)> {
    let mut factors = lyndon_factors(w);
    let at = factors.iter().position(|f| f.len() == 1)?;
    let letter = factors.remove(at);
    Some((letter, Word::concat(&factors)))
}

/// `Ω : W^e_n -> W^o_n` with its trace.
pub fn omega(w: &Word) -> Result<(Word, BijectionTrace)> {
    if let Some(reason) = even_violation(&lyndon_factors(w)) {
        return Err(Error::WrongWordClass {
            word: w.to_string(),
            reason,
        });
    }
    let initial = PairState::new(Word::empty(), w.clone());
    let mut state = initial.clone();
    let mut steps = Vec::new();
    if w.is_odd() {
        let (letter, rest) = extract_letter(w).expect("odd-length even-class word has a singleton factor");
        let after = PairState::new(letter, rest);
        steps.push(Step {
            rule: Rule::Extract1,
            before: state.clone(),
            after: after.clone(),
            detail: StepDetail::None,
        });
        state = after;
    }
    while !state.e.is_empty() {
        let step = omega_step(&state)?;
        state = step.after.clone();
        steps.push(step);
    }
    let trace = BijectionTrace {
        direction: Direction::Omega,
        initial,
        steps,
    };
    Ok((state.o, trace))
}

/// Inverse of a single step of either map, for replaying traces backwards.
pub fn undo_step(step: &Step) -> Result<Step> {
    match step.rule {
        Rule::S | Rule::P | Rule::F => omega_step(&step.after),
        Rule::SPrime | Rule::PPrime | Rule::FPrime => psi_step(&step.after),
        Rule::Insert1 => {
            let (letter, rest) = extract_letter(&step.after.e).ok_or_else(|| Error::WrongWordClass {
                word: step.after.e.to_string(),
                reason: "no singleton factor to extract".into(),
            })?;
            Ok(Step {
                rule: Rule::Extract1,
                before: step.after.clone(),
                after: PairState::new(letter, rest),
                detail: StepDetail::None,
            })
        }
        Rule::Extract1 => Ok(Step {
            rule: Rule::Insert1,
            before: step.after.clone(),
            after: PairState::new(Word::empty(), insert_letter(&step.after.o, &step.after.e)),
            detail: StepDetail::None,
        }),
    }
}

/// Intermediate objects of one evaluation of `f_S` or its inverse.
#[derive(Debug, Clone)]
pub struct FsComputation {
    pub necklaces_in: NecklaceMultiset,
    pub word_in: Word,
    pub trace: BijectionTrace,
    pub word_out: Word,
    pub necklaces_out: NecklaceMultiset,
    pub image: CycleForm,
}

/// `f_S = Φ_S⁻¹ ∘ Ψ ∘ Ξ_S` on `π ∈ S^o_n` with `Asc(π) ⊆ S`.
pub fn f_s_traced(set: &Subset, pi: &Permutation) -> Result<FsComputation> {
    let necklaces_in = xi(set, pi)?;
    let word_in = necklaces_in.to_word();
    let (word_out, trace) = psi(&word_in)?;
    let necklaces_out = NecklaceMultiset::from_word(&word_out);
    let image = phi_inv(set, &necklaces_out)?;
    Ok(FsComputation {
        necklaces_in,
        word_in,
        trace,
        word_out,
        necklaces_out,
        image,
    })
}

pub fn f_s(set: &Subset, pi: &Permutation) -> Result<CycleForm> {
    f_s_traced(set, pi).map(|c| c.image)
}

/// `f_S⁻¹ = Ξ_S⁻¹ ∘ Ω ∘ Φ_S` on `π ∈ S^e_n` with `Des(π) ⊆ S`.
pub fn f_s_inv_traced(set: &Subset, pi: &Permutation) -> Result<FsComputation> {
    if !pi.classify_parity().is_even() {
        return Err(Error::WrongParityClass(format!(
            "{} is not made of even cycles plus at most one fixed point",
            pi
        )));
    }
    let necklaces_in = phi(set, pi)?;
    let word_in = necklaces_in.to_word();
    let (word_out, trace) = omega(&word_in)?;
    let necklaces_out = NecklaceMultiset::from_word(&word_out);
    let image = xi_inv(set, &necklaces_out)?;
    Ok(FsComputation {
        necklaces_in,
        word_in,
        trace,
        word_out,
        necklaces_out,
        image,
    })
}

pub fn f_s_inv(set: &Subset, pi: &Permutation) -> Result<CycleForm> {
    f_s_inv_traced(set, pi).map(|c| c.image)
}

pub mod invariants;
