//! Exhaustive desk-scale verification of the counting theorems, the necklace
//! encodings, the word bijection and the permutation bijection `f_S`.
//!
//! Every report is deterministic, implements [`fmt::Display`] for the text
//! rendering and [`Serialize`] for the records rendering.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::bijection::invariants::{check_omega_step, check_psi_step};
use crate::bijection::{classify_word, f_s, f_s_inv, omega, psi, undo_step, BijectionTrace, Rule};
use crate::error::{Error, Result};
use crate::necklace::{phi, phi_inv, xi, xi_inv, Subset};
use crate::perms::{all_permutations, bona_map, parity_class_size, ParityClass, Permutation};
use crate::series::WORD_BUDGET;
use crate::words::{weight, Alphabet, Word};

/// Largest `n` accepted by [`verify_theorem_counts`].
pub const MAX_COUNT_N: usize = 9;
/// Largest `n` accepted by the per-permutation sweeps.
pub const MAX_SWEEP_N: usize = 7;
/// Largest `n` accepted by [`verify_necklace_counts`] and [`verify_bona`].
pub const MAX_WORD_WEIGHT_N: usize = 8;

/// How many failure messages a report keeps verbatim.
const KEPT_FAILURES: usize = 10;

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ParameterMismatch("n must be positive".into()));
    }
    if n > max {
        return Err(Error::BudgetExceeded(format!("n = {} exceeds the limit {}", n, max)));
    }
    Ok(())
}

struct SetFmt<'a>(&'a [usize]);

impl fmt::Display for SetFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

#[derive(Debug, Default)]
struct Failures {
    count: usize,
    kept: Vec<String>,
}

impl Failures {
    fn push(&mut self, msg: impl FnOnce() -> String) {
        self.count += 1;
        if self.kept.len() < KEPT_FAILURES {
            self.kept.push(msg());
        }
    }
}

/// One subset `J` (or `S`) with the odd-side and even-side counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub set: Vec<usize>,
    pub odd: u64,
    pub even: u64,
    pub passed: bool,
}

impl CountRow {
    fn new(n: usize, mask: usize, odd: u64, even: u64) -> Self {
        CountRow {
            set: Subset::from_mask(n, mask as u64).elements().to_vec(),
            odd,
            even,
            passed: odd == even,
        }
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, title: &str, left: &str, right: &str, rows: &[CountRow]) -> fmt::Result {
    writeln!(f, "{}", title)?;
    let width = rows
        .iter()
        .map(|r| SetFmt(&r.set).to_string().len())
        .max()
        .unwrap_or(2)
        .max(3);
    writeln!(f, "  {:<width$}  {:>10}  {:>10}", "set", left, right, width = width)?;
    for r in rows {
        writeln!(
            f,
            "  {:<width$}  {:>10}  {:>10}  {}",
            SetFmt(&r.set).to_string(),
            r.odd,
            r.even,
            verdict(r.passed),
            width = width
        )?;
    }
    Ok(())
}

/// Per-subset counts of `{π ∈ S^o_n : Asc(π) = J}` against
/// `{π ∈ S^e_n : Des(π) = J}`, and the same with `⊆ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub exact: Vec<CountRow>,
    pub subset: Vec<CountRow>,
    /// Möbius inversion of either subset table reproduces the odd exact table.
    pub inclusion_exclusion: bool,
    pub total_odd: u64,
    pub total_even: u64,
    pub closed_form: u64,
    pub passed: bool,
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        write_rows(f, "exact sets J", "odd Asc=J", "even Des=J", &self.exact)?;
        write_rows(f, "subsets S", "odd Asc<=S", "even Des<=S", &self.subset)?;
        writeln!(f, "inclusion-exclusion: {}", verdict(self.inclusion_exclusion))?;
        writeln!(
            f,
            "totals: odd {} even {} closed form {}",
            self.total_odd, self.total_even, self.closed_form
        )?;
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn zeta(table: &[u64], bits: usize) -> Vec<u64> {
    let mut a = table.to_vec();
    for i in 0..bits {
        for m in 0..a.len() {
            if m >> i & 1 == 1 {
                a[m] += a[m ^ 1 << i];
            }
        }
    }
    a
}

fn mobius(table: &[u64], bits: usize) -> Vec<i64> {
    let mut a: Vec<i64> = table.iter().map(|&x| x as i64).collect();
    for i in 0..bits {
        for m in 0..a.len() {
            if m >> i & 1 == 1 {
                a[m] -= a[m ^ 1 << i];
            }
        }
    }
    a
}

/// One pass over `S_n`, bucketing by parity class and boundary sets; subset
/// counts come from a zeta transform of the exact-set buckets.
pub fn verify_theorem_counts(n: usize) -> Result<CountReport> {
    check_n(n, MAX_COUNT_N)?;
    let bits = n - 1;
    let full = (1usize << bits) - 1;
    let mut odd_exact = vec![0u64; full + 1];
    let mut even_exact = vec![0u64; full + 1];
    for pi in all_permutations(n) {
        let class = pi.classify_parity();
        let des = pi.descent_mask() as usize;
        if class.is_odd() {
            odd_exact[full ^ des] += 1;
        }
        if class.is_even() {
            even_exact[des] += 1;
        }
    }
    let odd_sub = zeta(&odd_exact, bits);
    let even_sub = zeta(&even_exact, bits);
    let odd_signed: Vec<i64> = odd_exact.iter().map(|&x| x as i64).collect();
    let inclusion_exclusion = mobius(&odd_sub, bits) == odd_signed && mobius(&even_sub, bits) == odd_signed;

    let exact: Vec<CountRow> = (0..=full)
        .map(|m| CountRow::new(n, m, odd_exact[m], even_exact[m]))
        .collect();
    let subset: Vec<CountRow> = (0..=full)
        .map(|m| CountRow::new(n, m, odd_sub[m], even_sub[m]))
        .collect();
    let total_odd = odd_exact.iter().sum();
    let total_even = even_exact.iter().sum();
    let closed_form = parity_class_size(n);
    let passed = exact.iter().chain(&subset).all(|r| r.passed)
        && inclusion_exclusion
        && total_odd == closed_form
        && total_even == closed_form;
    Ok(CountReport {
        n,
        exact,
        subset,
        inclusion_exclusion,
        total_odd,
        total_even,
        closed_form,
        passed,
    })
}

struct Classified {
    pi: Permutation,
    class: ParityClass,
    des: usize,
    asc: usize,
}

fn classified_permutations(n: usize) -> Vec<Classified> {
    let full = (1usize << (n - 1)) - 1;
    all_permutations(n)
        .map(|pi| {
            let des = pi.descent_mask() as usize;
            Classified {
                class: pi.classify_parity(),
                des,
                asc: full ^ des,
                pi,
            }
        })
        .collect()
}

/// Outcome of sweeping `f_S` over its whole domain for one `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FsRow {
    pub set: Vec<usize>,
    pub domain: usize,
    pub image: usize,
    pub target: usize,
    pub injective: bool,
    pub onto: bool,
    pub roundtrips: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FsReport {
    pub n: usize,
    pub rows: Vec<FsRow>,
    pub passed: bool,
}

impl fmt::Display for FsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        let width = self
            .rows
            .iter()
            .map(|r| SetFmt(&r.set).to_string().len())
            .max()
            .unwrap_or(2)
            .max(3);
        writeln!(
            f,
            "  {:<width$}  {:>7}  {:>7}  {:>7}",
            "S",
            "domain",
            "image",
            "target",
            width = width
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "  {:<width$}  {:>7}  {:>7}  {:>7}  {}",
                SetFmt(&r.set).to_string(),
                r.domain,
                r.image,
                r.target,
                verdict(r.passed),
                width = width
            )?;
            for msg in &r.failures {
                writeln!(f, "    {}", msg)?;
            }
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// For every `S ⊆ [n-1]`, checks that `f_S` maps `{π ∈ S^o_n : Asc(π) ⊆ S}`
/// injectively onto `{π ∈ S^e_n : Des(π) ⊆ S}` and that `f_S⁻¹` undoes it.
pub fn verify_fs_bijectivity(n: usize) -> Result<FsReport> {
    check_n(n, MAX_SWEEP_N)?;
    let perms = classified_permutations(n);
    let full = (1usize << (n - 1)) - 1;
    let mut rows = Vec::with_capacity(full + 1);
    for mask in 0..=full {
        let set = Subset::from_mask(n, mask as u64);
        let target: HashSet<&[usize]> = perms
            .iter()
            .filter(|p| p.class.is_even() && p.des & !mask == 0)
            .map(|p| p.pi.one_line())
            .collect();
        let mut failures = Failures::default();
        let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut domain = 0;
        let mut roundtrips = true;
        for p in perms.iter().filter(|p| p.class.is_odd() && p.asc & !mask == 0) {
            domain += 1;
            let image = match f_s(&set, &p.pi).and_then(|c| c.to_permutation()) {
                Ok(img) => img,
                Err(e) => {
                    failures.push(|| format!("f_S({}) failed: {}", p.pi, e));
                    continue;
                }
            };
            if !target.contains(image.one_line()) {
                failures.push(|| format!("f_S({}) = {} is outside the target", p.pi, image));
            }
            match f_s_inv(&set, &image).and_then(|c| c.to_permutation()) {
                Ok(back) if back == p.pi => {}
                Ok(back) => {
                    roundtrips = false;
                    failures.push(|| format!("f_S^-1(f_S({})) = {}", p.pi, back));
                }
                Err(e) => {
                    roundtrips = false;
                    failures.push(|| format!("f_S^-1({}) failed: {}", image, e));
                }
            }
            images.insert(image.one_line().to_vec());
        }
        let injective = images.len() == domain;
        let onto = images.len() == target.len() && images.iter().all(|i| target.contains(i.as_slice()));
        rows.push(FsRow {
            set: set.elements().to_vec(),
            domain,
            image: images.len(),
            target: target.len(),
            injective,
            onto,
            roundtrips,
            passed: failures.count == 0 && injective && onto && roundtrips,
            failures: failures.kept,
        });
    }
    let passed = rows.iter().all(|r| r.passed);
    Ok(FsReport { n, rows, passed })
}

/// All distinct rearrangements of a sorted letter multiset, in lex order.
struct Rearrangements {
    next: Option<Vec<u8>>,
}

impl Iterator for Rearrangements {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i - 1])
                .expect("pivot has a successor");
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Word::from_ranks(cur))
    }
}

fn words_of_composition(composition: &[usize]) -> Rearrangements {
    let letters = composition
        .iter()
        .enumerate()
        .flat_map(|(letter, &c)| std::iter::repeat_n(letter as u8, c))
        .collect();
    Rearrangements { next: Some(letters) }
}

/// Per-`S` sweep of `Φ_S` and `Ξ_S` with their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecklaceRow {
    pub set: Vec<usize>,
    /// `|{π : Des(π) ⊆ S}|` against the number of words of weight `x^α(S)`.
    pub phi_domain: usize,
    pub phi_codomain: usize,
    /// `|{π ∈ S^o_n : Asc(π) ⊆ S}|` against the odd/distinct words of that weight.
    pub xi_domain: usize,
    pub xi_codomain: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecklaceReport {
    pub n: usize,
    pub rows: Vec<NecklaceRow>,
    pub passed: bool,
}

impl fmt::Display for NecklaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for r in &self.rows {
            writeln!(
                f,
                "  S = {}: phi {}/{}, xi {}/{}  {}",
                SetFmt(&r.set),
                r.phi_domain,
                r.phi_codomain,
                r.xi_domain,
                r.xi_codomain,
                verdict(r.passed)
            )?;
            for msg in &r.failures {
                writeln!(f, "    {}", msg)?;
            }
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn sorted_cycle_lengths(pi: &Permutation) -> Vec<usize> {
    let mut lens = pi.cycle_lengths();
    lens.sort_unstable();
    lens
}

/// Roundtrips, cycle-structure and weight preservation, and bijectivity (by
/// injectivity plus equal cardinality) of `Φ_S` and `Ξ_S` for every `S`.
pub fn verify_necklace_maps(n: usize) -> Result<NecklaceReport> {
    check_n(n, MAX_SWEEP_N)?;
    let perms = classified_permutations(n);
    let full = (1usize << (n - 1)) - 1;
    let mut rows = Vec::with_capacity(full + 1);
    for mask in 0..=full {
        let set = Subset::from_mask(n, mask as u64);
        let alphabet = set.alphabet();
        let composition = set.composition();
        let (mut phi_codomain, mut xi_codomain) = (0, 0);
        for w in words_of_composition(&composition) {
            phi_codomain += 1;
            if classify_word(&w).is_odd_distinct() {
                xi_codomain += 1;
            }
        }
        let mut failures = Failures::default();
        let mut phi_images = HashSet::new();
        let mut xi_images = HashSet::new();
        let (mut phi_domain, mut xi_domain) = (0, 0);
        for p in &perms {
            if p.des & !mask == 0 {
                phi_domain += 1;
                match phi(&set, &p.pi) {
                    Ok(m) => {
                        let w = m.to_word();
                        if weight(&w, alphabet).counts() != composition.as_slice() {
                            failures.push(|| format!("phi({}) = {} has the wrong weight", p.pi, m));
                        }
                        if m.cycle_structure() != sorted_cycle_lengths(&p.pi) {
                            failures.push(|| format!("phi({}) = {} changes cycle structure", p.pi, m));
                        }
                        match phi_inv(&set, &m).and_then(|c| c.to_permutation()) {
                            Ok(back) if back == p.pi => {}
                            other => failures.push(|| format!("phi_inv(phi({})) gave {:?}", p.pi, other)),
                        }
                        phi_images.insert(w);
                    }
                    Err(e) => failures.push(|| format!("phi({}) failed: {}", p.pi, e)),
                }
            }
            if p.class.is_odd() && p.asc & !mask == 0 {
                xi_domain += 1;
                match xi(&set, &p.pi) {
                    Ok(m) => {
                        let w = m.to_word();
                        if weight(&w, alphabet).counts() != composition.as_slice() {
                            failures.push(|| format!("xi({}) = {} has the wrong weight", p.pi, m));
                        }
                        if !classify_word(&w).is_odd_distinct() {
                            failures.push(|| format!("xi({}) = {} is not odd and distinct", p.pi, m));
                        }
                        if m.cycle_structure() != sorted_cycle_lengths(&p.pi) {
                            failures.push(|| format!("xi({}) = {} changes cycle structure", p.pi, m));
                        }
                        match xi_inv(&set, &m).and_then(|c| c.to_permutation()) {
                            Ok(back) if back == p.pi => {}
                            other => failures.push(|| format!("xi_inv(xi({})) gave {:?}", p.pi, other)),
                        }
                        xi_images.insert(w);
                    }
                    Err(e) => failures.push(|| format!("xi({}) failed: {}", p.pi, e)),
                }
            }
        }
        if phi_images.len() != phi_domain || phi_domain != phi_codomain {
            failures.push(|| {
                format!(
                    "phi: {} images, domain {}, codomain {}",
                    phi_images.len(),
                    phi_domain,
                    phi_codomain
                )
            });
        }
        if xi_images.len() != xi_domain || xi_domain != xi_codomain {
            failures.push(|| {
                format!(
                    "xi: {} images, domain {}, codomain {}",
                    xi_images.len(),
                    xi_domain,
                    xi_codomain
                )
            });
        }
        rows.push(NecklaceRow {
            set: set.elements().to_vec(),
            phi_domain,
            phi_codomain,
            xi_domain,
            xi_codomain,
            passed: failures.count == 0,
            failures: failures.kept,
        });
    }
    let passed = rows.iter().all(|r| r.passed);
    Ok(NecklaceReport { n, rows, passed })
}

/// Numbers of odd-class and even-class necklace multisets of weight `x^α(S)`
/// for every `S ⊆ [n-1]`, counted through their words.
pub fn verify_necklace_counts(n: usize) -> Result<Vec<CountRow>> {
    check_n(n, MAX_WORD_WEIGHT_N)?;
    let full = (1usize << (n - 1)) - 1;
    Ok((0..=full)
        .map(|mask| {
            let set = Subset::from_mask(n, mask as u64);
            let (mut odd, mut even) = (0, 0);
            for w in words_of_composition(&set.composition()) {
                let class = classify_word(&w);
                odd += class.is_odd_distinct() as u64;
                even += class.is_even() as u64;
            }
            CountRow::new(n, mask, odd, even)
        })
        .collect())
}

/// Exhaustive check of `Ψ` and `Ω` on all words of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordBijectionReport {
    pub k: usize,
    pub n: usize,
    pub odd_words: usize,
    pub even_words: usize,
    pub steps_checked: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl fmt::Display for WordBijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "k = {}, n = {}: {} odd-class words, {} even-class words, {} steps checked",
            self.k, self.n, self.odd_words, self.even_words, self.steps_checked
        )?;
        for msg in &self.failures {
            writeln!(f, "  {}", msg)?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn check_trace_steps(trace: &BijectionTrace, failures: &mut Failures) -> usize {
    for step in &trace.steps {
        let invariant = match step.rule {
            Rule::S | Rule::P | Rule::F => check_psi_step(step),
            Rule::SPrime | Rule::PPrime | Rule::FPrime => check_omega_step(step),
            Rule::Insert1 | Rule::Extract1 => Ok(()),
        };
        if let Err(v) = invariant {
            failures.push(|| {
                format!(
                    "{} step from ({}, {}): {}",
                    step.rule.name(),
                    step.before.o,
                    step.before.e,
                    v
                )
            });
        }
        match undo_step(step) {
            Ok(back) if back.after == step.before && back.rule == step.rule.counterpart() => {}
            other => failures.push(|| {
                format!(
                    "{} step from ({}, {}) is not undone: {:?}",
                    step.rule.name(),
                    step.before.o,
                    step.before.e,
                    other.map(|s| s.rule)
                )
            }),
        }
    }
    trace.steps.len()
}

/// Runs `Ψ` on every odd/distinct word and `Ω` on every even-class word of
/// length `n` over `k` letters, checking roundtrips, weight, class of the
/// image, the per-step invariants and step-by-step inversion.
pub fn verify_word_bijection(k: usize, n: usize) -> Result<WordBijectionReport> {
    let alphabet = Alphabet::new(k)?;
    if (k as u64).checked_pow(n as u32).is_none_or(|t| t > WORD_BUDGET) {
        return Err(Error::BudgetExceeded(format!(
            "{}^{} words exceeds {}",
            k, n, WORD_BUDGET
        )));
    }
    let mut failures = Failures::default();
    let (mut odd_words, mut even_words, mut steps_checked) = (0, 0, 0);
    for w in alphabet.words_of_length(n) {
        let class = classify_word(&w);
        if class.is_odd_distinct() {
            odd_words += 1;
            match psi(&w) {
                Ok((img, trace)) => {
                    steps_checked += check_trace_steps(&trace, &mut failures);
                    if !classify_word(&img).is_even() {
                        failures.push(|| format!("psi({}) = {} is not even-class", w, img));
                    }
                    if weight(&img, alphabet) != weight(&w, alphabet) {
                        failures.push(|| format!("psi({}) = {} changes weight", w, img));
                    }
                    match omega(&img) {
                        Ok((back, _)) if back == w => {}
                        other => failures.push(|| format!("omega(psi({})) gave {:?}", w, other.map(|r| r.0))),
                    }
                }
                Err(e) => failures.push(|| format!("psi({}) failed: {}", w, e)),
            }
        }
        if class.is_even() {
            even_words += 1;
            match omega(&w) {
                Ok((img, trace)) => {
                    steps_checked += check_trace_steps(&trace, &mut failures);
                    if !classify_word(&img).is_odd_distinct() {
                        failures.push(|| format!("omega({}) = {} is not odd and distinct", w, img));
                    }
                    if weight(&img, alphabet) != weight(&w, alphabet) {
                        failures.push(|| format!("omega({}) = {} changes weight", w, img));
                    }
                    match psi(&img) {
                        Ok((back, _)) if back == w => {}
                        other => failures.push(|| format!("psi(omega({})) gave {:?}", w, other.map(|r| r.0))),
                    }
                }
                Err(e) => failures.push(|| format!("omega({}) failed: {}", w, e)),
            }
        }
    }
    Ok(WordBijectionReport {
        k,
        n,
        odd_words,
        even_words,
        steps_checked,
        failure_count: failures.count,
        passed: failures.count == 0,
        failures: failures.kept,
    })
}

/// Bijectivity of [`bona_map`] from `S^o_n` onto `S^e_n` (even `n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BonaReport {
    pub n: usize,
    pub domain: usize,
    pub image: usize,
    pub target: u64,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl fmt::Display for BonaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: domain {}, distinct images {}, |S^e_n| = {}",
            self.n, self.domain, self.image, self.target
        )?;
        for msg in &self.failures {
            writeln!(f, "  {}", msg)?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

pub fn verify_bona(n: usize) -> Result<BonaReport> {
    check_n(n, MAX_WORD_WEIGHT_N)?;
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    let mut failures = Failures::default();
    let mut images = HashSet::new();
    let mut domain = 0;
    for pi in all_permutations(n).filter(|p| p.classify_parity().is_odd()) {
        domain += 1;
        match bona_map(&pi) {
            Ok(img) => {
                if !img.classify_parity().is_even() {
                    failures.push(|| format!("bona({}) = {} is not in the even class", pi, img));
                }
                images.insert(img);
            }
            Err(e) => failures.push(|| format!("bona({}) failed: {}", pi, e)),
        }
    }
    let target = parity_class_size(n);
    if images.len() != domain || domain as u64 != target {
        failures.push(|| {
            format!(
                "{} images from {} permutations, expected {}",
                images.len(),
                domain,
                target
            )
        });
    }
    Ok(BonaReport {
        n,
        domain,
        image: images.len(),
        target,
        passed: failures.count == 0,
        failures: failures.kept,
    })
}

/// A permutation on which [`bona_map`] and `f_[n-1]` disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BonaDifference {
    pub n: usize,
    pub pi: Permutation,
    pub bona: Permutation,
    pub f_full: Permutation,
}

/// Smallest even `n <= max_n` (then first `π` in lex order) where the two maps differ.
pub fn find_bona_difference(max_n: usize) -> Result<Option<BonaDifference>> {
    for n in (2..=max_n.min(MAX_WORD_WEIGHT_N)).step_by(2) {
        let full = Subset::full(n);
        for pi in all_permutations(n).filter(|p| p.classify_parity().is_odd()) {
            let bona = bona_map(&pi)?;
            let f_full = f_s(&full, &pi)?.to_permutation()?;
            if bona != f_full {
                return Ok(Some(BonaDifference { n, pi, bona, f_full }));
            }
        }
    }
    Ok(None)
}
