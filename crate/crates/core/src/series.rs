//! Truncated multivariate power series with exact integer coefficients, and the
//! generating-function identities relating odd/distinct and even Lyndon
//! factorizations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bijection::classify_word;
use crate::error::{Error, Result};
use crate::lyndon::enumerate_lyndon_words;
use crate::words::{weight, Alphabet, WeightVector, Word};

/// Polynomial in `x_1..x_k` keeping only terms of total degree `<= D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedPolynomial {
    vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TruncatedPolynomial {
    pub fn zero(vars: usize, degree: usize) -> Self {
        TruncatedPolynomial {
            vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize, degree: usize) -> Self {
        Self::monomial(vars, degree, vec![0; vars], 1)
    }

    /// `coeff · x^exponents`; vanishes when its degree exceeds the cap.
    pub fn monomial(vars: usize, degree: usize, exponents: Vec<u32>, coeff: i64) -> Self {
        assert_eq!(exponents.len(), vars, "exponent vector length");
        let mut p = Self::zero(vars, degree);
        let d: u32 = exponents.iter().sum();
        if coeff != 0 && d as usize <= degree {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// `x_i` for `0 <= i < vars`.
    pub fn variable(vars: usize, degree: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(vars, degree, e, 1)
    }

    /// The monomial `wt(w)`.
    pub fn weight_monomial(vars: usize, degree: usize, w: &WeightVector) -> Self {
        Self::monomial(vars, degree, w.counts().iter().map(|&c| c as u32).collect(), 1)
    }

    /// `1 + x_1 + ... + x_k`.
    pub fn one_plus_variables(vars: usize, degree: usize) -> Self {
        (0..vars).fold(Self::one(vars, degree), |acc, i| {
            acc.add(&Self::variable(vars, degree, i))
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.degree != other.degree {
            return Err(Error::ParameterMismatch(format!(
                "(k={}, D={}) vs (k={}, D={})",
                self.vars, self.degree, other.vars, other.degree
            )));
        }
        Ok(())
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: i64) {
        let sum = self.coefficient(&exps) + c;
        if sum == 0 {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    /// Panics on mismatched parameters; see [`truncated_product`] for the checked form.
    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other).expect("compatible polynomials");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.insert_add(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c = -*c);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        truncated_product(self, other).expect("compatible polynomials")
    }

    /// Substitutes `x_i -> -x_i` for every variable.
    pub fn negate_variables(&self) -> Self {
        let mut out = self.clone();
        for (e, c) in out.terms.iter_mut() {
            if e.iter().sum::<u32>() % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    /// `1 + m + m^2 + ...` truncated, i.e. `1 / (1 - m)` for a polynomial `m`
    /// with zero constant term.
    pub fn geometric(m: &Self) -> Self {
        assert_eq!(
            m.coefficient(&vec![0; m.vars]),
            0,
            "geometric series needs zero constant term"
        );
        let mut sum = Self::one(m.vars, m.degree);
        let mut power = Self::one(m.vars, m.degree);
        for _ in 0..m.degree {
            power = power.mul(m);
            if power.terms.is_empty() {
                break;
            }
            sum = sum.add(&power);
        }
        sum
    }

    /// First exponent vector (in lexicographic order) where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<u32>, i64, i64)> {
        let keys: std::collections::BTreeSet<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coefficient(e), other.coefficient(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Vec<u32>, &i64)> = self.terms.iter().collect();
        // constant first, then by degree; reversed exponent order puts x1 before x2
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        for (i, (e, &c)) in terms.iter().enumerate() {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| {
                    if p == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, p)
                    }
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let a = c.unsigned_abs();
            match (mono.is_empty(), a) {
                (true, _) => write!(f, "{}", a)?,
                (false, 1) => f.write_str(&mono)?,
                (false, _) => write!(f, "{}{}", a, mono)?,
            }
        }
        Ok(())
    }
}

/// Exact product with all terms of total degree above the cap dropped.
pub fn truncated_product(p: &TruncatedPolynomial, q: &TruncatedPolynomial) -> Result<TruncatedPolynomial> {
    p.check_compatible(q)?;
    let mut out = TruncatedPolynomial::zero(p.vars, p.degree);
    for (ea, &ca) in &p.terms {
        let da: u32 = ea.iter().sum();
        for (eb, &cb) in &q.terms {
            let db: u32 = eb.iter().sum();
            if (da + db) as usize > p.degree {
                continue;
            }
            let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
            *out.terms.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.terms.retain(|_, c| *c != 0);
    Ok(out)
}

fn lyndon_weights(k: usize, degree: usize) -> Vec<(Word, TruncatedPolynomial)> {
    let alphabet = Alphabet::new(k).expect("k >= 1");
    enumerate_lyndon_words(alphabet, degree)
        .map(|l| {
            let m = TruncatedPolynomial::weight_monomial(k, degree, &weight(&l, alphabet));
            (l, m)
        })
        .collect()
}

/// `Π_{ℓ odd} (1 + wt(ℓ))`, the generating function of odd/distinct words.
pub fn odd_class_series(k: usize, degree: usize) -> TruncatedPolynomial {
    let one = TruncatedPolynomial::one(k, degree);
    lyndon_weights(k, degree)
        .iter()
        .filter(|(l, _)| l.is_odd())
        .fold(one.clone(), |acc, (_, m)| acc.mul(&one.add(m)))
}

/// `(1 + x_1 + ... + x_k) Π_{ℓ even} 1 / (1 - wt(ℓ))`, the generating function
/// of even-class words.
pub fn even_class_series(k: usize, degree: usize) -> TruncatedPolynomial {
    lyndon_weights(k, degree)
        .iter()
        .filter(|(l, _)| l.is_even())
        .fold(TruncatedPolynomial::one_plus_variables(k, degree), |acc, (_, m)| {
            acc.mul(&TruncatedPolynomial::geometric(m))
        })
}

/// `Π_{ℓ odd} (1 + wt(ℓ)) Π_{ℓ even} (1 - wt(ℓ))`.
pub fn signed_lyndon_product(k: usize, degree: usize) -> TruncatedPolynomial {
    let one = TruncatedPolynomial::one(k, degree);
    lyndon_weights(k, degree).iter().fold(one.clone(), |acc, (l, m)| {
        let factor = if l.is_odd() { one.add(m) } else { one.sub(m) };
        acc.mul(&factor)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub k: usize,
    pub degree: usize,
    pub left: TruncatedPolynomial,
    pub right: TruncatedPolynomial,
    pub passed: bool,
    /// `(exponents, left coefficient, right coefficient)`.
    pub first_difference: Option<(Vec<u32>, i64, i64)>,
}

impl IdentityReport {
    fn compare(k: usize, degree: usize, left: TruncatedPolynomial, right: TruncatedPolynomial) -> Self {
        let first_difference = left.first_difference(&right);
        IdentityReport {
            k,
            degree,
            passed: first_difference.is_none(),
            left,
            right,
            first_difference,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}, degree <= {}", self.k, self.degree)?;
        writeln!(f, "left:  {}", self.left)?;
        writeln!(f, "right: {}", self.right)?;
        match &self.first_difference {
            None => write!(f, "PASS"),
            Some((e, a, b)) => write!(f, "FAIL at exponents {:?}: {} != {}", e, a, b),
        }
    }
}

/// Checks `Π_{odd ℓ}(1 + wt ℓ) Π_{even ℓ}(1 - wt ℓ) = 1 + x_1 + ... + x_k`
/// through total degree `D`. Lyndon words longer than `D` cannot contribute.
pub fn verify_gf_identity(k: usize, degree: usize) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    Ok(IdentityReport::compare(
        k,
        degree,
        signed_lyndon_product(k, degree),
        TruncatedPolynomial::one_plus_variables(k, degree),
    ))
}

/// Three consequences of the identity under `x_i -> -x_i`:
/// the negated signed product equals `Π_ℓ (1 - wt ℓ)`, that product equals
/// `1 - x_1 - ... - x_k`, and `Π_ℓ 1/(1 - wt ℓ)` equals `1 / (1 - x_1 - ... - x_k)`.
pub fn verify_substitution_symmetry(k: usize, degree: usize) -> Result<Vec<IdentityReport>> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let one = TruncatedPolynomial::one(k, degree);
    let weights = lyndon_weights(k, degree);
    let all_minus = weights.iter().fold(one.clone(), |acc, (_, m)| acc.mul(&one.sub(m)));
    let negated = signed_lyndon_product(k, degree).negate_variables();
    let sum_vars = TruncatedPolynomial::one_plus_variables(k, degree).sub(&one);
    let reciprocal = weights
        .iter()
        .fold(one.clone(), |acc, (_, m)| acc.mul(&TruncatedPolynomial::geometric(m)));
    Ok(vec![
        IdentityReport::compare(k, degree, negated, all_minus.clone()),
        IdentityReport::compare(k, degree, all_minus, one.sub(&sum_vars)),
        IdentityReport::compare(k, degree, reciprocal, TruncatedPolynomial::geometric(&sum_vars)),
    ])
}

/// Word counts per weight vector for `W^o_n` and `W^e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WordClassCounts {
    pub odd: BTreeMap<WeightVector, u64>,
    pub even: BTreeMap<WeightVector, u64>,
}

impl WordClassCounts {
    /// True iff every weight class has equally many odd and even words.
    pub fn balanced(&self) -> bool {
        let keys: std::collections::BTreeSet<&WeightVector> = self.odd.keys().chain(self.even.keys()).collect();
        keys.into_iter()
            .all(|k| self.odd.get(k).copied().unwrap_or(0) == self.even.get(k).copied().unwrap_or(0))
    }
}

/// Largest `k^n` the brute-force counters will enumerate.
pub const WORD_BUDGET: u64 = 20_000_000;

/// Brute force over all `k^n` words, bucketing by class and weight.
pub fn count_word_classes(k: usize, n: usize) -> Result<WordClassCounts> {
    let alphabet = Alphabet::new(k)?;
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= WORD_BUDGET);
    if total.is_none() {
        return Err(Error::BudgetExceeded(format!(
            "{}^{} words exceeds {}",
            k, n, WORD_BUDGET
        )));
    }
    let mut counts = WordClassCounts::default();
    for w in alphabet.words_of_length(n) {
        let class = classify_word(&w);
        if class.is_odd_distinct() {
            *counts.odd.entry(weight(&w, alphabet)).or_insert(0) += 1;
        }
        if class.is_even() {
            *counts.even.entry(weight(&w, alphabet)).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = TruncatedPolynomial;

    #[test]
    fn product_examples() {
        let x1 = P::variable(1, 2, 0);
        let one = P::one(1, 2);
        let got = truncated_product(&one.add(&x1), &one.sub(&x1)).unwrap();
        assert_eq!(got, one.sub(&x1.mul(&x1)));
        assert_eq!(got.to_string(), "1 - x1^2");

        let (x, y) = (P::variable(2, 2, 0), P::variable(2, 2, 1));
        let one = P::one(2, 2);
        let lhs = one.add(&x).mul(&one.add(&y)).mul(&one.sub(&x.mul(&y)));
        assert_eq!(lhs, P::one_plus_variables(2, 2));
        assert_eq!(lhs.to_string(), "1 + x1 + x2");

        let p = one.add(&x).sub(&y.mul(&y).mul(&P::monomial(2, 2, vec![0, 0], 3)));
        assert_eq!(p.mul(&one), p);
    }

    #[test]
    fn truncation_and_mismatch() {
        let x = P::variable(1, 3, 0);
        let cube = x.mul(&x).mul(&x);
        assert_eq!(cube.coefficient(&[3]), 1);
        assert!(cube.mul(&x).terms().next().is_none());
        assert!(matches!(
            truncated_product(&P::one(1, 2), &P::one(2, 2)),
            Err(Error::ParameterMismatch(_))
        ));
        assert!(matches!(
            truncated_product(&P::one(1, 2), &P::one(1, 3)),
            Err(Error::ParameterMismatch(_))
        ));
    }

    #[test]
    fn geometric_series() {
        let x = P::variable(1, 4, 0);
        let g = P::geometric(&x);
        assert_eq!(g.to_string(), "1 + x1 + x1^2 + x1^3 + x1^4");
        assert_eq!(g.mul(&P::one(1, 4).sub(&x)), P::one(1, 4));
    }

    #[test]
    fn gf_identity_examples() {
        let r = verify_gf_identity(1, 5).unwrap();
        assert!(r.passed);
        assert_eq!(r.left.to_string(), "1 + x1");
        let r = verify_gf_identity(2, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.left.to_string(), "1 + x1 + x2");
        assert!(verify_gf_identity(3, 8).unwrap().passed);
        assert_eq!(verify_gf_identity(0, 3).unwrap_err(), Error::EmptyAlphabet);
    }

    #[test]
    fn substitution_symmetry() {
        for (k, d) in [(1, 6), (2, 6), (3, 5)] {
            for r in verify_substitution_symmetry(k, d).unwrap() {
                assert!(r.passed, "{}", r);
            }
        }
    }

    #[test]
    fn report_shows_first_difference() {
        let r = IdentityReport::compare(1, 2, P::one(1, 2), P::one_plus_variables(1, 2));
        assert!(!r.passed);
        assert_eq!(r.first_difference, Some((vec![1], 0, 1)));
        assert!(r.to_string().ends_with("FAIL at exponents [1]: 0 != 1"));
    }

    #[test]
    fn word_count_examples() {
        let c = count_word_classes(2, 2).unwrap();
        let only = BTreeMap::from([(WeightVector(vec![1, 1]), 1)]);
        assert_eq!(c.odd, only);
        assert_eq!(c.even, only);

        let c = count_word_classes(1, 2).unwrap();
        assert!(c.odd.is_empty() && c.even.is_empty());

        let c = count_word_classes(2, 1).unwrap();
        let singles = BTreeMap::from([(WeightVector(vec![1, 0]), 1), (WeightVector(vec![0, 1]), 1)]);
        assert_eq!(c.odd, singles);
        assert_eq!(c.even, singles);

        assert!(matches!(count_word_classes(3, 40), Err(Error::BudgetExceeded(_))));
    }
}
