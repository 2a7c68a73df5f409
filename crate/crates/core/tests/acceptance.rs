//! Acceptance criteria, one line of output per criterion. Runs without the
//! libtest harness so the verdict lines are always printed.

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lyndon_parity::bijection::{f_s, f_s_traced, omega, psi, BijectionTrace, Rule};
use lyndon_parity::harness::{
    find_bona_difference, verify_bona, verify_necklace_counts, verify_necklace_maps, verify_theorem_counts,
    verify_word_bijection,
};
use lyndon_parity::lyndon::{factor_starts_via_suffix_minima, isf, lyndon_factors};
use lyndon_parity::necklace::Subset;
use lyndon_parity::perms::{bona_map, Permutation};
use lyndon_parity::series::{
    count_word_classes, even_class_series, odd_class_series, verify_gf_identity, verify_substitution_symmetry,
};
use lyndon_parity::words::{alt_lex_compare_periodic, Alphabet, Bound, Word};

type Outcome = Result<(), String>;

/// `(input, output, rows)` with rows as `(label, O, E)`.
type Golden = (
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str, &'static str)],
);
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

/// Rows as `(label, O, E)`, label blank on the first row and on the
/// letter-moving row.
fn check_rows(trace: &BijectionTrace, expected: &[(&str, &str, &str)]) -> Outcome {
    let got: Vec<(String, String, String)> = trace
        .rows()
        .into_iter()
        .map(|r| (r.rule.map(|x| x.table_label()).unwrap_or_default(), r.o, r.e))
        .collect();
    let want: Vec<(String, String, String)> = expected
        .iter()
        .map(|&(a, b, c)| (a.into(), b.into(), c.into()))
        .collect();
    ensure(got == want, || format!("rows {:?}, expected {:?}", got, want))
}

const PSI_GOLDEN: &[Golden] = &[
    (
        "dadccdbccc",
        "cdcdadbccc",
        &[
            ("", "d|adccd!bccc", "-"),
            ("(S)", "d|ad!ccd", "bccc"),
            ("(P)", "d|c!cd", "adbccc"),
            ("(S)", "d|c", "cdadbccc"),
            ("(F)", "-", "cdcdadbccc"),
        ],
    ),
    (
        "babacabc",
        "abcbabac",
        &[
            ("", "b|abac!abc", "-"),
            ("(P)", "b|a!bc", "abac"),
            ("(F)", "-", "abcbabac"),
        ],
    ),
    (
        "bbccbbcccbbccbcbaabaabcaabaaabb",
        "bcccbbccbbccbcbababaabcaaabbaab",
        &[
            ("", "bbccbbcccbbccbc|b|aabaabc|aab|a!aabb", "-"),
            ("(F)", "bbccbbcccbbccbc|b|aab!aabc", "aaabbaab"),
            ("(S)", "bbccbbcccbbccbc|b|a!ab", "aabcaaabbaab"),
            ("(S)", "bbccbbcccbbccbc|b|a", "abaabcaaabbaab"),
            ("(F)", "bbccbbccc!bbccbc", "ababaabcaaabbaab"),
            ("(S)", "bbcc!bbccc", "bbccbcababaabcaaabbaab"),
            ("(P)", "b!bccc", "bbccbbccbcababaabcaaabbaab"),
            ("(S)", "b", "bcccbbccbbccbcababaabcaaabbaab"),
            ("", "-", "bccc|bbccbbccbc|b|ab|ab|aabc|aaabbaab"),
        ],
    ),
    (
        "ddecedbdbdccdabda",
        "dedccedcdbdbdaabd",
        &[
            ("", "dde|ced|bdbdccd|abd|a", "-"),
            ("(F)", "dde|ced|bd!bdccd", "aabd"),
            ("(P)", "dde|ced|bd!ccd", "bdaabd"),
            ("(P)", "dde|ced|c!cd", "bdbdaabd"),
            ("(S)", "dde|ced|c", "cdbdbdaabd"),
            ("(F)", "d!de", "ccedcdbdbdaabd"),
            ("(S)", "d", "deccedcdbdbdaabd"),
            ("", "-", "de|d|ccedcd|bd|bd|aabd"),
        ],
    ),
];

const OMEGA_GOLDEN: &[Golden] = &[
    (
        "cdcdadbccc",
        "dadccdbccc",
        &[
            ("", "-", "c!d|cd|adbccc"),
            ("(F')", "d|c", "cd|adbccc"),
            ("(S')", "d|ccd", "a!d!bccc"),
            ("(P')", "d|adccd", "bccc"),
            ("(S')", "d|adccdbccc", "-"),
        ],
    ),
    (
        "dedccedcdbdbdaabd",
        "ddecedbdbdccdabda",
        &[
            ("", "-", "de|d|ccedcd|bd|bd|aabd"),
            ("", "d", "de|ccedcd|bd|bd|aabd"),
            ("(S')", "dde", "c!ced!cd|bd|bd|aabd"),
            ("(F')", "dde|ced|c", "cd|bd|bd|aabd"),
            ("(S')", "dde|ced|ccd", "b!d|bd|aabd"),
            ("(P')", "dde|ced|bdccd", "b!d|aabd"),
            ("(P')", "dde|ced|bdbdccd", "a!abd"),
            ("(F')", "dde|ced|bdbdccd|abd|a", "-"),
        ],
    ),
    (
        "cadcdbcdcbcbc",
        "adcdcbcdcbcbc",
        &[
            ("", "-", "c|adcdbcdcbcbc"),
            ("", "c", "ad!cd!bcdc!bc!bc"),
            ("(P')", "adcdc", "bcdc|bc|bc"),
            ("(S')", "adcdcbcdc", "bc|bc"),
            ("(S')", "adcdcbcdcbc", "bc"),
            ("(S')", "adcdcbcdcbcbc", "-"),
        ],
    ),
];

fn golden_traces() -> Outcome {
    for &(input, output, rows) in PSI_GOLDEN {
        let (out, trace) = psi(&word(input)).map_err(|e| e.to_string())?;
        ensure(out.to_string() == output, || format!("psi({}) = {}", input, out))?;
        check_rows(&trace, rows)?;
    }
    for &(input, output, rows) in OMEGA_GOLDEN {
        let (out, trace) = omega(&word(input)).map_err(|e| e.to_string())?;
        ensure(out.to_string() == output, || format!("omega({}) = {}", input, out))?;
        check_rows(&trace, rows)?;
    }
    let fin = |s: &str| Bound::Finite(word(s));
    let isf_cases = [
        ("adbccc", fin("ccd"), "a!d!bccc"),
        ("ccedcd", fin("dde"), "c!ced!cd"),
        ("adcdbcdcbcbc", fin("c"), "ad!cd!bcdc!bc!bc"),
        ("adcdbcdcbcbc", Bound::Infinity, "a!d!cd!bcdc!bc!bc"),
    ];
    for (l, u, want) in isf_cases {
        let got = isf(&word(l), &u).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || {
            format!("isf({}, {}) = {}, expected {}", l, u, got, want)
        })?;
    }
    Ok(())
}

fn end_to_end_examples() -> Outcome {
    let set = Subset::parse(17, "2,5,8,15").map_err(|e| e.to_string())?;
    let pi: Permutation = "3 2 15 13 11 16 14 7 17 9 8 6 5 4 1 12 10"
        .parse()
        .map_err(|e: lyndon_parity::Error| e.to_string())?;
    let got = f_s(&set, &pi).map_err(|e| e.to_string())?.to_string();
    ensure(got == "(15,17)(14)(6,8,16,13,7,12)(5,11)(4,10)(1,2,3,9)", || {
        format!("n=17 gave {}", got)
    })?;

    let set = Subset::parse(8, "4,7").map_err(|e| e.to_string())?;
    let pi: Permutation = "75218634".parse().map_err(|e: lyndon_parity::Error| e.to_string())?;
    let image = f_s(&set, &pi).map_err(|e| e.to_string())?;
    ensure(image.to_string() == "(3,6)(2,5)(1,4,7,8)", || {
        format!("n=8 cycle form {}", image)
    })?;
    let one_line = image.to_permutation().map_err(|e| e.to_string())?.to_string();
    ensure(one_line == "45672381", || format!("n=8 one-line {}", one_line))?;

    let full = Subset::full(8);
    let pi: Permutation = "(6)(1,7,3,8,4,2,5)"
        .parse()
        .map_err(|e: lyndon_parity::Error| e.to_string())?;
    let comp = f_s_traced(&full, &pi).map_err(|e| e.to_string())?;
    ensure(comp.trace.rules() == [Rule::S, Rule::P, Rule::P, Rule::F], || {
        format!("rules {:?}", comp.trace.rules())
    })?;
    ensure(comp.image.to_string() == "(4,6)(3,8)(1,7,2,5)", || {
        format!("full-set image {}", comp.image)
    })
}

fn exhaustive_bijection() -> Outcome {
    for k in 1..=3 {
        for n in 0..=9 {
            let r = verify_word_bijection(k, n).map_err(|e| e.to_string())?;
            ensure(r.passed, || r.to_string())?;
        }
    }
    Ok(())
}

fn counting_theorems() -> Outcome {
    let closed = [1, 1, 3, 9, 45, 225, 1575, 11025];
    for n in 1..=8 {
        let r = verify_theorem_counts(n).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.to_string())?;
        ensure(r.total_odd == closed[n - 1] && r.total_even == closed[n - 1], || {
            format!("n={} totals {} / {}", n, r.total_odd, r.total_even)
        })?;
        ensure(r.exact.len() == 1 << (n - 1) && r.subset.len() == 1 << (n - 1), || {
            "row count".into()
        })?;
    }
    Ok(())
}

fn necklace_roundtrips() -> Outcome {
    for n in 1..=7 {
        let r = verify_necklace_maps(n).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.to_string())?;
    }
    for n in 1..=8 {
        let rows = verify_necklace_counts(n).map_err(|e| e.to_string())?;
        ensure(rows.iter().all(|r| r.passed), || {
            format!("necklace counts differ at n={}", n)
        })?;
    }
    Ok(())
}

fn series_identities() -> Outcome {
    for k in 1..=3 {
        for d in 1..=8 {
            let r = verify_gf_identity(k, d).map_err(|e| e.to_string())?;
            ensure(r.passed, || r.to_string())?;
        }
    }
    for k in 1..=3 {
        for n in 1..=6 {
            let counts = count_word_classes(k, n).map_err(|e| e.to_string())?;
            for (series, buckets, side) in [
                (odd_class_series(k, n), &counts.odd, "odd"),
                (even_class_series(k, n), &counts.even, "even"),
            ] {
                let from_series: Vec<(Vec<u32>, i64)> = series
                    .terms()
                    .filter(|(e, _)| e.iter().sum::<u32>() as usize == n)
                    .map(|(e, &c)| (e.clone(), c))
                    .collect();
                let from_words: Vec<(Vec<u32>, i64)> = buckets
                    .iter()
                    .map(|(w, &c)| (w.counts().iter().map(|&x| x as u32).collect(), c as i64))
                    .collect();
                ensure(from_series == from_words, || {
                    format!("{} coefficients differ at k={}, n={}", side, k, n)
                })?;
            }
        }
    }
    for k in 1..=2 {
        for d in 1..=6 {
            for r in verify_substitution_symmetry(k, d).map_err(|e| e.to_string())? {
                ensure(r.passed, || r.to_string())?;
            }
        }
    }
    Ok(())
}

/// Greedy longest-Lyndon-prefix factorization with Lyndon testing by
/// comparing against every proper suffix.
fn naive_factors(w: &[u8]) -> Vec<Vec<u8>> {
    let is_lyndon = |x: &[u8]| !x.is_empty() && (1..x.len()).all(|i| x < &x[i..]);
    let mut out = Vec::new();
    let mut rest = w;
    while !rest.is_empty() {
        let len = (1..=rest.len())
            .rev()
            .find(|&l| is_lyndon(&rest[..l]))
            .expect("a letter is Lyndon");
        out.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    out
}

/// Letter-by-letter expansion with the direction flipping after each
/// matched letter.
fn alt_recursive(u: &[u8], i: usize, v: &[u8], j: usize, depth: usize, flipped: bool) -> Ordering {
    if depth == 0 {
        return Ordering::Equal;
    }
    let (a, b) = (u[i % u.len()], v[j % v.len()]);
    if a != b {
        let ord = a.cmp(&b);
        return if flipped { ord.reverse() } else { ord };
    }
    alt_recursive(u, i + 1, v, j + 1, depth - 1, !flipped)
}

fn oracle_cross_checks() -> Outcome {
    for k in 1..=3 {
        let alphabet = Alphabet::new(k).map_err(|e| e.to_string())?;
        for n in 1..=10 {
            for w in alphabet.words_of_length(n) {
                let duval: Vec<Vec<u8>> = lyndon_factors(&w).iter().map(|f| f.letters().to_vec()).collect();
                ensure(duval == naive_factors(w.letters()), || {
                    format!("factorization of {}", w)
                })?;
                let mut starts = Vec::new();
                let mut pos = 1;
                for f in &duval {
                    starts.push(pos);
                    pos += f.len();
                }
                let minima = factor_starts_via_suffix_minima(&w).map_err(|e| e.to_string())?;
                ensure(minima == starts, || {
                    format!("suffix minima of {}: {:?} vs {:?}", w, minima, starts)
                })?;
            }
        }
    }
    let alphabet = Alphabet::new(3).map_err(|e| e.to_string())?;
    let primitive: Vec<Word> = (1..=6)
        .flat_map(|n| alphabet.words_of_length(n))
        .filter(Word::is_primitive)
        .collect();
    for u in &primitive {
        for v in &primitive {
            let fast = alt_lex_compare_periodic(u, v).map_err(|e| e.to_string())?;
            let slow = alt_recursive(u, 0, v, 0, u.len() * v.len(), false);
            ensure(fast == slow, || {
                format!("alt order of {} vs {}: {:?} vs {:?}", u, v, fast, slow)
            })?;
        }
    }
    Ok(())
}

fn comparison_maps() -> Outcome {
    for n in [2, 4, 6, 8] {
        let r = verify_bona(n).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.to_string())?;
    }
    let diff = find_bona_difference(8)
        .map_err(|e| e.to_string())?
        .ok_or("no permutation separates the maps")?;
    let full = Subset::full(diff.n);
    let bona = bona_map(&diff.pi).map_err(|e| e.to_string())?;
    let fs = f_s(&full, &diff.pi)
        .and_then(|c| c.to_permutation())
        .map_err(|e| e.to_string())?;
    ensure(bona != fs && diff.pi.classify_parity().is_odd(), || {
        format!("difference at {} not confirmed", diff.pi)
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden traces", Duration::from_secs(1), golden_traces),
        ("2 end-to-end examples", Duration::from_secs(1), end_to_end_examples),
        (
            "3 exhaustive word bijection",
            Duration::from_secs(120),
            exhaustive_bijection,
        ),
        ("4 counting theorems", Duration::from_secs(60), counting_theorems),
        (
            "5 necklace-map roundtrips",
            Duration::from_secs(120),
            necklace_roundtrips,
        ),
        ("6 series identities", Duration::from_secs(30), series_identities),
        ("7 oracle cross-checks", Duration::from_secs(60), oracle_cross_checks),
        ("8 comparison maps", Duration::from_secs(30), comparison_maps),
    ];
    let mut all_ok = true;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(|()| ensure(elapsed < limit, || format!("took {:.2?}, limit {:.0?}", elapsed, limit)));
        match outcome {
            Ok(()) => println!("PASS  criterion {} ({:.2?})", name, elapsed),
            Err(msg) => {
                all_ok = false;
                println!("FAIL  criterion {} ({:.2?}): {}", name, elapsed, msg);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
