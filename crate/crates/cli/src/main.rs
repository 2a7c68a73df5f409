//! `lyndon-parity`: factor words, run the odd/even bijections with step
//! traces, apply the necklace encodings, and run the exhaustive checks.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lyndon_parity::bijection::{classify_word, f_s_inv_traced, f_s_traced, omega, psi, BijectionTrace, FsComputation};
use lyndon_parity::harness::{
    verify_fs_bijectivity, verify_necklace_counts, verify_necklace_maps, verify_theorem_counts, verify_word_bijection,
};
use lyndon_parity::lyndon::{isf, lyndon_factors, standard_factorization};
use lyndon_parity::necklace::{phi, phi_inv, xi, xi_inv, NecklaceMultiset, Subset};
use lyndon_parity::perms::{bona_map, foata_hat, foata_hat_inverse, CycleForm, Permutation};
use lyndon_parity::series::verify_gf_identity;
use lyndon_parity::words::{Alphabet, Bound, Word};
use lyndon_parity::{Error, Result};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lyndon-parity",
    version,
    about = "Lyndon factorizations, parity bijections and necklace encodings"
)]
struct Cli {
    /// Output as human-readable text or as JSON records, one per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Alphabet size; input words must use only its first k letters.
    /// Defaults to the smallest alphabet containing the input.
    #[arg(long, global = true)]
    alphabet: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Lyndon factorization, factors separated by `|`.
    Factorize { word: String },
    /// Standard factorization `r!s` of a Lyndon word.
    Stdfact { word: String },
    /// Iterated standard factorization of a Lyndon word.
    Isf {
        word: String,
        /// Reference word, or `inf`.
        #[arg(long, default_value = "inf")]
        wrt: String,
    },
    /// Descent and ascent sets of a permutation.
    Desasc { perm: String },
    /// Parity class of a permutation, or class of a word.
    Classify { input: String },
    /// Bóna's bijection from odd-cycle to even-cycle permutations (even n).
    Bona { perm: String },
    /// Cycles smallest-first, in decreasing order, parentheses dropped.
    Hat {
        perm: String,
        /// Recover the permutation from its hat word instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Necklaces of a permutation with descent set inside `--set`.
    Phi {
        #[arg(long, default_value = "")]
        set: String,
        perm: String,
    },
    /// Permutation from a multiset of necklaces, ranked lexicographically.
    PhiInv {
        #[arg(long, default_value = "")]
        set: String,
        necklaces: String,
    },
    /// Necklaces of an odd-cycle permutation with ascent set inside `--set`.
    Xi {
        #[arg(long, default_value = "")]
        set: String,
        perm: String,
    },
    /// Permutation from distinct odd necklaces, ranked in alternating order.
    XiInv {
        #[arg(long, default_value = "")]
        set: String,
        necklaces: String,
    },
    /// Map a word with odd, distinct Lyndon factors to the even class.
    Psi {
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Map a word with even Lyndon factors (plus at most one letter) back.
    Omega {
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// The bijection on permutations: odd cycles with ascents in S to even cycles with descents in S.
    Fs {
        #[arg(long, default_value = "")]
        set: String,
        perm: String,
        #[arg(long)]
        trace: bool,
    },
    /// Inverse of `fs`.
    FsInv {
        #[arg(long, default_value = "")]
        set: String,
        perm: String,
        #[arg(long)]
        trace: bool,
    },
    /// Compare odd-cycle and even-cycle permutation counts for every subset.
    VerifyCounts {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Sweep `fs` over every subset and every permutation of size n.
    VerifyFs {
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Check the Lyndon product identity through a total degree.
    VerifyGf {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Run psi and omega on every word of length n over k letters.
    VerifyWords {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
    /// Roundtrip both necklace encodings and compare necklace counts.
    VerifyNecklaces {
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
}

struct Ctx {
    format: Format,
    alphabet: Option<Alphabet>,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<Word> {
        match self.alphabet {
            Some(a) => a.parse(text),
            None => text.parse(),
        }
    }

    fn bound(&self, text: &str) -> Result<Bound> {
        match text {
            "inf" | "∞" => Ok(Bound::Infinity),
            _ => self.word(text).map(Bound::Finite),
        }
    }

    fn necklaces(&self, text: &str) -> Result<NecklaceMultiset> {
        let m: NecklaceMultiset = text.parse()?;
        if let Some(a) = self.alphabet {
            if !a.contains(&m.to_word()) {
                return Err(Error::Parse(format!(
                    "{} uses letters outside the alphabet of size {}",
                    m,
                    a.size()
                )));
            }
        }
        Ok(m)
    }

    /// Prints the text form or a single JSON record.
    fn emit(&self, text: impl Display, record: impl Serialize) {
        match self.format {
            Format::Text => println!("{}", text),
            Format::Records => println!("{}", serde_json::to_string(&record).expect("records serialize")),
        }
    }

    fn emit_trace(&self, trace: &BijectionTrace) {
        match self.format {
            Format::Text => print!("{}", trace.table()),
            Format::Records => {
                for r in trace.records() {
                    println!("{}", serde_json::to_string(&r).expect("records serialize"));
                }
            }
        }
    }
}

fn perm(text: &str) -> Result<Permutation> {
    text.parse()
}

fn set_for(n: usize, text: &str) -> Result<Subset> {
    Subset::parse(n, text)
}

fn factors_text(factors: &[Word]) -> String {
    if factors.is_empty() {
        "-".into()
    } else {
        factors.iter().map(Word::to_string).collect::<Vec<_>>().join("|")
    }
}

fn set_text(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn strings(ws: &[Word]) -> Vec<String> {
    ws.iter().map(Word::to_string).collect()
}

fn perm_record(cycles: &CycleForm) -> Result<serde_json::Value> {
    let p = cycles.to_permutation()?;
    Ok(json!({ "cycle_form": cycles.to_string(), "one_line": p.one_line() }))
}

fn perm_text(cycles: &CycleForm) -> Result<String> {
    Ok(format!("{} = {}", cycles, cycles.to_permutation()?))
}

fn emit_fs(ctx: &Ctx, comp: &FsComputation, forward: bool, trace: bool) -> Result<()> {
    let (map, back) = if forward {
        ("psi", "phi_inv")
    } else {
        ("omega", "xi_inv")
    };
    if trace {
        if ctx.format == Format::Text {
            println!("necklaces: {}", comp.necklaces_in);
            println!("word: {}", factors_text(&lyndon_factors(&comp.word_in)));
        }
        ctx.emit_trace(&comp.trace);
        if ctx.format == Format::Text {
            println!("{}: {}", map, factors_text(&lyndon_factors(&comp.word_out)));
            println!("necklaces: {}", comp.necklaces_out);
            println!("{}: {}", back, perm_text(&comp.image)?);
        }
        return Ok(());
    }
    let mut record = perm_record(&comp.image)?;
    record["necklaces_in"] = json!(comp.necklaces_in.to_string());
    record["word_in"] = json!(comp.word_in.to_string());
    record["word_out"] = json!(comp.word_out.to_string());
    record["necklaces_out"] = json!(comp.necklaces_out.to_string());
    ctx.emit(perm_text(&comp.image)?, record);
    Ok(())
}

fn word_map(ctx: &Ctx, word: &str, trace: bool, map: fn(&Word) -> Result<(Word, BijectionTrace)>) -> Result<()> {
    let w = ctx.word(word)?;
    let (out, steps) = map(&w)?;
    if trace {
        ctx.emit_trace(&steps);
    } else {
        let factors = lyndon_factors(&out);
        ctx.emit(
            factors_text(&factors),
            json!({ "input": w.to_string(), "output": out.to_string(), "factors": strings(&factors) }),
        );
    }
    Ok(())
}

/// `Ok(false)` when a verification ran and found a failure.
fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx {
        format: cli.format,
        alphabet: cli.alphabet.map(Alphabet::new).transpose()?,
    };
    match cli.command {
        Command::Factorize { word } => {
            let w = ctx.word(&word)?;
            let factors = lyndon_factors(&w);
            ctx.emit(
                factors_text(&factors),
                json!({ "word": w.to_string(), "factors": strings(&factors) }),
            );
        }
        Command::Stdfact { word } => {
            let sf = standard_factorization(&ctx.word(&word)?)?;
            ctx.emit(&sf, json!({ "r": sf.r.to_string(), "s": sf.s.to_string() }));
        }
        Command::Isf { word, wrt } => {
            let d = isf(&ctx.word(&word)?, &ctx.bound(&wrt)?)?;
            let removed: Vec<String> = (1..=d.depth()).map(|i| d.s(i).to_string()).collect();
            ctx.emit(
                &d,
                json!({ "head": d.head().to_string(), "removed": removed, "wrt": d.reference().to_string() }),
            );
        }
        Command::Desasc { perm: p } => {
            let b = perm(&p)?.boundary_sets();
            ctx.emit(
                format!("Des = {}\nAsc = {}", set_text(&b.descents), set_text(&b.ascents)),
                &b,
            );
        }
        Command::Classify { input } => {
            let is_word = input == "-" || input.chars().all(|c| c.is_ascii_lowercase());
            let (kind, class) = if is_word {
                ("word", classify_word(&ctx.word(&input)?).to_string())
            } else {
                ("permutation", perm(&input)?.classify_parity().to_string())
            };
            ctx.emit(&class, json!({ "input": input, "kind": kind, "class": class }));
        }
        Command::Bona { perm: p } => {
            let image = bona_map(&perm(&p)?)?;
            let cycles = CycleForm { cycles: image.cycles() };
            ctx.emit(perm_text(&cycles)?, perm_record(&cycles)?);
        }
        Command::Hat { perm: p, inverse } => {
            let p = perm(&p)?;
            let out = if inverse { foata_hat_inverse(&p) } else { foata_hat(&p) };
            let cycles = CycleForm { cycles: out.cycles() };
            ctx.emit(&out, perm_record(&cycles)?);
        }
        Command::Phi { set, perm: p } => {
            let p = perm(&p)?;
            let m = phi(&set_for(p.len(), &set)?, &p)?;
            ctx.emit(
                &m,
                json!({ "necklaces": m.to_string(), "word": m.to_word().to_string() }),
            );
        }
        Command::Xi { set, perm: p } => {
            let p = perm(&p)?;
            let m = xi(&set_for(p.len(), &set)?, &p)?;
            ctx.emit(
                &m,
                json!({ "necklaces": m.to_string(), "word": m.to_word().to_string() }),
            );
        }
        Command::PhiInv { set, necklaces } => {
            let m = ctx.necklaces(&necklaces)?;
            let cycles = phi_inv(&set_for(m.total_length(), &set)?, &m)?;
            ctx.emit(perm_text(&cycles)?, perm_record(&cycles)?);
        }
        Command::XiInv { set, necklaces } => {
            let m = ctx.necklaces(&necklaces)?;
            let cycles = xi_inv(&set_for(m.total_length(), &set)?, &m)?;
            ctx.emit(perm_text(&cycles)?, perm_record(&cycles)?);
        }
        Command::Psi { word, trace } => word_map(&ctx, &word, trace, psi)?,
        Command::Omega { word, trace } => word_map(&ctx, &word, trace, omega)?,
        Command::Fs { set, perm: p, trace } => {
            let p = perm(&p)?;
            let comp = f_s_traced(&set_for(p.len(), &set)?, &p)?;
            emit_fs(&ctx, &comp, true, trace)?;
        }
        Command::FsInv { set, perm: p, trace } => {
            let p = perm(&p)?;
            let comp = f_s_inv_traced(&set_for(p.len(), &set)?, &p)?;
            emit_fs(&ctx, &comp, false, trace)?;
        }
        Command::VerifyCounts { n } => {
            let r = verify_theorem_counts(n)?;
            ctx.emit(&r, &r);
            return Ok(r.passed);
        }
        Command::VerifyFs { n } => {
            let r = verify_fs_bijectivity(n)?;
            ctx.emit(&r, &r);
            return Ok(r.passed);
        }
        Command::VerifyGf { k, degree } => {
            let r = verify_gf_identity(k, degree)?;
            let record = json!({
                "k": r.k,
                "degree": r.degree,
                "left": r.left.to_string(),
                "right": r.right.to_string(),
                "passed": r.passed,
                "first_difference": r.first_difference,
            });
            ctx.emit(&r, record);
            return Ok(r.passed);
        }
        Command::VerifyWords { k, n } => {
            let k = ctx.alphabet.map_or(k, |a| a.size());
            let r = verify_word_bijection(k, n)?;
            ctx.emit(&r, &r);
            return Ok(r.passed);
        }
        Command::VerifyNecklaces { n } => {
            let maps = verify_necklace_maps(n.min(lyndon_parity::harness::MAX_SWEEP_N))?;
            let counts = verify_necklace_counts(n)?;
            let counts_ok = counts.iter().all(|r| r.passed);
            let text = format!(
                "{}\nnecklace counts for n = {}: {}",
                maps,
                n,
                if counts_ok { "PASS" } else { "FAIL" }
            );
            ctx.emit(text, json!({ "maps": maps, "counts": counts }));
            return Ok(maps.passed && counts_ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
