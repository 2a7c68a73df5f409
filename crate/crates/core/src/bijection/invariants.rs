//! Per-step properties of `Ψ` and `Ω` traces, checked against the states a
//! step connects. Each check returns a description of the first violated
//! property.

use crate::lyndon::{is_lyndon, lyndon_factors, split_smallest_suffix};
use crate::words::{Bound, Word};

use super::{Rule, Step, StepDetail};

pub type Violation = String;

fn bound_at(factors: &[Word], one_based: isize) -> Bound {
    if one_based <= 0 {
        Bound::Infinity
    } else {
        Bound::Finite(factors[one_based as usize - 1].clone())
    }
}

fn odd_and_distinct(factors: &[Word]) -> bool {
    factors.iter().all(Word::is_odd) && factors.windows(2).all(|p| p[0] > p[1])
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), Violation> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Properties of a `ψ` step `(O, E) -> (O', E')`.
pub fn check_psi_step(step: &Step) -> Result<(), Violation> {
    let (o, e) = (&step.before.o, &step.before.e);
    let (o2, e2) = (&step.after.o, &step.after.e);
    ensure(o.len() >= o2.len() + 2 && (o.len() - o2.len()) % 2 == 0, || {
        format!("|O| did not drop by a positive even amount: {} -> {}", o, o2)
    })?;
    ensure(Word::concat([o, e]).len() == Word::concat([o2, e2]).len(), || {
        "length changed".into()
    })?;
    let before = lyndon_factors(o);
    let after = lyndon_factors(o2);
    let m = before.len();
    let h = after.len() as isize;

    let expected: Vec<Word> = match (step.rule, &step.detail) {
        (Rule::S, StepDetail::Split(sf)) => before[..m - 1].iter().cloned().chain([sf.r.clone()]).collect(),
        (Rule::P, StepDetail::Split(sf)) => before[..m - 1].iter().cloned().chain([sf.s.clone()]).collect(),
        (Rule::F, _) => before[..m - 2].to_vec(),
        (r, _) => return Err(format!("unexpected rule {} in a psi step", r)),
    };
    ensure(after == expected, || {
        format!("factors of O' are {:?}, expected {:?}", after, expected)
    })?;
    ensure(odd_and_distinct(&after), || {
        format!("O' = {} has even or repeated factors", o2)
    })?;

    ensure(*e2 < bound_at(&after, h - 1), || {
        format!("E' = {} is not below o'_(h-1)", e2)
    })?;
    let last = bound_at(&after, h);
    match (step.rule, &step.detail) {
        (Rule::F, _) => ensure(*e2 < last, || format!("after F, E' = {} is not below o'_h", e2))?,
        (Rule::P, _) => ensure(*e2 < last && *e < last, || {
            format!("after P, E or E' is not below o'_h = {}", last)
        })?,
        (Rule::S, StepDetail::Split(sf)) => {
            let e_factors = lyndon_factors(e2);
            ensure(e_factors.first() == Some(&sf.s), || {
                format!("after S, s = {} is not the leftmost factor of E' = {}", sf.s, e2)
            })?;
            ensure(last < sf.s && sf.s <= *e2, || "after S, o'_h < s <= E' fails".into())?;
        }
        _ => {}
    }

    let e_factors = lyndon_factors(e2);
    ensure(e_factors.iter().all(Word::is_even), || {
        format!("E' = {} has an odd factor", e2)
    })?;
    let moved = e2.len() - e.len();
    ensure(e2[moved..] == e[..], || "E is not a suffix of E'".into())?;
    ensure(e_factors.first().map_or(0, |f| f.len()) >= moved, || {
        format!("moved subword is not inside the leftmost factor of E' = {}", e2)
    })
}

/// Properties of an `ω` step `(O', E') -> (O, E)`.
pub fn check_omega_step(step: &Step) -> Result<(), Violation> {
    let (o1, e1) = (&step.before.o, &step.before.e);
    let (o, e) = (&step.after.o, &step.after.e);
    ensure(e.len() < e1.len(), || "E' did not shrink".into())?;

    let e_factors = lyndon_factors(e);
    ensure(e_factors.iter().all(Word::is_even), || {
        format!("E = {} has an odd factor", e)
    })?;

    let before = lyndon_factors(o1);
    let after = lyndon_factors(o);
    let h = before.len();
    let first = lyndon_factors(e1).into_iter().next().ok_or("E' was empty")?;
    let expected: Vec<Word> = match (step.rule, &step.detail) {
        (Rule::SPrime, _) => {
            let last = before.last().ok_or("S' with empty O'")?;
            before[..h - 1].iter().cloned().chain([last.join(&first)]).collect()
        }
        (Rule::PPrime, StepDetail::Isf(d)) => {
            let last = before.last().ok_or("P' with empty O'")?;
            let merged = Word::concat([d.head(), d.last(), last]);
            before[..h - 1].iter().cloned().chain([merged]).collect()
        }
        (Rule::FPrime, StepDetail::Isf(d)) => before
            .iter()
            .cloned()
            .chain([d.last().clone(), d.head().clone()])
            .collect(),
        (r, _) => return Err(format!("unexpected rule {} in an omega step", r)),
    };
    ensure(after == expected, || {
        format!("factors of O are {:?}, expected {:?}", after, expected)
    })?;
    ensure(odd_and_distinct(&after), || {
        format!("O = {} has even or repeated factors", o)
    })?;

    let m = after.len() as isize;
    ensure(*e < bound_at(&after, m - 1), || {
        format!("E = {} is not below o_(m-1)", e)
    })?;

    let om = &after[after.len() - 1];
    let split = split_smallest_suffix(om);
    if let (Some(sf), Some(e_first)) = (&split, e_factors.first()) {
        ensure(e_first <= &sf.s, || {
            format!("leftmost factor {} of E exceeds s = {}", e_first, sf.s)
        })?;
    }
    match (step.rule, &step.detail) {
        (Rule::SPrime, _) => {
            let sf = split.ok_or("after S', o_m is a single letter")?;
            ensure(
                sf.s == first && is_lyndon(&sf.r) && Some(&sf.r) == before.last(),
                || format!("after S', standard factorization of {} is {}", om, sf),
            )?;
        }
        (Rule::PPrime, StepDetail::Isf(d)) => {
            let sf = split.ok_or("after P', o_m is a single letter")?;
            ensure(sf.r == d.head().join(d.last()) && Some(&sf.s) == before.last(), || {
                format!("after P', standard factorization of {} is {}", om, sf)
            })?;
        }
        _ => {}
    }
    Ok(())
}
