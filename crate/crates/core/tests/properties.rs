use std::cmp::Ordering;

use lyndon_parity::bijection::invariants::{check_omega_step, check_psi_step};
use lyndon_parity::bijection::{classify_word, f_s, f_s_inv, omega, psi, Rule};
use lyndon_parity::lyndon::{is_lyndon, isf, lyndon_factors, smallest_proper_suffix, standard_factorization};
use lyndon_parity::necklace::{phi, phi_inv, xi, xi_inv, NecklaceMultiset, Subset};
use lyndon_parity::perms::{foata_hat, foata_hat_inverse, Permutation};
use lyndon_parity::words::{alt_lex_compare_periodic, Bound, Word};
use lyndon_parity::Error;
use proptest::prelude::*;

fn word_strategy(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 0..=max_len).prop_map(Word::from_ranks)
}

fn nonempty_word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 1..=max_len).prop_map(Word::from_ranks)
}

/// Lyndon words obtained as the first factor of a random word.
fn lyndon_strategy(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    nonempty_word(k, max_len).prop_map(|w| lyndon_factors(&w).remove(0))
}

fn from_factors(mut factors: Vec<Word>) -> Word {
    factors.sort_by(|a, b| b.cmp(a));
    Word::concat(&factors)
}

/// Random word reduced to its distinct odd Lyndon factors.
fn odd_class_word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    word_strategy(k, max_len).prop_map(|w| {
        let mut factors: Vec<Word> = lyndon_factors(&w).into_iter().filter(Word::is_odd).collect();
        factors.dedup();
        from_factors(factors)
    })
}

/// Random word reduced to its even Lyndon factors plus an optional letter.
fn even_class_word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    (word_strategy(k, max_len), prop::option::of(0..k)).prop_map(|(w, letter)| {
        let mut factors: Vec<Word> = lyndon_factors(&w).into_iter().filter(Word::is_even).collect();
        factors.extend(letter.map(|l| Word::from_ranks(vec![l])));
        from_factors(factors)
    })
}

/// A permutation with odd cycles only, as shuffled values cut into odd blocks.
fn odd_cycle_permutation(max_cycles: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(prop_oneof![Just(1usize), Just(3), Just(5), Just(7)], 1..=max_cycles).prop_flat_map(|lens| {
        let n: usize = lens.iter().sum();
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |values| {
                let mut cycles = Vec::new();
                let mut start = 0;
                for &l in &lens {
                    cycles.push(values[start..start + l].to_vec());
                    start += l;
                }
                Permutation::from_cycles(&cycles).unwrap()
            })
    })
}

fn any_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

/// `Asc(π)` (or `Des(π)`) together with random extra elements of `[n-1]`.
fn superset(n: usize, required: &[usize], extra: u64) -> Subset {
    let mut elements: Vec<usize> = required.to_vec();
    elements.extend((1..n).filter(|i| extra >> (i - 1) & 1 == 1));
    elements.sort_unstable();
    elements.dedup();
    Subset::new(n, elements).unwrap()
}

proptest! {
    #[test]
    fn lyndon_iff_strictly_below_rotations(w in nonempty_word(3, 10)) {
        let rotations_larger = (1..w.len()).all(|i| w < w.rotation(i));
        prop_assert_eq!(is_lyndon(&w), rotations_larger);
    }

    #[test]
    fn factorization_is_unique_decreasing_lyndon(w in word_strategy(4, 16)) {
        let factors = lyndon_factors(&w);
        prop_assert_eq!(Word::concat(&factors), w.clone());
        prop_assert!(factors.iter().all(is_lyndon));
        prop_assert!(factors.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn last_factor_is_smallest_suffix(w in nonempty_word(3, 14)) {
        let factors = lyndon_factors(&w);
        let smallest = (0..w.len()).map(|i| w.suffix(i)).min().unwrap();
        prop_assert_eq!(factors.last().unwrap(), &smallest);
    }

    #[test]
    fn standard_factorization_properties(l in lyndon_strategy(3, 14)) {
        prop_assume!(l.len() >= 2);
        let sf = standard_factorization(&l).unwrap();
        prop_assert_eq!(sf.r.join(&sf.s), l.clone());
        prop_assert!(is_lyndon(&sf.r) && is_lyndon(&sf.s));
        prop_assert!(sf.r < sf.s);
        let smallest = (1..l.len()).map(|i| l.suffix(i)).min().unwrap();
        prop_assert_eq!(&sf.s, &smallest);
        prop_assert_eq!(smallest_proper_suffix(&l), Some(sf.r.len()));
        let longest_lyndon = (1..l.len()).map(|i| l.suffix(i)).find(is_lyndon).unwrap();
        prop_assert_eq!(&sf.s, &longest_lyndon);
    }

    #[test]
    fn isf_chain(l in lyndon_strategy(3, 10), u in prop::option::of(nonempty_word(3, 4))) {
        prop_assume!(l.is_even());
        let bound: Bound = u.into();
        match isf(&l, &bound) {
            Ok(d) => {
                prop_assert_eq!(d.word(), l.clone());
                let j = d.depth();
                let removed: Vec<&Word> = (1..=j).map(|i| d.s(i)).collect();
                prop_assert!(removed.windows(2).all(|p| p[0] <= p[1]));
                for s in &removed[..j - 1] {
                    prop_assert!(s.is_even() && **s < bound);
                }
                prop_assert!(d.last().is_odd() || *d.last() >= bound);
                prop_assert!(is_lyndon(d.head()));
                prop_assert!(d.head() < d.last());
            }
            Err(Error::IsfExhausted { .. }) => {
                let mut cur = l.clone();
                while cur.len() >= 2 {
                    let sf = standard_factorization(&cur).unwrap();
                    prop_assert!(sf.s.is_even() && sf.s < bound);
                    cur = sf.r;
                }
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn alt_order_is_a_total_order(u in nonempty_word(3, 5), v in nonempty_word(3, 5), w in nonempty_word(3, 5)) {
        prop_assume!(u.is_primitive() && v.is_primitive() && w.is_primitive());
        let uv = alt_lex_compare_periodic(&u, &v).unwrap();
        prop_assert_eq!(uv, alt_lex_compare_periodic(&v, &u).unwrap().reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        let vw = alt_lex_compare_periodic(&v, &w).unwrap();
        if uv != Ordering::Greater && vw != Ordering::Greater {
            prop_assert_ne!(alt_lex_compare_periodic(&u, &w).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn hat_roundtrip_and_boundary_partition(pi in any_permutation(12)) {
        prop_assert_eq!(foata_hat_inverse(&foata_hat(&pi)), pi.clone());
        let b = pi.boundary_sets();
        let mut all: Vec<usize> = b.descents.iter().chain(&b.ascents).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..pi.len()).collect::<Vec<_>>());
        prop_assert!(b.descents.iter().all(|d| !b.ascents.contains(d)));
    }

    #[test]
    fn phi_roundtrip(pi in any_permutation(10), extra in any::<u64>()) {
        let set = superset(pi.len(), &pi.boundary_sets().descents, extra);
        let m = phi(&set, &pi).unwrap();
        let mut lens = pi.cycle_lengths();
        lens.sort_unstable();
        prop_assert_eq!(m.cycle_structure(), lens);
        prop_assert_eq!(phi_inv(&set, &m).unwrap().to_permutation().unwrap(), pi);
    }

    #[test]
    fn xi_roundtrip(pi in odd_cycle_permutation(4), extra in any::<u64>()) {
        let set = superset(pi.len(), &pi.boundary_sets().ascents, extra);
        let m = xi(&set, &pi).unwrap();
        prop_assert!(classify_word(&m.to_word()).is_odd_distinct());
        prop_assert_eq!(xi_inv(&set, &m).unwrap().to_permutation().unwrap(), pi);
    }

    #[test]
    fn necklace_text_and_word_roundtrip(w in nonempty_word(4, 12)) {
        let m = NecklaceMultiset::from_word(&w);
        let parsed: NecklaceMultiset = m.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &m);
        prop_assert_eq!(m.to_word(), from_factors(lyndon_factors(&w)));
        prop_assert_eq!(m.total_length(), w.len());
    }

    #[test]
    fn psi_then_omega(w in odd_class_word(5, 18)) {
        let (img, trace) = psi(&w).unwrap();
        prop_assert!(classify_word(&img).is_even());
        let (back, _) = omega(&img).unwrap();
        prop_assert_eq!(back, w);
        for step in trace.steps.iter().filter(|s| s.rule != Rule::Insert1) {
            prop_assert_eq!(check_psi_step(step), Ok(()));
        }
    }

    #[test]
    fn omega_then_psi(w in even_class_word(5, 18)) {
        let (img, trace) = omega(&w).unwrap();
        prop_assert!(classify_word(&img).is_odd_distinct());
        let (back, _) = psi(&img).unwrap();
        prop_assert_eq!(back, w);
        for step in trace.steps.iter().filter(|s| s.rule != Rule::Extract1) {
            prop_assert_eq!(check_omega_step(step), Ok(()));
        }
    }

    #[test]
    fn fs_roundtrip(pi in odd_cycle_permutation(4), extra in any::<u64>()) {
        let set = superset(pi.len(), &pi.boundary_sets().ascents, extra);
        let image = f_s(&set, &pi).unwrap().to_permutation().unwrap();
        prop_assert!(image.classify_parity().is_even());
        prop_assert!(set.contains_all(&image.boundary_sets().descents));
        prop_assert_eq!(f_s_inv(&set, &image).unwrap().to_permutation().unwrap(), pi);
    }
}
