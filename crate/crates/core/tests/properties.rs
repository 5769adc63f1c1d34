//! Property tests for the structural invariants of words, signatures, the
//! channel primitives, and the array interleaving.

use proptest::prelude::*;

use ctcodes::alphabet::{Alphabet, Sym, Word};
use ctcodes::channel::{
    apply_trace, cones_intersect, enumerate_noisy_descendants, sample_noisy_trace,
    DEFAULT_CONE_CAP,
};
use ctcodes::codes::{deinterleave, interleave_rows, max_run_length, AscentProfile};
use ctcodes::signature::{compute_signature, is_irreducible};

fn alphabet_strategy() -> impl Strategy<Value = Alphabet> {
    prop_oneof![Just(4u16), Just(6), Just(8), Just(10), Just(12)]
        .prop_map(|q| Alphabet::new(q).unwrap())
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    alphabet_strategy().prop_flat_map(move |a| {
        prop::collection::vec(0..a.q(), 0..=max_len)
            .prop_map(move |symbols| Word::new(a, symbols).unwrap())
    })
}

fn nonempty_word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    alphabet_strategy().prop_flat_map(move |a| {
        prop::collection::vec(0..a.q(), 1..=max_len)
            .prop_map(move |symbols| Word::new(a, symbols).unwrap())
    })
}

proptest! {
    #[test]
    fn complement_word_is_an_involution(x in word_strategy(24)) {
        let twice = x.complement().complement();
        prop_assert_eq!(twice, x);
    }

    #[test]
    fn complement_word_preserves_length_and_moves_every_symbol(x in nonempty_word_strategy(24)) {
        let c = x.complement();
        prop_assert_eq!(c.len(), x.len());
        for (orig, flipped) in x.symbols().iter().zip(c.symbols()) {
            prop_assert_ne!(orig, flipped);
        }
    }

    #[test]
    fn textual_format_roundtrips(x in word_strategy(24)) {
        let text = x.to_string();
        let back = Word::parse(x.alphabet(), &text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn signature_word_is_irreducible_and_blocks_account_for_length(x in word_strategy(24)) {
        let sig = compute_signature(&x);
        prop_assert!(is_irreducible(sig.word()));
        prop_assert_eq!(sig.block_lengths().iter().sum::<usize>(), x.len());
        prop_assert_eq!(sig.block_lengths().len(), sig.word().len());
        // idempotence
        let again = compute_signature(sig.word());
        prop_assert_eq!(again.word(), sig.word());
        prop_assert!(again.block_lengths().iter().all(|&l| l == 1));
    }

    /// Expanding each signature symbol into any block of the recorded length
    /// drawn from the symbol and its complement reproduces the signature.
    #[test]
    fn signature_reconstruction_from_block_expansion(
        x in nonempty_word_strategy(16),
        choices in prop::collection::vec(any::<bool>(), 64),
    ) {
        let a = x.alphabet();
        let sig = compute_signature(&x);
        let mut expanded: Vec<Sym> = Vec::new();
        let mut pick = choices.into_iter().cycle();
        for (&head, &len) in sig.word().symbols().iter().zip(sig.block_lengths()) {
            expanded.push(head);
            for _ in 1..len {
                let s = if pick.next().unwrap() {
                    head
                } else {
                    a.complement_symbol(head).unwrap()
                };
                expanded.push(s);
            }
        }
        let rebuilt = Word::new(a, expanded).unwrap();
        let rebuilt_sig = compute_signature(&rebuilt);
        prop_assert_eq!(rebuilt_sig.word(), sig.word());
    }

    /// Complement/tandem-only traces never change the signature, and every
    /// sampled event is effective, so lengths add up.
    #[test]
    fn ct_traces_preserve_signature(x in nonempty_word_strategy(10), seed in any::<u64>(), budget in 0usize..4) {
        let trace = sample_noisy_trace(&x, budget, false, seed);
        let y = apply_trace(&x, &trace).unwrap();
        prop_assert_eq!(y.len(), x.len() + budget);
        let sig_y = compute_signature(&y);
        let sig_x = compute_signature(&x);
        prop_assert_eq!(sig_y.word(), sig_x.word());
        prop_assert!(cones_intersect(&x, &y).unwrap());
    }

    /// Same seed, same trace; and the corrupted word lands in the bounded
    /// noisy cone.
    #[test]
    fn sampled_corruptions_are_reproducible_members(x in nonempty_word_strategy(5), seed in any::<u64>(), with_random in any::<bool>()) {
        let t1 = sample_noisy_trace(&x, 1, with_random, seed);
        let t2 = sample_noisy_trace(&x, 1, with_random, seed);
        prop_assert_eq!(&t1, &t2);
        let y = apply_trace(&x, &t1).unwrap();
        let cone = enumerate_noisy_descendants(&x, 1, DEFAULT_CONE_CAP).unwrap();
        prop_assert!(cone.binary_search(&y).is_ok());
    }

    #[test]
    fn max_run_length_matches_naive_rescan(x in word_strategy(32)) {
        // independent oracle: count runs position by position
        let mut best = 0usize;
        let mut run = 0usize;
        let mut prev: Option<Sym> = None;
        for &s in x.symbols() {
            run = if prev == Some(s) { run + 1 } else { 1 };
            best = best.max(run);
            prev = Some(s);
        }
        prop_assert_eq!(max_run_length(&x), best);
    }

    #[test]
    fn interleave_is_inverse_of_deinterleave(x in word_strategy(24)) {
        if x.len() % 2 == 0 {
            let (r1, r2) = deinterleave(&x).unwrap();
            prop_assert_eq!(r1.len(), x.len() / 2);
            prop_assert_eq!(interleave_rows(&r1, &r2).unwrap(), x);
        } else {
            prop_assert!(deinterleave(&x).is_err());
        }
    }

    #[test]
    fn ascent_profile_is_deterministic_and_starts_high(x in nonempty_word_strategy(24)) {
        let beta = AscentProfile::of(&x);
        prop_assert!(beta.bits()[0]);
        prop_assert_eq!(beta.bits().len(), x.len());
        let recomputed = AscentProfile::of(&x);
        prop_assert_eq!(recomputed.bits(), beta.bits());
        // the shifted weighted sum differs from the weighted sum by the weight
        prop_assert_eq!(beta.weighted_sum() - beta.weight(), beta.shifted_weighted_sum());
    }

    #[test]
    fn words_over_different_alphabets_never_compare_equal(symbols in prop::collection::vec(0u16..4, 0..8)) {
        let w4 = Word::new(Alphabet::new(4).unwrap(), symbols.clone()).unwrap();
        let w6 = Word::new(Alphabet::new(6).unwrap(), symbols).unwrap();
        prop_assert_ne!(w4, w6);
    }
}
