//! The noisy insertion channel: complement insertions, 1-tandem duplications,
//! at most one random insertion, reproducible corruption traces, and bounded
//! brute-force descendant-cone oracles.

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::alphabet::{Sym, Word};
use crate::error::{Error, Result};
use crate::signature::{compute_signature, is_irreducible};

/// Default refusal threshold for cone enumeration; cone growth is
/// exponential, so fail loudly instead of thrashing.
pub const DEFAULT_CONE_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    /// Insert the complement of the symbol at `position` right after it.
    Complement,
    /// Insert a copy of the symbol at `position` right after it.
    Tandem,
    /// Insert an arbitrary symbol after the first `position` symbols.
    Random,
}

impl EventKind {
    pub fn name(self) -> &'static str {
        match self {
            EventKind::Complement => "complement",
            EventKind::Tandem => "tandem",
            EventKind::Random => "random",
        }
    }
}

/// One insertion event. `position` is the 0-based rule index interpreted
/// against the word length at the moment the event is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Event {
    pub kind: EventKind,
    pub position: usize,
    pub symbol: Option<Sym>,
}

/// An ordered list of insertion events reproducibly describing a corruption.
/// At most one event may be random.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChannelTrace {
    pub events: Vec<Event>,
    pub seed: Option<u64>,
}

/// Complement insertion `T^c_i`: `uvw -> u v v̄ w` with `|u| = i`; identity
/// when the word is shorter than `i+1`.
pub fn complement_insertion(x: &Word, i: usize) -> Word {
    if x.len() < i + 1 {
        return x.clone();
    }
    let alphabet = x.alphabet();
    let mut symbols = Vec::with_capacity(x.len() + 1);
    symbols.extend_from_slice(&x.symbols()[..=i]);
    symbols.push(alphabet.comp(x.symbols()[i]));
    symbols.extend_from_slice(&x.symbols()[i + 1..]);
    Word::from_validated(alphabet, symbols)
}

/// 1-tandem duplication `T^t_i`: `uvw -> u v v w`; identity when the word is
/// shorter than `i+1`.
pub fn tandem_duplication(x: &Word, i: usize) -> Word {
    if x.len() < i + 1 {
        return x.clone();
    }
    let mut symbols = Vec::with_capacity(x.len() + 1);
    symbols.extend_from_slice(&x.symbols()[..=i]);
    symbols.push(x.symbols()[i]);
    symbols.extend_from_slice(&x.symbols()[i + 1..]);
    Word::from_validated(x.alphabet(), symbols)
}

/// Insert symbol `r` after the first `i` symbols (`i = 0` prepends,
/// `i = len` appends). Unlike the two rules above there is no identity
/// branch: the event must land inside or at the ends.
pub fn random_insertion(x: &Word, i: usize, r: Sym) -> Result<Word> {
    if i > x.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: x.len(),
        });
    }
    x.alphabet().check_symbol(r)?;
    let mut symbols = Vec::with_capacity(x.len() + 1);
    symbols.extend_from_slice(&x.symbols()[..i]);
    symbols.push(r);
    symbols.extend_from_slice(&x.symbols()[i..]);
    Ok(Word::from_validated(x.alphabet(), symbols))
}

/// Fold the trace's events over `x`, left to right.
pub fn apply_trace(x: &Word, trace: &ChannelTrace) -> Result<Word> {
    let mut word = x.clone();
    let mut random_seen = false;
    for (index, event) in trace.events.iter().enumerate() {
        let bad = |reason: String| Error::InvalidTrace { index, reason };
        match event.kind {
            EventKind::Complement | EventKind::Tandem => {
                if event.symbol.is_some() {
                    return Err(bad(format!(
                        "{} events carry no symbol",
                        event.kind.name()
                    )));
                }
                word = match event.kind {
                    EventKind::Complement => complement_insertion(&word, event.position),
                    _ => tandem_duplication(&word, event.position),
                };
            }
            EventKind::Random => {
                if random_seen {
                    return Err(bad("at most one random insertion per trace".to_string()));
                }
                random_seen = true;
                let r = event
                    .symbol
                    .ok_or_else(|| bad("random event requires a symbol".to_string()))?;
                word = random_insertion(&word, event.position, r)
                    .map_err(|e| bad(e.to_string()))?;
            }
        }
    }
    Ok(word)
}

/// Sample a trace with exactly `ct_budget` complement/tandem events (kind and
/// position uniform over non-identity positions) and, when `with_random`, one
/// random insertion at a uniformly chosen slot in the event sequence.
/// Deterministic in `(x, ct_budget, with_random, seed)`.
pub fn sample_noisy_trace(
    x: &Word,
    ct_budget: usize,
    with_random: bool,
    seed: u64,
) -> ChannelTrace {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let q = x.alphabet().q();
    let random_slot = if with_random {
        Some(rng.random_range(0..=ct_budget))
    } else {
        None
    };
    let mut events = Vec::new();
    let mut len = x.len();
    for k in 0..=ct_budget {
        if random_slot == Some(k) {
            let position = rng.random_range(0..=len);
            let symbol = rng.random_range(0..q);
            events.push(Event {
                kind: EventKind::Random,
                position,
                symbol: Some(symbol),
            });
            len += 1;
        }
        if k < ct_budget {
            let kind = if rng.random_bool(0.5) {
                EventKind::Complement
            } else {
                EventKind::Tandem
            };
            // positions >= len are identity events; sample an effective one
            let position = if len == 0 { 0 } else { rng.random_range(0..len) };
            events.push(Event {
                kind,
                position,
                symbol: None,
            });
            if len > 0 {
                len += 1;
            }
        }
    }
    ChannelTrace {
        events,
        seed: Some(seed),
    }
}

/// Exact set of words reachable from `x` with at most `budget`
/// complement/tandem insertions (including `x` itself), by breadth-first
/// closure. Refuses once the closure exceeds `cap` words.
pub fn enumerate_ct_descendants(
    x: &Word,
    budget: usize,
    cap: usize,
) -> Result<Vec<Word>> {
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(x.clone());
    let mut frontier = vec![x.clone()];
    for _ in 0..budget {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..w.len() {
                for y in [complement_insertion(w, i), tandem_duplication(w, i)] {
                    if seen.insert(y.clone()) {
                        if seen.len() > cap {
                            return Err(cap_exceeded(cap, seen.len()));
                        }
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(sorted(seen))
}

/// Exact set of words reachable with at most `ct_budget` complement/tandem
/// insertions and at most one random insertion interleaved anywhere in the
/// event sequence.
pub fn enumerate_noisy_descendants(
    x: &Word,
    ct_budget: usize,
    cap: usize,
) -> Result<Vec<Word>> {
    let q = x.alphabet().q();
    let mut words: HashSet<Word> = HashSet::new();
    words.insert(x.clone());
    let mut seen_states: HashSet<(Word, usize, bool)> = HashSet::new();
    let mut queue: VecDeque<(Word, usize, bool)> = VecDeque::new();
    seen_states.insert((x.clone(), 0, false));
    queue.push_back((x.clone(), 0, false));
    while let Some((w, ct_used, random_used)) = queue.pop_front() {
        let push = |state: (Word, usize, bool),
                        words: &mut HashSet<Word>,
                        queue: &mut VecDeque<(Word, usize, bool)>,
                        seen_states: &mut HashSet<(Word, usize, bool)>|
         -> Result<()> {
            if seen_states.insert(state.clone()) {
                words.insert(state.0.clone());
                if words.len() > cap {
                    return Err(cap_exceeded(cap, words.len()));
                }
                queue.push_back(state);
            }
            Ok(())
        };
        if ct_used < ct_budget {
            for i in 0..w.len() {
                for y in [complement_insertion(&w, i), tandem_duplication(&w, i)] {
                    push(
                        (y, ct_used + 1, random_used),
                        &mut words,
                        &mut queue,
                        &mut seen_states,
                    )?;
                }
            }
        }
        if !random_used {
            for i in 0..=w.len() {
                for r in 0..q {
                    let y = random_insertion(&w, i, r).expect("in-range insertion");
                    push((y, ct_used, true), &mut words, &mut queue, &mut seen_states)?;
                }
            }
        }
    }
    Ok(sorted(words))
}

/// The CT-descendant cones of `x` and `y` intersect iff their signatures are
/// equal.
pub fn cones_intersect(x: &Word, y: &Word) -> Result<bool> {
    x.check_same_alphabet(y)?;
    Ok(compute_signature(x).word() == compute_signature(y).word())
}

/// For irreducible `x`, membership of `y` in the (unbounded) CT-descendant
/// cone of `x` reduces to a signature check.
pub fn is_ct_descendant_of_irreducible(y: &Word, x: &Word) -> Result<bool> {
    x.check_same_alphabet(y)?;
    if !is_irreducible(x) {
        return Err(Error::NotIrreducible);
    }
    Ok(compute_signature(y).word() == x)
}

fn cap_exceeded(cap: usize, reached: usize) -> Error {
    Error::EnumerationCapExceeded {
        cap: cap as u64,
        estimate: format!("at least {reached} words reachable"),
    }
}

fn sorted(set: HashSet<Word>) -> Vec<Word> {
    let mut v: Vec<Word> = set.into_iter().collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn q4() -> Alphabet {
        Alphabet::new(4).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(q4(), text).unwrap()
    }

    fn strings(words: &[Word]) -> Vec<String> {
        words.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn complement_insertion_examples() {
        assert_eq!(complement_insertion(&w("100231020"), 4), w("1002301020"));
        assert_eq!(complement_insertion(&w("0"), 0), w("03"));
        // identity branch: |x| < i + 1
        assert_eq!(complement_insertion(&w("01"), 5), w("01"));
    }

    #[test]
    fn tandem_duplication_examples() {
        assert_eq!(tandem_duplication(&w("10023010210"), 9), w("100230102110"));
        assert_eq!(tandem_duplication(&w("0"), 0), w("00"));
        assert_eq!(tandem_duplication(&w("01"), 7), w("01"));
    }

    #[test]
    fn random_insertion_examples() {
        assert_eq!(
            random_insertion(&w("1002301020"), 9, 0).unwrap(),
            w("10023010200")
        );
        assert_eq!(random_insertion(&w("01"), 0, 2).unwrap(), w("201"));
        assert_eq!(random_insertion(&w("01"), 2, 3).unwrap(), w("013"));
        assert!(matches!(
            random_insertion(&w("01"), 3, 0),
            Err(Error::PositionOutOfRange { position: 3, len: 2 })
        ));
        assert!(random_insertion(&w("01"), 0, 4).is_err());
    }

    #[test]
    fn apply_trace_reproduces_paper_examples() {
        let ct = |kind, position| Event {
            kind,
            position,
            symbol: None,
        };
        // Example 1: two complement insertions and one tandem duplication
        let trace = ChannelTrace {
            events: vec![
                ct(EventKind::Complement, 4),
                ct(EventKind::Complement, 8),
                ct(EventKind::Tandem, 9),
            ],
            seed: None,
        };
        assert_eq!(apply_trace(&w("100231020"), &trace).unwrap(), w("100230102110"));

        // Example 2: complement, random, then two tandem duplications
        let trace = ChannelTrace {
            events: vec![
                ct(EventKind::Complement, 4),
                Event {
                    kind: EventKind::Random,
                    position: 9,
                    symbol: Some(0),
                },
                ct(EventKind::Tandem, 3),
                ct(EventKind::Tandem, 10),
            ],
            seed: None,
        };
        assert_eq!(apply_trace(&w("100231020"), &trace).unwrap(), w("1002230102000"));

        // empty trace is the identity
        let empty = ChannelTrace::default();
        assert_eq!(apply_trace(&w("0312130"), &empty).unwrap(), w("0312130"));
    }

    #[test]
    fn apply_trace_rejects_invalid_events() {
        let x = w("01");
        let second_random = ChannelTrace {
            events: vec![
                Event { kind: EventKind::Random, position: 0, symbol: Some(1) },
                Event { kind: EventKind::Random, position: 0, symbol: Some(1) },
            ],
            seed: None,
        };
        assert!(matches!(
            apply_trace(&x, &second_random),
            Err(Error::InvalidTrace { index: 1, .. })
        ));
        let missing_symbol = ChannelTrace {
            events: vec![Event { kind: EventKind::Random, position: 0, symbol: None }],
            seed: None,
        };
        assert!(matches!(
            apply_trace(&x, &missing_symbol),
            Err(Error::InvalidTrace { index: 0, .. })
        ));
        let out_of_range = ChannelTrace {
            events: vec![Event { kind: EventKind::Random, position: 9, symbol: Some(0) }],
            seed: None,
        };
        assert!(matches!(
            apply_trace(&x, &out_of_range),
            Err(Error::InvalidTrace { index: 0, .. })
        ));
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let x = w("100231020");
        let t1 = sample_noisy_trace(&x, 3, true, 42);
        let t2 = sample_noisy_trace(&x, 3, true, 42);
        assert_eq!(t1, t2);
        assert_eq!(t1.seed, Some(42));
        let t3 = sample_noisy_trace(&x, 3, true, 43);
        assert!(t1 != t3 || apply_trace(&x, &t1) == apply_trace(&x, &t3));
        // budget 0 without random is the empty trace
        let t0 = sample_noisy_trace(&x, 0, false, 7);
        assert!(t0.events.is_empty());
    }

    #[test]
    fn sampled_traces_land_in_the_bounded_enumeration() {
        let x = w("0312");
        for seed in 0..50 {
            for with_random in [false, true] {
                let t = sample_noisy_trace(&x, 2, with_random, seed);
                let y = apply_trace(&x, &t).unwrap();
                let cone = enumerate_noisy_descendants(&x, 2, DEFAULT_CONE_CAP).unwrap();
                assert!(cone.contains(&y), "seed={seed} y={y}");
                if !with_random {
                    let ct = enumerate_ct_descendants(&x, 2, DEFAULT_CONE_CAP).unwrap();
                    assert!(ct.contains(&y));
                }
            }
        }
    }

    #[test]
    fn ct_cone_examples() {
        let cone = enumerate_ct_descendants(&w("0"), 1, DEFAULT_CONE_CAP).unwrap();
        assert_eq!(strings(&cone), ["0", "00", "03"]);

        let cone = enumerate_ct_descendants(&w("0"), 0, DEFAULT_CONE_CAP).unwrap();
        assert_eq!(strings(&cone), ["0"]);

        // budget-1 cone of "01": complement/tandem at i = 0 and i = 1
        let cone = enumerate_ct_descendants(&w("01"), 1, DEFAULT_CONE_CAP).unwrap();
        assert_eq!(strings(&cone), ["001", "01", "011", "012", "031"]);
    }

    #[test]
    fn noisy_cone_examples() {
        // ct_budget = 0: x plus all single random insertions, deduplicated
        let cone = enumerate_noisy_descendants(&w("0"), 0, DEFAULT_CONE_CAP).unwrap();
        assert_eq!(
            strings(&cone),
            ["0", "00", "01", "02", "03", "10", "20", "30"]
        );

        // superset of the CT cone at the same budget
        let x = w("0312");
        let noisy = enumerate_noisy_descendants(&x, 2, DEFAULT_CONE_CAP).unwrap();
        let ct = enumerate_ct_descendants(&x, 2, DEFAULT_CONE_CAP).unwrap();
        for y in &ct {
            assert!(noisy.contains(y));
        }
    }

    #[test]
    fn enumeration_refuses_beyond_cap() {
        let err = enumerate_ct_descendants(&w("0123"), 3, 10);
        assert!(matches!(err, Err(Error::EnumerationCapExceeded { cap: 10, .. })));
        let err = enumerate_noisy_descendants(&w("0123"), 2, 10);
        assert!(matches!(err, Err(Error::EnumerationCapExceeded { cap: 10, .. })));
    }

    #[test]
    fn cone_intersection_via_signatures() {
        assert!(cones_intersect(&w("0312130"), &w("013")).unwrap());
        assert!(!cones_intersect(&w("013"), &w("031")).unwrap());
        let a6 = Alphabet::new(6).unwrap();
        let y6 = Word::parse(a6, "013").unwrap();
        assert!(matches!(
            cones_intersect(&w("013"), &y6),
            Err(Error::AlphabetMismatch(4, 6))
        ));
    }

    #[test]
    fn ct_descendant_of_irreducible() {
        // precondition violation: "100231020" contains "00"
        assert!(matches!(
            is_ct_descendant_of_irreducible(&w("100230102110"), &w("100231020")),
            Err(Error::NotIrreducible)
        ));
        // "031" is reducible (3 follows its complement 0), so it can only
        // appear as the descendant side of the query
        assert!(!is_ct_descendant_of_irreducible(&w("031"), &w("013")).unwrap());
        assert!(matches!(
            is_ct_descendant_of_irreducible(&w("013"), &w("031")),
            Err(Error::NotIrreducible)
        ));
        // every bounded CT-descendant of an irreducible word is recognized
        let x = w("0231");
        for y in enumerate_ct_descendants(&x, 2, DEFAULT_CONE_CAP).unwrap() {
            assert!(is_ct_descendant_of_irreducible(&y, &x).unwrap());
        }
    }

    #[test]
    fn length_accounting_for_effective_traces() {
        let x = w("0312130");
        for seed in 0..20 {
            let t = sample_noisy_trace(&x, 3, true, seed);
            let y = apply_trace(&x, &t).unwrap();
            // sampled positions are always non-identity
            assert_eq!(y.len(), x.len() + t.events.len());
        }
    }
}
