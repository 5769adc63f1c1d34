//! Signature computation, irreducibility, and enumeration of Irr(n).
//!
//! A word factors uniquely into maximal blocks in which every symbol is the
//! block's first symbol or its complement; the signature is the sequence of
//! block heads. A word is irreducible when it equals its own signature, i.e.
//! no symbol is followed by itself or its complement.

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, Sym, Word};

/// The signature of a word together with the length of each source block.
///
/// The block lengths are not part of the paper-level signature but are needed
/// by channel oracles and diagnostics; they sum to the source word's length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    word: Word,
    block_lengths: Vec<usize>,
}

impl Signature {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn block_lengths(&self) -> &[usize] {
        &self.block_lengths
    }

    pub fn into_word(self) -> Word {
        self.word
    }
}

/// Greedy left-to-right block decomposition. The signature of the empty word
/// is the empty word with no blocks.
pub fn compute_signature(x: &Word) -> Signature {
    let alphabet = x.alphabet();
    let mut heads: Vec<Sym> = Vec::new();
    let mut lengths: Vec<usize> = Vec::new();
    for &s in x.symbols() {
        match heads.last() {
            Some(&h) if s == h || s == alphabet.comp(h) => {
                *lengths.last_mut().unwrap() += 1;
            }
            _ => {
                heads.push(s);
                lengths.push(1);
            }
        }
    }
    Signature {
        word: Word::from_validated(alphabet, heads),
        block_lengths: lengths,
    }
}

/// True iff no symbol is followed by itself or its complement; equivalently,
/// the word equals its own signature.
pub fn is_irreducible(x: &Word) -> bool {
    let alphabet = x.alphabet();
    x.symbols()
        .windows(2)
        .all(|p| p[1] != p[0] && p[1] != alphabet.comp(p[0]))
}

/// Exact number of irreducible words of length `n`: `q (q-2)^(n-1)`.
/// Returns 0 for `n = 0`, matching `enumerate_irr` which yields nothing.
pub fn count_irr(alphabet: Alphabet, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::ZERO;
    }
    let q = BigUint::from(alphabet.q());
    let base = BigUint::from(alphabet.q() - 2);
    q * base.pow(n as u32 - 1)
}

/// All irreducible words of length `n` in lexicographic order.
pub fn enumerate_irr(alphabet: Alphabet, n: usize) -> IrrWords {
    IrrWords::new(alphabet, n, None)
}

/// Irreducible words of length `n` whose first symbol is `first`, in
/// lexicographic order. Used to shard enumeration across workers.
pub(crate) fn enumerate_irr_with_first(alphabet: Alphabet, n: usize, first: Sym) -> IrrWords {
    IrrWords::new(alphabet, n, Some(first))
}

/// Lexicographic iterator over Irr(n), optionally pinned to a first symbol.
pub struct IrrWords {
    alphabet: Alphabet,
    n: usize,
    first: Option<Sym>,
    current: Option<Vec<Sym>>,
    done: bool,
}

impl IrrWords {
    fn new(alphabet: Alphabet, n: usize, first: Option<Sym>) -> Self {
        IrrWords {
            alphabet,
            n,
            first,
            current: None,
            done: n == 0,
        }
    }

    fn allowed(&self, prev: Sym, s: Sym) -> bool {
        s != prev && s != self.alphabet.comp(prev)
    }

    /// Smallest admissible symbol strictly greater than `from` (or from 0
    /// when `from` is None), given the preceding symbol.
    fn next_symbol(&self, prev: Option<Sym>, from: Option<Sym>) -> Option<Sym> {
        let start = match from {
            Some(s) => s + 1,
            None => 0,
        };
        (start..self.alphabet.q()).find(|&s| match prev {
            Some(p) => self.allowed(p, s),
            None => true,
        })
    }

    /// Fill positions `from..n` with the smallest admissible symbols.
    fn fill_smallest(&self, cur: &mut Vec<Sym>, from: usize) -> bool {
        for pos in from..self.n {
            let prev = if pos == 0 { None } else { Some(cur[pos - 1]) };
            match self.next_symbol(prev, None) {
                Some(s) => {
                    if pos < cur.len() {
                        cur[pos] = s;
                    } else {
                        cur.push(s);
                    }
                }
                None => return false,
            }
        }
        true
    }
}

impl Iterator for IrrWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                let mut cur = Vec::with_capacity(self.n);
                cur.push(self.first.unwrap_or(0));
                let mut cur = cur;
                if !self.fill_smallest(&mut cur, 1) {
                    self.done = true;
                    return None;
                }
                self.current = Some(cur);
            }
            Some(_) => {
                let mut cur = self.current.take().unwrap();
                // successor: bump the deepest position that can still grow
                let lowest = if self.first.is_some() { 1 } else { 0 };
                let mut pos = self.n;
                loop {
                    if pos <= lowest {
                        self.done = true;
                        return None;
                    }
                    pos -= 1;
                    let prev = if pos == 0 { None } else { Some(cur[pos - 1]) };
                    if let Some(s) = self.next_symbol(prev, Some(cur[pos])) {
                        cur[pos] = s;
                        if self.fill_smallest(&mut cur, pos + 1) {
                            break;
                        }
                        // q >= 4 guarantees fill always succeeds
                        unreachable!("suffix fill cannot fail for q >= 4");
                    }
                }
                self.current = Some(cur);
            }
        }
        Some(Word::from_validated(
            self.alphabet,
            self.current.as_ref().unwrap().clone(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::enumerate_words;

    fn q4() -> Alphabet {
        Alphabet::new(4).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(q4(), text).unwrap()
    }

    #[test]
    fn signature_of_example_words() {
        let s = compute_signature(&w("0312130"));
        assert_eq!(s.word().to_string(), "013");
        assert_eq!(s.block_lengths(), &[2, 3, 2]);

        let s = compute_signature(&w("1320102"));
        assert_eq!(s.word(), &w("1320102"));
        assert_eq!(s.block_lengths(), &[1; 7]);

        let s = compute_signature(&w("0000"));
        assert_eq!(s.word().to_string(), "0");
        assert_eq!(s.block_lengths(), &[4]);
    }

    #[test]
    fn signature_of_empty_word_is_empty() {
        let s = compute_signature(&Word::empty(q4()));
        assert!(s.word().is_empty());
        assert!(s.block_lengths().is_empty());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&w("1320102")));
        assert!(!is_irreducible(&w("0312130")));
        assert!(!is_irreducible(&w("00")));
        assert!(is_irreducible(&Word::empty(q4())));
    }

    #[test]
    fn signature_word_is_irreducible_and_idempotent() {
        for x in enumerate_words(q4(), 5) {
            let s = compute_signature(&x);
            assert!(is_irreducible(s.word()), "sig of {x} not irreducible");
            assert_eq!(s.block_lengths().iter().sum::<usize>(), x.len());
            let again = compute_signature(s.word());
            assert_eq!(again.word(), s.word());
            assert!(again.block_lengths().iter().all(|&l| l == 1));
        }
    }

    #[test]
    fn enumerate_irr_matches_exhaustive_filter() {
        // oracle: filter all q^n words by is_irreducible
        let a = q4();
        for n in 1..=3 {
            let expected: Vec<Word> = enumerate_words(a, n).filter(is_irreducible).collect();
            let got: Vec<Word> = enumerate_irr(a, n).collect();
            assert_eq!(got, expected, "n={n}");
        }
        assert_eq!(enumerate_irr(a, 1).count(), 4);
        assert_eq!(enumerate_irr(a, 2).count(), 8);
        assert_eq!(enumerate_irr(a, 3).count(), 16);
        assert_eq!(enumerate_irr(a, 0).count(), 0);
    }

    #[test]
    fn count_irr_formula_and_cross_checks() {
        let a = q4();
        assert_eq!(count_irr(a, 6), BigUint::from(128u32));
        assert_eq!(count_irr(a, 1), BigUint::from(4u32));
        assert_eq!(count_irr(a, 0), BigUint::ZERO);
        let a6 = Alphabet::new(6).unwrap();
        assert_eq!(count_irr(a6, 3), BigUint::from(96u32));
        assert_eq!(
            count_irr(a6, 3),
            BigUint::from(enumerate_irr(a6, 3).count())
        );
        // large n stays exact
        assert_eq!(
            count_irr(a, 200),
            BigUint::from(4u32) * BigUint::from(2u32).pow(199)
        );
    }

    #[test]
    fn sharded_enumeration_concatenates_to_full_enumeration() {
        let a = Alphabet::new(6).unwrap();
        let full: Vec<Word> = enumerate_irr(a, 4).collect();
        let mut sharded = Vec::new();
        for s in a.symbols() {
            sharded.extend(enumerate_irr_with_first(a, 4, s));
        }
        assert_eq!(full, sharded);
    }
}
