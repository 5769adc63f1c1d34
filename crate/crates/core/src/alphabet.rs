//! Alphabet arithmetic, the complement involution, and the word value type.
//!
//! Symbols are integers in `0..q` for an even alphabet size `q >= 4`, with the
//! complement of `u` fixed to `q-1-u`. For q=4 this matches the DNA bases
//! under the mapping A=0, C=1, G=2, T=3 (A–T and C–G are complement pairs);
//! only digits are parsed, the letters are documentation.

use std::fmt;

use crate::error::{Error, Result};

/// Symbol over an alphabet; always validated against the alphabet size.
pub type Sym = u16;

/// An even-sized alphabet `Z_q`, `q >= 4`, with complement `u -> q-1-u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    q: Sym,
}

impl Alphabet {
    /// Odd sizes and q < 4 are rejected: the complement must be a
    /// fixed-point-free involution.
    pub fn new(q: Sym) -> Result<Self> {
        if q < 4 || q % 2 != 0 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet { q })
    }

    pub fn q(self) -> Sym {
        self.q
    }

    /// All symbols in increasing order.
    pub fn symbols(self) -> impl Iterator<Item = Sym> {
        0..self.q
    }

    pub fn contains(self, s: Sym) -> bool {
        s < self.q
    }

    pub fn check_symbol(self, s: Sym) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange { symbol: s, q: self.q })
        }
    }

    /// The complement `q-1-s`. Applying it twice gives back `s`, and no
    /// symbol is its own complement (q is even).
    pub fn complement_symbol(self, s: Sym) -> Result<Sym> {
        self.check_symbol(s)?;
        Ok(self.comp(s))
    }

    /// Complement of an already-validated symbol.
    pub(crate) fn comp(self, s: Sym) -> Sym {
        debug_assert!(s < self.q);
        self.q - 1 - s
    }
}

/// A finite sequence over an alphabet. The alphabet is part of the word's
/// identity: words over different alphabets never compare equal.
///
/// Ordering is by alphabet first, then lexicographic on symbols, so sorting a
/// same-alphabet collection is plain lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Sym>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Sym>) -> Result<Self> {
        for &s in &symbols {
            alphabet.check_symbol(s)?;
        }
        Ok(Word { alphabet, symbols })
    }

    /// The empty word; permitted so that composition stays total.
    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            symbols: Vec::new(),
        }
    }

    /// Symbols already known to be in range.
    pub(crate) fn from_validated(alphabet: Alphabet, symbols: Vec<Sym>) -> Self {
        debug_assert!(symbols.iter().all(|&s| alphabet.contains(s)));
        Word { alphabet, symbols }
    }

    /// Parse the textual word format: a string of symbol digits when
    /// q <= 10 (e.g. "100231020"), comma-separated decimal integers
    /// otherwise. The empty string is the empty word.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        if text.is_empty() {
            return Ok(Word::empty(alphabet));
        }
        let parse_err = |reason: &str| Error::WordParse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut symbols = Vec::new();
        if alphabet.q() <= 10 {
            for c in text.chars() {
                let v = c
                    .to_digit(10)
                    .ok_or_else(|| parse_err(&format!("invalid symbol character {c:?}")))?;
                symbols.push(v as Sym);
            }
        } else {
            for part in text.split(',') {
                let v: Sym = part
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(&format!("invalid symbol {part:?}")))?;
                symbols.push(v);
            }
        }
        for &s in &symbols {
            if !alphabet.contains(s) {
                return Err(parse_err(&format!(
                    "symbol {s} out of range for q={}",
                    alphabet.q()
                )));
            }
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Elementwise complement; same length.
    pub fn complement(&self) -> Word {
        Word {
            alphabet: self.alphabet,
            symbols: self.symbols.iter().map(|&s| self.alphabet.comp(s)).collect(),
        }
    }

    pub(crate) fn check_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.q(),
                other.alphabet.q(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.q() <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All words of length `n` over the alphabet, in lexicographic order.
pub fn enumerate_words(alphabet: Alphabet, n: usize) -> AllWords {
    AllWords {
        alphabet,
        n,
        current: None,
        done: false,
    }
}

/// Lexicographic iterator over `Z_q^n`.
pub struct AllWords {
    alphabet: Alphabet,
    n: usize,
    current: Option<Vec<Sym>>,
    done: bool,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                self.current = Some(vec![0; self.n]);
            }
            Some(cur) => {
                let q = self.alphabet.q();
                let mut pos = self.n;
                loop {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    pos -= 1;
                    if cur[pos] + 1 < q {
                        cur[pos] += 1;
                        for s in &mut cur[pos + 1..] {
                            *s = 0;
                        }
                        break;
                    }
                }
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

    fn q4() -> Alphabet {
        Alphabet::new(4).unwrap()
    }

    #[test]
    fn alphabet_rejects_odd_and_small_sizes() {
        for q in [0, 1, 2, 3, 5, 7, 9] {
            assert!(Alphabet::new(q).is_err(), "q={q} should be rejected");
        }
        for q in [4, 6, 8, 10, 12, 16] {
            assert!(Alphabet::new(q).is_ok());
        }
    }

    #[test]
    fn complement_symbol_examples() {
        let a = q4();
        assert_eq!(a.complement_symbol(0).unwrap(), 3);
        assert_eq!(a.complement_symbol(1).unwrap(), 2);
        assert_eq!(
            a.complement_symbol(4),
            Err(Error::SymbolOutOfRange { symbol: 4, q: 4 })
        );
        let a6 = Alphabet::new(6).unwrap();
        assert_eq!(a6.complement_symbol(0).unwrap(), 5);
        assert_eq!(a6.complement_symbol(5).unwrap(), 0);
    }

    #[test]
    fn complement_is_fixed_point_free_involution() {
        // exhaustive for every even q <= 16
        for q in (4..=16).step_by(2) {
            let a = Alphabet::new(q).unwrap();
            for s in a.symbols() {
                let c = a.complement_symbol(s).unwrap();
                assert_ne!(c, s, "q={q} s={s}");
                assert_eq!(a.complement_symbol(c).unwrap(), s, "q={q} s={s}");
            }
        }
    }

    #[test]
    fn complement_word_examples() {
        let a = q4();
        let w = Word::parse(a, "01").unwrap();
        assert_eq!(w.complement().to_string(), "32");
        assert_eq!(Word::empty(a).complement(), Word::empty(a));
        let a6 = Alphabet::new(6).unwrap();
        let w = Word::parse(a6, "05").unwrap();
        assert_eq!(w.complement().to_string(), "50");
    }

    #[test]
    fn word_validation_and_identity() {
        let a = q4();
        assert!(Word::new(a, vec![0, 3, 1]).is_ok());
        assert!(matches!(
            Word::new(a, vec![0, 4]),
            Err(Error::SymbolOutOfRange { symbol: 4, q: 4 })
        ));
        // words over different alphabets never compare equal
        let a6 = Alphabet::new(6).unwrap();
        let w4 = Word::new(a, vec![0, 1]).unwrap();
        let w6 = Word::new(a6, vec![0, 1]).unwrap();
        assert_ne!(w4, w6);
    }

    #[test]
    fn textual_format_digits_and_commas() {
        let a = q4();
        let w = Word::parse(a, "100231020").unwrap();
        assert_eq!(w.len(), 9);
        assert_eq!(w.to_string(), "100231020");
        assert!(Word::parse(a, "0x1").is_err());
        assert!(Word::parse(a, "04").is_err()); // symbol out of range

        let a12 = Alphabet::new(12).unwrap();
        let w = Word::parse(a12, "0,11,5").unwrap();
        assert_eq!(w.symbols(), &[0, 11, 5]);
        assert_eq!(w.to_string(), "0,11,5");
        assert!(Word::parse(a12, "0,12").is_err());
        assert_eq!(Word::parse(a12, "").unwrap(), Word::empty(a12));
    }

    #[test]
    fn enumerate_words_is_lexicographic_and_complete() {
        let a = q4();
        let all: Vec<Word> = enumerate_words(a, 2).collect();
        assert_eq!(all.len(), 16);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
        assert_eq!(all[0].to_string(), "00");
        assert_eq!(all[15].to_string(), "33");
        // n = 0 yields the single empty word
        let empties: Vec<Word> = enumerate_words(a, 0).collect();
        assert_eq!(empties, vec![Word::empty(a)]);
    }
}
