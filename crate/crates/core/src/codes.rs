//! The four building-block codes: the complementary-substitution code, the
//! modified q-ary VT code, the shifted VT code, and the RLL-constrained
//! interleaved 2-burst code, each with membership tests and decoders.
//!
//! All position conventions in the congruences are 1-based. Decoders are
//! search-based (candidate removal/insertion plus membership filtering);
//! uniqueness of the surviving candidate is exactly the correction property
//! the constructions claim, so zero or multiple candidates is an error.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::signature::is_irreducible;

/// The ascent indicator of a word: bit 1 is always set, bit i (1-based) is
/// set iff `x_i >= x_{i-1}`. A pure function of the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentProfile {
    bits: Vec<bool>,
}

impl AscentProfile {
    pub fn of(x: &Word) -> Self {
        let s = x.symbols();
        let bits = (0..s.len())
            .map(|i| i == 0 || s[i] >= s[i - 1])
            .collect();
        AscentProfile { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Σ β_i
    pub fn weight(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    /// Σ i·β_i with i running 1..=n
    pub fn weighted_sum(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }

    /// Σ (i−1)·β_i with i running 1..=n
    pub fn shifted_weighted_sum(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64)
            .sum()
    }
}

fn symbol_sum(x: &Word) -> u64 {
    x.symbols().iter().map(|&s| s as u64).sum()
}

/// Σ i·x_i with i running 1..=n
fn weighted_symbol_sum(x: &Word) -> u64 {
    x.symbols()
        .iter()
        .enumerate()
        .map(|(i, &s)| (i as u64 + 1) * s as u64)
        .sum()
}

fn check_len(x: &Word, expected: usize) -> Result<()> {
    if x.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            actual: x.len(),
        });
    }
    Ok(())
}

fn check_range(name: &'static str, value: u64, inclusive_bound: u64) -> Result<()> {
    if value > inclusive_bound {
        return Err(Error::ParameterOutOfRange {
            name,
            value,
            bound: inclusive_bound,
        });
    }
    Ok(())
}

/// Resolve zero-or-one-or-many candidate sets from a search decoder.
fn unique_candidate(candidates: BTreeSet<Word>) -> Result<Word> {
    let mut iter = candidates.into_iter();
    match (iter.next(), iter.next()) {
        (Some(word), None) => Ok(word),
        (None, _) => Err(Error::NoCandidate),
        (Some(_), Some(_)) => Err(Error::AmbiguousCandidates {
            count: 2 + iter.count(),
        }),
    }
}

// ---------------------------------------------------------------------------
// Complementary-substitution code C_(a,b)(n)

/// Parameters of the code `{u : Σ u_i ≡ a (mod 2q), Σ i·u_i ≡ b (mod qn)}`,
/// which corrects one substitution of a symbol by its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompSubParams {
    alphabet: Alphabet,
    n: usize,
    a: u64,
    b: u64,
}

impl CompSubParams {
    pub fn new(alphabet: Alphabet, n: usize, a: u64, b: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("code length n must be >= 1".into()));
        }
        let q = alphabet.q() as u64;
        check_range("a", a, 2 * q - 1)?;
        check_range("b", b, q * n as u64 - 1)?;
        Ok(CompSubParams { alphabet, n, a, b })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }

    fn moduli(&self) -> (u64, u64) {
        let q = self.alphabet.q() as u64;
        (2 * q, q * self.n as u64)
    }
}

pub fn compsub_member(x: &Word, p: &CompSubParams) -> Result<bool> {
    if x.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(x.alphabet().q(), p.alphabet.q()));
    }
    check_len(x, p.n)?;
    let (m1, m2) = p.moduli();
    Ok(symbol_sum(x) % m1 == p.a && weighted_symbol_sum(x) % m2 == p.b)
}

/// Correct at most one complementary substitution by syndrome. The symbol-sum
/// syndrome determines the odd shift `δ = q-1-2w` in `(-q, q)`; the weighted
/// syndrome then pins the position, uniquely because `|i·δ| <= n(q-1) < qn`.
pub fn compsub_decode(y: &Word, p: &CompSubParams) -> Result<Word> {
    if y.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet.q()));
    }
    check_len(y, p.n)?;
    let (m1, m2) = p.moduli();
    let q = p.alphabet.q() as i64;
    let delta1 = (symbol_sum(y) + m1 - p.a % m1) % m1;
    let delta2 = (weighted_symbol_sum(y) + m2 - p.b % m2) % m2;
    if delta1 == 0 {
        if delta2 == 0 {
            // zero syndrome certifies the clean case: any complementary
            // substitution shifts the symbol sum by the odd amount q-1-2w
            return Ok(y.clone());
        }
        return Err(Error::NotComplementarySubstitution);
    }
    let delta = if delta1 < q as u64 {
        delta1 as i64
    } else {
        delta1 as i64 - 2 * q
    };
    if delta.rem_euclid(2) == 0 {
        return Err(Error::NotComplementarySubstitution);
    }
    let m2 = m2 as i64;
    let mut position = None;
    for i in 1..=p.n as i64 {
        if (i * delta - delta2 as i64).rem_euclid(m2) == 0 {
            position = Some(i as usize);
            break; // the magnitude bound makes the solution unique
        }
    }
    let i = position.ok_or(Error::NotComplementarySubstitution)?;
    let mut symbols = y.symbols().to_vec();
    symbols[i - 1] = p.alphabet.comp(symbols[i - 1]);
    let corrected = Word::from_validated(p.alphabet, symbols);
    if compsub_member(&corrected, p)? {
        Ok(corrected)
    } else {
        Err(Error::NotComplementarySubstitution)
    }
}

// ---------------------------------------------------------------------------
// Modified q-ary VT code C_T(c,d)(n)

/// Parameters of the code `{u : Σ u_i ≡ c (mod 2q), Σ (i-1)β_i ≡ d (mod n)}`,
/// a single-point-insertion-correcting code (the 2q congruence refines the
/// classical mod-q Tenengolts sum).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QvtParams {
    alphabet: Alphabet,
    n: usize,
    c: u64,
    d: u64,
}

impl QvtParams {
    pub fn new(alphabet: Alphabet, n: usize, c: u64, d: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("code length n must be >= 1".into()));
        }
        let q = alphabet.q() as u64;
        check_range("c", c, 2 * q - 1)?;
        check_range("d", d, n as u64 - 1)?;
        Ok(QvtParams { alphabet, n, c, d })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn c(&self) -> u64 {
        self.c
    }
    pub fn d(&self) -> u64 {
        self.d
    }
}

pub fn qvt_member(x: &Word, p: &QvtParams) -> Result<bool> {
    if x.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(x.alphabet().q(), p.alphabet.q()));
    }
    check_len(x, p.n)?;
    let q = p.alphabet.q() as u64;
    let beta = AscentProfile::of(x);
    Ok(symbol_sum(x) % (2 * q) == p.c && beta.shifted_weighted_sum() % p.n as u64 == p.d)
}

/// Correct one point insertion: delete each position in turn, keep the
/// distinct deletions that are codewords, and demand uniqueness.
pub fn qvt_decode_insertion(y: &Word, p: &QvtParams) -> Result<Word> {
    if y.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet.q()));
    }
    check_len(y, p.n + 1)?;
    let mut candidates = BTreeSet::new();
    for j in 0..y.len() {
        let mut symbols = y.symbols().to_vec();
        symbols.remove(j);
        let z = Word::from_validated(p.alphabet, symbols);
        if qvt_member(&z, p)? {
            candidates.insert(z);
        }
    }
    unique_candidate(candidates)
}

// ---------------------------------------------------------------------------
// q-ary shifted VT code SVT_(e,f,g)(n, P, q)

/// Parameters of the shifted VT code
/// `{x : Σ i·β_i ≡ e (mod P+1), Σ x_i ≡ f (mod q), Σ β_i ≡ g (mod 2)}`,
/// a P-bounded single-deletion-correcting code: it corrects one deletion
/// whose location is known to within `P` consecutive positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvtParams {
    alphabet: Alphabet,
    n: usize,
    window: usize,
    e: u64,
    f: u64,
    g: u64,
}

impl SvtParams {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        window: usize,
        e: u64,
        f: u64,
        g: u64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("code length n must be >= 1".into()));
        }
        if window == 0 {
            return Err(Error::InvalidParameter("window P must be >= 1".into()));
        }
        check_range("e", e, window as u64)?;
        check_range("f", f, alphabet.q() as u64 - 1)?;
        check_range("g", g, 1)?;
        Ok(SvtParams {
            alphabet,
            n,
            window,
            e,
            f,
            g,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
    pub fn n(&self) -> usize {
        self.n
    }
    /// The window width P.
    pub fn window(&self) -> usize {
        self.window
    }
    pub fn e(&self) -> u64 {
        self.e
    }
    pub fn f(&self) -> u64 {
        self.f
    }
    pub fn g(&self) -> u64 {
        self.g
    }

    /// 1-based positions covered by a window starting at `window_start`,
    /// clipped to `[1, max]`.
    fn window_positions(&self, window_start: usize, max: usize) -> impl Iterator<Item = usize> {
        let end = (window_start + self.window - 1).min(max);
        window_start.max(1)..=end
    }
}

pub fn svt_member(x: &Word, p: &SvtParams) -> Result<bool> {
    if x.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(x.alphabet().q(), p.alphabet.q()));
    }
    check_len(x, p.n)?;
    let beta = AscentProfile::of(x);
    Ok(beta.weighted_sum() % (p.window as u64 + 1) == p.e
        && symbol_sum(x) % p.alphabet.q() as u64 == p.f
        && beta.weight() % 2 == p.g)
}

/// Correct one deletion whose position is known to lie in
/// `[window_start, window_start + P - 1]` (1-based): reinsert every symbol at
/// every in-window position and demand a unique codeword.
pub fn svt_decode_deletion(y: &Word, p: &SvtParams, window_start: usize) -> Result<Word> {
    if y.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet.q()));
    }
    check_len(y, p.n - 1)?;
    let mut candidates = BTreeSet::new();
    for j in p.window_positions(window_start, p.n) {
        for s in p.alphabet.symbols() {
            let mut symbols = y.symbols().to_vec();
            symbols.insert(j - 1, s);
            let z = Word::from_validated(p.alphabet, symbols);
            if svt_member(&z, p)? {
                candidates.insert(z);
            }
        }
    }
    unique_candidate(candidates)
}

/// Mirror of `svt_decode_deletion` for one insertion within the window
/// (insertion/deletion correction are equivalent for these codes).
pub fn svt_decode_insertion(y: &Word, p: &SvtParams, window_start: usize) -> Result<Word> {
    if y.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet.q()));
    }
    check_len(y, p.n + 1)?;
    let mut candidates = BTreeSet::new();
    for j in p.window_positions(window_start, p.n + 1) {
        let mut symbols = y.symbols().to_vec();
        symbols.remove(j - 1);
        let z = Word::from_validated(p.alphabet, symbols);
        if svt_member(&z, p)? {
            candidates.insert(z);
        }
    }
    unique_candidate(candidates)
}

// ---------------------------------------------------------------------------
// Run-length limit and the two-row interleaving

/// Length of the longest run of equal consecutive symbols; 0 for the empty
/// word.
pub fn max_run_length(x: &Word) -> usize {
    let s = x.symbols();
    let mut best = 0;
    let mut i = 0;
    while i < s.len() {
        let mut j = i + 1;
        while j < s.len() && s[j] == s[i] {
            j += 1;
        }
        best = best.max(j - i);
        i = j;
    }
    best
}

/// Repack two equal-length rows column by column:
/// `(r1, r2) -> r1[0] r2[0] r1[1] r2[1] ...`. Exact inverse of `deinterleave`.
pub fn interleave_rows(row1: &Word, row2: &Word) -> Result<Word> {
    row1.check_same_alphabet(row2)?;
    if row1.len() != row2.len() {
        return Err(Error::LengthMismatch {
            expected: row1.len(),
            actual: row2.len(),
        });
    }
    let mut symbols = Vec::with_capacity(row1.len() * 2);
    for (&a, &b) in row1.symbols().iter().zip(row2.symbols()) {
        symbols.push(a);
        symbols.push(b);
    }
    Ok(Word::from_validated(row1.alphabet(), symbols))
}

/// Split an even-length word into the rows of its 2 x n/2 array:
/// row 1 holds the odd (1-based) positions, row 2 the even ones.
pub fn deinterleave(x: &Word) -> Result<(Word, Word)> {
    if x.len() % 2 != 0 {
        return Err(Error::OddLength(x.len()));
    }
    let row1 = x.symbols().iter().copied().step_by(2).collect();
    let row2 = x.symbols().iter().copied().skip(1).step_by(2).collect();
    Ok((
        Word::from_validated(x.alphabet(), row1),
        Word::from_validated(x.alphabet(), row2),
    ))
}

// ---------------------------------------------------------------------------
// RLL-constrained interleaved 2-burst code C_B(h,w,e,f,g)(n)

/// Run-length threshold `T = ceil(3 log_q n) + 2`, computed exactly as the
/// smallest m with `q^m >= n^3`, plus 2.
pub fn rll_threshold(alphabet: Alphabet, n: usize) -> usize {
    let target = (n as u128).pow(3);
    let q = alphabet.q() as u128;
    let mut m = 0usize;
    let mut power: u128 = 1;
    while power < target {
        power = power.saturating_mul(q);
        m += 1;
    }
    m + 2
}

/// Parameters of the 2-burst-insertion-correcting code: irreducible words
/// whose row 1 is run-length limited by `T` and lies in `C_T(h,w)(n/2)`, and
/// whose row 2 lies in `SVT_(e,f,g)(n/2, P, q)` with `P = T + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BurstParams {
    alphabet: Alphabet,
    n: usize,
    h: u64,
    w: u64,
    e: u64,
    f: u64,
    g: u64,
    rll_threshold: usize,
    window: usize,
}

impl BurstParams {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        h: u64,
        w: u64,
        e: u64,
        f: u64,
        g: u64,
    ) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "burst code length must be even and >= 4, got {n}"
            )));
        }
        let t = rll_threshold(alphabet, n);
        let window = t + 1;
        let q = alphabet.q() as u64;
        check_range("h", h, 2 * q - 1)?;
        check_range("w", w, n as u64 / 2 - 1)?;
        check_range("e", e, window as u64)?;
        check_range("f", f, q - 1)?;
        check_range("g", g, 1)?;
        Ok(BurstParams {
            alphabet,
            n,
            h,
            w,
            e,
            f,
            g,
            rll_threshold: t,
            window,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn h(&self) -> u64 {
        self.h
    }
    pub fn w(&self) -> u64 {
        self.w
    }
    pub fn e(&self) -> u64 {
        self.e
    }
    pub fn f(&self) -> u64 {
        self.f
    }
    pub fn g(&self) -> u64 {
        self.g
    }
    /// The RLL threshold T.
    pub fn rll_threshold(&self) -> usize {
        self.rll_threshold
    }
    /// The SVT window P = T + 1.
    pub fn window(&self) -> usize {
        self.window
    }

    /// Row-1 code `C_T(h,w)(n/2)`.
    pub fn row1_params(&self) -> QvtParams {
        QvtParams::new(self.alphabet, self.n / 2, self.h, self.w)
            .expect("validated at construction")
    }

    /// Row-2 code `SVT_(e,f,g)(n/2, P, q)`.
    pub fn row2_params(&self) -> SvtParams {
        SvtParams::new(self.alphabet, self.n / 2, self.window, self.e, self.f, self.g)
            .expect("validated at construction")
    }
}

pub fn burst_member(x: &Word, p: &BurstParams) -> Result<bool> {
    if x.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(x.alphabet().q(), p.alphabet.q()));
    }
    check_len(x, p.n)?;
    if !is_irreducible(x) {
        return Ok(false);
    }
    let (row1, row2) = deinterleave(x)?;
    if max_run_length(&row1) > p.rll_threshold {
        return Ok(false);
    }
    Ok(qvt_member(&row1, &p.row1_params())? && svt_member(&row2, &p.row2_params())?)
}

/// Correct one burst insertion of length 2: remove each adjacent pair in turn
/// and demand a unique surviving codeword.
pub fn burst_decode_insertion(y: &Word, p: &BurstParams) -> Result<Word> {
    if y.alphabet() != p.alphabet {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet.q()));
    }
    check_len(y, p.n + 2)?;
    let mut candidates = BTreeSet::new();
    for j in 0..=p.n {
        let mut symbols = Vec::with_capacity(p.n);
        symbols.extend_from_slice(&y.symbols()[..j]);
        symbols.extend_from_slice(&y.symbols()[j + 2..]);
        let z = Word::from_validated(p.alphabet, symbols);
        if burst_member(&z, p)? {
            candidates.insert(z);
        }
    }
    unique_candidate(candidates)
}
