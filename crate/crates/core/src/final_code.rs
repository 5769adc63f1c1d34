//! The combined code C_F: membership, deterministic codebook enumeration,
//! best-parameter scanning, and the end-to-end decoder for the noisy
//! insertion channel.
//!
//! A codeword is an irreducible word, so complement/tandem insertions never
//! change its signature; the single random insertion changes the signature by
//! nothing, one complementary substitution, one point insertion, or one
//! adjacent-pair insertion. The decoder recovers the signature and branches
//! on its length to the matching component decoder.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::{enumerate_words, Alphabet, Sym, Word};
use crate::codes::{
    burst_decode_insertion, burst_member, compsub_decode, compsub_member, deinterleave,
    max_run_length, qvt_decode_insertion, qvt_member, rll_threshold, svt_member, AscentProfile,
    BurstParams, CompSubParams, QvtParams, SvtParams,
};
use crate::channel::enumerate_noisy_descendants;
use crate::error::{Error, Result};
use crate::signature::{compute_signature, count_irr, enumerate_irr_with_first};

/// Default refusal threshold for codebook enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// The 8 residues (a,b,d,h,w,e,f,g) plus (q,n) defining one code C_F.
/// The symbol-sum residue `a` is shared between the full-word weighted code
/// and the full-word VT code, exactly as in the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinalParams {
    alphabet: Alphabet,
    n: usize,
    a: u64,
    b: u64,
    d: u64,
    h: u64,
    w: u64,
    e: u64,
    f: u64,
    g: u64,
}

impl FinalParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        a: u64,
        b: u64,
        d: u64,
        h: u64,
        w: u64,
        e: u64,
        f: u64,
        g: u64,
    ) -> Result<Self> {
        // sub-constructors validate every residue range, including n even >= 4
        CompSubParams::new(alphabet, n, a, b)?;
        QvtParams::new(alphabet, n, a, d)?;
        BurstParams::new(alphabet, n, h, w, e, f, g)?;
        Ok(FinalParams {
            alphabet,
            n,
            a,
            b,
            d,
            h,
            w,
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
    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }
    pub fn d(&self) -> u64 {
        self.d
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

    pub fn rll_threshold(&self) -> usize {
        rll_threshold(self.alphabet, self.n)
    }

    /// The SVT window P = T + 1.
    pub fn window(&self) -> usize {
        self.rll_threshold() + 1
    }

    /// Full-word complementary-substitution code C_(a,b)(n).
    pub fn compsub_params(&self) -> CompSubParams {
        CompSubParams::new(self.alphabet, self.n, self.a, self.b).expect("validated")
    }

    /// Full-word VT code C_T(a,d)(n); note the shared residue a.
    pub fn qvt_params(&self) -> QvtParams {
        QvtParams::new(self.alphabet, self.n, self.a, self.d).expect("validated")
    }

    /// Row-level burst code C_B(h,w,e,f,g)(n).
    pub fn burst_params(&self) -> BurstParams {
        BurstParams::new(self.alphabet, self.n, self.h, self.w, self.e, self.f, self.g)
            .expect("validated")
    }

    pub fn residues(&self) -> [u64; 8] {
        [
            self.a, self.b, self.d, self.h, self.w, self.e, self.f, self.g,
        ]
    }
}

/// Membership in C_F: the burst code plus the three full-word congruences.
pub fn final_member(x: &Word, p: &FinalParams) -> Result<bool> {
    Ok(burst_member(x, &p.burst_params())?
        && compsub_member(x, &p.compsub_params())?
        && qvt_member(x, &p.qvt_params())?)
}

/// The residue tuple (a,b,d,h,w,e,f,g) a word belongs to; partitioning
/// S^Irr_n by this tuple is what makes parameter scans linear.
fn residue_tuple(x: &Word, window: usize) -> [u64; 8] {
    let q = x.alphabet().q() as u64;
    let n = x.len() as u64;
    let beta = AscentProfile::of(x);
    let (row1, row2) = deinterleave(x).expect("even length");
    let beta1 = AscentProfile::of(&row1);
    let beta2 = AscentProfile::of(&row2);
    let sum = |w: &Word| w.symbols().iter().map(|&s| s as u64).sum::<u64>();
    let weighted = |w: &Word| {
        w.symbols()
            .iter()
            .enumerate()
            .map(|(i, &s)| (i as u64 + 1) * s as u64)
            .sum::<u64>()
    };
    [
        sum(x) % (2 * q),
        weighted(x) % (q * n),
        beta.shifted_weighted_sum() % n,
        sum(&row1) % (2 * q),
        beta1.shifted_weighted_sum() % (n / 2),
        beta2.weighted_sum() % (window as u64 + 1),
        sum(&row2) % q,
        beta2.weight() % 2,
    ]
}

// ---------------------------------------------------------------------------
// Codebooks

/// Provenance carried by a built codebook. The timestamp never enters the
/// serialized file, which stays byte-deterministic for fixed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub tool_version: String,
    pub order_tag: String,
    pub timestamp: Option<String>,
}

impl Provenance {
    fn lexicographic() -> Self {
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            order_tag: "lex".to_string(),
            timestamp: None,
        }
    }
}

/// Parameter set of any of the five code families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeParams {
    CompSub(CompSubParams),
    Qvt(QvtParams),
    Svt(SvtParams),
    Burst(BurstParams),
    Final(FinalParams),
}

impl CodeParams {
    pub fn family_name(&self) -> &'static str {
        match self {
            CodeParams::CompSub(_) => "compsub",
            CodeParams::Qvt(_) => "qvt",
            CodeParams::Svt(_) => "svt",
            CodeParams::Burst(_) => "burst",
            CodeParams::Final(_) => "final",
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            CodeParams::CompSub(p) => p.alphabet(),
            CodeParams::Qvt(p) => p.alphabet(),
            CodeParams::Svt(p) => p.alphabet(),
            CodeParams::Burst(p) => p.alphabet(),
            CodeParams::Final(p) => p.alphabet(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeParams::CompSub(p) => p.n(),
            CodeParams::Qvt(p) => p.n(),
            CodeParams::Svt(p) => p.n(),
            CodeParams::Burst(p) => p.n(),
            CodeParams::Final(p) => p.n(),
        }
    }

    pub fn member(&self, x: &Word) -> Result<bool> {
        match self {
            CodeParams::CompSub(p) => compsub_member(x, p),
            CodeParams::Qvt(p) => qvt_member(x, p),
            CodeParams::Svt(p) => svt_member(x, p),
            CodeParams::Burst(p) => burst_member(x, p),
            CodeParams::Final(p) => final_member(x, p),
        }
    }

    /// Irreducibility-gated families only need to walk Irr(n); the plain
    /// congruence families walk all of Z_q^n.
    fn walks_irreducible_words(&self) -> bool {
        matches!(self, CodeParams::Burst(_) | CodeParams::Final(_))
    }

    fn header_params(&self) -> Vec<(&'static str, u64)> {
        match self {
            CodeParams::CompSub(p) => vec![("a", p.a()), ("b", p.b())],
            CodeParams::Qvt(p) => vec![("c", p.c()), ("d", p.d())],
            CodeParams::Svt(p) => vec![
                ("P", p.window() as u64),
                ("e", p.e()),
                ("f", p.f()),
                ("g", p.g()),
            ],
            CodeParams::Burst(p) => vec![
                ("h", p.h()),
                ("w", p.w()),
                ("e", p.e()),
                ("f", p.f()),
                ("g", p.g()),
            ],
            CodeParams::Final(p) => vec![
                ("a", p.a()),
                ("b", p.b()),
                ("d", p.d()),
                ("h", p.h()),
                ("w", p.w()),
                ("e", p.e()),
                ("f", p.f()),
                ("g", p.g()),
            ],
        }
    }
}

/// A deterministic, sorted enumeration of all codewords of a parameterized
/// code. Words are strictly lexicographically sorted and duplicate-free, and
/// every word passes the membership test of the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    params: CodeParams,
    words: Vec<Word>,
    provenance: Provenance,
}

impl Codebook {
    /// Enumerate the codebook. Refuses when the enumeration domain exceeds
    /// `cap` words, reporting the exact count.
    pub fn build(params: CodeParams, cap: u64) -> Result<Codebook> {
        let alphabet = params.alphabet();
        let n = params.n();
        let domain_size = if params.walks_irreducible_words() {
            count_irr(alphabet, n)
        } else {
            BigUint::from(alphabet.q()).pow(n as u32)
        };
        if domain_size > BigUint::from(cap) {
            return Err(Error::EnumerationCapExceeded {
                cap,
                estimate: format!("enumeration domain holds {domain_size} words"),
            });
        }
        let shards: Vec<Sym> = alphabet.symbols().collect();
        let words: Vec<Word> = if params.walks_irreducible_words() {
            shards
                .par_iter()
                .map(|&first| {
                    enumerate_irr_with_first(alphabet, n, first)
                        .filter(|x| params.member(x).expect("validated domain"))
                        .collect::<Vec<Word>>()
                })
                .reduce(Vec::new, concat)
        } else {
            // plain congruence families: filter the whole cube
            enumerate_words(alphabet, n)
                .filter(|x| params.member(x).expect("validated domain"))
                .collect()
        };
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        Ok(Codebook {
            params,
            words,
            provenance: Provenance::lexicographic(),
        })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_timestamp(mut self, timestamp: String) -> Self {
        self.provenance.timestamp = Some(timestamp);
        self
    }

    /// The k-th codeword in sorted order (the rank/unrank messaging layer).
    pub fn word_at(&self, k: usize) -> Result<&Word> {
        self.words.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            size: self.words.len(),
        })
    }

    /// Inverse of `word_at`.
    pub fn index_of(&self, x: &Word) -> Result<usize> {
        self.words.binary_search(x).map_err(|_| Error::NotACodeword)
    }

    /// Serialize to the codebook file format: `#` header lines carrying the
    /// family, q, n, every parameter, derived T and P where applicable, and
    /// the tool version; then one word per line in the textual word format.
    /// Byte-deterministic for fixed parameters.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str("# ctcodes codebook\n");
        out.push_str(&format!("# tool=ctcodes {}\n", self.provenance.tool_version));
        out.push_str(&format!("# order={}\n", self.provenance.order_tag));
        out.push_str(&format!("# family={}\n", self.params.family_name()));
        out.push_str(&format!(
            "# q={} n={}\n",
            self.params.alphabet().q(),
            self.params.n()
        ));
        let params: Vec<String> = self
            .params
            .header_params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!("# {}\n", params.join(" ")));
        match &self.params {
            CodeParams::Burst(p) => {
                out.push_str(&format!("# T={} P={}\n", p.rll_threshold(), p.window()));
            }
            CodeParams::Final(p) => {
                out.push_str(&format!("# T={} P={}\n", p.rll_threshold(), p.window()));
            }
            _ => {}
        }
        for word in &self.words {
            out.push_str(&word.to_string());
            out.push('\n');
        }
        out
    }

    /// Parse a codebook file and re-verify its invariants: strictly sorted,
    /// duplicate-free, every word a member.
    pub fn from_file_str(text: &str) -> Result<Codebook> {
        let bad = |msg: &str| Error::CodebookFormat(msg.to_string());
        let mut header: HashMap<String, String> = HashMap::new();
        let mut body: Vec<&str> = Vec::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix('#') {
                for token in rest.split_whitespace() {
                    if let Some((k, v)) = token.split_once('=') {
                        header.insert(k.to_string(), v.to_string());
                    }
                }
            } else if !line.trim().is_empty() {
                body.push(line.trim());
            }
        }
        let get = |k: &str| {
            header
                .get(k)
                .ok_or_else(|| bad(&format!("missing header field {k}")))
        };
        let int = |k: &str| -> Result<u64> {
            get(k)?
                .parse()
                .map_err(|_| bad(&format!("invalid integer for {k}")))
        };
        let q: u64 = int("q")?;
        let n: u64 = int("n")?;
        let alphabet = Alphabet::new(q as Sym)?;
        let n = n as usize;
        let family = get("family")?.clone();
        let params = match family.as_str() {
            "compsub" => CodeParams::CompSub(CompSubParams::new(alphabet, n, int("a")?, int("b")?)?),
            "qvt" => CodeParams::Qvt(QvtParams::new(alphabet, n, int("c")?, int("d")?)?),
            "svt" => CodeParams::Svt(SvtParams::new(
                alphabet,
                n,
                int("P")? as usize,
                int("e")?,
                int("f")?,
                int("g")?,
            )?),
            "burst" => CodeParams::Burst(BurstParams::new(
                alphabet,
                n,
                int("h")?,
                int("w")?,
                int("e")?,
                int("f")?,
                int("g")?,
            )?),
            "final" => CodeParams::Final(FinalParams::new(
                alphabet,
                n,
                int("a")?,
                int("b")?,
                int("d")?,
                int("h")?,
                int("w")?,
                int("e")?,
                int("f")?,
                int("g")?,
            )?),
            other => return Err(bad(&format!("unknown family {other:?}"))),
        };
        let mut words = Vec::with_capacity(body.len());
        for line in body {
            let word = Word::parse(alphabet, line)?;
            if !params.member(&word)? {
                return Err(bad(&format!("word {word} fails membership")));
            }
            words.push(word);
        }
        if !words.windows(2).all(|p| p[0] < p[1]) {
            return Err(bad("words are not strictly sorted"));
        }
        let tool_version = header
            .get("tool")
            .cloned()
            .unwrap_or_else(|| env!("CARGO_PKG_VERSION").to_string());
        let order_tag = header.get("order").cloned().unwrap_or_else(|| "lex".into());
        Ok(Codebook {
            params,
            words,
            provenance: Provenance {
                tool_version,
                order_tag,
                timestamp: None,
            },
        })
    }
}

fn concat(mut left: Vec<Word>, mut right: Vec<Word>) -> Vec<Word> {
    left.append(&mut right);
    left
}

// ---------------------------------------------------------------------------
// Parameter scans

/// Scan every (a,b,d,h,w,e,f,g) tuple and return one maximizing the codebook
/// size, ties broken by the lexicographically smallest tuple. Each word of
/// S^Irr_n belongs to exactly one tuple, so the scan is a single pass.
pub fn scan_best_params(alphabet: Alphabet, n: usize, cap: u64) -> Result<(FinalParams, u64)> {
    // constructing a probe set validates n before the walk
    FinalParams::new(alphabet, n, 0, 0, 0, 0, 0, 0, 0, 0)?;
    check_irr_cap(alphabet, n, cap)?;
    let window = rll_threshold(alphabet, n) + 1;
    let counts = class_counts(alphabet, n, |x| Some(residue_tuple(x, window)));
    let (tuple, size) = best_class(counts)?;
    let [a, b, d, h, w, e, f, g] = tuple;
    Ok((
        FinalParams::new(alphabet, n, a, b, d, h, w, e, f, g)?,
        size,
    ))
}

/// Scan every (h,w,e,f,g) tuple of the burst construction.
pub fn scan_best_burst_params(
    alphabet: Alphabet,
    n: usize,
    cap: u64,
) -> Result<(BurstParams, u64)> {
    BurstParams::new(alphabet, n, 0, 0, 0, 0, 0)?;
    check_irr_cap(alphabet, n, cap)?;
    let window = rll_threshold(alphabet, n) + 1;
    let counts = class_counts(alphabet, n, |x| {
        let t = residue_tuple(x, window);
        Some([t[3], t[4], t[5], t[6], t[7]])
    });
    let (tuple, size) = best_class(counts)?;
    let [h, w, e, f, g] = tuple;
    Ok((BurstParams::new(alphabet, n, h, w, e, f, g)?, size))
}

fn check_irr_cap(alphabet: Alphabet, n: usize, cap: u64) -> Result<()> {
    let count = count_irr(alphabet, n);
    if count > BigUint::from(cap) {
        return Err(Error::EnumerationCapExceeded {
            cap,
            estimate: format!("Irr(n) holds {count} words"),
        });
    }
    Ok(())
}

/// Group the RLL-admissible irreducible words by a per-word key, counting
/// class sizes. Sharded over first symbols with a deterministic merge.
fn class_counts<K, F>(alphabet: Alphabet, n: usize, key: F) -> HashMap<K, u64>
where
    K: std::hash::Hash + Eq + Send,
    F: Fn(&Word) -> Option<K> + Sync,
{
    let t = rll_threshold(alphabet, n);
    let shards: Vec<Sym> = alphabet.symbols().collect();
    shards
        .par_iter()
        .map(|&first| {
            let mut counts: HashMap<K, u64> = HashMap::new();
            for x in enumerate_irr_with_first(alphabet, n, first) {
                let (row1, _) = deinterleave(&x).expect("even n");
                if max_run_length(&row1) > t {
                    continue;
                }
                if let Some(k) = key(&x) {
                    *counts.entry(k).or_insert(0) += 1;
                }
            }
            counts
        })
        .reduce(HashMap::new, |mut acc, m| {
            for (k, v) in m {
                *acc.entry(k).or_insert(0) += v;
            }
            acc
        })
}

fn best_class<const N: usize>(counts: HashMap<[u64; N], u64>) -> Result<([u64; N], u64)> {
    counts
        .into_iter()
        .max_by(|(ka, va), (kb, vb)| va.cmp(vb).then_with(|| kb.cmp(ka)))
        .ok_or_else(|| Error::InvalidParameter("no admissible words to scan".into()))
}

// ---------------------------------------------------------------------------
// Decoding

/// Decode a noisy-channel output: recover the signature, branch on its
/// length, and verify final membership of the result.
pub fn decode(y: &Word, p: &FinalParams) -> Result<Word> {
    if y.alphabet() != p.alphabet() {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet().q()));
    }
    let s = compute_signature(y).into_word();
    let n = p.n();
    let candidate = match s.len() as i64 - n as i64 {
        0 => {
            if compsub_member(&s, &p.compsub_params())? {
                // zero syndromes certify the clean case: a complementary
                // substitution always shifts the symbol sum by an odd amount
                s
            } else {
                compsub_decode(&s, &p.compsub_params()).map_err(decode_failure)?
            }
        }
        1 => qvt_decode_insertion(&s, &p.qvt_params()).map_err(decode_failure)?,
        2 => burst_decode_insertion(&s, &p.burst_params()).map_err(decode_failure)?,
        _ => {
            return Err(Error::NotAChannelOutput {
                sig_len: s.len(),
                n,
            })
        }
    };
    if final_member(&candidate, p)? {
        Ok(candidate)
    } else {
        Err(Error::Uncorrectable)
    }
}

fn decode_failure(e: Error) -> Error {
    match e {
        Error::AlphabetMismatch(..) | Error::LengthMismatch { .. } => e,
        _ => Error::Uncorrectable,
    }
}

/// Reference oracle decoder: the unique codeword whose signature reaches the
/// received signature by one of the admissible signature edits. Must agree
/// with `decode` on every valid input; two matches would contradict the
/// disjoint-cone property.
pub fn decode_by_search(y: &Word, p: &FinalParams, codebook: &Codebook) -> Result<Word> {
    if y.alphabet() != p.alphabet() {
        return Err(Error::AlphabetMismatch(y.alphabet().q(), p.alphabet().q()));
    }
    let s = compute_signature(y).into_word();
    let mut matches = codebook
        .words()
        .iter()
        .filter(|x| signature_edit_match(x, &s));
    match (matches.next(), matches.next()) {
        (Some(x), None) => Ok(x.clone()),
        (None, _) => Err(Error::NoCandidate),
        (Some(_), Some(_)) => Err(Error::AmbiguousCandidates { count: 2 }),
    }
}

/// Is `s` reachable from the irreducible word `x` by one admissible
/// signature edit: equality, one complementary substitution, one point
/// insertion, or one adjacent-pair insertion whose second symbol matches the
/// preceding symbol or its complement?
fn signature_edit_match(x: &Word, s: &Word) -> bool {
    if x.alphabet() != s.alphabet() {
        return false;
    }
    let alphabet = x.alphabet();
    let n = x.len();
    let xs = x.symbols();
    let ss = s.symbols();
    match s.len().checked_sub(n) {
        Some(0) => {
            let diffs: Vec<usize> = (0..n).filter(|&i| xs[i] != ss[i]).collect();
            diffs.is_empty()
                || (diffs.len() == 1 && ss[diffs[0]] == alphabet.comp(xs[diffs[0]]))
        }
        Some(1) => (0..s.len()).any(|j| deletes_to(ss, j, 1, xs)),
        Some(2) => (1..s.len() - 1).any(|j| {
            deletes_to(ss, j, 2, xs) && (ss[j + 1] == ss[j - 1] || ss[j + 1] == alphabet.comp(ss[j - 1]))
        }),
        _ => false,
    }
}

/// Does removing `count` symbols of `s` starting at `j` yield `x`?
fn deletes_to(s: &[Sym], j: usize, count: usize, x: &[Sym]) -> bool {
    s[..j] == x[..j] && s[j + count..] == x[j..]
}

// ---------------------------------------------------------------------------
// Disjointness verification

/// Outcome of a pairwise noisy-cone disjointness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessReport {
    pub word_count: usize,
    pub ct_budget: usize,
    pub pairs_checked: u64,
    /// Index pairs whose bounded noisy cones intersect (expected: none).
    pub violations: Vec<(usize, usize)>,
    pub max_cone_size: u64,
    pub elapsed_ms: u64,
    /// False when some cone hit the enumeration cap and its pairs were skipped.
    pub complete: bool,
}

/// Intersect the bounded noisy descendant cones of every unordered pair.
/// Cones that exceed `cap` are skipped and flag the report incomplete.
pub fn verify_disjoint_cones(
    words: &[Word],
    ct_budget: usize,
    cap: usize,
) -> DisjointnessReport {
    let start = Instant::now();
    let cones: Vec<Option<Vec<Word>>> = words
        .par_iter()
        .map(|x| enumerate_noisy_descendants(x, ct_budget, cap).ok())
        .collect();
    let complete = cones.iter().all(|c| c.is_some());
    let max_cone_size = cones
        .iter()
        .flatten()
        .map(|c| c.len() as u64)
        .max()
        .unwrap_or(0);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if cones[i].is_some() && cones[j].is_some() {
                pairs.push((i, j));
            }
        }
    }
    let violations: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            sorted_intersect(
                cones[i].as_ref().expect("paired"),
                cones[j].as_ref().expect("paired"),
            )
        })
        .copied()
        .collect();
    let mut violations = violations;
    violations.sort_unstable();
    DisjointnessReport {
        word_count: words.len(),
        ct_budget,
        pairs_checked: pairs.len() as u64,
        violations,
        max_cone_size,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete,
    }
}

/// Nonempty intersection of two sorted sequences.
fn sorted_intersect(a: &[Word], b: &[Word]) -> bool {
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
