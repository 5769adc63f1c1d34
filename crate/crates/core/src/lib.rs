//! Error-correcting codes for a noisy DNA-storage insertion channel.
//!
//! The channel inserts, after any symbol, a copy of that symbol (1-tandem
//! duplication) or its complement (complement insertion), arbitrarily many
//! times, plus at most one insertion of a random symbol at a random position.
//! Codewords are irreducible words, so the error-free part of the channel
//! never changes a word's signature; the codes combine congruence constraints
//! so that the single random insertion's effect on the signature (nothing,
//! one complementary substitution, one point insertion, or one 2-burst
//! insertion) can always be undone.
//!
//! Modules:
//! - [`alphabet`]: even-sized alphabets with the complement involution, and
//!   the word value type.
//! - [`signature`]: signature computation, irreducibility, Irr(n)
//!   enumeration and counting.
//! - [`channel`]: the insertion primitives, reproducible corruption traces,
//!   and bounded descendant-cone oracles.
//! - [`codes`]: the four component codes with membership tests and decoders.
//! - [`final_code`]: the combined code, codebooks, parameter scans, the
//!   end-to-end decoder, and cone-disjointness verification.
//! - [`analysis`]: rates, capacity, size bounds, and report generation.

pub mod alphabet;
pub mod analysis;
pub mod channel;
pub mod codes;
pub mod error;
pub mod final_code;
pub mod signature;

pub use alphabet::{Alphabet, Sym, Word};
pub use error::{Error, Result};
