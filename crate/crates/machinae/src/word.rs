//! Symbols, alphabets, words, and the shortlex pairing between words and
//! natural numbers.
//!
//! A [`Symbol`] is a single character; a [`Word`] is a finite (possibly
//! empty) sequence of symbols; an [`Alphabet`] is a nonempty ordered list of
//! distinct symbols. The order in which an alphabet lists its symbols is
//! significant: it fixes the shortlex enumeration of all words over that
//! alphabet, and with it the numbering used everywhere an operation talks
//! about "the n-th input".
//!
//! The shortlex order ranks words first by length and then lexicographically
//! by the alphabet order, starting from the empty word at index 0:
//!
//! ```
//! use machinae::word::{Alphabet, Word};
//!
//! let ab = Alphabet::new("01").unwrap();
//! assert_eq!(ab.shortlex_word(0), Word::epsilon());
//! assert_eq!(ab.shortlex_word(6), Word::parse("11"));
//! assert_eq!(ab.shortlex_index(&Word::parse("11")).unwrap(), 6);
//! ```
//!
//! Three symbols are reserved for machine plumbing and may never appear in an
//! input alphabet: `_` (the tape blank), `#` (the pair separator used by
//! parallel conjunction), and `*` (the marker appended to enumerated
//! outputs).

use crate::error::MachineError;
use std::fmt;

/// The tape blank.
pub const BLANK: char = '_';
/// Separator between the two halves of a conjunction output.
pub const PAIR_SEPARATOR: char = '#';
/// Marker printed after each enumerated output word.
pub const EMISSION_MARKER: char = '*';

/// Symbols that may never occur in an input alphabet.
pub const RESERVED: [char; 3] = [BLANK, PAIR_SEPARATOR, EMISSION_MARKER];

/// A single symbol. Symbols are plain characters; machine alphabets are
/// small, and one character per symbol keeps words readable and the file
/// format unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub char);

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol(c)
    }
}

/// A finite sequence of symbols. The empty word is written ε in prose and
/// prints as the empty string.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    /// The empty word.
    pub fn epsilon() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from anything yielding symbols.
    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Word(symbols.into_iter().collect())
    }

    /// Parses a word from a string, one character per symbol.
    pub fn parse(s: &str) -> Self {
        Word(s.chars().map(Symbol).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// True if every symbol of the word belongs to `alphabet`.
    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|s| alphabet.contains(*s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.0)?;
        }
        Ok(())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A nonempty ordered list of distinct symbols.
///
/// The declaration order matters: it is the lexicographic order used by the
/// shortlex enumeration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet from the characters of `s`, in order.
    ///
    /// Fails on an empty or duplicated symbol list. Reserved symbols are
    /// allowed here — tape alphabets need the blank — but
    /// [`Alphabet::new_input`] rejects them.
    pub fn new(s: &str) -> Result<Self, MachineError> {
        Self::from_symbols(s.chars().map(Symbol))
    }

    /// Like [`Alphabet::new`] but additionally rejects the reserved symbols
    /// `_`, `#`, and `*`, which may not be part of any input alphabet.
    pub fn new_input(s: &str) -> Result<Self, MachineError> {
        let a = Self::new(s)?;
        a.check_no_reserved()?;
        Ok(a)
    }

    /// Builds an alphabet from explicit symbols, in order.
    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Result<Self, MachineError> {
        let symbols: Vec<Symbol> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(MachineError::InvalidAlphabet {
                reason: "alphabet must not be empty".into(),
            });
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(MachineError::InvalidAlphabet {
                    reason: format!("duplicate symbol '{s}'"),
                });
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Fails if the alphabet contains a reserved symbol.
    pub fn check_no_reserved(&self) -> Result<(), MachineError> {
        for s in &self.symbols {
            if RESERVED.contains(&s.0) {
                return Err(MachineError::ReservedSymbol { symbol: s.0 });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor guarantees nonempty
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.contains(&s)
    }

    /// Position of `s` in the alphabet order.
    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.symbols.iter().position(|t| *t == s)
    }

    /// The union of two alphabets: all of `self`'s symbols, then any of
    /// `other`'s that are new, preserving declaration order.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        for s in &other.symbols {
            if !symbols.contains(s) {
                symbols.push(*s);
            }
        }
        Alphabet { symbols }
    }

    /// The `n`-th word over this alphabet in shortlex order; index 0 is ε.
    pub fn shortlex_word(&self, n: u64) -> Word {
        let b = self.symbols.len() as u64;
        if b == 1 {
            // Unary alphabets: the n-th word is n copies of the symbol.
            return Word(vec![self.symbols[0]; n as usize]);
        }
        // Find the length block containing n: words shorter than length l
        // occupy indices [0, block_start(l)).
        let mut len = 0u32;
        let mut block_start = 0u64; // number of words of length < len
        let mut block_size = 1u64; // b^len
        while n >= block_start + block_size {
            block_start += block_size;
            block_size = block_size
                .checked_mul(b)
                .expect("shortlex block size overflowed u64");
            len += 1;
        }
        // Write the offset within the block in base b, left-padded to `len`
        // digits with the first symbol.
        let mut offset = n - block_start;
        let mut digits = vec![0usize; len as usize];
        for d in digits.iter_mut().rev() {
            *d = (offset % b) as usize;
            offset /= b;
        }
        Word(digits.into_iter().map(|d| self.symbols[d]).collect())
    }

    /// The shortlex index of `w`; inverse of [`Alphabet::shortlex_word`].
    ///
    /// Fails if `w` uses a symbol outside this alphabet.
    pub fn shortlex_index(&self, w: &Word) -> Result<u64, MachineError> {
        let b = self.symbols.len() as u64;
        let mut rank = 0u64; // lexicographic rank within the length block
        for s in w.symbols() {
            let d = self.index_of(*s).ok_or(MachineError::SymbolNotInAlphabet {
                symbol: s.0,
                context: "shortlex".into(),
            })? as u64;
            rank = rank
                .checked_mul(b)
                .and_then(|r| r.checked_add(d))
                .expect("shortlex index overflowed u64");
        }
        // Add the number of strictly shorter words.
        let mut block_start = 0u64;
        let mut block_size = 1u64;
        for _ in 0..w.len() {
            block_start = block_start
                .checked_add(block_size)
                .expect("shortlex index overflowed u64");
            block_size = block_size
                .checked_mul(b)
                .expect("shortlex index overflowed u64");
        }
        Ok(block_start + rank)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.0)?;
        }
        Ok(())
    }
}

/// A finite test universe: every word over an alphabet up to a maximum
/// length, iterated in shortlex order. Queries that would quantify over
/// "all words" quantify over one of these instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedDomain {
    alphabet: Alphabet,
    max_len: usize,
}

impl BoundedDomain {
    pub fn new(alphabet: Alphabet, max_len: usize) -> BoundedDomain {
        BoundedDomain { alphabet, max_len }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of words in the domain: Σ_{i ≤ max_len} |Σ|^i.
    pub fn len(&self) -> u64 {
        let base = self.alphabet.len() as u64;
        let mut total = 0u64;
        let mut layer = 1u64;
        for _ in 0..=self.max_len {
            total = total.checked_add(layer).expect("domain size overflow");
            layer = layer.checked_mul(base).expect("domain size overflow");
        }
        total
    }

    pub fn is_empty(&self) -> bool {
        false // the empty word is always present
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() <= self.max_len && w.is_over(&self.alphabet)
    }

    /// All domain words in shortlex order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(|n| self.alphabet.shortlex_word(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: enumerate all words up to a length bound by
    /// brute force, sorted by (length, lexicographic position), and compare
    /// that list against the closed-form shortlex functions.
    fn brute_force_shortlex(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
        let mut all: Vec<Word> = vec![Word::epsilon()];
        let mut frontier: Vec<Word> = vec![Word::epsilon()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for s in alphabet.symbols() {
                    let mut v = w.clone();
                    v.push(*s);
                    next.push(v);
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    #[test]
    fn shortlex_matches_brute_force_enumeration() {
        for letters in ["01", "1", "abc"] {
            let a = Alphabet::new(letters).unwrap();
            let oracle = brute_force_shortlex(&a, 5);
            for (n, w) in oracle.iter().enumerate() {
                assert_eq!(&a.shortlex_word(n as u64), w, "word {n} over {letters}");
                assert_eq!(a.shortlex_index(w).unwrap(), n as u64);
            }
        }
    }

    #[test]
    fn shortlex_pins_small_binary_values() {
        let a = Alphabet::new("01").unwrap();
        // Frozen expected values, confirmed by the brute-force oracle above:
        // ε=0, 0=1, 1=2, 00=3, 01=4, 10=5, 11=6.
        assert_eq!(a.shortlex_index(&Word::parse("11")).unwrap(), 6);
        assert_eq!(a.shortlex_word(6), Word::parse("11"));
        assert_eq!(a.shortlex_word(0), Word::epsilon());
        assert_eq!(a.shortlex_index(&Word::epsilon()).unwrap(), 0);
    }

    #[test]
    fn shortlex_round_trips_over_index_range() {
        let binary = Alphabet::new("01").unwrap();
        let unary = Alphabet::new("1").unwrap();
        for n in 0..=10_000u64 {
            assert_eq!(
                binary.shortlex_index(&binary.shortlex_word(n)).unwrap(),
                n
            );
            assert_eq!(unary.shortlex_index(&unary.shortlex_word(n)).unwrap(), n);
        }
    }

    #[test]
    fn shortlex_round_trips_over_word_range() {
        let a = Alphabet::new("01").unwrap();
        // Every word of length <= 8.
        for w in brute_force_shortlex(&a, 8) {
            let n = a.shortlex_index(&w).unwrap();
            assert_eq!(a.shortlex_word(n), w);
        }
    }

    #[test]
    fn shortlex_is_monotone_in_length() {
        let a = Alphabet::new("ab").unwrap();
        let mut last = None;
        for n in 0..200u64 {
            let w = a.shortlex_word(n);
            if let Some(prev) = last {
                assert!(w.len() >= prev);
            }
            last = Some(w.len());
        }
    }

    #[test]
    fn input_alphabets_reject_reserved_symbols() {
        for bad in ["a_", "a#", "a*"] {
            assert!(matches!(
                Alphabet::new_input(bad),
                Err(MachineError::ReservedSymbol { .. })
            ));
        }
        // Tape alphabets may contain the blank.
        assert!(Alphabet::new("01_").is_ok());
    }

    #[test]
    fn alphabets_reject_duplicates_and_empty() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aa").is_err());
    }

    #[test]
    fn unary_shortlex_is_the_identity_on_lengths() {
        let u = Alphabet::new("1").unwrap();
        for n in 0..100u64 {
            assert_eq!(u.shortlex_word(n).len() as u64, n);
        }
    }
}
