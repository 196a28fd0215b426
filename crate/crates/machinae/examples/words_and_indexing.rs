//! Words, alphabets, and the order that makes "the n-th input" meaningful.
//!
//! ```sh
//! cargo run --example words_and_indexing
//! ```

use machinae::word::{Alphabet, BoundedDomain, Word};

fn main() {
    // Alphabets are ordered sets of single-character symbols. Input
    // alphabets must avoid the reserved characters `_`, `#`, `*`, which
    // belong to blanks, pair separators, and emission markers.
    let binary = Alphabet::new_input("01").unwrap();
    assert!(Alphabet::new_input("0_1").is_err());

    // Every alphabet enumerates all words over itself in shortlex order:
    // shorter words first, ties broken alphabetically. The empty word is
    // index 0, so "the n-th word" is well defined for every n.
    println!("first ten binary words in shortlex order:");
    for n in 0..10 {
        let w = binary.shortlex_word(n);
        println!("  {n}: {:?}", w.to_string());
        assert_eq!(binary.shortlex_index(&w).unwrap(), n);
    }

    // Over a one-letter alphabet, shortlex is just tally counting.
    let unary = Alphabet::new_input("1").unwrap();
    assert_eq!(unary.shortlex_word(4), Word::parse("1111"));

    // A bounded domain is the finite stage everything in this crate is
    // verified on: all words up to a length cap.
    let d = BoundedDomain::new(binary, 3);
    let all: Vec<String> = d.words().map(|w| w.to_string()).collect();
    println!("domain of binary words up to length 3 ({} words):", d.len());
    println!("  {all:?}");
    assert_eq!(d.len(), 15);
    assert!(d.contains(&Word::parse("010")));
    assert!(!d.contains(&Word::parse("0100")));
}
