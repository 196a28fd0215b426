//! One machine, six questions: what does it compute, enumerate, accept,
//! weakly decide, codecide, and decide over a bounded domain?
//!
//! ```sh
//! cargo run --example mode_queries
//! ```

use machinae::modes::{
    accepts, accepts_exactly, codecides, computable_set, decides, enumerates, weakly_decides,
    Acceptance,
};
use machinae::theorems::weak_decider_from_acceptor;
use machinae::word::{Alphabet, BoundedDomain, Word};
use machinae::zoo;
use std::collections::BTreeSet;

const BUDGET: u64 = 10_000;

fn main() {
    let d = BoundedDomain::new(Alphabet::new_input("1").unwrap(), 8);
    let evens: BTreeSet<Word> = d.words().filter(|w| w.len() % 2 == 0).collect();

    // A total decider answers 1 on members and 0 elsewhere, on every word.
    let decider = zoo::unary_even_decider();
    let verdict = decides(&decider, &evens, &d, BUDGET).unwrap();
    println!("decider decides the even words:      {verdict}");
    assert!(verdict.holds);

    // The weak contract is not a weaker promise of the same shape — it
    // demands 1 on members and *silence* everywhere else. A total decider
    // is too loud: its 0 on the first odd word is already a violation.
    let verdict = weakly_decides(&decider, &evens, &d, BUDGET).unwrap();
    println!("decider asked to weakly decide:      {verdict}");
    assert!(!verdict.holds);

    // An acceptor halts on members and wedges on the rest; asking it to
    // decide fails too, and each verdict carries the first witness.
    let acceptor = zoo::even_length_acceptor();
    let verdict = decides(&acceptor, &evens, &d, BUDGET).unwrap();
    println!("acceptor asked to decide:            {verdict}");
    assert!(!verdict.holds);

    let verdict = accepts_exactly(&acceptor, &evens, &d, BUDGET).unwrap();
    println!("acceptor accepts the even words:     {verdict}");
    assert!(verdict.holds);

    // Acceptance can also be asked per word: within a budget, silence on a
    // non-member is indistinguishable from slowness.
    assert_eq!(
        accepts(&acceptor, &Word::parse("11"), BUDGET).unwrap(),
        Acceptance::Accepted
    );
    assert_eq!(
        accepts(&acceptor, &Word::parse("1"), BUDGET).unwrap(),
        Acceptance::NotWithinBudget
    );

    // This acceptor halts with the input intact, so it is not yet a weak
    // decider — it says "1111", not "1". The standard construction wraps
    // it so that every halt is translated to the literal answer 1.
    let weak = weak_decider_from_acceptor(&acceptor).unwrap();
    let verdict = weakly_decides(&weak, &evens, &d, BUDGET).unwrap();
    println!("wrapped acceptor weakly decides:     {verdict}");
    assert!(verdict.holds);

    // Codeciding the evens means indicating exactly the odd words. The odd
    // acceptor wrapped the same way does it.
    let co = weak_decider_from_acceptor(&zoo::odd_length_acceptor()).unwrap();
    let verdict = codecides(&co, &evens, &d, BUDGET).unwrap();
    println!("odd indicator codecides the evens:   {verdict}");
    assert!(verdict.holds);

    // Computing and enumerating are about outputs rather than membership.
    // The doubler's outputs over this domain are the even tallies, and that
    // is exactly the set it enumerates.
    let doubler = zoo::unary_doubler();
    let range = computable_set(&doubler, &d, BUDGET).unwrap();
    println!(
        "doubler's computable set has {} elements: {:?}",
        range.len(),
        range.iter().map(|w| w.to_string()).collect::<Vec<_>>()
    );
    let verdict = enumerates(&doubler, &range, &d, BUDGET).unwrap();
    println!("doubler enumerates that set:         {verdict}");
    assert!(verdict.holds);
}
