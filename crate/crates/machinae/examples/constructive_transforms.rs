//! Constructions between operating modes: every arrow is an actual machine
//! built from the old one, and every claim is checked behaviourally.
//!
//! ```sh
//! cargo run --example constructive_transforms
//! ```

use machinae::modes::{
    accepts_exactly, codecides, computable_set, decides, weakly_decides, Mode,
};
use machinae::theorems::{
    acceptor_from_weak_decider, computer_from_acceptor, computer_from_weak_decider,
    decider_from_acceptors, decider_from_weak_and_co, echo_filter, functional_equiv,
    weak_decider_from_acceptor, weak_decider_from_computer,
};
use machinae::word::{Alphabet, BoundedDomain, Word};
use machinae::zoo;
use std::collections::BTreeSet;

const BUDGET: u64 = 200_000;

fn main() {
    let d = BoundedDomain::new(Alphabet::new_input("1").unwrap(), 6);
    let evens: BTreeSet<Word> = d.words().filter(|w| w.len() % 2 == 0).collect();

    // Start from an acceptor of the even words and walk the mode square.
    let acceptor = zoo::even_length_acceptor();

    // Acceptor -> weak decider: translate every halt into the answer 1.
    let weak = weak_decider_from_acceptor(&acceptor).unwrap();
    assert!(weakly_decides(&weak, &evens, &d, BUDGET).unwrap().holds);
    println!("acceptor -> weak decider: holds");

    // Weak decider -> acceptor: gate on the answer actually being 1, so a
    // weak decider that answered 0 somewhere would wedge there instead.
    let back = acceptor_from_weak_decider(&weak).unwrap();
    assert!(accepts_exactly(&back, &evens, &d, BUDGET).unwrap().holds);
    println!("weak decider -> acceptor: holds");

    // Acceptor -> computer of the accepted set: echo the input through the
    // acceptance gate. Its range over the domain is the accepted set.
    let computer = computer_from_acceptor(&acceptor).unwrap();
    assert_eq!(computable_set(&computer, &d, BUDGET).unwrap(), evens);
    println!("acceptor -> computer of the set: range is the accepted set");

    // Weak decider -> computer works the same way.
    let computer2 = computer_from_weak_decider(&weak).unwrap();
    assert_eq!(computable_set(&computer2, &d, BUDGET).unwrap(), evens);

    // Computer -> weak decider runs the search in reverse: to test u,
    // enumerate the computer's range by dovetailing and answer 1 when u
    // shows up. The rounds parameter bounds how far the stream is driven.
    let searched = weak_decider_from_computer(&computer, 2_000).unwrap();
    assert!(weakly_decides(&searched, &evens, &d, BUDGET).unwrap().holds);
    println!("computer -> weak decider (stream search): holds");

    // Two one-sided machines make a total decider: one weakly decides the
    // set, the other its complement, and the race tags the winner.
    let co = weak_decider_from_acceptor(&zoo::odd_length_acceptor()).unwrap();
    let total = decider_from_weak_and_co(&weak, &co).unwrap();
    assert!(decides(&total, &evens, &d, BUDGET).unwrap().holds);
    assert!(codecides(&co, &evens, &d, BUDGET).unwrap().holds);
    println!("weak + co -> total decider: holds");

    // The same pairing works from two acceptors directly.
    let total2 =
        decider_from_acceptors(&zoo::even_length_acceptor(), &zoo::odd_length_acceptor()).unwrap();
    assert!(decides(&total2, &evens, &d, BUDGET).unwrap().holds);
    println!("acceptor + co-acceptor -> total decider: holds");

    // And back down: a total decider splits into computers of the set and
    // of the complement by echoing the input through each answer.
    let keep = echo_filter(&total, &Word::parse("1")).unwrap();
    let drop = echo_filter(&total, &Word::parse("0")).unwrap();
    let odds: BTreeSet<Word> = d.words().filter(|w| w.len() % 2 == 1).collect();
    assert_eq!(computable_set(&keep, &d, BUDGET).unwrap(), evens);
    assert_eq!(computable_set(&drop, &d, BUDGET).unwrap(), odds);
    println!("total decider -> computers of the set and its complement");

    // Round trip: the rebuilt decider behaves exactly like the original.
    let rebuilt = machinae::theorems::decider_from_computers(&keep, &drop, 2_000).unwrap();
    let verdict = functional_equiv(&total, &rebuilt, Mode::Decide, &d, BUDGET).unwrap();
    println!("rebuilt decider equivalent to the original: {verdict}");
    assert!(verdict.holds);
}
