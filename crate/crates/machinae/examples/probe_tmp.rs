use machinae::combinators::{constant, rewriting};
use machinae::modes::{decides, Mode};
use machinae::theorems::{decider_from_computers, echo_filter, functional_equiv};
use machinae::word::{Alphabet, BoundedDomain, Word};
use machinae::zoo;
use std::collections::BTreeSet;
use std::time::Instant;

fn main() {
    // Lane 1 rebuild at full budget
    let d = BoundedDomain::new(Alphabet::new_input("01").unwrap(), 8);
    let dec = zoo::even_zeros_decider();
    let keep = echo_filter(&dec, &Word::parse("1")).unwrap();
    let drop = echo_filter(&dec, &Word::parse("0")).unwrap();
    let rebuilt = decider_from_computers(&keep, &drop, 600).unwrap();
    let t0 = Instant::now();
    let v = functional_equiv(&dec, &rebuilt, Mode::Decide, &d, 2_000_000).unwrap();
    println!("lane1 equiv: {} in {:?}", v.holds, t0.elapsed());

    // Lane 2: everything/nothing over binary via rewriting
    let alph = Alphabet::new_input("01").unwrap();
    let echo = rewriting(&alph).unwrap();
    let none = constant(&alph, None).unwrap();
    let always1 = constant(&alph, Some(&Word::parse("1"))).unwrap();
    let rebuilt_all = decider_from_computers(&echo, &none, 600).unwrap();
    let t0 = Instant::now();
    let v = functional_equiv(&always1, &rebuilt_all, Mode::Decide, &d, 2_000_000).unwrap();
    println!("lane2 equiv: {} in {:?}", v.holds, t0.elapsed());

    // Criterion 4: unary thm2.1 at budget 1e4 rounds 48
    let du = BoundedDomain::new(Alphabet::new_input("1").unwrap(), 8);
    let evens: BTreeSet<Word> = du.words().filter(|w| w.len() % 2 == 0).collect();
    let dec_u = zoo::unary_even_decider();
    let keep_u = echo_filter(&dec_u, &Word::parse("1")).unwrap();
    let drop_u = echo_filter(&dec_u, &Word::parse("0")).unwrap();
    let rebuilt_u = decider_from_computers(&keep_u, &drop_u, 48).unwrap();
    let t0 = Instant::now();
    let v = functional_equiv(&dec_u, &rebuilt_u, Mode::Decide, &du, 10_000).unwrap();
    println!("thm2.1 unary evens: {} in {:?}", v.holds, t0.elapsed());
    let vv = decides(&rebuilt_u, &evens, &du, 10_000).unwrap();
    println!("  rebuilt decides evens: {vv}");
}
