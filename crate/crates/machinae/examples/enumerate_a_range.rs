//! Enumerate a machine's range by dovetailing: interleave runs on every
//! input so that no single non-halting run can block the stream.
//!
//! ```sh
//! cargo run --example enumerate_a_range
//! ```

use machinae::amd::format_emission;
use machinae::dovetail::{bidiagonal_stream, derived_total, padded_total, range_oracle, Emission};
use machinae::exec::run;
use machinae::word::{Alphabet, BoundedDomain, Word};
use machinae::zoo;
use std::collections::BTreeSet;

fn main() {
    // A machine under enumeration must be assumed to wedge somewhere, so
    // no input can be run to completion before moving on. Round m instead
    // replays inputs 1 through m from scratch with an allowance of m
    // steps; a run that halts within h steps surfaces in round h and in
    // every round after it. Each emission records its cell.
    let m = zoo::unary_doubler();
    let emissions: Vec<Emission> = bidiagonal_stream(&m, 64).unwrap().collect();

    println!("first emissions (round, input index, halt step, output):");
    for e in emissions.iter().take(4) {
        println!("  {}", format_emission(e, true));
    }
    println!("  … {} emissions in 64 rounds", emissions.len());

    // Replays make the output *set* converge to the machine's range. Over
    // a bounded domain the range can be read off directly by per-input
    // simulation — everything the direct reading finds must eventually
    // show up in the stream.
    let streamed: BTreeSet<Word> = emissions.iter().map(|e| e.output.clone()).collect();
    let domain = BoundedDomain::new(m.input_alphabet(), 4);
    let direct = range_oracle(&m, &domain, 10_000).unwrap();
    for w in &direct {
        assert!(streamed.contains(w), "enumeration missed {w:?}");
    }
    println!(
        "all {} outputs reachable from words up to length 4 appear in the stream",
        direct.len()
    );

    // A machine that wedges on most inputs still enumerates: the wedged
    // cells simply never emit, and the halting ones flow past them.
    let partial = zoo::lone_acceptor();
    let got: Vec<Emission> = bidiagonal_stream(&partial, 40).unwrap().collect();
    let distinct: BTreeSet<Word> = got.iter().map(|e| e.output.clone()).collect();
    println!(
        "lone_acceptor: {} emissions in 40 rounds, all with output {:?}",
        got.len(),
        distinct.iter().map(|w| w.to_string()).collect::<Vec<_>>()
    );

    // The stream can be reified as a machine again: index k in, the k-th
    // emission's output out. The derived machine runs out of schedule past
    // the last emission; the padded variant answers with the final
    // emission's value instead, making it total once anything has emitted.
    let nth = derived_total(&m, 24).unwrap();
    let padded = padded_total(&m, 24).unwrap();
    let unary = Alphabet::new_input("1").unwrap();
    for k in [1u64, 8, 45] {
        let index = unary.shortlex_word(k - 1);
        let a = run(&nth, &index, 100_000).unwrap();
        let b = run(&padded, &index, 100_000).unwrap();
        println!(
            "index {k}: derived -> {:?}, padded -> {:?}",
            a.status.value().map(|w| w.to_string()),
            b.status.value().map(|w| w.to_string())
        );
    }
}
