//! The seven composition disciplines: plain sequential and parallel
//! pairings, and their four predicate-gated variants.
//!
//! ```sh
//! cargo run --example compose_machines
//! ```

use machinae::combinators::{
    comp_predicate, conj_parallel, disj_parallel, p_conj_parallel, p_disj_parallel, p_disj_seq,
    p_seq, rewriting, seq_compose,
};
use machinae::exec::{run, RunStatus};
use machinae::word::Word;
use machinae::zoo;

fn show(label: &str, m: &machinae::machine::MachineDescription, input: &str) {
    let w = Word::parse(input);
    match run(m, &w, 100_000).unwrap().status {
        RunStatus::Produced(z) => println!("{label}({input:?}) = {z:?}"),
        _ => println!("{label}({input:?}) gave no result"),
    }
}

fn main() {
    let double = zoo::unary_doubler();
    let swap = zoo::swapper();

    // Sequential composition runs the second machine on the input and
    // feeds its result to the first: swapping 0s and 1s twice restores
    // the original word.
    let identity = seq_compose(&swap, &swap).unwrap();
    show("swap-twice", &identity, "0110");

    // The pairing is checked statically: everything the inner machine
    // could leave on its tape must be readable by the outer one. The
    // doubler's work tape over-approximates its outputs, so chaining it
    // into itself is refused up front rather than failing mid-run.
    let err = seq_compose(&double, &double).unwrap_err();
    println!("doubling twice is refused: {err}");

    // Disjunctive parallel runs both machines in lockstep on the same input
    // and keeps whichever answers first. Racing a doubler against a machine
    // that never halts still answers — that is the whole point.
    let race = disj_parallel(&double, &zoo::spinner());
    show("double-or-spin", &race, "111");

    // Conjunctive parallel waits for both answers and joins them with '#'.
    let both = conj_parallel(&double, &swap);
    show("double-and-swap", &both, "11");

    // The gated variants consult a predicate machine — a computer of 1 on
    // the words it approves — before committing. This gate approves exactly
    // the word "1111".
    let echo = rewriting(&double.input_alphabet()).unwrap();
    let gate = comp_predicate(&Word::parse("1111"), &double.output_alphabet()).unwrap();

    // Gated sequence: compute the inner result, test it, and hand it to the
    // outer machine only on approval. "11" doubles to "1111", the gate
    // passes it, and the echo returns it; "1" doubles to "11", the gate
    // refuses, and the composite wedges with no result at any budget.
    let picky = p_seq(&echo, &gate, &double);
    show("double-if-approved", &picky, "11");
    show("double-if-approved", &picky, "1");

    // Gated conjunction: test the second machine's answer; on approval run
    // the first machine on the original input, otherwise keep the second
    // machine's answer as-is. Here: double exactly the word "1111".
    let double_once_big = p_conj_parallel(&double, &gate, &echo);
    show("double-if-big", &double_once_big, "1111");
    show("double-if-big", &double_once_big, "11");

    // Filtered race: run both, test each result as it arrives, and return
    // the first that passes; a failing result knocks its producer out of
    // the race. On "11" the echo finishes first but "11" fails the gate, so
    // the doubler's later "1111" wins. On "1" both results fail — wedged.
    let filtered = p_disj_parallel(&double, &gate, &echo);
    show("first-approved", &filtered, "11");
    show("first-approved", &filtered, "1");

    // Fallback: take the first machine's answer if the gate approves it,
    // otherwise rerun from the original input on the second machine.
    let fallback = p_disj_seq(&double, &gate, &echo);
    show("double-else-echo", &fallback, "11");
    show("double-else-echo", &fallback, "1");
}
