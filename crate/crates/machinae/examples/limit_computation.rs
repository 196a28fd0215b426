//! Inductive machines: results read off as limits of a never-ending run,
//! and the lift that turns any halting decider into a stabilising one.
//!
//! ```sh
//! cargo run --example limit_computation
//! ```

use machinae::exec::{Executor, RunStatus};
use machinae::models::itm_run_limit;
use machinae::theorems::limit_decider;
use machinae::word::Word;
use machinae::zoo;

fn main() {
    // The settling writer flips its output cell a few times, then leaves
    // it alone forever. Its limit is well-defined even though no step of
    // the run is final.
    let settling = zoo::settling_writer();
    let lim = itm_run_limit(&settling, &Word::epsilon(), 10_000, 1_000).unwrap();
    println!(
        "settling writer: value {:?}, last change at step {}, {:?}",
        lim.value, lim.stabilized_at, lim.verdict
    );

    // The restless writer never stops flipping; within any window the
    // output is still in motion, so no limit reading is stable.
    let restless = zoo::restless_writer();
    let lim = itm_run_limit(&restless, &Word::epsilon(), 10_000, 1_000).unwrap();
    println!(
        "restless writer: value {:?} at budget's end, {:?}",
        lim.value, lim.verdict
    );

    // The executor routes inductive machines through the limit reading
    // automatically, with a stability window derived from the budget.
    let exec = Executor::new(&settling);
    match exec.run(&Word::epsilon(), 10_000).unwrap().status {
        RunStatus::LimitStable { value, stabilized_at } => {
            println!("executor read the limit {value:?} (stable since step {stabilized_at})")
        }
        other => println!("unexpected outcome {other:?}"),
    }

    // The lift: any halting machine T becomes an inductive machine that
    // simulates T while maintaining a running verdict — 0 while T is still
    // going, rewritten once T halts. If T halts, the limit is its answer;
    // if T runs forever, the verdict cell settles on 0 by never changing.
    // Either way the limit machine *stabilises on every input*: it decides
    // the halting behaviour that T only weakly exhibits.
    //
    // (Precondition: T must never move left of its starting cell.)
    let halting = zoo::even_length_acceptor();
    let lifted = limit_decider(&halting).unwrap();

    for input in ["", "1", "11", "111"] {
        let w = Word::parse(input);
        let lim = itm_run_limit(&lifted, &w, 10_000, 1_000).unwrap();
        println!(
            "lifted acceptor on {input:?}: limit {:?} ({:?})",
            lim.value, lim.verdict
        );
    }
    // Even words: the acceptor halts, so the limit is 1. Odd words: it
    // wedges, and the limit stays 0 — a verdict the halting machine itself
    // could never return.
}
