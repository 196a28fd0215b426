//! Build a Turing machine, run it on a few words, and read the outcomes.
//!
//! ```sh
//! cargo run --example run_a_machine
//! ```

use machinae::exec::{run, run_metered, RunStatus};
use machinae::word::Word;
use machinae::zoo;

fn main() {
    // A tape machine that turns 1^n into 1^2n.
    let doubler = zoo::unary_doubler();

    for input in ["", "1", "111"] {
        let w = Word::parse(input);
        let outcome = run(&doubler, &w, 10_000).expect("word is over the input alphabet");
        match outcome.status {
            RunStatus::Produced(z) => {
                println!("doubler({input:?}) = {z:?} in {} steps", outcome.steps_used)
            }
            other => println!("doubler({input:?}) gave {other:?}"),
        }
    }

    // Budgets are a hard wall: a machine that spins forever simply runs out.
    let spinner = zoo::spinner();
    let outcome = run(&spinner, &Word::parse("11"), 500).unwrap();
    assert_eq!(outcome.status, RunStatus::Exhausted);
    println!("spinner exhausted a budget of {} steps", outcome.steps_used);

    // A machine with no applicable transition wedges; the run reports
    // exhaustion immediately rather than burning the rest of the budget.
    let lone = zoo::lone_acceptor();
    let outcome = run(&lone, &Word::parse("1"), 10_000).unwrap();
    assert_eq!(outcome.status, RunStatus::Exhausted);
    println!("wedged run stopped after {} of 10000 steps", outcome.steps_used);

    // Produced results are budget-monotone: once a run halts, any larger
    // budget reproduces the same answer in the same number of steps.
    let w = Word::parse("11");
    let small = run(&doubler, &w, 10_000).unwrap();
    let large = run(&doubler, &w, 1_000_000).unwrap();
    assert_eq!(small, large);
    println!("verdict at 10^4 steps equals verdict at 10^6 steps");

    // Metered runs also report how much tape the head touched.
    let (outcome, usage) = run_metered(&doubler, &w, 10_000).unwrap();
    println!(
        "doubling {:?} produced {:?}: {} steps, {} cells visited",
        w,
        outcome.status.value().unwrap(),
        usage.steps,
        usage.cells_visited
    );
}
