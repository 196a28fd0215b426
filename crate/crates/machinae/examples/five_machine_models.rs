//! A tour of the five machine models — finite automata (deterministic and
//! nondeterministic), pushdown automata, tape machines, and inductive tape
//! machines — all driven through the same run interface.
//!
//! ```sh
//! cargo run --example five_machine_models
//! ```

use machinae::exec::{run, RunStatus};
use machinae::machine::PdaAcceptance;
use machinae::models::{acceptance_by_state_vs_result, itm_run_limit, nfa_to_dfa, pda_convert_acceptance};
use machinae::word::{Alphabet, BoundedDomain, Word};
use machinae::zoo;

fn accepted(m: &machinae::machine::MachineDescription, s: &str) -> bool {
    matches!(
        run(m, &Word::parse(s), 10_000).unwrap().status,
        RunStatus::Produced(_)
    )
}

fn main() {
    // A deterministic finite automaton: accepts words with an even number
    // of zeros. Acceptance is *producing anything* — an accepting run
    // produces the answer 1, a rejecting run wedges silently.
    let dfa = zoo::even_zeros_dfa();
    println!("dfa even_zeros:  \"0101\" -> {}", accepted(&dfa, "0101"));
    println!("dfa even_zeros:  \"010\"  -> {}", accepted(&dfa, "010"));

    // A nondeterministic automaton: accepts words ending in "01". Guessing
    // is resolved by the subset construction at run time — and the same
    // construction is available as an explicit compilation step.
    let nfa = zoo::ends_in_01_nfa();
    let det = nfa_to_dfa(&nfa).unwrap();
    let d = BoundedDomain::new(Alphabet::new_input("01").unwrap(), 6);
    for w in d.words() {
        let a = matches!(run(&nfa, &w, 10_000).unwrap().status, RunStatus::Produced(_));
        let b = matches!(run(&det, &w, 10_000).unwrap().status, RunStatus::Produced(_));
        assert_eq!(a, b, "subset construction must preserve acceptance");
    }
    println!("nfa ends_in_01 and its determinization agree on all words up to length 6");

    // For finite automata, acceptance read off the control states and
    // acceptance read off produced results are the same judgement.
    assert!(acceptance_by_state_vs_result(&dfa, &d, 10_000).unwrap());
    assert!(acceptance_by_state_vs_result(&nfa, &d, 10_000).unwrap());

    // A pushdown automaton: accepts a^n b^n by matching pushes against
    // pops. The two acceptance conventions — final state and empty stack —
    // are interconvertible without changing the accepted language.
    let pda = zoo::balanced_blocks_pda(PdaAcceptance::FinalState);
    let by_stack = pda_convert_acceptance(&pda, PdaAcceptance::EmptyStack).unwrap();
    let ab = BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 8);
    for w in ab.words() {
        let a = matches!(run(&pda, &w, 10_000).unwrap().status, RunStatus::Produced(_));
        let b = matches!(run(&by_stack, &w, 10_000).unwrap().status, RunStatus::Produced(_));
        assert_eq!(a, b);
    }
    println!("pda balanced_blocks accepts the same set under both acceptance conventions");
    println!("pda balanced_blocks: \"aabb\" -> {}", accepted(&pda, "aabb"));
    println!("pda balanced_blocks: \"aab\"  -> {}", accepted(&pda, "aab"));

    // A tape machine computes a function: here 1^n -> 1^2n.
    let tm = zoo::unary_doubler();
    let out = run(&tm, &Word::parse("111"), 10_000).unwrap();
    println!("tm unary_doubler(\"111\") = {:?}", out.status.value().unwrap());

    // An inductive tape machine never halts; its result is what the output
    // region converges to. The settling writer flips its answer a few times
    // and then leaves it alone forever — the limit reading captures that.
    let itm = zoo::settling_writer();
    let lim = itm_run_limit(&itm, &Word::epsilon(), 10_000, 1_000).unwrap();
    println!(
        "itm settling_writer converged to {:?} (last change at step {}, verdict {:?})",
        lim.value, lim.stabilized_at, lim.verdict
    );
}
