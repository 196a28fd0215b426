//! A corpus of small machines whose behaviour is exactly understood.
//!
//! Tests and examples need machines with predictable step counts, known
//! languages, and known functions; this module collects them. Every machine
//! here is verified in the test block below against an independent oracle —
//! a direct string computation, never the machine itself — over an
//! exhaustive bounded domain.
//!
//! Convention: the first state listed is the start state.

use crate::machine::{
    MachineDescription, Move, NfaSpec, PdaAcceptance, PdaSpec, PdaTransition, TmAction, TmSpec,
};
use crate::word::{Alphabet, Symbol};
use std::collections::{BTreeMap, BTreeSet};

use Move::{Left, Right, Stay};

fn build_tm_spec(
    states: &[&str],
    input: &str,
    tape: &str,
    accept: &[&str],
    rules: &[(&str, char, &str, char, Move)],
) -> TmSpec {
    let mut transitions = BTreeMap::new();
    for (from, read, to, write, movement) in rules {
        transitions.insert(
            (from.to_string(), Symbol(*read)),
            TmAction {
                to: to.to_string(),
                write: Symbol(*write),
                movement: *movement,
            },
        );
    }
    TmSpec {
        states: states.iter().map(|s| s.to_string()).collect(),
        input_alphabet: Alphabet::new_input(input).expect("fixed corpus alphabet"),
        tape_alphabet: Alphabet::new(tape).expect("fixed corpus alphabet"),
        blank: Symbol('_'),
        start: states[0].to_string(),
        accept: accept.iter().map(|s| s.to_string()).collect(),
        transitions,
    }
}

fn build_tm(
    states: &[&str],
    input: &str,
    tape: &str,
    accept: &[&str],
    rules: &[(&str, char, &str, char, Move)],
) -> MachineDescription {
    MachineDescription::tm(build_tm_spec(states, input, tape, accept, rules))
        .expect("the corpus table is well-formed")
}

fn build_itm(
    states: &[&str],
    input: &str,
    tape: &str,
    rules: &[(&str, char, &str, char, Move)],
) -> MachineDescription {
    MachineDescription::itm(build_tm_spec(states, input, tape, &[], rules))
        .expect("the corpus table is well-formed")
}

/// Unary doubling: on `1^n` the machine halts with `1^2n`. It marks each
/// original `1`, appends a matching mark at the right end, and finally
/// converts everything back to `1`s — the textbook shape of a computer that
/// genuinely has to work for its answer.
pub fn unary_doubler() -> MachineDescription {
    build_tm(
        &["find", "run", "back", "rewind", "convert", "halt"],
        "1",
        "1YZ_",
        &["halt"],
        &[
            ("find", '1', "run", 'Y', Right),
            ("run", '1', "run", '1', Right),
            ("run", 'Z', "run", 'Z', Right),
            ("run", '_', "back", 'Z', Left),
            ("back", '1', "back", '1', Left),
            ("back", 'Z', "back", 'Z', Left),
            ("back", 'Y', "find", 'Y', Right),
            ("find", 'Z', "rewind", 'Z', Left),
            ("find", '_', "rewind", '_', Left),
            ("rewind", 'Y', "rewind", '1', Left),
            ("rewind", '_', "convert", '_', Right),
            ("convert", '1', "convert", '1', Right),
            ("convert", 'Z', "convert", '1', Right),
            ("convert", '_', "halt", '_', Stay),
        ],
    )
}

/// Accepts unary words of even length and wedges on odd ones. It halts
/// with the input intact — for a tape machine, accepting means producing
/// *anything*, not producing `1`.
pub fn even_length_acceptor() -> MachineDescription {
    build_tm(
        &["even", "odd", "yes"],
        "1",
        "1_",
        &["yes"],
        &[
            ("even", '1', "odd", '1', Right),
            ("odd", '1', "even", '1', Right),
            ("even", '_', "yes", '_', Stay),
        ],
    )
}

/// Accepts unary words of odd length and wedges on even ones.
pub fn odd_length_acceptor() -> MachineDescription {
    build_tm(
        &["even", "odd", "yes"],
        "1",
        "1_",
        &["yes"],
        &[
            ("even", '1', "odd", '1', Right),
            ("odd", '1', "even", '1', Right),
            ("odd", '_', "yes", '_', Stay),
        ],
    )
}

/// Accepts exactly the word `11` (halting at step 3 with the input intact)
/// and wedges on every other unary word. A machine whose range is a single
/// word, reached from a single input.
pub fn lone_acceptor() -> MachineDescription {
    build_tm(
        &["zero", "one", "two", "yes"],
        "1",
        "1_",
        &["yes"],
        &[
            ("zero", '1', "one", '1', Right),
            ("one", '1', "two", '1', Right),
            ("two", '_', "yes", '_', Stay),
        ],
    )
}

/// Moves right forever without writing: never halts, never changes its
/// output. The canonical budget-burner.
pub fn spinner() -> MachineDescription {
    build_tm(
        &["go"],
        "1",
        "1_",
        &[],
        &[
            ("go", '1', "go", '1', Right),
            ("go", '_', "go", '_', Right),
        ],
    )
}

/// Halts after exactly `delay` steps with its input untouched: an identity
/// computer with a dial for its halting time. `dawdler(0)` halts on the
/// spot.
pub fn dawdler(delay: u64) -> MachineDescription {
    let names: Vec<String> = (0..=delay).map(|i| format!("d{i}")).collect();
    let states: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut rules = Vec::new();
    for i in 0..delay as usize {
        for ch in ['1', '_'] {
            rules.push((states[i], ch, states[i + 1], ch, Right));
        }
    }
    let last = [*states.last().expect("at least one state")];
    build_tm(&states, "1", "1_", &last, &rules)
}

/// Total decider for "even length" over the unary alphabet: erases the
/// input and answers `1` or `0`.
pub fn unary_even_decider() -> MachineDescription {
    build_tm(
        &["even", "odd", "done"],
        "1",
        "10_",
        &["done"],
        &[
            ("even", '1', "odd", '_', Right),
            ("odd", '1', "even", '_', Right),
            ("even", '_', "done", '1', Stay),
            ("odd", '_', "done", '0', Stay),
        ],
    )
}

/// Total decider for "an even number of `0`s" over `{0,1}`.
pub fn even_zeros_decider() -> MachineDescription {
    build_tm(
        &["even", "odd", "done"],
        "01",
        "01_",
        &["done"],
        &[
            ("even", '0', "odd", '_', Right),
            ("even", '1', "even", '_', Right),
            ("odd", '0', "even", '_', Right),
            ("odd", '1', "odd", '_', Right),
            ("even", '_', "done", '1', Stay),
            ("odd", '_', "done", '0', Stay),
        ],
    )
}

/// Total decider for the block language `a^n b^n` over `{a,b}`: repeatedly
/// cancels the leftmost `a` against the rightmost `b`, answering `0` the
/// moment the shape is off and `1` when everything cancels.
pub fn block_match_decider() -> MachineDescription {
    let mut rules = vec![
        ("lead", 'a', "run_right", '_', Right),
        ("lead", 'b', "wipe_right", '_', Right),
        ("lead", '_', "done", '1', Stay),
        ("run_right", 'a', "run_right", 'a', Right),
        ("run_right", 'b', "run_right", 'b', Right),
        ("run_right", '_', "last", '_', Left),
        ("last", 'b', "run_left", '_', Left),
        ("last", 'a', "wipe_left", '_', Left),
        ("last", '_', "done", '0', Stay),
        ("run_left", 'a', "run_left", 'a', Left),
        ("run_left", 'b', "run_left", 'b', Left),
        ("run_left", '_', "lead", '_', Right),
    ];
    for ch in ['a', 'b'] {
        rules.push(("wipe_right", ch, "wipe_right", '_', Right));
        rules.push(("wipe_left", ch, "wipe_left", '_', Left));
    }
    rules.push(("wipe_right", '_', "done", '0', Stay));
    rules.push(("wipe_left", '_', "done", '0', Stay));
    build_tm(
        &[
            "lead",
            "run_right",
            "last",
            "run_left",
            "wipe_right",
            "wipe_left",
            "done",
        ],
        "ab",
        "ab01_",
        &["done"],
        &rules,
    )
}

/// The computer that exchanges `0` and `1` throughout its input.
pub fn swapper() -> MachineDescription {
    build_tm(
        &["swap", "done"],
        "01",
        "01_",
        &["done"],
        &[
            ("swap", '0', "swap", '1', Right),
            ("swap", '1', "swap", '0', Right),
            ("swap", '_', "done", '_', Stay),
        ],
    )
}

/// Limit-reading machine that appends a `1` to its input and then wanders
/// off rightward forever. It never halts, but its output never changes
/// again after step |input| + 1: the simplest machine whose answer exists
/// only in the limit.
pub fn settling_writer() -> MachineDescription {
    build_itm(
        &["walk", "park", "drift"],
        "1",
        "1_",
        &[
            ("walk", '1', "walk", '1', Right),
            ("walk", '_', "park", '1', Stay),
            ("park", '1', "drift", '1', Right),
            ("drift", '_', "drift", '_', Right),
        ],
    )
}

/// Limit-reading machine that flips the cell after its input on and off
/// forever: its output changes at every step and never settles.
pub fn restless_writer() -> MachineDescription {
    build_itm(
        &["walk", "on", "off"],
        "1",
        "1_",
        &[
            ("walk", '1', "walk", '1', Right),
            ("walk", '_', "on", '1', Stay),
            ("on", '1', "off", '_', Stay),
            ("off", '_', "on", '1', Stay),
        ],
    )
}

/// Finite automaton accepting words over `{0,1}` with an even number of
/// `0`s.
pub fn even_zeros_dfa() -> MachineDescription {
    let mut transitions = BTreeMap::new();
    for (q, s, t) in [
        ("even", '0', "odd"),
        ("even", '1', "even"),
        ("odd", '0', "even"),
        ("odd", '1', "odd"),
    ] {
        transitions.insert((q.to_string(), Symbol(s)), t.to_string());
    }
    MachineDescription::dfa(crate::machine::DfaSpec {
        states: vec!["even".to_string(), "odd".to_string()],
        input_alphabet: Alphabet::new_input("01").expect("fixed corpus alphabet"),
        start: "even".to_string(),
        accept: BTreeSet::from(["even".to_string()]),
        transitions,
    })
    .expect("the corpus table is well-formed")
}

/// Finite automaton over `{a,b}` accepting words with an even number of
/// `a`s when `accept_even` is true, and an odd number otherwise.
pub fn letter_parity_dfa(accept_even: bool) -> MachineDescription {
    let mut transitions = BTreeMap::new();
    for (q, s, t) in [
        ("even", 'a', "odd"),
        ("even", 'b', "even"),
        ("odd", 'a', "even"),
        ("odd", 'b', "odd"),
    ] {
        transitions.insert((q.to_string(), Symbol(s)), t.to_string());
    }
    let accepting = if accept_even { "even" } else { "odd" };
    MachineDescription::dfa(crate::machine::DfaSpec {
        states: vec!["even".to_string(), "odd".to_string()],
        input_alphabet: Alphabet::new_input("ab").expect("fixed corpus alphabet"),
        start: "even".to_string(),
        accept: BTreeSet::from([accepting.to_string()]),
        transitions,
    })
    .expect("the corpus table is well-formed")
}

/// Nondeterministic automaton accepting words over `{0,1}` that end in
/// `01`: it guesses where the suffix starts.
pub fn ends_in_01_nfa() -> MachineDescription {
    let mut transitions: BTreeMap<(String, Option<Symbol>), BTreeSet<String>> = BTreeMap::new();
    let mut add = |q: &str, s: Option<char>, targets: &[&str]| {
        transitions.insert(
            (q.to_string(), s.map(Symbol)),
            targets.iter().map(|t| t.to_string()).collect(),
        );
    };
    add("any", Some('0'), &["any", "saw0"]);
    add("any", Some('1'), &["any"]);
    add("saw0", Some('1'), &["hit"]);
    MachineDescription::nfa(NfaSpec {
        states: vec!["any".to_string(), "saw0".to_string(), "hit".to_string()],
        input_alphabet: Alphabet::new_input("01").expect("fixed corpus alphabet"),
        start: "any".to_string(),
        accept: BTreeSet::from(["hit".to_string()]),
        transitions,
    })
    .expect("the corpus table is well-formed")
}

/// Pushdown automaton for the block language `a^n b^n` (n ≥ 0) over
/// `{a,b}`, in either acceptance convention. The stack alphabet is `ZA`
/// with `Z` as the initial bottom marker.
pub fn balanced_blocks_pda(acceptance: PdaAcceptance) -> MachineDescription {
    let t = |from: &str, input: Option<char>, pop: char, to: &str, push: &str| PdaTransition {
        from: from.to_string(),
        input: input.map(Symbol),
        pop: Symbol(pop),
        to: to.to_string(),
        push: push.chars().map(Symbol).collect(),
    };
    let mut transitions = BTreeSet::from([
        t("grow", Some('a'), 'Z', "grow", "AZ"),
        t("grow", Some('a'), 'A', "grow", "AA"),
        t("grow", Some('b'), 'A', "shrink", ""),
        t("shrink", Some('b'), 'A', "shrink", ""),
    ]);
    let (states, accept): (Vec<String>, BTreeSet<String>) = match acceptance {
        PdaAcceptance::EmptyStack => {
            transitions.insert(t("grow", None, 'Z', "shrink", ""));
            transitions.insert(t("shrink", None, 'Z', "shrink", ""));
            (
                vec!["grow".to_string(), "shrink".to_string()],
                BTreeSet::new(),
            )
        }
        PdaAcceptance::FinalState => {
            transitions.insert(t("grow", None, 'Z', "ok", "Z"));
            transitions.insert(t("shrink", None, 'Z', "ok", "Z"));
            (
                vec!["grow".to_string(), "shrink".to_string(), "ok".to_string()],
                BTreeSet::from(["ok".to_string()]),
            )
        }
    };
    MachineDescription::pda(PdaSpec {
        states,
        input_alphabet: Alphabet::new_input("ab").expect("fixed corpus alphabet"),
        stack_alphabet: Alphabet::new("ZA").expect("fixed corpus alphabet"),
        start: "grow".to_string(),
        accept,
        acceptance,
        transitions,
    })
    .expect("the corpus table is well-formed")
}

/// Pushdown automaton (final-state convention) for the complement of the
/// block language: it accepts exactly the words over `{a,b}` that are
/// *not* of the form `a^n b^n`.
///
/// The automaton branches over the three ways a word can fail to be a
/// block: a `b` is followed somewhere by an `a`, the `a`-run is longer
/// than the `b`-run (detected by guessing, with an ε-move, that input
/// ends while a counter symbol is still stacked), or the `b`-run is
/// longer (the bottom marker surfaces while `b`s remain).
pub fn unbalanced_blocks_pda() -> MachineDescription {
    let t = |from: &str, input: Option<char>, pop: char, to: &str, push: &str| PdaTransition {
        from: from.to_string(),
        input: input.map(Symbol),
        pop: Symbol(pop),
        to: to.to_string(),
        push: push.chars().map(Symbol).collect(),
    };
    let transitions = BTreeSet::from([
        // Pure a-prefix: count the run. Any nonempty all-a word is already
        // outside the block language, so "onlya" is accepting.
        t("begin", Some('a'), 'Z', "onlya", "AZ"),
        t("onlya", Some('a'), 'A', "onlya", "AA"),
        t("onlya", Some('b'), 'A', "drop", ""),
        // Matching phase: pop one counter per b.
        t("drop", Some('b'), 'A', "drop", ""),
        // More bs than as: the bottom marker surfaced with input left.
        t("drop", Some('b'), 'Z', "extrab", "Z"),
        t("extrab", Some('b'), 'Z', "extrab", "Z"),
        // More as than bs: guess that the input ends here with a counter
        // still stacked. A wrong guess strands the branch harmlessly.
        t("drop", None, 'A', "extraa", "A"),
        // A b followed by an a, in any of the phases that have seen a b.
        t("begin", Some('b'), 'Z', "bfirst", "Z"),
        t("bfirst", Some('b'), 'Z', "bfirst", "Z"),
        t("bfirst", Some('a'), 'Z', "tail", "Z"),
        t("drop", Some('a'), 'A', "tail", "A"),
        t("drop", Some('a'), 'Z', "tail", "Z"),
        t("extrab", Some('a'), 'Z', "tail", "Z"),
        t("tail", Some('a'), 'A', "tail", "A"),
        t("tail", Some('a'), 'Z', "tail", "Z"),
        t("tail", Some('b'), 'A', "tail", "A"),
        t("tail", Some('b'), 'Z', "tail", "Z"),
    ]);
    MachineDescription::pda(PdaSpec {
        states: ["begin", "onlya", "drop", "extraa", "extrab", "bfirst", "tail"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        input_alphabet: Alphabet::new_input("ab").expect("fixed corpus alphabet"),
        stack_alphabet: Alphabet::new("ZA").expect("fixed corpus alphabet"),
        start: "begin".to_string(),
        accept: BTreeSet::from([
            "onlya".to_string(),
            "extraa".to_string(),
            "extrab".to_string(),
            "bfirst".to_string(),
            "tail".to_string(),
        ]),
        acceptance: PdaAcceptance::FinalState,
        transitions,
    })
    .expect("the corpus table is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::{run, RunStatus};
    use crate::word::{BoundedDomain, Word};

    const BUDGET: u64 = 10_000;

    fn unary(n: usize) -> Word {
        Word::parse(&"1".repeat(n))
    }

    fn outcome(m: &MachineDescription, w: &Word) -> RunStatus {
        run(m, w, BUDGET).unwrap().status
    }

    fn produced(s: &str) -> RunStatus {
        RunStatus::Produced(Word::parse(s))
    }

    /// Oracle: string doubling.
    #[test]
    fn unary_doubler_doubles() {
        let m = unary_doubler();
        for n in 0..=6 {
            assert_eq!(
                outcome(&m, &unary(n)),
                RunStatus::Produced(unary(2 * n)),
                "on 1^{n}"
            );
        }
    }

    /// Oracle: length parity.
    #[test]
    fn length_parity_acceptors_split_the_unary_words() {
        let even = even_length_acceptor();
        let odd = odd_length_acceptor();
        for n in 0..=9 {
            let w = unary(n);
            // An accepting run halts with the input intact; a rejecting one
            // wedges without producing anything.
            let accepted = RunStatus::Produced(w.clone());
            let (expect_even, expect_odd) = if n % 2 == 0 {
                (accepted, RunStatus::Exhausted)
            } else {
                (RunStatus::Exhausted, accepted)
            };
            assert_eq!(outcome(&even, &w), expect_even, "even acceptor on 1^{n}");
            assert_eq!(outcome(&odd, &w), expect_odd, "odd acceptor on 1^{n}");
        }
    }

    /// Oracle: literal equality with `11`.
    #[test]
    fn lone_acceptor_accepts_exactly_one_word() {
        let m = lone_acceptor();
        for n in 0..=5 {
            let w = unary(n);
            let expect = if n == 2 { produced("11") } else { RunStatus::Exhausted };
            assert_eq!(outcome(&m, &w), expect, "on 1^{n}");
        }
        let out = run(&m, &unary(2), BUDGET).unwrap();
        assert_eq!(out.steps_used, 3);
    }

    #[test]
    fn spinner_spends_the_whole_budget() {
        let out = run(&spinner(), &unary(3), 500).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert_eq!(out.steps_used, 500);
    }

    #[test]
    fn dawdler_halts_on_schedule() {
        for delay in [0u64, 1, 5, 37] {
            let m = dawdler(delay);
            for n in [0usize, 2] {
                let out = run(&m, &unary(n), BUDGET).unwrap();
                assert_eq!(out.status, RunStatus::Produced(unary(n)), "delay {delay}");
                assert_eq!(out.steps_used, delay, "delay {delay} on 1^{n}");
            }
        }
    }

    /// Oracle: length parity, now as a total 1/0 answer.
    #[test]
    fn unary_even_decider_is_total_and_correct() {
        let m = unary_even_decider();
        for n in 0..=9 {
            let expected = if n % 2 == 0 { "1" } else { "0" };
            assert_eq!(outcome(&m, &unary(n)), produced(expected), "on 1^{n}");
        }
    }

    /// Oracle: count the `0`s.
    #[test]
    fn even_zeros_decider_matches_direct_count() {
        let m = even_zeros_decider();
        for w in BoundedDomain::new(Alphabet::new_input("01").unwrap(), 7).words() {
            let zeros = w.symbols().iter().filter(|s| s.0 == '0').count();
            let expected = if zeros % 2 == 0 { "1" } else { "0" };
            assert_eq!(outcome(&m, &w), produced(expected), "on {w}");
        }
    }

    /// Oracle: the string really is a^n b^n.
    fn is_block(w: &Word) -> bool {
        let s: String = w.symbols().iter().map(|s| s.0).collect();
        let n = s.len() / 2;
        s.len() % 2 == 0 && s == format!("{}{}", "a".repeat(n), "b".repeat(n))
    }

    #[test]
    fn block_match_decider_agrees_with_the_string_check() {
        let m = block_match_decider();
        for w in BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 8).words() {
            let expected = if is_block(&w) { "1" } else { "0" };
            assert_eq!(outcome(&m, &w), produced(expected), "on {w}");
        }
    }

    #[test]
    fn both_pda_conventions_accept_exactly_the_block_language() {
        for acceptance in [PdaAcceptance::EmptyStack, PdaAcceptance::FinalState] {
            let m = balanced_blocks_pda(acceptance);
            for w in BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 8).words() {
                let expected = if is_block(&w) {
                    produced("1")
                } else {
                    RunStatus::Exhausted
                };
                assert_eq!(outcome(&m, &w), expected, "{acceptance:?} on {w}");
            }
        }
    }

    /// Oracle: the complement of the block language, by direct string check.
    #[test]
    fn unbalanced_pda_accepts_exactly_the_non_blocks() {
        let m = unbalanced_blocks_pda();
        for w in BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 8).words() {
            let expected = if is_block(&w) {
                RunStatus::Exhausted
            } else {
                produced("1")
            };
            assert_eq!(outcome(&m, &w), expected, "on {w}");
        }
    }

    /// Oracle: count the `a`s directly.
    #[test]
    fn parity_dfas_split_the_domain_by_a_count() {
        let even = letter_parity_dfa(true);
        let odd = letter_parity_dfa(false);
        for w in BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 7).words() {
            let count = w.symbols().iter().filter(|s| s.0 == 'a').count();
            let (hit, miss) = if count % 2 == 0 {
                (&even, &odd)
            } else {
                (&odd, &even)
            };
            assert_eq!(outcome(hit, &w), produced("1"), "on {w}");
            assert_eq!(outcome(miss, &w), RunStatus::Exhausted, "on {w}");
        }
    }

    /// Oracle: character-by-character flip.
    #[test]
    fn swapper_flips_every_symbol() {
        let m = swapper();
        for w in BoundedDomain::new(Alphabet::new_input("01").unwrap(), 6).words() {
            let flipped: String = w
                .symbols()
                .iter()
                .map(|s| if s.0 == '0' { '1' } else { '0' })
                .collect();
            assert_eq!(outcome(&m, &w), produced(&flipped), "on {w}");
        }
    }

    /// Oracle: parity of zeros again, but through the automaton.
    #[test]
    fn even_zeros_dfa_matches_direct_count() {
        let m = even_zeros_dfa();
        for w in BoundedDomain::new(Alphabet::new_input("01").unwrap(), 8).words() {
            let zeros = w.symbols().iter().filter(|s| s.0 == '0').count();
            let expected = if zeros % 2 == 0 {
                produced("1")
            } else {
                RunStatus::Exhausted
            };
            assert_eq!(outcome(&m, &w), expected, "on {w}");
        }
    }

    /// Oracle: string suffix test.
    #[test]
    fn ends_in_01_nfa_matches_suffix_check() {
        let m = ends_in_01_nfa();
        for w in BoundedDomain::new(Alphabet::new_input("01").unwrap(), 8).words() {
            let s: String = w.symbols().iter().map(|s| s.0).collect();
            let expected = if s.ends_with("01") {
                produced("1")
            } else {
                RunStatus::Exhausted
            };
            assert_eq!(outcome(&m, &w), expected, "on {w}");
        }
    }

    #[test]
    fn settling_writer_stabilizes_right_after_its_one_write() {
        let m = settling_writer();
        for n in 0..=4usize {
            let out = run(&m, &unary(n), BUDGET).unwrap();
            assert_eq!(
                out.status,
                RunStatus::LimitStable {
                    value: unary(n + 1),
                    stabilized_at: n as u64 + 1,
                },
                "on 1^{n}"
            );
            assert_eq!(out.steps_used, BUDGET); // it never halts
        }
    }

    #[test]
    fn restless_writer_never_stabilizes() {
        let m = restless_writer();
        for budget in [200u64, 10_000] {
            let out = run(&m, &unary(2), budget).unwrap();
            assert_eq!(out.status, RunStatus::Exhausted, "budget {budget}");
            assert_eq!(out.steps_used, budget);
        }
    }
}
