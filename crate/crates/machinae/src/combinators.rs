//! Building blocks for assembling machines: three small tape-machine
//! builders that appear in nearly every construction, and the seven pairwise
//! composition disciplines.
//!
//! The pairing constructors are cheap: they wrap their components in a
//! composite description without copying transition tables. Semantics live
//! in the execution layer; the only static check made here is the alphabet
//! fit of sequential composition, where one machine's output is about to
//! become another machine's input.

use crate::error::MachineError;
use crate::machine::{
    CompositeSpec, MachineDescription, Move, PairKind, TmAction, TmSpec,
};
use crate::word::{Alphabet, Symbol, Word, BLANK, RESERVED};
use std::collections::{BTreeMap, BTreeSet};

fn blank() -> Symbol {
    Symbol(BLANK)
}

fn blank_alphabet() -> Alphabet {
    Alphabet::from_symbols([blank()]).expect("a one-symbol alphabet is valid")
}

/// The identity computer over `alphabet`: walks right over its input and
/// halts on the first blank, reproducing the input as its result. On a word
/// of length n it halts after n + 1 steps having visited n + 1 cells.
///
/// Trivial as it is, this machine is the workhorse of the constructive
/// results: it turns "return the input" into an actual machine that can be
/// raced, gated, and composed like any other.
pub fn rewriting(alphabet: &Alphabet) -> Result<MachineDescription, MachineError> {
    let mut transitions = BTreeMap::new();
    for &s in alphabet.symbols() {
        transitions.insert(
            ("scan".to_string(), s),
            TmAction {
                to: "scan".to_string(),
                write: s,
                movement: Move::Right,
            },
        );
    }
    transitions.insert(
        ("scan".to_string(), blank()),
        TmAction {
            to: "done".to_string(),
            write: blank(),
            movement: Move::Stay,
        },
    );
    MachineDescription::tm(TmSpec {
        states: vec!["scan".to_string(), "done".to_string()],
        input_alphabet: alphabet.clone(),
        tape_alphabet: alphabet.union(&blank_alphabet()),
        blank: blank(),
        start: "scan".to_string(),
        accept: BTreeSet::from(["done".to_string()]),
        transitions,
    })
}

/// A constant machine over `alphabet`.
///
/// With `Some(value)` it erases its input and writes `value`, halting after
/// |input| + max(1, |value|) steps with `value` as its result, whatever the
/// input was. With `None` it is the machine that never produces anything:
/// a single non-accepting state with no moves at all, wedged from the very
/// first instant on every input.
pub fn constant(
    alphabet: &Alphabet,
    value: Option<&Word>,
) -> Result<MachineDescription, MachineError> {
    let Some(value) = value else {
        return MachineDescription::tm(TmSpec {
            states: vec!["idle".to_string()],
            input_alphabet: alphabet.clone(),
            tape_alphabet: alphabet.union(&blank_alphabet()),
            blank: blank(),
            start: "idle".to_string(),
            accept: BTreeSet::new(),
            transitions: BTreeMap::new(),
        });
    };
    if value.symbols().contains(&blank()) {
        return Err(MachineError::invalid(
            "a constant machine cannot produce a value containing the blank",
        ));
    }
    let mut tape = alphabet.union(&blank_alphabet());
    if !value.is_empty() {
        let extra: BTreeSet<Symbol> = value.symbols().iter().copied().collect();
        tape = tape.union(&Alphabet::from_symbols(extra)?);
    }

    let mut states = vec!["erase".to_string()];
    let mut transitions = BTreeMap::new();
    // Erase the whole input on the way right.
    for &s in tape.symbols() {
        if s != blank() {
            transitions.insert(
                ("erase".to_string(), s),
                TmAction {
                    to: "erase".to_string(),
                    write: blank(),
                    movement: Move::Right,
                },
            );
        }
    }
    // Then write the value symbol by symbol where the input used to end.
    let put = |i: usize| {
        if i == value.len() {
            "done".to_string()
        } else {
            format!("put{i}")
        }
    };
    if value.is_empty() {
        transitions.insert(
            ("erase".to_string(), blank()),
            TmAction {
                to: "done".to_string(),
                write: blank(),
                movement: Move::Stay,
            },
        );
    } else {
        let syms = value.symbols();
        transitions.insert(
            ("erase".to_string(), blank()),
            TmAction {
                to: put(1),
                write: syms[0],
                movement: Move::Right,
            },
        );
        for i in 1..value.len() {
            states.push(put(i));
            transitions.insert(
                (put(i), blank()),
                TmAction {
                    to: put(i + 1),
                    write: syms[i],
                    movement: Move::Right,
                },
            );
        }
    }
    states.push("done".to_string());
    MachineDescription::tm(TmSpec {
        states,
        input_alphabet: alphabet.clone(),
        tape_alphabet: tape,
        blank: blank(),
        start: "erase".to_string(),
        accept: BTreeSet::from(["done".to_string()]),
        transitions,
    })
}

/// The comparison predicate: a total machine over `alphabet` that produces
/// `1` on exactly the word `target` and `0` on every other input, always
/// halting after |input| + 1 steps.
///
/// Plumbing symbols are stripped from the input side (no machine reads them
/// as input), and the target must survive the stripping; a target containing
/// plumbing symbols is rejected.
pub fn comp_predicate(
    target: &Word,
    alphabet: &Alphabet,
) -> Result<MachineDescription, MachineError> {
    let readable: Vec<Symbol> = alphabet
        .symbols()
        .iter()
        .copied()
        .filter(|s| !RESERVED.contains(&s.0))
        .collect();
    let input_alphabet = Alphabet::from_symbols(readable)?;
    if let Some(bad) = target
        .symbols()
        .iter()
        .find(|s| !input_alphabet.contains(**s))
    {
        return Err(MachineError::SymbolNotInAlphabet {
            symbol: bad.0,
            context: "comparison target".to_string(),
        });
    }
    let answers = Alphabet::from_symbols([blank(), Symbol('1'), Symbol('0')])
        .expect("the answer symbols are distinct");
    let tape = input_alphabet.union(&answers);
    let at = |i: usize| format!("at{i}");
    let n = target.len();

    let mut states: Vec<String> = (0..=n).map(at).collect();
    states.push("mismatch".to_string());
    states.push("done".to_string());

    let mut transitions = BTreeMap::new();
    for i in 0..n {
        let expected = target.symbols()[i];
        for &x in input_alphabet.symbols() {
            let to = if x == expected { at(i + 1) } else { "mismatch".to_string() };
            transitions.insert(
                (at(i), x),
                TmAction {
                    to,
                    write: blank(),
                    movement: Move::Right,
                },
            );
        }
        // Input ran out before the target did.
        transitions.insert(
            (at(i), blank()),
            TmAction {
                to: "done".to_string(),
                write: Symbol('0'),
                movement: Move::Stay,
            },
        );
    }
    // Every symbol of the target matched; the input must end here.
    for &x in input_alphabet.symbols() {
        transitions.insert(
            (at(n), x),
            TmAction {
                to: "mismatch".to_string(),
                write: blank(),
                movement: Move::Right,
            },
        );
    }
    transitions.insert(
        (at(n), blank()),
        TmAction {
            to: "done".to_string(),
            write: Symbol('1'),
            movement: Move::Stay,
        },
    );
    // A mismatch erases the rest of the input before answering.
    for &x in input_alphabet.symbols() {
        transitions.insert(
            ("mismatch".to_string(), x),
            TmAction {
                to: "mismatch".to_string(),
                write: blank(),
                movement: Move::Right,
            },
        );
    }
    transitions.insert(
        ("mismatch".to_string(), blank()),
        TmAction {
            to: "done".to_string(),
            write: Symbol('0'),
            movement: Move::Stay,
        },
    );
    MachineDescription::tm(TmSpec {
        states,
        input_alphabet,
        tape_alphabet: tape,
        blank: blank(),
        start: at(0),
        accept: BTreeSet::from(["done".to_string()]),
        transitions,
    })
}

fn pair(
    kind: PairKind,
    a: &MachineDescription,
    b: &MachineDescription,
    predicate: Option<&MachineDescription>,
) -> MachineDescription {
    MachineDescription::composite(CompositeSpec::Pair {
        kind,
        a: Box::new(a.clone()),
        b: Box::new(b.clone()),
        predicate: predicate.map(|p| Box::new(p.clone())),
    })
}

/// Sequential composition `A ∘ B`: run B on the input, feed its result to A,
/// and return A's result. The composite's input alphabet is B's; its budget
/// is spent first by B and then by A, with a free hand-off in between.
///
/// Fails if some word B can produce is not readable by A.
pub fn seq_compose(
    a: &MachineDescription,
    b: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    let b_out = b.output_alphabet();
    let a_in = a.input_alphabet();
    if let Some(bad) = b_out.symbols().iter().find(|s| !a_in.contains(**s)) {
        return Err(MachineError::AlphabetMismatch {
            reason: format!(
                "sequential composition feeds outputs over {{{b_out}}} to a machine reading {{{a_in}}}; '{bad}' does not fit"
            ),
        });
    }
    Ok(pair(PairKind::Seq, a, b, None))
}

/// Parallel disjunction: run A and B in lockstep on the same input (A takes
/// a step, then B, and so on) and return the first result produced. If both
/// finish on the same lockstep round, A's result wins.
pub fn disj_parallel(a: &MachineDescription, b: &MachineDescription) -> MachineDescription {
    pair(PairKind::DisjPar, a, b, None)
}

/// Parallel conjunction: run A and B in lockstep on the same input; once
/// both have produced, return `A(u) # B(u)` as a single word. If either
/// component wedges, the composite can never produce.
pub fn conj_parallel(a: &MachineDescription, b: &MachineDescription) -> MachineDescription {
    pair(PairKind::ConjPar, a, b, None)
}

/// Gated sequential composition: compute B(u), test it with the predicate
/// machine, and run A on B(u) only if the predicate answers `1`. A failed
/// gate leaves the composite wedged — no result at any budget.
pub fn p_seq(
    a: &MachineDescription,
    predicate: &MachineDescription,
    b: &MachineDescription,
) -> MachineDescription {
    pair(PairKind::PSeq, a, b, Some(predicate))
}

/// Gated conjunction: compute B(u) and test it with the predicate. If the
/// predicate answers `1`, the composite's result is A run on the *original*
/// input; otherwise the composite returns B(u) itself.
pub fn p_conj_parallel(
    a: &MachineDescription,
    predicate: &MachineDescription,
    b: &MachineDescription,
) -> MachineDescription {
    pair(PairKind::PConjPar, a, b, Some(predicate))
}

/// Filtered race: run A and B in lockstep; whenever one produces, test its
/// result with the predicate. A passing result is returned; a failing one
/// eliminates its producer and the race continues with whoever is left. If
/// both results fail the filter, the composite is wedged.
pub fn p_disj_parallel(
    a: &MachineDescription,
    predicate: &MachineDescription,
    b: &MachineDescription,
) -> MachineDescription {
    pair(PairKind::PDisjPar, a, b, Some(predicate))
}

/// Fallback composition: run A on the input; if A produces and the
/// predicate passes its result, that is the answer, otherwise run B on the
/// original input and return whatever B produces. If A never produces,
/// neither does the composite — B is only consulted after an explicit
/// rejection.
pub fn p_disj_seq(
    a: &MachineDescription,
    predicate: &MachineDescription,
    b: &MachineDescription,
) -> MachineDescription {
    pair(PairKind::PDisjSeq, a, b, Some(predicate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::{run, RunStatus};
    use crate::word::BoundedDomain;

    fn ab() -> Alphabet {
        Alphabet::new_input("ab").unwrap()
    }

    fn outcome(m: &MachineDescription, input: &str) -> (RunStatus, u64) {
        let out = run(m, &Word::parse(input), 10_000).unwrap();
        (out.status, out.steps_used)
    }

    fn produced(s: &str) -> RunStatus {
        RunStatus::Produced(Word::parse(s))
    }

    #[test]
    fn rewriting_reproduces_every_input() {
        let m = rewriting(&ab()).unwrap();
        for w in BoundedDomain::new(ab(), 3).words() {
            let out = run(&m, &w, 100).unwrap();
            assert_eq!(out.status, RunStatus::Produced(w.clone()));
            assert_eq!(out.steps_used, w.len() as u64 + 1);
        }
    }

    #[test]
    fn constant_ignores_its_input() {
        let m = constant(&ab(), Some(&Word::parse("ba"))).unwrap();
        for (input, steps) in [("", 2), ("a", 3), ("abab", 6)] {
            assert_eq!(outcome(&m, input), (produced("ba"), steps));
        }
    }

    #[test]
    fn constant_empty_value_erases_everything() {
        let m = constant(&ab(), Some(&Word::epsilon())).unwrap();
        assert_eq!(outcome(&m, "aab"), (produced(""), 4));
    }

    #[test]
    fn constant_none_is_wedged_from_the_start() {
        let m = constant(&ab(), None).unwrap();
        for budget in [0u64, 1, 100] {
            let out = run(&m, &Word::parse("ab"), budget).unwrap();
            assert_eq!(out.status, RunStatus::Exhausted);
            assert_eq!(out.steps_used, 0);
        }
    }

    #[test]
    fn comp_predicate_recognizes_exactly_its_target() {
        let m = comp_predicate(&Word::parse("ab"), &ab()).unwrap();
        for input in ["", "a", "b", "ab", "ba", "aba", "abb", "bab"] {
            let (status, steps) = outcome(&m, input);
            let expected = if input == "ab" { "1" } else { "0" };
            assert_eq!(status, produced(expected), "on {input:?}");
            assert_eq!(steps, input.len() as u64 + 1, "on {input:?}");
        }
    }

    #[test]
    fn comp_predicate_with_empty_target_accepts_only_the_empty_word() {
        let m = comp_predicate(&Word::epsilon(), &ab()).unwrap();
        assert_eq!(outcome(&m, ""), (produced("1"), 1));
        assert_eq!(outcome(&m, "a"), (produced("0"), 2));
    }

    #[test]
    fn comp_predicate_rejects_unreadable_targets() {
        let err = comp_predicate(&Word::parse("a#b"), &ab()).unwrap_err();
        assert!(matches!(err, MachineError::SymbolNotInAlphabet { symbol: '#', .. }));
    }

    #[test]
    fn seq_feeds_the_second_machine_into_the_first() {
        let m = seq_compose(&rewriting(&ab()).unwrap(), &rewriting(&ab()).unwrap()).unwrap();
        let (status, steps) = outcome(&m, "aba");
        assert_eq!(status, produced("aba"));
        // Each pass costs |u| + 1 = 4 steps; the hand-off is free.
        assert_eq!(steps, 8);
    }

    #[test]
    fn seq_rejects_unreadable_outputs() {
        let narrow = rewriting(&Alphabet::new_input("a").unwrap()).unwrap();
        let wide = rewriting(&ab()).unwrap();
        assert!(matches!(
            seq_compose(&narrow, &wide),
            Err(MachineError::AlphabetMismatch { .. })
        ));
        assert!(seq_compose(&wide, &narrow).is_ok());
    }

    #[test]
    fn disj_race_first_result_wins() {
        let fast = constant(&ab(), Some(&Word::parse("a"))).unwrap();
        let slow = seq_compose(&rewriting(&ab()).unwrap(), &rewriting(&ab()).unwrap()).unwrap();
        // On "bb": fast needs 3 steps, slow needs 6. Lockstep interleaving
        // lets the fast side finish during its third turn, at micro-step 5.
        let m = disj_parallel(&slow, &fast);
        let (status, steps) = outcome(&m, "bb");
        assert_eq!(status, produced("a"));
        assert_eq!(steps, 6); // fast is the B side: its k-th step lands on micro-step 2k
    }

    #[test]
    fn disj_race_tie_goes_to_the_first_component() {
        let a = constant(&ab(), Some(&Word::parse("a"))).unwrap();
        let b = rewriting(&ab()).unwrap();
        // Both need |u| + 1 steps; A finishes its last step one micro-step
        // earlier because it moves first.
        let m = disj_parallel(&a, &b);
        let (status, steps) = outcome(&m, "bb");
        assert_eq!(status, produced("a"));
        assert_eq!(steps, 5);
    }

    #[test]
    fn disj_race_survives_a_wedged_component() {
        let dead = constant(&ab(), None).unwrap();
        let live = rewriting(&ab()).unwrap();
        let m = disj_parallel(&dead, &live);
        let (status, _) = outcome(&m, "ab");
        assert_eq!(status, produced("ab"));
    }

    #[test]
    fn conj_joins_both_results_with_the_separator() {
        let a = constant(&ab(), Some(&Word::parse("b"))).unwrap();
        let b = rewriting(&ab()).unwrap();
        let m = conj_parallel(&a, &b);
        let (status, steps) = outcome(&m, "ab");
        assert_eq!(status, produced("b#ab"));
        assert_eq!(steps, 6); // 3 steps for each side; the join itself is free
    }

    #[test]
    fn conj_with_a_wedged_component_never_produces() {
        let m = conj_parallel(&constant(&ab(), None).unwrap(), &rewriting(&ab()).unwrap());
        let out = run(&m, &Word::parse("ab"), 10_000).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert_eq!(out.steps_used, 0); // the wedge is visible immediately
    }

    #[test]
    fn p_seq_runs_the_front_machine_on_the_gated_value() {
        let gate = comp_predicate(&Word::parse("b"), &ab()).unwrap();
        let to_b = constant(&ab(), Some(&Word::parse("b"))).unwrap();
        let m = p_seq(&rewriting(&ab()).unwrap(), &gate, &to_b);
        assert_eq!(outcome(&m, "aa").0, produced("b"));
    }

    #[test]
    fn p_seq_failed_gate_wedges_forever() {
        let gate = comp_predicate(&Word::parse("a"), &ab()).unwrap();
        let to_b = constant(&ab(), Some(&Word::parse("b"))).unwrap();
        let m = p_seq(&rewriting(&ab()).unwrap(), &gate, &to_b);
        // B takes |u| + 1 = 3 steps, the gate takes |"b"| + 1 = 2 more,
        // and then the composite is dead: steps freeze at 5.
        for budget in [10u64, 100, 10_000] {
            let out = run(&m, &Word::parse("aa"), budget).unwrap();
            assert_eq!(out.status, RunStatus::Exhausted);
            assert_eq!(out.steps_used, 5);
        }
    }

    #[test]
    fn p_conj_passing_gate_runs_front_machine_on_the_original_input() {
        let gate = comp_predicate(&Word::parse("b"), &ab()).unwrap();
        let to_b = constant(&ab(), Some(&Word::parse("b"))).unwrap();
        let m = p_conj_parallel(&rewriting(&ab()).unwrap(), &gate, &to_b);
        // Gate passes on B's output "b", so A reproduces the original "aa" —
        // unlike p_seq, which would reproduce "b".
        assert_eq!(outcome(&m, "aa").0, produced("aa"));
    }

    #[test]
    fn p_conj_failing_gate_returns_the_back_machines_result() {
        let gate = comp_predicate(&Word::parse("a"), &ab()).unwrap();
        let to_b = constant(&ab(), Some(&Word::parse("b"))).unwrap();
        let m = p_conj_parallel(&rewriting(&ab()).unwrap(), &gate, &to_b);
        assert_eq!(outcome(&m, "aa").0, produced("b"));
    }

    #[test]
    fn p_disj_race_filters_out_losing_results() {
        let to_a = constant(&ab(), Some(&Word::parse("a"))).unwrap();
        let echo = rewriting(&ab()).unwrap();
        let gate = comp_predicate(&Word::parse("bb"), &ab()).unwrap();
        // On "bb": the constant produces "a" quickly but the gate rejects
        // it; the echo's "bb" passes. The race must survive the rejection.
        let m = p_disj_parallel(&to_a, &gate, &echo);
        assert_eq!(outcome(&m, "bb").0, produced("bb"));
    }

    #[test]
    fn p_disj_race_with_no_passing_result_wedges() {
        let to_a = constant(&ab(), Some(&Word::parse("a"))).unwrap();
        let eps = constant(&ab(), Some(&Word::epsilon())).unwrap();
        let gate = comp_predicate(&Word::parse("bb"), &ab()).unwrap();
        let m = p_disj_parallel(&to_a, &gate, &eps);
        let out = run(&m, &Word::parse("ab"), 10_000).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert!(out.steps_used < 20);
    }

    #[test]
    fn p_disj_seq_keeps_a_passing_first_result() {
        let gate = comp_predicate(&Word::parse("ab"), &ab()).unwrap();
        let m = p_disj_seq(
            &rewriting(&ab()).unwrap(),
            &gate,
            &constant(&ab(), Some(&Word::parse("b"))).unwrap(),
        );
        assert_eq!(outcome(&m, "ab").0, produced("ab"));
        assert_eq!(outcome(&m, "aa").0, produced("b")); // gate rejects "aa"
    }

    #[test]
    fn p_disj_seq_never_consults_the_fallback_if_the_first_machine_wedges() {
        let gate = comp_predicate(&Word::parse("ab"), &ab()).unwrap();
        let m = p_disj_seq(
            &constant(&ab(), None).unwrap(),
            &gate,
            &rewriting(&ab()).unwrap(),
        );
        let out = run(&m, &Word::parse("ab"), 10_000).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert_eq!(out.steps_used, 0);
    }

    #[test]
    fn seq_composition_is_associative_on_results() {
        let double = seq_compose(&rewriting(&ab()).unwrap(), &rewriting(&ab()).unwrap()).unwrap();
        let left = seq_compose(&double, &rewriting(&ab()).unwrap()).unwrap();
        let right = seq_compose(&rewriting(&ab()).unwrap(), &double).unwrap();
        for w in BoundedDomain::new(ab(), 3).words() {
            let l = run(&left, &w, 1000).unwrap();
            let r = run(&right, &w, 1000).unwrap();
            assert_eq!(l.status, r.status);
            assert_eq!(l.steps_used, r.steps_used);
        }
    }
}
