//! Per-model operations: determinization of finite automata, acceptance
//! convention conversion for pushdown automata, the limit-mode run report
//! for machines that never need to halt, and the consistency check between
//! acceptance read off states and acceptance read off results.

use crate::error::MachineError;
use crate::exec::{compile, drive_limit};
use crate::machine::{
    DfaSpec, MachineDescription, NfaSpec, PdaAcceptance, PdaSpec, PdaTransition,
};
use crate::word::{Alphabet, BoundedDomain, Symbol, Word, RESERVED};
use std::collections::{BTreeMap, BTreeSet};

fn wrong_model(expected: &str, m: &MachineDescription) -> MachineError {
    MachineError::WrongModel {
        expected: expected.to_string(),
        found: m.model().to_string(),
    }
}

/// Subset construction: an equivalent deterministic automaton whose states
/// are the reachable sets of the original's states, named `{q1,q2,…}`. The
/// empty set appears as the explicit dead state when some symbol leads
/// nowhere.
pub fn nfa_to_dfa(m: &MachineDescription) -> Result<MachineDescription, MachineError> {
    let Some(n) = m.as_nfa() else {
        return Err(wrong_model("nfa", m));
    };
    let closure = |seed: BTreeSet<String>| -> BTreeSet<String> {
        let mut set = seed;
        let mut frontier: Vec<String> = set.iter().cloned().collect();
        while let Some(q) = frontier.pop() {
            if let Some(targets) = n.transitions.get(&(q, None)) {
                for t in targets {
                    if set.insert(t.clone()) {
                        frontier.push(t.clone());
                    }
                }
            }
        }
        set
    };
    let name = |set: &BTreeSet<String>| -> String {
        let inner: Vec<&str> = set.iter().map(String::as_str).collect();
        format!("{{{}}}", inner.join(","))
    };

    let start_set = closure(BTreeSet::from([n.start.clone()]));
    let mut discovered: Vec<BTreeSet<String>> = vec![start_set.clone()];
    let mut seen: BTreeSet<BTreeSet<String>> = BTreeSet::from([start_set.clone()]);
    let mut transitions: BTreeMap<(String, Symbol), String> = BTreeMap::new();
    let mut index = 0;
    while index < discovered.len() {
        let current = discovered[index].clone();
        index += 1;
        for &sym in n.input_alphabet.symbols() {
            let mut moved = BTreeSet::new();
            for q in &current {
                if let Some(targets) = n.transitions.get(&(q.clone(), Some(sym))) {
                    moved.extend(targets.iter().cloned());
                }
            }
            let next = closure(moved);
            if seen.insert(next.clone()) {
                discovered.push(next.clone());
            }
            transitions.insert((name(&current), sym), name(&next));
        }
    }

    let states: Vec<String> = discovered.iter().map(&name).collect();
    let accept: BTreeSet<String> = discovered
        .iter()
        .filter(|set| set.iter().any(|q| n.accept.contains(q)))
        .map(&name)
        .collect();
    MachineDescription::dfa(DfaSpec {
        states,
        input_alphabet: n.input_alphabet.clone(),
        start: name(&start_set),
        accept,
        transitions,
    })
}

fn fresh_stack_symbol(p: &PdaSpec) -> Symbol {
    let candidates = ('A'..='Z')
        .chain('a'..='z')
        .chain('0'..='9')
        .chain("$%&+-./:;<=>?@^~!".chars());
    for c in candidates {
        let s = Symbol(c);
        if !RESERVED.contains(&c)
            && !p.stack_alphabet.contains(s)
            && !p.input_alphabet.contains(s)
        {
            return s;
        }
    }
    unreachable!("alphabets are small; the candidate pool cannot run dry")
}

fn fresh_state(p: &PdaSpec, base: &str) -> String {
    let mut name = base.to_string();
    while p.states.contains(&name) {
        name.push('x');
    }
    name
}

/// Convert a pushdown automaton to the other acceptance convention (or
/// return it unchanged if it already uses the target one). The conversion
/// plants a fresh bottom marker below the original stack, so the original
/// machine can never see it; acceptance is then re-expressed in terms of
/// reaching past — or stopping above — that marker.
pub fn pda_convert_acceptance(
    m: &MachineDescription,
    target: PdaAcceptance,
) -> Result<MachineDescription, MachineError> {
    let Some(p) = m.as_pda() else {
        return Err(wrong_model("pda", m));
    };
    if p.acceptance == target {
        return Ok(m.clone());
    }
    let marker = fresh_stack_symbol(p);
    let boot = fresh_state(p, "boot");
    let old_bottom = p.initial_stack_symbol();
    // The marker goes first: it becomes the new initial stack symbol.
    let mut stack_symbols = vec![marker];
    stack_symbols.extend(p.stack_alphabet.symbols().iter().copied());
    let stack_alphabet = Alphabet::from_symbols(stack_symbols)?;

    let mut transitions = p.transitions.clone();
    // Boot: put the original bottom symbol on top of the marker and hand
    // over to the original start state.
    transitions.insert(PdaTransition {
        from: boot.clone(),
        input: None,
        pop: marker,
        to: p.start.clone(),
        push: vec![old_bottom, marker],
    });

    let mut states = vec![boot.clone()];
    states.extend(p.states.iter().cloned());

    let (accept, acceptance) = match target {
        PdaAcceptance::EmptyStack => {
            // Original accepts by final state; we drain the whole stack,
            // marker included, whenever an accepting state is reached.
            let drain = fresh_state(p, "drain");
            for q in p.accept.iter().chain([&drain]) {
                for &g in stack_alphabet.symbols() {
                    transitions.insert(PdaTransition {
                        from: q.clone(),
                        input: None,
                        pop: g,
                        to: drain.clone(),
                        push: vec![],
                    });
                }
            }
            states.push(drain);
            (BTreeSet::new(), PdaAcceptance::EmptyStack)
        }
        PdaAcceptance::FinalState => {
            // Original accepts by empty stack; an emptied original stack is
            // exactly an exposed marker.
            let sink = fresh_state(p, "sink");
            for q in &p.states {
                transitions.insert(PdaTransition {
                    from: q.clone(),
                    input: None,
                    pop: marker,
                    to: sink.clone(),
                    push: vec![marker],
                });
            }
            states.push(sink.clone());
            (BTreeSet::from([sink]), PdaAcceptance::FinalState)
        }
    };

    MachineDescription::pda(PdaSpec {
        states,
        input_alphabet: p.input_alphabet.clone(),
        stack_alphabet,
        start: boot,
        accept,
        acceptance,
        transitions,
    })
}

/// The verdict of a limit-mode run: did the output settle?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitVerdict {
    Stable,
    Unstable,
}

/// Report of a limit-mode run: the output as it stood when the budget ran
/// out, the last step at which it changed, and whether it sat still through
/// the final `window` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitOutcome {
    pub value: Word,
    pub stabilized_at: u64,
    pub window: u64,
    pub verdict: LimitVerdict,
}

/// Run a limit-reading machine for `budget` steps and judge stability over
/// the final `window` steps: stable means the readable output did not
/// change during them. The machine is never required to halt; one that does
/// halt simply freezes its output, which then counts as unchanged.
pub fn itm_run_limit(
    m: &MachineDescription,
    input: &Word,
    budget: u64,
    window: u64,
) -> Result<LimitOutcome, MachineError> {
    if !m.is_itm() {
        return Err(wrong_model("itm", m));
    }
    if window > budget {
        return Err(MachineError::WindowExceedsBudget { window, budget });
    }
    let drive = drive_limit(&compile(m), input, budget)?;
    let verdict = if drive.last_change <= budget - window {
        LimitVerdict::Stable
    } else {
        LimitVerdict::Unstable
    };
    Ok(LimitOutcome {
        value: drive.value,
        stabilized_at: drive.last_change,
        window,
        verdict,
    })
}

/// Check that acceptance read off the control states coincides with
/// acceptance read off the produced results, over a bounded domain.
///
/// The state side is computed here by a direct table walk on the
/// description — deliberately not via the execution engine, so the two
/// sides are independent observations of the same machine.
pub fn acceptance_by_state_vs_result(
    m: &MachineDescription,
    d: &BoundedDomain,
    budget: u64,
) -> Result<bool, MachineError> {
    enum Walker<'a> {
        Dfa(&'a DfaSpec),
        Nfa(&'a NfaSpec),
    }
    let walker = if let Some(spec) = m.as_dfa() {
        Walker::Dfa(spec)
    } else if let Some(spec) = m.as_nfa() {
        Walker::Nfa(spec)
    } else {
        return Err(wrong_model("finite automaton", m));
    };

    let by_state = |w: &Word| -> bool {
        match &walker {
            Walker::Dfa(spec) => {
                let mut state = spec.start.clone();
                for &s in w.symbols() {
                    match spec.transitions.get(&(state.clone(), s)) {
                        Some(next) => state = next.clone(),
                        None => return false,
                    }
                }
                spec.accept.contains(&state)
            }
            Walker::Nfa(spec) => {
                let close = |mut set: BTreeSet<String>| -> BTreeSet<String> {
                    let mut frontier: Vec<String> = set.iter().cloned().collect();
                    while let Some(q) = frontier.pop() {
                        if let Some(ts) = spec.transitions.get(&(q, None)) {
                            for t in ts {
                                if set.insert(t.clone()) {
                                    frontier.push(t.clone());
                                }
                            }
                        }
                    }
                    set
                };
                let mut current = close(BTreeSet::from([spec.start.clone()]));
                for &s in w.symbols() {
                    let mut next = BTreeSet::new();
                    for q in &current {
                        if let Some(ts) = spec.transitions.get(&(q.clone(), Some(s))) {
                            next.extend(ts.iter().cloned());
                        }
                    }
                    current = close(next);
                }
                current.iter().any(|q| spec.accept.contains(q))
            }
        }
    };

    let ex = crate::exec::Executor::new(m);
    let alphabet = m.input_alphabet();
    for w in d.words() {
        if !w.is_over(&alphabet) {
            continue;
        }
        let by_result = matches!(
            ex.run(&w, budget)?.status,
            crate::exec::RunStatus::Produced(ref v) if v == &Word::parse("1")
        );
        if by_state(&w) != by_result {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::{run, RunStatus};
    use crate::zoo;

    fn accepts(m: &MachineDescription, w: &Word) -> bool {
        matches!(run(m, w, 100_000).unwrap().status, RunStatus::Produced(_))
    }

    fn domain(alphabet: &str, max_len: usize) -> BoundedDomain {
        BoundedDomain::new(Alphabet::new_input(alphabet).unwrap(), max_len)
    }

    #[test]
    fn determinized_suffix_automaton_agrees_everywhere() {
        let nfa = zoo::ends_in_01_nfa();
        let dfa = nfa_to_dfa(&nfa).unwrap();
        assert_eq!(dfa.model(), "dfa");
        assert!(dfa.is_deterministic());
        for w in domain("01", 8).words() {
            assert_eq!(accepts(&nfa, &w), accepts(&dfa, &w), "on {w}");
        }
    }

    #[test]
    fn determinizing_a_hopeless_automaton_rejects_everything() {
        let mut spec = zoo::ends_in_01_nfa().as_nfa().unwrap().clone();
        spec.accept.clear();
        let nfa = MachineDescription::nfa(spec).unwrap();
        let dfa = nfa_to_dfa(&nfa).unwrap();
        for w in domain("01", 4).words() {
            assert!(!accepts(&dfa, &w), "on {w}");
        }
    }

    #[test]
    fn determinizing_a_deterministic_table_preserves_the_language() {
        // The even-zeros automaton rewritten as an NFA without ε-moves.
        let d = zoo::even_zeros_dfa();
        let spec = d.as_dfa().unwrap();
        let transitions = spec
            .transitions
            .iter()
            .map(|((q, s), t)| ((q.clone(), Some(*s)), BTreeSet::from([t.clone()])))
            .collect();
        let nfa = MachineDescription::nfa(NfaSpec {
            states: spec.states.clone(),
            input_alphabet: spec.input_alphabet.clone(),
            start: spec.start.clone(),
            accept: spec.accept.clone(),
            transitions,
        })
        .unwrap();
        let redet = nfa_to_dfa(&nfa).unwrap();
        for w in domain("01", 6).words() {
            assert_eq!(accepts(&d, &w), accepts(&redet, &w), "on {w}");
        }
    }

    #[test]
    fn nfa_to_dfa_refuses_other_models() {
        assert!(matches!(
            nfa_to_dfa(&zoo::even_zeros_dfa()),
            Err(MachineError::WrongModel { .. })
        ));
    }

    #[test]
    fn pda_conversion_preserves_the_block_language_both_ways() {
        let empty = zoo::balanced_blocks_pda(PdaAcceptance::EmptyStack);
        let by_final = pda_convert_acceptance(&empty, PdaAcceptance::FinalState).unwrap();
        assert_eq!(by_final.as_pda().unwrap().acceptance, PdaAcceptance::FinalState);

        let final_native = zoo::balanced_blocks_pda(PdaAcceptance::FinalState);
        let by_empty = pda_convert_acceptance(&final_native, PdaAcceptance::EmptyStack).unwrap();
        assert_eq!(by_empty.as_pda().unwrap().acceptance, PdaAcceptance::EmptyStack);

        for w in domain("ab", 10).words() {
            let reference = accepts(&empty, &w);
            assert_eq!(accepts(&by_final, &w), reference, "to final-state, on {w}");
            assert_eq!(accepts(&by_empty, &w), reference, "to empty-stack, on {w}");
        }
    }

    #[test]
    fn pda_conversion_to_the_current_convention_is_identity() {
        let p = zoo::balanced_blocks_pda(PdaAcceptance::EmptyStack);
        let same = pda_convert_acceptance(&p, PdaAcceptance::EmptyStack).unwrap();
        assert_eq!(same, p);
    }

    #[test]
    fn pda_accepting_nothing_still_accepts_nothing_after_conversion() {
        let p = MachineDescription::pda(PdaSpec {
            states: vec!["q".to_string()],
            input_alphabet: Alphabet::new_input("ab").unwrap(),
            stack_alphabet: Alphabet::new("Z").unwrap(),
            start: "q".to_string(),
            accept: BTreeSet::new(),
            acceptance: PdaAcceptance::FinalState,
            transitions: BTreeSet::new(),
        })
        .unwrap();
        let converted = pda_convert_acceptance(&p, PdaAcceptance::EmptyStack).unwrap();
        for w in domain("ab", 5).words() {
            assert!(!accepts(&converted, &w), "on {w}");
        }
    }

    #[test]
    fn limit_report_for_a_machine_that_settles() {
        let m = zoo::settling_writer();
        let out = itm_run_limit(&m, &Word::parse("111"), 1000, 100).unwrap();
        assert_eq!(out.verdict, LimitVerdict::Stable);
        assert_eq!(out.value, Word::parse("1111"));
        assert_eq!(out.stabilized_at, 4);
        assert_eq!(out.window, 100);
    }

    #[test]
    fn limit_report_single_write_at_step_one() {
        let m = zoo::settling_writer();
        let out = itm_run_limit(&m, &Word::epsilon(), 1000, 100).unwrap();
        assert_eq!(out.verdict, LimitVerdict::Stable);
        assert_eq!(out.value, Word::parse("1"));
        assert_eq!(out.stabilized_at, 1);
    }

    #[test]
    fn limit_report_for_a_machine_that_never_settles() {
        let m = zoo::restless_writer();
        let out = itm_run_limit(&m, &Word::parse("1"), 1000, 100).unwrap();
        assert_eq!(out.verdict, LimitVerdict::Unstable);
    }

    #[test]
    fn stabilization_is_monotone_in_the_budget() {
        let m = zoo::settling_writer();
        let w = Word::parse("11");
        let base = itm_run_limit(&m, &w, 200, 100).unwrap();
        assert_eq!(base.verdict, LimitVerdict::Stable);
        for budget in [500u64, 1000, 5000] {
            let again = itm_run_limit(&m, &w, budget, 100).unwrap();
            assert_eq!(again.verdict, LimitVerdict::Stable);
            assert_eq!(again.value, base.value);
            assert_eq!(again.stabilized_at, base.stabilized_at);
        }
    }

    #[test]
    fn oversized_windows_are_rejected() {
        let m = zoo::settling_writer();
        assert!(matches!(
            itm_run_limit(&m, &Word::epsilon(), 50, 51),
            Err(MachineError::WindowExceedsBudget { window: 51, budget: 50 })
        ));
    }

    #[test]
    fn a_halting_program_read_in_limit_mode_matches_its_halting_output() {
        // The same transition table, run to halt as a tm and judged by
        // stability as a limit machine, must name the same value.
        let tm = zoo::swapper();
        let itm = MachineDescription::itm(tm.as_tape().unwrap().clone()).unwrap();
        for w in domain("01", 4).words() {
            let halted = match run(&tm, &w, 1000).unwrap().status {
                RunStatus::Produced(v) => v,
                other => panic!("swapper must halt, got {other:?}"),
            };
            let limit = itm_run_limit(&itm, &w, 1000, 100).unwrap();
            assert_eq!(limit.verdict, LimitVerdict::Stable, "on {w}");
            assert_eq!(limit.value, halted, "on {w}");
        }
    }

    #[test]
    fn state_and_result_acceptance_agree_on_the_corpus() {
        let d8 = domain("01", 8);
        assert!(acceptance_by_state_vs_result(&zoo::even_zeros_dfa(), &d8, 100).unwrap());
        assert!(acceptance_by_state_vs_result(&zoo::ends_in_01_nfa(), &d8, 100).unwrap());

        let mut hopeless = zoo::even_zeros_dfa().as_dfa().unwrap().clone();
        hopeless.accept.clear();
        let m = MachineDescription::dfa(hopeless).unwrap();
        assert!(acceptance_by_state_vs_result(&m, &d8, 100).unwrap());
    }

    #[test]
    fn state_vs_result_check_requires_an_automaton() {
        let d = domain("01", 2);
        assert!(matches!(
            acceptance_by_state_vs_result(&zoo::swapper(), &d, 100),
            Err(MachineError::WrongModel { .. })
        ));
    }
}
