//! Equivalence checks: do two machines behave alike?
//!
//! [`functional_equiv`] compares two machines *as users of a mode would see
//! them*, word by word over a bounded domain. Two machines can differ
//! wildly in their step counts, tape traffic, or even in which words they
//! answer, and still be equivalent in a coarse mode — a total decider and
//! its gated weak variant are the same weak decider, for instance. The
//! verdict carries the first distinguishing word when there is one.
//!
//! [`dfa_equiv_exact`] is the one equivalence in the workbench that needs
//! no domain bound: for deterministic finite automata the product
//! construction decides language equality outright and returns a shortest
//! distinguishing word (first in alphabet order among the shortest) when
//! the languages differ.

use std::collections::{BTreeSet, VecDeque};

use crate::error::MachineError;
use crate::machine::{DfaSpec, MachineDescription};
use crate::modes::{produced_desc, Mode, ModeObserver, ModeVerdict, Observation, NO_RESULT, NO_RUN};
use crate::word::{BoundedDomain, Symbol, Word};

/// How a single observation reads under a given mode: a comparison key —
/// equal keys mean indistinguishable behaviour in that mode — and a short
/// description for witness reporting.
fn project(mode: Mode, obs: &Observation) -> (Option<String>, String) {
    let desc = match obs {
        Observation::Produced(z) => produced_desc(z),
        Observation::Rejected => "rejected".to_string(),
        Observation::Silent => NO_RESULT.to_string(),
        Observation::NoRun => NO_RUN.to_string(),
    };
    let key = match mode {
        Mode::Compute | Mode::Enumerate => match obs {
            Observation::Produced(z) => Some(z.to_string()),
            _ => None,
        },
        Mode::Accept => match obs {
            Observation::Produced(_) => Some("accepted".to_string()),
            _ => None,
        },
        Mode::WeakDecide | Mode::Codecide => match obs {
            Observation::Produced(z) if z.to_string() == "1" => Some("indicated".to_string()),
            _ => None,
        },
        Mode::Decide => match obs {
            Observation::Produced(z) => Some(z.to_string()),
            Observation::Rejected => Some("0".to_string()),
            _ => None,
        },
    };
    (key, desc)
}

/// Are `m1` and `m2` interchangeable in the given mode over the domain?
///
/// Every mode except enumeration compares the machines word by word under
/// that mode's reading of a run — produced value, acceptance, indication,
/// or total answer. Enumeration compares the two output *sets* over the
/// domain, since an enumerator's identity is its range, not its
/// input–output pairing. In the verdict's witness, `observed` describes
/// `m1` and `expected` describes `m2`.
pub fn functional_equiv(
    m1: &MachineDescription,
    m2: &MachineDescription,
    mode: Mode,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    let obs1 = ModeObserver::new(m1, budget);
    let obs2 = ModeObserver::new(m2, budget);
    if mode == Mode::Enumerate {
        let r1 = obs1.range(d)?;
        let r2 = obs2.range(d)?;
        if let Some(z) = r1.symmetric_difference(&r2).next() {
            let (observed, expected) = if r1.contains(z) {
                ("in the first range", "absent from the second")
            } else {
                ("absent from the first range", "in the second")
            };
            return Ok(ModeVerdict::violated(mode, z, observed, expected));
        }
        return Ok(ModeVerdict::confirmed(mode));
    }
    for u in d.words() {
        let (k1, d1) = project(mode, &obs1.observe(&u)?);
        let (k2, d2) = project(mode, &obs2.observe(&u)?);
        if k1 != k2 {
            return Ok(ModeVerdict::violated(mode, &u, d1, d2));
        }
    }
    Ok(ModeVerdict::confirmed(mode))
}

/// The outcome of an exact automaton comparison: either the two accept the
/// same language, or `witness` holds a shortest word on which they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaEquivalence {
    pub equivalent: bool,
    pub witness: Option<Word>,
}

fn dfa_of(m: &MachineDescription) -> Result<&DfaSpec, MachineError> {
    m.as_dfa().ok_or_else(|| MachineError::WrongModel {
        expected: "dfa".to_string(),
        found: m.model().to_string(),
    })
}

/// Exact language equality for two deterministic finite automata over the
/// same alphabet, with no domain bound.
///
/// Runs a breadth-first search over the product of the two state graphs; a
/// reachable product state where exactly one side accepts yields the
/// distinguishing word spelled by the search path, and breadth-first order
/// makes it a shortest one (the first in alphabet order among those).
pub fn dfa_equiv_exact(
    m1: &MachineDescription,
    m2: &MachineDescription,
) -> Result<DfaEquivalence, MachineError> {
    let d1 = dfa_of(m1)?;
    let d2 = dfa_of(m2)?;
    if d1.input_alphabet != d2.input_alphabet {
        return Err(MachineError::AlphabetMismatch {
            reason: format!(
                "cannot compare automata over {{{}}} and {{{}}}",
                d1.input_alphabet, d2.input_alphabet
            ),
        });
    }

    // Transition tables are total by validation, so this never misses.
    let step = |d: &DfaSpec, q: &str, s: Symbol| -> String {
        d.transitions[&(q.to_string(), s)].clone()
    };

    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([(d1.start.clone(), d2.start.clone(), Word::parse(""))]);
    while let Some((q1, q2, w)) = queue.pop_front() {
        if !seen.insert((q1.clone(), q2.clone())) {
            continue;
        }
        if d1.accept.contains(&q1) != d2.accept.contains(&q2) {
            return Ok(DfaEquivalence {
                equivalent: false,
                witness: Some(w),
            });
        }
        for &s in d1.input_alphabet.symbols() {
            let n1 = step(d1, &q1, s);
            let n2 = step(d2, &q2, s);
            if seen.contains(&(n1.clone(), n2.clone())) {
                continue;
            }
            let mut wn = w.to_string();
            wn.push(s.0);
            queue.push_back((n1, n2, Word::parse(&wn)));
        }
    }
    Ok(DfaEquivalence {
        equivalent: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::{constant, rewriting, seq_compose};
    use crate::machine::DfaSpec;
    use crate::models::nfa_to_dfa;
    use crate::word::Alphabet;
    use crate::zoo::{
        ends_in_01_nfa, even_length_acceptor, even_zeros_dfa, letter_parity_dfa, swapper,
        unary_even_decider,
    };
    use std::collections::{BTreeMap, BTreeSet};

    const BUDGET: u64 = 10_000;

    fn bits(max: usize) -> BoundedDomain {
        BoundedDomain::new(Alphabet::new_input("01").unwrap(), max)
    }

    #[test]
    fn every_machine_matches_itself_in_every_mode() {
        let d = bits(5);
        for m in [even_zeros_dfa(), swapper()] {
            for mode in [
                Mode::Compute,
                Mode::Enumerate,
                Mode::Accept,
                Mode::WeakDecide,
                Mode::Codecide,
                Mode::Decide,
            ] {
                assert!(
                    functional_equiv(&m, &m, mode, &d, BUDGET).unwrap().holds,
                    "{mode} self-comparison"
                );
            }
        }
    }

    #[test]
    fn determinisation_preserves_acceptance_behaviour() {
        let nfa = ends_in_01_nfa();
        let dfa = nfa_to_dfa(&nfa).unwrap();
        let verdict = functional_equiv(&nfa, &dfa, Mode::Accept, &bits(8), BUDGET).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn different_outputs_show_up_in_compute_mode_only_when_they_matter() {
        let d = bits(5);
        let echo = rewriting(&Alphabet::new_input("01").unwrap()).unwrap();
        let flip = swapper();
        // Same range, different word function: enumeration-equivalent but
        // not compute-equivalent.
        assert!(
            functional_equiv(&echo, &flip, Mode::Enumerate, &d, BUDGET)
                .unwrap()
                .holds
        );
        let verdict = functional_equiv(&echo, &flip, Mode::Compute, &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.witness.unwrap();
        assert_eq!(witness.input, Word::parse("0"));
        assert_eq!(witness.observed, "produced:0");
        assert_eq!(witness.expected, "produced:1");
    }

    #[test]
    fn a_decider_and_its_weak_variant_agree_weakly_but_not_totally() {
        let unary = BoundedDomain::new(Alphabet::new_input("1").unwrap(), 7);
        let total = unary_even_decider();
        let weak = seq_compose(
            &constant(&Alphabet::new_input("1").unwrap(), Some(&Word::parse("1"))).unwrap(),
            &even_length_acceptor(),
        )
        .unwrap();
        assert!(
            functional_equiv(&total, &weak, Mode::WeakDecide, &unary, BUDGET)
                .unwrap()
                .holds
        );
        let verdict = functional_equiv(&total, &weak, Mode::Decide, &unary, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, Word::parse("1"));
    }

    fn renamed_even_zeros() -> MachineDescription {
        let mut transitions = BTreeMap::new();
        for (q, s, t) in [("p", '0', "q"), ("p", '1', "p"), ("q", '0', "p"), ("q", '1', "q")] {
            transitions.insert((q.to_string(), Symbol(s)), t.to_string());
        }
        MachineDescription::dfa(DfaSpec {
            states: vec!["p".to_string(), "q".to_string()],
            input_alphabet: Alphabet::new_input("01").unwrap(),
            start: "p".to_string(),
            accept: BTreeSet::from(["p".to_string()]),
            transitions,
        })
        .unwrap()
    }

    fn accept_everything_dfa(alphabet: &str) -> MachineDescription {
        let a = Alphabet::new_input(alphabet).unwrap();
        let mut transitions = BTreeMap::new();
        for &s in a.symbols() {
            transitions.insert(("yes".to_string(), s), "yes".to_string());
        }
        MachineDescription::dfa(DfaSpec {
            states: vec!["yes".to_string()],
            input_alphabet: a,
            start: "yes".to_string(),
            accept: BTreeSet::from(["yes".to_string()]),
            transitions,
        })
        .unwrap()
    }

    #[test]
    fn exact_comparison_sees_through_state_names() {
        let r = dfa_equiv_exact(&even_zeros_dfa(), &renamed_even_zeros()).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn exact_comparison_returns_a_shortest_distinguishing_word() {
        let r = dfa_equiv_exact(&even_zeros_dfa(), &accept_everything_dfa("01")).unwrap();
        assert!(!r.equivalent);
        assert_eq!(r.witness, Some(Word::parse("0")));

        let r = dfa_equiv_exact(&letter_parity_dfa(true), &letter_parity_dfa(false)).unwrap();
        assert_eq!(r.witness, Some(Word::parse("")));
    }

    #[test]
    fn exact_comparison_agrees_with_bounded_enumeration() {
        // Only the all-zero words are accepted; a 1 falls into a dead state.
        let zeros_only = {
            let mut transitions = BTreeMap::new();
            for (q, s, t) in [
                ("z", '0', "z"),
                ("z", '1', "dead"),
                ("dead", '0', "dead"),
                ("dead", '1', "dead"),
            ] {
                transitions.insert((q.to_string(), Symbol(s)), t.to_string());
            }
            MachineDescription::dfa(DfaSpec {
                states: vec!["z".to_string(), "dead".to_string()],
                input_alphabet: Alphabet::new_input("01").unwrap(),
                start: "z".to_string(),
                accept: BTreeSet::from(["z".to_string()]),
                transitions,
            })
            .unwrap()
        };
        let pool = [
            even_zeros_dfa(),
            renamed_even_zeros(),
            accept_everything_dfa("01"),
            zeros_only,
        ];
        let d = bits(10);
        for m1 in &pool {
            for m2 in &pool {
                let exact = dfa_equiv_exact(m1, m2).unwrap();
                let bounded = functional_equiv(m1, m2, Mode::Accept, &d, BUDGET).unwrap();
                assert_eq!(exact.equivalent, bounded.holds);
                if let Some(w) = &exact.witness {
                    // The shortest distinguishing word lies inside the
                    // bounded domain for machines this small.
                    assert_eq!(bounded.witness.unwrap().input, *w);
                }
            }
        }
    }

    #[test]
    fn exact_comparison_requires_matching_automata() {
        assert!(matches!(
            dfa_equiv_exact(&even_zeros_dfa(), &ends_in_01_nfa()),
            Err(MachineError::WrongModel { .. })
        ));
        assert!(matches!(
            dfa_equiv_exact(&even_zeros_dfa(), &letter_parity_dfa(true)),
            Err(MachineError::AlphabetMismatch { .. })
        ));
    }
}
