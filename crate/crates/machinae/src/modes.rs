//! The six observation modes: one machine, six different questions.
//!
//! A machine does not *have* a single meaning — it computes a function,
//! enumerates a range, accepts a language, and (weakly or totally) decides
//! sets, all at once, and the answers differ. This module asks each
//! question over a bounded domain at a step budget and returns a
//! [`ModeVerdict`]: the claim, whether it held, and when it did not, the
//! first offending word with what was observed versus what the claim
//! required.
//!
//! The claims, for a machine m, a target set X and a bounded domain d:
//!
//! * **compute** — [`computable_set`] is the set of outputs m produces on
//!   d; no verdict, just the set.
//! * **enumerate** — m halts on every word of d and its output set is
//!   exactly X.
//! * **accept** — per-word: m produces *some* result on u. Tape machines
//!   accept by halting with anything on the tape; automata produce `1` by
//!   convention.
//! * **weak decide** — m produces `1` exactly on X ∩ d and nothing
//!   elsewhere. Producing `0` off X is a violation: silence is the only
//!   permitted "no".
//! * **codecide** — m produces `1` exactly on d ∖ X and nothing on X.
//! * **decide** — m answers totally: `1` on X ∩ d, `0` on the rest of d.
//!   A finite automaton that finishes its run without accepting counts as
//!   having answered `0` — rejection is its explicit negative verdict.
//!
//! Verdicts are conservative in the budget: a claim judged to hold at one
//! budget holds at every larger budget. The converse direction may flip —
//! more steps can only reveal more behaviour.

use std::collections::BTreeSet;
use std::fmt;

use crate::dovetail::range_oracle;
use crate::error::MachineError;
use crate::exec::{Executor, RunStatus};
use crate::machine::MachineDescription;
use crate::word::{BoundedDomain, Word};

/// Which question a verdict answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Compute,
    Enumerate,
    Accept,
    WeakDecide,
    Codecide,
    Decide,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Compute => "compute",
            Mode::Enumerate => "enumerate",
            Mode::Accept => "accept",
            Mode::WeakDecide => "weak_decide",
            Mode::Codecide => "codecide",
            Mode::Decide => "decide",
        }
    }

    /// Inverse of [`Mode::as_str`].
    pub fn parse(s: &str) -> Option<Mode> {
        Some(match s {
            "compute" => Mode::Compute,
            "enumerate" => Mode::Enumerate,
            "accept" => Mode::Accept,
            "weak_decide" => Mode::WeakDecide,
            "codecide" => Mode::Codecide,
            "decide" => Mode::Decide,
            _ => return None,
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first word at which a claim failed, with the observed behaviour and
/// the behaviour the claim required. The word is a domain input for run
/// mismatches and an output for range mismatches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub input: Word,
    pub observed: String,
    pub expected: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} observed={} expected={}",
            show_word(&self.input),
            self.observed,
            self.expected
        )
    }
}

/// The outcome of a mode query: does the claim hold, and if not, where did
/// it first break. Failing verdicts always carry a witness.
///
/// Renders as the tab-separated line `mode<TAB>holds<TAB>witness`, with `-`
/// for the witness of a holding verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeVerdict {
    pub mode: Mode,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ModeVerdict {
    pub(crate) fn confirmed(mode: Mode) -> ModeVerdict {
        ModeVerdict {
            mode,
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn violated(
        mode: Mode,
        input: &Word,
        observed: impl Into<String>,
        expected: impl Into<String>,
    ) -> ModeVerdict {
        ModeVerdict {
            mode,
            holds: false,
            witness: Some(Witness {
                input: input.clone(),
                observed: observed.into(),
                expected: expected.into(),
            }),
        }
    }
}

impl fmt::Display for ModeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t", self.mode, self.holds)?;
        match &self.witness {
            None => f.write_str("-"),
            Some(w) => write!(f, "{w}"),
        }
    }
}

/// The answer to a per-word acceptance query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Acceptance {
    Accepted,
    NotWithinBudget,
}

impl fmt::Display for Acceptance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Acceptance::Accepted => "accepted",
            Acceptance::NotWithinBudget => "not_within_budget",
        })
    }
}

pub(crate) fn show_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

pub(crate) fn produced_desc(z: &Word) -> String {
    format!("produced:{}", show_word(z))
}

pub(crate) const NO_RESULT: &str = "no-result";
pub(crate) const NO_RUN: &str = "no-run";

/// What one budgeted look at a machine on one word amounts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Observation {
    Produced(Word),
    /// The run ended with budget to spare and no result: an automaton's
    /// explicit rejection, usable as the answer `0`.
    Rejected,
    /// No answer — still running at the budget or wedged at its very end.
    Silent,
    /// The word is not over the machine's input alphabet; no run exists.
    NoRun,
}

/// Runs words through one machine and classifies the outcomes. The mode
/// checks are all written against this so that resource-bounded classes can
/// reuse them with tighter budgets (see the class machinery in
/// [`crate::theorems`]).
pub(crate) struct ModeObserver {
    ex: Executor,
    alphabet: crate::word::Alphabet,
    automaton: bool,
    budget: u64,
    step_bound: Option<fn(u64) -> u64>,
    cell_bound: Option<fn(u64) -> u64>,
}

impl ModeObserver {
    pub(crate) fn new(m: &MachineDescription, budget: u64) -> ModeObserver {
        ModeObserver::bounded(m, budget, None, None)
    }

    /// An observer whose runs must stay within per-length step and cell
    /// bounds on top of the flat budget; results that overrun a bound are
    /// treated as never having appeared.
    pub(crate) fn bounded(
        m: &MachineDescription,
        budget: u64,
        step_bound: Option<fn(u64) -> u64>,
        cell_bound: Option<fn(u64) -> u64>,
    ) -> ModeObserver {
        ModeObserver {
            ex: Executor::new(m),
            alphabet: m.input_alphabet(),
            automaton: matches!(m.model(), "dfa" | "nfa" | "pda"),
            budget,
            step_bound,
            cell_bound,
        }
    }

    pub(crate) fn observe(&self, u: &Word) -> Result<Observation, MachineError> {
        if !u.is_over(&self.alphabet) {
            return Ok(Observation::NoRun);
        }
        let n = u.len() as u64;
        let effective = self
            .step_bound
            .map_or(self.budget, |f| self.budget.min(f(n)));
        let (out, usage) = self.ex.run_metered(u, effective)?;
        Ok(match out.status {
            RunStatus::Produced(z) => {
                if self.cell_bound.is_some_and(|f| usage.cells_visited > f(n)) {
                    Observation::Silent
                } else {
                    Observation::Produced(z)
                }
            }
            _ if self.automaton && out.steps_used < effective => Observation::Rejected,
            _ => Observation::Silent,
        })
    }

    /// Every output produced over the domain — the observer-level range.
    pub(crate) fn range(&self, d: &BoundedDomain) -> Result<BTreeSet<Word>, MachineError> {
        let mut range = BTreeSet::new();
        for u in d.words() {
            if let Observation::Produced(z) = self.observe(&u)? {
                range.insert(z);
            }
        }
        Ok(range)
    }

    /// Every domain word on which the machine produces some result.
    pub(crate) fn accepted_set(&self, d: &BoundedDomain) -> Result<BTreeSet<Word>, MachineError> {
        let mut accepted = BTreeSet::new();
        for u in d.words() {
            if let Observation::Produced(_) = self.observe(&u)? {
                accepted.insert(u);
            }
        }
        Ok(accepted)
    }
}

/// The set of outputs `m` produces over the domain within the budget — the
/// function-in-extension view of the machine, by direct simulation.
pub fn computable_set(
    m: &MachineDescription,
    d: &BoundedDomain,
    budget: u64,
) -> Result<BTreeSet<Word>, MachineError> {
    range_oracle(m, d, budget)
}

/// Does `m` enumerate exactly `x` over the domain? Requires totality — a
/// result on every domain word within the budget — and output set equality.
pub fn enumerates(
    m: &MachineDescription,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    enumerates_with(&ModeObserver::new(m, budget), x, d)
}

pub(crate) fn enumerates_with(
    obs: &ModeObserver,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
) -> Result<ModeVerdict, MachineError> {
    let mut range = BTreeSet::new();
    for u in d.words() {
        match obs.observe(&u)? {
            Observation::Produced(z) => {
                range.insert(z);
            }
            Observation::NoRun => {
                return Ok(ModeVerdict::violated(
                    Mode::Enumerate,
                    &u,
                    NO_RUN,
                    "a produced result",
                ));
            }
            _ => {
                return Ok(ModeVerdict::violated(
                    Mode::Enumerate,
                    &u,
                    NO_RESULT,
                    "a produced result",
                ));
            }
        }
    }
    if let Some(extra) = range.difference(x).next() {
        return Ok(ModeVerdict::violated(
            Mode::Enumerate,
            extra,
            "an output of the machine",
            "absence from the machine's range",
        ));
    }
    if let Some(missing) = x.difference(&range).next() {
        return Ok(ModeVerdict::violated(
            Mode::Enumerate,
            missing,
            "never produced on the domain",
            "an output of the machine",
        ));
    }
    Ok(ModeVerdict::confirmed(Mode::Enumerate))
}

/// Does `m` accept `u` — produce any result at all — within the budget?
pub fn accepts(
    m: &MachineDescription,
    u: &Word,
    budget: u64,
) -> Result<Acceptance, MachineError> {
    Ok(match run_status(m, u, budget)? {
        RunStatus::Produced(_) => Acceptance::Accepted,
        _ => Acceptance::NotWithinBudget,
    })
}

/// Does `m` accept exactly `x` over the domain — produce some result on
/// every member and stay silent on the rest?
pub fn accepts_exactly(
    m: &MachineDescription,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    let obs = ModeObserver::new(m, budget);
    for u in d.words() {
        let member = x.contains(&u);
        let accepted = matches!(obs.observe(&u)?, Observation::Produced(_));
        if member && !accepted {
            return Ok(ModeVerdict::violated(Mode::Accept, &u, NO_RESULT, "acceptance"));
        }
        if !member && accepted {
            return Ok(ModeVerdict::violated(Mode::Accept, &u, "acceptance", NO_RESULT));
        }
    }
    Ok(ModeVerdict::confirmed(Mode::Accept))
}

fn run_status(
    m: &MachineDescription,
    u: &Word,
    budget: u64,
) -> Result<RunStatus, MachineError> {
    Ok(Executor::new(m).run(u, budget)?.status)
}

/// Shared engine for the two partial-indicator claims: the machine produces
/// `1` exactly on `yes` and stays silent on the rest of the domain.
pub(crate) fn indicates_with(
    mode: Mode,
    obs: &ModeObserver,
    yes: &BTreeSet<Word>,
    d: &BoundedDomain,
) -> Result<ModeVerdict, MachineError> {
    let one = Word::parse("1");
    for u in d.words() {
        let member = yes.contains(&u);
        match (member, obs.observe(&u)?) {
            (true, Observation::Produced(z)) if z == one => {}
            (true, Observation::Produced(z)) => {
                return Ok(ModeVerdict::violated(mode, &u, produced_desc(&z), "produced:1"));
            }
            (true, _) => {
                return Ok(ModeVerdict::violated(mode, &u, NO_RESULT, "produced:1"));
            }
            (false, Observation::Produced(z)) => {
                return Ok(ModeVerdict::violated(mode, &u, produced_desc(&z), NO_RESULT));
            }
            // Rejection, silence, and no-run are all the required "no".
            (false, _) => {}
        }
    }
    Ok(ModeVerdict::confirmed(mode))
}

/// Does `m` weakly decide `x` over the domain — produce `1` exactly on
/// X ∩ d and nothing (not even `0`) anywhere else?
pub fn weakly_decides(
    m: &MachineDescription,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    let members = d.words().filter(|u| x.contains(u)).collect();
    indicates_with(Mode::WeakDecide, &ModeObserver::new(m, budget), &members, d)
}

/// Does `m` codecide `x` over the domain — produce `1` exactly on the
/// complement d ∖ X and nothing on X?
pub fn codecides(
    m: &MachineDescription,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    let complement = d.words().filter(|u| !x.contains(u)).collect();
    indicates_with(Mode::Codecide, &ModeObserver::new(m, budget), &complement, d)
}

/// Does `m` decide `x` over the domain — answer `1` on X ∩ d and `0` on
/// d ∖ X, totally within the budget?
///
/// For finite automata a run that ends without accepting before the budget
/// is spent counts as the answer `0`; a run cut off by the budget counts
/// as no answer at all.
pub fn decides(
    m: &MachineDescription,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeVerdict, MachineError> {
    decides_with(&ModeObserver::new(m, budget), x, d)
}

pub(crate) fn decides_with(
    obs: &ModeObserver,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
) -> Result<ModeVerdict, MachineError> {
    let zero = Word::parse("0");
    for u in d.words() {
        let expected = if x.contains(&u) {
            Word::parse("1")
        } else {
            zero.clone()
        };
        let expect_desc = produced_desc(&expected);
        let answer = match obs.observe(&u)? {
            Observation::Produced(z) => Some(z),
            // An automaton whose run ended with budget to spare has read
            // the whole input and rejected it.
            Observation::Rejected => Some(zero.clone()),
            Observation::Silent => None,
            Observation::NoRun => {
                return Ok(ModeVerdict::violated(Mode::Decide, &u, NO_RUN, expect_desc));
            }
        };
        match answer {
            Some(z) if z == expected => {}
            Some(z) => {
                return Ok(ModeVerdict::violated(Mode::Decide, &u, produced_desc(&z), expect_desc));
            }
            None => {
                return Ok(ModeVerdict::violated(Mode::Decide, &u, NO_RESULT, expect_desc));
            }
        }
    }
    Ok(ModeVerdict::confirmed(Mode::Decide))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::{comp_predicate, constant, p_seq, seq_compose};
    use crate::word::Alphabet;
    use crate::zoo;

    const BUDGET: u64 = 10_000;

    fn unary(n: usize) -> Word {
        Word::parse(&"1".repeat(n))
    }

    fn ones() -> Alphabet {
        Alphabet::new_input("1").unwrap()
    }

    fn bits() -> Alphabet {
        Alphabet::new_input("01").unwrap()
    }

    fn unary_domain(max: usize) -> BoundedDomain {
        BoundedDomain::new(ones(), max)
    }

    fn evens(max: usize) -> BTreeSet<Word> {
        (0..=max).step_by(2).map(unary).collect()
    }

    /// `1` exactly on even unary words, silent on odd ones: the acceptor
    /// normalized through a constant writer.
    fn weak_even_decider() -> MachineDescription {
        seq_compose(
            &constant(&ones(), Some(&Word::parse("1"))).unwrap(),
            &zoo::even_length_acceptor(),
        )
        .unwrap()
    }

    #[test]
    fn acceptance_is_any_result_within_budget() {
        let acc = zoo::even_length_acceptor();
        assert_eq!(accepts(&acc, &unary(4), BUDGET).unwrap(), Acceptance::Accepted);
        assert_eq!(
            accepts(&acc, &unary(3), BUDGET).unwrap(),
            Acceptance::NotWithinBudget
        );
        assert_eq!(
            accepts(&zoo::spinner(), &unary(1), BUDGET).unwrap(),
            Acceptance::NotWithinBudget
        );
        // A generous machine on a starving budget is not accepted yet.
        assert_eq!(
            accepts(&zoo::dawdler(50), &unary(0), 10).unwrap(),
            Acceptance::NotWithinBudget
        );
        assert_eq!(
            accepts(&zoo::even_zeros_dfa(), &Word::parse("00"), BUDGET).unwrap(),
            Acceptance::Accepted
        );
    }

    #[test]
    fn the_computable_set_collects_every_output() {
        let set = computable_set(&zoo::unary_doubler(), &unary_domain(4), BUDGET).unwrap();
        let expect: BTreeSet<Word> = (0..=4).map(|n| unary(2 * n)).collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn enumeration_needs_totality_and_exact_range() {
        let doubler = zoo::unary_doubler();
        let d = unary_domain(3);
        let full: BTreeSet<Word> = (0..=3).map(|n| unary(2 * n)).collect();
        let verdict = enumerates(&doubler, &full, &d, BUDGET).unwrap();
        assert!(verdict.holds, "{verdict}");
        // Holding claims agree with the computed range by construction.
        assert_eq!(computable_set(&doubler, &d, BUDGET).unwrap(), full);

        let mut missing = full.clone();
        missing.remove(&unary(6));
        let verdict = enumerates(&doubler, &missing, &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, unary(6));

        let mut extra = full.clone();
        extra.insert(unary(3));
        let verdict = enumerates(&doubler, &extra, &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, unary(3));

        // A partial machine never enumerates, even with the right range.
        let acc = zoo::even_length_acceptor();
        let range = computable_set(&acc, &d, BUDGET).unwrap();
        let verdict = enumerates(&acc, &range, &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, unary(1));
    }

    #[test]
    fn weak_decision_requires_one_on_members_and_silence_elsewhere() {
        let d = unary_domain(7);
        let wd = weak_even_decider();
        assert!(weakly_decides(&wd, &evens(7), &d, BUDGET).unwrap().holds);

        // The wrong target set fails at the first counterexample: ε is
        // produced but not a member.
        let odds: BTreeSet<Word> = (1..=7).step_by(2).map(unary).collect();
        let verdict = weakly_decides(&wd, &odds, &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, unary(0));

        // A total decider is *not* a weak decider: answering 0 breaks the
        // silence the claim demands.
        let verdict = weakly_decides(&zoo::unary_even_decider(), &evens(7), &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.input, unary(1));
        assert_eq!(w.observed, "produced:0");
        assert_eq!(w.expected, "no-result");
    }

    #[test]
    fn codecision_mirrors_weak_decision_on_the_complement() {
        let d = unary_domain(7);
        let wd = weak_even_decider();
        let all: BTreeSet<Word> = d.words().collect();
        let none = BTreeSet::new();
        let odds: BTreeSet<Word> = (1..=7).step_by(2).map(unary).collect();
        for m in [&wd, &zoo::unary_even_decider()] {
            for x in [&evens(7), &odds, &all, &none] {
                let complement: BTreeSet<Word> =
                    d.words().filter(|u| !x.contains(u)).collect();
                let co = codecides(m, x, &d, BUDGET).unwrap();
                let weak = weakly_decides(m, &complement, &d, BUDGET).unwrap();
                assert_eq!(co.holds, weak.holds);
                assert_eq!(
                    co.witness.map(|w| w.input),
                    weak.witness.map(|w| w.input)
                );
            }
        }
        // The weak decider for evens codecides exactly the odd words.
        assert!(codecides(&wd, &odds, &d, BUDGET).unwrap().holds);
    }

    #[test]
    fn total_decision_demands_an_answer_everywhere() {
        let d = unary_domain(8);
        assert!(decides(&zoo::unary_even_decider(), &evens(8), &d, BUDGET).unwrap().holds);

        let wrong = decides(&zoo::unary_even_decider(), &evens(6), &d, BUDGET).unwrap();
        assert!(!wrong.holds);
        assert_eq!(wrong.witness.unwrap().input, unary(8));

        // A weak decider is silent on non-members, so it does not decide.
        let verdict = decides(&weak_even_decider(), &evens(8), &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.input, unary(1));
        assert_eq!(w.observed, "no-result");

        // a^n b^n: a hand-built total decider with a two-letter alphabet.
        let ab = Alphabet::new_input("ab").unwrap();
        let blocks: BTreeSet<Word> =
            (0..=3).map(|n| Word::parse(&("a".repeat(n) + &"b".repeat(n)))).collect();
        let d_ab = BoundedDomain::new(ab, 6);
        assert!(decides(&zoo::block_match_decider(), &blocks, &d_ab, BUDGET).unwrap().holds);
    }

    #[test]
    fn a_finished_automaton_run_counts_as_answering_zero() {
        let d = BoundedDomain::new(bits(), 5);
        let even_zeros: BTreeSet<Word> = d
            .words()
            .filter(|w| w.symbols().iter().filter(|s| s.0 == '0').count() % 2 == 0)
            .collect();
        let dfa = zoo::even_zeros_dfa();
        assert!(decides(&dfa, &even_zeros, &d, BUDGET).unwrap().holds);

        // With the budget exactly equal to the longest word, a rejecting
        // run ends at the buzzer and cannot be told from a truncated one;
        // the verdict stays conservative until one more step is allowed.
        let tight = decides(&dfa, &even_zeros, &d, 5).unwrap();
        assert!(!tight.holds);
        assert_eq!(tight.witness.unwrap().observed, "no-result");
        assert!(decides(&dfa, &even_zeros, &d, 6).unwrap().holds);

        // Rejection is silence, so the same DFA also weakly decides: 1 on
        // members, no result elsewhere.
        assert!(weakly_decides(&dfa, &even_zeros, &d, BUDGET).unwrap().holds);
    }

    #[test]
    fn a_decider_gated_to_its_yes_answers_weakly_decides() {
        // Keep the decider's 1s and turn its 0s into silence: run the
        // decider, pass its answer through an equals-1 gate, then hand the
        // surviving 1 to a writer.
        let gated = p_seq(
            &constant(&bits(), Some(&Word::parse("1"))).unwrap(),
            &comp_predicate(&Word::parse("1"), &bits()).unwrap(),
            &zoo::unary_even_decider(),
        );
        let d = unary_domain(6);
        assert!(weakly_decides(&gated, &evens(6), &d, BUDGET).unwrap().holds);
        assert!(!decides(&gated, &evens(6), &d, BUDGET).unwrap().holds);
    }

    #[test]
    fn verdicts_never_flip_off_with_more_budget() {
        let d = unary_domain(6);
        // Too few steps: no answer on the longer words yet.
        let starved = decides(&zoo::unary_even_decider(), &evens(6), &d, 3).unwrap();
        assert!(!starved.holds);
        for budget in [8, 80, 800] {
            assert!(decides(&zoo::unary_even_decider(), &evens(6), &d, budget).unwrap().holds);
        }
    }

    #[test]
    fn verdict_lines_are_tab_separated() {
        let d = unary_domain(4);
        let holding = weakly_decides(&weak_even_decider(), &evens(4), &d, BUDGET).unwrap();
        assert_eq!(holding.to_string(), "weak_decide\ttrue\t-");

        let failing = weakly_decides(&zoo::unary_even_decider(), &evens(4), &d, BUDGET).unwrap();
        assert_eq!(
            failing.to_string(),
            "weak_decide\tfalse\t1 observed=produced:0 expected=no-result"
        );

        // The empty word renders as ε in witnesses.
        let odds: BTreeSet<Word> = [unary(1), unary(3)].into();
        let eps_witness = weakly_decides(&weak_even_decider(), &odds, &d, BUDGET).unwrap();
        assert_eq!(
            eps_witness.to_string(),
            "weak_decide\tfalse\tε observed=produced:1 expected=no-result"
        );
    }
}
