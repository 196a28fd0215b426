//! Budgeted execution.
//!
//! Every machine, from a two-state automaton to a nested composite, runs
//! under the same discipline: a run advances by micro-steps, each micro-step
//! costs one unit of budget, and the run report says what happened within
//! that budget — a result was produced, the budget ran out (or the machine
//! halted empty-handed, which no larger budget can cure), or, for
//! limit-reading machines, the output settled and stayed put.
//!
//! The only micro-steps that cost anything are those of primitive machines:
//! composites are schedulers, and their internal hand-offs (feeding one
//! component's output to another, consulting a predicate verdict, switching
//! lanes in a race) are free. This makes budget accounting compositional: a
//! composite consumes exactly the sum of its components' consumed steps.

mod compile;
pub(crate) mod engine;
mod leaf;
mod pair;

pub(crate) use compile::{compile, default_window, Compiled};

use crate::error::MachineError;
use crate::machine::MachineDescription;
use crate::word::{BoundedDomain, Symbol, Word};
use engine::{IndexRun, SearchRun};
use leaf::{DfaRun, NfaRun, PdaRun, TapeRun};
use pair::PairRun;
use std::collections::BTreeSet;
use std::rc::Rc;

/// Where a live run stands. `Stuck` is the internal marker for "halted or
/// wedged without a result": it surfaces as [`RunStatus::Exhausted`], but
/// the distinction lets composites treat dead components correctly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Status {
    Running,
    Produced(Word),
    Stuck,
}

/// The observable result of one budgeted run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunStatus {
    /// The machine produced this result word within the budget.
    Produced(Word),
    /// No result within the budget — either the budget ran out mid-flight
    /// or the machine reached a configuration it can never leave with a
    /// result. The report does not distinguish the two: both mean "no
    /// result at this budget".
    Exhausted,
    /// Limit-reading machines only: the output was `value` from step
    /// `stabilized_at` on and stayed unchanged through the required quiet
    /// stretch at the end of the budget.
    LimitStable { value: Word, stabilized_at: u64 },
}

impl RunStatus {
    /// The produced word, if any. `LimitStable` counts: its settled value
    /// is the machine's output.
    pub fn value(&self) -> Option<&Word> {
        match self {
            RunStatus::Produced(w) => Some(w),
            RunStatus::LimitStable { value, .. } => Some(value),
            RunStatus::Exhausted => None,
        }
    }
}

/// A run report: what happened, and how much budget it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: RunStatus,
    /// Micro-steps actually consumed, never more than the budget. A machine
    /// that wedges early stops consuming at that point.
    pub steps_used: u64,
}

/// Exact resource accounting for one run. `cells_visited` counts the
/// distinct tape cells the head ranged over and is 0 for machines without a
/// tape; a composite reports the maximum over its tape-machine sub-runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceUsage {
    pub steps: u64,
    pub cells_visited: u64,
}

/// A live run of any compiled machine.
pub(crate) enum Run {
    Dfa(DfaRun),
    Nfa(NfaRun),
    Pda(PdaRun),
    Tape(TapeRun),
    Pair(PairRun),
    Search(SearchRun),
    Index(IndexRun),
}

impl Run {
    /// Start a run on `input`. Fails with the first offending symbol if the
    /// input is not over the machine's input alphabet.
    pub(crate) fn spawn(c: &Rc<Compiled>, input: &Word) -> Result<Run, Symbol> {
        if let Some(bad) = input
            .symbols()
            .iter()
            .find(|s| !c.input_alphabet().contains(**s))
        {
            return Err(*bad);
        }
        Ok(match &**c {
            Compiled::Dfa(_) => Run::Dfa(DfaRun::new(c.clone(), input)),
            Compiled::Nfa(_) => Run::Nfa(NfaRun::new(c.clone(), input)),
            Compiled::Pda(_) => Run::Pda(PdaRun::new(c.clone(), input)),
            Compiled::Tape(_) => Run::Tape(TapeRun::new(c.clone(), input)),
            Compiled::Pair(_) => Run::Pair(PairRun::new(c.clone(), input.clone())),
            Compiled::Search(s) => Run::Search(SearchRun::new(s, input)),
            Compiled::Index(ix) => Run::Index(IndexRun::new(ix, input)),
        })
    }

    /// Advance by one micro-step. Must only be called while `Running`.
    pub(crate) fn step(&mut self) {
        match self {
            Run::Dfa(r) => r.step(),
            Run::Nfa(r) => r.step(),
            Run::Pda(r) => r.step(),
            Run::Tape(r) => r.step(),
            Run::Pair(r) => r.step(),
            Run::Search(r) => r.step(),
            Run::Index(r) => r.step(),
        }
    }

    pub(crate) fn status(&self) -> &Status {
        match self {
            Run::Dfa(r) => r.status(),
            Run::Nfa(r) => r.status(),
            Run::Pda(r) => r.status(),
            Run::Tape(r) => r.status(),
            Run::Pair(r) => r.status(),
            Run::Search(r) => r.status(),
            Run::Index(r) => r.status(),
        }
    }

    /// Largest tape-cell footprint seen anywhere in this run.
    pub(crate) fn peak_cells(&self) -> u64 {
        match self {
            Run::Dfa(_) | Run::Nfa(_) | Run::Pda(_) => 0,
            Run::Tape(r) => r.cells_visited(),
            Run::Pair(r) => r.peak_cells(),
            Run::Search(r) => r.peak_cells(),
            Run::Index(r) => r.peak_cells(),
        }
    }

    /// Readout-change counter of a tape run; limit evaluation only.
    pub(crate) fn readout_version(&self) -> u64 {
        match self {
            Run::Tape(r) => r.readout_version(),
            _ => unreachable!("limit evaluation on a non-tape run"),
        }
    }

    /// Current readable output of a tape run; limit evaluation only.
    pub(crate) fn tape_readout(&self) -> Word {
        match self {
            Run::Tape(r) => r.readout(),
            _ => unreachable!("limit evaluation on a non-tape run"),
        }
    }
}

fn input_error(symbol: Symbol) -> MachineError {
    MachineError::SymbolNotInAlphabet {
        symbol: symbol.0,
        context: "machine input".to_string(),
    }
}

/// Everything a limit-mode drive observed: the final readout, when it last
/// changed, and the resources consumed.
pub(crate) struct LimitDrive {
    pub(crate) value: Word,
    pub(crate) last_change: u64,
    pub(crate) steps: u64,
    pub(crate) cells: u64,
}

/// Drive a limit-reading tape machine for up to `budget` micro-steps,
/// recording when the readable output last changed. A machine that halts or
/// wedges simply freezes its tape; the quiet-stretch rule applies the same
/// way afterwards.
pub(crate) fn drive_limit(
    c: &Rc<Compiled>,
    input: &Word,
    budget: u64,
) -> Result<LimitDrive, MachineError> {
    let mut run = match Run::spawn(c, input).map_err(input_error)? {
        Run::Tape(t) => t,
        _ => unreachable!("limit mode requires a tape machine"),
    };
    let mut steps = 0u64;
    let mut last_change = 0u64;
    let mut last_version = run.readout_version();
    while steps < budget && matches!(run.status(), Status::Running) {
        run.step();
        steps += 1;
        let v = run.readout_version();
        if v != last_version {
            last_version = v;
            last_change = steps;
        }
    }
    Ok(LimitDrive {
        value: run.readout(),
        last_change,
        steps,
        cells: run.cells_visited(),
    })
}

/// A machine compiled once and ready to run many inputs.
///
/// Compilation resolves names to indices and flattens transition tables;
/// cloning the executor (or spawning runs) never re-validates or re-walks
/// the description.
pub struct Executor {
    compiled: Rc<Compiled>,
    limit_mode: bool,
}

impl Executor {
    pub fn new(m: &MachineDescription) -> Executor {
        Executor {
            compiled: compile(m),
            limit_mode: m.is_itm(),
        }
    }

    /// Run `input` for at most `budget` micro-steps.
    ///
    /// Halting machines report `Produced` or `Exhausted`. Limit-reading
    /// machines are judged at the end of the budget: if the readable output
    /// last changed at step `t` and `t ≤ budget − window` (the window
    /// defaults to a tenth of the budget, at least 100), the run reports
    /// `LimitStable { value, stabilized_at: t }`, otherwise `Exhausted`.
    ///
    /// Produced results are budget-monotone: if a run produces `z` in `s`
    /// steps at this budget, it produces the same `z` in the same `s` steps
    /// at every larger budget.
    pub fn run(&self, input: &Word, budget: u64) -> Result<RunOutcome, MachineError> {
        Ok(self.run_metered(input, budget)?.0)
    }

    /// Like [`Executor::run`], with exact resource accounting.
    pub fn run_metered(
        &self,
        input: &Word,
        budget: u64,
    ) -> Result<(RunOutcome, ResourceUsage), MachineError> {
        if self.limit_mode {
            return self.run_limit(input, budget);
        }
        let mut run = Run::spawn(&self.compiled, input).map_err(input_error)?;
        let mut steps = 0u64;
        while steps < budget && matches!(run.status(), Status::Running) {
            run.step();
            steps += 1;
        }
        let status = match run.status() {
            Status::Produced(w) => RunStatus::Produced(w.clone()),
            Status::Running | Status::Stuck => RunStatus::Exhausted,
        };
        Ok((
            RunOutcome {
                status,
                steps_used: steps,
            },
            ResourceUsage {
                steps,
                cells_visited: run.peak_cells(),
            },
        ))
    }

    fn run_limit(
        &self,
        input: &Word,
        budget: u64,
    ) -> Result<(RunOutcome, ResourceUsage), MachineError> {
        let drive = drive_limit(&self.compiled, input, budget)?;
        let window = default_window(budget).min(budget);
        let status = if drive.last_change <= budget.saturating_sub(window) {
            RunStatus::LimitStable {
                value: drive.value,
                stabilized_at: drive.last_change,
            }
        } else {
            RunStatus::Exhausted
        };
        Ok((
            RunOutcome {
                status,
                steps_used: drive.steps,
            },
            ResourceUsage {
                steps: drive.steps,
                cells_visited: drive.cells,
            },
        ))
    }
}

/// Run `m` on `input` for at most `budget` micro-steps. One-shot wrapper
/// around [`Executor`]; compile once with an executor when running many
/// inputs.
pub fn run(
    m: &MachineDescription,
    input: &Word,
    budget: u64,
) -> Result<RunOutcome, MachineError> {
    Executor::new(m).run(input, budget)
}

/// Like [`run`], with exact resource accounting.
pub fn run_metered(
    m: &MachineDescription,
    input: &Word,
    budget: u64,
) -> Result<(RunOutcome, ResourceUsage), MachineError> {
    Executor::new(m).run_metered(input, budget)
}

/// The relation `m` computes over a bounded domain at a budget: every pair
/// `(u, z)` where running `m` on `u` produces `z`. Domain words outside the
/// machine's input alphabet have no run and contribute nothing. Limit-stable
/// values are a different observation channel and are deliberately not
/// folded in here.
pub fn relation_of(
    m: &MachineDescription,
    d: &BoundedDomain,
    budget: u64,
) -> Result<BTreeSet<(Word, Word)>, MachineError> {
    let ex = Executor::new(m);
    let alphabet = m.input_alphabet();
    let mut rel = BTreeSet::new();
    for u in d.words() {
        if !u.is_over(&alphabet) {
            continue;
        }
        if let RunStatus::Produced(z) = ex.run(&u, budget)?.status {
            rel.insert((u, z));
        }
    }
    Ok(rel)
}

/// Whether a relation is single-valued (at most one output per input).
pub fn is_function(r: &BTreeSet<(Word, Word)>) -> bool {
    // The set is ordered by (input, output), so duplicates of an input are
    // adjacent.
    r.iter()
        .zip(r.iter().skip(1))
        .all(|((u1, z1), (u2, z2))| u1 != u2 || z1 == z2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{DfaSpec, Move, TmAction, TmSpec};
    use crate::word::Alphabet;
    use std::collections::BTreeMap;

    fn parity_dfa() -> MachineDescription {
        // Accepts words with an even number of '1's.
        let mut transitions = BTreeMap::new();
        for (q, s, t) in [
            ("even", '0', "even"),
            ("even", '1', "odd"),
            ("odd", '0', "odd"),
            ("odd", '1', "even"),
        ] {
            transitions.insert((q.to_string(), Symbol(s)), t.to_string());
        }
        MachineDescription::dfa(DfaSpec {
            states: vec!["even".to_string(), "odd".to_string()],
            input_alphabet: Alphabet::new_input("01").unwrap(),
            start: "even".to_string(),
            accept: ["even".to_string()].into_iter().collect(),
            transitions,
        })
        .unwrap()
    }

    fn walker_tm() -> MachineDescription {
        // Walks right over its input and halts on the first blank.
        let alphabet = Alphabet::new_input("01").unwrap();
        let mut transitions = BTreeMap::new();
        for s in ['0', '1'] {
            transitions.insert(
                ("w".to_string(), Symbol(s)),
                TmAction {
                    to: "w".to_string(),
                    write: Symbol(s),
                    movement: Move::Right,
                },
            );
        }
        transitions.insert(
            ("w".to_string(), Symbol('_')),
            TmAction {
                to: "h".to_string(),
                write: Symbol('_'),
                movement: Move::Stay,
            },
        );
        MachineDescription::tm(TmSpec {
            states: vec!["w".to_string(), "h".to_string()],
            input_alphabet: alphabet,
            tape_alphabet: Alphabet::new("01_").unwrap(),
            blank: Symbol('_'),
            start: "w".to_string(),
            accept: ["h".to_string()].into_iter().collect(),
            transitions,
        })
        .unwrap()
    }

    fn spinner_tm() -> MachineDescription {
        // Never halts: moves right forever without writing.
        let mut transitions = BTreeMap::new();
        for s in ['1', '_'] {
            transitions.insert(
                ("z".to_string(), Symbol(s)),
                TmAction {
                    to: "z".to_string(),
                    write: Symbol(s),
                    movement: Move::Right,
                },
            );
        }
        MachineDescription::tm(TmSpec {
            states: vec!["z".to_string()],
            input_alphabet: Alphabet::new_input("1").unwrap(),
            tape_alphabet: Alphabet::new("1_").unwrap(),
            blank: Symbol('_'),
            start: "z".to_string(),
            accept: BTreeSet::new(),
            transitions,
        })
        .unwrap()
    }

    #[test]
    fn dfa_accept_costs_one_step_per_symbol() {
        let m = parity_dfa();
        let out = run(&m, &Word::parse("1100"), 100).unwrap();
        assert_eq!(out.status, RunStatus::Produced(Word::parse("1")));
        assert_eq!(out.steps_used, 4);
    }

    #[test]
    fn dfa_reject_is_exhausted_with_steps_frozen() {
        let m = parity_dfa();
        let out = run(&m, &Word::parse("100"), 100).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert_eq!(out.steps_used, 3);
    }

    #[test]
    fn dfa_on_empty_word_resolves_without_steps() {
        let m = parity_dfa();
        let out = run(&m, &Word::epsilon(), 0).unwrap();
        assert_eq!(out.status, RunStatus::Produced(Word::parse("1")));
        assert_eq!(out.steps_used, 0);
    }

    #[test]
    fn tm_reproduces_input_and_meters_cells() {
        let m = walker_tm();
        let (out, usage) = run_metered(&m, &Word::parse("101"), 100).unwrap();
        assert_eq!(out.status, RunStatus::Produced(Word::parse("101")));
        assert_eq!(out.steps_used, 4);
        assert_eq!(usage.cells_visited, 4);
    }

    #[test]
    fn budget_exhaustion_reports_budget_as_steps() {
        let m = spinner_tm();
        let out = run(&m, &Word::parse("11"), 57).unwrap();
        assert_eq!(out.status, RunStatus::Exhausted);
        assert_eq!(out.steps_used, 57);
    }

    #[test]
    fn produced_runs_are_budget_monotone() {
        let m = walker_tm();
        let at_exact = run(&m, &Word::parse("01"), 3).unwrap();
        assert_eq!(at_exact.status, RunStatus::Produced(Word::parse("01")));
        for budget in [3u64, 4, 10, 1000] {
            let out = run(&m, &Word::parse("01"), budget).unwrap();
            assert_eq!(out.status, at_exact.status);
            assert_eq!(out.steps_used, at_exact.steps_used);
        }
    }

    #[test]
    fn foreign_symbols_are_rejected_up_front() {
        let m = parity_dfa();
        let err = run(&m, &Word::parse("10x"), 100).unwrap_err();
        assert!(matches!(
            err,
            MachineError::SymbolNotInAlphabet { symbol: 'x', .. }
        ));
    }

    #[test]
    fn relation_of_collects_produced_pairs_only() {
        let m = walker_tm();
        let d = BoundedDomain::new(Alphabet::new_input("01").unwrap(), 2);
        let rel = relation_of(&m, &d, 100).unwrap();
        assert_eq!(rel.len(), 7); // ε, 0, 1, 00, 01, 10, 11
        assert!(rel.contains(&(Word::parse("01"), Word::parse("01"))));
        assert!(is_function(&rel));
    }
}
