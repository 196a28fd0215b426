//! Interleaved enumeration of a machine's behaviour on every input at once,
//! and the two composite runtimes built on top of it: the stream searcher
//! (membership by enumeration) and the emission indexer (the k-th result as
//! a function of k).
//!
//! The schedule visits cells (round m, input n) for m = 2, 3, … and
//! n = 1 ..= m within each round; the cell gives input number n a total
//! allowance of m micro-steps. The reference semantics restarts the machine
//! from scratch at every cell; this engine instead keeps one resumable run
//! per input and tops it up, which visits the same cells in the same order
//! and emits exactly the same sequence — only cheaper. The equivalence is
//! pinned by tests against the restarting implementation.

use super::compile::{compile, CIndex, CSearch, Compiled};
use super::{Run, Status};
use crate::combinators::comp_predicate;
use crate::word::Word;
use std::rc::Rc;

/// One result found by the interleaved schedule: machine input number
/// `input_index` produced `output` after `halt_step` micro-steps, observed
/// during round `round`. For limit-reading machines `halt_step` is the step
/// at which the output last changed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Emission {
    pub round: u64,
    pub input_index: u64,
    pub halt_step: u64,
    pub output: Word,
}

/// What the engine can tell a caller without spending budget.
pub(crate) enum Poll {
    /// A free emission: memoized or instantly resolved.
    Emit(Emission),
    /// The current cell's run needs a micro-step to make progress.
    NeedsStep,
    /// Every cell of every round has been visited.
    Finished,
}

/// How far a per-input run has been resolved.
enum Fate {
    /// Still running; `steps` micro-steps consumed so far.
    Pending,
    /// Produced a result after `t` steps (halting machines only).
    Halted { t: u64, value: Word },
    /// Halted without a result; will never emit.
    Dead,
    /// Limit-reading run reached a terminal configuration; its output can
    /// no longer change.
    Frozen,
}

struct Slot {
    run: Option<Box<Run>>,
    steps: u64,
    fate: Fate,
    /// Step at which the run's readable output last changed (limit mode).
    last_change: u64,
    last_version: u64,
    /// Cached output of a frozen limit-mode run.
    frozen_value: Option<Word>,
}

pub(crate) struct Engine {
    inner: Rc<Compiled>,
    rounds: u64,
    /// `Some` when the inner machine reads its result in the limit; the
    /// effective window for round m is `min(window, m)`.
    window: Option<u64>,
    m: u64,
    n: u64,
    slots: Vec<Slot>,
    finished: bool,
    folded_cells: u64,
}

impl Engine {
    pub(crate) fn new(inner: Rc<Compiled>, rounds: u64, window: Option<u64>) -> Engine {
        Engine {
            inner,
            rounds,
            window,
            m: 2,
            n: 1,
            slots: Vec::new(),
            finished: rounds < 2,
            folded_cells: 0,
        }
    }

    fn advance(&mut self) {
        self.n += 1;
        if self.n > self.m {
            self.m += 1;
            self.n = 1;
            if self.m > self.rounds {
                self.finished = true;
            }
        }
    }

    fn fold(&mut self, run: &Run) {
        self.folded_cells = self.folded_cells.max(run.peak_cells());
    }

    /// Make sure the slot for input number `n` exists, spawning (and
    /// classifying) its run on first contact.
    fn ensure_slot(&mut self, n: u64) {
        while (self.slots.len() as u64) < n {
            let i = self.slots.len() as u64;
            let input = self.inner.input_alphabet().shortlex_word(i);
            let run = Run::spawn(&self.inner, &input)
                .expect("schedule inputs are drawn from the machine's own alphabet");
            let mut slot = Slot {
                run: Some(Box::new(run)),
                steps: 0,
                fate: Fate::Pending,
                last_change: 0,
                last_version: 0,
                frozen_value: None,
            };
            self.classify(&mut slot);
            self.slots.push(slot);
        }
    }

    /// Inspect a slot's run and update its fate. Free: statuses only change
    /// when a micro-step is spent elsewhere.
    fn classify(&mut self, slot: &mut Slot) {
        let Some(run) = slot.run.as_deref() else {
            return;
        };
        if self.window.is_some() {
            // Limit mode: watch the readable output for changes; once the
            // run can no longer move, its output is settled for good.
            let version = run.readout_version();
            if version != slot.last_version {
                slot.last_version = version;
                slot.last_change = slot.steps;
            }
            if !matches!(run.status(), Status::Running) {
                slot.frozen_value = Some(run.tape_readout());
                slot.fate = Fate::Frozen;
                let run = slot.run.take().unwrap();
                self.fold(&run);
            }
        } else {
            match run.status().clone() {
                Status::Running => {}
                Status::Produced(value) => {
                    slot.fate = Fate::Halted { t: slot.steps, value };
                    let run = slot.run.take().unwrap();
                    self.fold(&run);
                }
                Status::Stuck => {
                    slot.fate = Fate::Dead;
                    let run = slot.run.take().unwrap();
                    self.fold(&run);
                }
            }
        }
    }

    /// Evaluate the current cell of a limit-mode slot, emitting when the
    /// output has been still for the effective window.
    fn limit_emission(&self, slot: &Slot) -> Option<Emission> {
        let window = self.window.expect("limit evaluation requires a window");
        let effective = window.min(self.m);
        if slot.last_change > self.m - effective {
            return None;
        }
        let output = match &slot.fate {
            Fate::Frozen => slot.frozen_value.clone().expect("frozen slots cache their value"),
            _ => slot
                .run
                .as_deref()
                .expect("pending slots keep their run")
                .tape_readout(),
        };
        Some(Emission {
            round: self.m,
            input_index: self.n,
            halt_step: slot.last_change,
            output,
        })
    }

    /// Process free work: memoized emissions, dead-slot skips, limit
    /// evaluations, cell advancement. Never consumes a micro-step.
    pub(crate) fn poll(&mut self) -> Poll {
        loop {
            if self.finished {
                return Poll::Finished;
            }
            self.ensure_slot(self.n);
            let idx = (self.n - 1) as usize;
            let limit = self.window.is_some();
            let m = self.m;
            let n = self.n;
            let slot = &self.slots[idx];
            match (&slot.fate, limit) {
                (Fate::Halted { t, value }, false) => {
                    debug_assert!(*t <= m && n <= m);
                    let e = Emission {
                        round: m,
                        input_index: n,
                        halt_step: *t,
                        output: value.clone(),
                    };
                    self.advance();
                    return Poll::Emit(e);
                }
                (Fate::Dead, false) => self.advance(),
                (Fate::Pending, false) => {
                    if slot.steps < m {
                        return Poll::NeedsStep;
                    }
                    // Allowance spent without a verdict this round.
                    self.advance();
                }
                (Fate::Pending, true) => {
                    if slot.steps < m {
                        return Poll::NeedsStep;
                    }
                    let emission = self.limit_emission(slot);
                    self.advance();
                    if let Some(e) = emission {
                        return Poll::Emit(e);
                    }
                }
                (Fate::Frozen, true) => {
                    let emission = self.limit_emission(slot);
                    self.advance();
                    if let Some(e) = emission {
                        return Poll::Emit(e);
                    }
                }
                (Fate::Halted { .. } | Fate::Dead, true) | (Fate::Frozen, false) => {
                    unreachable!("fate bookkeeping crossed modes")
                }
            }
        }
    }

    /// Spend exactly one micro-step on the current cell's run. Returns the
    /// emission if that very step completed the cell with a result.
    pub(crate) fn step_once(&mut self) -> Option<Emission> {
        debug_assert!(!self.finished);
        let idx = (self.n - 1) as usize;
        let limit = self.window.is_some();
        let (m, n) = (self.m, self.n);
        let mut slot = std::mem::replace(
            &mut self.slots[idx],
            Slot {
                run: None,
                steps: 0,
                fate: Fate::Dead,
                last_change: 0,
                last_version: 0,
                frozen_value: None,
            },
        );
        {
            let run = slot
                .run
                .as_deref_mut()
                .expect("step_once follows a NeedsStep poll");
            run.step();
        }
        slot.steps += 1;
        self.classify(&mut slot);
        let mut emission = None;
        if !limit {
            match &slot.fate {
                Fate::Halted { t, value } => {
                    emission = Some(Emission {
                        round: m,
                        input_index: n,
                        halt_step: *t,
                        output: value.clone(),
                    });
                    self.advance();
                }
                Fate::Dead => self.advance(),
                Fate::Pending => {
                    if slot.steps == m {
                        self.advance();
                    }
                }
                Fate::Frozen => unreachable!("fate bookkeeping crossed modes"),
            }
        }
        // Limit mode: the evaluation at steps == m is free and happens on
        // the next poll.
        self.slots[idx] = slot;
        emission
    }

    pub(crate) fn peak_cells(&self) -> u64 {
        let mut peak = self.folded_cells;
        for slot in &self.slots {
            if let Some(run) = slot.run.as_deref() {
                peak = peak.max(run.peak_cells());
            }
        }
        peak
    }
}

enum SPhase {
    /// Driving the enumeration, waiting for the next emission.
    Streaming,
    /// Comparing one emission against the search target.
    Comparing(Box<Run>),
}

/// Membership by enumeration: stream the inner machine's results and answer
/// `1` as soon as one equals the input word. Comparisons are performed by an
/// actual comparison machine run on each emission, so they cost budget like
/// everything else. Exhausting the schedule without a match leaves the
/// searcher without a result.
pub(crate) struct SearchRun {
    engine: Engine,
    comp: Rc<Compiled>,
    phase: SPhase,
    status: Status,
    folded_cells: u64,
}

impl SearchRun {
    pub(crate) fn new(c: &CSearch, input: &Word) -> SearchRun {
        // A target containing plumbing symbols (the separator of paired
        // outputs, say) is not a word any comparison machine can read, so
        // no emission ever matches it: the searcher is born wedged.
        let Ok(comp_desc) = comp_predicate(input, &c.input_alphabet) else {
            return SearchRun {
                engine: Engine::new(c.inner.clone(), 0, c.window),
                comp: c.inner.clone(), // placeholder, never consulted
                phase: SPhase::Streaming,
                status: Status::Stuck,
                folded_cells: 0,
            };
        };
        let mut run = SearchRun {
            engine: Engine::new(c.inner.clone(), c.rounds, c.window),
            comp: compile(&comp_desc),
            phase: SPhase::Streaming,
            status: Status::Running,
            folded_cells: 0,
        };
        run.settle();
        run
    }

    fn begin_compare(&mut self, candidate: &Word) {
        // An emission outside the comparison alphabet can never equal the
        // target; skip it without spending steps.
        if let Ok(r) = Run::spawn(&self.comp, candidate) {
            self.phase = SPhase::Comparing(Box::new(r));
        }
    }

    fn settle(&mut self) {
        loop {
            match &self.phase {
                SPhase::Comparing(r) => match r.status().clone() {
                    Status::Running => return,
                    Status::Produced(x) => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        if x == Word::parse("1") {
                            self.status = Status::Produced(x);
                            return;
                        }
                        self.phase = SPhase::Streaming;
                    }
                    Status::Stuck => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        self.phase = SPhase::Streaming;
                    }
                },
                SPhase::Streaming => match self.engine.poll() {
                    Poll::Emit(e) => self.begin_compare(&e.output),
                    Poll::NeedsStep => return,
                    Poll::Finished => {
                        self.status = Status::Stuck;
                        return;
                    }
                },
            }
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        match &mut self.phase {
            SPhase::Comparing(r) => r.step(),
            SPhase::Streaming => {
                if let Some(e) = self.engine.step_once() {
                    self.begin_compare(&e.output);
                }
            }
        }
        self.settle();
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }

    pub(crate) fn peak_cells(&self) -> u64 {
        let mut peak = self.folded_cells.max(self.engine.peak_cells());
        if let SPhase::Comparing(r) = &self.phase {
            peak = peak.max(r.peak_cells());
        }
        peak
    }
}

/// The k-th enumerated result as a function of k: the input word is decoded
/// to its position k in the shortlex order (starting at 1) and the machine
/// produces the k-th emission's output. The padded variant stays total past
/// the end of a finite stream by repeating the last value.
pub(crate) struct IndexRun {
    engine: Engine,
    k: u64,
    padded: bool,
    seen: u64,
    last: Option<Word>,
    status: Status,
}

impl IndexRun {
    pub(crate) fn new(c: &CIndex, input: &Word) -> IndexRun {
        let k = c
            .input_alphabet
            .shortlex_index(input)
            .expect("spawn validated the input")
            + 1;
        let mut run = IndexRun {
            engine: Engine::new(c.inner.clone(), c.rounds, c.window),
            k,
            padded: c.padded,
            seen: 0,
            last: None,
            status: Status::Running,
        };
        run.settle();
        run
    }

    fn absorb(&mut self, e: Emission) {
        self.seen += 1;
        if self.seen == self.k {
            self.status = Status::Produced(e.output);
        } else {
            self.last = Some(e.output);
        }
    }

    fn settle(&mut self) {
        while matches!(self.status, Status::Running) {
            match self.engine.poll() {
                Poll::Emit(e) => self.absorb(e),
                Poll::NeedsStep => return,
                Poll::Finished => {
                    self.status = match (self.padded, self.last.take()) {
                        (true, Some(value)) => Status::Produced(value),
                        _ => Status::Stuck,
                    };
                    return;
                }
            }
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        if let Some(e) = self.engine.step_once() {
            self.absorb(e);
        }
        self.settle();
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }

    pub(crate) fn peak_cells(&self) -> u64 {
        self.engine.peak_cells()
    }
}
