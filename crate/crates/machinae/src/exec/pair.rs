//! Scheduler for two-component compositions. A composite never merges
//! transition tables; it drives its component runs and routes words between
//! them. Every call to [`PairRun::step`] advances exactly one micro-step in
//! exactly one component (possibly a predicate run), so the parent budget
//! loop can count composite work the same way it counts leaf work. Phase
//! transitions — handing one component's output to the next, reading a
//! predicate's verdict, declaring a race over — are free bookkeeping.

use super::compile::{CPair, Compiled};
use super::{Run, Status};
use crate::machine::PairKind;
use crate::word::{Symbol, Word, PAIR_SEPARATOR};
use std::rc::Rc;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A racing component: either still in the running or permanently out
/// (stuck, or disqualified by the predicate).
enum Lane {
    Live(Box<Run>),
    Out,
}

impl Lane {
    fn live(&self) -> Option<&Run> {
        match self {
            Lane::Live(r) => Some(r),
            Lane::Out => None,
        }
    }
}

/// A conjunction component: still running, or finished with its output.
enum Gather {
    Live(Box<Run>),
    Done(Word),
}

enum Phase {
    /// The component the input word is handed to first: B under the
    /// sequential disciplines, A under the A-first fallback discipline.
    First(Box<Run>),
    /// A predicate run deciding what to do with `value`.
    Filter { p: Box<Run>, value: Word },
    /// The final component; its verdict is the composite's verdict.
    Last(Box<Run>),
    /// Alternating race between two lanes (first-result disciplines).
    Race { a: Lane, b: Lane, next: Side },
    /// A race paused while the predicate examines a retired lane's output.
    RaceFilter {
        a: Lane,
        b: Lane,
        next: Side,
        p: Box<Run>,
        value: Word,
    },
    /// Both components must finish (pairing discipline).
    Both { a: Gather, b: Gather, next: Side },
    /// Terminal; `status` carries the verdict.
    Settled,
}

pub(crate) struct PairRun {
    c: Rc<Compiled>,
    input: Word,
    phase: Phase,
    status: Status,
    /// Peak tape-cell usage across component runs already dropped.
    folded_cells: u64,
}

fn word_one() -> Word {
    Word::parse("1")
}

fn phase_peak(phase: &Phase) -> u64 {
    let mut peak = 0;
    let mut see = |r: &Run| peak = peak.max(r.peak_cells());
    match phase {
        Phase::First(r) | Phase::Last(r) => see(r),
        Phase::Filter { p, .. } => see(p),
        Phase::Race { a, b, .. } => {
            if let Some(r) = a.live() {
                see(r);
            }
            if let Some(r) = b.live() {
                see(r);
            }
        }
        Phase::RaceFilter { a, b, p, .. } => {
            see(p);
            if let Some(r) = a.live() {
                see(r);
            }
            if let Some(r) = b.live() {
                see(r);
            }
        }
        Phase::Both { a, b, .. } => {
            for lane in [a, b] {
                if let Gather::Live(r) = lane {
                    see(r);
                }
            }
        }
        Phase::Settled => {}
    }
    peak
}

impl PairRun {
    pub(crate) fn new(c: Rc<Compiled>, input: Word) -> PairRun {
        let mut run = PairRun {
            c: c.clone(),
            input,
            phase: Phase::Settled,
            status: Status::Running,
            folded_cells: 0,
        };
        let pair = pair_of(&c);
        let first = run.input.clone();
        run.phase = match pair.kind {
            PairKind::Seq | PairKind::PSeq | PairKind::PConjPar => {
                match spawn_inner(&pair.b, &first) {
                    Some(r) => Phase::First(r),
                    None => Phase::Settled,
                }
            }
            PairKind::PDisjSeq => match spawn_inner(&pair.a, &first) {
                Some(r) => Phase::First(r),
                None => Phase::Settled,
            },
            PairKind::DisjPar | PairKind::PDisjPar => Phase::Race {
                a: spawn_lane(&pair.a, &first),
                b: spawn_lane(&pair.b, &first),
                next: Side::A,
            },
            PairKind::ConjPar => match (spawn_inner(&pair.a, &first), spawn_inner(&pair.b, &first))
            {
                (Some(a), Some(b)) => Phase::Both {
                    a: Gather::Live(a),
                    b: Gather::Live(b),
                    next: Side::A,
                },
                _ => Phase::Settled,
            },
        };
        if matches!(run.phase, Phase::Settled) {
            // A spawn failed (the input is not over a component's alphabet):
            // the handover cannot happen, so no result can ever come.
            run.status = Status::Stuck;
        }
        run.settle();
        run
    }

    fn kind(&self) -> PairKind {
        pair_of(&self.c).kind
    }

    /// Retire the current phase, folding its tape usage, and record the
    /// composite's verdict.
    fn resolve(&mut self, status: Status) {
        let old = std::mem::replace(&mut self.phase, Phase::Settled);
        self.folded_cells = self.folded_cells.max(phase_peak(&old));
        self.status = status;
    }

    /// Advance exactly one micro-step in whichever component is due.
    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        match &mut self.phase {
            Phase::First(r) | Phase::Last(r) => r.step(),
            Phase::Filter { p, .. } | Phase::RaceFilter { p, .. } => p.step(),
            Phase::Race { a, b, next } => {
                let side = due_side(*next, a.live().is_some(), b.live().is_some());
                let lane = match side {
                    Side::A => a,
                    Side::B => b,
                };
                if let Lane::Live(r) = lane {
                    r.step();
                }
                *next = side.other();
            }
            Phase::Both { a, b, next } => {
                let side = due_side(
                    *next,
                    matches!(a, Gather::Live(_)),
                    matches!(b, Gather::Live(_)),
                );
                let lane = match side {
                    Side::A => a,
                    Side::B => b,
                };
                if let Gather::Live(r) = lane {
                    r.step();
                }
                *next = side.other();
            }
            Phase::Settled => unreachable!("stepped a settled composite"),
        }
        self.settle();
    }

    /// Apply every free phase transition available: collect component
    /// verdicts, hand words over, read predicate outputs, retire race lanes.
    /// Loops until the active component is genuinely mid-run or the
    /// composite has resolved.
    fn settle(&mut self) {
        while matches!(self.status, Status::Running) {
            match std::mem::replace(&mut self.phase, Phase::Settled) {
                Phase::First(r) => match r.status().clone() {
                    Status::Running => {
                        self.phase = Phase::First(r);
                        return;
                    }
                    Status::Stuck => {
                        self.phase = Phase::First(r);
                        self.resolve(Status::Stuck);
                    }
                    Status::Produced(v) => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        self.first_produced(v);
                    }
                },
                Phase::Filter { p, value } => match p.status().clone() {
                    Status::Running => {
                        self.phase = Phase::Filter { p, value };
                        return;
                    }
                    Status::Stuck => {
                        self.phase = Phase::Filter { p, value };
                        self.resolve(Status::Stuck);
                    }
                    Status::Produced(x) => {
                        self.folded_cells = self.folded_cells.max(p.peak_cells());
                        self.filter_verdict(x == word_one(), value);
                    }
                },
                Phase::Last(r) => match r.status().clone() {
                    Status::Running => {
                        self.phase = Phase::Last(r);
                        return;
                    }
                    verdict => {
                        self.phase = Phase::Last(r);
                        self.resolve(verdict);
                    }
                },
                Phase::Race { a, b, next } => {
                    if self.settle_race(a, b, next) {
                        return;
                    }
                }
                Phase::RaceFilter {
                    a,
                    b,
                    next,
                    p,
                    value,
                } => match p.status().clone() {
                    Status::Running => {
                        self.phase = Phase::RaceFilter { a, b, next, p, value };
                        return;
                    }
                    Status::Stuck => {
                        self.phase = Phase::RaceFilter { a, b, next, p, value };
                        self.resolve(Status::Stuck);
                    }
                    Status::Produced(x) => {
                        self.folded_cells = self.folded_cells.max(p.peak_cells());
                        if x == word_one() {
                            self.phase = Phase::Race { a, b, next };
                            self.resolve(Status::Produced(value));
                        } else {
                            // The candidate lane was already retired when
                            // the filter began; the race goes on without it.
                            self.phase = Phase::Race { a, b, next };
                        }
                    }
                },
                Phase::Both { a, b, next } => {
                    if self.settle_both(a, b, next) {
                        return;
                    }
                }
                Phase::Settled => return,
            }
        }
    }

    /// Free transition for the first sequential stage's output.
    fn first_produced(&mut self, v: Word) {
        let c = self.c.clone();
        let pair = pair_of(&c);
        match pair.kind {
            PairKind::Seq => match spawn_inner(&pair.a, &v) {
                Some(r) => self.phase = Phase::Last(r),
                None => self.resolve(Status::Stuck),
            },
            PairKind::PSeq | PairKind::PConjPar | PairKind::PDisjSeq => {
                let pred = pair.predicate.as_ref().expect("kind takes a predicate");
                match spawn_inner(pred, &v) {
                    Some(p) => self.phase = Phase::Filter { p, value: v },
                    None => self.resolve(Status::Stuck),
                }
            }
            _ => unreachable!("race disciplines have no first stage"),
        }
    }

    /// Free transition for a sequential-discipline predicate verdict.
    fn filter_verdict(&mut self, pass: bool, value: Word) {
        let c = self.c.clone();
        let pair = pair_of(&c);
        match pair.kind {
            PairKind::PSeq => {
                if pass {
                    match spawn_inner(&pair.a, &value) {
                        Some(r) => self.phase = Phase::Last(r),
                        None => self.resolve(Status::Stuck),
                    }
                } else {
                    self.resolve(Status::Stuck);
                }
            }
            PairKind::PConjPar => {
                if pass {
                    match spawn_inner(&pair.a, &self.input.clone()) {
                        Some(r) => self.phase = Phase::Last(r),
                        None => self.resolve(Status::Stuck),
                    }
                } else {
                    self.resolve(Status::Produced(value));
                }
            }
            PairKind::PDisjSeq => {
                if pass {
                    self.resolve(Status::Produced(value));
                } else {
                    match spawn_inner(&pair.b, &self.input.clone()) {
                        Some(r) => self.phase = Phase::Last(r),
                        None => self.resolve(Status::Stuck),
                    }
                }
            }
            _ => unreachable!("only predicate disciplines filter"),
        }
    }

    /// Free transitions for a race: retire stuck lanes, claim results (A
    /// first on ties), route produced words through the predicate when the
    /// discipline has one. Returns true when the caller should stop settling.
    fn settle_race(&mut self, mut a: Lane, mut b: Lane, next: Side) -> bool {
        let filtered = self.kind() == PairKind::PDisjPar;
        for side in [Side::A, Side::B] {
            let lane = match side {
                Side::A => &mut a,
                Side::B => &mut b,
            };
            if let Lane::Live(r) = lane {
                match r.status().clone() {
                    Status::Running => {}
                    Status::Stuck => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        *lane = Lane::Out;
                    }
                    Status::Produced(v) => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        *lane = Lane::Out;
                        if !filtered {
                            self.phase = Phase::Race { a, b, next };
                            self.resolve(Status::Produced(v));
                            return false;
                        }
                        let c = self.c.clone();
                        let pred = pair_of(&c).predicate.as_ref().expect("kind takes a predicate");
                        match spawn_inner(pred, &v) {
                            Some(p) => {
                                // Keep settling: the freshly spawned filter
                                // may itself already be terminal.
                                self.phase = Phase::RaceFilter { a, b, next, p, value: v };
                                return false;
                            }
                            None => {
                                self.phase = Phase::Race { a, b, next };
                                self.resolve(Status::Stuck);
                                return false;
                            }
                        }
                    }
                }
            }
        }
        if a.live().is_none() && b.live().is_none() {
            self.resolve(Status::Stuck);
            return false;
        }
        self.phase = Phase::Race { a, b, next };
        true
    }

    /// Free transitions for the pairing discipline: collect finished lanes,
    /// join the two outputs, or declare the pair unachievable. Returns true
    /// when the caller should stop settling.
    fn settle_both(&mut self, mut a: Gather, mut b: Gather, next: Side) -> bool {
        let mut dead = false;
        for lane in [&mut a, &mut b] {
            if let Gather::Live(r) = lane {
                match r.status().clone() {
                    Status::Running => {}
                    Status::Stuck => dead = true,
                    Status::Produced(v) => {
                        self.folded_cells = self.folded_cells.max(r.peak_cells());
                        *lane = Gather::Done(v);
                    }
                }
            }
        }
        if dead {
            // One side can never finish, so the pair can never be joined.
            self.phase = Phase::Both { a, b, next };
            self.resolve(Status::Stuck);
            return false;
        }
        if let (Gather::Done(va), Gather::Done(vb)) = (&a, &b) {
            let mut joined = va.clone();
            joined.push(Symbol(PAIR_SEPARATOR));
            let joined = joined.concat(vb);
            self.resolve(Status::Produced(joined));
            return false;
        }
        self.phase = Phase::Both { a, b, next };
        true
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }

    pub(crate) fn peak_cells(&self) -> u64 {
        self.folded_cells.max(phase_peak(&self.phase))
    }
}

/// Which racing side is due, preferring the scheduled side but skipping a
/// side that is out of the race.
fn due_side(next: Side, a_live: bool, b_live: bool) -> Side {
    match (next, a_live, b_live) {
        (Side::A, true, _) => Side::A,
        (Side::B, _, true) => Side::B,
        (_, true, _) => Side::A,
        _ => Side::B,
    }
}

/// Spawn a component on a word, or `None` when the word is not over the
/// component's input alphabet. Inside a composite that is not an error: the
/// handover simply cannot happen, and the composite ends without a result.
fn spawn_inner(c: &Rc<Compiled>, input: &Word) -> Option<Box<Run>> {
    Run::spawn(c, input).ok().map(Box::new)
}

fn spawn_lane(c: &Rc<Compiled>, input: &Word) -> Lane {
    match spawn_inner(c, input) {
        Some(r) => Lane::Live(r),
        None => Lane::Out,
    }
}

fn pair_of(c: &Compiled) -> &CPair {
    match c {
        Compiled::Pair(p) => p,
        _ => unreachable!("PairRun spawned on a non-pair machine"),
    }
}
