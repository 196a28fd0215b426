//! Runtimes for the four primitive models. Each runtime advances by exactly
//! one micro-step per `step` call; the budget loop in the parent module
//! counts those calls and nothing else.

use super::compile::{CDfa, CNfa, CPda, CTape, Compiled};
use super::Status;
use crate::word::Word;
use std::collections::{BTreeSet, VecDeque};
use std::rc::Rc;

fn word_one() -> Word {
    Word::parse("1")
}

/// Tape machine runtime, shared by the halting and the limit-reading
/// flavours. The tape is two-way infinite; cells left of the origin live in
/// `left`, the origin and everything right of it in `right`.
///
/// The machine's readable output at any instant is the maximal blank-free
/// stretch starting at the leftmost non-blank cell. Limit semantics hinge on
/// *when that stretch last changed*, so the runtime tracks its boundaries
/// incrementally and bumps `readout_version` only for writes that actually
/// alter it — writes beyond the first blank are invisible scratch work.
pub(crate) struct TapeRun {
    c: Rc<Compiled>,
    state: u32,
    head: i64,
    left: Vec<u16>,
    right: Vec<u16>,
    min_head: i64,
    max_head: i64,
    /// Leftmost non-blank cell, or `None` while the tape is all blank.
    run_l: Option<i64>,
    /// First blank cell at or after `run_l` (meaningful only when `run_l`
    /// is set); the readout is exactly the cells `run_l .. run_r`.
    run_r: i64,
    readout_version: u64,
    status: Status,
}

impl TapeRun {
    pub(crate) fn new(c: Rc<Compiled>, input: &Word) -> TapeRun {
        let (start, accept0, cells) = {
            let t = tape_of(&c);
            let cells: Vec<u16> = input
                .symbols()
                .iter()
                .map(|s| t.symbol_index(*s).expect("input validated against alphabet"))
                .collect();
            (t.start, t.accept[t.start as usize], cells)
        };
        let len = cells.len() as i64;
        let mut run = TapeRun {
            c,
            state: start,
            head: 0,
            left: Vec::new(),
            right: cells,
            min_head: 0,
            max_head: 0,
            // Input symbols are never blank, so a nonempty input is the
            // initial readout.
            run_l: (len > 0).then_some(0),
            run_r: len,
            readout_version: 0,
            status: Status::Running,
        };
        if accept0 {
            run.status = Status::Produced(run.readout());
        } else {
            run.sense();
        }
        run
    }

    /// Wedge detection: a configuration with no applicable transition can
    /// never produce, and the run says so without waiting to be stepped
    /// into the wall.
    fn sense(&mut self) {
        let scanned = self.read(self.head);
        let t = self.tape();
        if t.program[self.state as usize * t.n_tape_symbols + scanned as usize].is_none() {
            self.status = Status::Stuck;
        }
    }

    fn tape(&self) -> &CTape {
        tape_of(&self.c)
    }

    fn read(&self, pos: i64) -> u16 {
        let blank = self.tape().blank;
        if pos >= 0 {
            self.right.get(pos as usize).copied().unwrap_or(blank)
        } else {
            self.left.get((-pos - 1) as usize).copied().unwrap_or(blank)
        }
    }

    fn set(&mut self, pos: i64, value: u16) {
        let blank = self.tape().blank;
        let cell = if pos >= 0 {
            let i = pos as usize;
            if i >= self.right.len() {
                self.right.resize(i + 1, blank);
            }
            &mut self.right[i]
        } else {
            let i = (-pos - 1) as usize;
            if i >= self.left.len() {
                self.left.resize(i + 1, blank);
            }
            &mut self.left[i]
        };
        *cell = value;
    }

    /// First blank cell at or after `from`.
    fn scan_blank_right(&self, from: i64) -> i64 {
        let blank = self.tape().blank;
        let hi = self.right.len() as i64;
        let mut p = from;
        while p < hi && self.read(p) != blank {
            p += 1;
        }
        p
    }

    /// First non-blank cell at or after `from`, if any.
    fn scan_nonblank_right(&self, from: i64) -> Option<i64> {
        let blank = self.tape().blank;
        let hi = self.right.len() as i64;
        let mut p = from;
        while p < hi {
            if self.read(p) != blank {
                return Some(p);
            }
            p += 1;
        }
        None
    }

    /// Write `value` at `pos`, maintaining the readout boundaries and
    /// bumping the version exactly when the readable output changes.
    fn write(&mut self, pos: i64, value: u16) {
        let blank = self.tape().blank;
        if self.read(pos) == value {
            return;
        }
        self.set(pos, value);
        match self.run_l {
            None => {
                // All-blank tape gains its first non-blank cell.
                self.run_l = Some(pos);
                self.run_r = self.scan_blank_right(pos + 1);
                self.readout_version += 1;
            }
            Some(l) => {
                let r = self.run_r;
                if pos < l {
                    // Cells left of the readout are blank, so a changing
                    // write here is non-blank: the readout gains a prefix.
                    self.run_l = Some(pos);
                    if pos + 1 < l {
                        self.run_r = pos + 1;
                    }
                    self.readout_version += 1;
                } else if pos == l {
                    self.readout_version += 1;
                    if value == blank {
                        if l + 1 < r {
                            self.run_l = Some(l + 1);
                        } else {
                            // Single-cell readout erased; the next stretch,
                            // if any, may sit past a gap.
                            self.run_l = self.scan_nonblank_right(l + 1);
                            if let Some(nl) = self.run_l {
                                self.run_r = self.scan_blank_right(nl + 1);
                            }
                        }
                    }
                } else if pos < r {
                    self.readout_version += 1;
                    if value == blank {
                        self.run_r = pos;
                    }
                } else if pos == r {
                    // The first blank got overwritten (a changing write at a
                    // blank cell is non-blank): the readout extends, possibly
                    // merging with a stretch that was hidden past the gap.
                    self.run_r = self.scan_blank_right(pos + 1);
                    self.readout_version += 1;
                }
                // pos > r: scratch work beyond the first blank; invisible.
            }
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        let scanned = self.read(self.head);
        let t = self.tape();
        let slot = t.program[self.state as usize * t.n_tape_symbols + scanned as usize];
        let action = slot.expect("wedges are sensed before stepping");
        let accepting = t.accept[action.to as usize];
        self.write(self.head, action.write);
        self.head += action.movement as i64;
        self.min_head = self.min_head.min(self.head);
        self.max_head = self.max_head.max(self.head);
        self.state = action.to;
        if accepting {
            self.status = Status::Produced(self.readout());
        } else {
            self.sense();
        }
    }

    /// The machine's readable output: the maximal blank-free word starting
    /// at the leftmost non-blank cell.
    pub(crate) fn readout(&self) -> Word {
        match self.run_l {
            None => Word::epsilon(),
            Some(l) => {
                let t = self.tape();
                (l..self.run_r)
                    .map(|p| t.tape_alphabet.symbols()[self.read(p) as usize])
                    .collect()
            }
        }
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }

    /// Bumped whenever a write changes the readable output; limit
    /// evaluation compares versions instead of rereading the tape.
    pub(crate) fn readout_version(&self) -> u64 {
        self.readout_version
    }

    pub(crate) fn cells_visited(&self) -> u64 {
        (self.max_head - self.min_head + 1) as u64
    }
}

fn tape_of(c: &Compiled) -> &CTape {
    match c {
        Compiled::Tape(t) => t,
        _ => unreachable!("TapeRun spawned on a non-tape machine"),
    }
}

/// Deterministic finite automaton runtime: one micro-step per consumed input
/// symbol; the verdict is read once the input is exhausted.
pub(crate) struct DfaRun {
    c: Rc<Compiled>,
    state: u32,
    input: Vec<u16>,
    pos: usize,
    status: Status,
}

impl DfaRun {
    pub(crate) fn new(c: Rc<Compiled>, input: &Word) -> DfaRun {
        let (start, input_idx) = {
            let d = dfa_of(&c);
            let idx: Vec<u16> = input
                .symbols()
                .iter()
                .map(|s| d.alphabet.index_of(*s).expect("input validated") as u16)
                .collect();
            (d.start, idx)
        };
        let mut run = DfaRun {
            c,
            state: start,
            input: input_idx,
            pos: 0,
            status: Status::Running,
        };
        run.resolve_if_done();
        run
    }

    fn resolve_if_done(&mut self) {
        if self.pos == self.input.len() {
            let d = dfa_of(&self.c);
            self.status = if d.accept[self.state as usize] {
                Status::Produced(word_one())
            } else {
                Status::Stuck
            };
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        let d = dfa_of(&self.c);
        let w = d.alphabet.len();
        self.state = d.delta[self.state as usize * w + self.input[self.pos] as usize];
        self.pos += 1;
        self.resolve_if_done();
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }
}

fn dfa_of(c: &Compiled) -> &CDfa {
    match c {
        Compiled::Dfa(d) => d,
        _ => unreachable!("DfaRun spawned on a non-dfa machine"),
    }
}

/// Nondeterministic finite automaton runtime: a deterministic subset
/// simulation, one micro-step per consumed input symbol.
pub(crate) struct NfaRun {
    c: Rc<Compiled>,
    current: BTreeSet<u32>,
    input: Vec<u16>,
    pos: usize,
    status: Status,
}

impl NfaRun {
    pub(crate) fn new(c: Rc<Compiled>, input: &Word) -> NfaRun {
        let (current, input_idx) = {
            let n = nfa_of(&c);
            let idx: Vec<u16> = input
                .symbols()
                .iter()
                .map(|s| n.alphabet.index_of(*s).expect("input validated") as u16)
                .collect();
            (closure(n, [n.start]), idx)
        };
        let mut run = NfaRun {
            c,
            current,
            input: input_idx,
            pos: 0,
            status: Status::Running,
        };
        run.resolve_if_done();
        run
    }

    fn resolve_if_done(&mut self) {
        let n = nfa_of(&self.c);
        if self.current.is_empty() {
            self.status = Status::Stuck;
        } else if self.pos == self.input.len() {
            self.status = if self.current.iter().any(|q| n.accept[*q as usize]) {
                Status::Produced(word_one())
            } else {
                Status::Stuck
            };
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        let n = nfa_of(&self.c);
        let w = n.alphabet.len();
        let sym = self.input[self.pos] as usize;
        let mut next = BTreeSet::new();
        for q in &self.current {
            next.extend(n.delta[*q as usize * w + sym].iter().copied());
        }
        self.current = closure(n, next);
        self.pos += 1;
        self.resolve_if_done();
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }
}

fn closure(n: &CNfa, seed: impl IntoIterator<Item = u32>) -> BTreeSet<u32> {
    let mut set: BTreeSet<u32> = seed.into_iter().collect();
    let mut frontier: Vec<u32> = set.iter().copied().collect();
    while let Some(q) = frontier.pop() {
        for t in &n.eps[q as usize] {
            if set.insert(*t) {
                frontier.push(*t);
            }
        }
    }
    set
}

fn nfa_of(c: &Compiled) -> &CNfa {
    match c {
        Compiled::Nfa(n) => n,
        _ => unreachable!("NfaRun spawned on a non-nfa machine"),
    }
}

type PdaConfig = (u32, u32, Vec<u16>);

/// Pushdown automaton runtime: breadth-first exploration of configurations.
/// One micro-step examines one configuration, so the step budget doubles as
/// a configuration-count budget. The stack is stored top-last.
pub(crate) struct PdaRun {
    c: Rc<Compiled>,
    input: Vec<u16>,
    queue: VecDeque<PdaConfig>,
    visited: BTreeSet<PdaConfig>,
    status: Status,
}

impl PdaRun {
    pub(crate) fn new(c: Rc<Compiled>, input: &Word) -> PdaRun {
        let (start, init_stack, input_idx) = {
            let p = pda_of(&c);
            let idx: Vec<u16> = input
                .symbols()
                .iter()
                .map(|s| p.alphabet.index_of(*s).expect("input validated") as u16)
                .collect();
            (p.start, p.initial_stack, idx)
        };
        let initial: PdaConfig = (start, 0, vec![init_stack]);
        PdaRun {
            c,
            input: input_idx,
            queue: VecDeque::from([initial.clone()]),
            visited: BTreeSet::from([initial]),
            status: Status::Running,
        }
    }

    fn accepted(&self, cfg: &PdaConfig) -> bool {
        let p = pda_of(&self.c);
        if cfg.1 as usize != self.input.len() {
            return false;
        }
        match p.acceptance {
            crate::machine::PdaAcceptance::FinalState => p.accept[cfg.0 as usize],
            crate::machine::PdaAcceptance::EmptyStack => cfg.2.is_empty(),
        }
    }

    pub(crate) fn step(&mut self) {
        debug_assert!(matches!(self.status, Status::Running));
        let cfg = self
            .queue
            .pop_front()
            .expect("an exhausted queue wedges the run before the next step");
        if self.accepted(&cfg) {
            self.status = Status::Produced(word_one());
            return;
        }
        let p = pda_of(&self.c);
        let (state, pos, stack) = cfg;
        // An empty stack means no move can pop: the configuration is final.
        if let Some(top) = stack.last().copied() {
            let mut successors = Vec::new();
            for mv in &p.moves[state as usize * p.n_stack + top as usize] {
                let next_pos = match mv.input {
                    None => pos,
                    Some(s) => {
                        if (pos as usize) < self.input.len() && self.input[pos as usize] == s {
                            pos + 1
                        } else {
                            continue;
                        }
                    }
                };
                let mut next_stack = stack.clone();
                next_stack.pop();
                // `push` lists the new top first.
                next_stack.extend(mv.push.iter().rev().copied());
                successors.push((mv.to, next_pos, next_stack));
            }
            for s in successors {
                if self.visited.insert(s.clone()) {
                    self.queue.push_back(s);
                }
            }
        }
        if self.queue.is_empty() {
            self.status = Status::Stuck;
        }
    }

    pub(crate) fn status(&self) -> &Status {
        &self.status
    }
}

fn pda_of(c: &Compiled) -> &CPda {
    match c {
        Compiled::Pda(p) => p,
        _ => unreachable!("PdaRun spawned on a non-pda machine"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::compile::compile;
    use crate::machine::{MachineDescription, Move, TmAction, TmSpec};
    use crate::word::Alphabet;
    use std::collections::BTreeMap;

    /// A tape machine that walks right over its input, doubling nothing,
    /// used purely to exercise the readout bookkeeping from tests: it
    /// rewrites cell 0, erases cell 1, extends past the end, and so on via
    /// the raw write hooks below.
    fn scratch_run(input: &str) -> TapeRun {
        let alphabet = Alphabet::new("ab").unwrap();
        let tape = Alphabet::new("ab_").unwrap();
        let mut transitions = BTreeMap::new();
        transitions.insert(
            ("s".to_string(), crate::word::Symbol('_')),
            TmAction {
                to: "h".to_string(),
                write: crate::word::Symbol('_'),
                movement: Move::Stay,
            },
        );
        let spec = TmSpec {
            states: vec!["s".to_string(), "h".to_string()],
            input_alphabet: alphabet,
            tape_alphabet: tape,
            blank: crate::word::Symbol('_'),
            start: "s".to_string(),
            accept: ["h".to_string()].into_iter().collect(),
            transitions,
        };
        let m = MachineDescription::tm(spec).unwrap();
        TapeRun::new(compile(&m), &Word::parse(input))
    }

    /// Slow, obviously-correct readout: scan the materialized tape extent.
    fn slow_readout(run: &TapeRun) -> Word {
        let t = run.tape();
        let blank = t.blank;
        let lo = -(run.left.len() as i64) - 1;
        let hi = run.right.len() as i64 + 1;
        let mut out = Vec::new();
        let mut started = false;
        for pos in lo..=hi {
            let cell = run.read(pos);
            if cell == blank {
                if started {
                    break;
                }
            } else {
                started = true;
                out.push(t.tape_alphabet.symbols()[cell as usize]);
            }
        }
        Word::from_symbols(out)
    }

    fn sym(run: &TapeRun, ch: char) -> u16 {
        run.tape().symbol_index(crate::word::Symbol(ch)).unwrap()
    }

    #[test]
    fn readout_tracking_matches_slow_scan_under_scripted_writes() {
        let mut run = scratch_run("abab");
        let script: Vec<(i64, char)> = vec![
            (10, 'a'),  // scratch far right of the readout: invisible
            (4, 'b'),   // extend at the first blank
            (2, '_'),   // truncate in the middle
            (0, '_'),   // erase the head of the stretch
            (1, '_'),   // erase the remaining head, stretch jumps the gap
            (-3, 'a'),  // new stretch far left, gap at -2
            (-2, 'b'),  // bridge the gap, stretch merges
            (-3, '_'),  // erase head again
            (7, 'a'),   // invisible scratch
            (-2, '_'),  // keep erasing
        ];
        for (pos, ch) in script {
            let before = (run.readout(), run.readout_version());
            let value = sym(&run, ch);
            run.write(pos, value);
            let after = slow_readout(&run);
            assert_eq!(run.readout(), after, "bounds drifted after write at {pos}");
            let changed = before.0 != after;
            assert_eq!(
                run.readout_version() != before.1,
                changed,
                "version bump disagrees with actual change at {pos}"
            );
        }
    }

    #[test]
    fn unchanged_writes_do_not_bump_the_version() {
        let mut run = scratch_run("ab");
        let a = sym(&run, 'a');
        let blank = run.tape().blank;
        run.write(0, a); // already 'a'
        run.write(5, blank); // blank over blank
        assert_eq!(run.readout_version(), 0);
        assert_eq!(run.readout(), Word::parse("ab"));
    }
}
