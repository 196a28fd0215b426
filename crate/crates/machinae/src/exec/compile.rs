//! Compilation of validated machine descriptions into dense, index-based
//! tables. Descriptions are the durable, serialisable form; compiled
//! machines are what the stepper actually drives. Compiling once and
//! spawning many runs keeps tight simulation loops free of string lookups.

use crate::machine::{
    CompositeSpec, MachineDescription, ModelSpec, Move, PairKind, PdaAcceptance,
};
use crate::word::{Alphabet, Symbol};
use std::collections::BTreeMap;
use std::rc::Rc;

/// A compiled machine. Nodes are reference-counted so that runs — including
/// the many short-lived component runs a composite spawns — can share them
/// without lifetimes.
pub(crate) enum Compiled {
    Dfa(CDfa),
    Nfa(CNfa),
    Pda(CPda),
    Tape(CTape),
    Pair(CPair),
    Search(CSearch),
    Index(CIndex),
}

impl Compiled {
    pub(crate) fn input_alphabet(&self) -> &Alphabet {
        match self {
            Compiled::Dfa(c) => &c.alphabet,
            Compiled::Nfa(c) => &c.alphabet,
            Compiled::Pda(c) => &c.alphabet,
            Compiled::Tape(c) => &c.input_alphabet,
            Compiled::Pair(c) => &c.input_alphabet,
            Compiled::Search(c) => &c.input_alphabet,
            Compiled::Index(c) => &c.input_alphabet,
        }
    }
}

pub(crate) struct CDfa {
    pub alphabet: Alphabet,
    pub start: u32,
    pub accept: Vec<bool>,
    /// `state * |Σ| + symbol` → successor state.
    pub delta: Vec<u32>,
}

pub(crate) struct CNfa {
    pub alphabet: Alphabet,
    pub start: u32,
    pub accept: Vec<bool>,
    /// ε-successors per state.
    pub eps: Vec<Vec<u32>>,
    /// `state * |Σ| + symbol` → successor states.
    pub delta: Vec<Vec<u32>>,
}

#[derive(Clone)]
pub(crate) struct CPdaMove {
    /// `None` is an ε-move, otherwise an index into the input alphabet.
    pub input: Option<u16>,
    pub to: u32,
    /// Pushed symbols, first entry becomes the new top of stack.
    pub push: Vec<u16>,
}

pub(crate) struct CPda {
    pub alphabet: Alphabet,
    pub start: u32,
    pub accept: Vec<bool>,
    pub acceptance: PdaAcceptance,
    pub initial_stack: u16,
    /// `state * |Γ| + popped-symbol` → applicable moves, in canonical order.
    pub moves: Vec<Vec<CPdaMove>>,
    pub n_stack: usize,
}

#[derive(Clone, Copy)]
pub(crate) struct CTapeAction {
    pub to: u32,
    pub write: u16,
    pub movement: i8,
}

pub(crate) struct CTape {
    pub input_alphabet: Alphabet,
    pub tape_alphabet: Alphabet,
    pub blank: u16,
    pub start: u32,
    pub accept: Vec<bool>,
    /// `state * |Γ| + scanned-symbol` → action, `None` meaning stuck.
    pub program: Vec<Option<CTapeAction>>,
    pub n_tape_symbols: usize,
}

impl CTape {
    pub(crate) fn symbol_index(&self, s: Symbol) -> Option<u16> {
        self.tape_alphabet.index_of(s).map(|i| i as u16)
    }
}

pub(crate) struct CPair {
    pub kind: PairKind,
    pub a: Rc<Compiled>,
    pub b: Rc<Compiled>,
    pub predicate: Option<Rc<Compiled>>,
    pub input_alphabet: Alphabet,
}

pub(crate) struct CSearch {
    pub inner: Rc<Compiled>,
    pub rounds: u64,
    /// The searcher's own input alphabet: the inner machine's outputs.
    pub input_alphabet: Alphabet,
    /// Stabilisation window when the inner machine reads its result in the
    /// limit; `None` for halting inner machines.
    pub window: Option<u64>,
}

pub(crate) struct CIndex {
    pub inner: Rc<Compiled>,
    pub rounds: u64,
    pub padded: bool,
    pub input_alphabet: Alphabet,
    pub window: Option<u64>,
}

/// Default stabilisation window for a given step budget.
pub(crate) fn default_window(budget: u64) -> u64 {
    100u64.max(budget / 10).min(budget.max(1))
}

fn state_index(states: &[String]) -> BTreeMap<&str, u32> {
    states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i as u32))
        .collect()
}

pub(crate) fn compile(m: &MachineDescription) -> Rc<Compiled> {
    Rc::new(match m.spec() {
        ModelSpec::Dfa(spec) => {
            let idx = state_index(&spec.states);
            let w = spec.input_alphabet.len();
            let mut delta = vec![0u32; spec.states.len() * w];
            for ((from, sym), to) in &spec.transitions {
                let f = idx[from.as_str()] as usize;
                let s = spec.input_alphabet.index_of(*sym).expect("validated");
                delta[f * w + s] = idx[to.as_str()];
            }
            Compiled::Dfa(CDfa {
                alphabet: spec.input_alphabet.clone(),
                start: idx[spec.start.as_str()],
                accept: spec.states.iter().map(|q| spec.accept.contains(q)).collect(),
                delta,
            })
        }
        ModelSpec::Nfa(spec) => {
            let idx = state_index(&spec.states);
            let w = spec.input_alphabet.len();
            let mut eps = vec![Vec::new(); spec.states.len()];
            let mut delta = vec![Vec::new(); spec.states.len() * w];
            for ((from, sym), targets) in &spec.transitions {
                let f = idx[from.as_str()] as usize;
                let ts: Vec<u32> = targets.iter().map(|t| idx[t.as_str()]).collect();
                match sym {
                    None => eps[f].extend(ts),
                    Some(s) => {
                        let si = spec.input_alphabet.index_of(*s).expect("validated");
                        delta[f * w + si].extend(ts);
                    }
                }
            }
            Compiled::Nfa(CNfa {
                alphabet: spec.input_alphabet.clone(),
                start: idx[spec.start.as_str()],
                accept: spec.states.iter().map(|q| spec.accept.contains(q)).collect(),
                eps,
                delta,
            })
        }
        ModelSpec::Pda(spec) => {
            let idx = state_index(&spec.states);
            let n_stack = spec.stack_alphabet.len();
            let mut moves: Vec<Vec<CPdaMove>> = vec![Vec::new(); spec.states.len() * n_stack];
            // BTreeSet iteration gives a canonical move order, which the
            // breadth-first runner relies on for reproducibility.
            for t in &spec.transitions {
                let f = idx[t.from.as_str()] as usize;
                let pop = spec.stack_alphabet.index_of(t.pop).expect("validated");
                moves[f * n_stack + pop].push(CPdaMove {
                    input: t
                        .input
                        .map(|s| spec.input_alphabet.index_of(s).expect("validated") as u16),
                    to: idx[t.to.as_str()],
                    push: t
                        .push
                        .iter()
                        .map(|s| spec.stack_alphabet.index_of(*s).expect("validated") as u16)
                        .collect(),
                });
            }
            Compiled::Pda(CPda {
                alphabet: spec.input_alphabet.clone(),
                start: idx[spec.start.as_str()],
                accept: spec.states.iter().map(|q| spec.accept.contains(q)).collect(),
                acceptance: spec.acceptance,
                initial_stack: spec
                    .stack_alphabet
                    .index_of(spec.initial_stack_symbol())
                    .expect("validated") as u16,
                moves,
                n_stack,
            })
        }
        ModelSpec::Tm(spec) | ModelSpec::Itm(spec) => {
            let idx = state_index(&spec.states);
            let n_tape = spec.tape_alphabet.len();
            let mut program = vec![None; spec.states.len() * n_tape];
            for ((from, sym), action) in &spec.transitions {
                let f = idx[from.as_str()] as usize;
                let s = spec.tape_alphabet.index_of(*sym).expect("validated");
                program[f * n_tape + s] = Some(CTapeAction {
                    to: idx[action.to.as_str()],
                    write: spec.tape_alphabet.index_of(action.write).expect("validated") as u16,
                    movement: match action.movement {
                        Move::Left => -1,
                        Move::Right => 1,
                        Move::Stay => 0,
                    },
                });
            }
            Compiled::Tape(CTape {
                input_alphabet: spec.input_alphabet.clone(),
                tape_alphabet: spec.tape_alphabet.clone(),
                blank: spec.tape_alphabet.index_of(spec.blank).expect("validated") as u16,
                start: idx[spec.start.as_str()],
                accept: spec.states.iter().map(|q| spec.accept.contains(q)).collect(),
                program,
                n_tape_symbols: n_tape,
            })
        }
        ModelSpec::Composite(c) => match c {
            CompositeSpec::Pair {
                kind,
                a,
                b,
                predicate,
            } => Compiled::Pair(CPair {
                kind: *kind,
                a: compile(a),
                b: compile(b),
                predicate: predicate.as_deref().map(compile),
                input_alphabet: m.input_alphabet(),
            }),
            CompositeSpec::StreamSearch { inner, rounds } => Compiled::Search(CSearch {
                window: inner.is_itm().then(|| default_window(*rounds)),
                inner: compile(inner),
                rounds: *rounds,
                input_alphabet: m.input_alphabet(),
            }),
            CompositeSpec::EmissionIndex {
                inner,
                rounds,
                padded,
            } => Compiled::Index(CIndex {
                window: inner.is_itm().then(|| default_window(*rounds)),
                inner: compile(inner),
                rounds: *rounds,
                padded: *padded,
                input_alphabet: m.input_alphabet(),
            }),
        },
    })
}
