//! Machine descriptions: immutable, validated blueprints for every model the
//! crate can run.
//!
//! A [`MachineDescription`] wraps one of six shapes:
//!
//! * `dfa` — deterministic finite automaton (total transition function),
//! * `nfa` — nondeterministic finite automaton with ε-moves,
//! * `pda` — pushdown automaton, accepting by final state or empty stack,
//! * `tm` — deterministic Turing machine on a two-way infinite tape,
//! * `itm` — inductive Turing machine: same program shape as `tm`, but its
//!   result is read in the limit rather than at a halting step,
//! * `composite` — a scheduler over component machines, built by the
//!   [`crate::combinators`] module.
//!
//! Descriptions are validated at construction: symbols must belong to the
//! declared alphabets, transition endpoints must be declared states, `dfa`
//! transition functions must be total, and `tm`/`itm` programs must be
//! deterministic. Input alphabets never contain the reserved symbols
//! `_`, `#`, `*`.

use crate::error::MachineError;
use crate::word::{Alphabet, Symbol, BLANK, PAIR_SEPARATOR};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Head movement of a tape machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Left,
    Right,
    Stay,
}

impl Move {
    pub fn as_str(&self) -> &'static str {
        match self {
            Move::Left => "L",
            Move::Right => "R",
            Move::Stay => "S",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Deterministic finite automaton. The transition map must be total over
/// states × input alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaSpec {
    pub states: Vec<String>,
    pub input_alphabet: Alphabet,
    pub start: String,
    pub accept: BTreeSet<String>,
    /// (state, symbol) → successor state.
    pub transitions: BTreeMap<(String, Symbol), String>,
}

/// Nondeterministic finite automaton. A transition key of `None` is an
/// ε-move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfaSpec {
    pub states: Vec<String>,
    pub input_alphabet: Alphabet,
    pub start: String,
    pub accept: BTreeSet<String>,
    /// (state, symbol-or-ε) → successor states.
    pub transitions: BTreeMap<(String, Option<Symbol>), BTreeSet<String>>,
}

/// How a pushdown automaton accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PdaAcceptance {
    FinalState,
    EmptyStack,
}

impl PdaAcceptance {
    pub fn as_str(&self) -> &'static str {
        match self {
            PdaAcceptance::FinalState => "final_state",
            PdaAcceptance::EmptyStack => "empty_stack",
        }
    }
}

/// One pushdown move: in `from`, reading `input` (or ε) with `pop` on top of
/// the stack, go to `to` and push `push` (first symbol becomes the new top).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PdaTransition {
    pub from: String,
    pub input: Option<Symbol>,
    pub pop: Symbol,
    pub to: String,
    pub push: Vec<Symbol>,
}

/// Pushdown automaton. The initial stack holds exactly one symbol: the first
/// symbol of the stack alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdaSpec {
    pub states: Vec<String>,
    pub input_alphabet: Alphabet,
    pub stack_alphabet: Alphabet,
    pub start: String,
    pub accept: BTreeSet<String>,
    pub acceptance: PdaAcceptance,
    pub transitions: BTreeSet<PdaTransition>,
}

impl PdaSpec {
    /// The symbol sitting on the stack before the first move.
    pub fn initial_stack_symbol(&self) -> Symbol {
        self.stack_alphabet.symbols()[0]
    }
}

/// One Turing-machine move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmAction {
    pub to: String,
    pub write: Symbol,
    pub movement: Move,
}

/// Deterministic Turing machine (also the program shape of an inductive
/// machine). Entering an accepting state halts the machine; a configuration
/// with no applicable transition is stuck and never yields a result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmSpec {
    pub states: Vec<String>,
    pub input_alphabet: Alphabet,
    pub tape_alphabet: Alphabet,
    pub blank: Symbol,
    pub start: String,
    pub accept: BTreeSet<String>,
    /// (state, scanned symbol) → action. At most one per key: tape machines
    /// here are deterministic.
    pub transitions: BTreeMap<(String, Symbol), TmAction>,
}

/// The seven pairwise composition disciplines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    /// `A(B(u))`: run B to completion, feed its output to A.
    Seq,
    /// Race A and B in lockstep; first result wins, A wins ties.
    DisjPar,
    /// Run both; output `A(u) # B(u)` once both have produced.
    ConjPar,
    /// Run B, test the predicate on B's output, then run A on B's output.
    PSeq,
    /// Run B; if the predicate passes on B's output run A on the original
    /// input, otherwise return B's output.
    PConjPar,
    /// Race A and B; a result only counts if the predicate passes on it.
    PDisjPar,
    /// Run A first; keep its output if the predicate passes, otherwise run B
    /// on the original input. If A never halts, neither does the composite.
    PDisjSeq,
}

impl PairKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairKind::Seq => "seq",
            PairKind::DisjPar => "disj_par",
            PairKind::ConjPar => "conj_par",
            PairKind::PSeq => "p_seq",
            PairKind::PConjPar => "p_conj_par",
            PairKind::PDisjPar => "p_disj_par",
            PairKind::PDisjSeq => "p_disj_seq",
        }
    }

    pub fn takes_predicate(&self) -> bool {
        matches!(
            self,
            PairKind::PSeq | PairKind::PConjPar | PairKind::PDisjPar | PairKind::PDisjSeq
        )
    }

    /// Inverse of [`PairKind::as_str`].
    pub fn parse(s: &str) -> Option<PairKind> {
        Some(match s {
            "seq" => PairKind::Seq,
            "disj_par" => PairKind::DisjPar,
            "conj_par" => PairKind::ConjPar,
            "p_seq" => PairKind::PSeq,
            "p_conj_par" => PairKind::PConjPar,
            "p_disj_par" => PairKind::PDisjPar,
            "p_disj_seq" => PairKind::PDisjSeq,
            _ => return None,
        })
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Composite machines: schedulers over component machines, never transition
/// table products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositeSpec {
    /// One of the seven pairwise disciplines, with an optional predicate
    /// machine for the `p_*` kinds.
    Pair {
        kind: PairKind,
        a: Box<MachineDescription>,
        b: Box<MachineDescription>,
        predicate: Option<Box<MachineDescription>>,
    },
    /// On input `u`, walk the fair interleaving schedule of `inner` for the
    /// given number of rounds and produce `1` as soon as an emitted output
    /// equals `u`.
    StreamSearch {
        inner: Box<MachineDescription>,
        rounds: u64,
    },
    /// On an index word `k` (shortlex over `inner`'s input alphabet, ε being
    /// index 1), produce the `k`-th emission of `inner`'s schedule. With
    /// `padded`, indices past the last emission repeat the final value.
    EmissionIndex {
        inner: Box<MachineDescription>,
        rounds: u64,
        padded: bool,
    },
}

/// The validated description enum behind [`MachineDescription`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec {
    Dfa(DfaSpec),
    Nfa(NfaSpec),
    Pda(PdaSpec),
    Tm(TmSpec),
    Itm(TmSpec),
    Composite(CompositeSpec),
}

/// An immutable, validated machine description. Construct one with the
/// model-specific constructors ([`MachineDescription::dfa`] and friends) or
/// with the [`crate::combinators`] module; every constructor checks the
/// structural invariants of its model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineDescription {
    spec: ModelSpec,
}

impl MachineDescription {
    pub fn dfa(spec: DfaSpec) -> Result<Self, MachineError> {
        validate_dfa(&spec)?;
        Ok(MachineDescription {
            spec: ModelSpec::Dfa(spec),
        })
    }

    pub fn nfa(spec: NfaSpec) -> Result<Self, MachineError> {
        validate_nfa(&spec)?;
        Ok(MachineDescription {
            spec: ModelSpec::Nfa(spec),
        })
    }

    pub fn pda(spec: PdaSpec) -> Result<Self, MachineError> {
        validate_pda(&spec)?;
        Ok(MachineDescription {
            spec: ModelSpec::Pda(spec),
        })
    }

    pub fn tm(spec: TmSpec) -> Result<Self, MachineError> {
        validate_tm(&spec, "tm")?;
        Ok(MachineDescription {
            spec: ModelSpec::Tm(spec),
        })
    }

    pub fn itm(spec: TmSpec) -> Result<Self, MachineError> {
        validate_tm(&spec, "itm")?;
        Ok(MachineDescription {
            spec: ModelSpec::Itm(spec),
        })
    }

    pub(crate) fn composite(spec: CompositeSpec) -> Self {
        MachineDescription {
            spec: ModelSpec::Composite(spec),
        }
    }

    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    /// The model tag: one of `dfa`, `nfa`, `pda`, `tm`, `itm`, `composite`.
    pub fn model(&self) -> &'static str {
        match &self.spec {
            ModelSpec::Dfa(_) => "dfa",
            ModelSpec::Nfa(_) => "nfa",
            ModelSpec::Pda(_) => "pda",
            ModelSpec::Tm(_) => "tm",
            ModelSpec::Itm(_) => "itm",
            ModelSpec::Composite(_) => "composite",
        }
    }

    pub fn as_dfa(&self) -> Option<&DfaSpec> {
        match &self.spec {
            ModelSpec::Dfa(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_nfa(&self) -> Option<&NfaSpec> {
        match &self.spec {
            ModelSpec::Nfa(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_pda(&self) -> Option<&PdaSpec> {
        match &self.spec {
            ModelSpec::Pda(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_tape(&self) -> Option<&TmSpec> {
        match &self.spec {
            ModelSpec::Tm(t) | ModelSpec::Itm(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_composite(&self) -> Option<&CompositeSpec> {
        match &self.spec {
            ModelSpec::Composite(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_itm(&self) -> bool {
        matches!(self.spec, ModelSpec::Itm(_))
    }

    /// The alphabet the machine's inputs are drawn from. For composites this
    /// is the alphabet of the component the input word is first handed to.
    pub fn input_alphabet(&self) -> Alphabet {
        match &self.spec {
            ModelSpec::Dfa(d) => d.input_alphabet.clone(),
            ModelSpec::Nfa(n) => n.input_alphabet.clone(),
            ModelSpec::Pda(p) => p.input_alphabet.clone(),
            ModelSpec::Tm(t) | ModelSpec::Itm(t) => t.input_alphabet.clone(),
            ModelSpec::Composite(c) => match c {
                CompositeSpec::Pair { kind, a, b, .. } => match kind {
                    // Input goes to B first under sequential disciplines …
                    PairKind::Seq | PairKind::PSeq => b.input_alphabet(),
                    // … and to A (or both, validated equal) otherwise.
                    _ => a.input_alphabet(),
                },
                CompositeSpec::StreamSearch { inner, .. } => inner.output_alphabet(),
                CompositeSpec::EmissionIndex { inner, .. } => inner.input_alphabet(),
            },
        }
    }

    /// An upper bound on the symbols that can occur in any output of the
    /// machine. Automata only ever produce the word `1`; tape machines can
    /// write anything on their tape except the blank.
    pub fn output_alphabet(&self) -> Alphabet {
        match &self.spec {
            ModelSpec::Dfa(_) | ModelSpec::Nfa(_) | ModelSpec::Pda(_) => one_alphabet(),
            ModelSpec::Tm(t) | ModelSpec::Itm(t) => {
                let symbols: Vec<Symbol> = t
                    .tape_alphabet
                    .symbols()
                    .iter()
                    .copied()
                    .filter(|s| *s != t.blank)
                    .collect();
                Alphabet::from_symbols(symbols).unwrap_or_else(|_| one_alphabet())
            }
            ModelSpec::Composite(c) => match c {
                CompositeSpec::Pair {
                    kind, a, b, ..
                } => match kind {
                    PairKind::Seq | PairKind::PSeq => a.output_alphabet(),
                    PairKind::ConjPar => a
                        .output_alphabet()
                        .union(&b.output_alphabet())
                        .union(&Alphabet::from_symbols([Symbol(PAIR_SEPARATOR)]).unwrap()),
                    _ => a.output_alphabet().union(&b.output_alphabet()),
                },
                CompositeSpec::StreamSearch { .. } => one_alphabet(),
                CompositeSpec::EmissionIndex { inner, .. } => inner.output_alphabet(),
            },
        }
    }

    /// True if at most one transition applies in every configuration. Tape
    /// machines and composites are deterministic by construction.
    pub fn is_deterministic(&self) -> bool {
        match &self.spec {
            ModelSpec::Dfa(_) | ModelSpec::Tm(_) | ModelSpec::Itm(_) => true,
            ModelSpec::Nfa(n) => {
                n.transitions.keys().all(|(_, sym)| sym.is_some())
                    && n.transitions.values().all(|targets| targets.len() <= 1)
            }
            ModelSpec::Pda(p) => {
                // Deterministic iff no (state, pop) pair mixes ε-moves with
                // symbol moves or offers two moves for the same trigger.
                let mut seen: BTreeMap<(&String, Symbol), (bool, BTreeSet<Option<Symbol>>)> =
                    BTreeMap::new();
                for t in &p.transitions {
                    let entry = seen
                        .entry((&t.from, t.pop))
                        .or_insert((false, BTreeSet::new()));
                    if t.input.is_none() {
                        entry.0 = true;
                    }
                    if !entry.1.insert(t.input) {
                        return false;
                    }
                    if entry.0 && entry.1.len() > 1 {
                        return false;
                    }
                }
                true
            }
            ModelSpec::Composite(c) => match c {
                CompositeSpec::Pair { a, b, predicate, .. } => {
                    a.is_deterministic()
                        && b.is_deterministic()
                        && predicate.as_ref().map_or(true, |p| p.is_deterministic())
                }
                CompositeSpec::StreamSearch { inner, .. }
                | CompositeSpec::EmissionIndex { inner, .. } => inner.is_deterministic(),
            },
        }
    }
}

fn one_alphabet() -> Alphabet {
    Alphabet::new("1").expect("'1' is a valid alphabet")
}

fn check_state(states: &[String], s: &str, role: &str) -> Result<(), MachineError> {
    if states.iter().any(|t| t == s) {
        Ok(())
    } else {
        Err(MachineError::invalid(format!(
            "{role} state '{s}' is not declared"
        )))
    }
}

fn check_common(
    states: &[String],
    input_alphabet: &Alphabet,
    start: &str,
    accept: &BTreeSet<String>,
) -> Result<(), MachineError> {
    if states.is_empty() {
        return Err(MachineError::invalid("a machine needs at least one state"));
    }
    let mut seen = BTreeSet::new();
    for s in states {
        if !seen.insert(s) {
            return Err(MachineError::invalid(format!("duplicate state '{s}'")));
        }
    }
    input_alphabet.check_no_reserved()?;
    check_state(states, start, "start")?;
    for a in accept {
        check_state(states, a, "accepting")?;
    }
    Ok(())
}

fn validate_dfa(spec: &DfaSpec) -> Result<(), MachineError> {
    check_common(&spec.states, &spec.input_alphabet, &spec.start, &spec.accept)?;
    for ((from, sym), to) in &spec.transitions {
        check_state(&spec.states, from, "transition source")?;
        check_state(&spec.states, to, "transition target")?;
        if !spec.input_alphabet.contains(*sym) {
            return Err(MachineError::SymbolNotInAlphabet {
                symbol: sym.0,
                context: "input".into(),
            });
        }
    }
    // Totality: exactly one transition per (state, symbol).
    for q in &spec.states {
        for s in spec.input_alphabet.symbols() {
            if !spec.transitions.contains_key(&(q.clone(), *s)) {
                return Err(MachineError::invalid(format!(
                    "dfa transition function must be total: missing ({q}, {s})"
                )));
            }
        }
    }
    Ok(())
}

fn validate_nfa(spec: &NfaSpec) -> Result<(), MachineError> {
    check_common(&spec.states, &spec.input_alphabet, &spec.start, &spec.accept)?;
    for ((from, sym), targets) in &spec.transitions {
        check_state(&spec.states, from, "transition source")?;
        if let Some(s) = sym {
            if !spec.input_alphabet.contains(*s) {
                return Err(MachineError::SymbolNotInAlphabet {
                    symbol: s.0,
                    context: "input".into(),
                });
            }
        }
        for t in targets {
            check_state(&spec.states, t, "transition target")?;
        }
    }
    Ok(())
}

fn validate_pda(spec: &PdaSpec) -> Result<(), MachineError> {
    check_common(&spec.states, &spec.input_alphabet, &spec.start, &spec.accept)?;
    for t in &spec.transitions {
        check_state(&spec.states, &t.from, "transition source")?;
        check_state(&spec.states, &t.to, "transition target")?;
        if let Some(s) = t.input {
            if !spec.input_alphabet.contains(s) {
                return Err(MachineError::SymbolNotInAlphabet {
                    symbol: s.0,
                    context: "input".into(),
                });
            }
        }
        if !spec.stack_alphabet.contains(t.pop) {
            return Err(MachineError::SymbolNotInAlphabet {
                symbol: t.pop.0,
                context: "stack".into(),
            });
        }
        for s in &t.push {
            if !spec.stack_alphabet.contains(*s) {
                return Err(MachineError::SymbolNotInAlphabet {
                    symbol: s.0,
                    context: "stack".into(),
                });
            }
        }
    }
    Ok(())
}

fn validate_tm(spec: &TmSpec, model: &str) -> Result<(), MachineError> {
    check_common(&spec.states, &spec.input_alphabet, &spec.start, &spec.accept)?;
    if !spec.tape_alphabet.contains(spec.blank) {
        return Err(MachineError::invalid(format!(
            "{model} blank '{}' must be in the tape alphabet",
            spec.blank
        )));
    }
    if spec.blank.0 != BLANK {
        // Any blank symbol is allowed, but it cannot double as input.
        if spec.input_alphabet.contains(spec.blank) {
            return Err(MachineError::invalid(format!(
                "{model} blank '{}' cannot be an input symbol",
                spec.blank
            )));
        }
    }
    for s in spec.input_alphabet.symbols() {
        if !spec.tape_alphabet.contains(*s) {
            return Err(MachineError::invalid(format!(
                "{model} input symbol '{s}' missing from the tape alphabet"
            )));
        }
    }
    for ((from, sym), action) in &spec.transitions {
        check_state(&spec.states, from, "transition source")?;
        check_state(&spec.states, &action.to, "transition target")?;
        for s in [*sym, action.write] {
            if !spec.tape_alphabet.contains(s) {
                return Err(MachineError::SymbolNotInAlphabet {
                    symbol: s.0,
                    context: "tape".into(),
                });
            }
        }
    }
    Ok(())
}
