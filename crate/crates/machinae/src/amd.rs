//! The `.amd` file format: plain-text machine descriptions.
//!
//! An `.amd` file is a line-oriented document. Leaf machines are a header
//! block followed by a transition block:
//!
//! ```text
//! model: dfa
//! states: even odd
//! input_alphabet: 01
//! start: even
//! accept: even
//! transitions:
//! even 0 -> odd
//! even 1 -> even
//! odd 0 -> even
//! odd 1 -> odd
//! ```
//!
//! Header keys depend on the model: tape machines add `tape_alphabet:` and
//! `blank:`, pushdown automata add `stack_alphabet:` and `acceptance:`
//! (`final_state` or `empty_stack`). Transition lines follow the model's
//! syntax — `q a -> q' b M` for tape machines (M one of `L`, `R`, `S`),
//! `q a -> q'` for finite automata (`eps` reads as the empty move on an
//! nfa), and `q a s -> q' <push|eps>` for pushdown automata. The token
//! `eps` always denotes emptiness, never a literal name.
//!
//! Composite machines are stored as a stanza of file references:
//!
//! ```text
//! composite:
//! kind: p_seq
//! first: tag.amd
//! second: decider.amd
//! predicate: equals-one.amd
//! ```
//!
//! Relative paths resolve against the directory of the referring file, so a
//! composite and its parts travel together. [`write_machine`] flattens an
//! in-memory composite into such a family of files; [`load_machine`] reads
//! one back, rebuilding the tree through the validating constructors.
//!
//! Parsing is strict: unknown or inapplicable keys are errors, duplicate
//! deterministic-transition lines are errors, and every undeclared state or
//! symbol is reported with the line it appears on. Serialization is
//! canonical — `parse` then `serialize` reproduces a serialized document
//! byte for byte — so generated files diff cleanly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::combinators::{
    conj_parallel, disj_parallel, p_conj_parallel, p_disj_parallel, p_disj_seq, p_seq, seq_compose,
};
use crate::dovetail::{derived_total, padded_total, Emission};
use crate::error::MachineError;
use crate::machine::{
    CompositeSpec, DfaSpec, MachineDescription, Move, NfaSpec, PairKind, PdaAcceptance, PdaSpec,
    PdaTransition, TmAction, TmSpec,
};
use crate::theorems::weak_decider_from_computer;
use crate::word::{Alphabet, Symbol, Word};

/// The empty-word / empty-push token in transition lines and word lists.
pub const EPS: &str = "eps";

/// A parsed `.amd` document: either a complete leaf machine or a composite
/// stanza whose parts still live in other files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmdDocument {
    Leaf(MachineDescription),
    Composite(CompositeRef),
}

/// The unresolved form of a composite document: component machines are file
/// paths, not descriptions. [`load_machine`] resolves them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositeRef {
    Pair {
        kind: PairKind,
        first: String,
        second: String,
        predicate: Option<String>,
    },
    StreamSearch {
        inner: String,
        rounds: u64,
    },
    EmissionIndex {
        inner: String,
        rounds: u64,
        padded: bool,
    },
}

fn perr(line: usize, message: impl Into<String>) -> MachineError {
    MachineError::parse(line, message)
}

fn io_err(path: &Path, e: std::io::Error) -> MachineError {
    MachineError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// One header entry, remembered with its line number for error reporting.
struct HeaderMap<'a> {
    entries: Vec<(usize, &'a str, &'a str)>,
}

impl<'a> HeaderMap<'a> {
    fn insert(&mut self, line: usize, key: &'a str, value: &'a str) -> Result<(), MachineError> {
        if self.entries.iter().any(|(_, k, _)| *k == key) {
            return Err(perr(line, format!("duplicate key `{key}`")));
        }
        self.entries.push((line, key, value));
        Ok(())
    }

    fn take(&mut self, key: &str) -> Option<(usize, &'a str)> {
        let at = self.entries.iter().position(|(_, k, _)| *k == key)?;
        let (line, _, value) = self.entries.remove(at);
        Some((line, value))
    }

    fn require(&mut self, key: &str, model_line: usize) -> Result<(usize, &'a str), MachineError> {
        self.take(key)
            .ok_or_else(|| perr(model_line, format!("missing `{key}:` header")))
    }

    /// Every key must have been consumed by now; leftovers are either
    /// unknown or do not apply to the model at hand.
    fn finish(self) -> Result<(), MachineError> {
        if let Some((line, key, _)) = self.entries.first() {
            return Err(perr(*line, format!("unknown or inapplicable key `{key}`")));
        }
        Ok(())
    }
}

/// Splits a `key: value` line. The key is everything before the first `:`.
fn key_value(line: &str) -> Option<(&str, &str)> {
    let (k, v) = line.split_once(':')?;
    let k = k.trim();
    if k.is_empty() || k.contains(char::is_whitespace) {
        return None;
    }
    Some((k, v.trim()))
}

fn single_symbol(tok: &str, line: usize, what: &str) -> Result<Symbol, MachineError> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(Symbol(c)),
        _ => Err(perr(line, format!("{what} must be a single symbol, got `{tok}`"))),
    }
}

fn declared_symbol(
    tok: &str,
    alphabet: &Alphabet,
    line: usize,
    what: &str,
) -> Result<Symbol, MachineError> {
    let s = single_symbol(tok, line, what)?;
    if !alphabet.contains(s) {
        return Err(perr(line, format!("undeclared {what} `{tok}`")));
    }
    Ok(s)
}

fn declared_state(
    tok: &str,
    states: &[String],
    line: usize,
) -> Result<String, MachineError> {
    if !states.iter().any(|s| s == tok) {
        return Err(perr(line, format!("undeclared state `{tok}`")));
    }
    Ok(tok.to_string())
}

fn parse_alphabet(
    value: &str,
    line: usize,
    input_only: bool,
) -> Result<Alphabet, MachineError> {
    let build = if input_only { Alphabet::new_input } else { Alphabet::new };
    build(value).map_err(|e| perr(line, e.to_string()))
}

struct Lines<'a> {
    /// `(1-based line number, trimmed content)`, blank lines dropped.
    items: Vec<(usize, &'a str)>,
}

fn significant_lines(text: &str) -> Lines<'_> {
    let items = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Lines { items }
}

/// Parses one `.amd` document. Composite stanzas come back unresolved; use
/// [`load_machine`] when the document lives in a file and its parts should
/// be loaded too.
pub fn parse_amd(text: &str) -> Result<AmdDocument, MachineError> {
    let lines = significant_lines(text);
    let Some(&(first_line, first)) = lines.items.first() else {
        return Err(perr(1, "empty document"));
    };
    match key_value(first) {
        Some(("composite", "")) => parse_composite(&lines, first_line).map(AmdDocument::Composite),
        Some(("model", _)) => parse_leaf(&lines).map(AmdDocument::Leaf),
        _ => Err(perr(
            first_line,
            "document must start with `model: <name>` or `composite:`",
        )),
    }
}

fn parse_composite(lines: &Lines<'_>, stanza_line: usize) -> Result<CompositeRef, MachineError> {
    let mut header = HeaderMap { entries: Vec::new() };
    for &(no, line) in &lines.items[1..] {
        let Some((key, value)) = key_value(line) else {
            return Err(perr(no, format!("expected `key: value`, got `{line}`")));
        };
        header.insert(no, key, value)?;
    }
    let (kind_line, kind) = header.require("kind", stanza_line)?;

    let parsed = if let Some(pair) = PairKind::parse(kind) {
        let (_, first) = header.require("first", kind_line)?;
        let (_, second) = header.require("second", kind_line)?;
        let predicate = if pair.takes_predicate() {
            Some(header.require("predicate", kind_line)?.1.to_string())
        } else {
            None
        };
        CompositeRef::Pair {
            kind: pair,
            first: first.to_string(),
            second: second.to_string(),
            predicate,
        }
    } else {
        let rounds_of = |header: &mut HeaderMap<'_>| -> Result<u64, MachineError> {
            let (line, v) = header.require("rounds", kind_line)?;
            v.parse::<u64>()
                .map_err(|_| perr(line, format!("`rounds` must be a number, got `{v}`")))
        };
        match kind {
            "stream_search" => {
                let (_, inner) = header.require("inner", kind_line)?;
                CompositeRef::StreamSearch {
                    inner: inner.to_string(),
                    rounds: rounds_of(&mut header)?,
                }
            }
            "emission_index" => {
                let (_, inner) = header.require("inner", kind_line)?;
                let rounds = rounds_of(&mut header)?;
                let padded = match header.require("padded", kind_line)? {
                    (_, "true") => true,
                    (_, "false") => false,
                    (line, v) => {
                        return Err(perr(line, format!("`padded` must be true or false, got `{v}`")))
                    }
                };
                CompositeRef::EmissionIndex {
                    inner: inner.to_string(),
                    rounds,
                    padded,
                }
            }
            other => return Err(perr(kind_line, format!("unknown composite kind `{other}`"))),
        }
    };
    header.finish()?;
    Ok(parsed)
}

fn parse_leaf(lines: &Lines<'_>) -> Result<MachineDescription, MachineError> {
    let (model_line, model_decl) = lines.items[0];
    let model = key_value(model_decl).expect("checked by caller").1;

    // Split the remaining lines into the header block and the transition
    // block at the bare `transitions:` marker.
    let mut header = HeaderMap { entries: Vec::new() };
    let mut body: &[(usize, &str)] = &[];
    let mut body_line = 0usize;
    let mut rest = lines.items[1..].iter();
    while let Some(&(no, line)) = rest.next() {
        match key_value(line) {
            Some(("transitions", "")) => {
                let consumed = lines.items.len() - rest.len();
                body = &lines.items[consumed..];
                body_line = no;
                break;
            }
            Some((key, value)) => header.insert(no, key, value)?,
            None => return Err(perr(no, format!("expected `key: value`, got `{line}`"))),
        }
    }
    if body_line == 0 {
        return Err(perr(model_line, "missing `transitions:` block"));
    }

    let states_decl = header.require("states", model_line)?;
    let states: Vec<String> = states_decl.1.split_whitespace().map(String::from).collect();
    if states.is_empty() {
        return Err(perr(states_decl.0, "at least one state is required"));
    }
    if let Some(dup) = states.iter().enumerate().find(|(i, s)| states[..*i].contains(s)) {
        return Err(perr(states_decl.0, format!("duplicate state `{}`", dup.1)));
    }

    let (in_line, in_val) = header.require("input_alphabet", model_line)?;
    let input_alphabet = parse_alphabet(in_val, in_line, true)?;

    let (start_line, start_tok) = header.require("start", model_line)?;
    let start = declared_state(start_tok, &states, start_line)?;

    let (accept_line, accept_val) = header.require("accept", model_line)?;
    let mut accept = BTreeSet::new();
    for tok in accept_val.split_whitespace() {
        accept.insert(declared_state(tok, &states, accept_line)?);
    }

    let built = match model {
        "dfa" | "nfa" => {
            header.finish()?;
            let fa = FiniteParts { states, input_alphabet, start, accept };
            if model == "dfa" {
                MachineDescription::dfa(parse_dfa_body(fa, body)?)
            } else {
                MachineDescription::nfa(parse_nfa_body(fa, body)?)
            }
        }
        "pda" => {
            let (st_line, st_val) = header.require("stack_alphabet", model_line)?;
            let stack_alphabet = parse_alphabet(st_val, st_line, false)?;
            let acceptance = match header.require("acceptance", model_line)? {
                (_, "final_state") => PdaAcceptance::FinalState,
                (_, "empty_stack") => PdaAcceptance::EmptyStack,
                (line, v) => {
                    return Err(perr(
                        line,
                        format!("`acceptance` must be final_state or empty_stack, got `{v}`"),
                    ))
                }
            };
            header.finish()?;
            let mut transitions = BTreeSet::new();
            for &(no, line) in body {
                transitions.insert(parse_pda_line(
                    line, no, &states, &input_alphabet, &stack_alphabet,
                )?);
            }
            MachineDescription::pda(PdaSpec {
                states,
                input_alphabet,
                stack_alphabet,
                start,
                accept,
                acceptance,
                transitions,
            })
        }
        "tm" | "itm" => {
            let (tape_line, tape_val) = header.require("tape_alphabet", model_line)?;
            let tape_alphabet = parse_alphabet(tape_val, tape_line, false)?;
            let (blank_line, blank_tok) = header.require("blank", model_line)?;
            let blank = declared_symbol(blank_tok, &tape_alphabet, blank_line, "tape symbol")?;
            header.finish()?;
            let mut transitions = BTreeMap::new();
            for &(no, line) in body {
                let (key, action) = parse_tm_line(line, no, &states, &tape_alphabet)?;
                if transitions.insert(key.clone(), action).is_some() {
                    return Err(perr(
                        no,
                        format!("duplicate transition for state `{}` on `{}`", key.0, key.1 .0),
                    ));
                }
            }
            let spec = TmSpec {
                states,
                input_alphabet,
                tape_alphabet,
                blank,
                start,
                accept,
                transitions,
            };
            if model == "tm" {
                MachineDescription::tm(spec)
            } else {
                MachineDescription::itm(spec)
            }
        }
        other => return Err(perr(model_line, format!("unknown model `{other}`"))),
    };
    // Constructor-level validation (totality, alphabet containment) has no
    // line of its own; anchor it on the transition block.
    built.map_err(|e| match e {
        already @ MachineError::Parse { .. } => already,
        other => perr(body_line, other.to_string()),
    })
}

struct FiniteParts {
    states: Vec<String>,
    input_alphabet: Alphabet,
    start: String,
    accept: BTreeSet<String>,
}

fn arrow_split<'a>(
    toks: &[&'a str],
    line: usize,
    lhs: usize,
    rhs: usize,
) -> Result<(), MachineError> {
    if toks.len() == lhs + 1 + rhs && toks[lhs] == "->" {
        return Ok(());
    }
    Err(perr(
        line,
        format!(
            "malformed transition (expected {lhs} tokens, `->`, then {rhs}): `{}`",
            toks.join(" ")
        ),
    ))
}

fn parse_dfa_body(
    fa: FiniteParts,
    body: &[(usize, &str)],
) -> Result<DfaSpec, MachineError> {
    let mut transitions = BTreeMap::new();
    for &(no, line) in body {
        let toks: Vec<&str> = line.split_whitespace().collect();
        arrow_split(&toks, no, 2, 1)?;
        let from = declared_state(toks[0], &fa.states, no)?;
        let sym = declared_symbol(toks[1], &fa.input_alphabet, no, "input symbol")?;
        let to = declared_state(toks[3], &fa.states, no)?;
        if transitions.insert((from.clone(), sym), to).is_some() {
            return Err(perr(
                no,
                format!("duplicate transition for state `{from}` on `{}`", sym.0),
            ));
        }
    }
    Ok(DfaSpec {
        states: fa.states,
        input_alphabet: fa.input_alphabet,
        start: fa.start,
        accept: fa.accept,
        transitions,
    })
}

fn parse_nfa_body(
    fa: FiniteParts,
    body: &[(usize, &str)],
) -> Result<NfaSpec, MachineError> {
    let mut transitions: BTreeMap<(String, Option<Symbol>), BTreeSet<String>> = BTreeMap::new();
    for &(no, line) in body {
        let toks: Vec<&str> = line.split_whitespace().collect();
        arrow_split(&toks, no, 2, 1)?;
        let from = declared_state(toks[0], &fa.states, no)?;
        let sym = if toks[1] == EPS {
            None
        } else {
            Some(declared_symbol(toks[1], &fa.input_alphabet, no, "input symbol")?)
        };
        let to = declared_state(toks[3], &fa.states, no)?;
        transitions.entry((from, sym)).or_default().insert(to);
    }
    Ok(NfaSpec {
        states: fa.states,
        input_alphabet: fa.input_alphabet,
        start: fa.start,
        accept: fa.accept,
        transitions,
    })
}

fn parse_pda_line(
    line: &str,
    no: usize,
    states: &[String],
    input: &Alphabet,
    stack: &Alphabet,
) -> Result<PdaTransition, MachineError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    arrow_split(&toks, no, 3, 2)?;
    let from = declared_state(toks[0], states, no)?;
    let read = if toks[1] == EPS {
        None
    } else {
        Some(declared_symbol(toks[1], input, no, "input symbol")?)
    };
    let pop = declared_symbol(toks[2], stack, no, "stack symbol")?;
    let to = declared_state(toks[4], states, no)?;
    let push = if toks[5] == EPS {
        Vec::new()
    } else {
        toks[5]
            .chars()
            .map(|c| declared_symbol(&c.to_string(), stack, no, "stack symbol"))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(PdaTransition { from, input: read, pop, to, push })
}

fn parse_tm_line(
    line: &str,
    no: usize,
    states: &[String],
    tape: &Alphabet,
) -> Result<((String, Symbol), TmAction), MachineError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    arrow_split(&toks, no, 2, 3)?;
    let from = declared_state(toks[0], states, no)?;
    let read = declared_symbol(toks[1], tape, no, "tape symbol")?;
    let to = declared_state(toks[3], states, no)?;
    let write = declared_symbol(toks[4], tape, no, "tape symbol")?;
    let movement = match toks[5] {
        "L" => Move::Left,
        "R" => Move::Right,
        "S" => Move::Stay,
        other => return Err(perr(no, format!("movement must be L, R or S, got `{other}`"))),
    };
    Ok(((from, read), TmAction { to, write, movement }))
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Renders a document in canonical form. Inverse of [`parse_amd`] up to
/// header ordering and whitespace: `serialize(parse(serialize(d)))` is byte
/// for byte `serialize(d)`.
pub fn serialize_amd(doc: &AmdDocument) -> Result<String, MachineError> {
    match doc {
        AmdDocument::Leaf(m) => serialize_machine(m),
        AmdDocument::Composite(c) => Ok(serialize_composite(c)),
    }
}

fn serialize_composite(c: &CompositeRef) -> String {
    let mut out = String::from("composite:\n");
    match c {
        CompositeRef::Pair { kind, first, second, predicate } => {
            let _ = writeln!(out, "kind: {kind}");
            let _ = writeln!(out, "first: {first}");
            let _ = writeln!(out, "second: {second}");
            if let Some(p) = predicate {
                let _ = writeln!(out, "predicate: {p}");
            }
        }
        CompositeRef::StreamSearch { inner, rounds } => {
            let _ = writeln!(out, "kind: stream_search");
            let _ = writeln!(out, "inner: {inner}");
            let _ = writeln!(out, "rounds: {rounds}");
        }
        CompositeRef::EmissionIndex { inner, rounds, padded } => {
            let _ = writeln!(out, "kind: emission_index");
            let _ = writeln!(out, "inner: {inner}");
            let _ = writeln!(out, "rounds: {rounds}");
            let _ = writeln!(out, "padded: {padded}");
        }
    }
    out
}

/// Renders a leaf machine. Composites cannot be rendered to a single file —
/// their parts are file references — so they are rejected here; use
/// [`write_machine`] to flatten a composite into a family of files.
pub fn serialize_machine(m: &MachineDescription) -> Result<String, MachineError> {
    let mut out = String::new();
    let mut line = |s: String| out.push_str(&(s + "\n"));

    let check_name = |name: &str| -> Result<(), MachineError> {
        if name.contains(char::is_whitespace) || name == EPS {
            return Err(MachineError::invalid(format!(
                "state `{name}` cannot be written to a document; rename it"
            )));
        }
        Ok(())
    };

    match m.model() {
        "dfa" => {
            let d = m.as_dfa().expect("model tag");
            for s in &d.states {
                check_name(s)?;
            }
            line(format!("model: dfa"));
            line(format!("states: {}", d.states.join(" ")));
            line(format!("input_alphabet: {}", d.input_alphabet));
            line(format!("start: {}", d.start));
            line(format!("accept: {}", join_set(&d.accept)));
            line("transitions:".to_string());
            for ((q, a), to) in &d.transitions {
                line(format!("{q} {} -> {to}", a.0));
            }
        }
        "nfa" => {
            let n = m.as_nfa().expect("model tag");
            for s in &n.states {
                check_name(s)?;
            }
            line(format!("model: nfa"));
            line(format!("states: {}", n.states.join(" ")));
            line(format!("input_alphabet: {}", n.input_alphabet));
            line(format!("start: {}", n.start));
            line(format!("accept: {}", join_set(&n.accept)));
            line("transitions:".to_string());
            for ((q, a), tos) in &n.transitions {
                let a = a.map(|s| s.0.to_string()).unwrap_or_else(|| EPS.to_string());
                for to in tos {
                    line(format!("{q} {a} -> {to}"));
                }
            }
        }
        "pda" => {
            let p = m.as_pda().expect("model tag");
            for s in &p.states {
                check_name(s)?;
            }
            line(format!("model: pda"));
            line(format!("states: {}", p.states.join(" ")));
            line(format!("input_alphabet: {}", p.input_alphabet));
            line(format!("stack_alphabet: {}", p.stack_alphabet));
            line(format!("start: {}", p.start));
            line(format!("accept: {}", join_set(&p.accept)));
            line(format!("acceptance: {}", p.acceptance.as_str()));
            line("transitions:".to_string());
            for t in &p.transitions {
                let read = t.input.map(|s| s.0.to_string()).unwrap_or_else(|| EPS.to_string());
                let push: String = if t.push.is_empty() {
                    EPS.to_string()
                } else {
                    t.push.iter().map(|s| s.0).collect()
                };
                if push == EPS && !t.push.is_empty() {
                    return Err(MachineError::invalid(
                        "push string spelling `eps` cannot be written unambiguously",
                    ));
                }
                line(format!("{} {read} {} -> {} {push}", t.from, t.pop.0, t.to));
            }
        }
        "tm" | "itm" => {
            let t = m.as_tape().expect("model tag");
            for s in &t.states {
                check_name(s)?;
            }
            line(format!("model: {}", m.model()));
            line(format!("states: {}", t.states.join(" ")));
            line(format!("input_alphabet: {}", t.input_alphabet));
            line(format!("tape_alphabet: {}", t.tape_alphabet));
            line(format!("blank: {}", t.blank.0));
            line(format!("start: {}", t.start));
            line(format!("accept: {}", join_set(&t.accept)));
            line("transitions:".to_string());
            for ((q, a), act) in &t.transitions {
                line(format!(
                    "{q} {} -> {} {} {}",
                    a.0,
                    act.to,
                    act.write.0,
                    act.movement.as_str()
                ));
            }
        }
        "composite" => {
            return Err(MachineError::invalid(
                "a composite spans several files; use write_machine",
            ))
        }
        other => unreachable!("unhandled model `{other}`"),
    }
    Ok(out)
}

fn join_set(set: &BTreeSet<String>) -> String {
    set.iter().cloned().collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

/// Loads a machine from a file, resolving composite part references
/// relative to the file's own directory.
pub fn load_machine(path: &Path) -> Result<MachineDescription, MachineError> {
    load_at_depth(path, 0)
}

const MAX_COMPOSITE_DEPTH: usize = 32;

fn load_at_depth(path: &Path, depth: usize) -> Result<MachineDescription, MachineError> {
    if depth > MAX_COMPOSITE_DEPTH {
        return Err(MachineError::Io {
            path: path.display().to_string(),
            message: "composite references nest too deeply (reference cycle?)".to_string(),
        });
    }
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let here = path.parent().unwrap_or_else(|| Path::new("."));
    match parse_amd(&text)? {
        AmdDocument::Leaf(m) => Ok(m),
        AmdDocument::Composite(c) => {
            let part = |rel: &str| load_at_depth(&here.join(rel), depth + 1);
            match c {
                CompositeRef::Pair { kind, first, second, predicate } => {
                    let a = part(&first)?;
                    let b = part(&second)?;
                    Ok(match kind {
                        PairKind::Seq => seq_compose(&a, &b)?,
                        PairKind::DisjPar => disj_parallel(&a, &b),
                        PairKind::ConjPar => conj_parallel(&a, &b),
                        gated => {
                            let p = part(predicate.as_deref().expect("checked by parse"))?;
                            match gated {
                                PairKind::PSeq => p_seq(&a, &p, &b),
                                PairKind::PConjPar => p_conj_parallel(&a, &p, &b),
                                PairKind::PDisjPar => p_disj_parallel(&a, &p, &b),
                                PairKind::PDisjSeq => p_disj_seq(&a, &p, &b),
                                _ => unreachable!("non-gated kinds handled above"),
                            }
                        }
                    })
                }
                CompositeRef::StreamSearch { inner, rounds } => {
                    weak_decider_from_computer(&part(&inner)?, rounds)
                }
                CompositeRef::EmissionIndex { inner, rounds, padded } => {
                    let m = part(&inner)?;
                    if padded {
                        padded_total(&m, rounds)
                    } else {
                        derived_total(&m, rounds)
                    }
                }
            }
        }
    }
}

/// Writes a machine to `path`. A leaf machine becomes a single file; a
/// composite is flattened into `path` plus one `<stem>.pN.amd` file per
/// part (numbered in stanza order, recursively), all in `path`'s directory.
/// Returns every file written, the root first.
pub fn write_machine(
    m: &MachineDescription,
    path: &Path,
) -> Result<Vec<PathBuf>, MachineError> {
    let mut written = Vec::new();
    write_at(m, path, &mut written)?;
    Ok(written)
}

fn write_at(
    m: &MachineDescription,
    path: &Path,
    written: &mut Vec<PathBuf>,
) -> Result<(), MachineError> {
    // Part names are derived from the stem, so the document can be written
    // before its parts and the listing comes out in pre-order.
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "machine".to_string());
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let part_name = |n: usize| format!("{stem}.p{n}.amd");

    let mut parts: Vec<(PathBuf, &MachineDescription)> = Vec::new();
    let doc = match m.as_composite() {
        None => serialize_machine(m)?,
        Some(spec) => {
            let reference = match spec {
                CompositeSpec::Pair { kind, a, b, predicate } => {
                    let first = part_name(1);
                    let second = part_name(2);
                    parts.push((dir.join(&first), a));
                    parts.push((dir.join(&second), b));
                    let predicate = predicate.as_ref().map(|p| {
                        let name = part_name(3);
                        parts.push((dir.join(&name), p));
                        name
                    });
                    CompositeRef::Pair { kind: *kind, first, second, predicate }
                }
                CompositeSpec::StreamSearch { inner, rounds } => {
                    let name = part_name(1);
                    parts.push((dir.join(&name), inner));
                    CompositeRef::StreamSearch { inner: name, rounds: *rounds }
                }
                CompositeSpec::EmissionIndex { inner, rounds, padded } => {
                    let name = part_name(1);
                    parts.push((dir.join(&name), inner));
                    CompositeRef::EmissionIndex {
                        inner: name,
                        rounds: *rounds,
                        padded: *padded,
                    }
                }
            };
            serialize_composite(&reference)
        }
    };
    fs::write(path, doc).map_err(|e| io_err(path, e))?;
    written.push(path.to_path_buf());
    for (part_path, part) in parts {
        write_at(part, &part_path, written)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Emission rendering
// ---------------------------------------------------------------------------

/// Renders one enumeration emission. The default form is the output word
/// followed by the emission marker (so the empty word renders as a bare
/// `*`); the verbose form is the full tab-separated record
/// `round`, `input index`, `halting step`, `word`.
pub fn format_emission(e: &Emission, verbose: bool) -> String {
    if verbose {
        format!("{}\t{}\t{}\t{}", e.round, e.input_index, e.halt_step, e.output)
    } else {
        format!("{}*", e.output)
    }
}

/// Parses one word token: `eps` is the empty word, anything else is taken
/// letter by letter. Used by word lists in set files and on command lines.
pub fn parse_word(tok: &str) -> Word {
    if tok == EPS {
        Word::parse("")
    } else {
        Word::parse(tok)
    }
}
