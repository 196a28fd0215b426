//! From halting runs to stabilising runs: whatever a halting machine
//! settles by stopping, a limit machine can settle by ceasing to change.
//!
//! [`limit_decider`] takes an ordinary halting machine `T` and builds a
//! limit machine whose readable output *stabilises* — on every input — to
//! a verdict about `T`: `1` when `T` halts on that input, `0` when it runs
//! forever or wedges. The lifted machine itself never halts and never
//! needs to: its answer is whatever its output has settled on once the
//! changes stop.
//!
//! The construction works on a single tape split into three zones:
//!
//! * cell 0 holds the developing answer,
//! * cell 1 is a gap that is never written, pinning the readable output to
//!   cell 0 alone (output reads up to the first blank), and
//! * cells 2… hold a simulation of `T`, conducted entirely in shadow
//!   copies of `T`'s tape symbols so the zone never contains a true blank
//!   and writes there stay invisible to the readout.
//!
//! A prologue shuttles the input two cells to the right (shadowing it on
//! the way), stamps the interim answer `0` into cell 0, and starts the
//! simulation. If `T` halts, a walk returns to cell 0 and flips the answer
//! to `1`, after which nothing ever changes again; if `T` runs forever,
//! the simulation churns invisibly beyond the gap and the `0` stands.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::MachineError;
use crate::machine::{MachineDescription, Move, TmAction, TmSpec};
use crate::word::{Alphabet, Symbol, RESERVED};

/// One shadow symbol per tape symbol of the simulated machine, disjoint
/// from that machine's own alphabet, the answer digits, and the plumbing.
fn shadow_map(t: &TmSpec) -> Result<BTreeMap<Symbol, Symbol>, MachineError> {
    let mut used: BTreeSet<char> = t.tape_alphabet.symbols().iter().map(|s| s.0).collect();
    used.insert('0');
    used.insert('1');
    used.extend(RESERVED);
    let mut pool = ('A'..='Z')
        .chain('a'..='z')
        .chain('2'..='9')
        .chain("@%+=:,;.!?$&()[]{}<>^~|".chars())
        .filter(move |c| !used.contains(c));
    t.tape_alphabet
        .symbols()
        .iter()
        .map(|&s| {
            let fresh = pool.next().ok_or_else(|| {
                MachineError::invalid("no spare symbols left to shadow the tape alphabet")
            })?;
            Ok((s, Symbol(fresh)))
        })
        .collect()
}

/// Lifts a halting machine to a limit machine that decides its halting
/// set: on every input, the lifted machine's readable output stabilises to
/// `1` if `t` halts on that input and to `0` if it never does (whether by
/// running forever or by wedging).
///
/// `t` must be a plain halting tape machine. One behavioural requirement
/// is not checkable from the description alone: `t` must never move its
/// head left of its starting cell, because the cells left of the simulation
/// zone hold the developing answer. Machines that only ever move right —
/// scanners, erasers, counters — satisfy this trivially.
pub fn limit_decider(t: &MachineDescription) -> Result<MachineDescription, MachineError> {
    if t.model() != "tm" {
        return Err(MachineError::WrongModel {
            expected: "tm".to_string(),
            found: t.model().to_string(),
        });
    }
    let spec = t.as_tape().expect("tm model carries a tape spec");
    let shadow = shadow_map(spec)?;
    let blank = Symbol('_');
    let zero = Symbol('0');
    let one = Symbol('1');

    let sim = |q: &str| format!("sim:{q}");
    let mut states: Vec<String> = ["begin", "seek", "grab", "ret1", "ret2", "stamp", "gap"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for s in spec.input_alphabet.symbols() {
        states.push(format!("lift:{s}"));
        states.push(format!("drop:{s}"));
    }
    for q in &spec.states {
        states.push(sim(q));
    }
    states.extend(["rewind", "sweep", "flip", "hold"].map(String::from));

    let mut tr: BTreeMap<(String, Symbol), TmAction> = BTreeMap::new();
    let mut add = |from: String, read: Symbol, to: String, write: Symbol, movement: Move| {
        tr.insert((from, read), TmAction { to, write, movement });
    };

    // Prologue: find the input's right end, then shuttle it two cells
    // rightward (rightmost symbol first), shadowing each symbol as it
    // lands. The source cell of each move and both cells passed over are
    // blank by then, so the carry states only ever read blanks.
    add("begin".into(), blank, "gap".into(), zero, Move::Right);
    for &x in spec.input_alphabet.symbols() {
        add("begin".into(), x, "seek".into(), x, Move::Right);
        add("seek".into(), x, "seek".into(), x, Move::Right);
        add("grab".into(), x, format!("lift:{x}"), blank, Move::Right);
        add(format!("lift:{x}"), blank, format!("drop:{x}"), blank, Move::Right);
        add(format!("drop:{x}"), blank, "ret1".into(), shadow[&x], Move::Left);
    }
    add("seek".into(), blank, "grab".into(), blank, Move::Left);
    add("grab".into(), blank, "stamp".into(), blank, Move::Right);
    add("ret1".into(), blank, "ret2".into(), blank, Move::Left);
    add("ret2".into(), blank, "grab".into(), blank, Move::Left);
    add("stamp".into(), blank, "gap".into(), zero, Move::Right);
    add("gap".into(), blank, sim(&spec.start), blank, Move::Right);

    if spec.accept.contains(&spec.start) {
        // The simulated machine halts before its first step, so the lifted
        // machine walks straight back and flips the answer.
        for &shadowed in shadow.values() {
            add(sim(&spec.start), shadowed, "sweep".into(), shadowed, Move::Left);
        }
        add(sim(&spec.start), blank, "sweep".into(), blank, Move::Left);
    } else {
        for ((q, read), action) in &spec.transitions {
            let to = if spec.accept.contains(&action.to) {
                "rewind".to_string()
            } else {
                sim(&action.to)
            };
            let write = shadow[&action.write];
            add(sim(q), shadow[read], to.clone(), write, action.movement);
            if *read == spec.blank {
                // The simulation zone's frontier is true blank; reading it
                // means the simulated head reads its own blank.
                add(sim(q), blank, to, write, action.movement);
            }
        }
    }

    // The walk home: skip any true blanks right of the simulation zone,
    // sweep left across the shadowed zone, cross the gap, flip the answer.
    add("rewind".into(), blank, "rewind".into(), blank, Move::Left);
    for &shadowed in shadow.values() {
        add("rewind".into(), shadowed, "sweep".into(), shadowed, Move::Left);
        add("sweep".into(), shadowed, "sweep".into(), shadowed, Move::Left);
    }
    add("sweep".into(), blank, "flip".into(), blank, Move::Left);
    add("flip".into(), zero, "hold".into(), one, Move::Stay);
    add("hold".into(), one, "hold".into(), one, Move::Stay);

    let mut tape = spec
        .input_alphabet
        .union(&Alphabet::new("_01").expect("fixed symbols"));
    tape = tape.union(
        &Alphabet::from_symbols(shadow.values().copied()).expect("shadow symbols are distinct"),
    );

    MachineDescription::itm(TmSpec {
        states,
        input_alphabet: spec.input_alphabet.clone(),
        tape_alphabet: tape,
        blank,
        start: "begin".to_string(),
        accept: BTreeSet::new(),
        transitions: tr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::{constant, rewriting};
    use crate::models::{itm_run_limit, LimitVerdict};
    use crate::word::{BoundedDomain, Word};
    use crate::zoo::{dawdler, even_length_acceptor, even_zeros_dfa, settling_writer, spinner};

    const BUDGET: u64 = 10_000;
    const WINDOW: u64 = 1_000;

    fn verdict(m: &MachineDescription, u: &Word) -> (String, LimitVerdict, u64) {
        let out = itm_run_limit(m, u, BUDGET, WINDOW).unwrap();
        (out.value.to_string(), out.verdict, out.stabilized_at)
    }

    #[test]
    fn halting_runs_stabilise_to_one() {
        let lifted = limit_decider(&rewriting(&Alphabet::new_input("01").unwrap()).unwrap()).unwrap();
        for u in BoundedDomain::new(Alphabet::new_input("01").unwrap(), 4).words() {
            let (value, v, at) = verdict(&lifted, &u);
            assert_eq!(value, "1", "on {u}");
            assert_eq!(v, LimitVerdict::Stable, "on {u}");
            assert!(at < 100, "stabilised late ({at}) on {u}");
        }
    }

    #[test]
    fn diverging_runs_stabilise_to_zero() {
        let lifted = limit_decider(&spinner()).unwrap();
        for n in 0..4 {
            let u = Word::parse(&"1".repeat(n));
            let (value, v, _) = verdict(&lifted, &u);
            assert_eq!(value, "0", "on {u}");
            assert_eq!(v, LimitVerdict::Stable, "on {u}");
        }
    }

    #[test]
    fn wedging_counts_as_never_halting() {
        let idle = constant(&Alphabet::new_input("01").unwrap(), None).unwrap();
        let lifted = limit_decider(&idle).unwrap();
        let (value, v, _) = verdict(&lifted, &Word::parse("10"));
        assert_eq!(value, "0");
        assert_eq!(v, LimitVerdict::Stable);
    }

    #[test]
    fn the_lift_decides_the_halting_set_of_a_partial_acceptor() {
        // The source halts exactly on even unary words; the lift turns that
        // silence/halt split into a total, stable 0/1 verdict.
        let lifted = limit_decider(&even_length_acceptor()).unwrap();
        for n in 0..=6 {
            let u = Word::parse(&"1".repeat(n));
            let (value, v, _) = verdict(&lifted, &u);
            assert_eq!(value, if n % 2 == 0 { "1" } else { "0" }, "on {u}");
            assert_eq!(v, LimitVerdict::Stable, "on {u}");
        }
    }

    #[test]
    fn machines_that_halt_on_the_spot_are_lifted_too() {
        let lifted = limit_decider(&dawdler(0)).unwrap();
        for n in 0..3 {
            let u = Word::parse(&"1".repeat(n));
            let (value, v, _) = verdict(&lifted, &u);
            assert_eq!(value, "1", "on {u}");
            assert_eq!(v, LimitVerdict::Stable, "on {u}");
        }
    }

    #[test]
    fn only_plain_halting_machines_can_be_lifted() {
        assert!(matches!(
            limit_decider(&even_zeros_dfa()),
            Err(MachineError::WrongModel { .. })
        ));
        assert!(matches!(
            limit_decider(&settling_writer()),
            Err(MachineError::WrongModel { .. })
        ));
    }
}
