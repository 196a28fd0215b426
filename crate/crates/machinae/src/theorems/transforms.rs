//! Machines built from machines: the constructive side of the mode
//! hierarchy.
//!
//! Every function here takes one or two machines working in some mode and
//! wires up, with the pair combinators, a composite working in another
//! mode. The constructions are uniform — nothing inspects the given
//! machines beyond their alphabets — so each doubles as an effective proof
//! that the source mode is at least as strong as the target mode.
//!
//! The naming convention is `TARGET_from_SOURCE`: for instance
//! [`computer_from_weak_decider`] turns a machine that indicates membership
//! into one that computes the indicated set. The search-based directions
//! ([`weak_decider_from_computer`] and friends) take a `rounds` parameter —
//! how far the embedded output stream is unrolled — because a composite
//! machine must be a finite description; the resulting machine is faithful
//! on every word the source reaches within that many rounds.

use crate::combinators::{
    comp_predicate, constant, disj_parallel, p_conj_parallel, p_disj_seq, p_seq, rewriting,
    seq_compose,
};
use crate::error::MachineError;
use crate::machine::{CompositeSpec, MachineDescription};
use crate::word::{Alphabet, Symbol, Word, RESERVED};

/// The symbols of `a` a machine may read back as input: everything except
/// the plumbing symbols, which never survive into a produced word's
/// interior meaningfully but do appear in tape alphabets.
fn readable(a: &Alphabet) -> Result<Alphabet, MachineError> {
    let symbols: Vec<Symbol> = a
        .symbols()
        .iter()
        .copied()
        .filter(|s| !RESERVED.contains(&s.0))
        .collect();
    Alphabet::from_symbols(symbols)
}

fn ones() -> Alphabet {
    Alphabet::new_input("1").expect("'1' is not reserved")
}

fn one() -> Word {
    Word::parse("1")
}

fn zero() -> Word {
    Word::parse("0")
}

fn require_streamable(m: &MachineDescription, role: &str) -> Result<(), MachineError> {
    if matches!(m.model(), "dfa" | "nfa" | "pda") {
        return Err(MachineError::WrongModel {
            expected: format!("tm, itm, or composite as the {role}"),
            found: m.model().to_string(),
        });
    }
    Ok(())
}

/// Upgrades a weak decider of X into a computer of X: members are echoed
/// back unchanged, everything else is left unanswered.
///
/// The weak decider runs first. When it halts — and it only halts on
/// members — a gate that fails on every answer routes the composite to an
/// identity machine over the *original* input. On non-members the weak
/// decider stays silent, and so does the composite. Overhead on a member
/// `u`: about 2|u| plus the answer length.
pub fn computer_from_weak_decider(
    w: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    let echo = rewriting(&w.input_alphabet())?;
    let never = constant(&readable(&w.output_alphabet())?, Some(&zero()))?;
    Ok(p_disj_seq(w, &never, &echo))
}

/// Turns an acceptor of X into a weak decider of X: acceptance, whatever
/// word it produced, is normalised to the answer `1`.
pub fn weak_decider_from_acceptor(
    a: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    let normalise = constant(&readable(&a.output_alphabet())?, Some(&one()))?;
    seq_compose(&normalise, a)
}

/// Turns an acceptor of X into a computer of X, by chaining
/// [`weak_decider_from_acceptor`] and [`computer_from_weak_decider`].
pub fn computer_from_acceptor(
    a: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    computer_from_weak_decider(&weak_decider_from_acceptor(a)?)
}

/// Turns a weak decider (or any machine whose `1`-answers mark X, such as a
/// total decider) into an acceptor of X: the answer `1` is let through and
/// every other answer is silenced by falling back to a machine that never
/// halts.
pub fn acceptor_from_weak_decider(
    w: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    let gate = comp_predicate(&one(), &w.output_alphabet().union(&ones()))?;
    let dead = constant(&w.input_alphabet(), None)?;
    Ok(p_disj_seq(w, &gate, &dead))
}

/// Combines a weak decider of X and a weak decider of the complement of X
/// into a total decider of X: both run in parallel on the input, each with
/// its answer normalised (`1` for the member side, `0` for the complement
/// side), and the first to finish answers. On any word in the domain
/// exactly one side halts, so the race is well-defined.
pub fn decider_from_weak_and_co(
    w: &MachineDescription,
    c: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    let yes = seq_compose(&constant(&readable(&w.output_alphabet())?, Some(&one()))?, w)?;
    let no = seq_compose(&constant(&readable(&c.output_alphabet())?, Some(&zero()))?, c)?;
    Ok(disj_parallel(&yes, &no))
}

/// Turns a computer into a weak decider of its *range*: the composite reads
/// a word `u`, runs the computer's output stream, and halts with `1` as
/// soon as some stream entry equals `u`. Words outside the range reached
/// within `rounds` stay unanswered.
///
/// Only tape machines have an output stream, so automata are rejected.
pub fn weak_decider_from_computer(
    t: &MachineDescription,
    rounds: u64,
) -> Result<MachineDescription, MachineError> {
    require_streamable(t, "streamed machine")?;
    Ok(MachineDescription::composite(CompositeSpec::StreamSearch {
        inner: Box::new(t.clone()),
        rounds,
    }))
}

/// Turns a computer into an acceptor of its range. The construction is the
/// same stream search as [`weak_decider_from_computer`] — a machine that
/// halts exactly on range members is already an acceptor of the range; only
/// the reading of its behaviour differs.
pub fn acceptor_from_computer(
    t: &MachineDescription,
    rounds: u64,
) -> Result<MachineDescription, MachineError> {
    weak_decider_from_computer(t, rounds)
}

/// Combines a computer of X and a computer of the complement of X into a
/// total decider of X: two stream searches race, one tagged to answer `1`
/// when the input shows up in the first machine's range, the other tagged
/// to answer `0` for the second machine's range. When the two ranges truly
/// partition the domain, exactly one search can ever finish on each word.
pub fn decider_from_computers(
    t_x: &MachineDescription,
    t_cx: &MachineDescription,
    rounds: u64,
) -> Result<MachineDescription, MachineError> {
    let yes = seq_compose(
        &constant(&ones(), Some(&one()))?,
        &weak_decider_from_computer(t_x, rounds)?,
    )?;
    let no = seq_compose(
        &constant(&ones(), Some(&zero()))?,
        &weak_decider_from_computer(t_cx, rounds)?,
    )?;
    Ok(disj_parallel(&yes, &no))
}

/// Combines an acceptor of X and an acceptor of the complement of X into a
/// total decider of X, by normalising both to weak deciders and racing
/// them with [`decider_from_weak_and_co`].
pub fn decider_from_acceptors(
    a_x: &MachineDescription,
    a_cx: &MachineDescription,
) -> Result<MachineDescription, MachineError> {
    decider_from_weak_and_co(
        &weak_decider_from_acceptor(a_x)?,
        &weak_decider_from_acceptor(a_cx)?,
    )
}

/// The echo filter: from a machine `m` and a target answer, builds a
/// machine that computes `{u : m(u) = target}` — it returns `u` itself
/// exactly when `m`'s answer on `u` is the target, and stays silent
/// otherwise.
///
/// Applied to a total decider with targets `1` and `0`, this splits the
/// decider into computers of the decided set and of its complement. The
/// inner gate matters: answers other than the target must vanish rather
/// than surface as composite output, so `m` is first wrapped in a gated
/// sequence that wedges on every non-target answer, and only then does the
/// outer gate release the original input.
pub fn echo_filter(
    m: &MachineDescription,
    target: &Word,
) -> Result<MachineDescription, MachineError> {
    let out = readable(&m.output_alphabet())?;
    let gate = comp_predicate(target, &out)?;
    let keep = p_seq(&rewriting(&out)?, &gate, m);
    let echo = rewriting(&m.input_alphabet())?;
    Ok(p_conj_parallel(&echo, &gate, &keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::{run, RunStatus};
    use crate::modes::{accepts, computable_set, decides, weakly_decides, Acceptance};
    use crate::word::BoundedDomain;
    use crate::zoo::{
        even_length_acceptor, even_zeros_dfa, letter_parity_dfa, unary_even_decider,
    };
    use std::collections::BTreeSet;

    const BUDGET: u64 = 10_000;

    fn unary(max: usize) -> BoundedDomain {
        BoundedDomain::new(Alphabet::new_input("1").unwrap(), max)
    }

    fn evens(d: &BoundedDomain) -> BTreeSet<Word> {
        d.words().filter(|w| w.len() % 2 == 0).collect()
    }

    fn odds(d: &BoundedDomain) -> BTreeSet<Word> {
        d.words().filter(|w| w.len() % 2 == 1).collect()
    }

    #[test]
    fn the_echo_filter_computes_the_target_preimage() {
        let d = unary(7);
        let decider = unary_even_decider();
        let members = echo_filter(&decider, &one()).unwrap();
        let rest = echo_filter(&decider, &zero()).unwrap();
        assert_eq!(computable_set(&members, &d, BUDGET).unwrap(), evens(&d));
        assert_eq!(computable_set(&rest, &d, BUDGET).unwrap(), odds(&d));
        // Members come back verbatim, not as some encoding of them.
        let w = Word::parse("1111");
        assert_eq!(
            run(&members, &w, BUDGET).unwrap().status,
            RunStatus::Produced(w.clone())
        );
        assert_eq!(
            run(&rest, &w, BUDGET).unwrap().status,
            RunStatus::Exhausted
        );
    }

    #[test]
    fn the_echo_filter_rejects_unwritable_targets() {
        let m = crate::combinators::rewriting(&Alphabet::new_input("ab").unwrap()).unwrap();
        assert!(matches!(
            echo_filter(&m, &one()),
            Err(MachineError::SymbolNotInAlphabet { symbol: '1', .. })
        ));
    }

    #[test]
    fn a_weak_decider_upgrades_to_a_computer_of_its_set() {
        let d = unary(7);
        let weak = weak_decider_from_acceptor(&even_length_acceptor()).unwrap();
        assert!(weakly_decides(&weak, &evens(&d), &d, BUDGET).unwrap().holds);

        let comp = computer_from_weak_decider(&weak).unwrap();
        assert_eq!(computable_set(&comp, &d, BUDGET).unwrap(), evens(&d));
        for u in d.words() {
            let expected = if u.len() % 2 == 0 {
                RunStatus::Produced(u.clone())
            } else {
                RunStatus::Exhausted
            };
            assert_eq!(run(&comp, &u, BUDGET).unwrap().status, expected, "on {u}");
        }
    }

    #[test]
    fn an_acceptor_flows_through_to_a_computer() {
        // A tape-machine acceptor…
        let d = unary(7);
        let comp = computer_from_acceptor(&even_length_acceptor()).unwrap();
        assert_eq!(computable_set(&comp, &d, BUDGET).unwrap(), evens(&d));

        // …and a finite automaton both fit the same constructions.
        let bits = BoundedDomain::new(Alphabet::new_input("01").unwrap(), 6);
        let even0: BTreeSet<Word> = bits
            .words()
            .filter(|w| w.symbols().iter().filter(|s| s.0 == '0').count() % 2 == 0)
            .collect();
        let weak = weak_decider_from_acceptor(&even_zeros_dfa()).unwrap();
        assert!(weakly_decides(&weak, &even0, &bits, BUDGET).unwrap().holds);
        let comp = computer_from_acceptor(&even_zeros_dfa()).unwrap();
        assert_eq!(computable_set(&comp, &bits, BUDGET).unwrap(), even0);
    }

    #[test]
    fn gating_a_total_decider_yields_an_acceptor_of_its_yes_set() {
        let d = unary(7);
        let acceptor = acceptor_from_weak_decider(&unary_even_decider()).unwrap();
        for u in d.words() {
            let expected = if u.len() % 2 == 0 {
                Acceptance::Accepted
            } else {
                Acceptance::NotWithinBudget
            };
            assert_eq!(accepts(&acceptor, &u, BUDGET).unwrap(), expected, "on {u}");
        }
    }

    #[test]
    fn weak_and_co_deciders_race_to_a_total_decider() {
        let d = unary(7);
        let decider = unary_even_decider();
        let weak = weak_decider_from_acceptor(&even_length_acceptor()).unwrap();
        // A codecider of the evens: gate the total decider to its 0-answers.
        let co = p_seq(
            &constant(&readable(&decider.output_alphabet()).unwrap(), Some(&one())).unwrap(),
            &comp_predicate(&zero(), &decider.output_alphabet()).unwrap(),
            &decider,
        );
        let total = decider_from_weak_and_co(&weak, &co).unwrap();
        assert!(decides(&total, &evens(&d), &d, BUDGET).unwrap().holds);

        // With the member-side decider on both lanes nobody ever answers 0,
        // and the verdict pins the first unanswered word.
        let lame = decider_from_weak_and_co(&weak, &weak).unwrap();
        let verdict = decides(&lame, &evens(&d), &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().input, Word::parse("1"));
    }

    #[test]
    fn a_computer_feeds_the_search_based_weak_decider() {
        let d = unary(7);
        let computer = echo_filter(&unary_even_decider(), &one()).unwrap();
        let weak = weak_decider_from_computer(&computer, 24).unwrap();
        assert!(weakly_decides(&weak, &evens(&d), &d, BUDGET).unwrap().holds);

        let acceptor = acceptor_from_computer(&computer, 24).unwrap();
        for u in d.words() {
            let expected = if u.len() % 2 == 0 {
                Acceptance::Accepted
            } else {
                Acceptance::NotWithinBudget
            };
            assert_eq!(accepts(&acceptor, &u, BUDGET).unwrap(), expected, "on {u}");
        }

        assert!(matches!(
            weak_decider_from_computer(&even_zeros_dfa(), 8),
            Err(MachineError::WrongModel { .. })
        ));
    }

    #[test]
    fn complementary_computers_race_to_a_total_decider() {
        let d = unary(7);
        let decider = unary_even_decider();
        let yes = echo_filter(&decider, &one()).unwrap();
        let no = echo_filter(&decider, &zero()).unwrap();
        let rebuilt = decider_from_computers(&yes, &no, 48).unwrap();
        assert!(decides(&rebuilt, &evens(&d), &d, BUDGET).unwrap().holds);
    }

    #[test]
    fn overlapping_ranges_spoil_the_computer_race() {
        // Both lanes compute the full domain, so the 1-lane wins every tie
        // and odd words get the wrong answer.
        let d = unary(5);
        let all = rewriting(&Alphabet::new_input("1").unwrap()).unwrap();
        let broken = decider_from_computers(&all, &all, 16).unwrap();
        let verdict = decides(&broken, &evens(&d), &d, BUDGET).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.witness.unwrap();
        assert_eq!(witness.input, Word::parse("1"));
    }

    #[test]
    fn complementary_acceptors_decide_even_with_automata() {
        let ab = BoundedDomain::new(Alphabet::new_input("ab").unwrap(), 6);
        let even_as: BTreeSet<Word> = ab
            .words()
            .filter(|w| w.symbols().iter().filter(|s| s.0 == 'a').count() % 2 == 0)
            .collect();
        let total =
            decider_from_acceptors(&letter_parity_dfa(true), &letter_parity_dfa(false)).unwrap();
        assert!(decides(&total, &even_as, &ab, BUDGET).unwrap().holds);
    }
}
