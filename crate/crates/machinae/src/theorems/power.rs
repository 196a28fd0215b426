//! Comparing whole classes of machines by what their members can do.
//!
//! A [`ClassDescriptor`] is a finite stand-in for an infinite machine
//! class: a corpus of member machines, the composition disciplines the
//! class is closed under, and optional per-length resource bounds. For a
//! battery of named languages, [`power_report`] asks of each class and
//! each language: does some member (or some one-step composite licensed by
//! the closure list) compute it, accept it, weakly decide it, codecide it,
//! decide it? Classes are then compared pairwise by inclusion of their
//! attainments, so "strictly more powerful" always comes with a concrete
//! witness — a language and a mode one class reaches and the other does
//! not.
//!
//! Corpus flags are existence proofs, not impossibility proofs: a false
//! flag says no listed member or licensed composite worked, not that none
//! could. For deterministic finite automata the gap is closable:
//! [`search_dfa_agreeing`] exhaustively decides whether *any* automaton
//! with at most a given number of states matches a set over a bounded
//! domain, so a negative there is a certificate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::MachineError;
use crate::machine::{DfaSpec, MachineDescription, PairKind};
use crate::modes::{decides_with, indicates_with, Mode, ModeObserver};
use crate::theorems::transforms::{
    acceptor_from_weak_decider, computer_from_weak_decider, echo_filter,
    weak_decider_from_acceptor,
};
use crate::word::{Alphabet, BoundedDomain, Symbol, Word};

/// A machine class, described by example: a corpus of members, the pair
/// disciplines the class is closed under, and optional resource bounds
/// that every run by a member must respect.
#[derive(Debug, Clone)]
pub struct ClassDescriptor {
    pub name: String,
    admitted: BTreeSet<&'static str>,
    pub members: Vec<MachineDescription>,
    pub constructions: Vec<PairKind>,
    pub step_bound: Option<fn(u64) -> u64>,
    pub cell_bound: Option<fn(u64) -> u64>,
}

impl ClassDescriptor {
    /// A class with the given member corpus. Every member's model must be
    /// one of `admitted` (such as `"dfa"` or `"tm"`); this is what makes
    /// the descriptor describe a class rather than a grab-bag.
    pub fn new(
        name: impl Into<String>,
        admitted: &[&'static str],
        members: Vec<MachineDescription>,
    ) -> Result<ClassDescriptor, MachineError> {
        let admitted: BTreeSet<&'static str> = admitted.iter().copied().collect();
        for m in &members {
            if !admitted.contains(m.model()) {
                return Err(MachineError::WrongModel {
                    expected: format!("one of {admitted:?}"),
                    found: m.model().to_string(),
                });
            }
        }
        Ok(ClassDescriptor {
            name: name.into(),
            admitted,
            members,
            constructions: Vec::new(),
            step_bound: None,
            cell_bound: None,
        })
    }

    /// Declares the pair disciplines the class is closed under, licensing
    /// the derived candidates listed in [`ClassDescriptor::candidates`].
    pub fn closed_under(mut self, kinds: &[PairKind]) -> ClassDescriptor {
        self.constructions = kinds.to_vec();
        self
    }

    pub fn admits(&self, model: &str) -> bool {
        self.admitted.contains(model)
    }

    /// The machines the report may try for this class: the corpus itself
    /// plus, for each member, the standard one-step composites licensed by
    /// the declared closure disciplines — answer normalisation under
    /// sequencing, answer gates under gated sequencing, echo constructions
    /// under fallback and gated conjunction. Composites that fail to build
    /// (alphabet mismatches, unwritable targets) are skipped; they simply
    /// do not exist for that member.
    pub fn candidates(&self) -> Vec<MachineDescription> {
        let has = |k: PairKind| self.constructions.contains(&k);
        let mut pool = self.members.clone();
        let one = Word::parse("1");
        let zero = Word::parse("0");
        for m in &self.members {
            if has(PairKind::Seq) {
                pool.extend(weak_decider_from_acceptor(m).ok());
            }
            if has(PairKind::PSeq) {
                pool.extend(indicator_gate(m, &one));
                pool.extend(indicator_gate(m, &zero));
            }
            if has(PairKind::PDisjSeq) {
                pool.extend(computer_from_weak_decider(m).ok());
                pool.extend(acceptor_from_weak_decider(m).ok());
            }
            if has(PairKind::PSeq) && has(PairKind::PConjPar) {
                pool.extend(echo_filter(m, &one).ok());
                pool.extend(echo_filter(m, &zero).ok());
            }
        }
        pool
    }

    fn observer(&self, m: &MachineDescription, budget: u64) -> ModeObserver {
        ModeObserver::bounded(m, budget, self.step_bound, self.cell_bound)
    }
}

/// A machine producing `1` exactly where `m`'s answer equals `answer`, and
/// nothing anywhere else — the gate that reads a total decider as a weak
/// decider (answer `1`) or as a codecider (answer `0`).
fn indicator_gate(m: &MachineDescription, answer: &Word) -> Option<MachineDescription> {
    use crate::combinators::{comp_predicate, constant, p_seq};
    let out = m.output_alphabet().union(&Alphabet::new_input("01").ok()?);
    let gate = comp_predicate(answer, &out).ok()?;
    // The tag must be able to read any answer the gate lets through.
    let readable: Vec<_> = out
        .symbols()
        .iter()
        .copied()
        .filter(|s| !crate::word::RESERVED.contains(&s.0))
        .collect();
    let tag = constant(
        &Alphabet::from_symbols(readable).ok()?,
        Some(&Word::parse("1")),
    )
    .ok()?;
    Some(p_seq(&tag, &gate, m))
}

/// Which of the five operating modes a class attains on one language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ModeFlags {
    pub computable: bool,
    pub acceptable: bool,
    pub weakly_decidable: bool,
    pub codecidable: bool,
    pub decidable: bool,
}

impl ModeFlags {
    pub fn attains(&self, mode: Mode) -> bool {
        match mode {
            Mode::Compute | Mode::Enumerate => self.computable,
            Mode::Accept => self.acceptable,
            Mode::WeakDecide => self.weakly_decidable,
            Mode::Codecide => self.codecidable,
            Mode::Decide => self.decidable,
        }
    }

    /// Five-character cell: `c a w k d`, each `+` or `-`.
    fn cell(&self) -> String {
        [
            self.computable,
            self.acceptable,
            self.weakly_decidable,
            self.codecidable,
            self.decidable,
        ]
        .iter()
        .map(|&b| if b { '+' } else { '-' })
        .collect()
    }
}

const FLAG_MODES: [Mode; 5] = [
    Mode::Compute,
    Mode::Accept,
    Mode::WeakDecide,
    Mode::Codecide,
    Mode::Decide,
];

/// The outcome of comparing two classes attainment-by-attainment.
/// `left_only` is an attainment (formatted `language (mode)`) the left
/// class has and the right lacks, and symmetrically for `right_only`; the
/// four combinations of presence give the four possible [`order`] values.
///
/// [`order`]: ClassComparison::order
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassComparison {
    pub left: String,
    pub right: String,
    pub left_only: Option<String>,
    pub right_only: Option<String>,
}

impl ClassComparison {
    pub fn order(&self) -> &'static str {
        match (&self.left_only, &self.right_only) {
            (None, None) => "equal",
            (None, Some(_)) => "strictly-below",
            (Some(_), None) => "strictly-above",
            (Some(_), Some(_)) => "incomparable",
        }
    }
}

/// Per-language mode flags for every class, plus all pairwise comparisons.
#[derive(Debug, Clone)]
pub struct PowerReport {
    pub classes: Vec<String>,
    pub rows: Vec<(String, Vec<ModeFlags>)>,
    pub comparisons: Vec<ClassComparison>,
}

impl fmt::Display for PowerReport {
    /// Tab-separated: a header naming each class's flag block (the block
    /// reads `computable acceptable weakly-decidable codecidable decidable`
    /// as `+`/`-`), one row per battery language, then one `compare` line
    /// per class pair.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "language")?;
        for name in &self.classes {
            write!(f, "\t{name} [cawkd]")?;
        }
        writeln!(f)?;
        for (language, flags) in &self.rows {
            write!(f, "{language}")?;
            for fl in flags {
                write!(f, "\t{}", fl.cell())?;
            }
            writeln!(f)?;
        }
        for c in &self.comparisons {
            let witness = c
                .left_only
                .as_deref()
                .or(c.right_only.as_deref())
                .unwrap_or("-");
            writeln!(f, "compare\t{}\t{}\t{}\t{}", c.left, c.right, c.order(), witness)?;
        }
        Ok(())
    }
}

fn class_flags(
    c: &ClassDescriptor,
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    budget: u64,
) -> Result<ModeFlags, MachineError> {
    let members: BTreeSet<Word> = d.words().filter(|u| x.contains(u)).collect();
    let complement: BTreeSet<Word> = d.words().filter(|u| !x.contains(u)).collect();
    let mut flags = ModeFlags::default();
    for m in c.candidates() {
        let obs = c.observer(&m, budget);
        if !flags.computable {
            flags.computable = obs.range(d)? == members;
        }
        if !flags.acceptable {
            flags.acceptable = obs.accepted_set(d)? == members;
        }
        if !flags.weakly_decidable {
            flags.weakly_decidable =
                indicates_with(Mode::WeakDecide, &obs, &members, d)?.holds;
        }
        if !flags.codecidable {
            flags.codecidable = indicates_with(Mode::Codecide, &obs, &complement, d)?.holds;
        }
        if !flags.decidable {
            flags.decidable = decides_with(&obs, x, d)?.holds;
        }
    }
    Ok(flags)
}

/// Evaluates every class against every battery language and compares the
/// classes pairwise by inclusion of attainments.
///
/// Battery sets are taken relative to the domain: only their words inside
/// `d` matter. The budget caps each individual run; a class with resource
/// bounds is additionally held to them on every run.
pub fn power_report(
    classes: &[ClassDescriptor],
    battery: &[(String, BTreeSet<Word>)],
    d: &BoundedDomain,
    budget: u64,
) -> Result<PowerReport, MachineError> {
    let mut rows = Vec::new();
    for (language, x) in battery {
        let mut flags = Vec::new();
        for c in classes {
            flags.push(class_flags(c, x, d, budget)?);
        }
        rows.push((language.clone(), flags));
    }

    let first_exclusive = |has: usize, lacks: usize| -> Option<String> {
        for (language, flags) in &rows {
            for mode in FLAG_MODES {
                if flags[has].attains(mode) && !flags[lacks].attains(mode) {
                    return Some(format!("{language} ({mode})"));
                }
            }
        }
        None
    };

    let mut comparisons = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            comparisons.push(ClassComparison {
                left: classes[i].name.clone(),
                right: classes[j].name.clone(),
                left_only: first_exclusive(i, j),
                right_only: first_exclusive(j, i),
            });
        }
    }

    Ok(PowerReport {
        classes: classes.iter().map(|c| c.name.clone()).collect(),
        rows,
        comparisons,
    })
}

/// The same class, now held to per-length resource bounds: every run by a
/// member must finish within `step_bound(|u|)` steps (and the flat budget)
/// and touch at most `cell_bound(|u|)` tape cells, or it counts as having
/// produced nothing.
pub fn resource_bounded_class(
    base: &ClassDescriptor,
    step_bound: Option<fn(u64) -> u64>,
    cell_bound: Option<fn(u64) -> u64>,
) -> ClassDescriptor {
    ClassDescriptor {
        step_bound,
        cell_bound,
        ..base.clone()
    }
}

/// Exhaustively searches for a deterministic finite automaton with at most
/// `max_states` states whose accepted set agrees with `x` on every word of
/// the domain. Returns such an automaton if one exists and `None` if none
/// does — and because the search is exhaustive over canonical state
/// assignments, `None` is a proof for the bound, not a failed heuristic.
///
/// The search folds the complete prefix tree of the domain into at most
/// `max_states` states. Nodes are processed in shortlex order; each node's
/// state is forced by its parent's transition when that is already
/// assigned, and otherwise branches over the existing states plus at most
/// one fresh state (the canonical-numbering rule that prunes isomorphic
/// assignments). A precomputed pairwise incompatibility relation — label
/// mismatch, propagated upward through children — rejects most foldings
/// early.
pub fn search_dfa_agreeing(
    x: &BTreeSet<Word>,
    d: &BoundedDomain,
    max_states: usize,
) -> Option<MachineDescription> {
    if max_states == 0 {
        return None;
    }
    let k = d.alphabet().len();
    let n_nodes = d.len() as usize;
    assert!(
        n_nodes <= 1 << 13,
        "the exhaustive automaton search is meant for small bounded domains"
    );

    // Node i is the i-th domain word in shortlex order; the prefix tree is
    // then heap-numbered: node i's child along symbol j is i*k + j + 1.
    let labels: Vec<bool> = d.words().map(|w| x.contains(&w)).collect();

    let mut incompat = BitMatrix::new(n_nodes);
    for i in 0..n_nodes {
        for j in (i + 1)..n_nodes {
            if labels[i] != labels[j] {
                incompat.set(i, j);
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n_nodes {
            for j in (i + 1)..n_nodes {
                if incompat.get(i, j) {
                    continue;
                }
                for s in 0..k {
                    let (ci, cj) = (i * k + s + 1, j * k + s + 1);
                    if ci < n_nodes && cj < n_nodes && incompat.get(ci, cj) {
                        incompat.set(i, j);
                        changed = true;
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut search = FoldSearch {
        k,
        n_nodes,
        max_states: max_states.min(n_nodes),
        labels,
        incompat,
        accept: Vec::new(),
        delta: Vec::new(),
        members: Vec::new(),
        node_state: vec![0; n_nodes],
    };
    search.accept.push(None);
    search.delta.push(vec![None; k]);
    search.members.push(Vec::new());
    if !search.place(0, 0) {
        return None;
    }
    Some(search.build(d))
}

struct BitMatrix {
    n: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> BitMatrix {
        BitMatrix {
            n,
            bits: vec![0; (n * n + 63) / 64],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        for idx in [i * self.n + j, j * self.n + i] {
            self.bits[idx / 64] |= 1 << (idx % 64);
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        let idx = i * self.n + j;
        self.bits[idx / 64] & (1 << (idx % 64)) != 0
    }
}

struct FoldSearch {
    k: usize,
    n_nodes: usize,
    max_states: usize,
    labels: Vec<bool>,
    incompat: BitMatrix,
    accept: Vec<Option<bool>>,
    delta: Vec<Vec<Option<usize>>>,
    members: Vec<Vec<usize>>,
    node_state: Vec<usize>,
}

impl FoldSearch {
    /// Folds `node` into state `q` and continues with the next node,
    /// undoing the fold on failure.
    fn place(&mut self, node: usize, q: usize) -> bool {
        let label = self.labels[node];
        match self.accept[q] {
            Some(b) if b != label => return false,
            _ => {}
        }
        if self.members[q].iter().any(|&m| self.incompat.get(node, m)) {
            return false;
        }
        let fresh_accept = self.accept[q].is_none();
        if fresh_accept {
            self.accept[q] = Some(label);
        }
        self.members[q].push(node);
        self.node_state[node] = q;
        if self.assign(node + 1) {
            return true;
        }
        self.members[q].pop();
        if fresh_accept {
            self.accept[q] = None;
        }
        false
    }

    fn assign(&mut self, node: usize) -> bool {
        if node == self.n_nodes {
            return true;
        }
        let parent = self.node_state[(node - 1) / self.k];
        let sym = (node - 1) % self.k;
        if let Some(q) = self.delta[parent][sym] {
            return self.place(node, q);
        }
        let known = self.accept.len();
        for q in 0..known {
            self.delta[parent][sym] = Some(q);
            if self.place(node, q) {
                return true;
            }
        }
        if known < self.max_states {
            self.accept.push(None);
            self.delta.push(vec![None; self.k]);
            self.members.push(Vec::new());
            self.delta[parent][sym] = Some(known);
            if self.place(node, known) {
                return true;
            }
            self.accept.pop();
            self.delta.pop();
            self.members.pop();
        }
        self.delta[parent][sym] = None;
        false
    }

    fn build(&self, d: &BoundedDomain) -> MachineDescription {
        let name = |q: usize| format!("q{q}");
        let states: Vec<String> = (0..self.accept.len()).map(name).collect();
        let mut transitions = std::collections::BTreeMap::new();
        for (q, row) in self.delta.iter().enumerate() {
            for (s, target) in row.iter().enumerate() {
                let sym: Symbol = d.alphabet().symbols()[s];
                // Transitions never exercised by any domain word are free;
                // point them at the start state to keep the table total.
                transitions.insert((name(q), sym), name(target.unwrap_or(0)));
            }
        }
        let accept: BTreeSet<String> = self
            .accept
            .iter()
            .enumerate()
            .filter(|(_, a)| **a == Some(true))
            .map(|(q, _)| name(q))
            .collect();
        MachineDescription::dfa(DfaSpec {
            states,
            input_alphabet: d.alphabet().clone(),
            start: name(0),
            accept,
            transitions,
        })
        .expect("the folded table is total and well-formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::accepts;
    use crate::modes::Acceptance;
    use crate::zoo::{
        balanced_blocks_pda, even_length_acceptor, letter_parity_dfa, unary_even_decider,
        unbalanced_blocks_pda,
    };
    use crate::machine::PdaAcceptance;

    const BUDGET: u64 = 10_000;

    fn ab(max: usize) -> BoundedDomain {
        BoundedDomain::new(Alphabet::new_input("ab").unwrap(), max)
    }

    fn even_as(d: &BoundedDomain) -> BTreeSet<Word> {
        d.words()
            .filter(|w| w.symbols().iter().filter(|s| s.0 == 'a').count() % 2 == 0)
            .collect()
    }

    fn blocks(d: &BoundedDomain) -> BTreeSet<Word> {
        d.words()
            .filter(|w| {
                let s = w.to_string();
                let n = s.len() / 2;
                s.len() % 2 == 0 && s == format!("{}{}", "a".repeat(n), "b".repeat(n))
            })
            .collect()
    }

    #[test]
    fn the_search_finds_a_small_automaton_when_one_exists() {
        let d = ab(6);
        let x = even_as(&d);
        assert!(search_dfa_agreeing(&x, &d, 1).is_none());
        let found = search_dfa_agreeing(&x, &d, 2).expect("two states suffice for a parity");
        for u in d.words() {
            let expected = if x.contains(&u) {
                Acceptance::Accepted
            } else {
                Acceptance::NotWithinBudget
            };
            assert_eq!(accepts(&found, &u, BUDGET).unwrap(), expected, "on {u}");
        }
    }

    #[test]
    fn the_search_certifies_that_blocks_need_more_than_six_states() {
        let d = ab(8);
        let x = blocks(&d);
        assert!(search_dfa_agreeing(&x, &d, 6).is_none());
        // Sanity on the other side: with enough states the complete prefix
        // tree itself agrees, so the search must succeed.
        let found = search_dfa_agreeing(&x, &d, 24).expect("24 states are plenty on |w| ≤ 8");
        for u in d.words() {
            let expected = if x.contains(&u) {
                Acceptance::Accepted
            } else {
                Acceptance::NotWithinBudget
            };
            assert_eq!(accepts(&found, &u, BUDGET).unwrap(), expected, "on {u}");
        }
    }

    fn automata_classes() -> (ClassDescriptor, ClassDescriptor) {
        let dfa = ClassDescriptor::new(
            "finite-automata",
            &["dfa", "nfa"],
            vec![letter_parity_dfa(true), letter_parity_dfa(false)],
        )
        .unwrap();
        let pda = ClassDescriptor::new(
            "pushdown-automata",
            &["pda", "dfa", "nfa"],
            vec![
                balanced_blocks_pda(PdaAcceptance::FinalState),
                unbalanced_blocks_pda(),
                letter_parity_dfa(true),
                letter_parity_dfa(false),
            ],
        )
        .unwrap();
        (dfa, pda)
    }

    #[test]
    fn the_report_ranks_pushdown_strictly_above_finite() {
        let d = ab(6);
        let battery = vec![
            ("even-as".to_string(), even_as(&d)),
            ("blocks".to_string(), blocks(&d)),
        ];
        let (dfa, pda) = automata_classes();
        let report = power_report(&[dfa, pda], &battery, &d, BUDGET).unwrap();

        let row = |lang: &str| {
            report
                .rows
                .iter()
                .find(|(l, _)| l == lang)
                .map(|(_, f)| f.clone())
                .unwrap()
        };
        let even = row("even-as");
        assert!(even[0].acceptable && even[0].weakly_decidable && even[0].decidable);
        assert!(even[0].codecidable, "the odd-parity member covers the complement");
        assert!(!even[0].computable, "automata only ever output 1");
        let blocks_row = row("blocks");
        assert_eq!(blocks_row[0], ModeFlags::default(), "no finite member fits");
        assert!(blocks_row[1].acceptable && blocks_row[1].decidable);
        assert!(blocks_row[1].codecidable, "the complement automaton covers it");

        assert_eq!(report.comparisons.len(), 1);
        let cmp = &report.comparisons[0];
        assert_eq!(cmp.order(), "strictly-below");
        assert_eq!(cmp.left_only, None);
        assert!(cmp.right_only.as_deref().unwrap().starts_with("blocks"));
    }

    #[test]
    fn every_row_keeps_deciding_equal_to_weak_plus_co() {
        let d = ab(6);
        let battery = vec![
            ("even-as".to_string(), even_as(&d)),
            ("blocks".to_string(), blocks(&d)),
        ];
        let (dfa, pda) = automata_classes();
        let report = power_report(&[dfa, pda], &battery, &d, BUDGET).unwrap();
        for (language, flags) in &report.rows {
            for f in flags {
                assert_eq!(
                    f.decidable,
                    f.weakly_decidable && f.codecidable,
                    "on {language}"
                );
            }
        }
    }

    #[test]
    fn closure_constructions_turn_flags_on() {
        let unary = BoundedDomain::new(Alphabet::new_input("1").unwrap(), 6);
        let evens: BTreeSet<Word> = unary.words().filter(|w| w.len() % 2 == 0).collect();
        let battery = vec![("unary-evens".to_string(), evens)];

        let bare = ClassDescriptor::new(
            "deciders-bare",
            &["tm"],
            vec![unary_even_decider()],
        )
        .unwrap();
        let closed = bare.clone().closed_under(&[
            PairKind::Seq,
            PairKind::PSeq,
            PairKind::PConjPar,
            PairKind::PDisjSeq,
        ]);
        let closed = ClassDescriptor {
            name: "deciders-closed".to_string(),
            ..closed
        };

        let report = power_report(&[bare, closed], &battery, &unary, BUDGET).unwrap();
        let (_, flags) = &report.rows[0];
        // The bare decider answers everywhere, so it decides but neither
        // computes nor accepts the set, and its 0-answers spoil weakness.
        assert!(flags[0].decidable);
        assert!(!flags[0].computable && !flags[0].acceptable);
        assert!(!flags[0].weakly_decidable && !flags[0].codecidable);
        // Closure under the gated disciplines unlocks everything.
        assert_eq!(
            flags[1],
            ModeFlags {
                computable: true,
                acceptable: true,
                weakly_decidable: true,
                codecidable: true,
                decidable: true,
            }
        );
        assert_eq!(report.comparisons[0].order(), "strictly-below");
    }

    #[test]
    fn resource_bounds_are_enforced_per_length() {
        let bits = BoundedDomain::new(Alphabet::new_input("01").unwrap(), 4);
        let all: BTreeSet<Word> = bits.words().collect();
        let battery = vec![("everything".to_string(), all)];
        let echo = crate::combinators::rewriting(&Alphabet::new_input("01").unwrap()).unwrap();
        let base = ClassDescriptor::new("echoes", &["tm"], vec![echo]).unwrap();

        // The identity machine takes |u| + 1 steps and touches |u| + 1
        // cells, so those exact budgets pass and anything less fails.
        let roomy = resource_bounded_class(&base, Some(|n| n + 1), Some(|n| n + 1));
        let starved = resource_bounded_class(&base, Some(|n| n), None);
        let cramped = resource_bounded_class(&base, None, Some(|n| n));
        let report =
            power_report(&[roomy, starved, cramped], &battery, &bits, BUDGET).unwrap();
        let (_, flags) = &report.rows[0];
        assert!(flags[0].computable);
        assert!(!flags[1].computable);
        assert!(!flags[2].computable);
    }

    #[test]
    fn class_descriptors_reject_foreign_members() {
        let err = ClassDescriptor::new("finite", &["dfa"], vec![even_length_acceptor()]);
        assert!(matches!(err, Err(MachineError::WrongModel { .. })));
    }

    #[test]
    fn the_report_renders_as_a_tab_table() {
        let d = ab(4);
        let battery = vec![("even-as".to_string(), even_as(&d))];
        let dfa = ClassDescriptor::new(
            "finite-automata",
            &["dfa"],
            vec![letter_parity_dfa(true), letter_parity_dfa(false)],
        )
        .unwrap();
        let report = power_report(&[dfa], &battery, &d, BUDGET).unwrap();
        let text = report.to_string();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("language\tfinite-automata [cawkd]"));
        assert_eq!(lines.next(), Some("even-as\t-++++"));
        assert_eq!(lines.next(), None);
    }
}
