//! The derived layer: constructions that relate the operating modes to one
//! another, equivalence checks between machines, power comparisons between
//! whole classes of machines, and the lift from ordinary halting runs to
//! stabilising limit runs.
//!
//! The module splits by the kind of statement it makes effective:
//!
//! * [`transforms`] — "a machine in mode A yields a machine in mode B":
//!   uniform constructions between computers, acceptors, weak deciders,
//!   codeciders, and total deciders.
//! * [`equiv`] — "these two machines behave alike": behavioural equivalence
//!   over a bounded domain in any mode, and exact equivalence for finite
//!   automata with a shortest distinguishing witness.
//! * [`power`] — "this class of machines is at least as strong as that
//!   one": per-language mode flags for described classes, pairwise
//!   comparison, resource-bounded variants, and an exhaustive certificate
//!   that no small automaton matches a given set.
//! * [`limit`] — "whatever a halting machine does, a stabilising machine
//!   can do": the construction that re-expresses a halting computation as
//!   an inductive one whose readout settles on the verdict.

pub mod equiv;
pub mod limit;
pub mod power;
pub mod transforms;

pub use equiv::{dfa_equiv_exact, functional_equiv, DfaEquivalence};
pub use limit::limit_decider;
pub use power::{
    power_report, resource_bounded_class, search_dfa_agreeing, ClassComparison, ClassDescriptor,
    ModeFlags, PowerReport,
};
pub use transforms::{
    acceptor_from_computer, acceptor_from_weak_decider, computer_from_acceptor,
    computer_from_weak_decider, decider_from_acceptors, decider_from_computers,
    decider_from_weak_and_co, echo_filter, weak_decider_from_acceptor,
    weak_decider_from_computer,
};
