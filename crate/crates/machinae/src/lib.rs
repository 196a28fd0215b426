//! A workbench for machines that compute, decide, accept — or only settle
//! on an answer in the limit.
//!
//! The crate treats "algorithm" as a broader notion than "halting program".
//! Every machine here — finite automata, pushdown automata, Turing machines,
//! their limit-reading variant, and arbitrary compositions of all of these —
//! runs under one budgeted execution discipline, and every claim about what
//! a machine *does* (computes this function, decides that set, enumerates
//! this range) is an observable, testable statement at a given budget over a
//! given finite domain.
//!
//! The pieces:
//!
//! - [`word`]: symbols, words, alphabets, and the shortlex numbering that
//!   makes "the n-th input" meaningful.
//! - [`machine`]: validated, serializable machine descriptions.
//! - [`exec`]: the budgeted executor. One micro-step, one budget unit,
//!   every model.
//! - [`combinators`]: builders for the small machines every construction
//!   leans on, plus the seven composition disciplines (sequential, races,
//!   conjunctions, and their predicate-gated variants).
//! - [`dovetail`]: fair interleaved enumeration of a machine's behaviour on
//!   every input at once, and the operators built on it.
//! - [`modes`]: the behavioural modes — computing, deciding, weakly
//!   deciding, accepting, enumerating — as checkable verdicts.
//! - [`theorems`]: constructive transforms between the modes, equivalence
//!   checking, and comparative power reports.
//! - [`amd`]: the plain-text machine description format and its parser.
//! - [`zoo`]: a corpus of small, exactly-understood machines used by tests
//!   and examples.

pub mod amd;
pub mod combinators;
pub mod dovetail;
pub mod zoo;
pub mod error;
pub mod exec;
pub mod machine;
pub mod models;
pub mod modes;
pub mod theorems;
pub mod word;

pub use error::MachineError;
pub use exec::{
    is_function, relation_of, run, run_metered, Executor, ResourceUsage, RunOutcome, RunStatus,
};
pub use machine::MachineDescription;
pub use word::{Alphabet, BoundedDomain, Symbol, Word};
