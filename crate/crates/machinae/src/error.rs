//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building, parsing, or running a machine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MachineError {
    /// A symbol was used in a context whose alphabet does not contain it.
    #[error("symbol '{symbol}' is not in the {context} alphabet")]
    SymbolNotInAlphabet { symbol: char, context: String },

    /// A reserved symbol (`_`, `#`, `*`) appeared in an input alphabet.
    #[error("symbol '{symbol}' is reserved and cannot appear in an input alphabet")]
    ReservedSymbol { symbol: char },

    /// An alphabet was declared empty or with duplicate symbols.
    #[error("invalid alphabet: {reason}")]
    InvalidAlphabet { reason: String },

    /// A machine description failed a structural invariant.
    #[error("invalid machine: {reason}")]
    InvalidMachine { reason: String },

    /// An operation expected a different machine model.
    #[error("wrong model: expected {expected}, found {found}")]
    WrongModel { expected: String, found: String },

    /// Two machines were combined whose alphabets do not line up.
    #[error("alphabet mismatch: {reason}")]
    AlphabetMismatch { reason: String },

    /// A stabilisation window larger than the step budget was requested.
    #[error("window {window} exceeds budget {budget}")]
    WindowExceedsBudget { window: u64, budget: u64 },

    /// A textual machine description could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An I/O problem while loading or storing a machine file.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl MachineError {
    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        MachineError::InvalidMachine {
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        MachineError::Parse {
            line,
            message: message.into(),
        }
    }
}
