use thiserror::Error;

use crate::machine::{Symbol, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("input symbol {symbol:?} at position {position} is not in the input alphabet")]
    SymbolOutsideInputAlphabet { symbol: Symbol, position: usize },
    #[error("input character {glyph:?} at position {position} is not a tape glyph")]
    NotAGlyph { glyph: char, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{op} needs a single-tape machine, got {tapes} tapes")]
    NotSingleTape { op: &'static str, tapes: usize },
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("machine is invalid: {}", join(.0))]
    Invalid(Vec<Violation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("matrix arity {matrix} does not match the {expected} witness slot(s) requested")]
    ArityMismatch { matrix: usize, expected: usize },
    #[error("invalid formula: {0}")]
    InvalidSpec(String),
    #[error("invalid matrix acceptor: {0}")]
    InvalidMatrix(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("machine is invalid: {}", join(.0))]
    Invalid(Vec<Violation>),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Failure to turn a spec document into a machine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Compile(#[from] CompileError),
}
