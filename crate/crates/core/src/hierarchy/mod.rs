//! Pivot-count levels and quantifier-prefix compilers.

mod compile;
mod level;
mod matrix;

pub use compile::{compile_pi1, compile_pi11, compile_prefix, compile_sigma1, FormulaSpec, Quantifier};
pub use level::{classify_level, Level, LevelReport};
pub use matrix::{MatrixAcceptor, MatrixOutcome, COUNTER_MARK, SEPARATOR, USED_MARK};
