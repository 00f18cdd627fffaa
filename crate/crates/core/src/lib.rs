//! Alternating Turing machines with pivot-based acceptance.
//!
//! Machines and the yield relation live in [`machine`], [`tape`] and
//! [`config`]. [`semantics`] explores phases, builds pivot graphs and solves
//! them into three-valued verdicts. [`transforms`] holds the machine
//! constructions (dual, one-sided, start normalization, the two-tape product)
//! and [`hierarchy`] the quantifier-prefix compilers. [`format`] reads and
//! writes machine documents and graph exports.

pub mod config;
pub mod corpus;
pub mod error;
pub mod format;
pub mod hierarchy;
pub mod machine;
pub mod semantics;
pub mod tape;
pub mod transforms;
pub mod zoo;

pub use config::{classify_config, initial_config, input_symbols, parse_input, successors, Configuration};
pub use error::{CompileError, InputError, ParseError, SpecError, TransformError};
pub use machine::{
    validate_machine, Action, Machine, MachineBuilder, MachineParts, StateDecl, StateId, StateKind, Symbol,
    TransitionRule, ValidationReport, Violation,
};
pub use semantics::{
    analyze, build_pivot_graph, check_local_closure, decide, explore_phase, is_alternation_wf, solve_fixpoint,
    solve_game, Analysis, Budget, PivotGraph, SolveResult, Verdict, Wellfounded,
};
pub use tape::Tape;
