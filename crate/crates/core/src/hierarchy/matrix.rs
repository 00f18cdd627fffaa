use rustc_hash::FxHashSet;

use crate::error::CompileError;
use crate::machine::{Action, Machine, MachineParts, StateId, StateKind, Symbol, TransitionRule};

/// Field separator on compiled tapes.
pub const SEPARATOR: Symbol = Symbol(b'#');
/// Marks the start of a universal enumeration counter.
pub const COUNTER_MARK: Symbol = Symbol(b'$');
/// A separator already paired with a guessed symbol.
pub const USED_MARK: Symbol = Symbol(b'!');

/// A deterministic single-tape machine that decides a bounded relation.
///
/// It runs on the tape `⊔ w # s1 # ... # sr` with the cursor on the leftmost
/// cell. Halting in a universal state accepts, halting in an existential
/// state rejects. `step_bound` is the declared running time on such tapes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixAcceptor {
    machine: Machine,
    arity: usize,
    step_bound: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixOutcome {
    Accept,
    Reject,
    /// Still running after `step_bound` steps.
    Timeout,
}

impl MatrixAcceptor {
    pub fn new(machine: Machine, arity: usize, step_bound: usize) -> Result<Self, CompileError> {
        let report = machine.validate();
        if !report.is_ok() {
            return Err(CompileError::InvalidMatrix(
                report.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ));
        }
        if machine.tapes() != 1 {
            return Err(CompileError::InvalidMatrix("matrix must be single-tape".into()));
        }
        if !machine.tape_alphabet().contains(&SEPARATOR) {
            return Err(CompileError::InvalidMatrix("tape alphabet lacks '#'".into()));
        }
        if machine.input_alphabet().contains(&SEPARATOR) {
            return Err(CompileError::InvalidMatrix("'#' may not be an input symbol".into()));
        }
        for reserved in [COUNTER_MARK, USED_MARK] {
            if machine.tape_alphabet().contains(&reserved) {
                return Err(CompileError::InvalidMatrix(format!("{reserved:?} is reserved for the compilers")));
            }
        }
        let mut reads = FxHashSet::default();
        for r in machine.rules() {
            if !reads.insert((r.from, r.reads[0])) {
                return Err(CompileError::InvalidMatrix(format!(
                    "state {} has two rules reading {:?}",
                    machine.state_name(r.from),
                    r.reads[0]
                )));
            }
        }
        Ok(MatrixAcceptor { machine, arity, step_bound })
    }

    pub fn machine(&self) -> &Machine {
        &self.machine
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn step_bound(&self) -> usize {
        self.step_bound
    }

    /// The tape the matrix expects for input `w` and witness strings `slots`.
    pub fn tape(w: &[Symbol], slots: &[Vec<Symbol>], blank: Symbol) -> Vec<Symbol> {
        let mut tape = vec![blank];
        tape.extend_from_slice(w);
        for s in slots {
            tape.push(SEPARATOR);
            tape.extend_from_slice(s);
        }
        tape
    }

    /// Runs the matrix directly on `⊔ w # s1 # ... # sr`.
    pub fn run(&self, w: &[Symbol], slots: &[Vec<Symbol>]) -> MatrixOutcome {
        self.run_tape(Self::tape(w, slots, self.machine.blank()))
    }

    pub(crate) fn run_tape(&self, mut tape: Vec<Symbol>) -> MatrixOutcome {
        let m = &self.machine;
        let blank = m.blank();
        let mut pos = 0usize;
        let mut q = m.start();
        for _ in 0..=self.step_bound {
            let scanned = tape[pos];
            let Some((_, rule)) = m.rules_from(q).find(|(_, r)| r.reads[0] == scanned) else {
                return match m.kind(q) {
                    StateKind::Universal => MatrixOutcome::Accept,
                    StateKind::Existential => MatrixOutcome::Reject,
                };
            };
            match rule.acts[0] {
                Action::Write(s) => tape[pos] = s,
                Action::MoveRight => {
                    pos += 1;
                    if pos == tape.len() {
                        tape.push(blank);
                    }
                }
                Action::MoveLeft => pos = pos.saturating_sub(1),
            }
            q = rule.to;
        }
        MatrixOutcome::Timeout
    }

    /// Copies the matrix states into `parts` so that every state runs with
    /// kind `kind`. A state of the other kind that has no rule for some
    /// symbol gets a rule into a fresh dead end of its original kind, so
    /// halting still accepts or rejects as before. Returns the copied start.
    pub(crate) fn embed(&self, parts: &mut MachineParts, kind: StateKind) -> StateId {
        let m = &self.machine;
        let base = parts.states.len() as u32;
        let id = |q: StateId| StateId(base + q.0);
        for s in m.states() {
            let name = parts.fresh_name(&format!("mx.{}", s.name));
            parts.add_state(name, kind);
        }
        for r in m.rules() {
            parts.rules.push(TransitionRule { from: id(r.from), reads: r.reads.clone(), acts: r.acts.clone(), to: id(r.to) });
        }
        let mut halt = None;
        let gamma = parts.tape_alphabet.clone();
        for (i, s) in m.states().iter().enumerate() {
            if s.kind == kind {
                continue;
            }
            let q = StateId(i as u32);
            for &g in &gamma {
                if m.rules_from(q).any(|(_, r)| r.reads[0] == g) {
                    continue;
                }
                let h = *halt.get_or_insert_with(|| {
                    let name = parts.fresh_name(&format!("mx.halt_{}", s.kind.keyword()));
                    parts.add_state(name, s.kind)
                });
                parts.rules.push(TransitionRule::single(id(q), g, Action::Write(g), h));
            }
        }
        id(m.start())
    }
}
