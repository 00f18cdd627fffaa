use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::{MatrixAcceptor, COUNTER_MARK, SEPARATOR, USED_MARK};
use crate::error::CompileError;
use crate::machine::{Action, Machine, MachineParts, StateId, StateKind, Symbol, TransitionRule};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    pub fn kind(self) -> StateKind {
        match self {
            Quantifier::Exists => StateKind::Existential,
            Quantifier::Forall => StateKind::Universal,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Exists => "exists",
            Quantifier::Forall => "forall",
        }
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A prenex prefix of quantifier blocks over a deterministic matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormulaSpec {
    pub blocks: Vec<(Quantifier, usize)>,
    pub matrix: MatrixAcceptor,
}

impl FormulaSpec {
    pub fn new(blocks: Vec<(Quantifier, usize)>, matrix: MatrixAcceptor) -> Result<Self, CompileError> {
        let spec = FormulaSpec { blocks, matrix };
        spec.validate()?;
        Ok(spec)
    }

    /// Total number of quantified variables.
    pub fn arity(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn validate(&self) -> Result<(), CompileError> {
        if self.blocks.is_empty() {
            return Err(CompileError::InvalidSpec("no quantifier blocks".into()));
        }
        if let Some(i) = self.blocks.iter().position(|b| b.1 == 0) {
            return Err(CompileError::InvalidSpec(format!("block {} binds no variables", i + 1)));
        }
        if let Some(i) = self.blocks.windows(2).position(|w| w[0].0 == w[1].0) {
            return Err(CompileError::InvalidSpec(format!("blocks {} and {} do not alternate", i + 1, i + 2)));
        }
        if self.matrix.arity() != self.arity() {
            return Err(CompileError::ArityMismatch { matrix: self.matrix.arity(), expected: self.arity() });
        }
        Ok(())
    }
}

struct Asm {
    parts: MachineParts,
}

impl Asm {
    fn new(name: String, matrix: &Machine, extra: &[Symbol]) -> Asm {
        let mut gamma = matrix.tape_alphabet().to_vec();
        gamma.extend_from_slice(extra);
        Asm {
            parts: MachineParts {
                name,
                tapes: 1,
                input_alphabet: matrix.input_alphabet().to_vec(),
                tape_alphabet: gamma,
                blank: matrix.blank(),
                states: Vec::new(),
                start: StateId(0),
                rules: Vec::new(),
            },
        }
    }

    fn state(&mut self, name: &str, kind: StateKind) -> StateId {
        let name = self.parts.fresh_name(name);
        self.parts.add_state(name, kind)
    }

    fn rule(&mut self, from: StateId, read: Symbol, act: Action, to: StateId) {
        self.parts.rules.push(TransitionRule::single(from, read, act, to));
    }

    fn blank(&self) -> Symbol {
        self.parts.blank
    }

    fn sigma(&self) -> Vec<Symbol> {
        self.parts.input_alphabet.clone()
    }

    fn non_blank(&self) -> Vec<Symbol> {
        let b = self.blank();
        self.parts.tape_alphabet.iter().copied().filter(|&g| g != b).collect()
    }

    /// Moves right past every written cell and acts on the first blank.
    fn seek_end(&mut self, st: StateId, at_end: Action, to: StateId) {
        for g in self.non_blank() {
            self.rule(st, g, Action::MoveRight, st);
        }
        let b = self.blank();
        self.rule(st, b, at_end, to);
    }

    /// Moves left to the leftmost cell, the only blank before the end, then enters `to`.
    fn rewind(&mut self, st: StateId, to: StateId) {
        for g in self.non_blank() {
            self.rule(st, g, Action::MoveLeft, st);
        }
        let b = self.blank();
        self.rule(st, b, Action::Write(b), to);
    }

    fn finish(mut self, start: StateId) -> Machine {
        self.parts.start = start;
        self.parts.build()
    }
}

/// Existential block: appends `# s1 # ... # sr`, choosing one symbol or
/// stopping at each step, then rewinds into `next`.
fn sigma_block(asm: &mut Asm, label: &str, entry: StateId, r: usize, next: StateId) {
    let e = StateKind::Existential;
    let blank = asm.blank();
    let sigma = asm.sigma();
    let skip = asm.state(&format!("{label}.skip"), e);
    asm.rule(entry, blank, Action::MoveRight, skip);
    let guesses: Vec<StateId> = (1..=r).map(|k| asm.state(&format!("{label}.guess{k}"), e)).collect();
    asm.seek_end(skip, Action::Write(SEPARATOR), guesses[0]);
    let back = asm.state(&format!("{label}.rewind"), e);
    let mut scanned = vec![SEPARATOR];
    scanned.extend(&sigma);
    for k in 0..r {
        let puts: Vec<StateId> = sigma
            .iter()
            .map(|&s| {
                let put = asm.state(&format!("{label}.put{}{}", k + 1, s.glyph()), e);
                asm.rule(put, blank, Action::Write(s), guesses[k]);
                put
            })
            .collect();
        let stop = if k + 1 < r {
            let sep = asm.state(&format!("{label}.sep{}", k + 1), e);
            asm.rule(sep, blank, Action::Write(SEPARATOR), guesses[k + 1]);
            Some(sep)
        } else {
            None
        };
        for &read in &scanned {
            for &put in &puts {
                asm.rule(guesses[k], read, Action::MoveRight, put);
            }
            match stop {
                Some(sep) => asm.rule(guesses[k], read, Action::MoveRight, sep),
                None => asm.rule(guesses[k], read, Action::Write(read), back),
            }
        }
    }
    asm.rewind(back, next);
}

/// Universal block: keeps a counter after a `$` mark that runs through all
/// strings over the digits in length-then-alphabet order. At each value it
/// branches universally into advancing the counter and into checking the
/// current value: `$` becomes `#`, values that do not split into exactly `r`
/// components are accepted outright, and the others go to `next`.
fn pi_block(asm: &mut Asm, label: &str, entry: StateId, r: usize, next: StateId) {
    let u = StateKind::Universal;
    let blank = asm.blank();
    let mut digits = asm.sigma();
    if r > 1 {
        digits.push(SEPARATOR);
    }
    let (min, max) = (digits[0], *digits.last().unwrap());

    let skip = asm.state(&format!("{label}.skip"), u);
    let home = asm.state(&format!("{label}.home"), u);
    let hub = asm.state(&format!("{label}.hub"), u);
    asm.rule(entry, blank, Action::MoveRight, skip);
    asm.seek_end(skip, Action::Write(COUNTER_MARK), home);
    asm.rewind(home, hub);

    let seek = asm.state(&format!("{label}.inc_seek"), u);
    let check = asm.state(&format!("{label}.check"), u);
    asm.rule(hub, blank, Action::MoveRight, seek);
    asm.rule(hub, blank, Action::MoveRight, check);

    let inc = asm.state(&format!("{label}.inc"), u);
    let carry = asm.state(&format!("{label}.carry"), u);
    let grow = asm.state(&format!("{label}.grow"), u);
    asm.seek_end(seek, Action::MoveLeft, inc);
    for (i, &d) in digits.iter().enumerate() {
        if d == max {
            asm.rule(inc, d, Action::Write(min), carry);
        } else {
            asm.rule(inc, d, Action::Write(digits[i + 1]), home);
        }
    }
    asm.rule(inc, COUNTER_MARK, Action::MoveRight, grow);
    asm.rule(carry, min, Action::MoveLeft, inc);
    asm.seek_end(grow, Action::Write(min), home);

    let open = asm.state(&format!("{label}.open"), u);
    for g in asm.non_blank() {
        if g == COUNTER_MARK {
            asm.rule(check, g, Action::Write(SEPARATOR), open);
        } else {
            asm.rule(check, g, Action::MoveRight, check);
        }
    }
    let counts: Vec<StateId> = (0..r).map(|k| asm.state(&format!("{label}.field{}", k + 1), u)).collect();
    let malformed = asm.state(&format!("{label}.malformed"), u);
    let done = asm.state(&format!("{label}.rewind"), u);
    asm.rule(open, SEPARATOR, Action::MoveRight, counts[0]);
    for k in 0..r {
        for s in asm.sigma() {
            asm.rule(counts[k], s, Action::MoveRight, counts[k]);
        }
        if k + 1 < r {
            asm.rule(counts[k], SEPARATOR, Action::MoveRight, counts[k + 1]);
            asm.rule(counts[k], blank, Action::Write(blank), malformed);
        } else {
            asm.rule(counts[k], SEPARATOR, Action::Write(SEPARATOR), malformed);
            asm.rule(counts[k], blank, Action::MoveLeft, done);
        }
    }
    asm.rewind(done, next);
}

fn label(blocks: &[(Quantifier, usize)]) -> String {
    blocks
        .iter()
        .map(|(q, r)| format!("{}{r}", if *q == Quantifier::Exists { "E" } else { "A" }))
        .collect::<Vec<_>>()
        .join("")
}

/// Compiles a quantifier prefix into a machine. Each block appends its
/// witnesses after the input, separated by `#`, and hands over to the next
/// block; the last block hands over to the matrix, whose states run with
/// that block's kind.
pub fn compile_prefix(spec: &FormulaSpec) -> Result<Machine, CompileError> {
    spec.validate()?;
    let matrix = spec.matrix.machine();
    let extra: &[Symbol] = if spec.blocks.iter().any(|b| b.0 == Quantifier::Forall) { &[COUNTER_MARK] } else { &[] };
    let mut asm = Asm::new(format!("{}-{}", label(&spec.blocks), matrix.name()), matrix, extra);
    let entries: Vec<StateId> = spec
        .blocks
        .iter()
        .enumerate()
        .map(|(i, (q, _))| asm.state(&format!("b{}.start", i + 1), q.kind()))
        .collect();
    let inner = spec.blocks.last().unwrap().0.kind();
    let matrix_start = spec.matrix.embed(&mut asm.parts, inner);
    for (i, &(q, r)) in spec.blocks.iter().enumerate() {
        let next = entries.get(i + 1).copied().unwrap_or(matrix_start);
        let name = format!("b{}", i + 1);
        match q {
            Quantifier::Exists => sigma_block(&mut asm, &name, entries[i], r, next),
            Quantifier::Forall => pi_block(&mut asm, &name, entries[i], r, next),
        }
    }
    Ok(asm.finish(entries[0]))
}

fn single_block(q: Quantifier, matrix: &MatrixAcceptor, r: usize) -> Result<Machine, CompileError> {
    if matrix.arity() != r {
        return Err(CompileError::ArityMismatch { matrix: matrix.arity(), expected: r });
    }
    compile_prefix(&FormulaSpec { blocks: vec![(q, r)], matrix: matrix.clone() })
}

/// Guess-and-check machine for `∃ s1 ... sr. matrix(w, s1, ..., sr)`.
pub fn compile_sigma1(matrix: &MatrixAcceptor, r: usize) -> Result<Machine, CompileError> {
    single_block(Quantifier::Exists, matrix, r)
}

/// Enumerate-and-check machine for `∀ s1 ... sr. matrix(w, s1, ..., sr)`.
pub fn compile_pi1(matrix: &MatrixAcceptor, r: usize) -> Result<Machine, CompileError> {
    single_block(Quantifier::Forall, matrix, r)
}

/// Machine for `∀f ∃x. matrix(w, f(0) # ... # f(|x|-1), x)`, unfolded in stages.
///
/// Stage 0 checks `⊔ w # #`. At stage `n` the tape holds `⊔ w #z0 ... #z(n-1)`;
/// the machine either guesses `x` of length `n` existentially and runs the
/// matrix on `⊔ w # z0#...#z(n-1) # x`, or picks `z(n)` universally, one
/// symbol or a stop per step, and moves on to stage `n + 1`.
pub fn compile_pi11(matrix: &MatrixAcceptor) -> Result<Machine, CompileError> {
    if matrix.arity() != 2 {
        return Err(CompileError::ArityMismatch { matrix: matrix.arity(), expected: 2 });
    }
    let (e, u) = (StateKind::Existential, StateKind::Universal);
    let mut asm = Asm::new(format!("pi11-{}", matrix.machine().name()), matrix.machine(), &[COUNTER_MARK, USED_MARK]);
    let blank = asm.blank();
    let sigma = asm.sigma();

    let first = asm.state("pi11.start", e);
    let stage = asm.state("pi11.stage", e);
    let matrix_start = matrix.embed(&mut asm.parts, e);
    let finish = asm.state("pi11.x_rewind", e);
    for g in asm.non_blank() {
        if g == COUNTER_MARK || g == USED_MARK {
            asm.rule(finish, g, Action::Write(SEPARATOR), finish);
        } else {
            asm.rule(finish, g, Action::MoveLeft, finish);
        }
    }
    asm.rule(finish, blank, Action::Write(blank), matrix_start);

    // Stage 0: run the matrix on "⊔ w # #".
    let z_start = asm.state("pi11.z_start", u);
    let empty_skip = asm.state("pi11.empty_skip", e);
    let empty_sep = asm.state("pi11.empty_sep", e);
    let empty_last = asm.state("pi11.empty_last", e);
    asm.rule(first, blank, Action::MoveRight, empty_skip);
    asm.rule(first, blank, Action::Write(blank), z_start);
    asm.seek_end(empty_skip, Action::Write(SEPARATOR), empty_sep);
    asm.rule(empty_sep, SEPARATOR, Action::MoveRight, empty_last);
    asm.rule(empty_last, blank, Action::Write(SEPARATOR), finish);

    // Universal choice of the next z, then the next stage.
    let z_skip = asm.state("pi11.z_skip", u);
    let z_choose = asm.state("pi11.z_choose", u);
    let z_rewind = asm.state("pi11.z_rewind", u);
    asm.rule(z_start, blank, Action::MoveRight, z_skip);
    asm.seek_end(z_skip, Action::Write(SEPARATOR), z_choose);
    let puts: Vec<StateId> = sigma
        .iter()
        .map(|&s| {
            let put = asm.state(&format!("pi11.z_put{}", s.glyph()), u);
            asm.rule(put, blank, Action::Write(s), z_choose);
            put
        })
        .collect();
    let mut scanned = vec![SEPARATOR];
    scanned.extend(&sigma);
    for &read in &scanned {
        for &put in &puts {
            asm.rule(z_choose, read, Action::MoveRight, put);
        }
        asm.rule(z_choose, read, Action::Write(read), z_rewind);
    }
    asm.rewind(z_rewind, stage);

    // Stage n: guess x with one symbol per separator, or pick another z.
    let x_skip = asm.state("pi11.x_skip", e);
    let x_home = asm.state("pi11.x_home", e);
    let x_find = asm.state("pi11.x_find", e);
    let x_tail = asm.state("pi11.x_tail", e);
    asm.rule(stage, blank, Action::MoveRight, x_skip);
    asm.rule(stage, blank, Action::Write(blank), z_start);
    asm.seek_end(x_skip, Action::Write(COUNTER_MARK), x_home);
    for g in asm.non_blank() {
        asm.rule(x_home, g, Action::MoveLeft, x_home);
    }
    asm.rule(x_home, blank, Action::MoveRight, x_find);
    for g in asm.non_blank() {
        match g {
            SEPARATOR => asm.rule(x_find, g, Action::Write(USED_MARK), x_tail),
            COUNTER_MARK => asm.rule(x_find, g, Action::Write(SEPARATOR), finish),
            _ => asm.rule(x_find, g, Action::MoveRight, x_find),
        }
    }
    for g in asm.non_blank() {
        asm.rule(x_tail, g, Action::MoveRight, x_tail);
    }
    for &s in &sigma {
        asm.rule(x_tail, blank, Action::Write(s), x_home);
    }
    Ok(asm.finish(first))
}
