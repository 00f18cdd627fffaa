//! Machine definitions: alphabets, typed states and ordered transition rules.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A single tape symbol. Symbols are single-byte glyphs so that tapes stay
/// compact and the text format can spell every symbol with one character.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub u8);

impl Symbol {
    pub const fn new(glyph: u8) -> Self {
        Symbol(glyph)
    }

    pub fn glyph(self) -> char {
        self.0 as char
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        assert!(c.is_ascii(), "symbol glyphs must be ASCII, got {c:?}");
        Symbol(c as u8)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.glyph())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

/// Glyphs the text format reserves for cursor movement.
pub const MOVE_RIGHT_GLYPH: char = '+';
pub const MOVE_LEFT_GLYPH: char = '-';

/// Index of a state inside its machine.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct StateId(pub u32);

impl StateId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Existential,
    Universal,
}

impl StateKind {
    pub fn dual(self) -> Self {
        match self {
            StateKind::Existential => StateKind::Universal,
            StateKind::Universal => StateKind::Existential,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            StateKind::Existential => "existential",
            StateKind::Universal => "universal",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateDecl {
    pub name: String,
    pub kind: StateKind,
}

/// What a rule does to one tape: overwrite the scanned cell or move the cursor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Action {
    Write(Symbol),
    MoveRight,
    MoveLeft,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Write(s) => write!(f, "{s}"),
            Action::MoveRight => write!(f, "{MOVE_RIGHT_GLYPH}"),
            Action::MoveLeft => write!(f, "{MOVE_LEFT_GLYPH}"),
        }
    }
}

/// `from --reads(acts)--> to`, with one read symbol and one action per tape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionRule {
    pub from: StateId,
    pub reads: Vec<Symbol>,
    pub acts: Vec<Action>,
    pub to: StateId,
}

impl TransitionRule {
    /// Single-tape convenience constructor.
    pub fn single(from: StateId, read: Symbol, act: Action, to: StateId) -> Self {
        TransitionRule { from, reads: vec![read], acts: vec![act], to }
    }
}

/// An alternating Turing machine over `t >= 1` right-infinite tapes.
///
/// The rule list is ordered: successors of a configuration are produced in
/// rule order. Construction does not validate; call [`Machine::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Machine {
    name: String,
    tapes: usize,
    input_alphabet: Vec<Symbol>,
    tape_alphabet: Vec<Symbol>,
    blank: Symbol,
    states: Vec<StateDecl>,
    start: StateId,
    rules: Vec<TransitionRule>,
    /// Rule indices grouped by source state, in rule order.
    by_state: Vec<Vec<u32>>,
}

impl Machine {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        tapes: usize,
        input_alphabet: Vec<Symbol>,
        tape_alphabet: Vec<Symbol>,
        blank: Symbol,
        states: Vec<StateDecl>,
        start: StateId,
        rules: Vec<TransitionRule>,
    ) -> Self {
        let mut by_state = vec![Vec::new(); states.len()];
        for (i, r) in rules.iter().enumerate() {
            if let Some(slot) = by_state.get_mut(r.from.index()) {
                slot.push(i as u32);
            }
        }
        Machine {
            name: name.into(),
            tapes,
            input_alphabet,
            tape_alphabet,
            blank,
            states,
            start,
            rules,
            by_state,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tapes(&self) -> usize {
        self.tapes
    }

    pub fn input_alphabet(&self) -> &[Symbol] {
        &self.input_alphabet
    }

    pub fn tape_alphabet(&self) -> &[Symbol] {
        &self.tape_alphabet
    }

    pub fn blank(&self) -> Symbol {
        self.blank
    }

    pub fn states(&self) -> &[StateDecl] {
        &self.states
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn rules(&self) -> &[TransitionRule] {
        &self.rules
    }

    pub fn kind(&self, q: StateId) -> StateKind {
        self.states[q.index()].kind
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.index()].name
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s.name == name).map(|i| StateId(i as u32))
    }

    /// Rules leaving `q`, in rule order, paired with their rule index.
    pub fn rules_from(&self, q: StateId) -> impl Iterator<Item = (usize, &TransitionRule)> + '_ {
        self.by_state
            .get(q.index())
            .into_iter()
            .flatten()
            .map(move |&i| (i as usize, &self.rules[i as usize]))
    }

    pub fn has_rules(&self, q: StateId) -> bool {
        self.by_state.get(q.index()).is_some_and(|v| !v.is_empty())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Decomposes the machine into its parts (states, start, rules) for rebuilding.
    pub fn into_parts(self) -> MachineParts {
        MachineParts {
            name: self.name,
            tapes: self.tapes,
            input_alphabet: self.input_alphabet,
            tape_alphabet: self.tape_alphabet,
            blank: self.blank,
            states: self.states,
            start: self.start,
            rules: self.rules,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_machine(self)
    }
}

/// Owned fields of a [`Machine`], for transformations that rebuild machines.
#[derive(Clone, Debug)]
pub struct MachineParts {
    pub name: String,
    pub tapes: usize,
    pub input_alphabet: Vec<Symbol>,
    pub tape_alphabet: Vec<Symbol>,
    pub blank: Symbol,
    pub states: Vec<StateDecl>,
    pub start: StateId,
    pub rules: Vec<TransitionRule>,
}

impl MachineParts {
    pub fn build(self) -> Machine {
        Machine::new(
            self.name,
            self.tapes,
            self.input_alphabet,
            self.tape_alphabet,
            self.blank,
            self.states,
            self.start,
            self.rules,
        )
    }

    pub fn add_state(&mut self, name: impl Into<String>, kind: StateKind) -> StateId {
        self.states.push(StateDecl { name: name.into(), kind });
        StateId(self.states.len() as u32 - 1)
    }

    /// A state name derived from `base` that is not yet taken.
    pub fn fresh_name(&self, base: &str) -> String {
        fresh_name(&self.states, base)
    }
}

pub(crate) fn fresh_name(states: &[StateDecl], base: &str) -> String {
    if !states.iter().any(|s| s.name == base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}{i}"))
        .find(|n| !states.iter().any(|s| &s.name == n))
        .expect("unbounded suffix search")
}

/// Incremental construction by state name.
#[derive(Clone, Debug)]
pub struct MachineBuilder {
    parts: MachineParts,
    start_name: Option<String>,
}

impl MachineBuilder {
    pub fn new(name: impl Into<String>, input: &str, gamma: &str, blank: char) -> Self {
        MachineBuilder {
            parts: MachineParts {
                name: name.into(),
                tapes: 1,
                input_alphabet: input.chars().map(Symbol::from).collect(),
                tape_alphabet: gamma.chars().map(Symbol::from).collect(),
                blank: Symbol::from(blank),
                states: Vec::new(),
                start: StateId(0),
                rules: Vec::new(),
            },
            start_name: None,
        }
    }

    pub fn tapes(mut self, t: usize) -> Self {
        self.parts.tapes = t;
        self
    }

    pub fn state(mut self, name: &str, kind: StateKind) -> Self {
        self.parts.states.push(StateDecl { name: name.to_string(), kind });
        self
    }

    pub fn existential(self, name: &str) -> Self {
        self.state(name, StateKind::Existential)
    }

    pub fn universal(self, name: &str) -> Self {
        self.state(name, StateKind::Universal)
    }

    pub fn start(mut self, name: &str) -> Self {
        self.start_name = Some(name.to_string());
        self
    }

    fn id(&self, name: &str) -> StateId {
        match self.parts.states.iter().position(|s| s.name == name) {
            Some(i) => StateId(i as u32),
            None => panic!("undeclared state {name:?}"),
        }
    }

    /// Adds a single-tape rule. `act` is `'+'`, `'-'`, or a symbol to write.
    pub fn rule(mut self, from: &str, read: char, act: char, to: &str) -> Self {
        let rule = TransitionRule::single(self.id(from), read.into(), parse_action(act), self.id(to));
        self.parts.rules.push(rule);
        self
    }

    /// Adds a rule over all tapes; `reads` and `acts` carry one glyph per tape.
    pub fn rule_multi(mut self, from: &str, reads: &str, acts: &str, to: &str) -> Self {
        let rule = TransitionRule {
            from: self.id(from),
            reads: reads.chars().map(Symbol::from).collect(),
            acts: acts.chars().map(parse_action).collect(),
            to: self.id(to),
        };
        self.parts.rules.push(rule);
        self
    }

    pub fn build(mut self) -> Machine {
        self.parts.start = match self.start_name.take() {
            Some(n) => self.id(&n),
            None => StateId(0),
        };
        self.parts.build()
    }
}

fn parse_action(c: char) -> Action {
    match c {
        MOVE_RIGHT_GLYPH => Action::MoveRight,
        MOVE_LEFT_GLYPH => Action::MoveLeft,
        other => Action::Write(other.into()),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    NoTapes,
    NoStates,
    UnknownStartState,
    EmptyStateName { state: usize },
    DuplicateState { name: String },
    BlankInInputAlphabet,
    BlankNotInTapeAlphabet,
    InputSymbolNotInTapeAlphabet { symbol: Symbol },
    DuplicateSymbol { symbol: Symbol },
    ReservedGlyph { symbol: Symbol },
    UnprintableGlyph { symbol: Symbol },
    RuleArity { rule: usize, expected: usize, reads: usize, acts: usize },
    RuleUnknownState { rule: usize },
    RuleSymbolOutsideAlphabet { rule: usize, symbol: Symbol },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoTapes => write!(f, "machine has no tapes"),
            Violation::NoStates => write!(f, "machine has no states"),
            Violation::UnknownStartState => write!(f, "unknown start state"),
            Violation::EmptyStateName { state } => write!(f, "state #{state} has an empty name"),
            Violation::DuplicateState { name } => write!(f, "duplicate state {name:?}"),
            Violation::BlankInInputAlphabet => write!(f, "blank in input alphabet"),
            Violation::BlankNotInTapeAlphabet => write!(f, "blank missing from tape alphabet"),
            Violation::InputSymbolNotInTapeAlphabet { symbol } => {
                write!(f, "input symbol {symbol:?} missing from tape alphabet")
            }
            Violation::DuplicateSymbol { symbol } => write!(f, "symbol {symbol:?} declared twice"),
            Violation::ReservedGlyph { symbol } => {
                write!(f, "symbol {symbol:?} is reserved for cursor moves")
            }
            Violation::UnprintableGlyph { symbol } => write!(f, "symbol {symbol:?} is not a printable glyph"),
            Violation::RuleArity { rule, expected, reads, acts } => write!(
                f,
                "rule {rule}: expected {expected} tape(s), got {reads} read(s) and {acts} action(s)"
            ),
            Violation::RuleUnknownState { rule } => write!(f, "rule {rule}: unknown state"),
            Violation::RuleSymbolOutsideAlphabet { rule, symbol } => {
                write!(f, "rule {rule}: symbol {symbol:?} not in tape alphabet")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Non-fatal observations, e.g. tape symbols no rule mentions.
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_machine(m: &Machine) -> ValidationReport {
    let mut report = ValidationReport::default();
    let v = &mut report.violations;
    if m.tapes == 0 {
        v.push(Violation::NoTapes);
    }
    if m.states.is_empty() {
        v.push(Violation::NoStates);
    }
    if m.start.index() >= m.states.len() {
        v.push(Violation::UnknownStartState);
    }
    for (i, s) in m.states.iter().enumerate() {
        if s.name.is_empty() {
            v.push(Violation::EmptyStateName { state: i });
        }
        if m.states[..i].iter().any(|t| t.name == s.name) {
            v.push(Violation::DuplicateState { name: s.name.clone() });
        }
    }
    let gamma = &m.tape_alphabet;
    for (i, s) in gamma.iter().enumerate() {
        if gamma[..i].contains(s) {
            v.push(Violation::DuplicateSymbol { symbol: *s });
        }
        if s.glyph() == MOVE_RIGHT_GLYPH || s.glyph() == MOVE_LEFT_GLYPH {
            v.push(Violation::ReservedGlyph { symbol: *s });
        }
        if !s.0.is_ascii_graphic() {
            v.push(Violation::UnprintableGlyph { symbol: *s });
        }
    }
    if m.input_alphabet.contains(&m.blank) {
        v.push(Violation::BlankInInputAlphabet);
    }
    if !gamma.contains(&m.blank) {
        v.push(Violation::BlankNotInTapeAlphabet);
    }
    for (i, s) in m.input_alphabet.iter().enumerate() {
        if m.input_alphabet[..i].contains(s) {
            v.push(Violation::DuplicateSymbol { symbol: *s });
        }
        if !gamma.contains(s) {
            v.push(Violation::InputSymbolNotInTapeAlphabet { symbol: *s });
        }
    }
    let mut used = vec![false; gamma.len()];
    let mut mark = |s: Symbol| {
        if let Some(p) = gamma.iter().position(|g| *g == s) {
            used[p] = true;
        }
    };
    for (i, r) in m.rules.iter().enumerate() {
        if r.reads.len() != m.tapes || r.acts.len() != m.tapes {
            v.push(Violation::RuleArity {
                rule: i,
                expected: m.tapes,
                reads: r.reads.len(),
                acts: r.acts.len(),
            });
        }
        if r.from.index() >= m.states.len() || r.to.index() >= m.states.len() {
            v.push(Violation::RuleUnknownState { rule: i });
        }
        let written = r.acts.iter().filter_map(|a| match a {
            Action::Write(s) => Some(*s),
            _ => None,
        });
        for s in r.reads.iter().copied().chain(written) {
            if !gamma.contains(&s) {
                v.push(Violation::RuleSymbolOutsideAlphabet { rule: i, symbol: s });
            }
            mark(s);
        }
    }
    mark(m.blank);
    for s in &m.input_alphabet {
        mark(*s);
    }
    for (s, u) in gamma.iter().zip(&used) {
        if !u {
            report.warnings.push(format!("tape symbol {s:?} is never read or written"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u0() -> Machine {
        MachineBuilder::new("u0", "ab", "ab_", '_').universal("u").build()
    }

    #[test]
    fn universal_machine_without_rules_is_valid() {
        let report = validate_machine(&u0());
        assert!(report.is_ok(), "{:?}", report.violations);
    }

    #[test]
    fn unknown_start_state_is_reported() {
        let mut parts = u0().into_parts();
        parts.start = StateId(7);
        let report = validate_machine(&parts.build());
        assert_eq!(report.violations, vec![Violation::UnknownStartState]);
        assert_eq!(report.violations[0].to_string(), "unknown start state");
    }

    #[test]
    fn blank_in_input_alphabet_is_reported() {
        let m = MachineBuilder::new("bad", "a_", "a_", '_').universal("u").build();
        let report = validate_machine(&m);
        assert!(report.violations.contains(&Violation::BlankInInputAlphabet));
        assert!(report
            .violations
            .iter()
            .any(|v| v.to_string() == "blank in input alphabet"));
    }

    #[test]
    fn rule_problems_name_the_rule() {
        let mut parts = MachineBuilder::new("r", "a", "a_", '_')
            .existential("q")
            .rule("q", 'a', 'z', "q")
            .build()
            .into_parts();
        parts.rules.push(TransitionRule {
            from: StateId(0),
            reads: vec![Symbol::from('a'), Symbol::from('a')],
            acts: vec![Action::MoveRight],
            to: StateId(3),
        });
        let report = validate_machine(&parts.build());
        assert!(report.violations.contains(&Violation::RuleSymbolOutsideAlphabet {
            rule: 0,
            symbol: Symbol::from('z')
        }));
        assert!(report.violations.contains(&Violation::RuleUnknownState { rule: 1 }));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RuleArity { rule: 1, .. })));
    }

    #[test]
    fn unused_symbols_warn_but_do_not_fail() {
        let m = MachineBuilder::new("w", "a", "a_c", '_').universal("u").build();
        let report = validate_machine(&m);
        assert!(report.is_ok());
        assert_eq!(report.warnings.len(), 1);
        assert!(report.warnings[0].contains("'c'"));
    }

    #[test]
    fn reserved_glyphs_are_rejected() {
        let m = MachineBuilder::new("w", "a", "a_+", '_').universal("u").build();
        assert!(validate_machine(&m)
            .violations
            .contains(&Violation::ReservedGlyph { symbol: Symbol::from('+') }));
    }

    #[test]
    fn rules_from_preserves_rule_order() {
        let m = MachineBuilder::new("o", "a", "a_", '_')
            .existential("p")
            .existential("q")
            .rule("p", 'a', '+', "q")
            .rule("q", 'a', '+', "p")
            .rule("p", '_', 'a', "p")
            .build();
        let idx: Vec<usize> = m.rules_from(StateId(0)).map(|(i, _)| i).collect();
        assert_eq!(idx, vec![0, 2]);
    }
}
