//! Configurations and the one-step yield relation.

use std::fmt;

use smallvec::SmallVec;

use crate::error::InputError;
use crate::machine::{Action, Machine, StateId, StateKind, Symbol};
use crate::tape::Tape;

/// A state together with the contents of every tape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration {
    pub state: StateId,
    pub tapes: SmallVec<[Tape; 2]>,
}

impl Configuration {
    pub fn new(state: StateId, tapes: impl IntoIterator<Item = Tape>) -> Self {
        Configuration { state, tapes: tapes.into_iter().collect() }
    }

    pub fn is_canonical(&self, blank: Symbol) -> bool {
        self.tapes.iter().all(|t| t.is_canonical(blank))
    }

    /// Strips trailing right blanks from every tape. Idempotent.
    pub fn canonicalize(&self, blank: Symbol) -> Configuration {
        Configuration { state: self.state, tapes: self.tapes.iter().map(|t| t.canonicalize(blank)).collect() }
    }

    /// Renders the configuration with state names from `m`.
    pub fn display<'a>(&'a self, m: &'a Machine) -> ConfigDisplay<'a> {
        ConfigDisplay { config: self, machine: m }
    }
}

pub struct ConfigDisplay<'a> {
    config: &'a Configuration,
    machine: &'a Machine,
}

impl fmt::Display for ConfigDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self
            .machine
            .states()
            .get(self.config.state.index())
            .map_or("?", |s| s.name.as_str());
        write!(f, "{name}:")?;
        for (i, t) in self.config.tapes.iter().enumerate() {
            if i > 0 {
                write!(f, " |")?;
            }
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

/// The configuration `(start, ε, ⊔, w)` on tape 1; other tapes start blank.
pub fn initial_config(m: &Machine, w: &[Symbol]) -> Result<Configuration, InputError> {
    if let Some((position, &symbol)) = w.iter().enumerate().find(|(_, s)| !m.input_alphabet().contains(s)) {
        return Err(InputError::SymbolOutsideInputAlphabet { symbol, position });
    }
    let blank = m.blank();
    let mut tapes = SmallVec::new();
    tapes.push(Tape::with_input(blank, w));
    for _ in 1..m.tapes() {
        tapes.push(Tape::with_input(blank, &[]));
    }
    Ok(Configuration { state: m.start(), tapes })
}

/// Parses an input string glyph by glyph. Panics on non-ASCII glyphs.
pub fn input_symbols(w: &str) -> Vec<Symbol> {
    w.chars().map(Symbol::from).collect()
}

/// Parses `w` and checks it against the input alphabet of `m`.
pub fn parse_input(m: &Machine, w: &str) -> Result<Vec<Symbol>, InputError> {
    let mut out = Vec::with_capacity(w.len());
    for (position, c) in w.chars().enumerate() {
        if !c.is_ascii() {
            return Err(InputError::NotAGlyph { glyph: c, position });
        }
        let symbol = Symbol::from(c);
        if !m.input_alphabet().contains(&symbol) {
            return Err(InputError::SymbolOutsideInputAlphabet { symbol, position });
        }
        out.push(symbol);
    }
    Ok(out)
}

fn apply(m: &Machine, c: &Configuration, acts: &[Action], to: StateId) -> Configuration {
    let blank = m.blank();
    let tapes = c
        .tapes
        .iter()
        .zip(acts)
        .map(|(t, a)| match *a {
            Action::Write(s) => t.write(s),
            Action::MoveRight => t.move_right(blank),
            Action::MoveLeft => t.move_left(blank),
        })
        .collect();
    Configuration { state: to, tapes }
}

fn applies(reads: &[Symbol], c: &Configuration) -> bool {
    reads.len() == c.tapes.len() && reads.iter().zip(&c.tapes).all(|(r, t)| *r == t.head())
}

/// Successor configurations of a canonical configuration, in rule order.
pub(crate) fn for_each_successor(m: &Machine, c: &Configuration, mut f: impl FnMut(usize, Configuration)) {
    for (i, r) in m.rules_from(c.state) {
        if applies(&r.reads, c) {
            f(i, apply(m, c, &r.acts, r.to));
        }
    }
}

/// One successor per applicable rule, in rule order, tagged with the rule index.
/// An empty result means `c` is a dead end.
pub fn successors(m: &Machine, c: &Configuration) -> Vec<(usize, Configuration)> {
    let blank = m.blank();
    let owned;
    let c = if c.is_canonical(blank) {
        c
    } else {
        owned = c.canonicalize(blank);
        &owned
    };
    let mut out = Vec::new();
    for_each_successor(m, c, |i, s| out.push((i, s)));
    out
}

pub(crate) fn is_dead_end(m: &Machine, c: &Configuration) -> bool {
    !m.rules_from(c.state).any(|(_, r)| applies(&r.reads, c))
}

/// The kind of `c`'s state and whether no rule applies to it. A universal dead
/// end is an accepting leaf, an existential dead end a rejecting one.
pub fn classify_config(m: &Machine, c: &Configuration) -> (StateKind, bool) {
    (m.kind(c.state), is_dead_end(m, c))
}
