//! Seeded sampling of small machines and enumeration of short inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::machine::{Action, Machine, MachineParts, StateDecl, StateId, StateKind, Symbol, TransitionRule};

/// Shape limits for sampled machines.
#[derive(Clone, Copy, Debug)]
pub struct CorpusShape {
    pub max_states: usize,
    pub max_rules: usize,
    /// At most this many tape symbols, blank included.
    pub max_gamma: usize,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape { max_states: 3, max_rules: 4, max_gamma: 3 }
    }
}

/// All words over `sigma` of length at most `max_len`, shortest first and in
/// alphabet order within a length.
pub fn words(sigma: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| sigma.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Words over the machine's input alphabet up to `max_len`.
pub fn inputs(m: &Machine, max_len: usize) -> Vec<String> {
    let sigma: Vec<char> = m.input_alphabet().iter().map(|s| s.glyph()).collect();
    words(&sigma, max_len)
}

/// Draws one single-tape machine.
pub fn sample_machine(rng: &mut impl Rng, shape: &CorpusShape, name: String) -> Machine {
    let sigma: Vec<Symbol> = if rng.gen_bool(0.5) { vec![Symbol::from('a')] } else { vec![Symbol::from('a'), Symbol::from('b')] };
    let blank = Symbol::from('_');
    let mut gamma = sigma.clone();
    gamma.push(blank);
    if gamma.len() < shape.max_gamma && rng.gen_bool(0.3) {
        gamma.push(Symbol::from('c'));
    }
    let n_states = rng.gen_range(1..=shape.max_states);
    let states: Vec<StateDecl> = (0..n_states)
        .map(|i| StateDecl {
            name: format!("q{i}"),
            kind: if rng.gen_bool(0.5) { StateKind::Existential } else { StateKind::Universal },
        })
        .collect();
    let n_rules = rng.gen_range(0..=shape.max_rules);
    let rules = (0..n_rules)
        .map(|_| {
            let from = StateId(rng.gen_range(0..n_states) as u32);
            let to = StateId(rng.gen_range(0..n_states) as u32);
            let read = *gamma.choose(rng).unwrap();
            let act = match rng.gen_range(0..gamma.len() + 2) {
                0 => Action::MoveRight,
                1 => Action::MoveLeft,
                k => Action::Write(gamma[k - 2]),
            };
            TransitionRule::single(from, read, act, to)
        })
        .collect();
    MachineParts {
        name,
        tapes: 1,
        input_alphabet: sigma,
        tape_alphabet: gamma,
        blank,
        states,
        start: StateId(0),
        rules,
    }
    .build()
}

/// `count` machines from a fixed seed; the same seed always yields the same corpus.
pub fn sample_corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<Machine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| sample_machine(&mut rng, shape, format!("m{i}"))).collect()
}
