//! Machine constructions: dual, one-sided variants, start normalization and
//! the two-tape control-swap product.

use rustc_hash::FxHashSet;

use crate::error::TransformError;
use crate::machine::{Action, Machine, MachineParts, StateDecl, StateId, StateKind, Symbol, TransitionRule};
use crate::semantics::Budget;

/// Swaps the kind of every state; everything else is kept.
pub fn dual(m: &Machine) -> Machine {
    let mut parts = m.clone().into_parts();
    for s in &mut parts.states {
        s.kind = s.kind.dual();
    }
    parts.build()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// No rejected configurations.
    Plus,
    /// No accepted configurations.
    Minus,
}

/// Budget multiplier under which `one_sided` preserves the verdicts it keeps.
///
/// Each interior configuration of the source machine is matched by at most
/// two gadget configurations, one per gadget state.
pub const ONE_SIDED_BUDGET_FACTOR: usize = 3;

pub fn one_sided_budget(b: &Budget) -> Budget {
    b.scaled(ONE_SIDED_BUDGET_FACTOR)
}

fn require_single_tape(op: &'static str, m: &Machine) -> Result<(), TransformError> {
    if m.tapes() == 1 {
        Ok(())
    } else {
        Err(TransformError::NotSingleTape { op, tapes: m.tapes() })
    }
}

/// Adds a two-state loop of alternation pivots and an entry into it from
/// every existential state (`Plus`) or every universal state (`Minus`).
///
/// The loop states `a` (universal) and `b` (existential) step into each other
/// on every symbol without touching the tape, so their configurations are
/// never accepted nor rejected. An extra pivot into the loop blocks the
/// "all pivots" clause, which removes every rejection (`Plus`) or every
/// acceptance (`Minus`) while leaving the other verdict intact.
pub fn one_sided(m: &Machine, side: Side) -> Result<Machine, TransformError> {
    require_single_tape("one_sided", m)?;
    let mut parts = m.clone().into_parts();
    let originals: Vec<(StateId, StateKind)> =
        parts.states.iter().enumerate().map(|(i, s)| (StateId(i as u32), s.kind)).collect();
    let a_name = parts.fresh_name("loop_u");
    let a = parts.add_state(a_name, StateKind::Universal);
    let b_name = parts.fresh_name("loop_e");
    let b = parts.add_state(b_name, StateKind::Existential);
    let gamma = parts.tape_alphabet.clone();
    let (entered_from, entry) = match side {
        Side::Plus => (StateKind::Existential, a),
        Side::Minus => (StateKind::Universal, b),
    };
    for &g in &gamma {
        parts.rules.push(TransitionRule::single(a, g, Action::Write(g), b));
        parts.rules.push(TransitionRule::single(b, g, Action::Write(g), a));
    }
    for (q, kind) in originals {
        if kind == entered_from {
            for &g in &gamma {
                parts.rules.push(TransitionRule::single(q, g, Action::Write(g), entry));
            }
        }
    }
    Ok(parts.build())
}

fn has_deterministic_existential_start(m: &Machine) -> bool {
    if m.kind(m.start()) != StateKind::Existential {
        return false;
    }
    let mut reads = FxHashSet::default();
    m.rules_from(m.start()).all(|(_, r)| reads.insert(r.reads.clone()))
}

/// Ensures the start state is existential with at most one rule per scanned
/// symbol, prepending a fresh start that rewrites the scanned symbol and
/// enters the old start when needed.
pub fn normalize_start(m: &Machine) -> Machine {
    if has_deterministic_existential_start(m) {
        return m.clone();
    }
    let mut parts = m.clone().into_parts();
    let old = parts.start;
    let name = parts.fresh_name("init");
    let fresh = parts.add_state(name, StateKind::Existential);
    for reads in symbol_vectors(&parts.tape_alphabet, parts.tapes) {
        let acts = reads.iter().map(|&s| Action::Write(s)).collect();
        parts.rules.push(TransitionRule { from: fresh, reads, acts, to: old });
    }
    parts.start = fresh;
    parts.build()
}

/// Extra budget a normalized machine needs: one configuration and one pivot level.
pub fn normalize_start_budget(b: &Budget) -> Budget {
    b.plus(1)
}

fn symbol_vectors(gamma: &[Symbol], tapes: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..tapes {
        out = out
            .into_iter()
            .flat_map(|v| {
                gamma.iter().map(move |&g| {
                    let mut w = v.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out
}

fn same_set(a: &[Symbol], b: &[Symbol]) -> bool {
    let x: FxHashSet<_> = a.iter().collect();
    let y: FxHashSet<_> = b.iter().collect();
    x == y
}

/// Two-tape product of `m0` and `m1` that runs `m0` on the first tape and
/// `m1` on the second, handing control to the other machine only when a
/// universal phase of `m0` or an existential phase of `m1` ends.
///
/// Intended for `m0` without rejected configurations and `m1` without
/// accepted ones. `m0` is start-normalized first. A deterministic universal
/// preamble copies the input onto the second tape and rewinds both heads.
pub fn combine(m0: &Machine, m1: &Machine) -> Result<Machine, TransformError> {
    require_single_tape("combine", m0)?;
    require_single_tape("combine", m1)?;
    if !same_set(m0.input_alphabet(), m1.input_alphabet()) {
        return Err(TransformError::AlphabetMismatch("input alphabets differ".into()));
    }
    if !same_set(m0.tape_alphabet(), m1.tape_alphabet()) {
        return Err(TransformError::AlphabetMismatch("tape alphabets differ".into()));
    }
    if m0.blank() != m1.blank() {
        return Err(TransformError::AlphabetMismatch("blank symbols differ".into()));
    }
    let m0 = normalize_start(m0);
    let gamma = m0.tape_alphabet().to_vec();
    let sigma = m0.input_alphabet().to_vec();
    let blank = m0.blank();
    let mut parts = MachineParts {
        name: format!("{}*{}", m0.name(), m1.name()),
        tapes: 2,
        input_alphabet: sigma.clone(),
        tape_alphabet: gamma.clone(),
        blank,
        states: Vec::new(),
        start: StateId(0),
        rules: Vec::new(),
    };

    let n0 = m0.states().len();
    let n1 = m1.states().len();
    let product = |q0: StateId, q1: StateId, j: usize| StateId(((q0.index() * n1 + q1.index()) * 2 + j) as u32);
    let mut taken = FxHashSet::default();
    for (i0, s0) in m0.states().iter().enumerate() {
        for (i1, s1) in m1.states().iter().enumerate() {
            for (j, kind) in [(0, s0.kind), (1, s1.kind)] {
                let name = unique(&mut taken, format!("{}|{}|{j}", s0.name, s1.name));
                debug_assert_eq!(product(StateId(i0 as u32), StateId(i1 as u32), j).index(), parts.states.len());
                parts.states.push(StateDecl { name, kind });
            }
        }
    }
    let pre: Vec<StateId> = (0..4)
        .map(|i| {
            let name = unique(&mut taken, format!("copy{i}"));
            parts.add_state(name, StateKind::Universal)
        })
        .collect();
    parts.start = pre[0];

    let rule = |from, reads: [Symbol; 2], acts: [Action; 2], to| TransitionRule {
        from,
        reads: reads.to_vec(),
        acts: acts.to_vec(),
        to,
    };
    let (r, l, w) = (Action::MoveRight, Action::MoveLeft, Action::Write);
    parts.rules.push(rule(pre[0], [blank, blank], [r, r], pre[1]));
    for &s in &sigma {
        parts.rules.push(rule(pre[1], [s, blank], [w(s), w(s)], pre[2]));
        parts.rules.push(rule(pre[2], [s, s], [r, r], pre[1]));
    }
    parts.rules.push(rule(pre[1], [blank, blank], [l, l], pre[3]));
    for &s in &sigma {
        parts.rules.push(rule(pre[3], [s, s], [l, l], pre[3]));
    }
    parts.rules.push(rule(pre[3], [blank, blank], [w(blank), w(blank)], product(m0.start(), m1.start(), 0)));

    for r0 in m0.rules() {
        let stay = m0.kind(r0.from) == StateKind::Universal && m0.kind(r0.to) == StateKind::Universal;
        let j = if stay { 0 } else { 1 };
        for q1 in (0..n1).map(|i| StateId(i as u32)) {
            for &d in &gamma {
                parts.rules.push(rule(product(r0.from, q1, 0), [r0.reads[0], d], [r0.acts[0], w(d)], product(r0.to, q1, j)));
            }
        }
    }
    for r1 in m1.rules() {
        let stay = m1.kind(r1.from) == StateKind::Existential && m1.kind(r1.to) == StateKind::Existential;
        let j = if stay { 1 } else { 0 };
        for q0 in (0..n0).map(|i| StateId(i as u32)) {
            for &g in &gamma {
                parts.rules.push(rule(product(q0, r1.from, 1), [g, r1.reads[0]], [w(g), r1.acts[0]], product(q0, r1.to, j)));
            }
        }
    }
    Ok(parts.build())
}

fn unique(taken: &mut FxHashSet<String>, name: String) -> String {
    let chosen = if taken.contains(&name) {
        (1..).map(|i| format!("{name}~{i}")).find(|n| !taken.contains(n)).unwrap()
    } else {
        name
    };
    taken.insert(chosen.clone());
    chosen
}
