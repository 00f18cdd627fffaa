//! Small hand-built machines used by tests, benches and the CLI self-check.

use crate::machine::{Machine, MachineBuilder, StateKind};

/// One universal state and no rules: every input is accepted vacuously.
pub fn universal_only() -> Machine {
    MachineBuilder::new("U0", "abc", "abc_", '_').universal("u").build()
}

/// One existential state and no rules: every input is rejected.
pub fn existential_only() -> Machine {
    MachineBuilder::new("E0", "abc", "abc_", '_').existential("e").build()
}

/// An existential state rewriting the scanned symbol forever.
pub fn existential_self_loop() -> Machine {
    let mut b = MachineBuilder::new("self-loop", "ab", "ab_", '_').existential("q");
    for g in "ab_".chars() {
        b = b.rule("q", g, g, "q");
    }
    b.build()
}

/// Two states of opposite kinds stepping into each other forever.
pub fn mutual_pivot() -> Machine {
    MachineBuilder::new("mutual-pivot", "a", "a_", '_')
        .existential("e")
        .universal("u")
        .rule("e", '_', '_', "u")
        .rule("u", '_', '_', "e")
        .build()
}

/// Existential start stepping right into a universal dead end.
pub fn two_phase() -> Machine {
    MachineBuilder::new("two-phase", "a", "a_", '_')
        .existential("s")
        .universal("halt")
        .rule("s", '_', '+', "halt")
        .build()
}

/// Existential states only; walks to the end of the input and stops.
pub fn existential_walker() -> Machine {
    MachineBuilder::new("walker", "ab", "ab_", '_')
        .existential("s")
        .existential("r")
        .rule("s", '_', '+', "r")
        .rule("r", 'a', '+', "r")
        .rule("r", 'b', '+', "r")
        .build()
}

/// A single state of the given kind moving right forever.
pub fn right_runner(kind: StateKind) -> Machine {
    let mut b = MachineBuilder::new("runner", "a", "a_", '_').state("r", kind);
    for g in "a_".chars() {
        b = b.rule("r", g, '+', "r");
    }
    b.build()
}

fn parity(name: &str, accept_even: bool) -> Machine {
    let (on_even, on_odd) = if accept_even { ("acc", "rej") } else { ("rej", "acc") };
    MachineBuilder::new(name, "a", "a_", '_')
        .universal("s")
        .universal("even")
        .universal("odd")
        .universal("acc")
        .existential("rej")
        .rule("s", '_', '+', "even")
        .rule("even", 'a', '+', "odd")
        .rule("odd", 'a', '+', "even")
        .rule("even", '_', '_', on_even)
        .rule("odd", '_', '_', on_odd)
        .build()
}

/// Deterministic acceptor of even-length words over `{a}`; odd ones are rejected.
pub fn even_length_acceptor() -> Machine {
    parity("even", true)
}

/// Deterministic acceptor of odd-length words over `{a}`; even ones are rejected.
pub fn odd_length_acceptor() -> Machine {
    parity("odd", false)
}

/// Guesses a position holding `a`.
pub fn contains_a() -> Machine {
    MachineBuilder::new("contains-a", "ab", "ab_", '_')
        .existential("s")
        .existential("scan")
        .universal("yes")
        .rule("s", '_', '+', "scan")
        .rule("scan", 'a', 'a', "yes")
        .rule("scan", 'a', '+', "scan")
        .rule("scan", 'b', '+', "scan")
        .build()
}

/// Checks every position universally for `b`.
pub fn all_b() -> Machine {
    MachineBuilder::new("all-b", "ab", "ab_", '_')
        .universal("s")
        .universal("scan")
        .existential("no")
        .rule("s", '_', '+', "scan")
        .rule("scan", 'b', '+', "scan")
        .rule("scan", 'a', 'a', "no")
        .build()
}

fn first_symbol(name: &str, wanted: bool) -> Machine {
    let (on_a, other) = if wanted { ("yes", "no") } else { ("no", "yes") };
    MachineBuilder::new(name, "ab", "ab_", '_')
        .universal("s")
        .universal("look")
        .universal("yes")
        .existential("no")
        .rule("s", '_', '+', "look")
        .rule("look", 'a', 'a', on_a)
        .rule("look", 'b', 'b', other)
        .rule("look", '_', '_', other)
        .build()
}

/// Accepts words starting with `a`, rejects the rest.
pub fn starts_with_a() -> Machine {
    first_symbol("starts-with-a", true)
}

/// Accepts words not starting with `a`, rejects the rest.
pub fn not_starts_with_a() -> Machine {
    first_symbol("not-starts-with-a", false)
}

/// A machine for a language, one for its complement, and the language itself.
pub struct ComplementaryPair {
    pub name: &'static str,
    pub language: Machine,
    pub complement: Machine,
    pub member: fn(&str) -> bool,
}

pub fn complementary_pairs() -> Vec<ComplementaryPair> {
    vec![
        ComplementaryPair {
            name: "even/odd",
            language: even_length_acceptor(),
            complement: odd_length_acceptor(),
            member: |w| w.len() % 2 == 0,
        },
        ComplementaryPair {
            name: "contains-a/all-b",
            language: contains_a(),
            complement: all_b(),
            member: |w| w.contains('a'),
        },
        ComplementaryPair {
            name: "starts-with-a",
            language: starts_with_a(),
            complement: not_starts_with_a(),
            member: |w| w.starts_with('a'),
        },
    ]
}

/// Universal branching over two existential guesses, one of which loops.
pub fn alternating_guess() -> Machine {
    MachineBuilder::new("alternating-guess", "ab", "ab_", '_')
        .universal("s")
        .existential("g1")
        .existential("g2")
        .universal("acc")
        .existential("loop")
        .rule("s", '_', '+', "g1")
        .rule("s", '_', '+', "g2")
        .rule("g1", 'a', 'a', "acc")
        .rule("g1", 'b', 'b', "loop")
        .rule("g1", '_', '_', "loop")
        .rule("g2", 'a', '+', "g2")
        .rule("g2", 'b', '+', "g2")
        .rule("g2", '_', '_', "acc")
        .rule("loop", '_', '_', "loop")
        .rule("loop", 'a', 'a', "loop")
        .rule("loop", 'b', 'b', "loop")
        .build()
}

/// Every machine above, for sweeps.
pub fn all() -> Vec<Machine> {
    let mut v = vec![
        universal_only(),
        existential_only(),
        existential_self_loop(),
        mutual_pivot(),
        two_phase(),
        existential_walker(),
        right_runner(StateKind::Existential),
        right_runner(StateKind::Universal),
        even_length_acceptor(),
        odd_length_acceptor(),
        alternating_guess(),
    ];
    for p in complementary_pairs().into_iter().skip(1) {
        v.push(p.language);
        v.push(p.complement);
    }
    v
}


/// Deterministic matrices over `{a, b}` for the prefix compilers. Each runs
/// on `⊔ w # s1 # ... # sr` from the leftmost cell; `acc` is a universal
/// dead end, `rej` an existential one.
pub mod matrices {
    use crate::hierarchy::MatrixAcceptor;
    use crate::machine::MachineBuilder;

    const STEP_BOUND: usize = 1000;

    fn base(name: &str) -> MachineBuilder {
        MachineBuilder::new(name, "ab", "ab#_", '_')
    }

    fn finish(b: MachineBuilder, arity: usize) -> MatrixAcceptor {
        MatrixAcceptor::new(b.build(), arity, STEP_BOUND).expect("zoo matrix is well formed")
    }

    /// Sends every symbol of `others` not handled yet from `from` to `to`, in place.
    fn otherwise(mut b: MachineBuilder, from: &str, others: &str, to: &str) -> MachineBuilder {
        for g in others.chars() {
            b = b.rule(from, g, g, to);
        }
        b
    }

    pub fn always_accept(arity: usize) -> MatrixAcceptor {
        finish(base("accept").universal("acc"), arity)
    }

    pub fn always_reject(arity: usize) -> MatrixAcceptor {
        finish(base("reject").existential("rej"), arity)
    }

    /// Accepts when the witness contains an `a`.
    pub fn witness_contains_a() -> MatrixAcceptor {
        let b = base("has-a")
            .universal("s")
            .universal("input")
            .universal("scan")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "input")
            .rule("input", 'a', '+', "input")
            .rule("input", 'b', '+', "input")
            .rule("input", '#', '+', "scan")
            .rule("scan", 'a', 'a', "acc")
            .rule("scan", 'b', '+', "scan")
            .rule("scan", '_', '_', "rej");
        finish(b, 1)
    }

    /// Accepts when the witness equals the input, marking matched cells as
    /// `A` and `B`.
    pub fn witness_equals_input() -> MatrixAcceptor {
        let mut b = MachineBuilder::new("equal", "ab", "abAB#_", '_')
            .universal("s")
            .universal("find")
            .universal("carry_a")
            .universal("carry_b")
            .universal("match_a")
            .universal("match_b")
            .universal("back")
            .universal("rest")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "find")
            .rule("find", 'A', '+', "find")
            .rule("find", 'B', '+', "find")
            .rule("find", 'a', 'A', "carry_a")
            .rule("find", 'b', 'B', "carry_b")
            .rule("find", '#', '+', "rest");
        for (carry, matcher, lower, upper, other) in [
            ("carry_a", "match_a", 'a', 'A', 'b'),
            ("carry_b", "match_b", 'b', 'B', 'a'),
        ] {
            for g in "abAB".chars() {
                b = b.rule(carry, g, '+', carry);
            }
            b = b
                .rule(carry, '#', '+', matcher)
                .rule(matcher, 'A', '+', matcher)
                .rule(matcher, 'B', '+', matcher)
                .rule(matcher, lower, upper, "back")
                .rule(matcher, other, other, "rej")
                .rule(matcher, '_', '_', "rej");
        }
        for g in "abAB#".chars() {
            b = b.rule("back", g, '-', "back");
        }
        b = b
            .rule("back", '_', '+', "find")
            .rule("rest", 'A', '+', "rest")
            .rule("rest", 'B', '+', "rest")
            .rule("rest", 'a', 'a', "rej")
            .rule("rest", 'b', 'b', "rej")
            .rule("rest", '_', '_', "acc");
        finish(b, 1)
    }

    /// Accepts when the input is non-empty and the witness starts with its first letter.
    pub fn witness_repeats_first_letter() -> MatrixAcceptor {
        let mut b = base("first-letter")
            .universal("s")
            .universal("first")
            .universal("skip_a")
            .universal("skip_b")
            .universal("check_a")
            .universal("check_b")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "first")
            .rule("first", 'a', 'a', "skip_a")
            .rule("first", 'b', 'b', "skip_b")
            .rule("first", '#', '#', "rej");
        for (skip, check, want, other) in [("skip_a", "check_a", 'a', 'b'), ("skip_b", "check_b", 'b', 'a')] {
            b = b
                .rule(skip, 'a', '+', skip)
                .rule(skip, 'b', '+', skip)
                .rule(skip, '#', '+', check)
                .rule(check, want, want, "acc")
                .rule(check, other, other, "rej")
                .rule(check, '_', '_', "rej");
        }
        finish(b, 1)
    }

    /// Rejects exactly the tuple `(a, b)`.
    pub fn reject_iff_tuple_ab() -> MatrixAcceptor {
        let mut b = base("not-ab")
            .universal("s")
            .universal("input")
            .universal("x1")
            .universal("x2")
            .universal("y1")
            .universal("y2")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "input")
            .rule("input", 'a', '+', "input")
            .rule("input", 'b', '+', "input")
            .rule("input", '#', '+', "x1")
            .rule("x1", 'a', '+', "x2")
            .rule("x2", '#', '+', "y1")
            .rule("y1", 'b', '+', "y2")
            .rule("y2", '_', '_', "rej");
        b = otherwise(b, "x1", "b#_", "acc");
        b = otherwise(b, "x2", "ab_", "acc");
        b = otherwise(b, "y1", "a#_", "acc");
        b = otherwise(b, "y2", "ab#", "acc");
        finish(b, 2)
    }

    /// Rejects exactly the witness `b`.
    pub fn reject_on_b() -> MatrixAcceptor {
        let mut b = base("not-b")
            .universal("s")
            .universal("input")
            .universal("x1")
            .universal("x2")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "input")
            .rule("input", 'a', '+', "input")
            .rule("input", 'b', '+', "input")
            .rule("input", '#', '+', "x1")
            .rule("x1", 'b', '+', "x2")
            .rule("x2", '_', '_', "rej");
        b = otherwise(b, "x1", "a#_", "acc");
        b = otherwise(b, "x2", "ab#", "acc");
        finish(b, 1)
    }

    /// On `⊔ w # z # x`: accepts when the part between the first and the
    /// last `#` is non-empty.
    pub fn zblock_nonempty() -> MatrixAcceptor {
        let b = base("z-nonempty")
            .universal("s")
            .universal("input")
            .universal("first")
            .universal("later")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "input")
            .rule("input", 'a', '+', "input")
            .rule("input", 'b', '+', "input")
            .rule("input", '#', '+', "first")
            .rule("first", 'a', 'a', "acc")
            .rule("first", 'b', 'b', "acc")
            .rule("first", '#', '+', "later")
            .rule("first", '_', '_', "rej")
            .rule("later", 'a', '+', "later")
            .rule("later", 'b', '+', "later")
            .rule("later", '#', '#', "acc")
            .rule("later", '_', '_', "rej");
        finish(b, 2)
    }

    /// On `⊔ w # z # x`: accepts when `x` is empty.
    pub fn x_is_empty() -> MatrixAcceptor {
        let mut b = base("x-empty")
            .universal("s")
            .universal("end")
            .universal("last")
            .universal("acc")
            .existential("rej")
            .rule("s", '_', '+', "end");
        for g in "ab#".chars() {
            b = b.rule("end", g, '+', "end");
        }
        b = b.rule("end", '_', '-', "last").rule("last", '#', '#', "acc");
        b = otherwise(b, "last", "ab", "rej");
        finish(b, 2)
    }
}
