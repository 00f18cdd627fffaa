use atm_core::corpus::{inputs, sample_corpus, CorpusShape};
use atm_core::semantics::explore_phase;
use atm_core::{
    analyze, build_pivot_graph, check_local_closure, classify_config, decide, initial_config, input_symbols,
    is_alternation_wf, solve_fixpoint, solve_game, successors, zoo, Budget, Configuration, MachineBuilder, StateKind,
    Symbol, Tape, Verdict, Wellfounded,
};

const BLANK: Symbol = Symbol(b'_');

#[test]
fn initial_configuration_layout() {
    let m = zoo::universal_only();
    let c = initial_config(&m, &input_symbols("ab")).unwrap();
    assert_eq!(c.state, m.start());
    assert_eq!(c.tapes.len(), 1);
    assert_eq!(c.tapes[0], Tape::new(&[], BLANK, &input_symbols("ab"), BLANK));
    let two = MachineBuilder::new("two", "a", "a_", '_').tapes(2).universal("u").build();
    let c = initial_config(&two, &input_symbols("a")).unwrap();
    assert_eq!(c.tapes[1], Tape::new(&[], BLANK, &[], BLANK));
    assert!(initial_config(&m, &input_symbols("z")).is_err());
}

#[test]
fn yield_relation_cases() {
    let m = MachineBuilder::new("y", "ab", "abx_", '_')
        .universal("q")
        .universal("r")
        .rule("q", '_', '+', "r")
        .rule("q", 'a', '-', "r")
        .rule("q", 'a', 'b', "r")
        .build();
    let q = m.state_by_name("q").unwrap();
    let r = m.state_by_name("r").unwrap();
    let s = input_symbols;

    let c = Configuration::new(q, [Tape::new(&[], BLANK, &[], BLANK)]);
    assert_eq!(successors(&m, &c), vec![(0, Configuration::new(r, [Tape::new(&[BLANK], BLANK, &[], BLANK)]))]);

    let c = Configuration::new(q, [Tape::new(&[], Symbol(b'a'), &s("b"), BLANK)]);
    let next = successors(&m, &c);
    assert_eq!(next[0], (1, Configuration::new(r, [Tape::new(&[], Symbol(b'a'), &s("b"), BLANK)])));

    let c = Configuration::new(q, [Tape::new(&s("x"), Symbol(b'a'), &[], BLANK)]);
    assert_eq!(successors(&m, &c)[1], (2, Configuration::new(r, [Tape::new(&s("x"), Symbol(b'b'), &[], BLANK)])));
}

#[test]
fn dead_ends_are_leaves_by_kind() {
    let u = zoo::universal_only();
    let c = initial_config(&u, &[]).unwrap();
    assert_eq!(classify_config(&u, &c), (StateKind::Universal, true));
    let e = zoo::existential_only();
    assert_eq!(classify_config(&e, &initial_config(&e, &[]).unwrap()), (StateKind::Existential, true));
    let t = zoo::right_runner(StateKind::Universal);
    assert_eq!(classify_config(&t, &initial_config(&t, &[]).unwrap()), (StateKind::Universal, false));
}

#[test]
fn phase_examples() {
    let b = Budget::default();
    let m = zoo::existential_self_loop();
    let p = explore_phase(&m, &initial_config(&m, &[]).unwrap(), &b);
    assert!(p.complete);
    assert!(p.pivots.is_empty());
    let m = zoo::two_phase();
    let p = explore_phase(&m, &initial_config(&m, &[]).unwrap(), &b);
    assert_eq!(p.pivots.len(), 1);
    assert_eq!(m.kind(p.pivots[0].state), StateKind::Universal);
}

#[test]
fn graph_examples() {
    let m = zoo::universal_only();
    let g = build_pivot_graph(&m, &initial_config(&m, &input_symbols("a")).unwrap(), &Budget::default());
    assert_eq!((g.len(), g.edge_count()), (1, 0));
    assert!(g.is_fully_explored());

    let m = zoo::two_phase();
    let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::default());
    assert_eq!((g.len(), g.edge_count()), (2, 1));

    let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::uniform(1));
    assert_eq!(g.len(), 2);
    let truncated: Vec<_> = g.truncated().collect();
    assert_eq!(truncated.len(), 1);
    assert_ne!(truncated[0], atm_core::PivotGraph::ROOT);
}

#[test]
fn verdict_examples() {
    let b = Budget::default();
    for w in ["", "a", "abc"] {
        assert_eq!(decide(&zoo::universal_only(), &input_symbols(w), &b).unwrap(), Verdict::Accepted);
        assert_eq!(decide(&zoo::existential_only(), &input_symbols(w), &b).unwrap(), Verdict::Rejected);
    }
    assert_eq!(decide(&zoo::existential_self_loop(), &[], &b).unwrap(), Verdict::Rejected);
    assert_eq!(decide(&zoo::mutual_pivot(), &[], &b).unwrap(), Verdict::Unknown);
    assert_eq!(decide(&zoo::right_runner(StateKind::Existential), &[], &Budget::uniform(3)).unwrap(), Verdict::Unknown);
}

#[test]
fn game_solver_examples() {
    for (m, v) in [(zoo::universal_only(), Verdict::Accepted), (zoo::existential_only(), Verdict::Rejected)] {
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::default());
        assert_eq!(solve_game(&g).root(), v);
    }
}

#[test]
fn closure_check_catches_a_flipped_verdict() {
    let m = zoo::alternating_guess();
    let a = analyze(&m, &input_symbols("ab"), &Budget::default()).unwrap();
    assert!(check_local_closure(&a.graph, &a.solution).is_ok());
    let i = a.solution.verdicts.iter().position(|v| *v == Verdict::Accepted).expect("some accepted node");
    let mut bad = a.solution.clone();
    bad.verdicts[i] = Verdict::Rejected;
    assert!(!check_local_closure(&a.graph, &bad).is_ok());
}

#[test]
fn closure_check_skips_truncated_nodes() {
    let m = zoo::two_phase();
    let a = analyze(&m, &[], &Budget::uniform(1)).unwrap();
    let r = check_local_closure(&a.graph, &a.solution);
    assert_eq!(r.skipped_truncated, 1);
    assert!(r.is_ok());
}

#[test]
fn well_foundedness_examples() {
    let g = |m: &atm_core::Machine, b: Budget| build_pivot_graph(m, &initial_config(m, &[]).unwrap(), &b);
    assert_eq!(is_alternation_wf(&g(&zoo::mutual_pivot(), Budget::default())), Wellfounded::No);
    assert_eq!(is_alternation_wf(&g(&zoo::universal_only(), Budget::default())), Wellfounded::Yes);
    assert_eq!(is_alternation_wf(&g(&zoo::two_phase(), Budget::uniform(1))), Wellfounded::Unknown);
}

#[test]
fn corpus_graphs_respect_kind_alternation() {
    for m in sample_corpus(7, 500, &CorpusShape::default()) {
        for w in inputs(&m, 2) {
            let a = analyze(&m, &input_symbols(&w), &Budget::uniform(200)).unwrap();
            let g = &a.graph;
            for id in g.ids() {
                let n = g.node(id);
                assert_eq!(n.kind, m.kind(n.config.state));
                for p in n.pivots() {
                    assert_ne!(g.node(*p).kind, n.kind);
                }
            }
            let s = solve_fixpoint(g);
            for id in g.truncated() {
                assert_eq!(s.verdict(id), Verdict::Unknown);
            }
        }
    }
}
