use std::fmt::Write as _;

use crate::error::ParseError;
use crate::machine::{
    Action, Machine, MachineParts, StateDecl, StateId, StateKind, Symbol, TransitionRule, MOVE_LEFT_GLYPH,
    MOVE_RIGHT_GLYPH,
};

/// Lines starting with this token are ignored.
pub const COMMENT: &str = "//";

/// Writes `m` as a machine document.
///
/// ```text
/// machine even-length
/// tapes 1
/// input a
/// gamma a_
/// blank _
/// start q0
/// state q0 universal
/// state rej existential
/// rule q0 a + q1
/// ```
///
/// Rules use one glyph per tape for the read and the action tokens; an
/// action glyph is `+`, `-` or the symbol to write.
pub fn serialize_machine(m: &Machine) -> String {
    let glyphs = |s: &[Symbol]| s.iter().map(|g| g.glyph()).collect::<String>();
    let mut out = String::new();
    let _ = writeln!(out, "machine {}", m.name());
    let _ = writeln!(out, "tapes {}", m.tapes());
    let _ = writeln!(out, "input {}", glyphs(m.input_alphabet()));
    let _ = writeln!(out, "gamma {}", glyphs(m.tape_alphabet()));
    let _ = writeln!(out, "blank {}", m.blank());
    let _ = writeln!(out, "start {}", m.state_name(m.start()));
    for s in m.states() {
        let _ = writeln!(out, "state {} {}", s.name, s.kind.keyword());
    }
    for r in m.rules() {
        let acts: String = r.acts.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "rule {} {} {} {}", m.state_name(r.from), glyphs(&r.reads), acts, m.state_name(r.to));
    }
    out
}

/// Parses and validates a machine document.
pub fn parse_machine(text: &str) -> Result<Machine, ParseError> {
    parse_machine_lines(text, 0)
}

pub(crate) struct Token<'a> {
    pub(crate) text: &'a str,
    pub(crate) column: usize,
}

/// Whitespace-separated tokens with their 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

fn symbols(tok: &Token<'_>, line: usize) -> Result<Vec<Symbol>, ParseError> {
    tok.text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            if c.is_ascii_graphic() {
                Ok(Symbol::from(c))
            } else {
                Err(err(line, tok.column + i, format!("{c:?} is not a printable ASCII glyph")))
            }
        })
        .collect()
}

struct Pending<'a> {
    line: usize,
    from: Token<'a>,
    reads: Vec<Symbol>,
    acts: Vec<Action>,
    to: Token<'a>,
}

/// Parses a machine whose first line is line `offset + 1` of a larger file.
pub(crate) fn parse_machine_lines(text: &str, offset: usize) -> Result<Machine, ParseError> {
    let mut name = None;
    let mut tapes = None;
    let mut input = None;
    let mut gamma = None;
    let mut blank = None;
    let mut start: Option<(usize, Token<'_>)> = None;
    let mut states: Vec<StateDecl> = Vec::new();
    let mut pending = Vec::new();
    let mut last_line = offset;

    for (i, raw) in text.lines().enumerate() {
        let line = offset + i + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(head) = toks.first() else { continue };
        if head.text.starts_with(COMMENT) {
            continue;
        }
        let args = &toks[1..];
        let want = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                let col = args.get(n).map_or(raw.trim_end().chars().count() + 1, |t| t.column);
                Err(err(line, col, format!("`{}` takes {n} argument(s), got {}", head.text, args.len())))
            }
        };
        match head.text {
            "machine" => {
                if args.is_empty() {
                    return Err(err(line, head.column, "machine needs a name"));
                }
                let from = raw.find("machine").unwrap() + "machine".len();
                name = Some(raw[from..].trim().to_string());
            }
            "tapes" => {
                want(1)?;
                let t = args[0].text.parse::<usize>().map_err(|_| err(line, args[0].column, "expected a tape count"))?;
                tapes = Some(t);
            }
            "input" => {
                if args.len() > 1 {
                    return Err(err(line, args[1].column, "input alphabet is a single token"));
                }
                input = Some(match args.first() {
                    Some(t) => symbols(t, line)?,
                    None => Vec::new(),
                });
            }
            "gamma" => {
                want(1)?;
                gamma = Some(symbols(&args[0], line)?);
            }
            "blank" => {
                want(1)?;
                let s = symbols(&args[0], line)?;
                if s.len() != 1 {
                    return Err(err(line, args[0].column, "blank must be one glyph"));
                }
                blank = Some(s[0]);
            }
            "start" => {
                want(1)?;
                start = Some((line, Token { text: args[0].text, column: args[0].column }));
            }
            "state" => {
                want(2)?;
                let kind = match args[1].text {
                    "existential" => StateKind::Existential,
                    "universal" => StateKind::Universal,
                    other => {
                        return Err(err(line, args[1].column, format!("unknown state kind {other:?}")));
                    }
                };
                if states.iter().any(|s| s.name == args[0].text) {
                    return Err(err(line, args[0].column, format!("state {:?} declared twice", args[0].text)));
                }
                states.push(StateDecl { name: args[0].text.to_string(), kind });
            }
            "rule" => {
                want(4)?;
                let reads = symbols(&args[1], line)?;
                let acts = args[2]
                    .text
                    .chars()
                    .enumerate()
                    .map(|(k, c)| match c {
                        MOVE_RIGHT_GLYPH => Ok(Action::MoveRight),
                        MOVE_LEFT_GLYPH => Ok(Action::MoveLeft),
                        c if c.is_ascii_graphic() => Ok(Action::Write(Symbol::from(c))),
                        c => Err(err(line, args[2].column + k, format!("{c:?} is not a printable ASCII glyph"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                pending.push(Pending {
                    line,
                    from: Token { text: args[0].text, column: args[0].column },
                    reads,
                    acts,
                    to: Token { text: args[3].text, column: args[3].column },
                });
            }
            other => return Err(err(line, head.column, format!("unknown keyword {other:?}"))),
        }
    }

    let missing = |what: &str| err(last_line + 1, 1, format!("missing `{what}` line"));
    let name = name.ok_or_else(|| missing("machine"))?;
    let tapes = tapes.unwrap_or(1);
    let input_alphabet = input.ok_or_else(|| missing("input"))?;
    let tape_alphabet = gamma.ok_or_else(|| missing("gamma"))?;
    let blank = blank.ok_or_else(|| missing("blank"))?;
    if states.is_empty() {
        return Err(missing("state"));
    }
    let lookup = |line: usize, t: &Token<'_>| {
        states
            .iter()
            .position(|s| s.name == t.text)
            .map(|i| StateId(i as u32))
            .ok_or_else(|| err(line, t.column, format!("undeclared state {:?}", t.text)))
    };
    let start = match &start {
        Some((line, t)) => lookup(*line, t)?,
        None => StateId(0),
    };
    let mut rules = Vec::with_capacity(pending.len());
    for p in &pending {
        rules.push(TransitionRule { from: lookup(p.line, &p.from)?, reads: p.reads.clone(), acts: p.acts.clone(), to: lookup(p.line, &p.to)? });
    }
    let m = MachineParts { name, tapes, input_alphabet, tape_alphabet, blank, states, start, rules }.build();
    let report = m.validate();
    if report.is_ok() {
        Ok(m)
    } else {
        Err(ParseError::Invalid(report.violations))
    }
}
