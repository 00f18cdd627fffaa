use std::fmt::Write as _;

use super::machine_text::{parse_machine_lines, serialize_machine, tokens, COMMENT};
use crate::error::{CompileError, ParseError, SpecError};
use crate::hierarchy::{compile_pi11, compile_prefix, FormulaSpec, MatrixAcceptor, Quantifier};
use crate::machine::Machine;

/// Step bound used when a spec document has no `steps` line.
pub const DEFAULT_STEP_BOUND: usize = 1000;

/// What a spec document asks the compilers to build.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpecDocument {
    Prefix(FormulaSpec),
    /// The staged `∀f ∃x` machine over a two-slot matrix.
    Pi11(MatrixAcceptor),
}

impl SpecDocument {
    pub fn compile(&self) -> Result<Machine, SpecError> {
        Ok(match self {
            SpecDocument::Prefix(spec) => compile_prefix(spec)?,
            SpecDocument::Pi11(mx) => compile_pi11(mx)?,
        })
    }

    pub fn matrix(&self) -> &MatrixAcceptor {
        match self {
            SpecDocument::Prefix(spec) => &spec.matrix,
            SpecDocument::Pi11(mx) => mx,
        }
    }
}

/// Parses a spec document:
///
/// ```text
/// prefix exists 1 forall 2
/// steps 500
/// matrix:
/// machine ...
/// ```
///
/// `prefix pi11` selects the staged machine, whose matrix takes two slots.
/// An optional `arity N` line states how many slots the matrix reads and
/// must agree with the prefix. Everything after `matrix:` is a machine
/// document.
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let mut blocks: Option<Vec<(Quantifier, usize)>> = None;
    let mut pi11 = false;
    let mut steps = DEFAULT_STEP_BOUND;
    let mut declared_arity = None;
    let mut lines = text.lines().enumerate();
    let mut matrix_at = None;
    let syntax = |line: usize, column: usize, message: String| ParseError::Syntax { line, column, message };

    for (i, raw) in lines.by_ref() {
        let line = i + 1;
        let toks: Vec<(usize, &str)> = tokens(raw).into_iter().map(|t| (t.column, t.text)).collect();
        let Some(&(col, head)) = toks.first() else { continue };
        if head.starts_with(COMMENT) {
            continue;
        }
        match head {
            "prefix" => {
                let args = &toks[1..];
                if args.len() == 1 && args[0].1 == "pi11" {
                    pi11 = true;
                    blocks = Some(Vec::new());
                    continue;
                }
                if args.is_empty() || args.len() % 2 != 0 {
                    return Err(syntax(line, col, "prefix takes `pi11` or quantifier/count pairs".into()).into());
                }
                let mut out = Vec::new();
                for pair in args.chunks(2) {
                    let q = match pair[0].1 {
                        "exists" => Quantifier::Exists,
                        "forall" => Quantifier::Forall,
                        other => return Err(syntax(line, pair[0].0, format!("unknown quantifier {other:?}")).into()),
                    };
                    let n = pair[1]
                        .1
                        .parse::<usize>()
                        .map_err(|_| syntax(line, pair[1].0, "expected a variable count".into()))?;
                    out.push((q, n));
                }
                blocks = Some(out);
            }
            "steps" => {
                let Some(&(c, n)) = toks.get(1) else {
                    return Err(syntax(line, col, "steps needs a bound".into()).into());
                };
                steps = n.parse().map_err(|_| syntax(line, c, "expected a step bound".into()))?;
            }
            "arity" => {
                let Some(&(c, n)) = toks.get(1) else {
                    return Err(syntax(line, col, "arity needs a slot count".into()).into());
                };
                declared_arity = Some(n.parse::<usize>().map_err(|_| syntax(line, c, "expected a slot count".into()))?);
            }
            "matrix:" => {
                matrix_at = Some(line);
                break;
            }
            other => return Err(syntax(line, col, format!("unknown keyword {other:?}")).into()),
        }
    }

    let total = text.lines().count();
    let Some(offset) = matrix_at else {
        return Err(syntax(total + 1, 1, "missing `matrix:` section".into()).into());
    };
    let Some(blocks) = blocks else {
        return Err(syntax(1, 1, "missing `prefix` line".into()).into());
    };
    let rest: Vec<&str> = lines.map(|(_, l)| l).collect();
    let machine = parse_machine_lines(&rest.join("\n"), offset)?;
    let expected = if pi11 { 2 } else { blocks.iter().map(|b| b.1).sum() };
    let matrix = MatrixAcceptor::new(machine, declared_arity.unwrap_or(expected), steps)?;
    if pi11 {
        if matrix.arity() != 2 {
            return Err(CompileError::ArityMismatch { matrix: matrix.arity(), expected: 2 }.into());
        }
        return Ok(SpecDocument::Pi11(matrix));
    }
    Ok(SpecDocument::Prefix(FormulaSpec::new(blocks, matrix)?))
}

pub fn serialize_spec(doc: &SpecDocument) -> String {
    let mut out = String::from("prefix");
    match doc {
        SpecDocument::Prefix(spec) => {
            for (q, n) in &spec.blocks {
                let _ = write!(out, " {q} {n}");
            }
        }
        SpecDocument::Pi11(_) => out.push_str(" pi11"),
    }
    let mx = doc.matrix();
    let _ = writeln!(out, "\narity {}\nsteps {}\nmatrix:", mx.arity(), mx.step_bound());
    out.push_str(&serialize_machine(doc.matrix().machine()));
    out
}
