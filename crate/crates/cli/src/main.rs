use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use atm_core::format::{export_graph, parse_machine, parse_spec, serialize_machine, ExportFormat};
use atm_core::hierarchy::classify_level;
use atm_core::transforms::{combine, dual, normalize_start, one_sided, Side};
use atm_core::{
    analyze, check_local_closure, is_alternation_wf, parse_input, solve_game, Budget, Machine, Verdict,
};

/// Exit status when the arguments could not be parsed.
const EXIT_USAGE: u8 = 3;
/// Exit status for unreadable, malformed or invalid inputs.
const EXIT_INPUT: u8 = 4;
/// Exit status when `selfcheck` finds a disagreement.
const EXIT_CHECK: u8 = 5;

#[derive(Parser)]
#[command(name = "atm", version)]
#[command(about = "Alternating Turing machines with pivot-based acceptance")]
#[command(after_help = "Exit status: 0 accepted, 1 rejected, 2 unknown, 3 usage error, 4 bad input, 5 failed self-check.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a machine document for well-formedness
    Validate { file: PathBuf },
    /// Decide one input and report the verdict of the initial configuration
    Run {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also write the solved pivot graph: FORMAT is dot or structured
        #[arg(long, num_args = 2, value_names = ["FORMAT", "PATH"])]
        export: Option<Vec<String>>,
    },
    /// Rewrite a machine
    Transform {
        file: PathBuf,
        #[arg(long)]
        op: Op,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Two-tape product of a one-sided acceptor and a one-sided rejector
    Combine {
        file0: PathBuf,
        file1: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count alternation pivots along the explored branches
    Classify {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compile a quantifier-prefix spec into a machine
    Compile {
        #[arg(long)]
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the solver against the local closure property and the game solver
    Selfcheck {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Dual,
    Plus,
    Minus,
    NormalizeStart,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().max_configs)]
    max_configs: usize,
    #[arg(long, default_value_t = Budget::default().max_phase_steps)]
    max_phase_steps: usize,
    #[arg(long, default_value_t = Budget::default().max_pivot_depth)]
    max_pivot_depth: usize,
}

impl BudgetArgs {
    fn budget(&self) -> anyhow::Result<Budget> {
        if self.max_configs == 0 || self.max_phase_steps == 0 || self.max_pivot_depth == 0 {
            return Err(anyhow!("budget caps must be positive"));
        }
        Ok(Budget::new(self.max_configs, self.max_phase_steps, self.max_pivot_depth))
    }
}

fn load(path: &Path) -> anyhow::Result<Machine> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_machine(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Accepted => 0,
        Verdict::Rejected => 1,
        Verdict::Unknown => 2,
    }
}

fn execute(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let m = parse_machine(&text).with_context(|| format!("parsing {}", file.display()))?;
            let report = m.validate();
            for w in &report.warnings {
                println!("warning: {w}");
            }
            println!("ok: {} ({} states, {} rules, {} tape(s))", m.name(), m.states().len(), m.rules().len(), m.tapes());
            Ok(0)
        }
        Command::Run { file, input, budget, export } => {
            let m = load(&file)?;
            let w = parse_input(&m, &input)?;
            let a = analyze(&m, &w, &budget.budget()?)?;
            if let Some(spec) = export {
                let format = match spec[0].as_str() {
                    "dot" => ExportFormat::Dot,
                    "structured" | "json" => ExportFormat::Structured,
                    other => return Err(anyhow!("unknown export format {other:?}; expected dot or structured")),
                };
                let path = Path::new(&spec[1]);
                fs::write(path, export_graph(&m, &a.graph, &a.solution, format))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let s = &a.solution;
            println!("verdict: {}", a.verdict());
            println!("nodes: {}", a.graph.len());
            println!("pivot edges: {}", a.graph.edge_count());
            println!("explored configurations: {}", a.graph.explored_configs());
            println!("accepted/rejected/unknown: {}/{}/{}", s.count(Verdict::Accepted), s.count(Verdict::Rejected), s.count(Verdict::Unknown));
            println!("iterations: ac {} rc {}", s.ac_iterations, s.rc_iterations);
            println!("budget exhausted: {}", s.budget_exhausted);
            Ok(verdict_code(a.verdict()))
        }
        Command::Transform { file, op, output } => {
            let m = load(&file)?;
            let out = match op {
                Op::Dual => dual(&m),
                Op::Plus => one_sided(&m, Side::Plus)?,
                Op::Minus => one_sided(&m, Side::Minus)?,
                Op::NormalizeStart => normalize_start(&m),
            };
            emit(&serialize_machine(&out), output.as_deref())?;
            Ok(0)
        }
        Command::Combine { file0, file1, output } => {
            let out = combine(&load(&file0)?, &load(&file1)?)?;
            emit(&serialize_machine(&out), output.as_deref())?;
            Ok(0)
        }
        Command::Classify { file, input, budget } => {
            let m = load(&file)?;
            let w = parse_input(&m, &input)?;
            let r = classify_level(&m, &w, &budget.budget()?)?;
            let show = |v: Option<usize>| v.map_or("cycle".to_string(), |k| k.to_string());
            println!("start: {}", r.start_kind.keyword());
            println!("max pivots: {}", show(r.max_pivots));
            println!("max pivots on complete branches: {}", show(r.complete_branch_max));
            println!("pivot cycle: {}", r.pivot_cycle);
            println!("budget exhausted: {}", r.budget_exhausted);
            match (r.claim, r.observed()) {
                (Some(level), _) => println!("level: {level}"),
                (None, Some(level)) => println!("level: unknown (observed {level})"),
                (None, None) => println!("level: unknown"),
            }
            Ok(if r.claim.is_some() { 0 } else { 2 })
        }
        Command::Compile { spec, output } => {
            let text = fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let doc = parse_spec(&text).with_context(|| format!("parsing {}", spec.display()))?;
            emit(&serialize_machine(&doc.compile()?), output.as_deref())?;
            Ok(0)
        }
        Command::Selfcheck { file, input, budget } => {
            let m = load(&file)?;
            let w = parse_input(&m, &input)?;
            let a = analyze(&m, &w, &budget.budget()?)?;
            let closure = check_local_closure(&a.graph, &a.solution);
            let game = solve_game(&a.graph);
            let mismatches = a.solution.verdicts.iter().zip(&game.verdicts).filter(|(x, y)| x != y).count();
            println!("verdict: {}", a.verdict());
            println!("local closure: {} checked, {} skipped, {} violation(s)", closure.checked, closure.skipped_truncated, closure.violations.len());
            for v in &closure.violations {
                println!("  node {}: found {}, expected {}", v.node.0, v.found, v.expected);
            }
            println!("game solver: {mismatches} mismatch(es) over {} node(s)", game.verdicts.len());
            println!("alternation well-founded: {:?}", is_alternation_wf(&a.graph));
            Ok(if closure.is_ok() && mismatches == 0 { 0 } else { EXIT_CHECK })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
