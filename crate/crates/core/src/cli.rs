//! The `wob` command line.
//!
//! Exit codes: 0 ok, 1 negative verdict, 2 usage error, 3 budget exceeded,
//! 4 malformed input.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::json;

use crate::automata::text::{parse_automaton, write_automaton};
use crate::fgh::{dominates_at, eval_f, render_report, Budget, NotationSystem, Outcome, ShiftedSystem, StandardSystem};
use crate::fo::manifest::load_manifest;
use crate::fo::{compile_with_budget, parse_formula, DEFAULT_STATE_BUDGET};
use crate::hopda::{self, HopdaSpec};
use crate::ordinal::{parse_cnf, sample_limits, shifted_fs, standard_fs, Cnf};
use crate::pathology::{kreisel_as_automatic, nat_to_word, omega_plus_one_system, FExpr, FSpec, KreiselOrder, PiPredicate, P1};
use crate::recognition::{self, OrderPresentation, Verdict};
use crate::tm::{self, WfVerdict};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MALFORMED: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "wob", version, about = "Automatic structures, ordinal notations and fast-growing hierarchies")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Graphviz output for graph-producing commands.
    #[arg(long, global = true)]
    dot: bool,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print intermediate automata.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide a formula on a structure; prints `true`/`false` for sentences.
    Query {
        manifest: PathBuf,
        /// Formula file or literal s-expression.
        formula: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: usize,
        /// Satisfying tuples to list for formulas with free variables.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Order type of an automatic order presented by relation `<`.
    Recognize {
        manifest: PathBuf,
        #[arg(long)]
        max_levels: Option<usize>,
    },
    /// Cantor normal form arithmetic.
    Ord {
        #[command(subcommand)]
        op: OrdOp,
    },
    /// Fast-growing hierarchy.
    Fgh {
        #[command(subcommand)]
        op: FghOp,
    },
    /// Kreisel orders and the inflated w+1 system.
    Pathology {
        #[command(subcommand)]
        op: PathologyOp,
    },
    /// Turing machine configuration graphs.
    Tm {
        #[command(subcommand)]
        op: TmOp,
    },
    /// Higher-order pushdown automata.
    Hopda {
        #[command(subcommand)]
        op: HopdaOp,
    },
    /// Run the bundled corpus and print a pass/fail table.
    Corpus,
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Std,
    Shifted,
}

#[derive(Subcommand)]
enum OrdOp {
    Add { a: String, b: String },
    Mul { a: String, b: String },
    Cmp { a: String, b: String },
    Pow { a: String, n: u64 },
    /// Fundamental sequence `a[n]`.
    Fs {
        a: String,
        n: u64,
        #[arg(long, value_enum, default_value = "std")]
        system: System,
    },
}

#[derive(clap::Args)]
struct BudgetArgs {
    #[arg(long, value_parser = parse_count, default_value = "1e7")]
    max_steps: u64,
    /// Values above 2^max_bits count as budget exhaustion.
    #[arg(long, default_value_t = 4096)]
    max_bits: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        Budget::new(BigUint::from(1u32) << self.max_bits, self.max_steps)
    }
}

#[derive(Subcommand)]
enum FghOp {
    /// Evaluate `F_alpha(x)`.
    Eval {
        #[arg(long, value_enum, default_value = "std")]
        system: System,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        x: BigUint,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare `F^left_alpha` with `F^right_beta` pointwise.
    Compare {
        #[arg(long, value_enum, default_value = "std")]
        left: System,
        #[arg(long, value_enum, default_value = "shifted")]
        right: System,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "3,4,5,6")]
        xs: Vec<u64>,
        /// Sample this many pairs alpha < beta of limits up to `--bound`.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value = "w*3")]
        bound: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum PathologyOp {
    Kreisel {
        /// `builtin:true`, `builtin:except=V` or a unary automaton file over {0,1}.
        #[arg(long)]
        pi0: String,
        /// Use the slow inverse of this function (for example `2^n`).
        #[arg(long)]
        g_from_f: Option<String>,
        #[command(subcommand)]
        action: KreiselAction,
    },
    Omega1 {
        /// The function f, for example `2^n`.
        #[arg(long)]
        f: String,
        /// Range on which monotonicity of f is checked.
        #[arg(long, default_value_t = 16)]
        tested: u64,
        #[command(subcommand)]
        action: Omega1Action,
    },
}

#[derive(Subcommand)]
enum KreiselAction {
    /// Prints `less` when x precedes y.
    Compare { x: u64, y: u64 },
    /// Search for a descending chain from `start`.
    Descend { start: u64, len: usize },
    /// Write the order as automata plus a manifest next to them.
    ToStructure { out: PathBuf },
}

#[derive(Subcommand)]
enum Omega1Action {
    /// `F_top(x)` in the w+1 system.
    Fgh {
        #[arg(long)]
        x: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum TmOp {
    /// Run a machine on tape-1 input (space-separated symbols).
    Run {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
    },
    StepAutomaton {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    CheckReversible {
        file: PathBuf,
    },
    BuildRpi {
        #[arg(long)]
        pi0: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    WfCheck {
        #[arg(long)]
        pi0: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum HopdaOp {
    /// Prints `accepted`, `rejected` or `budget-exceeded`.
    Run {
        file: PathBuf,
        /// Space-separated input letters.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    Graph {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        budget: usize,
    },
    Contract {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        budget: usize,
    },
    /// Unfold the contracted graph from its root.
    Unfold {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        budget: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

fn parse_count(s: &str) -> std::result::Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(f) if f >= 0.0 && f.fract() == 0.0 && f < 1.8e19 => Ok(f as u64),
        _ => Err(format!("`{s}` is not a count")),
    }
}

struct Flags {
    json: bool,
    dot: bool,
    seed: u64,
    trace: bool,
}

type Reply = (String, i32);

fn code_for(e: &Error) -> i32 {
    match e {
        Error::StateBudgetExceeded(_) | Error::PredicateDiverged(_) => EXIT_BUDGET,
        Error::NotLinear(_) | Error::NotReversible(_) | Error::NotComparable => EXIT_NEGATIVE,
        _ => EXIT_MALFORMED,
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            return CommandResult { code, stdout, stderr };
        }
    };
    let flags = Flags {
        json: cli.json,
        dot: cli.dot,
        seed: cli.seed,
        trace: cli.trace,
    };
    match execute(cli.cmd, &flags) {
        Ok((stdout, code)) => CommandResult {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandResult {
            code: code_for(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary: runs with the process arguments and prints.
pub fn run() -> i32 {
    let r = dispatch(std::env::args_os());
    print!("{}", r.stdout);
    eprint!("{}", r.stderr);
    r.code
}

fn execute(cmd: Cmd, f: &Flags) -> Result<Reply> {
    match cmd {
        Cmd::Query {
            manifest,
            formula,
            out,
            budget,
            limit,
        } => query(&manifest, &formula, out.as_deref(), budget, limit, f),
        Cmd::Recognize { manifest, max_levels } => recognize_cmd(&manifest, max_levels, f),
        Cmd::Ord { op } => ord(op, f),
        Cmd::Fgh { op } => fgh(op, f),
        Cmd::Pathology { op } => pathology(op, f),
        Cmd::Tm { op } => tm_cmd(op, f),
        Cmd::Hopda { op } => hopda_cmd(op, f),
        Cmd::Corpus => {
            let (report, failures) = crate::corpus::run_corpus()?;
            Ok((report, if failures == 0 { EXIT_OK } else { EXIT_NEGATIVE }))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn query(manifest: &Path, formula: &str, out: Option<&Path>, budget: usize, limit: usize, f: &Flags) -> Result<Reply> {
    let s = load_manifest(manifest)?;
    let text = if Path::new(formula).is_file() { read(Path::new(formula))? } else { formula.to_string() };
    let c = compile_with_budget(&s, &parse_formula(&text)?, budget)?;
    if let Some(p) = out {
        write(p, &write_automaton("query", &c.automaton))?;
    }
    if let Some(t) = c.truth() {
        let body = if f.json { json_line(json!({ "truth": t })) } else { format!("{t}\n") };
        return Ok((body, if t { EXIT_OK } else { EXIT_NEGATIVE }));
    }
    let tuples: Vec<Vec<String>> = c
        .automaton
        .enumerate(limit)
        .iter()
        .map(|t| t.iter().map(|w| if w.is_empty() { "ε".to_string() } else { c.automaton.display_word(w) }).collect())
        .collect();
    if f.json {
        return Ok((json_line(json!({ "vars": c.vars, "tuples": tuples })), EXIT_OK));
    }
    let mut body = format!("free {} states={}\n", c.vars.join(" "), c.automaton.num_states());
    for t in &tuples {
        let _ = writeln!(body, "({})", t.join(", "));
    }
    Ok((body, EXIT_OK))
}

fn recognize_cmd(manifest: &Path, max_levels: Option<usize>, f: &Flags) -> Result<Reply> {
    let p = OrderPresentation::new(load_manifest(manifest)?)?;
    let levels = max_levels.unwrap_or_else(|| recognition::default_max_levels(&p));
    let res = match recognition::recognize(&p, levels) {
        Err(Error::NotLinear(prop)) => {
            let body = if f.json {
                json_line(json!({ "verdict": "not_linear", "property": prop }))
            } else {
                format!("not-linear {prop}\n")
            };
            return Ok((body, EXIT_NEGATIVE));
        }
        r => r?,
    };
    let code = match res.verdict {
        Verdict::WellOrder { .. } => EXIT_OK,
        Verdict::NotWellOrder { .. } => EXIT_NEGATIVE,
        Verdict::BudgetExceeded { .. } => EXIT_BUDGET,
    };
    let mut body = if f.json {
        json_line(json!({ "result": res.verdict, "levels": res.levels.len() }))
    } else {
        format!("{}\n", res.verdict)
    };
    if f.trace {
        for (i, l) in res.levels.iter().enumerate() {
            let top = l.top_class.as_ref().map_or("none".to_string(), |t| t.to_string());
            let _ = writeln!(body, "// level {i} top-class={top}");
            body.push_str(&write_automaton(&format!("level{i}-domain"), &l.domain));
            body.push_str(&write_automaton(&format!("level{i}-less"), &l.less));
        }
    }
    Ok((body, code))
}

fn ord(op: OrdOp, f: &Flags) -> Result<Reply> {
    let text = match op {
        OrdOp::Add { a, b } => parse_cnf(&a)?.add(&parse_cnf(&b)?).to_string(),
        OrdOp::Mul { a, b } => parse_cnf(&a)?.mul(&parse_cnf(&b)?).to_string(),
        OrdOp::Cmp { a, b } => match parse_cnf(&a)?.cmp(&parse_cnf(&b)?) {
            Ordering::Less => "less",
            Ordering::Equal => "equal",
            Ordering::Greater => "greater",
        }
        .to_string(),
        OrdOp::Pow { a, n } => parse_cnf(&a)?.pow_nat(n).to_string(),
        OrdOp::Fs { a, n, system } => {
            let a = parse_cnf(&a)?;
            match system {
                System::Std => standard_fs(&a, n)?,
                System::Shifted => shifted_fs(&a, n)?,
            }
            .to_string()
        }
    };
    let body = if f.json { json_line(json!({ "result": text })) } else { format!("{text}\n") };
    Ok((body, EXIT_OK))
}

fn eval_system(system: System, alpha: &Cnf, x: &BigUint, b: &Budget) -> Result<Outcome> {
    match system {
        System::Std => eval_f(&StandardSystem, alpha, x, b),
        System::Shifted => eval_f(&ShiftedSystem, alpha, x, b),
    }
}

fn compare_systems(l: System, a: &Cnf, r: System, b: &Cnf, xs: &[u64], budget: &Budget) -> Result<Vec<crate::fgh::PointComparison>> {
    fn go<N: NotationSystem<Value = Cnf>>(n: &N, a: &Cnf, r: System, b: &Cnf, xs: &[u64], budget: &Budget) -> Result<Vec<crate::fgh::PointComparison>> {
        match r {
            System::Std => dominates_at(n, a, &StandardSystem, b, xs, budget),
            System::Shifted => dominates_at(n, a, &ShiftedSystem, b, xs, budget),
        }
    }
    match l {
        System::Std => go(&StandardSystem, a, r, b, xs, budget),
        System::Shifted => go(&ShiftedSystem, a, r, b, xs, budget),
    }
}

const DOMINATION_NOTE: &str = "note: finite sample only; eventual domination is not established by this table";

fn fgh(op: FghOp, f: &Flags) -> Result<Reply> {
    match op {
        FghOp::Eval {
            system,
            alpha,
            x,
            budget,
        } => {
            let out = eval_system(system, &parse_cnf(&alpha)?, &x, &budget.budget()?)?;
            let code = if out.value().is_some() { EXIT_OK } else { EXIT_BUDGET };
            let body = if f.json { json_line(json!(out)) } else { format!("{out}\n") };
            Ok((body, code))
        }
        FghOp::Compare {
            left,
            right,
            alpha,
            beta,
            xs,
            random,
            bound,
            budget,
        } => {
            let b = budget.budget()?;
            let pairs: Vec<(Cnf, Cnf)> = match (alpha, beta, random) {
                (Some(a), Some(c), None) => vec![(parse_cnf(&a)?, parse_cnf(&c)?)],
                (None, None, Some(k)) => {
                    let limits = sample_limits(&parse_cnf(&bound)?);
                    let mut all: Vec<(Cnf, Cnf)> = Vec::new();
                    for (i, a) in limits.iter().enumerate() {
                        for c in &limits[i + 1..] {
                            all.push((a.clone(), c.clone()));
                        }
                    }
                    let mut rng = StdRng::seed_from_u64(f.seed);
                    let mut picked: Vec<(Cnf, Cnf)> = all.choose_multiple(&mut rng, k).cloned().collect();
                    picked.sort();
                    picked
                }
                _ => return Err(Error::Io("give --alpha and --beta, or --random K".into())),
            };
            let mut body = String::new();
            let mut rows_json = Vec::new();
            let mut code = EXIT_OK;
            for (a, c) in &pairs {
                let rows = compare_systems(left, a, right, c, &xs, &b)?;
                for r in &rows {
                    code = code.max(match r.relation {
                        Some(Ordering::Less) => EXIT_OK,
                        Some(_) => EXIT_NEGATIVE,
                        None => EXIT_BUDGET,
                    });
                }
                if f.json {
                    rows_json.push(json!({ "alpha": a, "beta": c, "rows": rows }));
                } else {
                    let _ = writeln!(body, "alpha={a} beta={c}");
                    body.push_str(&render_report(&rows));
                }
            }
            if f.json {
                body = json_line(json!({ "comparisons": rows_json, "note": DOMINATION_NOTE }));
            } else {
                let _ = writeln!(body, "{DOMINATION_NOTE}");
            }
            Ok((body, code))
        }
    }
}

/// Reads a `--pi0` argument.
pub fn parse_pi0(spec: &str) -> Result<PiPredicate> {
    if spec == "builtin:true" {
        return PiPredicate::regular_except(&[]);
    }
    if let Some(v) = spec.strip_prefix("builtin:except=") {
        let v: u64 = v.parse().map_err(|_| Error::Io(format!("bad value in `{spec}`")))?;
        return PiPredicate::regular_except(&[&nat_to_word(v)]);
    }
    let (_, a) = parse_automaton(&read(Path::new(spec))?)?;
    PiPredicate::regular(spec, a)
}

fn pathology(op: PathologyOp, f: &Flags) -> Result<Reply> {
    match op {
        PathologyOp::Kreisel { pi0, g_from_f, action } => {
            let pi = parse_pi0(&pi0)?;
            match action {
                KreiselAction::Compare { x, y } => {
                    let order = match &g_from_f {
                        Some(e) => KreiselOrder::with_slow_inverse(pi, e.parse()?),
                        None => KreiselOrder::new(pi),
                    };
                    let word = match order.compare(x, y)? {
                        Ordering::Less => "less",
                        Ordering::Equal => "equal",
                        Ordering::Greater => "greater",
                    };
                    let body = if f.json { json_line(json!({ "result": word })) } else { format!("{word}\n") };
                    Ok((body, EXIT_OK))
                }
                KreiselAction::Descend { start, len } => {
                    let order = match &g_from_f {
                        Some(e) => KreiselOrder::with_slow_inverse(pi, e.parse()?),
                        None => KreiselOrder::new(pi),
                    };
                    let chain = order.find_descent(start, len)?;
                    let code = if chain.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
                    let body = if f.json {
                        json_line(json!({ "descent": chain }))
                    } else {
                        match chain {
                            Some(c) => {
                                let s: Vec<String> = c.iter().map(u64::to_string).collect();
                                format!("descent {}\n", s.join(" "))
                            }
                            None => "no descent\n".into(),
                        }
                    };
                    Ok((body, code))
                }
                KreiselAction::ToStructure { out } => {
                    let p = kreisel_as_automatic(&pi)?;
                    let mut text = write_automaton("domain", p.domain());
                    text.push_str(&write_automaton("less", p.less()));
                    write(&out, &text)?;
                    let manifest = out.with_extension("manifest");
                    let file = out.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default();
                    write(&manifest, &format!("structure kreisel\nload {file}\ndomain domain\nrelation < 2 less\n"))?;
                    Ok((format!("wrote {} and {}\n", out.display(), manifest.display()), EXIT_OK))
                }
            }
        }
        PathologyOp::Omega1 { f: fx, tested, action } => {
            let sys = omega_plus_one_system(FSpec::new(fx.parse::<FExpr>()?), tested)?;
            match action {
                Omega1Action::Fgh { x, budget } => {
                    let out = eval_f(&sys, &P1::Top, &BigUint::from(x), &budget.budget()?)?;
                    let code = if out.value().is_some() { EXIT_OK } else { EXIT_BUDGET };
                    let body = if f.json { json_line(json!(out)) } else { format!("{out}\n") };
                    Ok((body, code))
                }
            }
        }
    }
}

fn load_tm(path: &Path) -> Result<tm::TmSpec> {
    tm::parse_tm(&read(path)?)
}

fn tm_cmd(op: TmOp, f: &Flags) -> Result<Reply> {
    match op {
        TmOp::Run { file, input, max_steps } => {
            let m = load_tm(&file)?;
            let syms = input.split_whitespace().map(|s| m.symbol(s)).collect::<Result<Vec<_>>>()?;
            let mut inputs = vec![syms];
            inputs.resize(m.tapes, Vec::new());
            let c = tm::Configuration::initial(&m, &inputs)?;
            let trace = tm::run(&m, &c, max_steps);
            let last = trace.last().expect("nonempty");
            let halted = last.step(&m).is_none();
            let mut body = String::new();
            for c in &trace {
                let _ = writeln!(body, "{}", c.render(&m));
            }
            let verdict = if !halted {
                "running"
            } else if last.is_accepting(&m) {
                "accept"
            } else {
                "halt"
            };
            let _ = writeln!(body, "{verdict}");
            let code = match verdict {
                "running" => EXIT_BUDGET,
                "accept" => EXIT_OK,
                _ => EXIT_NEGATIVE,
            };
            Ok((body, code))
        }
        TmOp::StepAutomaton { file, out } => {
            let m = load_tm(&file)?;
            let a = tm::step_relation_automaton(&m)?;
            if let Some(p) = out {
                write(&p, &write_automaton(&format!("{}-step", m.name), &a))?;
            }
            let body = format!(
                "states={} transitions={} alphabet={}\n",
                a.num_states(),
                a.num_transitions(),
                a.alphabet().len()
            );
            Ok((body, EXIT_OK))
        }
        TmOp::CheckReversible { file } => {
            let m = load_tm(&file)?;
            Ok(match m.check_reversible() {
                None => ("reversible\n".into(), EXIT_OK),
                Some((i, j)) => (format!("not-reversible transitions {i} and {j}\n"), EXIT_NEGATIVE),
            })
        }
        TmOp::BuildRpi { pi0, out } => {
            let r = tm::build_rpi(&parse_pi0(&pi0)?)?;
            if let Some(p) = out {
                let mut text = write_automaton("domain", r.structure.domain());
                text.push_str(&write_automaton("R", r.relation()));
                write(&p, &text)?;
            }
            let body = format!(
                "comparator states={} transitions={}\ndomain states={}\nrelation states={} transitions={}\n",
                r.tm.states.len(),
                r.tm.transitions.len(),
                r.structure.domain().num_states(),
                r.relation().num_states(),
                r.relation().num_transitions()
            );
            Ok((body, EXIT_OK))
        }
        TmOp::WfCheck { pi0, depth, max_len } => {
            let r = tm::build_rpi(&parse_pi0(&pi0)?)?;
            let rep = r.wf_check(depth, max_len)?;
            let code = if rep.verdict == WfVerdict::Ok { EXIT_OK } else { EXIT_NEGATIVE };
            if f.dot {
                return Ok((rep.to_dot(r.relation()), code));
            }
            if f.json {
                return Ok((json_line(json!(rep)), code));
            }
            let mut body = format!("elements={} edges={}\n", rep.elements, rep.edges);
            match &rep.verdict {
                WfVerdict::Ok => body.push_str("ok\n"),
                WfVerdict::Cycle { witness } => {
                    let _ = writeln!(body, "cycle {}", witness.join(" ; "));
                }
                WfVerdict::Descent { chain } => {
                    let _ = writeln!(body, "descent {}", chain.join(" ; "));
                }
            }
            Ok((body, code))
        }
    }
}

fn load_hopda(path: &Path) -> Result<HopdaSpec> {
    hopda::parse_hopda(&read(path)?)
}

fn show_graph(g: &hopda::ColoredGraph, name: &str, partial: bool, f: &Flags) -> String {
    if f.dot {
        g.to_dot(name)
    } else if f.json {
        json_line(json!({ "graph": g, "partial": partial }))
    } else {
        format!(
            "vertices={} edges={} partial={partial}\n{}",
            g.num_vertices(),
            g.edges.len(),
            g.to_text()
        )
    }
}

fn hopda_cmd(op: HopdaOp, f: &Flags) -> Result<Reply> {
    match op {
        HopdaOp::Run { file, word, budget } => {
            let h = load_hopda(&file)?;
            let w: Vec<&str> = word.split_whitespace().collect();
            let r = hopda::accepts(&h, &w, budget)?;
            let (text, code) = match r {
                hopda::RunResult::Accepted => ("accepted", EXIT_OK),
                hopda::RunResult::Rejected => ("rejected", EXIT_NEGATIVE),
                hopda::RunResult::BudgetExceeded => ("budget-exceeded", EXIT_BUDGET),
            };
            let body = if f.json { json_line(json!({ "result": r })) } else { format!("{text}\n") };
            Ok((body, code))
        }
        HopdaOp::Graph { file, budget } => {
            let h = load_hopda(&file)?;
            let g = hopda::config_graph(&h, budget)?;
            Ok((show_graph(&g.graph, &h.name, g.partial, f), EXIT_OK))
        }
        HopdaOp::Contract { file, budget } => {
            let h = load_hopda(&file)?;
            let g = hopda::config_graph(&h, budget)?;
            let c = hopda::epsilon_contract(&g.graph, hopda::EPS)?;
            Ok((show_graph(&c, &h.name, g.partial, f), EXIT_OK))
        }
        HopdaOp::Unfold { file, budget, depth } => {
            let h = load_hopda(&file)?;
            let g = hopda::config_graph(&h, budget)?;
            let c = hopda::epsilon_contract(&g.graph, hopda::EPS)?;
            let u = hopda::unfold(&c, 0, depth)?;
            Ok((show_graph(&u, &h.name, g.partial, f), EXIT_OK))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandResult {
        dispatch(std::iter::once("wob").chain(args.iter().copied()))
    }

    #[test]
    fn ord_examples() {
        let r = run(&["ord", "cmp", "w^2*3+w", "w^2*3+5"]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "greater\n"));
        assert_eq!(run(&["ord", "add", "w", "w"]).stdout, "w*2\n");
        assert_eq!(run(&["ord", "pow", "w+1", "2"]).stdout, "w^2 + w + 1\n");
        assert_eq!(run(&["ord", "fs", "w^2", "3"]).stdout, "w*4\n");
        assert_eq!(run(&["--json", "ord", "mul", "2", "w"]).stdout, "{\"result\":\"w\"}\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(&["ord", "cmp", "w+"]).code, EXIT_USAGE);
        assert_eq!(run(&["ord", "cmp", "w+", "1"]).code, EXIT_MALFORMED);
        assert_eq!(run(&["--help"]).code, EXIT_OK);
        let r = run(&["fgh", "eval", "--alpha", "w", "--x", "3", "--max-steps", "1000"]);
        assert_eq!(r.code, EXIT_BUDGET);
        assert!(r.stdout.starts_with("exceeded"));
    }

    #[test]
    fn fgh_eval() {
        let r = run(&["fgh", "eval", "--system", "std", "--alpha", "w", "--x", "2"]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "2048\n"));
        let r = run(&["--json", "fgh", "eval", "--alpha", "2", "--x", "3"]);
        assert_eq!(r.stdout, "{\"kind\":\"value\",\"steps\":1,\"value\":\"24\"}\n");
    }

    #[test]
    fn pathology_commands() {
        let r = run(&["pathology", "kreisel", "--pi0", "builtin:except=2", "descend", "10", "5"]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "descent 10 11 12 13 14\n"));
        let r = run(&["pathology", "kreisel", "--pi0", "builtin:true", "compare", "2", "5"]);
        assert_eq!(r.stdout, "less\n");
        let r = run(&["pathology", "omega1", "--f", "2^n", "fgh", "--x", "1"]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "2\n"));
        assert_eq!(run(&["pathology", "omega1", "--f", "[1,0,3]", "fgh", "--x", "1"]).code, EXIT_MALFORMED);
    }
}
