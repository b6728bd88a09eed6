//! `ruv`: analyze, enumerate and tabulate cyclic codes over
//! Z_p[u,v]/<u^2, v^2, uv - vu>.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a closed formula or
//! golden table disagreed with a computed value, 3 budget exceeded.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ruv_core::code::{enumerate_codes, CyclicCode, DEFAULT_CANDIDATE_BUDGET};
use ruv_core::distance::{distance_report, DistanceMethod, DEFAULT_CODEWORD_BUDGET};
use ruv_core::gray::gray_code;
use ruv_core::report::{analyze, AnalysisReport};
use ruv_core::tables::{build_code, load, verify_table1, verify_table2};
use ruv_core::{Error, Prime};

/// Environment override for the default budget of every subcommand.
const BUDGET_ENV: &str = "RUV_BUDGET";

#[derive(Parser)]
#[command(name = "ruv", version, about = "Cyclic codes over Z_p[u,v]/<u^2, v^2, uv - vu>")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical generators, rank, distance and Gray image of one code.
    Analyze(AnalyzeArgs),
    /// Every cyclic code of length n, one JSON line each, then a summary.
    Enumerate(EnumerateArgs),
    /// Rebuild the golden tables and report any mismatch.
    VerifyTables(BudgetArg),
    /// Generator matrix of the Gray image.
    Gray(GrayArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Prime modulus.
    #[arg(long)]
    p: u32,
    /// Code length.
    #[arg(long)]
    n: usize,
    /// Generator expression, e.g. "u*v*(x-1)^2". Repeatable.
    #[arg(long = "gen")]
    gens: Vec<String>,
}

#[derive(Args)]
struct BudgetArg {
    /// Search budget. Defaults to RUV_BUDGET, then to the built-in value.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    ClosedForm,
    Torsion,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, value_enum, default_value = "auto")]
    distance_method: MethodArg,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain-text output.
    #[arg(long)]
    text: bool,
    #[command(flatten)]
    budget: BudgetArg,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
    /// Candidate-tuple budget.
    #[arg(long)]
    budget: Option<u128>,
    /// Codeword budget for each distance computation.
    #[arg(long)]
    codeword_budget: Option<u128>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GrayArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    budget: BudgetArg,
}

enum Failure {
    Usage(String),
    Discrepancy,
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn budget(flag: Option<u128>, default: u128) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("{BUDGET_ENV}={s} is not a number"))),
        Err(_) => Ok(default),
    }
}

fn build(args: &CodeArgs) -> Result<CyclicCode, Failure> {
    let p = Prime::new(args.p)?;
    if args.n == 0 {
        return Err(Failure::Usage("length must be positive".into()));
    }
    Ok(build_code(p, args.n, &args.gens)?)
}

fn print_text(out: &mut impl Write, r: &AnalysisReport) -> io::Result<()> {
    let opt = |d: Option<usize>| d.map_or("none".to_string(), |d| d.to_string());
    writeln!(out, "code over Z_{}[u,v], length {}", r.p, r.n)?;
    writeln!(out, "generators: <{}>", r.generators.join(", "))?;
    let [t, t1, t2, t3] = r.tower.degrees;
    writeln!(
        out,
        "tower: {} | {} | {} | {}  (degrees {t}, {t1}, {t2}, {t3})",
        r.tower.c1, r.tower.c2, r.tower.c3, r.tower.c4
    )?;
    writeln!(
        out,
        "k = {}, rank = {} (formula {}), free rank = {} (formula {})",
        r.k, r.rank, r.rank_formula, r.free_rank, r.free_rank_formula
    )?;
    writeln!(out, "log_p |C| = {} (formula {})", r.log_p_cardinality, r.log_p_cardinality_formula)?;
    writeln!(
        out,
        "d = {} via {} (closed form {}, torsion {}, oracle {})",
        opt(r.distance.value),
        r.distance.method,
        opt(r.distance.closed_form),
        opt(r.distance.torsion),
        opt(r.distance.oracle)
    )?;
    writeln!(
        out,
        "gray image: [{}, {}, {}], 4-quasi-cyclic: {}",
        r.gray.length,
        r.gray.k,
        opt(r.gray.d),
        r.gray.quasi_cyclic
    )?;
    if let Some(s) = &r.singleton {
        writeln!(out, "d <= n - rank + 1: {} (slack {})", s.holds, s.slack)?;
    }
    if let Some(f) = &r.coprime_form {
        writeln!(out, "coprime form: <{}>, q1 = {}", f.generators.join(", "), f.q1)?;
    }
    if let Some(e) = &r.coprime_form_error {
        writeln!(out, "coprime form: {e}")?;
    }
    for d in &r.discrepancies {
        writeln!(out, "discrepancy: {} formula {} observed {}", d.quantity, d.formula, d.observed)?;
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let budget = budget(args.budget.budget, DEFAULT_CODEWORD_BUDGET)?;
    let code = build(&args.code)?;
    let prefer = match args.distance_method {
        MethodArg::Auto => None,
        MethodArg::Oracle => Some(DistanceMethod::Oracle),
        MethodArg::ClosedForm => Some(DistanceMethod::ClosedForm),
        MethodArg::Torsion => Some(DistanceMethod::Torsion),
    };
    let report = analyze(&code, &args.code.gens, prefer, budget)?;
    let mut out = io::stdout().lock();
    if args.text {
        print_text(&mut out, &report)?;
    } else {
        let s = serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out, "{s}")?;
    }
    if report.has_discrepancy() {
        return Err(Failure::Discrepancy);
    }
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let p = Prime::new(args.p)?;
    let candidates = budget(args.budget, DEFAULT_CANDIDATE_BUDGET)?;
    let words = args.codeword_budget.unwrap_or(DEFAULT_CODEWORD_BUDGET);
    let codes = enumerate_codes(p, args.n, candidates)?;
    let mut out = io::stdout().lock();
    let mut counts: BTreeMap<(usize, Option<usize>), usize> = BTreeMap::new();
    for c in &codes {
        let g = c.gens();
        let d = distance_report(c, None, words)?.value;
        let rank = c.rank();
        *counts.entry((rank, d)).or_default() += 1;
        let line = json!({
            "p": args.p,
            "n": args.n,
            "generators": g.generator_strings(),
            "tower": {"g": g.g.to_string(), "a1": g.a1.to_string(), "a2": g.a2.to_string(), "a3": g.a3.to_string()},
            "rank": rank,
            "free_rank": c.free_rank(),
            "log_p_cardinality": c.k(),
            "d": d,
            "conditions_ok": ruv_core::code::check_conditions(g).is_empty(),
        });
        writeln!(out, "{line}")?;
    }
    let by: Vec<_> = counts.iter().map(|(&(rank, d), &count)| json!({"rank": rank, "d": d, "count": count})).collect();
    writeln!(out, "{}", json!({"summary": {"codes": codes.len(), "by_rank_d": by}}))?;
    Ok(())
}

fn cmd_verify_tables(args: BudgetArg) -> Result<(), Failure> {
    let budget = budget(args.budget, DEFAULT_CODEWORD_BUDGET)?;
    let t = load()?;
    let mut out = io::stdout().lock();
    let t1 = verify_table1(&t, budget)?;
    let t2 = verify_table2(&t, budget)?;
    for c in &t1 {
        let status = if c.ok { "ok" } else { "MISMATCH" };
        writeln!(
            out,
            "table1 {status} {} c={:?}: rank {} (table {}), d {} (table {})",
            c.label,
            c.constants,
            c.rank,
            c.expected_rank,
            c.d.map_or("none".into(), |d| d.to_string()),
            c.expected_d
        )?;
    }
    for c in &t2 {
        let status = if c.ok { "ok" } else { "MISMATCH" };
        writeln!(out, "table2 {status} {}: {:?} (table {:?})", c.label, c.got, c.expected)?;
    }
    let bad1 = t1.iter().filter(|c| !c.ok).count();
    let bad2 = t2.iter().filter(|c| !c.ok).count();
    writeln!(
        out,
        "table1: {}/{} instances match; table2: {}/{} rows match",
        t1.len() - bad1,
        t1.len(),
        t2.len() - bad2,
        t2.len()
    )?;
    if bad1 + bad2 > 0 {
        return Err(Failure::Discrepancy);
    }
    Ok(())
}

fn cmd_gray(args: GrayArgs) -> Result<(), Failure> {
    let budget = budget(args.budget.budget, DEFAULT_CODEWORD_BUDGET)?;
    let code = build(&args.code)?;
    let image = gray_code(&code);
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => write!(out, "{}", image.to_text())?,
        Format::Json => {
            let d = image.distance(budget)?;
            let s = serde_json::to_string(&image.export(d)).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{s}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::VerifyTables(a) => cmd_verify_tables(a),
        Command::Gray(a) => cmd_gray(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Discrepancy) => ExitCode::from(2),
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
