//! Command-line front end.
//!
//! Exit codes follow a verdict-as-exit-code contract for scripting:
//! 0 for success / positive verdicts (integral, trivial, all checks pass,
//! full match), 1 for negative verdicts (a witness, a failed identity, a
//! sequence mismatch, a digest mismatch), 2 for usage, parse, and I/O
//! errors. All big integers in JSON output are decimal strings; sequence
//! indices, witnesses, and counts are plain JSON numbers.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use crate::chebyshev::{u_via_chebyshev, v_via_chebyshev};
use crate::engines::{u_value, v_value, Method, SequenceSlice};
use crate::integrality::{decide_diff, decide_sum, footnote_family, DiffVerdict, SumVerdict};
use crate::quadfield::{QuadElement, SeqKind, SequenceParams};
use crate::registry::{self, CheckReport};
use crate::surdio::{emit_bfile, format_surd, parse_bfile, parse_surd, BFile};

/// Exact integer sequences from quadratic roots.
#[derive(Debug, Parser)]
#[command(name = "quadseq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a run of U or V values.
    Seq(SeqArgs),
    /// Decide integrality of alpha^n +- beta^n for all n, with witnesses.
    Decide(DecideArgs),
    /// Refute integrality of (x/z)^n - (y/z)^n, or probe the x = z^m + 1 family.
    RefuteDiff(RefuteDiffArgs),
    /// List or check the registered identities.
    #[command(subcommand)]
    Identity(IdentityCommand),
    /// Cross-check a stored b-file against computed values.
    OeisCheck(OeisCheckArgs),
    /// Time the engines against each other on one index, gated on equal outputs.
    Bench(BenchArgs),
}

/// A method name on the command line: any engine method, or the Chebyshev
/// bridge route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CliMethod {
    Engine(Method),
    Chebyshev,
}

impl CliMethod {
    fn applies_to(self, kind: SeqKind) -> bool {
        match self {
            CliMethod::Engine(m) => m.applies_to(kind),
            CliMethod::Chebyshev => true,
        }
    }

    fn value(self, params: &SequenceParams, kind: SeqKind, n: u64) -> crate::Result<BigInt> {
        match (self, kind) {
            (CliMethod::Engine(m), SeqKind::V) => v_value(params, n, m),
            (CliMethod::Engine(m), SeqKind::U) => u_value(params, n, m),
            (CliMethod::Chebyshev, SeqKind::V) => {
                if n == 0 {
                    Ok(BigInt::from(2))
                } else {
                    v_via_chebyshev(params, n)
                }
            }
            (CliMethod::Chebyshev, SeqKind::U) => {
                if n == 0 {
                    Ok(BigInt::zero())
                } else {
                    u_via_chebyshev(params, n - 1)
                }
            }
        }
    }
}

impl fmt::Display for CliMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliMethod::Engine(m) => write!(f, "{m}"),
            CliMethod::Chebyshev => write!(f, "chebyshev"),
        }
    }
}

impl std::str::FromStr for CliMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("chebyshev") {
            Ok(CliMethod::Chebyshev)
        } else {
            s.parse::<Method>().map(CliMethod::Engine)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SeqFormat {
    BFile,
    Json,
    Csv,
}

impl std::str::FromStr for SeqFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bfile" => Ok(SeqFormat::BFile),
            "json" => Ok(SeqFormat::Json),
            "csv" => Ok(SeqFormat::Csv),
            other => Err(format!("unknown format `{other}` (expected bfile, json, or csv)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TextFormat {
    Human,
    Json,
}

impl std::str::FromStr for TextFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(TextFormat::Human),
            "json" => Ok(TextFormat::Json),
            other => Err(format!("unknown format `{other}` (expected human or json)")),
        }
    }
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    q: BigInt,
    #[arg(long)]
    kind: SeqKind,
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// recurrence, doubling, exp1, exp2, exp3, idenf, trace, or chebyshev.
    #[arg(long, default_value = "doubling")]
    method: CliMethod,
    /// bfile, json, or csv.
    #[arg(long, default_value = "bfile")]
    format: SeqFormat,
}

#[derive(Debug, Args)]
struct DecideArgs {
    /// Surd or rational, e.g. "(1+sqrt(5))/2" or "3/2".
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    /// sum (alpha^n + beta^n) or diff (alpha^n - beta^n).
    #[arg(long)]
    mode: DecideMode,
    #[arg(long, default_value = "human")]
    format: TextFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DecideMode {
    Sum,
    Diff,
}

impl std::str::FromStr for DecideMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(DecideMode::Sum),
            "diff" => Ok(DecideMode::Diff),
            other => Err(format!("unknown mode `{other}` (expected sum or diff)")),
        }
    }
}

#[derive(Debug, Args)]
struct RefuteDiffArgs {
    #[arg(long, allow_hyphen_values = true, requires = "z")]
    x: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, requires = "z")]
    y: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<BigInt>,
    /// Stop the witness search at this exponent instead of the proven bound.
    #[arg(long)]
    max_n: Option<u64>,
    /// Probe x = family_z^family_m + 1 instead of a literal pair.
    #[arg(long, requires = "family_m", conflicts_with_all = ["x", "y", "z"])]
    family_z: Option<BigInt>,
    #[arg(long, requires = "family_z", conflicts_with_all = ["x", "y", "z"])]
    family_m: Option<u64>,
    #[arg(long, default_value = "human")]
    format: TextFormat,
}

#[derive(Debug, Subcommand)]
enum IdentityCommand {
    /// List every registered identity with its domain and source.
    List {
        #[arg(long, default_value = "human")]
        format: TextFormat,
    },
    /// Check one identity exactly over its domain up to --n-max.
    Check {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 60)]
        n_max: u64,
        #[arg(long, default_value = "human")]
        format: TextFormat,
    },
    /// Check every identity up to --n-max.
    CheckAll {
        #[arg(long, default_value_t = 60)]
        n_max: u64,
        #[arg(long, default_value = "human")]
        format: TextFormat,
    },
}

#[derive(Debug, Args)]
struct OeisCheckArgs {
    /// Path to a b-file ("n a(n)" lines).
    #[arg(long)]
    bfile: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    p: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    q: BigInt,
    #[arg(long)]
    kind: SeqKind,
    /// Sequence index = b-file index + offset.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    offset: i64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    q: BigInt,
    #[arg(long)]
    n: u64,
    /// Comma-separated methods, all of which must support --kind.
    #[arg(long, default_value = "recurrence,doubling")]
    methods: String,
    #[arg(long, default_value = "V")]
    kind: SeqKind,
    /// Timing repetitions per method; the median is reported.
    #[arg(long, default_value_t = 3)]
    repeat: u32,
    #[arg(long, default_value = "human")]
    format: TextFormat,
}

/// One timed engine run inside a bench report.
#[derive(Debug, Clone)]
pub struct BenchEntry {
    pub method: String,
    pub median_ms: f64,
    pub digest: String,
}

/// Digest-gated timing comparison: all methods must produce the same value
/// (hashed in decimal form) before the timings mean anything.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub params: SequenceParams,
    pub n: u64,
    pub entries: Vec<BenchEntry>,
    pub digests_equal: bool,
}

fn usage_error(msg: impl fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// Parses the process arguments and runs the selected command, returning
/// the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    dispatch(cli)
}

/// Same as [`run`] but over explicit arguments (handy for tests).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            // clap renders usage errors itself; 2 matches its convention.
            let _ = e.print();
            2
        }
    }
}

fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::Seq(args) => run_seq(args),
        Command::Decide(args) => run_decide(args),
        Command::RefuteDiff(args) => run_refute_diff(args),
        Command::Identity(cmd) => run_identity(cmd),
        Command::OeisCheck(args) => run_oeis_check(args),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_seq(args: SeqArgs) -> i32 {
    if args.from > args.to {
        return usage_error("--from must not exceed --to");
    }
    let params = SequenceParams::new(args.p.clone(), args.q.clone(), args.kind);
    if !args.method.applies_to(args.kind) {
        return usage_error(format!(
            "method `{}` does not apply to kind {}",
            args.method, args.kind
        ));
    }
    let values: Result<Vec<BigInt>, _> = (args.from..=args.to)
        .map(|n| args.method.value(&params, args.kind, n))
        .collect();
    let values = match values {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    match args.format {
        SeqFormat::BFile => {
            let slice = SequenceSlice {
                params,
                start: args.from,
                values,
            };
            print!("{}", emit_bfile(&BFile::from_slice(&slice)));
        }
        SeqFormat::Csv => {
            println!("n,value");
            for (i, v) in values.iter().enumerate() {
                println!("{},{}", args.from + i as u64, v);
            }
        }
        SeqFormat::Json => {
            let result: Vec<Value> = values
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    json!({ "n": args.from + i as u64, "value": v.to_string() })
                })
                .collect();
            let doc = json!({
                "command": "seq",
                "params": {
                    "p": args.p.to_string(),
                    "q": args.q.to_string(),
                    "kind": args.kind.to_string(),
                    "from": args.from,
                    "to": args.to,
                    "method": args.method.to_string(),
                },
                "result": result,
            });
            println!("{doc}");
        }
    }
    0
}

fn run_decide(args: DecideArgs) -> i32 {
    let alpha = match parse_surd(&args.alpha) {
        Ok(x) => x,
        Err(e) => return usage_error(format!("--alpha: {e}")),
    };
    let beta = match parse_surd(&args.beta) {
        Ok(x) => x,
        Err(e) => return usage_error(format!("--beta: {e}")),
    };
    let params_json = json!({
        "alpha": format_surd(&alpha),
        "beta": format_surd(&beta),
        "mode": if args.mode == DecideMode::Sum { "sum" } else { "diff" },
    });
    match args.mode {
        DecideMode::Sum => {
            let verdict = match decide_sum(&alpha, &beta) {
                Ok(v) => v,
                Err(e) => return usage_error(e),
            };
            match verdict {
                SumVerdict::Integral { recovered } => {
                    match args.format {
                        TextFormat::Human => println!(
                            "integral: alpha and beta are the roots of z^2 - ({p})z - ({q}) = 0",
                            p = recovered.p,
                            q = recovered.q
                        ),
                        TextFormat::Json => println!(
                            "{}",
                            json!({
                                "command": "decide",
                                "params": params_json,
                                "result": {
                                    "status": "integral",
                                    "p": recovered.p.to_string(),
                                    "q": recovered.q.to_string(),
                                },
                            })
                        ),
                    }
                    0
                }
                SumVerdict::NotIntegral { witness } => {
                    match args.format {
                        TextFormat::Human => {
                            println!("not integral: alpha^{witness} + beta^{witness} is not an integer")
                        }
                        TextFormat::Json => println!(
                            "{}",
                            json!({
                                "command": "decide",
                                "params": params_json,
                                "result": { "status": "not_integral" },
                                "witness": witness,
                            })
                        ),
                    }
                    1
                }
            }
        }
        DecideMode::Diff => {
            let verdict = decide_diff(&alpha, &beta);
            let (status, witness, prime_bound) = match &verdict {
                DiffVerdict::TrivialEqual => ("trivial_equal", None, None),
                DiffVerdict::BothIntegers => ("both_integers", None, None),
                DiffVerdict::NotIntegral {
                    witness,
                    prime_bound,
                } => ("not_integral", Some(*witness), *prime_bound),
            };
            match args.format {
                TextFormat::Human => match &verdict {
                    DiffVerdict::TrivialEqual => println!("trivial: alpha = beta"),
                    DiffVerdict::BothIntegers => {
                        println!("integral: alpha and beta are both integers")
                    }
                    DiffVerdict::NotIntegral {
                        witness,
                        prime_bound,
                    } => {
                        let bound = prime_bound
                            .map(|p| format!(" (search bounded by prime {p})"))
                            .unwrap_or_default();
                        println!(
                            "not integral: alpha^{witness} - beta^{witness} is not an integer{bound}"
                        );
                    }
                },
                TextFormat::Json => {
                    let mut result = json!({ "status": status });
                    if let Some(p) = prime_bound {
                        result["prime_bound"] = json!(p);
                    }
                    let mut doc = json!({
                        "command": "decide",
                        "params": params_json,
                        "result": result,
                    });
                    if let Some(w) = witness {
                        doc["witness"] = json!(w);
                    }
                    println!("{doc}");
                }
            }
            if witness.is_some() {
                1
            } else {
                0
            }
        }
    }
}

fn run_refute_diff(args: RefuteDiffArgs) -> i32 {
    if let (Some(z), Some(m)) = (&args.family_z, args.family_m) {
        if *z < BigInt::from(2) {
            return usage_error("--family-z must be at least 2");
        }
        if m < 1 {
            return usage_error("--family-m must be at least 1");
        }
        let report = footnote_family(z, m);
        let x: BigInt = z.pow(m as u32) + 1u32;
        match args.format {
            TextFormat::Human => println!(
                "family x={x} y=1 z={z}: (x^n-1)/z^n integral for all n <= {}, first failure at n={}",
                report.ok_through, report.first_failure
            ),
            TextFormat::Json => println!(
                "{}",
                json!({
                    "command": "refute-diff",
                    "params": {
                        "family_z": z.to_string(),
                        "family_m": m,
                        "x": x.to_string(),
                    },
                    "result": {
                        "ok_through": report.ok_through,
                        "first_failure": report.first_failure,
                    },
                })
            ),
        }
        return 0;
    }
    let (Some(x), Some(y), Some(z)) = (&args.x, &args.y, &args.z) else {
        return usage_error("provide --x, --y and --z, or --family-z with --family-m");
    };
    if z.abs() < BigInt::from(2) {
        return usage_error("--z must satisfy |z| >= 2");
    }
    let params_json = json!({
        "x": x.to_string(),
        "y": y.to_string(),
        "z": z.to_string(),
    });
    if x == y {
        match args.format {
            TextFormat::Human => println!("trivial: x = y, the difference is identically zero"),
            TextFormat::Json => println!(
                "{}",
                json!({
                    "command": "refute-diff",
                    "params": params_json,
                    "result": { "status": "trivial_equal" },
                })
            ),
        }
        return 0;
    }
    let alpha = QuadElement::from_rational(BigRational::new(x.clone(), z.clone()));
    let beta = QuadElement::from_rational(BigRational::new(y.clone(), z.clone()));
    match decide_diff(&alpha, &beta) {
        DiffVerdict::TrivialEqual => unreachable!("x != y checked"),
        DiffVerdict::BothIntegers => {
            match args.format {
                TextFormat::Human => {
                    println!("integral: x/z and y/z reduce to integers; every difference of powers is an integer")
                }
                TextFormat::Json => println!(
                    "{}",
                    json!({
                        "command": "refute-diff",
                        "params": params_json,
                        "result": { "status": "both_integers" },
                    })
                ),
            }
            0
        }
        DiffVerdict::NotIntegral {
            witness,
            prime_bound,
        } => {
            if let Some(max_n) = args.max_n {
                if witness > max_n {
                    match args.format {
                        TextFormat::Human => println!(
                            "no failing exponent up to {max_n} (the first failure is at n={witness})"
                        ),
                        TextFormat::Json => println!(
                            "{}",
                            json!({
                                "command": "refute-diff",
                                "params": params_json,
                                "result": {
                                    "status": "no_witness_within_max_n",
                                    "max_n": max_n,
                                    "first_failure": witness,
                                },
                            })
                        ),
                    }
                    return 0;
                }
            }
            match args.format {
                TextFormat::Human => {
                    let bound = prime_bound
                        .map(|p| format!(", prime bound {p}"))
                        .unwrap_or_default();
                    println!("witness n={witness}: (x^n - y^n)/z^n is not an integer{bound}");
                }
                TextFormat::Json => {
                    let mut result = json!({ "status": "not_integral" });
                    if let Some(p) = prime_bound {
                        result["prime_bound"] = json!(p);
                    }
                    let mut doc = json!({
                        "command": "refute-diff",
                        "params": params_json,
                        "result": result,
                    });
                    doc["witness"] = json!(witness);
                    println!("{doc}");
                }
            }
            1
        }
    }
}

fn identity_report_line(report: &CheckReport) -> String {
    if report.pass {
        format!(
            "{:<20} pass  ({} cases, n <= {})",
            report.id, report.cases_checked, report.n_max
        )
    } else {
        let ce = report.counterexample.as_ref().expect("failed report");
        let at = match ce.k {
            Some(k) => format!("n={}, k={}", ce.n, k),
            None => format!("n={}", ce.n),
        };
        format!(
            "{:<20} FAIL  at {at}: lhs={} rhs={}",
            report.id, ce.lhs, ce.rhs
        )
    }
}

fn run_identity(cmd: IdentityCommand) -> i32 {
    match cmd {
        IdentityCommand::List { format } => {
            match format {
                TextFormat::Human => {
                    for case in registry::catalog() {
                        let idx = if case.is_double_index() { "n,k" } else { "n" };
                        println!(
                            "{:<20} [{idx}, n >= {}]  {}  -- {}",
                            case.id, case.n_min, case.summary, case.citation
                        );
                    }
                }
                TextFormat::Json => {
                    let result: Vec<Value> = registry::catalog()
                        .iter()
                        .map(|case| {
                            json!({
                                "id": case.id,
                                "summary": case.summary,
                                "n_min": case.n_min,
                                "double_index": case.is_double_index(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "command": "identity-list",
                        "params": {},
                        "result": result,
                        "citation": registry::catalog()
                            .iter()
                            .map(|c| format!("{}: {}", c.id, c.citation))
                            .collect::<Vec<_>>(),
                    });
                    println!("{doc}");
                }
            }
            0
        }
        IdentityCommand::Check { id, n_max, format } => {
            let report = match registry::check(&id, n_max) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let citation = registry::catalog()
                .into_iter()
                .find(|c| c.id == id)
                .map(|c| c.citation)
                .unwrap_or_default();
            match format {
                TextFormat::Human => println!("{}", identity_report_line(&report)),
                TextFormat::Json => println!(
                    "{}",
                    json!({
                        "command": "identity-check",
                        "params": { "id": id, "n_max": n_max },
                        "result": serde_json::to_value(&report).expect("report serializes"),
                        "citation": citation,
                    })
                ),
            }
            if report.pass {
                0
            } else {
                1
            }
        }
        IdentityCommand::CheckAll { n_max, format } => {
            let reports = registry::check_all(n_max);
            let all_pass = reports.iter().all(|r| r.pass);
            match format {
                TextFormat::Human => {
                    for report in &reports {
                        println!("{}", identity_report_line(report));
                    }
                    println!(
                        "{} of {} identities pass",
                        reports.iter().filter(|r| r.pass).count(),
                        reports.len()
                    );
                }
                TextFormat::Json => println!(
                    "{}",
                    json!({
                        "command": "identity-check-all",
                        "params": { "n_max": n_max },
                        "result": serde_json::to_value(&reports).expect("reports serialize"),
                    })
                ),
            }
            if all_pass {
                0
            } else {
                1
            }
        }
    }
}

fn run_oeis_check(args: OeisCheckArgs) -> i32 {
    let text = match std::fs::read_to_string(&args.bfile) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("{}: {e}", args.bfile.display())),
    };
    let bfile = match parse_bfile(&text) {
        Ok(b) => b,
        Err(e) => return usage_error(e),
    };
    if bfile.entries.is_empty() {
        return usage_error("b-file contains no entries");
    }
    let params = SequenceParams::new(args.p, args.q, args.kind);
    for (index, expected) in &bfile.entries {
        let target = index + args.offset;
        let Ok(n) = u64::try_from(target) else {
            return usage_error(format!(
                "b-file index {index} with offset {} maps to negative sequence index",
                args.offset
            ));
        };
        let computed = match args.kind {
            SeqKind::V => v_value(&params, n, Method::Doubling),
            SeqKind::U => u_value(&params, n, Method::Doubling),
        }
        .expect("doubling applies to both kinds");
        if computed != *expected {
            println!(
                "mismatch at index {index}: file has {expected}, computed {}_{n}({}, {}) = {computed}",
                params.kind, params.p, params.q
            );
            return 1;
        }
    }
    let first = bfile.entries.first().expect("nonempty").0;
    let last = bfile.entries.last().expect("nonempty").0;
    println!(
        "ok: {} values match {}(p={}, q={}) on indices {first}..={last}",
        bfile.entries.len(),
        params.kind,
        params.p,
        params.q
    );
    0
}

fn median_ms(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    samples[samples.len() / 2]
}

fn run_bench(args: BenchArgs) -> i32 {
    let methods: Result<Vec<CliMethod>, String> = args
        .methods
        .split(',')
        .map(|s| s.trim().parse::<CliMethod>())
        .collect();
    let methods = match methods {
        Ok(m) if !m.is_empty() => m,
        Ok(_) => return usage_error("--methods must name at least one method"),
        Err(e) => return usage_error(e),
    };
    for m in &methods {
        if !m.applies_to(args.kind) {
            return usage_error(format!("method `{m}` does not apply to kind {}", args.kind));
        }
    }
    if args.repeat == 0 {
        return usage_error("--repeat must be at least 1");
    }
    let params = SequenceParams::new(args.p.clone(), args.q.clone(), args.kind);
    let mut entries = Vec::new();
    let mut digests: Vec<String> = Vec::new();
    for method in &methods {
        let mut samples = Vec::with_capacity(args.repeat as usize);
        let mut value = BigInt::zero();
        for _ in 0..args.repeat {
            let start = Instant::now();
            value = match method.value(&params, args.kind, args.n) {
                Ok(v) => v,
                Err(e) => return usage_error(e),
            };
            samples.push(start.elapsed().as_secs_f64() * 1e3);
        }
        let digest = hex_digest(&value);
        digests.push(digest.clone());
        entries.push(BenchEntry {
            method: method.to_string(),
            median_ms: median_ms(samples),
            digest,
        });
    }
    let digests_equal = digests.windows(2).all(|w| w[0] == w[1]);
    let report = BenchReport {
        params,
        n: args.n,
        entries,
        digests_equal,
    };
    match args.format {
        TextFormat::Human => {
            println!(
                "bench {}(p={}, q={}) at n={}: digests {}",
                report.params.kind,
                report.params.p,
                report.params.q,
                report.n,
                if digests_equal { "equal" } else { "MISMATCH" }
            );
            for entry in &report.entries {
                println!(
                    "  {:<12} median {:>10.3} ms  digest {}",
                    entry.method,
                    entry.median_ms,
                    &entry.digest[..12]
                );
            }
        }
        TextFormat::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "method": e.method,
                        "median_ms": e.median_ms,
                        "digest": e.digest,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "command": "bench",
                    "params": {
                        "p": report.params.p.to_string(),
                        "q": report.params.q.to_string(),
                        "kind": report.params.kind.to_string(),
                        "n": report.n,
                        "repeat": args.repeat,
                    },
                    "result": {
                        "digests_equal": report.digests_equal,
                        "entries": entries,
                    },
                })
            );
        }
    }
    if digests_equal {
        0
    } else {
        eprintln!("error: methods disagree; timings are meaningless");
        1
    }
}

fn hex_digest(value: &BigInt) -> String {
    let hash = Sha256::digest(value.to_string().as_bytes());
    let mut out = String::with_capacity(64);
    for byte in hash {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_method_parsing() {
        assert_eq!(
            "doubling".parse::<CliMethod>().unwrap(),
            CliMethod::Engine(Method::Doubling)
        );
        assert_eq!("chebyshev".parse::<CliMethod>().unwrap(), CliMethod::Chebyshev);
        assert!("warp".parse::<CliMethod>().is_err());
    }

    #[test]
    fn chebyshev_method_covers_seeds() {
        let params = SequenceParams::v(2, 1);
        assert_eq!(
            CliMethod::Chebyshev.value(&params, SeqKind::V, 0).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            CliMethod::Chebyshev.value(&params, SeqKind::U, 0).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            CliMethod::Chebyshev.value(&params, SeqKind::U, 4).unwrap(),
            BigInt::from(12)
        );
    }

    #[test]
    fn digests_separate_values() {
        assert_eq!(hex_digest(&BigInt::from(7)), hex_digest(&BigInt::from(7)));
        assert_ne!(hex_digest(&BigInt::from(7)), hex_digest(&BigInt::from(-7)));
    }

    #[test]
    fn run_from_reports_usage_errors() {
        assert_eq!(run_from(["quadseq", "definitely-not-a-command"]), 2);
        assert_eq!(
            run_from(["quadseq", "seq", "--p", "1", "--q", "1", "--kind", "V", "--from", "5", "--to", "2"]),
            2
        );
    }
}
