use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use normres::arith::{factorize, primes_up_to};
use normres::norm::{build_matrix, build_matrix_general, det_norm_mod_p, MonicPoly};
use normres::orders::{order_bruteforce, order_fast};
use normres::quadratic::{
    build_l4q, build_l4r_squarefree, build_lstar, half_order_subgroups_containing_minus1, legendre_general,
    Subgroup,
};
use normres::residues::{
    co_order, construct_norm_p, find_nontrivial_zero, is_irreducible_fp, is_irreducible_q, norm_survey,
};
use normres::search::{scan_reports, search_triple, SearchReport};
use normres::verify::{run_suite, SUITES};

#[derive(Parser)]
#[command(name = "normres", version, about = "Power residues, quadratic residue groups and norm forms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Search bound B for `search` and `solve survey`.
    #[arg(long, default_value_t = 200, global = true)]
    bound: u64,
    /// Worker threads for prime scans (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicative order of r modulo m.
    #[command(allow_negative_numbers = true)]
    Order {
        r: i64,
        m: u64,
        /// Count powers one by one instead of factoring phi(m).
        #[arg(long)]
        brute: bool,
    },
    /// Legendre symbol (r/p) for an odd prime p.
    #[command(allow_negative_numbers = true)]
    Legendre { r: i64, p: u64 },
    /// Build quadratic residue class groups.
    Lgroup(LgroupArgs),
    /// Norm form determinant of x_0 + x_1 u + ... modulo x^n - r or a given monic modulus.
    #[command(allow_negative_numbers = true)]
    Norm(NormArgs),
    /// Irreducibility of x^n - r over F_p (with --p) or over Q.
    #[command(allow_negative_numbers = true)]
    Irreducible {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Power residue solvers.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Bounded search for x^a + 2y^b + 4z^c = p.
    Search(SearchArgs),
    /// Run a named invariant suite, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LgroupKind {
    /// L_4q for a prime q.
    #[value(name = "4q")]
    FourQ,
    /// L_4r for a square-free r >= 2.
    #[value(name = "4r")]
    FourR,
    /// Quadratic residues modulo an odd prime.
    Lstar,
    /// Every half-order subgroup of U_m containing -1.
    Half,
}

#[derive(Args)]
struct LgroupArgs {
    kind: LgroupKind,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    /// Render elements in +- pairs.
    #[arg(long)]
    pm: bool,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Coordinates x_0,...,x_{n-1}.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    x: Vec<i64>,
    /// Monic modulus coefficients, constant term first, leading 1 last.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "r")]
    modulus: Option<Vec<i64>>,
    /// Reduce the determinant modulo this prime (binomial modulus only).
    #[arg(long)]
    mod_p: Option<u64>,
    /// Also print the matrix.
    #[arg(long)]
    matrix: bool,
}

#[derive(Subcommand)]
enum SolveCommand {
    /// Nonzero x with D^r_n(x) = 0 mod p and small coordinates.
    #[command(allow_negative_numbers = true)]
    Zero {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// (x0, x1) with x0^2 - r x1^2 = p for r in {-2, -1, 2}.
    #[command(name = "norm-p", allow_negative_numbers = true)]
    NormP {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        p: u64,
    },
    /// For each prime up to --limit: residue status, p mod 4 and a representation x^2 - r y^2 = p.
    #[command(allow_negative_numbers = true)]
    Survey {
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = 200)]
        limit: u64,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Exponents a,b,c in {1,2,3}.
    #[arg(long, value_delimiter = ',', required = true)]
    triple: Vec<u32>,
    /// Scan all primes up to this limit.
    #[arg(long, conflicts_with = "prime")]
    limit: Option<u64>,
    /// Search a single prime.
    #[arg(long)]
    prime: Option<u64>,
    /// List every scanned prime, not only the exhausted ones.
    #[arg(long)]
    all: bool,
}

/// A result line: human text plus structured fields.
struct Record {
    op: &'static str,
    inputs: Value,
    output: Value,
    text: String,
}

impl Record {
    fn new(op: &'static str, inputs: Value, output: Value, text: impl Into<String>) -> Self {
        Record { op, inputs, output, text: text.into() }
    }
}

type Outcome = Result<Vec<Record>, String>;

fn subgroup_text(s: &Subgroup, pm: bool) -> String {
    if pm {
        s.to_pm_string()
    } else {
        s.to_string()
    }
}

fn subgroup_record(op: &'static str, inputs: Value, s: &Subgroup, pm: bool) -> Record {
    Record::new(
        op,
        inputs,
        json!({ "modulus": s.modulus(), "elements": s.elements() }),
        subgroup_text(s, pm),
    )
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run_order(r: i64, m: u64, brute: bool) -> Outcome {
    let order = if brute { order_bruteforce(r, m) } else { order_fast(r, m) }.map_err(err)?;
    let mut output = json!({ "order": order });
    if normres::arith::is_prime(m) {
        output["co_order"] = json!(co_order(r, m).map_err(err)?);
    }
    Ok(vec![Record::new("order", json!({ "r": r, "m": m }), output, order.to_string())])
}

fn run_legendre(r: i64, p: u64) -> Outcome {
    let s = legendre_general(r, p).map_err(err)?;
    let text = if s > 0 { "+1" } else { "-1" };
    Ok(vec![Record::new("legendre", json!({ "r": r, "p": p }), json!(s), text)])
}

fn need(v: Option<u64>, flag: &str) -> Result<u64, String> {
    v.ok_or_else(|| format!("this group needs --{flag}"))
}

fn run_lgroup(a: LgroupArgs) -> Outcome {
    match a.kind {
        LgroupKind::FourQ => {
            let q = need(a.q, "q")?;
            let s = build_l4q(q).map_err(err)?;
            Ok(vec![subgroup_record("lgroup", json!({ "kind": "4q", "q": q }), &s, a.pm)])
        }
        LgroupKind::FourR => {
            let r = need(a.r, "r")?;
            let s = build_l4r_squarefree(&factorize(r).map_err(err)?).map_err(err)?;
            Ok(vec![subgroup_record("lgroup", json!({ "kind": "4r", "r": r }), &s, a.pm)])
        }
        LgroupKind::Lstar => {
            let p = need(a.p, "p")?;
            let s = build_lstar(p).map_err(err)?;
            Ok(vec![subgroup_record("lgroup", json!({ "kind": "lstar", "p": p }), &s, a.pm)])
        }
        LgroupKind::Half => {
            let m = need(a.m, "m")?;
            let subs = half_order_subgroups_containing_minus1(m).map_err(err)?;
            Ok(subs
                .iter()
                .map(|s| subgroup_record("lgroup", json!({ "kind": "half", "m": m }), s, a.pm))
                .collect())
        }
    }
}

fn run_norm(a: NormArgs) -> Outcome {
    let inputs = json!({ "r": a.r, "x": a.x, "modulus": a.modulus, "mod_p": a.mod_p });
    if let Some(p) = a.mod_p {
        let r = a.r.ok_or("--mod-p needs --r")?;
        let d = det_norm_mod_p(&a.x, r, p).map_err(err)?;
        return Ok(vec![Record::new("norm", inputs, json!(d), d.to_string())]);
    }
    let m = match (&a.modulus, a.r) {
        (Some(q), _) => {
            let q = MonicPoly::from_i64(q).map_err(err)?;
            build_matrix_general(&a.x, &q).map_err(err)?
        }
        (None, Some(r)) => build_matrix(&a.x, r).map_err(err)?,
        (None, None) => return Err("norm needs --r or --modulus".to_string()),
    };
    let det: BigInt = m.det();
    let mut text = det.to_string();
    let mut output = json!({ "det": det.to_string() });
    if a.matrix {
        text = format!("{m}\n{text}");
        let rows: Vec<Vec<String>> = (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m.matrix().get(i, j).to_string()).collect())
            .collect();
        output["matrix"] = json!(rows);
    }
    Ok(vec![Record::new("norm", inputs, output, text)])
}

fn run_irreducible(n: u64, r: i64, p: Option<u64>) -> Outcome {
    let v = match p {
        Some(p) => is_irreducible_fp(n, r, p),
        None => is_irreducible_q(n, r),
    }
    .map_err(err)?;
    let field = p.map_or("Q".to_string(), |p| format!("F_{p}"));
    Ok(vec![Record::new(
        "irreducible",
        json!({ "n": n, "r": r, "p": p }),
        json!(v),
        format!("{v} ({field})"),
    )])
}

fn run_solve(cmd: SolveCommand, bound: u64) -> Outcome {
    match cmd {
        SolveCommand::Zero { r, n, p } => {
            let inputs = json!({ "r": r, "n": n, "p": p });
            match find_nontrivial_zero(r, n, p).map_err(err)? {
                Some(sol) => {
                    let coords: Vec<String> = sol.xbar.iter().map(i64::to_string).collect();
                    let text = format!("({}) bounded={}", coords.join(","), sol.bound_ok);
                    Ok(vec![Record::new("solve.zero", inputs, json!(sol), text)])
                }
                None => Ok(vec![Record::new("solve.zero", inputs, Value::Null, "none")]),
            }
        }
        SolveCommand::NormP { r, p } => {
            let (x0, x1) = construct_norm_p(r, p).map_err(err)?;
            Ok(vec![Record::new(
                "solve.norm-p",
                json!({ "r": r, "p": p }),
                json!([x0, x1]),
                format!("({x0},{x1})"),
            )])
        }
        SolveCommand::Survey { r, limit } => {
            let rows = norm_survey(r, &primes_up_to(limit), bound).map_err(err)?;
            Ok(rows
                .into_iter()
                .map(|row| {
                    let rep = row.representation.map_or("-".to_string(), |(x, y)| format!("({x},{y})"));
                    let text = format!(
                        "p={} residue={} p%4={} representation={}",
                        row.p, row.residue, row.p_mod_4, rep
                    );
                    Record::new("solve.survey", json!({ "r": r, "p": row.p, "bound": bound }), json!(row), text)
                })
                .collect())
        }
    }
}

fn report_text(rep: &SearchReport) -> String {
    match rep.solution() {
        Some((x, y, z)) => format!("p={} solution=({x},{y},{z})", rep.prime),
        None => format!("p={} exhausted({})", rep.prime, rep.bound),
    }
}

fn run_search(a: SearchArgs, bound: u64, jobs: usize) -> Result<Vec<SearchReport>, String> {
    let [x, y, z] = a.triple[..] else {
        return Err(format!("--triple needs three exponents, got {}", a.triple.len()));
    };
    match (a.prime, a.limit) {
        (Some(p), _) => Ok(vec![search_triple(x, y, z, p, bound).map_err(err)?]),
        (None, Some(limit)) => scan_reports((x, y, z), &primes_up_to(limit), bound, jobs).map_err(err),
        (None, None) => Err("search needs --prime or --limit".to_string()),
    }
}

fn emit_search(a: SearchArgs, format: Format, bound: u64, jobs: usize, out: &mut impl Write) -> Result<(), String> {
    let start = Instant::now();
    let all = a.all || a.prime.is_some();
    let reports = run_search(a, bound, jobs)?;
    let shown: Vec<&SearchReport> = reports.iter().filter(|r| all || r.is_exhausted()).collect();
    let io = |e: io::Error| e.to_string();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["a", "b", "c", "prime", "outcome", "x", "y", "z"]).map_err(err)?;
            for rep in shown {
                let (a, b, c) = rep.exponents;
                let (outcome, xyz) = match rep.solution() {
                    Some((x, y, z)) => ("solution", [x.to_string(), y.to_string(), z.to_string()]),
                    None => ("exhausted", Default::default()),
                };
                let mut row = vec![a.to_string(), b.to_string(), c.to_string(), rep.prime.to_string()];
                row.push(outcome.to_string());
                row.extend(xyz);
                w.write_record(&row).map_err(err)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Json => {
            let elapsed = start.elapsed().as_millis() as u64;
            if all {
                for rep in shown {
                    let line = json!({
                        "op": "search",
                        "inputs": { "exponents": rep.exponents, "prime": rep.prime, "bound": rep.bound },
                        "output": rep,
                        "elapsed_ms": elapsed,
                    });
                    writeln!(out, "{line}").map_err(io)?;
                }
            } else {
                let exhausted: Vec<u64> = shown.iter().map(|r| r.prime).collect();
                let exps = reports.first().map(|r| r.exponents);
                let line = json!({
                    "op": "search",
                    "inputs": { "exponents": exps, "bound": bound, "scanned": reports.len() },
                    "output": { "exhausted": exhausted },
                    "elapsed_ms": elapsed,
                });
                writeln!(out, "{line}").map_err(io)?;
            }
        }
        Format::Text => {
            if all {
                for rep in shown {
                    writeln!(out, "{}", report_text(rep)).map_err(io)?;
                }
            } else {
                let list: Vec<String> = shown.iter().map(|r| r.prime.to_string()).collect();
                writeln!(out, "scanned {} primes, exhausted at B={}: [{}]", reports.len(), bound, list.join(", "))
                    .map_err(io)?;
            }
        }
    }
    Ok(())
}

fn run_verify(suite: &str, seed: u64) -> Result<(Vec<Record>, bool), String> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut records = Vec::new();
    let mut ok = true;
    for name in names {
        let res = run_suite(name, seed).map_err(err)?;
        ok &= res.passed();
        let mut text = format!(
            "{} {}: {} checks, {} failures",
            if res.passed() { "PASS" } else { "FAIL" },
            res.name,
            res.checked,
            res.failures.len()
        );
        for f in &res.failures {
            text.push_str(&format!("\n  {f}"));
        }
        records.push(Record::new("verify", json!({ "suite": name, "seed": seed }), json!(res), text));
    }
    Ok((records, ok))
}

fn emit(records: &[Record], format: Format, elapsed_ms: u64, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text)?;
            }
        }
        Format::Json => {
            for r in records {
                let line = json!({ "op": r.op, "inputs": r.inputs, "output": r.output, "elapsed_ms": elapsed_ms });
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["op", "inputs", "output"])?;
            for r in records {
                w.write_record([r.op.to_string(), r.inputs.to_string(), r.text.replace('\n', " ")])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Search(a) = &cli.command {
        if a.triple.len() != 3 {
            let msg = format!("--triple needs three exponents, got {}", a.triple.len());
            let _ = Cli::command().error(clap::error::ErrorKind::WrongNumberOfValues, msg).print();
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let start = Instant::now();
    let Cli { format, bound, jobs, command } = cli;

    let mut verified = true;
    let result: Outcome = match command {
        Command::Order { r, m, brute } => run_order(r, m, brute),
        Command::Legendre { r, p } => run_legendre(r, p),
        Command::Lgroup(a) => run_lgroup(a),
        Command::Norm(a) => run_norm(a),
        Command::Irreducible { n, r, p } => run_irreducible(n, r, p),
        Command::Solve(cmd) => run_solve(cmd, bound),
        Command::Search(a) => {
            return match emit_search(a, format, bound, jobs, &mut out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            };
        }
        Command::Verify { suite, seed } => run_verify(&suite, seed).map(|(records, ok)| {
            verified = ok;
            records
        }),
    };

    match result {
        Ok(records) => {
            let elapsed = start.elapsed().as_millis() as u64;
            if let Err(e) = emit(&records, format, elapsed, &mut out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
