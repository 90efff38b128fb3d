//! Command-line front end. `run` returns the process exit code so the binary
//! and tests drive the same path.

mod csv;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{b_coeff, chi_r_atiyah_bott, chi_r_thm, fake_degree_character, garsia_haiman_character};
use crate::characters::{pnp_character, rnil_isotypic, rnil_specialized};
use crate::cherednik::{g_poly, kappa, CherednikParam};
use crate::error::{Error, Result};
use crate::macdonald::{degen_macdonald, modified_macdonald, DegenVariant, KostkaMacdonaldTable};
use crate::partitions::{partitions_of, r_core_quotient_sign, Partition};
use crate::pnp_degenerations::merge_graph;
use crate::symfunc::char_table;
use crate::weights::Weight;

pub use verify::{run_suite, SuiteParams, VerifyReport, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qtforge", version, about = "Exact (q,t)-character computations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one quantity and print it
    Compute(ComputeArgs),
    /// Run a named identity suite
    Verify(VerifyArgs),
    /// Emit a full table
    Table(TableArgs),
    /// Explore combinatorial structures
    Explore(ExploreArgs),
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// pnp-char, gh-char, b-coeff, chi-r, g-poly, kostka-macdonald, degen-mac, rnil, kappa, core-quotient
    target: String,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// rational parameter l/r
    #[arg(long)]
    k: Option<String>,
    #[arg(long, default_value_t = 4)]
    deg: i64,
    #[arg(long, value_enum, default_value_t = Route::Thm)]
    route: Route,
    #[arg(long)]
    r: Option<usize>,
    /// slot count for core-quotient (defaults to the number of parts)
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Variant::Tilde)]
    variant: Variant,
    /// rnil: specialize t = q⁻¹
    #[arg(long)]
    specialized: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Thm,
    Ab,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Plain,
    Tilde,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: Option<String>,
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    deg: Option<i64>,
    #[arg(long)]
    cap: Option<usize>,
    /// include wall time in the report
    #[arg(long)]
    timing: bool,
    /// list registered suites
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// kostka-macdonald, sn-characters, fake-degree
    target: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct ExploreArgs {
    /// degenerations
    target: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    emit_graph: Option<std::path::PathBuf>,
}

/// Sets the global thread pool from QTFORGE_THREADS, once.
pub fn init_threads() {
    if let Some(k) = std::env::var("QTFORGE_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if k > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if code == EXIT_PASS { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    init_threads();
    let res = match &cli.cmd {
        Command::Compute(a) => compute(a).map(|v| (v, EXIT_PASS)),
        Command::Verify(a) => verify_cmd(a, cli.format),
        Command::Table(a) => table(a, cli.format).map(|v| (v, EXIT_PASS)),
        Command::Explore(a) => explore(a).map(|v| (v, EXIT_PASS)),
    };
    match res {
        Ok((Emit::Json(v), code)) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string(&v).expect("serializable"),
                Format::Csv => csv::from_json(&v),
            };
            let _ = writeln!(out, "{}", text.trim_end());
            code
        }
        Ok((Emit::Text(s), code)) => {
            let _ = writeln!(out, "{}", s.trim_end());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            match e {
                Error::Parse(_) | Error::Invalid(_) | Error::Domain(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}

enum Emit {
    Json(Value),
    Text(String),
}

fn val<T: Serialize>(x: &T) -> Emit {
    Emit::Json(serde_json::to_value(x).expect("serializable"))
}

fn need<'a>(x: &'a Option<String>, flag: &str) -> Result<&'a str> {
    x.as_deref().ok_or_else(|| Error::Invalid(format!("--{} is required", flag)))
}

fn part(x: &Option<String>, flag: &str) -> Result<Partition> {
    Partition::parse(need(x, flag)?)
}

fn size_matches(lam: &Partition, n: Option<usize>) -> Result<usize> {
    match n {
        Some(n) if n != lam.size() => Err(Error::Invalid(format!("{} is not a partition of {}", lam, n))),
        _ => Ok(lam.size()),
    }
}

fn compute(a: &ComputeArgs) -> Result<Emit> {
    match a.target.as_str() {
        "pnp-char" => Ok(val(&pnp_character(&part(&a.mu, "mu")?)?)),
        "gh-char" => Ok(val(&garsia_haiman_character(&part(&a.mu, "mu")?)?)),
        "b-coeff" => {
            let lam = part(&a.lambda, "lambda")?;
            let n = size_matches(&lam, a.n)?;
            let mu = part(&a.mu, "mu")?;
            if mu.len() >= n.max(1) {
                return Err(Error::Invalid(format!("{} must have fewer than {} parts", mu, n)));
            }
            Ok(val(&b_coeff(&mu, &lam)?))
        }
        "chi-r" => {
            let n = a.n.ok_or_else(|| Error::Invalid("--n is required".into()))?;
            if a.deg < 0 {
                return Err(Error::Invalid("--deg must be nonnegative".into()));
            }
            let s = match a.route {
                Route::Thm => chi_r_thm(n, a.deg)?,
                Route::Ab => chi_r_atiyah_bott(n, a.deg)?,
            };
            Ok(val(&s))
        }
        "g-poly" => {
            let k = CherednikParam::parse(need(&a.k, "k")?)?;
            let lam = part(&a.lambda, "lambda")?;
            let n = size_matches(&lam, a.n)?;
            Ok(val(&g_poly(k, n, &lam, &part(&a.nu, "nu")?)?))
        }
        "kostka-macdonald" => Ok(val(&*modified_macdonald(&part(&a.mu, "mu")?)?)),
        "degen-mac" => {
            let w = Weight::parse(need(&a.lambda, "lambda")?)?;
            let v = match a.variant {
                Variant::Plain => DegenVariant::Plain,
                Variant::Tilde => DegenVariant::Tilde,
            };
            Ok(val(&degen_macdonald(&w, v)?))
        }
        "rnil" => {
            let (mu, lam) = (part(&a.mu, "mu")?, part(&a.lambda, "lambda")?);
            size_matches(&lam, a.n)?;
            let r = if a.specialized { rnil_specialized(&mu, &lam)? } else { rnil_isotypic(&mu, &lam)? };
            Ok(val(&r))
        }
        "kappa" => {
            let k = CherednikParam::parse(need(&a.k, "k")?)?;
            Ok(val(&kappa(k.k(), &part(&a.lambda, "lambda")?).to_string()))
        }
        "core-quotient" => {
            let mu = part(&a.mu, "mu")?;
            let r = a.r.ok_or_else(|| Error::Invalid("--r is required".into()))?;
            Ok(val(&r_core_quotient_sign(&mu, r, a.m.unwrap_or(mu.len()))?))
        }
        t => Err(Error::Invalid(format!("unknown target '{}'", t))),
    }
}

fn verify_cmd(a: &VerifyArgs, format: Format) -> Result<(Emit, i32)> {
    if a.list {
        return Ok((val(&SUITES), EXIT_PASS));
    }
    let name = match (&a.suite, &a.name) {
        (Some(s), None) | (None, Some(s)) => s,
        (Some(_), Some(_)) => return Err(Error::Invalid("give the suite either positionally or with --name".into())),
        (None, None) => return Err(Error::Invalid("a suite name is required".into())),
    };
    let params = SuiteParams { n: a.n, deg: a.deg, cap: a.cap, timing: a.timing };
    let report = run_suite(name, &params)?;
    let code = if report.all_pass() { EXIT_PASS } else { EXIT_FAIL };
    let emit = match format {
        Format::Json => val(&report),
        Format::Csv => Emit::Json(serde_json::to_value(&report.instances).expect("serializable")),
    };
    Ok((emit, code))
}

fn table(a: &TableArgs, format: Format) -> Result<Emit> {
    let parts = partitions_of(a.n);
    let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    match a.target.as_str() {
        "kostka-macdonald" => {
            let t = KostkaMacdonaldTable::new(a.n)?;
            if format == Format::Csv {
                let rows = parts.iter().map(|l| parts.iter().map(|m| t.get(l, m).to_string()).collect()).collect();
                return Ok(Emit::Text(csv::matrix("lambda\\mu", &names, &names, rows)));
            }
            let entries: Vec<Value> = parts
                .iter()
                .flat_map(|l| parts.iter().map(move |m| (l, m)))
                .map(|(l, m)| json!({ "lambda": l, "mu": m, "coeff": t.get(l, m) }))
                .collect();
            Ok(Emit::Json(json!({ "n": a.n, "partitions": parts, "entries": entries })))
        }
        "sn-characters" => {
            let t = char_table(a.n);
            let rows: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|r| t.chi[t.idx(l)][t.idx(r)]).collect()).collect();
            if format == Format::Csv {
                let cells = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                return Ok(Emit::Text(csv::matrix("lambda\\rho", &names, &names, cells)));
            }
            Ok(Emit::Json(json!({ "n": a.n, "partitions": parts, "chi": rows })))
        }
        "fake-degree" => {
            let fd = fake_degree_character(a.n);
            if format == Format::Csv {
                let cells = parts.iter().map(|l| vec![fd[l].to_string()]).collect();
                return Ok(Emit::Text(csv::matrix("lambda", &names, &["character".to_string()], cells)));
            }
            let entries: Vec<Value> = parts.iter().map(|l| json!({ "lambda": l, "character": fd[l] })).collect();
            Ok(Emit::Json(json!({ "n": a.n, "entries": entries })))
        }
        t => Err(Error::Invalid(format!("unknown table '{}'", t))),
    }
}

fn explore(a: &ExploreArgs) -> Result<Emit> {
    if a.target != "degenerations" {
        return Err(Error::Invalid(format!("unknown exploration '{}'", a.target)));
    }
    let g = merge_graph(&Partition::parse(&a.mu)?)?;
    if let Some(path) = &a.emit_graph {
        let text = serde_json::to_string(&g).expect("serializable");
        std::fs::write(path, text + "\n")
            .map_err(|e| Error::Invalid(format!("cannot write {}: {}", path.display(), e)))?;
    }
    Ok(Emit::Json(json!({
        "shape": g.shape,
        "nodes": g.nodes.len(),
        "edges": g.edges.len(),
        "connected": g.connected_to_full(),
        "stuck": g.stuck(),
    })))
}
