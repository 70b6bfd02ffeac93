//! `qpade`: solve and verify q-Padé interpolation problems exactly.

mod output;

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qpade_core::pipeline::{self, instance_from_map, InstanceConfig, RunOptions};
use qpade_core::{Error, PainleveType, SweepReport};

#[derive(Debug, Parser)]
#[command(name = "qpade", version, about = "Exact Padé interpolation on the q-grid and q-Painlevé verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full verification pipeline on one instance, a config file, or random draws
    Verify(VerifyArgs),
    /// Print the interpolating polynomials P and Q
    Pade(PadeArgs),
    /// Tabulate tau determinants over index ranges
    Tau(TauArgs),
    /// Print the eight base points and their loci
    Basepoints(BasepointArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Solver {
    Linear,
    Jacobi,
}

/// Parameter flags shared by every subcommand. Rationals are written `p` or `p/q`.
#[derive(Debug, Clone, Default, Args)]
struct ParamArgs {
    #[arg(long = "type", value_parser = parse_type)]
    ptype: Option<PainleveType>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b2: Option<String>,
    /// E7 only; solved from the balancing constraint when omitted
    #[arg(long, allow_hyphen_values = true)]
    b3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
}

impl ParamArgs {
    fn map(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        if let Some(t) = self.ptype {
            map.insert("type".into(), t.name().into());
        }
        let fields = [
            ("q", &self.q),
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("a3", &self.a3),
            ("b1", &self.b1),
            ("b2", &self.b2),
            ("b3", &self.b3),
            ("c", &self.c),
            ("d", &self.d),
        ];
        for (k, v) in fields {
            if let Some(v) = v {
                map.insert(k.into(), v.clone());
            }
        }
        map
    }

    fn has_values(&self) -> bool {
        self.map().keys().any(|k| k != "type")
    }

    fn instance(&self, m: u32, n: u32, steps: Option<usize>) -> Result<InstanceConfig, Error> {
        let mut map = self.map();
        map.insert("m".into(), m.to_string());
        map.insert("n".into(), n.to_string());
        if let Some(s) = steps {
            map.insert("steps".into(), s.to_string());
        }
        instance_from_map(&map)
    }
}

fn parse_type(s: &str) -> Result<PainleveType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    n: u32,
    /// Orbit length; defaults to 1 when m >= 1, else 0
    #[arg(long)]
    steps: Option<usize>,
    /// Draw this many generic parameter packs instead of reading them from flags
    #[arg(long)]
    random_draws: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated check families to run (default: all)
    #[arg(long)]
    checks: Option<String>,
    /// Sweep file: one instance per line as whitespace-separated key=value pairs
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PadeArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Solver::Linear)]
    solver: Solver,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct TauArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Index range: `a`, `a..b` (exclusive) or `a..=b`
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    m: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    n: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    k: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct BasepointArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Writes to stdout; a closed pipe (`qpade ... | head`) is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

/// Input problems exit with 2, like genericity errors.
fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("qpade: {e}");
    ExitCode::from(2)
}

fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad range {s:?}"));
    let v: Vec<i64> = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?..=num(b)?).collect()
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?..num(b)?).collect()
    } else {
        vec![num(s)?]
    };
    if v.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(v)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let mut opts = RunOptions { seed: args.seed, checks: None };
    if let Some(list) = &args.checks {
        opts = match opts.with_checks(list) {
            Ok(o) => o,
            Err(e) => return input_error(e),
        };
    }
    if let Some(path) = &args.config {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        };
        let instances = match pipeline::parse_config(&text) {
            Ok(i) => i,
            Err(e) => return input_error(e),
        };
        let sweep = pipeline::run_sweep(&instances, &opts);
        return emit_sweep(&sweep, args.format);
    }
    if let Some(count) = args.random_draws {
        let Some(ptype) = args.params.ptype else {
            return input_error("--random-draws needs --type");
        };
        if args.params.has_values() {
            return input_error("--random-draws draws every parameter; drop the explicit values");
        }
        let steps = args.steps.unwrap_or(args.m.min(1) as usize);
        return match pipeline::random_sweep(ptype, args.m, args.n, steps, count, &opts) {
            Ok(sweep) => emit_sweep(&sweep, args.format),
            Err(e) => input_error(e),
        };
    }
    let cfg = match args.params.instance(args.m, args.n, args.steps) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let report = pipeline::run_instance(&cfg, &opts);
    let code = report.exit_code();
    match args.format {
        Format::Json => emit(&(output::json(&report) + "\n")),
        Format::Csv => emit(&output::checks_csv(std::slice::from_ref(&report))),
        Format::Text => emit(&output::report_text(&report)),
    }
    for e in &report.errors {
        eprintln!("qpade: {} at {}: {}", e.kind, e.stage, e.message);
    }
    ExitCode::from(code as u8)
}

fn emit_sweep(sweep: &SweepReport, format: Format) -> ExitCode {
    match format {
        Format::Json => emit(&(output::json(sweep) + "\n")),
        Format::Csv => emit(&output::checks_csv(&sweep.reports)),
        Format::Text => {
            for r in &sweep.reports {
                emit(&output::report_text(r));
            }
            let s = sweep.summary;
            emit(&format!("sweep: {} instances, {} pass, {} fail, {} skipped\n", sweep.reports.len(), s.pass, s.fail, s.skipped));
        }
    }
    ExitCode::from(sweep.exit_code() as u8)
}

fn cmd_pade(args: PadeArgs) -> ExitCode {
    let cfg = match args.params.instance(args.m, args.n, Some(0)) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let solved = match args.solver {
        Solver::Linear => qpade_core::pade::solve_linear(&cfg.params),
        Solver::Jacobi => qpade_core::pade::solve_jacobi(&cfg.params),
    };
    match solved {
        Ok(pair) => {
            emit(&output::pade(&pair, args.format));
            ExitCode::SUCCESS
        }
        Err(e) => input_error(e),
    }
}

fn cmd_tau(args: TauArgs) -> ExitCode {
    let ranges = (parse_range(&args.m), parse_range(&args.n), parse_range(&args.k));
    let (ms, ns, ks) = match ranges {
        (Ok(m), Ok(n), Ok(k)) => (m, n, k),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return input_error(e),
    };
    // validate against the largest series order in the table
    let order = ms.iter().flat_map(|m| ns.iter().map(move |n| m + n)).max().unwrap_or(0).max(0);
    let cfg = match args.params.instance(u32::try_from(order).unwrap_or(0), 0, Some(0)) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    if let Err(e) = cfg.params.validate() {
        return input_error(e);
    }
    let mut rows = Vec::new();
    for &m in &ms {
        for &n in &ns {
            for &k in &ks {
                match qpade_core::special::tau_mn(&cfg.params, m, n, k) {
                    Ok(v) => rows.push((m, n, k, v)),
                    Err(e) => return input_error(e),
                }
            }
        }
    }
    emit(&output::tau_table(&rows, args.format));
    ExitCode::SUCCESS
}

fn cmd_basepoints(args: BasepointArgs) -> ExitCode {
    let cfg = match args.params.instance(args.m, args.n, Some(0)) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    if let Err(e) = cfg.params.validate() {
        return input_error(e);
    }
    let (list, ok) = qpade_core::evolution::check_base_points(&cfg.params);
    emit(&output::base_points(&list, args.format));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Pade(a) => cmd_pade(a),
        Command::Tau(a) => cmd_tau(a),
        Command::Basepoints(a) => cmd_basepoints(a),
    }
}
