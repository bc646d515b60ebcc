//! `hypga`: evaluate scenes, rerun the worked examples, sample orbits.
//!
//! Exit codes: 0 ok, 1 parse error, 2 evaluation error, 64 usage error.

mod config;
mod orbit;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypga::eval::{evaluate, EvalOptions, QueryRecord, QueryValue};
use hypga::motion::sample_trajectory;
use hypga::text::{parse_mv, parse_scene, serialize_rational};
use hypga::{repro, tol, Algebra, Error, Space};

use config::Config;

const EXIT_PARSE: u8 = 1;
const EXIT_EVAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "hypga", version, about = "Hyperbolic geometry in a projective Clifford algebra")]
struct Cli {
    /// key = value settings (classify_tolerance, output_dir); flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the queries of a scene file.
    Eval {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Re-run every query on the matrix representation and report the deviation.
        #[arg(long, hide = true)]
        oracle: bool,
        /// Relative tolerance for null classification.
        #[arg(long)]
        classify_tolerance: Option<f64>,
    },
    /// Rerun a built-in worked example, or all of them.
    Repro { case: String },
    /// Sample the orbit of an object under exp(-t B / 2).
    Orbit {
        #[arg(long, default_value = "H2")]
        space: String,
        /// Bivector B.
        #[arg(long, allow_hyphen_values = true)]
        generator: String,
        /// Scale B to unit pseudo-norm first, so t is an angle or a distance.
        #[arg(long)]
        normalize: bool,
        /// Point to move.
        #[arg(long, allow_hyphen_values = true)]
        object: String,
        /// Parameter interval `a:b`.
        #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when absent and no output_dir is configured.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Json => "json",
        }
    }
}

/// A failed command: exit code and message for stderr.
struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Eval { file, json, oracle, classify_tolerance } => {
            let tolerance = classify_tolerance.or(config.classify_tolerance).unwrap_or(tol::NULL_RELATIVE);
            cmd_eval(&file, json, EvalOptions { oracle, classify_tolerance: tolerance })
        }
        Command::Repro { case } => cmd_repro(&case),
        Command::Orbit { space, generator, normalize, object, range, n, format, out } => {
            let out = out.or_else(|| config.output_dir.map(|d| d.join(format!("orbit.{}", format.extension()))));
            cmd_orbit(&space, (&generator, normalize), &object, &range, n, format, out.as_deref())
        }
    }
}

fn cmd_eval(path: &Path, json: bool, options: EvalOptions) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = parse_scene(&text).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", e.kind())))?;
    let records = evaluate(&doc, &options);
    if json {
        let report: Vec<_> = records.iter().map(QueryRecord::to_json).collect();
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for r in &records {
            println!("{}", describe(r));
        }
    }
    for r in &records {
        if let Err(e) = &r.outcome {
            eprintln!("error: line {}: {}: {e}", r.line, e.kind());
        }
    }
    Ok(if records.iter().all(QueryRecord::is_ok) { 0 } else { EXIT_EVAL })
}

fn show(v: &QueryValue) -> String {
    match v {
        QueryValue::Scalar(x) => format!("{x}"),
        QueryValue::Bool(b) => b.to_string(),
        QueryValue::Mv(m) => serialize_rational(m),
        QueryValue::Chart(c) => {
            let coords: Vec<String> = c.coords.iter().map(|x| format!("{x}")).collect();
            format!("({}) weight {}", coords.join(", "), c.weight)
        }
        QueryValue::Class(c) => format!("{} (discriminant {})", c.kind.name(), c.discriminant),
        QueryValue::Parts(parts) => {
            parts.iter().map(|(k, v)| format!("{k} = {}", show(v))).collect::<Vec<_>>().join("; ")
        }
    }
}

fn describe(r: &QueryRecord) -> String {
    let mut line = format!("line {}: {} => ", r.line, r.query);
    match &r.outcome {
        Ok(v) => line.push_str(&show(v)),
        Err(e) => line.push_str(&format!("error {}", e.kind())),
    }
    if let Some(c) = &r.classification {
        line.push_str(&format!(" [{}]", c.kind.name()));
    }
    for (k, v) in &r.diagnostics {
        line.push_str(&format!(" {k}={v:e}"));
    }
    line
}

fn cmd_repro(id: &str) -> Result<u8, Failure> {
    let selected: Vec<_> = if id == "all" {
        repro::cases().iter().collect()
    } else {
        vec![repro::find(id).ok_or_else(|| usage(format!("UnknownCase: {id}")))?]
    };
    let mut all_passed = true;
    for case in selected {
        let report = case.run();
        println!("{}  {}", report.id, report.title);
        println!(
            "  {:<44} {:>24} {:>24} {:>9} {:<10} status",
            "check", "computed", "expected", "tolerance", "provenance"
        );
        for c in &report.checks {
            let tolerance = match c.comparison {
                repro::Comparison::Near => format!("{:.0e}", c.tolerance),
                repro::Comparison::AtMost => "<=".to_string(),
            };
            println!(
                "  {:<44} {:>24.16e} {:>24.16e} {:>9} {:<10} {}",
                c.name,
                c.computed,
                c.expected,
                tolerance,
                c.provenance.tag(),
                if c.passed() { "PASS" } else { "FAIL" }
            );
        }
        if let Some(e) = &report.error {
            println!("  error: {e}");
        }
        println!("  {}", if report.passed() { "PASS" } else { "FAIL" });
        all_passed &= report.passed();
    }
    Ok(if all_passed { 0 } else { EXIT_EVAL })
}

fn parse_range(range: &str) -> Result<(f64, f64), Failure> {
    let bad = || usage(format!("range must be a:b with finite numbers, got {range:?}"));
    let (a, b) = range.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(bad());
    }
    Ok((a, b))
}

fn eval_failure(e: Error) -> Failure {
    Failure(EXIT_EVAL, format!("{}: {e}", e.kind()))
}

fn cmd_orbit(
    space: &str,
    (generator, normalize): (&str, bool),
    object: &str,
    range: &str,
    n: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let space = Space::from_name(space).ok_or_else(|| usage(format!("unknown space {space:?}")))?;
    if format == Format::Svg && space != Space::H2 {
        return Err(usage("svg output is only drawn for H2"));
    }
    if !(2..=1_000_000).contains(&n) {
        return Err(usage(format!("n must be between 2 and 1000000, got {n}")));
    }
    let (t_min, t_max) = parse_range(range)?;
    let alg = Algebra::get(space);
    let parse = |what: &str, text: &str| {
        parse_mv(text, alg).map_err(|e| Failure(EXIT_PARSE, format!("{what}: {}: {e}", e.kind())))
    };
    let mut b = parse("generator", generator)?;
    if normalize {
        b = b.normalize().map_err(eval_failure)?;
    }
    let a = parse("object", object)?;
    let traj = sample_trajectory(&b, &a, t_min, t_max, n).map_err(eval_failure)?;
    let fatal = traj.samples.iter().filter_map(|s| s.chart.as_ref().err()).find(|e| !matches!(e, Error::WeightVanishes { .. }));
    if let Some(e) = fatal {
        return Err(eval_failure(e.clone()));
    }
    let text = match format {
        Format::Csv => orbit::csv(&traj, space.dim()),
        Format::Svg => orbit::svg(&traj),
        Format::Json => orbit::json(&traj),
    };
    let dropped = traj.vanishing_count();
    if dropped > 0 {
        eprintln!("warning: {dropped} of {n} samples dropped (WeightVanishes)");
    }
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
            }
            std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        }
        None => print!("{text}"),
    }
    Ok(0)
}
