use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use unruh_min::dynamics::{classify, Side};
use unruh_min::states::{named_state, Couplings};
use unruh_min_cli::point::{point_report, PointRequest};
use unruh_min_cli::settings::{parse_config, Settings};
use unruh_min_cli::sweep::{self, SweepSpec, Target};
use unruh_min_cli::{exit, format::sig12, parse_triple, presets, verify, CliError};

/// Measurement-induced nonlocality, geometric discord and CHSH violation of
/// two-qubit X-states seen by a uniformly accelerated observer.
#[derive(Parser)]
#[command(name = "unruh-min", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every measure at one (c, w, T) as JSON.
    Point(PointArgs),
    /// Evaluate a grid or figure preset and write CSV.
    Sweep(SweepArgs),
    /// Regime and sudden-change temperature of a coupling triple.
    Tsc(TscArgs),
    /// Cross-check closed forms against independent oracles on seeded draws.
    Verify(VerifyArgs),
    /// List the figure presets.
    Presets,
}

#[derive(Args)]
struct PointArgs {
    /// Couplings `c1,c2,c3`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "state", required_unless_present = "state")]
    c: Option<String>,
    /// Named state: bell_phi_plus, bell_phi_minus, bell_psi_plus,
    /// bell_psi_minus or werner(<alpha>).
    #[arg(long)]
    state: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    w: f64,
    /// Unruh temperature; `inf` is accepted.
    #[arg(long = "T", default_value = "1")]
    t: String,
    /// AI, AII or SUM.
    #[arg(long, default_value = "AI")]
    side: String,
    /// Accept couplings that are not a state (closed forms only).
    #[arg(long)]
    magnitudes: bool,
    /// Also run the variational MIN oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    preset: Option<String>,
    /// `key = value` settings file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// `v`, `v1,v2,...` or `start:stop:count`.
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c3: Option<String>,
    /// Werner parameters; replaces c1..c3 by (a, -a, a).
    #[arg(long, allow_hyphen_values = true)]
    werner: Option<String>,
    #[arg(long)]
    w: Option<String>,
    #[arg(long = "T")]
    t: Option<String>,
    /// log or linear spacing for `start:stop:count` temperature ranges.
    #[arg(long)]
    t_scale: Option<String>,
    /// Comma list of AI, AII, SUM.
    #[arg(long)]
    sides: Option<String>,
    /// Comma list of N, D, Bmax.
    #[arg(long)]
    measures: Option<String>,
    #[arg(long)]
    oracle: bool,
    /// Worker threads (output does not depend on this).
    #[arg(long)]
    workers: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TscArgs {
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value_t = 1.0)]
    w: f64,
    /// AI or AII.
    #[arg(long, default_value = "AI")]
    side: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = verify::DEFAULT_DRAWS)]
    draws: usize,
}

fn run_point(a: PointArgs) -> Result<(), CliError> {
    let c = match (&a.c, &a.state) {
        (Some(c), _) => parse_triple(c)?,
        (None, Some(name)) => named_state(name)?.as_array(),
        (None, None) => unreachable!("clap requires one of --c, --state"),
    };
    let req = PointRequest {
        c,
        w: a.w,
        temperature: unruh_min_cli::parse_number(&a.t)?,
        target: a.side.parse()?,
        magnitudes: a.magnitudes,
        oracle: a.oracle,
    };
    let report = point_report(&req)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("plain data serializes"));
    Ok(())
}

fn run_sweep(a: SweepArgs) -> Result<(), CliError> {
    let config = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Some(parse_config(&text)?)
        }
        None => None,
    };
    let mut flags = BTreeMap::new();
    for (key, value) in [
        ("c1", a.c1),
        ("c2", a.c2),
        ("c3", a.c3),
        ("werner", a.werner),
        ("w", a.w),
        ("T", a.t),
        ("t_scale", a.t_scale),
        ("sides", a.sides),
        ("measures", a.measures),
        ("oracle", a.oracle.then(|| "true".to_string())),
    ] {
        if let Some(v) = value {
            flags.insert(key.to_string(), v);
        }
    }
    let settings = Settings::resolve(a.preset.as_deref(), config.as_ref(), &flags)?;
    let spec = SweepSpec::from_settings(&settings)?;
    let workers = match a.workers {
        Some(0) => return Err(CliError::Usage("workers must be at least 1".into())),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start workers: {e}")))?;
    let rows = pool.install(|| sweep::run(&spec))?;
    let csv = sweep::render_csv(&settings, &spec, &rows);
    match &a.out {
        Some(path) => std::fs::write(path, csv).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn run_tsc(a: TscArgs) -> Result<(), CliError> {
    let [c1, c2, c3] = parse_triple(&a.c)?;
    let c = Couplings::new(c1, c2, c3)?;
    if !(a.w.is_finite() && a.w > 0.0) {
        return Err(CliError::Usage(format!("w must be positive, got {}", a.w)));
    }
    let side = match a.side.parse()? {
        Target::AI => Side::AI,
        Target::AII => Side::AII,
        Target::Sum => return Err(CliError::Usage("tsc takes --side AI or AII".into())),
    };
    let label = classify(&c, side);
    match label.t_sc(a.w) {
        Some(t) => println!("{label}\nt_sc = {}", sig12(t)),
        None => println!("{label}, no sudden change"),
    }
    Ok(())
}

fn run_verify(a: VerifyArgs) -> Result<(), CliError> {
    let report = verify::run(a.seed, a.draws)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("plain data serializes"));
    if report.passed {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::SUCCESS } as u8);
        }
    };
    let result = match cli.command {
        Command::Point(a) => run_point(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Tsc(a) => run_tsc(a),
        Command::Verify(a) => run_verify(a),
        Command::Presets => {
            for p in presets::PRESETS {
                println!("{:<12} {}", p.name, p.description);
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
