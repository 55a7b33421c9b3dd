//! `krel`: classify instances, compute adjoints and Weyl families, run and replay property suites.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 invariant violation, 3 suite failure,
//! 4 hypothesis-starved suite.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use krel::harness::{self, suite_ids, Counterexample, GeneratorConfig, PropertyReport, Status, REQUIRED_SUITES};
use krel::json::{parse_instance, parse_scalars, Instance};
use krel::spectrum::finite_eigenvalues;
use krel::{Error, Mode};

#[derive(Parser)]
#[command(name = "krel", version, about = "Linear relations in Krein spaces and Green's boundary relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a relation or boundary-relation document.
    Classify { file: PathBuf },
    /// Print the adjoint of a relation (or of Γ) as a relation document.
    Adjoint { file: PathBuf },
    /// Evaluate the Weyl family of a boundary relation at the given points.
    Weyl {
        file: PathBuf,
        /// Points such as "0+1*i" or "1/2-3/4*i".
        #[arg(long = "z", required = true, num_args = 1.., allow_hyphen_values = true)]
        z: Vec<String>,
    },
    /// Run a property suite (or `all` required suites), one JSON report per line.
    Suite {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long = "max-dim", default_value_t = 6)]
        max_dim: usize,
        #[arg(long = "float-eps")]
        float_eps: Option<f64>,
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long = "entry-bound", default_value_t = 8)]
        entry_bound: u64,
    },
    /// Re-run a stored counterexample (or a report carrying one).
    Replay { file: PathBuf },
}

/// A failure with its exit code and a JSON body for stdout.
struct Failure {
    code: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownSuite(_) => 1,
            _ => 2,
        };
        let mut body = json!({ "error": variant_name(&e), "message": e.to_string() });
        if let Error::GreenIdentityViolation { i, j, defect } = &e {
            body["pair"] = json!([i, j]);
            body["defect"] = json!(defect);
        }
        Failure { code, body }
    }
}

fn variant_name(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, body: json!({ "error": "Usage", "message": message.into() }) }
}

fn mode_from_env() -> Result<Mode, Failure> {
    match std::env::var("KREL_MODE").as_deref() {
        Err(_) | Ok("exact") => Ok(Mode::Exact),
        Ok("float") => Ok(Mode::float()),
        Ok(other) => Err(usage(format!("KREL_MODE must be exact or float, got {other:?}"))),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    Ok(parse_instance(&read(path)?)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn classify(path: &Path, mode: &Mode) -> Result<Value, Failure> {
    match load(path)? {
        Instance::Relation(r) => {
            let mut out = json!({ "kind": "relation", "classification": to_value(&r.classify()?) });
            if r.is_endo() && matches!(mode, Mode::Float(_)) {
                out["spectrum"] = to_value(&finite_eigenvalues(&r, mode)?);
            }
            Ok(out)
        }
        Instance::Gbr(g) => Ok(json!({ "kind": "gbr", "classification": to_value(&g.classify_boundary()) })),
        other => Err(usage(format!("classify expects a relation or gbr document, got {}", other.kind()))),
    }
}

fn adjoint(path: &Path) -> Result<Value, Failure> {
    let r = match load(path)? {
        Instance::Relation(r) => r,
        Instance::Gbr(g) => g.gamma().clone(),
        other => return Err(usage(format!("adjoint expects a relation or gbr document, got {}", other.kind()))),
    };
    Ok(to_value(&Instance::Relation(r.adjoint()).to_document()))
}

fn weyl(path: &Path, z: &[String]) -> Result<Value, Failure> {
    let Instance::Gbr(g) = load(path)? else {
        return Err(usage("weyl expects a gbr document"));
    };
    let points = parse_scalars(z)?;
    Ok(Value::Array(points.iter().map(|z| to_value(&g.weyl_family(z))).collect()))
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 3,
        Status::HypothesisStarved => 4,
    }
}

fn print_report(r: &PropertyReport) -> u8 {
    println!("{}", r.to_json_line());
    status_code(r.status)
}

fn suite(id: &str, cfg: GeneratorConfig) -> Result<u8, Failure> {
    let ids: Vec<&str> = if id == "all" {
        REQUIRED_SUITES.to_vec()
    } else if suite_ids().contains(&id) {
        vec![id]
    } else {
        return Err(Error::UnknownSuite(id.into()).into());
    };
    let mut code = 0;
    for id in ids {
        let r = harness::run_suite(id, &cfg)?;
        code = code.max(print_report(&r));
    }
    Ok(code)
}

fn replay(path: &Path) -> Result<u8, Failure> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| Failure::from(Error::Parse(e.to_string())))?;
    let v = v.get("firstCounterexample").cloned().unwrap_or(v);
    let c: Counterexample = serde_json::from_value(v).map_err(|e| Failure::from(Error::Parse(e.to_string())))?;
    Ok(print_report(&harness::replay(&c)?))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mode = mode_from_env()?;
    let emit = |v: Value| {
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        0
    };
    match cli.command {
        Command::Classify { file } => Ok(emit(classify(&file, &mode)?)),
        Command::Adjoint { file } => Ok(emit(adjoint(&file)?)),
        Command::Weyl { file, z } => Ok(emit(weyl(&file, &z)?)),
        Command::Suite { suite: id, seed, trials, max_dim, float_eps, kappa, entry_bound } => {
            let cfg = GeneratorConfig { seed, max_dim, kappa, entry_bound, trials, float_eps };
            suite(&id, cfg)
        }
        Command::Replay { file } => replay(&file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            println!("{}", f.body);
            eprintln!("krel: {}", f.body["message"].as_str().unwrap_or("error"));
            ExitCode::from(f.code)
        }
    }
}
