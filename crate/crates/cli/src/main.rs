use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linemono_core::census::{run_census, CensusConfig};
use linemono_core::invariants::invariant_report_for;
use linemono_core::localsys::{delta_f, h1_upper_bound_for, LocalSystem};
use linemono_core::monodromy::{charpoly_infinity, charpoly_zero_closed, strata, zeta_at_zero};
use linemono_core::verify::verify_summary;
use linemono_core::{compute_combinatorics, parse_arrangement, CombinatorialSummary, Error};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "linemono", version, about = "Monodromy and local-system bounds for weighted line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum At {
    Zero,
    Infinity,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical invariants and combinatorics of an arrangement
    Info { file: PathBuf },
    /// Characteristic polynomial of the monodromy at zero or at infinity
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum)]
        at: At,
        /// Also print dense integer coefficients, lowest degree first
        #[arg(long)]
        expand: bool,
    },
    /// Stratified zeta function of the monodromy about the zero fiber
    Zeta { file: PathBuf },
    /// Upper bound on twisted H^1 for a rank-one local system
    Bound {
        file: PathBuf,
        /// Order N of the local system
        #[arg(long)]
        order: u64,
        /// Residues e_j with lambda_j = exp(2 pi i e_j / N); defaults to all 1
        #[arg(long, value_delimiter = ',')]
        residues: Option<Vec<u64>>,
    },
    /// Run the identity battery on an arrangement
    Verify {
        file: PathBuf,
        /// Perturb the computed combinatorics before checking (test hook)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Randomized comparison of the two bounds, written as JSON lines
    Census {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_lines: usize,
        #[arg(long)]
        max_order: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input { code: &'static str, message: String },
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Input { code: e.code(), message: e.to_string() }
        }
    }
}

type Outcome = Result<Value, (Value, Failure)>;

fn emit(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn load(path: &Path) -> Result<CombinatorialSummary, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input { code: "IoError", message: format!("{}: {e}", path.display()) })?;
    Ok(compute_combinatorics(&parse_arrangement(&text)?))
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn info(path: &Path) -> Result<Outcome, Failure> {
    let cs = load(path)?;
    let report = invariant_report_for(&cs)?;
    let mut out = to_json(&report);
    out["combinatorics"] = to_json(&cs);
    if report.is_consistent() {
        Ok(Ok(out))
    } else {
        Ok(Err((out, Failure::Invariant("invariant report cross-identities failed".into()))))
    }
}

fn charpoly(path: &Path, at: At, expand: bool) -> Result<Outcome, Failure> {
    let cs = load(path)?;
    let (label, poly) = match at {
        At::Zero => ("zero", charpoly_zero_closed(&cs)),
        At::Infinity => ("infinity", charpoly_infinity(&cs)),
    };
    let mut out = json!({
        "at": label,
        "factored": to_json(&poly),
        "cyclotomic": to_json(&poly.to_cyclotomic()),
        "degree": poly.degree(),
    });
    if expand {
        let coefficients: Vec<Value> = poly
            .expand()?
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(small) => json!(small),
                Err(_) => json!(c.to_string()),
            })
            .collect();
        out["expanded"] = Value::Array(coefficients);
    }
    Ok(Ok(out))
}

fn zeta(path: &Path) -> Result<Outcome, Failure> {
    let cs = load(path)?;
    let z = zeta_at_zero(&cs);
    Ok(Ok(json!({
        "numerator": to_json(&z.numerator()),
        "denominator": to_json(&z.denominator()),
        "strata": to_json(&strata(&cs)),
    })))
}

fn bound(path: &Path, order: u64, residues: Option<Vec<u64>>) -> Result<Outcome, Failure> {
    let cs = load(path)?;
    let ls = match residues {
        Some(r) => LocalSystem::new(order, r)?,
        None => LocalSystem::equimonodromical(order, cs.d)?,
    };
    let report = h1_upper_bound_for(&cs, &ls)?;
    let mut out = to_json(&report);
    let gcd = delta_f(&cs.reweighted(ls.residues()))?;
    out["deltaF"] = to_json(&gcd);
    if report.is_consistent() {
        Ok(Ok(out))
    } else {
        Ok(Err((out, Failure::Invariant("vertex sums disagree with polynomial multiplicities".into()))))
    }
}

fn verify(path: &Path, inject_fault: bool) -> Result<Outcome, Failure> {
    let mut cs = load(path)?;
    if inject_fault {
        cs.line_vertex_counts[0] += 1;
    }
    let report = verify_summary(&cs);
    let out = to_json(&report);
    if report.all_passed {
        Ok(Ok(out))
    } else {
        Ok(Err((out, Failure::Invariant("identity battery failed".into()))))
    }
}

fn census(config: CensusConfig, out_path: &Path) -> Result<Outcome, Failure> {
    let output = run_census(&config)?;
    fs::write(out_path, output.to_jsonl())
        .map_err(|e| Failure::Input { code: "IoError", message: format!("{}: {e}", out_path.display()) })?;
    Ok(Ok(json!({ "summary": to_json(&output.summary), "out": out_path.display().to_string() })))
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
    let result = match cli.command {
        Command::Info { file } => info(&file),
        Command::Charpoly { file, at, expand } => charpoly(&file, at, expand),
        Command::Zeta { file } => zeta(&file),
        Command::Bound { file, order, residues } => bound(&file, order, residues),
        Command::Verify { file, inject_fault } => verify(&file, inject_fault),
        Command::Census { seed, count, max_lines, max_order, out } => {
            census(CensusConfig { seed, count, max_lines, max_order }, &out)
        }
    };
    let (mut out, failure) = match result {
        Ok(Ok(value)) => {
            emit(&value);
            return ExitCode::SUCCESS;
        }
        Ok(Err((value, failure))) => (value, failure),
        Err(failure) => (json!({}), failure),
    };
    let (code, message, status) = match failure {
        Failure::Input { code, message } => (code, message, 1),
        Failure::Invariant(message) => ("InvariantViolation", message, 2),
    };
    out["error"] = json!({ "code": code, "message": message });
    emit(&out);
    ExitCode::from(status)
}
