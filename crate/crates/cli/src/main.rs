//! Command-line front end for the verifier.
//!
//! Exit codes: 0 pass, 1 failure or survivor, 2 undecidable or incomplete,
//! 3 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use dioph_verify::cfrac::verify_case;
use dioph_verify::driver::{
    run_chains, verify_all, verify_all_resume, ChainStatus, VerifyOptions, JOBS_ENV,
};
use dioph_verify::elimination::{enumerate_cases, in_s};
use dioph_verify::exactreal::{DEFAULT_PRECISION_CAP, DEFAULT_START_PRECISION};
use dioph_verify::oracle::{search_solutions, uvw_decompose, SearchMode, SearchRange};
use dioph_verify::{CaseParams, Precision, RunReport, VerifyError};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "dioph-verify", version, about = "Certified verification of the finite case analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every chain, auxiliary check, search and case; emit the JSON report.
    VerifyAll {
        #[arg(long, value_name = "BITS", default_value_t = DEFAULT_PRECISION_CAP)]
        precision_cap: u32,
        #[arg(long, value_name = "BITS", default_value_t = DEFAULT_START_PRECISION)]
        precision_start: u32,
        /// Worker threads; the VERIFIER_JOBS environment variable takes precedence.
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Reuse certificates from an earlier report with the same parameters.
        #[arg(long, value_name = "PATH")]
        resume: Option<PathBuf>,
    },
    /// Certify a single case (k, a, c, x).
    VerifyCase {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        x: u64,
        #[arg(long, value_name = "BITS", default_value_t = DEFAULT_PRECISION_CAP)]
        precision_cap: u32,
    },
    /// Evaluate the four elimination chains.
    Chains {
        #[arg(long, value_name = "BITS", default_value_t = DEFAULT_PRECISION_CAP)]
        precision_cap: u32,
    },
    /// List the cases of S in verification order.
    Enumerate {
        #[arg(long)]
        count_only: bool,
    },
    /// Brute-force search for solutions with a^2 x^k != b^2 y^k.
    Search {
        #[arg(long)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        #[arg(long)]
        max_abc: u64,
        #[arg(long)]
        max_xyz: u64,
        /// Allow k < 7 and report without asserting.
        #[arg(long)]
        explore: bool,
    },
    /// Write M = u v^2 and N = u w^2 with u minimal.
    Decompose { m: BigUint, n: BigUint },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    ExitCode::from(run(cli.command))
}

fn error_code(e: &VerifyError) -> u8 {
    match e {
        VerifyError::Undecidable { .. } => EXIT_UNDECIDED,
        VerifyError::Precondition(_) | VerifyError::Domain(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn fail(e: &VerifyError) -> u8 {
    eprintln!("error: {e}");
    error_code(e)
}

/// Writes one line to stdout, ignoring a closed pipe.
fn emit(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn print_json<T: serde::Serialize>(value: &T) {
    emit(&serde_json::to_string_pretty(value).expect("serializable"));
}

fn resolve_jobs(flag: Option<usize>) -> Result<usize, String> {
    if let Ok(v) = std::env::var(JOBS_ENV) {
        return match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("{JOBS_ENV} must be a positive integer, got {v:?}")),
        };
    }
    match flag {
        Some(0) => Err("--jobs must be positive".into()),
        Some(n) => Ok(n),
        None => Ok(VerifyOptions::default().jobs),
    }
}

fn run(command: Command) -> u8 {
    match command {
        Command::VerifyAll {
            precision_cap,
            precision_start,
            jobs,
            out,
            resume,
        } => {
            let jobs = match resolve_jobs(jobs) {
                Ok(j) => j,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return EXIT_USAGE;
                }
            };
            let opts = VerifyOptions {
                precision_start,
                precision_cap,
                jobs,
            };
            let report = match resume {
                Some(path) => {
                    let prev = std::fs::read_to_string(&path)
                        .map_err(|e| e.to_string())
                        .and_then(|s| RunReport::from_json(&s).map_err(|e| e.to_string()));
                    match prev {
                        Ok(prev) => verify_all_resume(&opts, &prev),
                        Err(msg) => {
                            eprintln!("error: cannot resume from {}: {msg}", path.display());
                            return EXIT_USAGE;
                        }
                    }
                }
                None => verify_all(&opts),
            };
            let report = match report {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            let json = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_FAIL;
                    }
                }
                None => emit(&json),
            }
            let t = &report.totals;
            eprintln!(
                "verdict {:?}: chains {}/{} contradicted, cases {}/{} eliminated, {} survivors, {} undecided, {:.1} s",
                report.verdict,
                t.chains_contradicted,
                t.chains,
                t.cases_eliminated,
                t.cases,
                t.survivors,
                t.undecided,
                t.wall_time_ms / 1e3
            );
            report.verdict.exit_code() as u8
        }
        Command::VerifyCase {
            k,
            a,
            c,
            x,
            precision_cap,
        } => {
            if x < 2 || a == 0 || c == 0 {
                eprintln!("error: need a, c >= 1 and x >= 2");
                return EXIT_USAGE;
            }
            let case = CaseParams::new(k, a, c, x);
            if !in_s(k as u64, &case.d()) {
                eprintln!("error: {case} is not in S");
                return EXIT_USAGE;
            }
            match verify_case(&case, &Precision::with_cap(precision_cap)) {
                Ok(cert) => {
                    print_json(&cert);
                    if cert.eliminated {
                        EXIT_OK
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => fail(&e),
            }
        }
        Command::Chains { precision_cap } => {
            let chains = run_chains(&Precision::with_cap(precision_cap));
            print_json(&chains);
            if chains.iter().any(|c| c.status == ChainStatus::NoContradiction) {
                EXIT_FAIL
            } else if chains.iter().any(|c| c.status == ChainStatus::Undecidable) {
                EXIT_UNDECIDED
            } else {
                EXIT_OK
            }
        }
        Command::Enumerate { count_only } => {
            let cases = enumerate_cases();
            if count_only {
                emit(&cases.len().to_string());
            } else {
                for c in &cases {
                    emit(&format!("{} {} {} {}", c.k, c.a, c.c, c.x));
                }
            }
            EXIT_OK
        }
        Command::Search {
            k_min,
            k_max,
            max_abc,
            max_xyz,
            explore,
        } => {
            let mode = if explore {
                SearchMode::Exploration
            } else {
                SearchMode::Theorem
            };
            let range = SearchRange::uniform(k_min..=k_max, max_abc, 2..=max_xyz, mode);
            match search_solutions(&range, true) {
                Ok(found) => {
                    let rows: Vec<[u64; 7]> = found.iter().map(|s| s.as_array()).collect();
                    print_json(&serde_json::json!({
                        "mode": if explore { "exploration" } else { "theorem" },
                        "tuples_checked": range.tuple_count(),
                        "solutions": rows,
                    }));
                    if rows.is_empty() || explore {
                        EXIT_OK
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => fail(&e),
            }
        }
        Command::Decompose { m, n } => match uvw_decompose(&m, &n) {
            Ok(t) => {
                print_json(&serde_json::json!({
                    "u": t.u.to_string(),
                    "v": t.v.to_string(),
                    "w": t.w.to_string(),
                }));
                EXIT_OK
            }
            Err(e) => fail(&e),
        },
    }
}
