//! Command-line front end.
//!
//! Exit codes: 0 success (or certificate accepted), 1 certificate rejected,
//! 2 usage error, 3 input error, 4 time budget exhausted. Results go to
//! stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumeration::{count_qn_with, solve_with, SolverConfig};
use crate::error::{Error, Result};
use crate::experiments::{
    qn_sweep, regime_report, write_csv, Family, GeneratorSpec, SweepConfig, SweepOutcome,
};
use crate::io::{read_instance_file, write_instance_file};
use crate::model::{evaluate, parse_id_list, reduce_nvep_to_arp, verify_certificate, Permutation};
use crate::oracle::{brute_force_solve_with, OracleConfig, DEFAULT_SIZE_CAP};
use crate::rational::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;

#[derive(Parser)]
#[command(
    name = "refuel",
    version,
    about = "Exact solver for airplane refueling / vehicle exploration drop-out orders"
)]
struct Cli {
    /// Worker threads for search, oracle, and benchmark rows.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Time budget in seconds (per benchmark row for `bench`).
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,

    /// Size cap for the brute-force oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    cap: usize,

    /// Mirror the report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance exactly by enumerating swap-stable orders.
    Solve {
        file: PathBuf,
        /// Prune branches that cannot beat the incumbent (the stable-count
        /// field then reflects visited leaves only).
        #[arg(long)]
        prune: bool,
    },
    /// Exhaustively evaluate all n! orders (ground truth, capped).
    Brute {
        file: PathBuf,
        /// Re-evaluate every order from scratch instead of incrementally.
        #[arg(long)]
        full_reeval: bool,
    },
    /// Count swap-stable orders only.
    Count { file: PathBuf },
    /// Verify a certificate: does the given order reach the threshold?
    Check {
        file: PathBuf,
        /// Drop-out order as comma-separated 1-based ids, e.g. 2,1,3.
        #[arg(long)]
        perm: String,
        /// Acceptance threshold (p/q, integer, or decimal).
        #[arg(long)]
        threshold: Rational,
    },
    /// Map a vehicle-exploration instance to the airplane form.
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Generate an instance.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        /// Cap on the last plane's solo range (canonical family).
        #[arg(long = "M", default_value = "10")]
        range_cap: Rational,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sweep stable-solution counts across fleet sizes and write CSV.
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        #[arg(long = "M", default_value = "10")]
        range_cap: Rational,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Canonical,
    Random,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Canonical => Family::Canonical,
            FamilyArg::Random => Family::Random,
        }
    }
}

/// Parses and runs a full command line (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Error::Timeout) => {
            eprintln!("error: time budget exhausted");
            EXIT_TIMEOUT
        }
        Err(e @ Error::InvalidParam(_)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn deadline_from(timeout_secs: Option<u64>) -> Option<Instant> {
    timeout_secs.map(|s| Instant::now() + Duration::from_secs(s))
}

fn value_with_decimal(r: &Rational) -> String {
    format!("{r} (~{})", r.decimal_string())
}

fn perm_json(p: &Permutation) -> serde_json::Value {
    json!(p.as_slice())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Solve { ref file, prune } => {
            let inst = read_instance_file(file)?;
            let cfg = SolverConfig {
                workers: cli.workers,
                prune,
                deadline: deadline_from(cli.timeout_secs),
            };
            let report = solve_with(&inst, &cfg)?;
            if report.ties_detected {
                eprintln!("note: exact ties encountered during enumeration");
            }
            if report.optimal_perms.len() > 1 {
                eprintln!(
                    "note: {} optimal permutations; showing the first",
                    report.optimal_perms.len()
                );
            }
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "optimum": report.optimum.fraction_string(),
                        "optimum_decimal": report.optimum.decimal_string(),
                        "perms": report.optimal_perms.iter().map(perm_json).collect::<Vec<_>>(),
                        "qn": report.q_n,
                        "nodes": report.nodes_expanded,
                        "ties": report.ties_detected,
                        "elapsed_micros": report.elapsed.as_micros() as u64,
                    })
                );
            } else {
                println!("optimum {}", value_with_decimal(&report.optimum));
                println!("perm {}", report.optimal_perms[0]);
                println!("Qn {}", report.q_n);
                println!("nodes {}", report.nodes_expanded);
            }
            Ok(EXIT_OK)
        }
        Cmd::Brute {
            ref file,
            full_reeval,
        } => {
            let inst = read_instance_file(file)?;
            let cfg = OracleConfig {
                cap: cli.cap,
                workers: cli.workers,
                full_reevaluation: full_reeval,
            };
            let report = brute_force_solve_with(&inst, &cfg)?;
            if report.argmax_perms.len() > 1 {
                eprintln!(
                    "note: {} optimal permutations; showing the first",
                    report.argmax_perms.len()
                );
            }
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "optimum": report.optimum.fraction_string(),
                        "optimum_decimal": report.optimum.decimal_string(),
                        "argmax": report.argmax_perms.iter().map(perm_json).collect::<Vec<_>>(),
                        "evaluated": report.permutations_evaluated,
                        "stable": report.stable_count,
                    })
                );
            } else {
                println!("optimum {}", value_with_decimal(&report.optimum));
                println!("argmax {}", report.argmax_perms[0]);
                println!("evaluated {}", report.permutations_evaluated);
                println!("stable {}", report.stable_count);
            }
            Ok(EXIT_OK)
        }
        Cmd::Count { ref file } => {
            let inst = read_instance_file(file)?;
            let cfg = SolverConfig {
                workers: cli.workers,
                prune: false,
                deadline: deadline_from(cli.timeout_secs),
            };
            let report = count_qn_with(&inst, &cfg)?;
            if report.ties_detected {
                eprintln!("note: exact ties encountered during enumeration");
            }
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "qn": report.q_n,
                        "nodes": report.nodes_expanded,
                        "ties": report.ties_detected,
                    })
                );
            } else {
                println!("Qn {}", report.q_n);
                println!("nodes {}", report.nodes_expanded);
            }
            Ok(EXIT_OK)
        }
        Cmd::Check {
            ref file,
            ref perm,
            ref threshold,
        } => {
            let inst = read_instance_file(file)?;
            let order = match parse_id_list(perm) {
                Ok(order) => order,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let accepted = verify_certificate(&inst, &order, threshold);
            let total = Permutation::new(order.clone())
                .ok()
                .filter(|p| p.n() == inst.n())
                .map(|p| evaluate(&inst, &p).expect("validated permutation").total().clone());
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "accepted": accepted,
                        "total": total.as_ref().map(|t| t.fraction_string()),
                        "total_decimal": total.as_ref().map(|t| t.decimal_string()),
                        "threshold": threshold.fraction_string(),
                    })
                );
            } else {
                if let Some(total) = &total {
                    println!("total {}", value_with_decimal(total));
                } else {
                    eprintln!("note: not a valid drop-out order for this instance");
                }
                println!("threshold {}", value_with_decimal(threshold));
                println!("{}", if accepted { "accept" } else { "reject" });
            }
            Ok(if accepted { EXIT_OK } else { EXIT_REJECT })
        }
        Cmd::Reduce {
            ref file,
            ref output,
        } => {
            let inst = read_instance_file(file)?;
            let reduced = reduce_nvep_to_arp(&inst)?;
            write_instance_file(&reduced, output)?;
            if cli.json {
                println!("{}", json!({ "wrote": output.display().to_string() }));
            } else {
                println!("wrote {}", output.display());
            }
            Ok(EXIT_OK)
        }
        Cmd::Gen {
            family,
            n,
            ref range_cap,
            seed,
            ref output,
        } => {
            let spec = GeneratorSpec {
                family: family.into(),
                n,
                seed,
                range_cap: range_cap.clone(),
                value_range: (50, 10),
            };
            let inst = spec.generate()?;
            write_instance_file(&inst, output)?;
            if cli.json {
                println!("{}", json!({ "wrote": output.display().to_string(), "n": n }));
            } else {
                println!("wrote {}", output.display());
            }
            Ok(EXIT_OK)
        }
        Cmd::Bench {
            family,
            n_from,
            n_to,
            reps,
            ref range_cap,
            seed,
            ref output,
        } => {
            let template = GeneratorSpec {
                family: family.into(),
                n: n_from,
                seed,
                range_cap: range_cap.clone(),
                value_range: (50, 10),
            };
            let sweep_cfg = SweepConfig {
                workers: cli.workers,
                row_timeout: Some(Duration::from_secs(cli.timeout_secs.unwrap_or(60))),
            };
            let outcomes = qn_sweep(&template, n_from, n_to, reps, &sweep_cfg)?;
            let rows: Vec<_> = outcomes.iter().filter_map(|o| o.row().cloned()).collect();
            let timed_out: Vec<_> = outcomes
                .iter()
                .filter(|o| o.row().is_none())
                .cloned()
                .collect();
            for o in &timed_out {
                if let SweepOutcome::TimedOut { family, n, rep, seed } = o {
                    eprintln!("note: row {family} n={n} rep={rep} seed={seed} timed out");
                }
            }
            let file = std::fs::File::create(output)?;
            write_csv(std::io::BufWriter::new(file), &rows)?;
            let summary = match regime_report(&rows) {
                Ok(s) => Some(s),
                Err(Error::InsufficientData) => {
                    eprintln!("note: too few sizes for growth statistics");
                    None
                }
                Err(e) => return Err(e),
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "csv": output.display().to_string(),
                        "rows": rows,
                        "timed_out": timed_out.iter().map(|o| match o {
                            SweepOutcome::TimedOut { family, n, rep, seed } => json!({
                                "family": family, "n": n, "rep": rep, "seed": seed,
                            }),
                            SweepOutcome::Completed(_) => unreachable!(),
                        }).collect::<Vec<_>>(),
                        "summary": summary,
                    })
                );
            } else {
                println!(
                    "wrote {} ({} rows, {} timed out)",
                    output.display(),
                    rows.len(),
                    timed_out.len()
                );
                if let Some(summary) = summary {
                    for row in &summary.rows {
                        let ratio = row
                            .ratio_from_prev
                            .as_ref()
                            .map(|r| r.to_string())
                            .unwrap_or_else(|| "-".into());
                        let slope = row
                            .log2_slope_from_prev
                            .map(|s| format!("{s:.3}"))
                            .unwrap_or_else(|| "-".into());
                        println!(
                            "n={} maxQ={} ratio={} log2slope={} margin={}",
                            row.n, row.max_qn, ratio, slope, row.bound_margin
                        );
                    }
                    match summary.inflection_candidate {
                        Some(n) => println!("inflection candidate: n={n} (observational)"),
                        None => println!("inflection candidate: none"),
                    }
                    if summary.bound_violations.is_empty() {
                        println!("bound violations: none");
                    } else {
                        for v in &summary.bound_violations {
                            println!(
                                "bound violation: n={} seed={} qn={} bound={}",
                                v.n, v.seed, v.q_n, v.bound
                            );
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}
