//! Sweep stable-solution counts across fleet sizes, write the CSV, and
//! print growth statistics.
//!
//! Run with `cargo run --example qn_sweep -- [n_to]`.

use refuel::experiments::{write_csv, SweepConfig};
use refuel::{qn_sweep, regime_report, GeneratorSpec, Rational};

fn main() -> refuel::Result<()> {
    let n_to: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().unwrap())
        .unwrap_or(14);

    let template = GeneratorSpec::canonical(2, "10".parse::<Rational>()?);
    let outcomes = qn_sweep(&template, 2, n_to, 1, &SweepConfig::default())?;
    let rows: Vec<_> = outcomes.iter().filter_map(|o| o.row().cloned()).collect();

    let path = std::env::temp_dir().join("qn_sweep.csv");
    write_csv(std::fs::File::create(&path)?, &rows)?;
    println!("wrote {} ({} rows)", path.display(), rows.len());

    let summary = regime_report(&rows)?;
    println!("\n{:>3} {:>8} {:>8} {:>10} {:>12}", "n", "maxQ", "ratio", "log2slope", "margin");
    for row in &summary.rows {
        println!(
            "{:>3} {:>8} {:>8} {:>10} {:>12}",
            row.n,
            row.max_qn,
            row.ratio_from_prev
                .as_ref()
                .map(|r| r.to_string())
                .unwrap_or_else(|| "-".into()),
            row.log2_slope_from_prev
                .map(|s| format!("{s:.3}"))
                .unwrap_or_else(|| "-".into()),
            row.bound_margin
        );
    }
    match summary.inflection_candidate {
        Some(n) => println!("\ngrowth ratio stays below 2 from n={n} on (observational)"),
        None => println!("\nno size from which growth stays below 2 in this range"),
    }
    if summary.bound_violations.is_empty() {
        println!("no tie-free row exceeded the 2^(n-2) bound");
    } else {
        for v in &summary.bound_violations {
            println!("BOUND VIOLATION: n={} seed={} qn={} > {}", v.n, v.seed, v.q_n, v.bound);
        }
    }
    Ok(())
}
