//! Worker pools change wall time, never results: the search partitions at
//! the top level and merges in a fixed order, so reports are bit-identical
//! for any worker count.
//!
//! Run with `cargo run --release --example parallel_workers -- [n]`.

use std::time::Instant;

use refuel::{count_qn_with, solve_with, GeneratorSpec, SolverConfig};

fn main() -> refuel::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().unwrap())
        .unwrap_or(12);
    let inst = GeneratorSpec::random(n, 7).generate()?;

    let mut reference = None;
    for workers in [1usize, 2, 4, 8] {
        let cfg = SolverConfig::with_workers(workers);
        let started = Instant::now();
        let report = solve_with(&inst, &cfg)?;
        let count = count_qn_with(&inst, &cfg)?;
        println!(
            "workers {workers}: optimum {} perm {} Qn {} nodes {} in {:?}",
            report.optimum,
            report.optimal_perms[0],
            report.q_n,
            report.nodes_expanded,
            started.elapsed()
        );
        assert_eq!(count.q_n, report.q_n);
        let key = (
            report.optimum.clone(),
            report.optimal_perms.clone(),
            report.q_n,
            report.nodes_expanded,
            report.ties_detected,
        );
        match &reference {
            None => reference = Some(key),
            Some(expected) => assert_eq!(expected, &key, "reports must not depend on workers"),
        }
    }
    println!("all worker counts produced identical reports");
    Ok(())
}
