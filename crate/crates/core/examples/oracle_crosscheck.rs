//! Cross-check the sieve solver against the exhaustive oracle.
//!
//! Run with `cargo run --example oracle_crosscheck -- [n] [count]`.

use std::time::Instant;

use refuel::{brute_force_solve, count_qn, solve, GeneratorSpec};

fn main() -> refuel::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map(|a| a.parse().unwrap()).unwrap_or(7);
    let count: u64 = args.next().map(|a| a.parse().unwrap()).unwrap_or(20);

    let started = Instant::now();
    for seed in 0..count {
        let inst = GeneratorSpec::random(n, 1000 + seed).generate()?;
        let fast = solve(&inst)?;
        let truth = brute_force_solve(&inst)?;
        assert_eq!(
            fast.optimum, truth.optimum,
            "solver and oracle disagree on seed {seed}"
        );
        assert_eq!(fast.q_n, truth.stable_count);
        assert_eq!(count_qn(&inst)?, truth.stable_count);
        println!(
            "seed {seed}: optimum {} = oracle optimum, Q_n {} = filter count \
             ({} stable of {} orders)",
            fast.optimum, fast.q_n, truth.stable_count, truth.permutations_evaluated
        );
    }
    println!(
        "{count} random fleets of {n} planes agreed in {:?}",
        started.elapsed()
    );
    Ok(())
}
