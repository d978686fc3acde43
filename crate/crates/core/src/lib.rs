//! Exact solver and enumeration laboratory for the airplane refueling
//! problem (ARP) and the equivalent n-vehicle exploration problem (NVEP).
//!
//! A fleet of `n` airplanes flies together toward one target; planes refuel
//! the others in mid-air and drop out one by one, and the goal is the
//! drop-out order that carries the last plane farthest. This crate:
//!
//! - evaluates drop-out orders exactly (arbitrary-precision rationals, no
//!   rounding anywhere in objective arithmetic),
//! - enumerates the *sequential feasible* (swap-stable) orders — the
//!   candidate set that provably contains every optimum — and solves by
//!   taking its maximum,
//! - cross-checks against a dumb exhaustive oracle over all `n!` orders,
//! - maps vehicle-exploration instances to airplane instances and verifies
//!   optimality certificates,
//! - generates instance families and sweeps stable-solution counts across
//!   fleet sizes, with CSV output and growth statistics.
//!
//! Start with the runnable examples (`cargo run --example solve_small`,
//! `enumerate_stable`, `oracle_crosscheck`, `nvep_reduction`,
//! `canonical_family`, `qn_sweep`, `parallel_workers`), or the `refuel`
//! binary for the same operations on instance files.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod experiments;
pub mod io;
pub mod model;
pub mod oracle;
pub mod rational;
mod scaled;

pub use enumeration::{
    adjacent_swap_delta, count_qn, count_qn_with, enumerate_sequential_feasible,
    is_sequential_feasible, solve, solve_with, CountReport, SolveReport, SolverConfig, Stability,
    SwapWitness,
};
pub use error::{Error, Result};
pub use experiments::{
    gen_canonical, gen_random, qn_sweep, regime_report, validate_monotone_preconditions, Family,
    GeneratorSpec, PreconditionCheck, PreconditionViolation, RegimeSummary, SweepConfig,
    SweepOutcome, SweepRow,
};
pub use model::{
    cumulative_consumption, evaluate, nvep_distance, reduce_nvep_to_arp, verify_certificate,
    Airplane, Evaluation, Instance, Permutation, ProblemKind,
};
pub use oracle::{
    brute_force_count_stable, brute_force_solve, brute_force_solve_with, OracleConfig,
    OracleReport,
};
pub use rational::Rational;
