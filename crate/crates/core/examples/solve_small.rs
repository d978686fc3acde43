//! Solve a three-plane fleet exactly and show the phase decomposition.
//!
//! Run with `cargo run --example solve_small`.

use refuel::{evaluate, solve, Instance, ProblemKind};

fn main() -> refuel::Result<()> {
    // Three planes: (fuel tanks, tanks burned per km).
    let inst = Instance::from_ints(ProblemKind::Arp, &[(6, 2), (1, 1), (2, 1)], "demo fleet")?;

    let report = solve(&inst)?;
    println!("fleet of {} ({})", inst.n(), inst.label());
    println!(
        "optimum {} (~{}) at drop-out order {}",
        report.optimum,
        report.optimum.decimal_string(),
        report.optimal_perms[0]
    );
    println!(
        "swap-stable orders: {}   nodes expanded: {}",
        report.q_n, report.nodes_expanded
    );

    // Phase-by-phase decomposition of the optimal order: each dropping
    // plane contributes its fuel divided by the fleet's joint burn rate.
    let best = &report.optimal_perms[0];
    let ev = evaluate(&inst, best)?;
    println!("\nphase decomposition of {best}:");
    for (pos, (leg, joint_rate)) in ev.legs().iter().zip(ev.suffix_sums()).enumerate() {
        println!(
            "  phase {}: plane {} drops, leg {} km at joint rate {}",
            pos + 1,
            best.id_at(pos),
            leg,
            joint_rate
        );
    }
    println!("  total {} km", ev.total());
    Ok(())
}
